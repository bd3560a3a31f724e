#pragma once

// Token-game semantics of activity diagrams. For a fixed input valuation the
// reachable configurations (marked edges + variable values) form a finite
// automaton over action names whose language is the diagram's trace set.

#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "semdiff/ad_lang.hpp"
#include "semdiff/automata.hpp"
#include "semdiff/diagnostics.hpp"

namespace semdiff::ad {

/// Variable name -> value.
using Valuation = std::map<std::string, std::string>;

using Word = std::vector<std::string>;

struct Trace {
    Valuation inputs;  // initial input values
    Word actions;

    friend bool operator==(const Trace&, const Trace&) = default;
    friend auto operator<=>(const Trace&, const Trace&) = default;
};

/// ```
/// trace witness {
///   input isInternal = true;
///   1: register;
///   2: assignToProject;
/// }
/// ```
/// Step numbers must run 1, 2, ... in order.
Trace parse_trace(std::string_view text);
std::string print_trace(const Trace& t, std::string_view name = "witness");

/// A 1-safe marking plus the current value index of every variable (in
/// declaration order). All terminated runs share one configuration.
struct Configuration {
    std::vector<bool> marking;
    std::vector<std::size_t> values;
    bool terminated = false;

    friend auto operator<=>(const Configuration&, const Configuration&) = default;
    friend bool operator==(const Configuration&, const Configuration&) = default;
};

/// A firing would put a second token on an already marked edge.
class SafetyViolation : public SemanticError {
public:
    using SemanticError::SemanticError;
};

struct ConfigNfa {
    automata::Nfa nfa;  // alphabet: the diagram's action names
    std::vector<Configuration> configurations;  // per NFA state
};

/// Every valuation over the union of both input signatures: variables sorted
/// by name (first varies slowest), values in declaration order.
/// Throws SemanticError when a shared input has different domains.
std::vector<Valuation> input_valuations(const std::vector<VarDecl>& inputs_a, const std::vector<VarDecl>& inputs_b);
std::vector<Valuation> input_valuations(const ActivityDiagram& a, const ActivityDiagram& b);

/// Explores all configurations reachable under `inputs` (extra entries are
/// ignored). Throws SafetyViolation, or SemanticError if an input is missing.
ConfigNfa build_config_nfa(const ActivityDiagram& ad, const Valuation& inputs);

/// Whether the trace's action sequence is a complete run under its inputs.
bool accepts(const ActivityDiagram& ad, const Trace& t);

/// Accepted words of length <= max_len by direct simulation of the token game
/// (no automaton construction), ordered by length then lexicographically.
std::vector<Word> enumerate_traces(const ActivityDiagram& ad, const Valuation& inputs, std::size_t max_len);

std::string describe(const ActivityDiagram& ad, const Configuration& c);

}  // namespace semdiff::ad
