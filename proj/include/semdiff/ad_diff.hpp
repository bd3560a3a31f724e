#pragma once

// Trace-based semantic differencing of activity diagrams.

#include <cstddef>
#include <limits>
#include <optional>
#include <vector>

#include "semdiff/ad_lang.hpp"
#include "semdiff/ad_semantics.hpp"
#include "semdiff/automata.hpp"
#include "semdiff/verdict.hpp"

namespace semdiff::ad {

inline constexpr std::size_t kAllWitnesses = std::numeric_limits<std::size_t>::max();

struct AdDiffResult {
    /// Valuation order, then length, then lexicographic by action names.
    std::vector<Trace> witnesses;
    /// True when the list holds every prefix-minimal witness, of any length.
    bool exhausted = true;
    std::size_t max_witnesses = kAllWitnesses;
    std::optional<std::size_t> max_len;  // nullopt: unbounded
};

/// Acceptor for L(a) \ L(b) over the union of both action alphabets.
automata::Nfa difference_automaton(const ConfigNfa& a, const ConfigNfa& b);

struct WordSearch {
    std::vector<Word> words;
    /// Stopped at `limit` with further words pending.
    bool more = false;
    /// Further words exist beyond max_len.
    bool longer = false;
};

/// Accepted words of `dfa` none of whose proper prefixes is accepted, in
/// length-then-lexicographic order, at most `limit` of them.
WordSearch prefix_minimal_words(const automata::Dfa& dfa, std::size_t limit, std::optional<std::size_t> max_len);

/// Traces of ad1 that ad2 cannot perform, keeping only the shortest ones:
/// no listed trace has a proper prefix (under the same inputs) that is itself
/// a difference trace. Throws SemanticError on mismatched shared inputs and
/// SafetyViolation from either diagram.
AdDiffResult addiff(const ActivityDiagram& ad1, const ActivityDiagram& ad2, std::size_t max_witnesses = kAllWitnesses,
                    std::optional<std::size_t> max_len = std::nullopt);

/// Exact verdict: the configuration spaces are finite, so no bound applies.
Verdict compare_ad(const ActivityDiagram& ad1, const ActivityDiagram& ad2);

}  // namespace semdiff::ad
