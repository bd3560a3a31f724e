#pragma once

// Textual activity diagrams:
//
//   activity Hire {
//     input isInternal : bool;
//     local approved : bool = false;
//     action register;
//     decision kind;
//     start -> register;
//     register -> kind;
//     kind -[isInternal]-> welcome;
//     ...
//   }
//
// `start` names the initial node and `end` the shared final node; more final
// nodes may be declared with `final NAME;`.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "semdiff/diagnostics.hpp"

namespace semdiff::ad {

inline constexpr std::string_view kStartNode = "start";
inline constexpr std::string_view kEndNode = "end";

enum class VarKind { Input, Local };

struct VarDecl {
    std::string name;
    VarKind kind = VarKind::Input;
    bool is_bool = true;
    /// Domain values in declaration order; `false`, `true` for bool.
    std::vector<std::string> domain;
    /// Explicit initial value (locals only). Locals without one start at domain.front().
    std::optional<std::string> initial;
    SourcePos pos;

    bool contains(std::string_view value) const;
    const std::string& initial_value() const { return initial ? *initial : domain.front(); }

    friend bool operator==(const VarDecl&, const VarDecl&) = default;
};

/// Guard expression tree.
struct Guard {
    enum class Op { True, False, Var, Eq, Ne, Not, And, Or };

    Op op = Op::True;
    std::string var;    // Var, Eq, Ne
    std::string value;  // Eq, Ne
    std::vector<Guard> operands;  // Not: 1, And/Or: 2

    static Guard literal(bool b) { return {b ? Op::True : Op::False, {}, {}, {}}; }
    static Guard variable(std::string v) { return {Op::Var, std::move(v), {}, {}}; }
    static Guard eq(std::string v, std::string val) { return {Op::Eq, std::move(v), std::move(val), {}}; }
    static Guard ne(std::string v, std::string val) { return {Op::Ne, std::move(v), std::move(val), {}}; }
    static Guard negation(Guard g) { return {Op::Not, {}, {}, {std::move(g)}}; }
    static Guard conjunction(Guard a, Guard b) { return {Op::And, {}, {}, {std::move(a), std::move(b)}}; }
    static Guard disjunction(Guard a, Guard b) { return {Op::Or, {}, {}, {std::move(a), std::move(b)}}; }

    friend bool operator==(const Guard&, const Guard&) = default;
};

std::string print_guard(const Guard& g);

enum class NodeKind { Initial, Final, Action, Decision, Merge, Fork, Join };

std::string_view to_string(NodeKind kind);

/// `target := value` or `target := other_variable`.
struct Assignment {
    std::string target;
    std::string source;
    bool source_is_variable = false;

    friend bool operator==(const Assignment&, const Assignment&) = default;
};

struct Node {
    std::string name;
    NodeKind kind = NodeKind::Action;
    std::vector<Assignment> assignments;  // actions only
    SourcePos pos;

    friend bool operator==(const Node&, const Node&) = default;
};

struct Edge {
    std::string source;
    std::string target;
    std::optional<Guard> guard;
    SourcePos pos;

    friend bool operator==(const Edge&, const Edge&) = default;
};

/// Nodes are kept as: the initial node, declared nodes in declaration order,
/// then the implicit `end` node when referenced.
struct ActivityDiagram {
    std::string name;
    std::vector<VarDecl> variables;
    std::vector<Node> nodes;
    std::vector<Edge> edges;

    const Node* find_node(std::string_view name) const;
    const VarDecl* find_variable(std::string_view name) const;
    std::vector<const VarDecl*> inputs() const;
    /// Names of all action nodes, sorted.
    std::vector<std::string> action_names() const;

    friend bool operator==(const ActivityDiagram&, const ActivityDiagram&) = default;
};

/// Parses and validates; throws ParseError with positioned diagnostics.
ActivityDiagram parse_ad(std::string_view text);

/// Structural well-formedness (degrees, reachability, guard typing, ...).
std::vector<Diagnostic> validate(const ActivityDiagram& ad);

std::string print_ad(const ActivityDiagram& ad);

}  // namespace semdiff::ad
