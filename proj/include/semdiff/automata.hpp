#pragma once

// Explicit finite automata over named symbols: subset construction,
// complement, product and language difference.

#include <cstddef>
#include <limits>
#include <set>
#include <string>
#include <vector>

namespace semdiff::automata {

using Symbol = std::size_t;
inline constexpr Symbol kEpsilon = std::numeric_limits<Symbol>::max();

struct Transition {
    Symbol label;  // index into the alphabet, or kEpsilon
    std::size_t target;
};

struct Nfa {
    std::vector<std::string> alphabet;  // sorted, unique
    std::vector<std::vector<Transition>> transitions;
    std::size_t initial = 0;
    std::vector<bool> accepting;

    std::size_t size() const { return transitions.size(); }
    std::size_t add_state(bool is_accepting = false);
    void add_transition(std::size_t from, Symbol label, std::size_t to);
};

/// Complete deterministic automaton: next[state][symbol] is always defined.
struct Dfa {
    std::vector<std::string> alphabet;
    std::vector<std::vector<std::size_t>> next;
    std::size_t initial = 0;
    std::vector<bool> accepting;

    std::size_t size() const { return next.size(); }
};

std::vector<std::string> alphabet_union(const std::vector<std::string>& a, const std::vector<std::string>& b);

/// Re-expresses `nfa` over a superset alphabet.
Nfa with_alphabet(const Nfa& nfa, const std::vector<std::string>& alphabet);

std::set<std::size_t> epsilon_closure(const Nfa& nfa, std::set<std::size_t> states);

/// Subset construction over reachable epsilon-closed subsets. The empty subset,
/// when reachable, is the non-accepting sink that completes the function.
Dfa determinize(const Nfa& nfa);

Dfa complement(Dfa dfa);

/// Synchronous product of `a` (epsilon moves of `a` leave `b` in place) with
/// `b`, restricted to reachable pairs; accepting when both accept. Both
/// automata must share one alphabet.
Nfa product(const Nfa& a, const Dfa& b);

/// An acceptor for L(a) \ L(b) over the union alphabet.
Nfa difference(const Nfa& a, const Nfa& b);

bool accepts(const Nfa& nfa, const std::vector<std::string>& word);
bool accepts(const Dfa& dfa, const std::vector<std::string>& word);

}  // namespace semdiff::automata
