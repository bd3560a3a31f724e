#include "semdiff/automata.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <optional>
#include <stdexcept>

namespace semdiff::automata {

std::size_t Nfa::add_state(bool is_accepting) {
    transitions.emplace_back();
    accepting.push_back(is_accepting);
    return transitions.size() - 1;
}

void Nfa::add_transition(std::size_t from, Symbol label, std::size_t to) {
    transitions.at(from).push_back({label, to});
}

std::vector<std::string> alphabet_union(const std::vector<std::string>& a, const std::vector<std::string>& b) {
    std::set<std::string> all(a.begin(), a.end());
    all.insert(b.begin(), b.end());
    return {all.begin(), all.end()};
}

namespace {

std::optional<Symbol> index_of(const std::vector<std::string>& alphabet, const std::string& s) {
    auto it = std::lower_bound(alphabet.begin(), alphabet.end(), s);
    if (it == alphabet.end() || *it != s) return std::nullopt;
    return static_cast<Symbol>(it - alphabet.begin());
}

}  // namespace

Nfa with_alphabet(const Nfa& nfa, const std::vector<std::string>& alphabet) {
    std::vector<Symbol> remap(nfa.alphabet.size());
    for (std::size_t i = 0; i < nfa.alphabet.size(); ++i) {
        auto idx = index_of(alphabet, nfa.alphabet[i]);
        if (!idx) throw std::invalid_argument("symbol '" + nfa.alphabet[i] + "' missing from target alphabet");
        remap[i] = *idx;
    }
    Nfa out = nfa;
    out.alphabet = alphabet;
    for (auto& ts : out.transitions)
        for (auto& t : ts)
            if (t.label != kEpsilon) t.label = remap[t.label];
    return out;
}

std::set<std::size_t> epsilon_closure(const Nfa& nfa, std::set<std::size_t> states) {
    std::vector<std::size_t> stack(states.begin(), states.end());
    while (!stack.empty()) {
        const std::size_t s = stack.back();
        stack.pop_back();
        for (const auto& t : nfa.transitions[s])
            if (t.label == kEpsilon && states.insert(t.target).second) stack.push_back(t.target);
    }
    return states;
}

Dfa determinize(const Nfa& nfa) {
    Dfa dfa;
    dfa.alphabet = nfa.alphabet;
    std::map<std::set<std::size_t>, std::size_t> ids;
    std::deque<std::set<std::size_t>> queue;

    const auto intern = [&](std::set<std::size_t> subset) {
        auto [it, inserted] = ids.emplace(std::move(subset), dfa.next.size());
        if (inserted) {
            dfa.next.emplace_back(dfa.alphabet.size(), 0);
            dfa.accepting.push_back(
                std::any_of(it->first.begin(), it->first.end(), [&](std::size_t s) { return nfa.accepting[s]; }));
            queue.push_back(it->first);
        }
        return it->second;
    };

    dfa.initial = intern(epsilon_closure(nfa, {nfa.initial}));
    while (!queue.empty()) {
        const std::set<std::size_t> subset = std::move(queue.front());
        queue.pop_front();
        const std::size_t from = ids.at(subset);
        std::vector<std::set<std::size_t>> moves(dfa.alphabet.size());
        for (auto s : subset)
            for (const auto& t : nfa.transitions[s])
                if (t.label != kEpsilon) moves[t.label].insert(t.target);
        for (Symbol a = 0; a < dfa.alphabet.size(); ++a) {
            const std::size_t to = intern(epsilon_closure(nfa, std::move(moves[a])));
            dfa.next[from][a] = to;
        }
    }
    return dfa;
}

Dfa complement(Dfa dfa) {
    for (std::size_t s = 0; s < dfa.accepting.size(); ++s) dfa.accepting[s] = !dfa.accepting[s];
    return dfa;
}

Nfa product(const Nfa& a, const Dfa& b) {
    if (a.alphabet != b.alphabet) throw std::invalid_argument("product requires identical alphabets");
    Nfa out;
    out.alphabet = a.alphabet;
    std::map<std::pair<std::size_t, std::size_t>, std::size_t> ids;
    std::deque<std::pair<std::size_t, std::size_t>> queue;

    const auto intern = [&](std::size_t qa, std::size_t qb) {
        auto [it, inserted] = ids.emplace(std::pair{qa, qb}, out.size());
        if (inserted) {
            out.add_state(a.accepting[qa] && b.accepting[qb]);
            queue.emplace_back(qa, qb);
        }
        return it->second;
    };

    out.initial = intern(a.initial, b.initial);
    while (!queue.empty()) {
        const auto [qa, qb] = queue.front();
        queue.pop_front();
        const std::size_t from = ids.at({qa, qb});
        for (const auto& t : a.transitions[qa]) {
            const std::size_t next_b = t.label == kEpsilon ? qb : b.next[qb][t.label];
            const std::size_t to = intern(t.target, next_b);
            out.add_transition(from, t.label, to);
        }
    }
    return out;
}

Nfa difference(const Nfa& a, const Nfa& b) {
    const auto alphabet = alphabet_union(a.alphabet, b.alphabet);
    return product(with_alphabet(a, alphabet), complement(determinize(with_alphabet(b, alphabet))));
}

bool accepts(const Nfa& nfa, const std::vector<std::string>& word) {
    std::set<std::size_t> current = epsilon_closure(nfa, {nfa.initial});
    for (const auto& w : word) {
        auto sym = index_of(nfa.alphabet, w);
        if (!sym) return false;
        std::set<std::size_t> next;
        for (auto s : current)
            for (const auto& t : nfa.transitions[s])
                if (t.label == *sym) next.insert(t.target);
        current = epsilon_closure(nfa, std::move(next));
        if (current.empty()) return false;
    }
    return std::any_of(current.begin(), current.end(), [&](std::size_t s) { return nfa.accepting[s]; });
}

bool accepts(const Dfa& dfa, const std::vector<std::string>& word) {
    std::size_t s = dfa.initial;
    for (const auto& w : word) {
        auto sym = index_of(dfa.alphabet, w);
        if (!sym) return false;
        s = dfa.next[s][*sym];
    }
    return dfa.accepting[s];
}

}  // namespace semdiff::automata
