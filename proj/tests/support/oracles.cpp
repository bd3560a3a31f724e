#include "support/oracles.hpp"

#include <algorithm>
#include <map>

namespace semdiff::testing {

std::vector<cd::ObjectModel> brute_force_cddiff(const cd::ClassDiagram& cd1, const cd::ClassDiagram& cd2,
                                                std::size_t k) {
    std::vector<cd::ObjectModel> out;
    cd::enumerate_object_models(cd::joint_universe(cd1, cd2), k, [&](const cd::ObjectModel& om) {
        if (cd::is_instance(om, cd1).ok && !cd::is_instance(om, cd2).ok) out.push_back(om);
        return true;
    });
    return out;
}

std::vector<ad::Trace> brute_force_addiff(const ad::ActivityDiagram& ad1, const ad::ActivityDiagram& ad2,
                                          std::size_t max_len) {
    std::vector<ad::Trace> out;
    for (const auto& v : ad::input_valuations(ad1, ad2)) {
        const auto first = ad::enumerate_traces(ad1, v, max_len);
        const auto second = ad::enumerate_traces(ad2, v, max_len);
        const std::set<ad::Word> excluded(second.begin(), second.end());
        std::set<ad::Word> diff;
        for (const auto& w : first)
            if (!excluded.contains(w)) diff.insert(w);

        std::vector<ad::Word> minimal;
        for (const auto& w : diff) {
            bool has_prefix = false;
            for (std::size_t len = 0; len < w.size() && !has_prefix; ++len)
                has_prefix = diff.contains(ad::Word(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(len)));
            if (!has_prefix) minimal.push_back(w);
        }
        std::stable_sort(minimal.begin(), minimal.end(),
                         [](const auto& a, const auto& b) { return a.size() < b.size(); });
        for (auto& w : minimal) out.push_back({v, std::move(w)});
    }
    return out;
}

bool nfa_member(const automata::Nfa& nfa, const std::vector<std::string>& word) {
    std::set<std::pair<std::size_t, std::size_t>> seen{{nfa.initial, 0}};
    std::vector<std::pair<std::size_t, std::size_t>> stack{{nfa.initial, 0}};
    while (!stack.empty()) {
        const auto [state, pos] = stack.back();
        stack.pop_back();
        if (pos == word.size() && nfa.accepting[state]) return true;
        for (const auto& t : nfa.transitions[state]) {
            std::pair<std::size_t, std::size_t> next;
            if (t.label == automata::kEpsilon) {
                next = {t.target, pos};
            } else if (pos < word.size() && nfa.alphabet[t.label] == word[pos]) {
                next = {t.target, pos + 1};
            } else {
                continue;
            }
            if (seen.insert(next).second) stack.push_back(next);
        }
    }
    return false;
}

std::vector<std::vector<std::string>> all_words(const std::vector<std::string>& alphabet, std::size_t max_len) {
    std::vector<std::vector<std::string>> out{{}};
    std::size_t level_start = 0;
    for (std::size_t len = 1; len <= max_len; ++len) {
        const std::size_t level_end = out.size();
        for (std::size_t i = level_start; i < level_end; ++i) {
            for (const auto& a : alphabet) {
                auto w = out[i];
                w.push_back(a);
                out.push_back(std::move(w));
            }
        }
        level_start = level_end;
    }
    return out;
}

}  // namespace semdiff::testing
