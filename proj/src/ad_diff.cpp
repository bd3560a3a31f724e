#include "semdiff/ad_diff.hpp"

#include <stdexcept>

namespace semdiff::ad {

automata::Nfa difference_automaton(const ConfigNfa& a, const ConfigNfa& b) {
    return automata::difference(a.nfa, b.nfa);
}

WordSearch prefix_minimal_words(const automata::Dfa& dfa, std::size_t limit, std::optional<std::size_t> max_len) {
    // live: accepting, or non-accepting with a live successor. Words are never
    // extended past an accepting state, so only live states are worth visiting
    // and every visited word extends to at least one result.
    std::vector<bool> live = dfa.accepting;
    for (bool grew = true; grew;) {
        grew = false;
        for (std::size_t s = 0; s < dfa.size(); ++s) {
            if (live[s]) continue;
            for (auto t : dfa.next[s]) {
                if (live[t]) {
                    live[s] = grew = true;
                    break;
                }
            }
        }
    }

    WordSearch result;
    if (!live[dfa.initial]) return result;

    struct Entry {
        std::size_t state;
        Word word;
    };
    std::vector<Entry> frontier{{dfa.initial, {}}};
    for (std::size_t len = 0; !frontier.empty(); ++len) {
        std::vector<Entry> next;
        for (std::size_t i = 0; i < frontier.size(); ++i) {
            auto& entry = frontier[i];
            if (dfa.accepting[entry.state]) {
                if (result.words.size() == limit) {
                    result.more = true;
                    return result;
                }
                result.words.push_back(std::move(entry.word));
                continue;
            }
            if (max_len && len == *max_len) {
                result.longer = true;
                continue;
            }
            for (automata::Symbol a = 0; a < dfa.alphabet.size(); ++a) {
                const std::size_t to = dfa.next[entry.state][a];
                if (!live[to]) continue;
                Word w = entry.word;
                w.push_back(dfa.alphabet[a]);
                next.push_back({to, std::move(w)});
            }
        }
        frontier = std::move(next);
    }
    return result;
}

AdDiffResult addiff(const ActivityDiagram& ad1, const ActivityDiagram& ad2, std::size_t max_witnesses,
                    std::optional<std::size_t> max_len) {
    if (max_witnesses == 0) throw std::invalid_argument("max_witnesses must be at least 1");
    AdDiffResult result;
    result.max_witnesses = max_witnesses;
    result.max_len = max_len;

    for (const auto& v : input_valuations(ad1, ad2)) {
        const auto diff = automata::determinize(difference_automaton(build_config_nfa(ad1, v), build_config_nfa(ad2, v)));
        const std::size_t room = max_witnesses - result.witnesses.size();
        auto found = prefix_minimal_words(diff, room, max_len);
        for (auto& w : found.words) result.witnesses.push_back({v, std::move(w)});
        if (found.longer) result.exhausted = false;
        if (found.more) {
            result.exhausted = false;
            return result;
        }
    }
    return result;
}

Verdict compare_ad(const ActivityDiagram& ad1, const ActivityDiagram& ad2) {
    const bool forward_empty = addiff(ad1, ad2, 1).witnesses.empty();
    const bool backward_empty = addiff(ad2, ad1, 1).witnesses.empty();
    return verdict_from(forward_empty, backward_empty);
}

}  // namespace semdiff::ad
