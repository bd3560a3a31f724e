#include "semdiff/ad_semantics.hpp"

#include <algorithm>
#include <deque>
#include <optional>
#include <set>

#include "lexer.hpp"

namespace semdiff::ad {

using detail::TokenCursor;

Trace parse_trace(std::string_view text) {
    TokenCursor in(text);
    Trace t;
    in.expect("trace");
    in.expect_identifier("trace name");
    in.expect("{");
    while (in.is("input")) {
        in.expect("input");
        const auto& var = in.expect_identifier("input name");
        in.expect("=");
        const auto& value = in.expect_identifier("value");
        in.expect(";");
        if (!t.inputs.emplace(var.text, value.text).second)
            throw ParseError({{var.pos, "duplicate input '" + var.text + "'"}});
    }
    while (!in.accept("}")) {
        const auto& step = in.expect_number();
        if (step.text != std::to_string(t.actions.size() + 1))
            throw ParseError({{step.pos, "expected step number " + std::to_string(t.actions.size() + 1)}});
        in.expect(":");
        t.actions.push_back(in.expect_identifier("action name").text);
        in.expect(";");
    }
    if (!in.at_end()) in.fail("unexpected " + detail::describe(in.peek()) + " after trace");
    return t;
}

std::string print_trace(const Trace& t, std::string_view name) {
    std::string out = "trace " + std::string(name) + " {\n";
    for (const auto& [var, value] : t.inputs) out += "  input " + var + " = " + value + ";\n";
    for (std::size_t i = 0; i < t.actions.size(); ++i)
        out += "  " + std::to_string(i + 1) + ": " + t.actions[i] + ";\n";
    out += "}\n";
    return out;
}

std::vector<Valuation> input_valuations(const std::vector<VarDecl>& inputs_a, const std::vector<VarDecl>& inputs_b) {
    std::map<std::string, const VarDecl*> vars;
    for (const auto* list : {&inputs_a, &inputs_b}) {
        for (const auto& v : *list) {
            auto [it, inserted] = vars.emplace(v.name, &v);
            if (!inserted && (it->second->domain != v.domain || it->second->is_bool != v.is_bool))
                throw SemanticError("input '" + v.name + "' is declared with different domains");
        }
    }
    std::vector<Valuation> out{Valuation{}};
    // Extending in reverse name order makes the first name vary slowest.
    for (auto it = vars.rbegin(); it != vars.rend(); ++it) {
        std::vector<Valuation> next;
        for (const auto& value : it->second->domain) {
            for (const auto& partial : out) {
                Valuation v = partial;
                v[it->first] = value;
                next.push_back(std::move(v));
            }
        }
        out = std::move(next);
    }
    return out;
}

std::vector<Valuation> input_valuations(const ActivityDiagram& a, const ActivityDiagram& b) {
    const auto collect = [](const ActivityDiagram& ad) {
        std::vector<VarDecl> out;
        for (const auto* v : ad.inputs()) out.push_back(*v);
        return out;
    };
    return input_valuations(collect(a), collect(b));
}

namespace {

struct CompiledAssignment {
    std::size_t target;
    std::size_t source;  // value index, or variable index when from_variable
    bool from_variable;
};

struct CompiledNode {
    const Node* node;
    std::vector<std::size_t> in_edges;
    std::vector<std::size_t> out_edges;
    std::vector<CompiledAssignment> assignments;
};

struct Step {
    std::optional<std::size_t> action;  // node index of the fired action
    Configuration next;
};

/// Index-based view of a validated diagram for fast firing.
class TokenGame {
public:
    explicit TokenGame(const ActivityDiagram& ad) : ad_(ad) {
        for (std::size_t i = 0; i < ad.variables.size(); ++i) var_index_[ad.variables[i].name] = i;
        std::map<std::string, std::size_t> node_index;
        for (std::size_t i = 0; i < ad.nodes.size(); ++i) {
            node_index[ad.nodes[i].name] = i;
            nodes_.push_back({&ad.nodes[i], {}, {}, {}});
            for (const auto& a : ad.nodes[i].assignments) {
                const std::size_t target = var_index_.at(a.target);
                const auto& domain = ad.variables[target].domain;
                const std::size_t source =
                    a.source_is_variable
                        ? var_index_.at(a.source)
                        : static_cast<std::size_t>(std::find(domain.begin(), domain.end(), a.source) - domain.begin());
                nodes_.back().assignments.push_back({target, source, a.source_is_variable});
            }
        }
        for (std::size_t e = 0; e < ad.edges.size(); ++e) {
            edge_source_.push_back(node_index.at(ad.edges[e].source));
            nodes_[edge_source_.back()].out_edges.push_back(e);
            nodes_[node_index.at(ad.edges[e].target)].in_edges.push_back(e);
        }
    }

    Configuration initial(const Valuation& inputs) const {
        Configuration c;
        c.marking.assign(ad_.edges.size(), false);
        for (const auto& n : nodes_)
            if (n.node->kind == NodeKind::Initial) c.marking[n.out_edges.at(0)] = true;
        for (const auto& v : ad_.variables) {
            std::string value = v.initial_value();
            if (v.kind == VarKind::Input) {
                auto it = inputs.find(v.name);
                if (it == inputs.end()) throw SemanticError("valuation does not cover input '" + v.name + "'");
                if (!v.contains(it->second))
                    throw SemanticError("value '" + it->second + "' is not in the domain of input '" + v.name + "'");
                value = it->second;
            }
            c.values.push_back(
                static_cast<std::size_t>(std::find(v.domain.begin(), v.domain.end(), value) - v.domain.begin()));
        }
        return c;
    }

    /// Every individually enabled firing. Silent steps carry no action.
    std::vector<Step> successors(const Configuration& c) const {
        std::vector<Step> steps;
        if (c.terminated) return steps;
        for (std::size_t n = 0; n < nodes_.size(); ++n) {
            const CompiledNode& node = nodes_[n];
            switch (node.node->kind) {
                case NodeKind::Initial: break;
                case NodeKind::Final:
                    if (std::any_of(node.in_edges.begin(), node.in_edges.end(), [&](auto e) { return c.marking[e]; }))
                        steps.push_back({std::nullopt, terminated()});
                    break;
                case NodeKind::Action:
                    for (auto e : node.in_edges) {
                        if (!c.marking[e]) continue;
                        Configuration next = c;
                        next.marking[e] = false;
                        for (const auto& a : node.assignments)
                            next.values[a.target] = a.from_variable ? c.values[a.source] : a.source;
                        mark(next, node.out_edges[0], c);
                        steps.push_back({n, std::move(next)});
                    }
                    break;
                case NodeKind::Decision: {
                    const std::size_t in = node.in_edges.at(0);
                    if (!c.marking[in]) break;
                    for (auto out : node.out_edges) {
                        if (!holds(*ad_.edges[out].guard, c)) continue;
                        Configuration next = c;
                        next.marking[in] = false;
                        mark(next, out, c);
                        steps.push_back({std::nullopt, std::move(next)});
                    }
                    break;
                }
                case NodeKind::Merge:
                    for (auto e : node.in_edges) {
                        if (!c.marking[e]) continue;
                        Configuration next = c;
                        next.marking[e] = false;
                        mark(next, node.out_edges[0], c);
                        steps.push_back({std::nullopt, std::move(next)});
                    }
                    break;
                case NodeKind::Fork: {
                    const std::size_t in = node.in_edges.at(0);
                    if (!c.marking[in]) break;
                    Configuration next = c;
                    next.marking[in] = false;
                    for (auto out : node.out_edges) mark(next, out, c);
                    steps.push_back({std::nullopt, std::move(next)});
                    break;
                }
                case NodeKind::Join: {
                    if (!std::all_of(node.in_edges.begin(), node.in_edges.end(), [&](auto e) { return c.marking[e]; }))
                        break;
                    Configuration next = c;
                    for (auto e : node.in_edges) next.marking[e] = false;
                    mark(next, node.out_edges[0], c);
                    steps.push_back({std::nullopt, std::move(next)});
                    break;
                }
            }
        }
        return steps;
    }

    const std::string& node_name(std::size_t n) const { return nodes_[n].node->name; }

    std::string describe(const Configuration& c) const {
        if (c.terminated) return "{terminated}";
        std::string out = "{tokens:";
        bool first = true;
        for (std::size_t e = 0; e < c.marking.size(); ++e) {
            if (!c.marking[e]) continue;
            out += std::string(first ? " " : ", ") + ad_.edges[e].source + "->" + ad_.edges[e].target;
            first = false;
        }
        for (std::size_t v = 0; v < c.values.size() && v < ad_.variables.size(); ++v)
            out += "; " + ad_.variables[v].name + "=" + ad_.variables[v].domain[c.values[v]];
        return out + "}";
    }

private:
    static Configuration terminated() {
        Configuration done;
        done.terminated = true;
        return done;
    }

    void mark(Configuration& next, std::size_t edge, const Configuration& from) const {
        if (next.marking[edge]) {
            throw SafetyViolation("1-safety violation in activity '" + ad_.name + "': edge " + ad_.edges[edge].source +
                                  " -> " + ad_.edges[edge].target + " would receive a second token in configuration " +
                                  describe(from));
        }
        next.marking[edge] = true;
    }

    bool holds(const Guard& g, const Configuration& c) const {
        const auto value_of = [&](const std::string& var) -> const std::string& {
            const std::size_t v = var_index_.at(var);
            return ad_.variables[v].domain[c.values[v]];
        };
        switch (g.op) {
            case Guard::Op::True: return true;
            case Guard::Op::False: return false;
            case Guard::Op::Var: return value_of(g.var) == "true";
            case Guard::Op::Eq: return value_of(g.var) == g.value;
            case Guard::Op::Ne: return value_of(g.var) != g.value;
            case Guard::Op::Not: return !holds(g.operands[0], c);
            case Guard::Op::And: return holds(g.operands[0], c) && holds(g.operands[1], c);
            case Guard::Op::Or: return holds(g.operands[0], c) || holds(g.operands[1], c);
        }
        return false;
    }

    const ActivityDiagram& ad_;
    std::map<std::string, std::size_t> var_index_;
    std::vector<CompiledNode> nodes_;
    std::vector<std::size_t> edge_source_;
};

}  // namespace

ConfigNfa build_config_nfa(const ActivityDiagram& ad, const Valuation& inputs) {
    const TokenGame game(ad);
    ConfigNfa out;
    out.nfa.alphabet = ad.action_names();
    std::map<Configuration, std::size_t> ids;
    std::deque<Configuration> queue;

    const auto intern = [&](const Configuration& c) {
        auto [it, inserted] = ids.emplace(c, out.configurations.size());
        if (inserted) {
            out.nfa.add_state(c.terminated);
            out.configurations.push_back(c);
            queue.push_back(c);
        }
        return it->second;
    };

    out.nfa.initial = intern(game.initial(inputs));
    while (!queue.empty()) {
        const Configuration c = std::move(queue.front());
        queue.pop_front();
        const std::size_t from = ids.at(c);
        for (auto& step : game.successors(c)) {
            automata::Symbol label = automata::kEpsilon;
            if (step.action) {
                const auto& name = game.node_name(*step.action);
                label = static_cast<automata::Symbol>(
                    std::lower_bound(out.nfa.alphabet.begin(), out.nfa.alphabet.end(), name) -
                    out.nfa.alphabet.begin());
            }
            const std::size_t to = intern(step.next);
            out.nfa.add_transition(from, label, to);
        }
    }
    return out;
}

bool accepts(const ActivityDiagram& ad, const Trace& t) {
    return automata::accepts(build_config_nfa(ad, t.inputs).nfa, t.actions);
}

std::vector<Word> enumerate_traces(const ActivityDiagram& ad, const Valuation& inputs, std::size_t max_len) {
    const TokenGame game(ad);

    // Silent closure plus the labeled moves out of it.
    const auto close = [&](std::set<Configuration> configs) {
        std::vector<Configuration> stack(configs.begin(), configs.end());
        while (!stack.empty()) {
            const Configuration c = std::move(stack.back());
            stack.pop_back();
            for (auto& step : game.successors(c))
                if (!step.action && configs.insert(step.next).second) stack.push_back(step.next);
        }
        return configs;
    };

    std::vector<Word> accepted;
    std::map<Word, std::set<Configuration>> level;
    level[{}] = close({game.initial(inputs)});
    for (std::size_t len = 0; !level.empty(); ++len) {
        std::map<Word, std::set<Configuration>> next_level;
        for (const auto& [word, configs] : level) {
            if (std::any_of(configs.begin(), configs.end(), [](const auto& c) { return c.terminated; }))
                accepted.push_back(word);
            if (len == max_len) continue;
            for (const auto& c : configs) {
                for (auto& step : game.successors(c)) {
                    if (!step.action) continue;
                    Word w = word;
                    w.push_back(game.node_name(*step.action));
                    next_level[std::move(w)].insert(std::move(step.next));
                }
            }
        }
        for (auto& [word, configs] : next_level) configs = close(std::move(configs));
        level = std::move(next_level);
    }
    return accepted;
}

std::string describe(const ActivityDiagram& ad, const Configuration& c) { return TokenGame(ad).describe(c); }

}  // namespace semdiff::ad
