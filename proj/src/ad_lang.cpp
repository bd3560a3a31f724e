#include "semdiff/ad_lang.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "lexer.hpp"

namespace semdiff::ad {

using detail::TokenCursor;

bool VarDecl::contains(std::string_view value) const {
    return std::find(domain.begin(), domain.end(), value) != domain.end();
}

std::string_view to_string(NodeKind kind) {
    switch (kind) {
        case NodeKind::Initial: return "initial";
        case NodeKind::Final: return "final";
        case NodeKind::Action: return "action";
        case NodeKind::Decision: return "decision";
        case NodeKind::Merge: return "merge";
        case NodeKind::Fork: return "fork";
        case NodeKind::Join: return "join";
    }
    return "?";
}

const Node* ActivityDiagram::find_node(std::string_view n) const {
    for (const auto& node : nodes)
        if (node.name == n) return &node;
    return nullptr;
}

const VarDecl* ActivityDiagram::find_variable(std::string_view n) const {
    for (const auto& v : variables)
        if (v.name == n) return &v;
    return nullptr;
}

std::vector<const VarDecl*> ActivityDiagram::inputs() const {
    std::vector<const VarDecl*> out;
    for (const auto& v : variables)
        if (v.kind == VarKind::Input) out.push_back(&v);
    return out;
}

std::vector<std::string> ActivityDiagram::action_names() const {
    std::vector<std::string> out;
    for (const auto& n : nodes)
        if (n.kind == NodeKind::Action) out.push_back(n.name);
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

int precedence(Guard::Op op) {
    switch (op) {
        case Guard::Op::Or: return 1;
        case Guard::Op::And: return 2;
        case Guard::Op::Not: return 3;
        default: return 4;
    }
}

void print_guard_into(const Guard& g, std::string& out) {
    // Left operands of a binary operator may share its precedence (the parser
    // is left-associative); right operands and negated operands may not.
    const auto child = [&](const Guard& c, int min_prec) {
        const bool parens = precedence(c.op) < min_prec;
        if (parens) out += '(';
        print_guard_into(c, out);
        if (parens) out += ')';
    };
    switch (g.op) {
        case Guard::Op::True: out += "true"; break;
        case Guard::Op::False: out += "false"; break;
        case Guard::Op::Var: out += g.var; break;
        case Guard::Op::Eq: out += g.var + " == " + g.value; break;
        case Guard::Op::Ne: out += g.var + " != " + g.value; break;
        case Guard::Op::Not:
            out += '!';
            child(g.operands[0], precedence(Guard::Op::Not));
            break;
        case Guard::Op::And:
        case Guard::Op::Or: {
            const int p = precedence(g.op);
            child(g.operands[0], p);
            out += g.op == Guard::Op::And ? " && " : " || ";
            child(g.operands[1], p + 1);
            break;
        }
    }
}

class AdParser {
public:
    explicit AdParser(std::string_view text) : in_(text) {}

    ActivityDiagram parse() {
        in_.expect("activity");
        ad_.name = in_.expect_identifier("activity name").text;
        in_.expect("{");
        std::vector<Node> declared;
        std::optional<SourcePos> start_pos;
        std::optional<SourcePos> end_pos;
        while (!in_.accept("}")) {
            const bool edge_next = in_.peek(1).text == "->" || in_.peek(1).text == "-[";
            const SourcePos pos = in_.peek().pos;
            if (!edge_next && (in_.is("input") || in_.is("local"))) {
                ad_.variables.push_back(parse_var());
            } else if (!edge_next && is_node_keyword()) {
                declared.push_back(parse_node());
            } else {
                Edge e = parse_edge();
                if (e.source == kStartNode && !start_pos) start_pos = pos;
                if (e.target == kEndNode && !end_pos) end_pos = pos;
                ad_.edges.push_back(std::move(e));
            }
        }
        if (!in_.at_end()) in_.fail("unexpected " + detail::describe(in_.peek()) + " after activity");

        if (start_pos) ad_.nodes.push_back({std::string(kStartNode), NodeKind::Initial, {}, *start_pos});
        for (auto& n : declared) ad_.nodes.push_back(std::move(n));
        if (end_pos) ad_.nodes.push_back({std::string(kEndNode), NodeKind::Final, {}, *end_pos});

        // Assignment sources name a variable when one is declared, a value otherwise.
        for (auto& n : ad_.nodes)
            for (auto& a : n.assignments) a.source_is_variable = ad_.find_variable(a.source) != nullptr;

        auto errors = validate(ad_);
        if (!errors.empty()) throw ParseError(std::move(errors));
        return std::move(ad_);
    }

private:
    bool is_node_keyword() const {
        for (auto kw : {"action", "decision", "merge", "fork", "join", "final"})
            if (in_.is(kw)) return true;
        return false;
    }

    VarDecl parse_var() {
        VarDecl v;
        v.pos = in_.peek().pos;
        v.kind = in_.accept("input") ? VarKind::Input : (in_.expect("local"), VarKind::Local);
        v.name = in_.expect_identifier("variable name").text;
        in_.expect(":");
        if (in_.accept("bool")) {
            v.is_bool = true;
            v.domain = {"false", "true"};
        } else if (in_.accept("{")) {
            v.is_bool = false;
            v.domain.push_back(in_.expect_identifier("domain value").text);
            do {
                in_.expect(",");
                v.domain.push_back(in_.expect_identifier("domain value").text);
            } while (!in_.accept("}"));
        } else {
            in_.fail_expected({"bool", "{"});
        }
        if (in_.accept("=")) v.initial = in_.expect_identifier("initial value").text;
        if (!in_.accept(";")) in_.fail_expected({";", "="});
        return v;
    }

    Node parse_node() {
        Node n;
        n.pos = in_.peek().pos;
        const std::string keyword = in_.peek().text;
        in_.expect(keyword);
        static const std::map<std::string, NodeKind> kinds = {
            {"action", NodeKind::Action}, {"decision", NodeKind::Decision}, {"merge", NodeKind::Merge},
            {"fork", NodeKind::Fork},     {"join", NodeKind::Join},         {"final", NodeKind::Final}};
        n.kind = kinds.at(keyword);
        n.name = in_.expect_identifier("node name").text;
        if (n.kind == NodeKind::Action && in_.accept("/")) {
            do {
                Assignment a;
                a.target = in_.expect_identifier("variable name").text;
                in_.expect(":=");
                a.source = in_.expect_identifier("value or variable").text;
                n.assignments.push_back(std::move(a));
            } while (in_.accept(","));
        }
        if (!in_.accept(";")) {
            if (n.kind == NodeKind::Action) in_.fail_expected({";", "/", ","});
            in_.fail_expected({";"});
        }
        return n;
    }

    Edge parse_edge() {
        Edge e;
        e.pos = in_.peek().pos;
        e.source = in_.expect_identifier("node name or declaration").text;
        if (in_.accept("-[")) {
            e.guard = parse_or();
            in_.expect("]->");
        } else if (!in_.accept("->")) {
            in_.fail_expected({"->", "-["});
        }
        e.target = in_.expect_identifier("node name").text;
        in_.expect(";");
        return e;
    }

    Guard parse_or() {
        Guard g = parse_and();
        while (in_.accept("||")) g = Guard::disjunction(std::move(g), parse_and());
        return g;
    }

    Guard parse_and() {
        Guard g = parse_unary();
        while (in_.accept("&&")) g = Guard::conjunction(std::move(g), parse_unary());
        return g;
    }

    Guard parse_unary() {
        if (in_.accept("!")) return Guard::negation(parse_unary());
        if (in_.accept("(")) {
            Guard g = parse_or();
            in_.expect(")");
            return g;
        }
        if (in_.accept("true")) return Guard::literal(true);
        if (in_.accept("false")) return Guard::literal(false);
        std::string var = in_.expect_identifier("guard expression").text;
        if (in_.accept("==")) return Guard::eq(std::move(var), in_.expect_identifier("value").text);
        if (in_.accept("!=")) return Guard::ne(std::move(var), in_.expect_identifier("value").text);
        return Guard::variable(std::move(var));
    }

    TokenCursor in_;
    ActivityDiagram ad_;
};

void check_guard(const ActivityDiagram& ad, const Guard& g, SourcePos pos, std::vector<Diagnostic>& errors) {
    switch (g.op) {
        case Guard::Op::True:
        case Guard::Op::False: return;
        case Guard::Op::Var: {
            const VarDecl* v = ad.find_variable(g.var);
            if (!v) {
                errors.push_back({pos, "guard uses undeclared variable '" + g.var + "'"});
            } else if (!v->is_bool) {
                errors.push_back({pos, "guard uses non-bool variable '" + g.var + "' as a condition"});
            }
            return;
        }
        case Guard::Op::Eq:
        case Guard::Op::Ne: {
            const VarDecl* v = ad.find_variable(g.var);
            if (!v) {
                errors.push_back({pos, "guard uses undeclared variable '" + g.var + "'"});
            } else if (!v->contains(g.value)) {
                errors.push_back({pos, "value '" + g.value + "' is not in the domain of '" + g.var + "'"});
            }
            return;
        }
        default:
            for (const auto& c : g.operands) check_guard(ad, c, pos, errors);
    }
}

}  // namespace

std::string print_guard(const Guard& g) {
    std::string out;
    print_guard_into(g, out);
    return out;
}

ActivityDiagram parse_ad(std::string_view text) { return AdParser(text).parse(); }

std::vector<Diagnostic> validate(const ActivityDiagram& ad) {
    std::vector<Diagnostic> errors;

    std::set<std::string> var_names;
    for (const auto& v : ad.variables) {
        if (!var_names.insert(v.name).second) errors.push_back({v.pos, "duplicate variable '" + v.name + "'"});
        std::set<std::string> values(v.domain.begin(), v.domain.end());
        if (values.size() != v.domain.size())
            errors.push_back({v.pos, "duplicate value in domain of '" + v.name + "'"});
        if (v.domain.size() < 2) errors.push_back({v.pos, "domain of '" + v.name + "' needs at least two values"});
        if (v.initial && v.kind == VarKind::Input)
            errors.push_back({v.pos, "input variable '" + v.name + "' cannot have an initial value"});
        if (v.initial && !v.contains(*v.initial))
            errors.push_back({v.pos, "initial value '" + *v.initial + "' is not in the domain of '" + v.name + "'"});
    }

    std::map<std::string, const Node*> nodes;
    std::size_t initials = 0;
    std::size_t finals = 0;
    for (const auto& n : ad.nodes) {
        if (n.kind == NodeKind::Initial) ++initials;
        if (n.kind == NodeKind::Final) ++finals;
        const bool reserved = n.name == kStartNode || n.name == kEndNode;
        const bool implicit = (n.name == kStartNode && n.kind == NodeKind::Initial) ||
                              (n.name == kEndNode && n.kind == NodeKind::Final);
        if (reserved && !implicit) errors.push_back({n.pos, "'" + n.name + "' is a reserved node name"});
        if (!nodes.emplace(n.name, &n).second) errors.push_back({n.pos, "duplicate node '" + n.name + "'"});

        for (const auto& a : n.assignments) {
            const VarDecl* target = ad.find_variable(a.target);
            if (!target) {
                errors.push_back({n.pos, "assignment to undeclared variable '" + a.target + "'"});
                continue;
            }
            if (a.source_is_variable) {
                const VarDecl* source = ad.find_variable(a.source);
                if (!source || source->domain != target->domain)
                    errors.push_back({n.pos, "variable '" + a.source + "' has a different domain than '" +
                                                 a.target + "'"});
            } else if (!target->contains(a.source)) {
                errors.push_back({n.pos, "value '" + a.source + "' is not in the domain of '" + a.target + "'"});
            }
        }
    }
    if (initials == 0) errors.push_back({{}, "activity has no edge leaving 'start'"});
    if (initials > 1) errors.push_back({{}, "activity has more than one initial node"});
    if (finals == 0) errors.push_back({{}, "activity has no final node"});

    std::map<std::string, std::size_t> in_degree;
    std::map<std::string, std::size_t> out_degree;
    std::map<std::string, std::vector<std::string>> successors;
    std::set<std::tuple<std::string, std::string, std::string>> seen_edges;
    for (const auto& e : ad.edges) {
        bool ok = true;
        for (const auto* end : {&e.source, &e.target}) {
            if (!nodes.contains(*end)) {
                errors.push_back({e.pos, "edge references undeclared node '" + *end + "'"});
                ok = false;
            }
        }
        const std::string guard_text = e.guard ? print_guard(*e.guard) : std::string();
        if (!seen_edges.emplace(e.source, e.target, guard_text).second)
            errors.push_back({e.pos, "duplicate edge " + e.source + " -> " + e.target});
        if (!ok) continue;
        ++out_degree[e.source];
        ++in_degree[e.target];
        successors[e.source].push_back(e.target);
        const bool from_decision = nodes.at(e.source)->kind == NodeKind::Decision;
        if (e.guard) {
            if (!from_decision) errors.push_back({e.pos, "guard on edge leaving non-decision node '" + e.source + "'"});
            check_guard(ad, *e.guard, e.pos, errors);
        } else if (from_decision) {
            errors.push_back({e.pos, "edge leaving decision '" + e.source + "' has no guard"});
        }
    }

    for (const auto& n : ad.nodes) {
        const std::size_t in = in_degree[n.name];
        const std::size_t out = out_degree[n.name];
        const auto require = [&](bool ok, const std::string& what) {
            if (!ok)
                errors.push_back({n.pos, std::string(to_string(n.kind)) + " node '" + n.name + "' " + what +
                                             " (in " + std::to_string(in) + ", out " + std::to_string(out) + ")"});
        };
        switch (n.kind) {
            case NodeKind::Initial: require(in == 0 && out == 1, "needs no incoming and one outgoing edge"); break;
            case NodeKind::Final: require(in >= 1 && out == 0, "needs incoming and no outgoing edges"); break;
            case NodeKind::Action:
            case NodeKind::Merge: require(out == 1, "needs exactly one outgoing edge"); break;
            case NodeKind::Decision: require(in == 1 && out >= 2, "needs one incoming and at least two outgoing edges"); break;
            case NodeKind::Fork: require(in == 1 && out >= 2, "needs one incoming and at least two outgoing edges"); break;
            case NodeKind::Join: require(in >= 2 && out == 1, "needs at least two incoming and one outgoing edge"); break;
        }
    }

    if (initials == 1) {
        std::set<std::string> reached{std::string(kStartNode)};
        std::vector<std::string> stack{std::string(kStartNode)};
        while (!stack.empty()) {
            const std::string n = stack.back();
            stack.pop_back();
            for (const auto& s : successors[n])
                if (reached.insert(s).second) stack.push_back(s);
        }
        for (const auto& n : ad.nodes)
            if (!reached.contains(n.name)) errors.push_back({n.pos, "node '" + n.name + "' is unreachable from start"});
    }
    return errors;
}

std::string print_ad(const ActivityDiagram& ad) {
    std::string out = "activity " + ad.name + " {\n";
    for (const auto& v : ad.variables) {
        out += std::string("  ") + (v.kind == VarKind::Input ? "input " : "local ") + v.name + " : ";
        if (v.is_bool) {
            out += "bool";
        } else {
            out += "{";
            for (std::size_t i = 0; i < v.domain.size(); ++i) out += (i ? ", " : "") + v.domain[i];
            out += "}";
        }
        if (v.initial) out += " = " + *v.initial;
        out += ";\n";
    }
    for (const auto& n : ad.nodes) {
        if (n.kind == NodeKind::Initial || (n.kind == NodeKind::Final && n.name == kEndNode)) continue;
        out += "  " + std::string(to_string(n.kind)) + " " + n.name;
        for (std::size_t i = 0; i < n.assignments.size(); ++i)
            out += (i ? ", " : " / ") + n.assignments[i].target + " := " + n.assignments[i].source;
        out += ";\n";
    }
    for (const auto& e : ad.edges) {
        out += "  " + e.source;
        out += e.guard ? " -[" + print_guard(*e.guard) + "]-> " : " -> ";
        out += e.target + ";\n";
    }
    out += "}\n";
    return out;
}

}  // namespace semdiff::ad
