#include "semdiff/render.hpp"

#include <cctype>
#include <map>
#include <set>
#include <vector>

namespace semdiff::render {

using nlohmann::ordered_json;

std::optional<Format> parse_format(std::string_view name) {
    if (name == "text") return Format::Text;
    if (name == "dot") return Format::Dot;
    if (name == "json") return Format::Json;
    return std::nullopt;
}

namespace {

std::string quote(std::string_view s) {
    std::string out = "\"";
    for (char c : s) {
        if (c == '\n') {
            out += "\\n";
            continue;
        }
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    return out + "\"";
}

}  // namespace

ordered_json om_json(const cd::ObjectModel& om) {
    ordered_json objects = ordered_json::array();
    for (const auto& [id, cls] : om.objects) objects.push_back({{"id", id}, {"class", cls}});
    ordered_json links = ordered_json::array();
    for (const auto& l : om.links) links.push_back({{"assoc", l.association}, {"src", l.source}, {"dst", l.target}});
    return {{"objects", std::move(objects)}, {"links", std::move(links)}};
}

ordered_json trace_json(const ad::Trace& t) {
    ordered_json inputs = ordered_json::object();
    for (const auto& [var, value] : t.inputs) inputs[var] = value;
    return {{"inputs", std::move(inputs)}, {"actions", t.actions}};
}

RenderedArtifact render_om(const cd::ObjectModel& om, Format format) {
    RenderedArtifact out{format, {}};
    switch (format) {
        case Format::Text: out.payload = cd::print_om(om); break;
        case Format::Json: out.payload = om_json(om).dump(2) + "\n"; break;
        case Format::Dot: {
            std::string& p = out.payload;
            p = "digraph " + quote(om.name) + " {\n";
            p += "  node [shape=box];\n";
            for (const auto& [id, cls] : om.objects)
                p += "  " + quote(id) + " [label=" + quote(id + ":" + cls) + "];\n";
            for (const auto& l : om.links)
                p += "  " + quote(l.source) + " -> " + quote(l.target) + " [label=" + quote(l.association) + "];\n";
            p += "}\n";
            break;
        }
    }
    return out;
}

namespace {

std::string node_attributes(const ad::Node& n) {
    using ad::NodeKind;
    switch (n.kind) {
        case NodeKind::Initial: return "shape=circle, style=filled, fillcolor=black, width=0.25, label=\"\"";
        case NodeKind::Final: return "shape=doublecircle, style=filled, fillcolor=black, width=0.2, label=\"\"";
        case NodeKind::Decision:
        case NodeKind::Merge: return "shape=diamond, label=" + quote(n.name);
        case NodeKind::Fork:
        case NodeKind::Join:
            return "shape=box, style=filled, fillcolor=black, height=0.08, width=1.2, label=\"\", xlabel=" +
                   quote(n.name);
        case NodeKind::Action: return "shape=box, style=rounded, label=" + quote(n.name);
    }
    return "";
}

std::string trace_dot(const ad::ActivityDiagram& ad, const ad::Trace& t, std::string_view name) {
    std::map<std::string, std::vector<std::size_t>> steps;
    std::vector<std::pair<std::size_t, std::string>> foreign;
    for (std::size_t i = 0; i < t.actions.size(); ++i) {
        const ad::Node* n = ad.find_node(t.actions[i]);
        if (n && n->kind == ad::NodeKind::Action) {
            steps[t.actions[i]].push_back(i + 1);
        } else {
            foreign.emplace_back(i + 1, t.actions[i]);
        }
    }

    std::string p = "digraph " + quote(ad.name + "_" + std::string(name)) + " {\n";
    std::string caption = ad.name + ": " + std::string(name);
    for (const auto& [var, value] : t.inputs) caption += "\n" + var + " = " + value;
    if (!foreign.empty()) {
        caption += "\nforeign actions:";
        for (const auto& [step, action] : foreign) caption += " " + std::to_string(step) + ":" + action;
    }
    p += "  label=" + quote(caption) + ";\n";
    p += "  labelloc=t;\n";
    for (const auto& n : ad.nodes) {
        auto it = steps.find(n.name);
        if (it == steps.end()) {
            p += "  " + quote(n.name) + " [" + node_attributes(n) + "];\n";
            continue;
        }
        std::string numbers;
        for (auto s : it->second) numbers += (numbers.empty() ? "" : ",") + std::to_string(s);
        p += "  " + quote(n.name) + " [shape=box, style=\"rounded,filled,bold\", fillcolor=\"#f4b942\", label=" +
             quote(n.name + "\n#" + numbers) + "];\n";
    }
    for (const auto& e : ad.edges) {
        p += "  " + quote(e.source) + " -> " + quote(e.target);
        if (e.guard) p += " [label=" + quote("[" + ad::print_guard(*e.guard) + "]") + "]";
        p += ";\n";
    }
    p += "}\n";
    return p;
}

}  // namespace

RenderedArtifact render_trace(const ad::ActivityDiagram& ad, const ad::Trace& t, Format format,
                              std::string_view name) {
    RenderedArtifact out{format, {}};
    switch (format) {
        case Format::Text: {
            out.payload = ad::print_trace(t, name);
            std::string notes;
            for (std::size_t i = 0; i < t.actions.size(); ++i) {
                const ad::Node* n = ad.find_node(t.actions[i]);
                if (!n || n->kind != ad::NodeKind::Action)
                    notes += "// step " + std::to_string(i + 1) + ": foreign action '" + t.actions[i] + "' (not in " +
                             ad.name + ")\n";
            }
            out.payload += notes;
            break;
        }
        case Format::Json: out.payload = trace_json(t).dump(2) + "\n"; break;
        case Format::Dot: out.payload = trace_dot(ad, t, name); break;
    }
    return out;
}

namespace {

std::string_view direction_name(Direction d) { return d == Direction::AtoB ? "AtoB" : "BtoA"; }

}  // namespace

ordered_json diff_json(const cd::CdDiffResult& r, Direction d) {
    ordered_json witnesses = ordered_json::array();
    for (const auto& w : r.witnesses) witnesses.push_back(om_json(w));
    return {{"direction", direction_name(d)},
            {"exhausted", r.exhausted},
            {"bound", r.bound},
            {"witnesses", std::move(witnesses)}};
}

ordered_json diff_json(const ad::AdDiffResult& r, Direction d) {
    ordered_json witnesses = ordered_json::array();
    for (const auto& w : r.witnesses) witnesses.push_back(trace_json(w));
    ordered_json bound = nullptr;
    if (r.max_len) bound = *r.max_len;
    return {{"direction", direction_name(d)},
            {"exhausted", r.exhausted},
            {"bound", std::move(bound)},
            {"witnesses", std::move(witnesses)}};
}

namespace {

struct DotToken {
    std::string text;
    bool quoted = false;
};

std::optional<std::string> dot_tokens(std::string_view s, std::vector<DotToken>& out) {
    std::size_t i = 0;
    while (i < s.size()) {
        const char c = s[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
        } else if (s.substr(i, 2) == "//") {
            while (i < s.size() && s[i] != '\n') ++i;
        } else if (c == '"') {
            std::string text;
            ++i;
            while (i < s.size() && s[i] != '"') {
                if (s[i] == '\\' && i + 1 < s.size()) text += s[i++];
                text += s[i++];
            }
            if (i == s.size()) return "unterminated string";
            ++i;
            out.push_back({std::move(text), true});
        } else if (s.substr(i, 2) == "->" || s.substr(i, 2) == "--") {
            out.push_back({std::string(s.substr(i, 2)), false});
            i += 2;
        } else if (std::string_view("{}[];,=").find(c) != std::string_view::npos) {
            out.push_back({std::string(1, c), false});
            ++i;
        } else if (std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '.' || c == '#') {
            std::size_t j = i;
            while (j < s.size() && (std::isalnum(static_cast<unsigned char>(s[j])) || s[j] == '_' || s[j] == '.' ||
                                    s[j] == '#'))
                ++j;
            out.push_back({std::string(s.substr(i, j - i)), false});
            i = j;
        } else {
            return std::string("unexpected character '") + c + "'";
        }
    }
    return std::nullopt;
}

bool is_punct(const DotToken& t, std::string_view p) { return !t.quoted && t.text == p; }
bool is_id(const DotToken& t) {
    return t.quoted || (!t.text.empty() && std::string_view("{}[];,=->").find(t.text[0]) == std::string_view::npos);
}

}  // namespace

std::optional<std::string> check_dot(std::string_view dot) {
    std::vector<DotToken> toks;
    if (auto err = dot_tokens(dot, toks)) return err;
    std::size_t i = 0;
    const auto at = [&](std::string_view p) { return i < toks.size() && is_punct(toks[i], p); };
    const auto id_at = [&] { return i < toks.size() && is_id(toks[i]); };

    const auto attr_list = [&]() -> std::optional<std::string> {
        ++i;  // '['
        while (!at("]")) {
            if (!id_at()) return "expected attribute name";
            ++i;
            if (!at("=")) return "expected '=' in attribute list";
            ++i;
            if (!id_at()) return "expected attribute value";
            ++i;
            if (at(",") || at(";")) ++i;
        }
        ++i;  // ']'
        return std::nullopt;
    };

    if (toks.empty()) return "no graph";
    while (i < toks.size()) {
        if (!toks[i].quoted && toks[i].text == "strict") ++i;
        if (i >= toks.size() || toks[i].quoted || (toks[i].text != "digraph" && toks[i].text != "graph"))
            return "expected 'graph' or 'digraph'";
        const bool directed = toks[i].text == "digraph";
        ++i;
        if (id_at() && !at("{")) ++i;
        if (!at("{")) return "expected '{'";
        ++i;

        std::set<std::string> declared;
        std::vector<std::string> endpoints;
        while (!at("}")) {
            if (i >= toks.size()) return "unbalanced braces";
            if (!id_at()) return "unexpected '" + toks[i].text + "'";
            const DotToken& head = toks[i++];
            const bool keyword = !head.quoted && (head.text == "graph" || head.text == "node" || head.text == "edge");
            if (keyword) {
                if (!at("[")) return "expected '[' after " + head.text;
                if (auto err = attr_list()) return err;
            } else if (at("=")) {
                ++i;
                if (!id_at()) return "expected value after '='";
                ++i;
            } else if (at("->") || at("--")) {
                if (at(directed ? "--" : "->")) return "edge operator does not match graph kind";
                endpoints.push_back(head.text);
                while (at("->") || at("--")) {
                    ++i;
                    if (!id_at()) return "expected edge target";
                    endpoints.push_back(toks[i++].text);
                }
                if (at("[")) {
                    if (auto err = attr_list()) return err;
                }
            } else {
                declared.insert(head.text);
                if (at("[")) {
                    if (auto err = attr_list()) return err;
                }
            }
            if (at(";")) ++i;
        }
        ++i;  // '}'
        for (const auto& e : endpoints)
            if (!declared.contains(e)) return "edge endpoint '" + e + "' is not declared";
    }
    return std::nullopt;
}

}  // namespace semdiff::render
