#include "semdiff/history.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "lexer.hpp"
#include "semdiff/ad_diff.hpp"
#include "semdiff/cd_diff.hpp"

namespace semdiff {

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError(path.string() + ": cannot open file");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    if (in.bad()) throw InputError(path.string() + ": read error");
    return buffer.str();
}

namespace {

// First keyword of the text, used to tell the model kinds apart.
std::string leading_keyword(std::string_view text) {
    try {
        const auto tokens = detail::tokenize(text);
        return tokens.front().text;
    } catch (const ParseError&) {
        return {};
    }
}

std::string prefixed(const std::string& file, const ParseError& e) {
    std::string out;
    for (const auto& d : e.diagnostics()) {
        if (!out.empty()) out += '\n';
        out += file + ":" + d.format();
    }
    return out;
}

template <typename Parse>
auto load(const std::filesystem::path& path, std::string_view expected_keyword, std::string_view other_keyword,
          std::string_view kind_name, Parse parse) {
    const std::string text = read_file(path);
    if (leading_keyword(text) == other_keyword)
        throw InputError(path.string() + ": expected " + std::string(kind_name) + " ('" +
                         std::string(expected_keyword) + "'), found '" + std::string(other_keyword) + "'");
    try {
        return parse(text);
    } catch (const ParseError& e) {
        throw InputError(prefixed(path.string(), e));
    }
}

}  // namespace

cd::ClassDiagram load_cd(const std::filesystem::path& path) {
    return load(path, "classdiagram", "activity", "a class diagram", [](const std::string& t) { return cd::parse_cd(t); });
}

ad::ActivityDiagram load_ad(const std::filesystem::path& path) {
    return load(path, "activity", "classdiagram", "an activity diagram",
                [](const std::string& t) { return ad::parse_ad(t); });
}

HistoryReport history_report(const std::vector<std::string>& files, ModelKind kind, const HistoryParams& params) {
    if (files.size() < 2) throw InputError("history needs at least two files");
    HistoryReport report;
    report.kind = kind;

    if (kind == ModelKind::ClassDiagram) {
        std::vector<cd::ClassDiagram> versions;
        for (const auto& f : files) versions.push_back(load_cd(f));
        for (std::size_t i = 0; i + 1 < versions.size(); ++i) {
            const auto fwd = cd::cddiff(versions[i], versions[i + 1], params.bound, params.max_witnesses);
            const auto bwd = cd::cddiff(versions[i + 1], versions[i], params.bound, params.max_witnesses);
            report.rows.push_back({files[i], files[i + 1],
                                   verdict_from(fwd.witnesses.empty(), bwd.witnesses.empty(), params.bound),
                                   fwd.witnesses.size(), bwd.witnesses.size()});
        }
    } else {
        std::vector<ad::ActivityDiagram> versions;
        for (const auto& f : files) versions.push_back(load_ad(f));
        for (std::size_t i = 0; i + 1 < versions.size(); ++i) {
            const auto fwd = ad::addiff(versions[i], versions[i + 1], params.max_witnesses);
            const auto bwd = ad::addiff(versions[i + 1], versions[i], params.max_witnesses);
            report.rows.push_back({files[i], files[i + 1], verdict_from(fwd.witnesses.empty(), bwd.witnesses.empty()),
                                   fwd.witnesses.size(), bwd.witnesses.size()});
        }
    }
    return report;
}

std::string history_text(const HistoryReport& report) {
    std::vector<std::vector<std::string>> table{{"from", "to", "verdict", "forward", "backward"}};
    for (const auto& r : report.rows) {
        table.push_back({r.from, r.to,
                         std::string(to_string(r.verdict.value)) + " (" + std::string(symbol(r.verdict.value)) + ")",
                         std::to_string(r.forward), std::to_string(r.backward)});
    }
    std::vector<std::size_t> width(table.front().size(), 0);
    for (const auto& row : table)
        for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());

    std::string out;
    for (const auto& row : table) {
        std::string line;
        for (std::size_t c = 0; c < row.size(); ++c) {
            line += row[c];
            if (c + 1 < row.size()) line += std::string(width[c] - row[c].size() + 2, ' ');
        }
        out += line + "\n";
    }
    if (!report.rows.empty() && report.rows.front().verdict.bound)
        out += "(class diagram verdicts bounded by k=" + std::to_string(*report.rows.front().verdict.bound) + ")\n";
    return out;
}

nlohmann::ordered_json history_json(const HistoryReport& report) {
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (const auto& r : report.rows) {
        rows.push_back({{"from", r.from},
                        {"to", r.to},
                        {"verdict", to_string(r.verdict.value)},
                        {"symbol", symbol(r.verdict.value)},
                        {"forward", r.forward},
                        {"backward", r.backward}});
    }
    nlohmann::ordered_json bound = nullptr;
    if (!report.rows.empty() && report.rows.front().verdict.bound) bound = *report.rows.front().verdict.bound;
    return {{"kind", report.kind == ModelKind::ClassDiagram ? "cd" : "ad"},
            {"bound", std::move(bound)},
            {"rows", std::move(rows)}};
}

}  // namespace semdiff
