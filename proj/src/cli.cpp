#include "semdiff/cli.hpp"

#include <CLI11.hpp>
#include <ostream>

#include "semdiff/ad_diff.hpp"
#include "semdiff/cd_diff.hpp"
#include "semdiff/history.hpp"
#include "semdiff/render.hpp"

namespace semdiff::cli {

namespace {

struct Options {
    std::string file_a;
    std::string file_b;
    std::size_t bound = 3;
    std::size_t max_witnesses = 10;
    std::optional<std::size_t> max_len;
    std::string format = "text";
    std::string history_kind;
    std::vector<std::string> files;
};

std::string count_noun(std::size_t n) { return std::to_string(n) + (n == 1 ? " witness" : " witnesses"); }

int cd_diff(const Options& o, std::ostream& out) {
    const auto a = load_cd(o.file_a);
    const auto b = load_cd(o.file_b);
    const auto result = cd::cddiff(a, b, o.bound, o.max_witnesses);
    const auto format = *render::parse_format(o.format);

    std::string summary = result.witnesses.empty() ? "no witnesses" : count_noun(result.witnesses.size());
    summary += result.exhausted ? " (exhausted" : " (truncated at " + std::to_string(o.max_witnesses);
    summary += ", k=" + std::to_string(o.bound) + ")";

    if (format == render::Format::Json) {
        out << render::diff_json(result, render::Direction::AtoB).dump(2) << "\n";
    } else {
        for (std::size_t i = 0; i < result.witnesses.size(); ++i) {
            cd::ObjectModel om = result.witnesses[i];
            om.name = "witness" + std::to_string(i + 1);
            if (format == render::Format::Text) out << "// witness " << (i + 1) << "\n";
            out << render::render_om(om, format).payload << "\n";
        }
        out << (format == render::Format::Dot ? "// " : "") << summary << "\n";
    }
    return result.witnesses.empty() ? kExitSame : kExitDifferent;
}

int ad_diff(const Options& o, std::ostream& out) {
    const auto a = load_ad(o.file_a);
    const auto b = load_ad(o.file_b);
    const auto result = ad::addiff(a, b, o.max_witnesses, o.max_len);
    const auto format = *render::parse_format(o.format);

    std::string summary = result.witnesses.empty() ? "no witnesses" : count_noun(result.witnesses.size());
    if (result.exhausted) {
        summary += " (exhausted)";
    } else if (result.witnesses.size() == o.max_witnesses) {
        summary += " (truncated at " + std::to_string(o.max_witnesses) + ")";
    } else {
        summary += " up to length " + std::to_string(*o.max_len) + " (longer witnesses exist)";
    }

    if (format == render::Format::Json) {
        out << render::diff_json(result, render::Direction::AtoB).dump(2) << "\n";
    } else {
        for (std::size_t i = 0; i < result.witnesses.size(); ++i) {
            const std::string name = "witness" + std::to_string(i + 1);
            if (format == render::Format::Text) {
                out << "// witness " << (i + 1) << "\n" << ad::print_trace(result.witnesses[i], name) << "\n";
            } else {
                out << render::render_trace(a, result.witnesses[i], format, name).payload;
                out << render::render_trace(b, result.witnesses[i], format, name).payload << "\n";
            }
        }
        out << (format == render::Format::Dot ? "// " : "") << summary << "\n";
    }
    return result.witnesses.empty() ? kExitSame : kExitDifferent;
}

int print_verdict(const Verdict& v, std::ostream& out) {
    out << describe(v) << "\n";
    return v.value == VerdictValue::Equivalent ? kExitSame : kExitDifferent;
}

int history(const Options& o, std::ostream& out) {
    const ModelKind kind = o.history_kind == "cd" ? ModelKind::ClassDiagram : ModelKind::ActivityDiagram;
    HistoryParams params;
    params.bound = o.bound;
    const auto report = history_report(o.files, kind, params);
    if (o.format == "json") {
        out << history_json(report).dump(2) << "\n";
    } else {
        out << history_text(report);
    }
    const bool all_equivalent = std::all_of(report.rows.begin(), report.rows.end(),
                                            [](const auto& r) { return r.verdict.value == VerdictValue::Equivalent; });
    return all_equivalent ? kExitSame : kExitDifferent;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Semantic differencing of class diagrams and activity diagrams", "semdiff"};
    app.require_subcommand(1);
    Options o;

    const auto formats = CLI::IsMember({"text", "dot", "json"});

    auto* cd_cmd = app.add_subcommand("cd", "Class diagrams (.cd)")->require_subcommand(1);
    auto* cd_diff_cmd = cd_cmd->add_subcommand("diff", "Object models of A that are not object models of B");
    cd_diff_cmd->add_option("A", o.file_a, "First class diagram")->required();
    cd_diff_cmd->add_option("B", o.file_b, "Second class diagram")->required();
    cd_diff_cmd->add_option("--bound", o.bound, "Maximal number of objects per class")->capture_default_str();
    cd_diff_cmd->add_option("--max-witnesses", o.max_witnesses, "Witnesses to list")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    cd_diff_cmd->add_option("--format", o.format, "Output format")->check(formats)->capture_default_str();
    auto* cd_compare_cmd = cd_cmd->add_subcommand("compare", "Bounded semantic comparison verdict");
    cd_compare_cmd->add_option("A", o.file_a, "First class diagram")->required();
    cd_compare_cmd->add_option("B", o.file_b, "Second class diagram")->required();
    cd_compare_cmd->add_option("--bound", o.bound, "Maximal number of objects per class")->capture_default_str();

    auto* ad_cmd = app.add_subcommand("ad", "Activity diagrams (.ad)")->require_subcommand(1);
    auto* ad_diff_cmd = ad_cmd->add_subcommand("diff", "Shortest traces of A that B cannot perform");
    ad_diff_cmd->add_option("A", o.file_a, "First activity diagram")->required();
    ad_diff_cmd->add_option("B", o.file_b, "Second activity diagram")->required();
    ad_diff_cmd->add_option("--max-witnesses", o.max_witnesses, "Witnesses to list")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    ad_diff_cmd->add_option("--max-len", o.max_len, "Longest trace to consider (default: unbounded)");
    ad_diff_cmd->add_option("--format", o.format, "Output format")->check(formats)->capture_default_str();
    auto* ad_compare_cmd = ad_cmd->add_subcommand("compare", "Exact semantic comparison verdict");
    ad_compare_cmd->add_option("A", o.file_a, "First activity diagram")->required();
    ad_compare_cmd->add_option("B", o.file_b, "Second activity diagram")->required();

    auto* history_cmd = app.add_subcommand("history", "Compare consecutive versions of a model");
    history_cmd->add_option("kind", o.history_kind, "cd or ad")->required()->check(CLI::IsMember({"cd", "ad"}));
    history_cmd->add_option("files", o.files, "Model versions, oldest first")->required()->expected(2, -1);
    history_cmd->add_option("--bound", o.bound, "Maximal number of objects per class (cd)")->capture_default_str();
    history_cmd->add_option("--format", o.format, "Output format")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();

    auto* render_cmd = app.add_subcommand("render", "Render a stored witness")->require_subcommand(1);
    auto* render_om_cmd = render_cmd->add_subcommand("om", "Object model");
    render_om_cmd->add_option("FILE", o.file_a, "Object model file")->required();
    render_om_cmd->add_option("--format", o.format, "Output format")->check(formats)->capture_default_str();
    auto* render_trace_cmd = render_cmd->add_subcommand("trace", "Trace on its activity diagram");
    render_trace_cmd->add_option("AD", o.file_a, "Activity diagram file")->required();
    render_trace_cmd->add_option("TRACE", o.file_b, "Trace file")->required();
    render_trace_cmd->add_option("--format", o.format, "Output format")->check(formats)->capture_default_str();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            app.exit(e, out, err);
            return kExitSame;
        }
        err << "semdiff: " << e.what() << "\n";
        return kExitError;
    }

    try {
        if (*cd_diff_cmd) return cd_diff(o, out);
        if (*cd_compare_cmd) return print_verdict(cd::compare_cd(load_cd(o.file_a), load_cd(o.file_b), o.bound), out);
        if (*ad_diff_cmd) return ad_diff(o, out);
        if (*ad_compare_cmd) return print_verdict(ad::compare_ad(load_ad(o.file_a), load_ad(o.file_b)), out);
        if (*history_cmd) return history(o, out);
        if (*render_om_cmd) {
            cd::ObjectModel om;
            const std::string text = read_file(o.file_a);
            try {
                om = cd::parse_om(text);
            } catch (const ParseError& e) {
                throw InputError(o.file_a + ":" + e.diagnostics().front().format());
            }
            out << render::render_om(om, *render::parse_format(o.format)).payload;
            return kExitSame;
        }
        if (*render_trace_cmd) {
            const auto diagram = load_ad(o.file_a);
            ad::Trace t;
            const std::string text = read_file(o.file_b);
            try {
                t = ad::parse_trace(text);
            } catch (const ParseError& e) {
                throw InputError(o.file_b + ":" + e.diagnostics().front().format());
            }
            out << render::render_trace(diagram, t, *render::parse_format(o.format)).payload;
            return kExitSame;
        }
    } catch (const InputError& e) {
        err << e.what() << "\n";
        return kExitError;
    } catch (const SemanticError& e) {
        err << "semdiff: " << e.what() << "\n";
        return kExitError;
    } catch (const std::exception& e) {
        err << "semdiff: " << e.what() << "\n";
        return kExitError;
    }
    err << "semdiff: no command\n";
    return kExitError;
}

}  // namespace semdiff::cli
