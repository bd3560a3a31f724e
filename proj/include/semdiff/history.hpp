#pragma once

// Loading model files and summarizing a sequence of model versions.

#include <cstddef>
#include <filesystem>
#include <string>
#include <vector>

#include <json.hpp>

#include "semdiff/ad_lang.hpp"
#include "semdiff/cd_lang.hpp"
#include "semdiff/verdict.hpp"

namespace semdiff {

enum class ModelKind { ClassDiagram, ActivityDiagram };

/// Reads a whole file; throws InputError when it cannot be opened.
std::string read_file(const std::filesystem::path& path);

/// Parse a file as the given kind. Every failure is rethrown as InputError
/// whose message names the file (and positions, for parse errors).
cd::ClassDiagram load_cd(const std::filesystem::path& path);
ad::ActivityDiagram load_ad(const std::filesystem::path& path);

struct HistoryRow {
    std::string from;
    std::string to;
    Verdict verdict;
    std::size_t forward = 0;   // witnesses of diff(from, to), capped at max_witnesses
    std::size_t backward = 0;  // witnesses of diff(to, from), capped at max_witnesses

    friend bool operator==(const HistoryRow&, const HistoryRow&) = default;
};

struct HistoryReport {
    ModelKind kind = ModelKind::ClassDiagram;
    std::vector<HistoryRow> rows;  // one per consecutive pair of versions
};

struct HistoryParams {
    std::size_t bound = 3;  // class diagrams only
    std::size_t max_witnesses = 10;
};

/// Throws InputError for fewer than two files, unreadable or unparsable files,
/// and files of the other model kind.
HistoryReport history_report(const std::vector<std::string>& files, ModelKind kind, const HistoryParams& params = {});

std::string history_text(const HistoryReport& report);
nlohmann::ordered_json history_json(const HistoryReport& report);

}  // namespace semdiff
