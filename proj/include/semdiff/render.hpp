#pragma once

// Deterministic renderings of diff witnesses: textual (re-parseable), DOT
// graph descriptions, and JSON documents.

#include <optional>
#include <string>
#include <string_view>

#include <json.hpp>

#include "semdiff/ad_diff.hpp"
#include "semdiff/ad_lang.hpp"
#include "semdiff/cd_diff.hpp"
#include "semdiff/cd_semantics.hpp"

namespace semdiff::render {

enum class Format { Text, Dot, Json };

std::optional<Format> parse_format(std::string_view name);

struct RenderedArtifact {
    Format format = Format::Text;
    std::string payload;
};

/// Text: the object-model syntax. Dot: one `id:Class` node per object and one
/// labeled edge per link. Json: {"objects":[{"id","class"}],"links":[{"assoc","src","dst"}]}.
RenderedArtifact render_om(const cd::ObjectModel& om, Format format);

/// Text: the trace syntax (inputs, then numbered steps). Dot: the diagram with
/// the trace's action nodes highlighted and annotated with their step numbers;
/// steps naming no action of `ad` are listed separately as foreign actions.
/// Json: {"inputs":{var:value},"actions":[...]}.
RenderedArtifact render_trace(const ad::ActivityDiagram& ad, const ad::Trace& t, Format format,
                              std::string_view name = "witness");

nlohmann::ordered_json om_json(const cd::ObjectModel& om);
nlohmann::ordered_json trace_json(const ad::Trace& t);

enum class Direction { AtoB, BtoA };

/// {"direction","exhausted","bound","witnesses"}; `bound` is k for class
/// diagrams and max_len (or null) for activity diagrams.
nlohmann::ordered_json diff_json(const cd::CdDiffResult& r, Direction d);
nlohmann::ordered_json diff_json(const ad::AdDiffResult& r, Direction d);

/// Minimal structural check of DOT text: one or more `[strict] (di)graph [id] { ... }`
/// blocks with balanced braces and brackets, terminated strings, and every
/// edge endpoint declared as a node statement. Returns an error message, or
/// nullopt when the text passes.
std::optional<std::string> check_dot(std::string_view dot);

}  // namespace semdiff::render
