#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace semdiff {

/// 1-based line/column into the parsed text. Line 0 means "not from source".
struct SourcePos {
    std::size_t line = 0;
    std::size_t column = 0;

    // Positions never participate in structural equality of syntax trees.
    friend bool operator==(const SourcePos&, const SourcePos&) { return true; }
};

struct Diagnostic {
    SourcePos pos;
    std::string message;

    std::string format() const;
};

/// Thrown by every parser. Carries one syntax error, or all validation errors
/// found in an otherwise well-formed text.
class ParseError : public std::runtime_error {
public:
    explicit ParseError(std::vector<Diagnostic> diagnostics);

    const std::vector<Diagnostic>& diagnostics() const noexcept { return diagnostics_; }

private:
    std::vector<Diagnostic> diagnostics_;
};

/// Inputs that are individually well-formed but cannot be processed together
/// (mismatched shared input domains, 1-safety violations, ...).
class SemanticError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A model file could not be read or parsed; the message names the file.
class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace semdiff
