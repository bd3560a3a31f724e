#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>

namespace semdiff {

/// Outcome of comparing two models in both directions.
enum class VerdictValue {
    Equivalent,        // ≡  both directed diffs empty
    LeftRefinesRight,  // >  only diff(right, left) is non-empty: sem(left) ⊂ sem(right)
    RightRefinesLeft,  // <  only diff(left, right) is non-empty
    Incomparable,      // <> both non-empty
};

struct Verdict {
    VerdictValue value = VerdictValue::Equivalent;
    /// Set for class-diagram verdicts, which only hold up to the object bound.
    std::optional<std::size_t> bound;

    bool bounded() const { return bound.has_value(); }

    friend bool operator==(const Verdict&, const Verdict&) = default;
};

Verdict verdict_from(bool left_minus_right_empty, bool right_minus_left_empty,
                     std::optional<std::size_t> bound = std::nullopt);

/// The verdict of compare(right, left) given that of compare(left, right).
Verdict mirrored(Verdict v);

std::string_view to_string(VerdictValue v);
std::string_view symbol(VerdictValue v);

/// `EQUIVALENT (bounded k=3)` or `INCOMPARABLE`.
std::string describe(const Verdict& v);

}  // namespace semdiff
