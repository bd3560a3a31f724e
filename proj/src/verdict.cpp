#include "semdiff/verdict.hpp"

namespace semdiff {

Verdict verdict_from(bool left_minus_right_empty, bool right_minus_left_empty, std::optional<std::size_t> bound) {
    Verdict v;
    v.bound = bound;
    if (left_minus_right_empty && right_minus_left_empty) {
        v.value = VerdictValue::Equivalent;
    } else if (left_minus_right_empty) {
        v.value = VerdictValue::LeftRefinesRight;
    } else if (right_minus_left_empty) {
        v.value = VerdictValue::RightRefinesLeft;
    } else {
        v.value = VerdictValue::Incomparable;
    }
    return v;
}

Verdict mirrored(Verdict v) {
    if (v.value == VerdictValue::LeftRefinesRight) {
        v.value = VerdictValue::RightRefinesLeft;
    } else if (v.value == VerdictValue::RightRefinesLeft) {
        v.value = VerdictValue::LeftRefinesRight;
    }
    return v;
}

std::string_view to_string(VerdictValue v) {
    switch (v) {
        case VerdictValue::Equivalent: return "EQUIVALENT";
        case VerdictValue::LeftRefinesRight: return "LEFT_REFINES_RIGHT";
        case VerdictValue::RightRefinesLeft: return "RIGHT_REFINES_LEFT";
        case VerdictValue::Incomparable: return "INCOMPARABLE";
    }
    return "?";
}

std::string_view symbol(VerdictValue v) {
    switch (v) {
        case VerdictValue::Equivalent: return "==";
        case VerdictValue::LeftRefinesRight: return ">";
        case VerdictValue::RightRefinesLeft: return "<";
        case VerdictValue::Incomparable: return "<>";
    }
    return "?";
}

std::string describe(const Verdict& v) {
    std::string out(to_string(v.value));
    if (v.bound) out += " (bounded k=" + std::to_string(*v.bound) + ")";
    return out;
}

}  // namespace semdiff
