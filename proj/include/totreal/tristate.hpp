#ifndef TOTREAL_TRISTATE_HPP
#define TOTREAL_TRISTATE_HPP

#include <string>

namespace totreal {

/// Three-valued truth: the theorems are biconditional only under their
/// hypotheses, so outside them the engine answers Unknown, never guesses.
enum class TriState { Yes, No, Unknown };

constexpr TriState tri_and(TriState a, TriState b) {
    if (a == TriState::No || b == TriState::No) return TriState::No;
    if (a == TriState::Yes && b == TriState::Yes) return TriState::Yes;
    return TriState::Unknown;
}

constexpr TriState tri_not(TriState a) {
    switch (a) {
        case TriState::Yes: return TriState::No;
        case TriState::No: return TriState::Yes;
        default: return TriState::Unknown;
    }
}

constexpr TriState tri_of(bool b) { return b ? TriState::Yes : TriState::No; }

constexpr bool is_yes(TriState a) { return a == TriState::Yes; }
constexpr bool is_no(TriState a) { return a == TriState::No; }
constexpr bool is_known(TriState a) { return a != TriState::Unknown; }

inline std::string to_string(TriState a) {
    switch (a) {
        case TriState::Yes: return "yes";
        case TriState::No: return "no";
        default: return "unknown";
    }
}

}  // namespace totreal

#endif
