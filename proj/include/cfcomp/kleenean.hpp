#pragma once

#include <string>

namespace cfc {

// Three-valued truth: a partial predicate answers True/False only when the
// answer is certified; Unknown means "not at this precision".
enum class Kleenean { False, True, Unknown };

inline Kleenean kleenean_not(Kleenean k) {
    switch (k) {
        case Kleenean::False: return Kleenean::True;
        case Kleenean::True: return Kleenean::False;
        default: return Kleenean::Unknown;
    }
}

inline std::string to_string(Kleenean k) {
    switch (k) {
        case Kleenean::False: return "false";
        case Kleenean::True: return "true";
        default: return "unknown";
    }
}

} // namespace cfc
