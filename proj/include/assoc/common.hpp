#pragma once

#include <stdexcept>
#include <string>

namespace assoc {

// Invariant checks stay active in release builds and throw on violation.
[[noreturn]] inline void fail(const std::string& what) {
    throw std::logic_error("invariant violated: " + what);
}

inline void check(bool cond, const char* what) {
    if (!cond) fail(what);
}

inline void check(bool cond, const std::string& what) {
    if (!cond) fail(what);
}

[[noreturn]] inline void bad_input(const std::string& what) {
    throw std::invalid_argument(what);
}

inline void require(bool cond, const std::string& what) {
    if (!cond) bad_input(what);
}

}  // namespace assoc
