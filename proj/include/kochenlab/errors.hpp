#ifndef KOCHENLAB_ERRORS_HPP
#define KOCHENLAB_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace kochenlab {

// Exit-code taxonomy: 2 = bad input, 3 = resource/budget, 4 = a lemma-check
// failed (never expected on valid builds).

struct input_error : std::runtime_error {
    explicit input_error(const std::string& msg) : std::runtime_error(msg) {}
};

// Precondition on mathematical domain not met (e.g. not a p-integer).
struct domain_error : std::runtime_error {
    explicit domain_error(const std::string& msg) : std::runtime_error(msg) {}
};

struct unsupported_error : std::runtime_error {
    explicit unsupported_error(const std::string& msg) : std::runtime_error(msg) {}
};

struct resource_error : std::runtime_error {
    explicit resource_error(const std::string& msg) : std::runtime_error(msg) {}
};

struct not_found_error : std::runtime_error {
    explicit not_found_error(const std::string& msg) : std::runtime_error(msg) {}
};

// A verified mathematical statement failed to hold. Reaching this indicates
// a bug in this library, not in the caller.
struct invariant_violation : std::logic_error {
    explicit invariant_violation(const std::string& msg) : std::logic_error(msg) {}
};

inline int exit_code_for(const std::exception& e) {
    if (dynamic_cast<const resource_error*>(&e)) return 3;
    if (dynamic_cast<const invariant_violation*>(&e)) return 4;
    return 2;
}

} // namespace kochenlab

#endif
