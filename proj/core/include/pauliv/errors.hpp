#pragma once

#include <stdexcept>
#include <string>

namespace pauliv {

// Digit source could not produce the requested digits (precision cap hit).
class oracle_unavailable : public std::runtime_error {
public:
    explicit oracle_unavailable(const std::string& what) : std::runtime_error(what) {}
};

// Factoring budget exceeded; callers may degrade to the prime-gated procedure.
class factoring_unavailable : public std::runtime_error {
public:
    explicit factoring_unavailable(const std::string& what) : std::runtime_error(what) {}
};

// Internal consistency violation (malformed exact unitary, non-peelable matrix, ...).
class integrity_error : public std::runtime_error {
public:
    explicit integrity_error(const std::string& what) : std::runtime_error(what) {}
};

// Configured resource limit (level cap, point budget) exceeded.
class resource_error : public std::runtime_error {
public:
    explicit resource_error(const std::string& what) : std::runtime_error(what) {}
};

} // namespace pauliv
