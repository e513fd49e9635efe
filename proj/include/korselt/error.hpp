#pragma once

#include <stdexcept>
#include <string>

namespace korselt {

// Rejected input: a domain or precondition violation.
class domain_error : public std::runtime_error {
public:
    explicit domain_error(const std::string& what) : std::runtime_error(what) {}
};

// A parameter choice that yields no usable value (degenerate or unverified).
// Callers scanning a parameter range catch this and move to the next value.
class skip_parameter : public domain_error {
public:
    explicit skip_parameter(const std::string& what) : domain_error(what) {}
};

// Work exceeded a configured budget; the answer is unknown, never wrong.
class budget_error : public std::runtime_error {
public:
    explicit budget_error(const std::string& what) : std::runtime_error(what) {}
};

} // namespace korselt
