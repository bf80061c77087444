#pragma once

#include <stdexcept>
#include <string>

namespace shintani {

struct error : std::runtime_error {
    explicit error(const std::string& msg) : std::runtime_error(msg) {}
};

// A numeric sign/containment query stayed ambiguous at the precision cap.
struct precision_error : error {
    explicit precision_error(const std::string& msg) : error(msg) {}
};

// Input data violates a structural precondition (singular matrix, reducible
// polynomial, unit of wrong norm, ...).
struct domain_error : error {
    explicit domain_error(const std::string& msg) : error(msg) {}
};

// A chain failed the counting identity, or was used unverified.
struct verification_error : error {
    explicit verification_error(const std::string& msg) : error(msg) {}
};

struct parse_error : error {
    explicit parse_error(const std::string& msg) : error(msg) {}
};

} // namespace shintani
