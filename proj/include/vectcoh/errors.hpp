#pragma once

#include <stdexcept>
#include <string>

namespace vectcoh {

// Division by zero, inversion of zero, or mixing of distinct surds.
class arithmetic_error : public std::domain_error {
public:
    explicit arithmetic_error(const std::string& what) : std::domain_error(what) {}
};

// Specialization of a rational function at a pole.  `factor` is the monic
// minimal polynomial (over Q) of the offending evaluation point, rendered
// in the usual sparse form.
class pole_error : public std::domain_error {
public:
    pole_error(const std::string& what, std::string factor)
        : std::domain_error(what), factor_(std::move(factor)) {}
    const std::string& factor() const { return factor_; }

private:
    std::string factor_;
};

// Root extraction requested beyond the supported degree.
class unsupported_degree_error : public std::invalid_argument {
public:
    explicit unsupported_degree_error(const std::string& what)
        : std::invalid_argument(what) {}
};

// Malformed textual input (scalars, spaces, parameter files, CLI values).
class parse_error : public std::invalid_argument {
public:
    explicit parse_error(const std::string& what) : std::invalid_argument(what) {}
};

// Structural misuse of the cochain algebra (wrong arity, mismatched
// weights/shifts, absent slots).
class structure_error : public std::logic_error {
public:
    explicit structure_error(const std::string& what) : std::logic_error(what) {}
};

}  // namespace vectcoh
