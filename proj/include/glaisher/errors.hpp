#ifndef GLAISHER_ERRORS_HPP
#define GLAISHER_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace glaisher {

// Argument outside the mathematical domain of an operation.
class domain_error : public std::domain_error {
public:
    explicit domain_error(const std::string& what) : std::domain_error(what) {}
};

// Evaluation requested exactly at a pole.
class pole_error : public domain_error {
public:
    explicit pole_error(const std::string& what) : domain_error(what) {}
};

// The requested tolerance cannot be met without exceeding the working-precision
// ceiling; required_bits carries the estimated precision that would be needed.
class precision_error : public std::runtime_error {
public:
    precision_error(const std::string& what, long required_bits_)
        : std::runtime_error(what + " (required working precision: " +
                             std::to_string(required_bits_) + " bits)"),
          required_bits(required_bits_) {}

    long required_bits;
};

} // namespace glaisher

#endif
