#ifndef CONGRUENT6_ERRORS_HPP
#define CONGRUENT6_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace congruent6 {

struct math_error : std::runtime_error {
    explicit math_error(const std::string& what) : std::runtime_error(what) {}
};

// y^2 = x^3 + ax + b with vanishing discriminant.
struct singular_curve_error : math_error {
    explicit singular_curve_error(const std::string& what) : math_error(what) {}
};

// A family parameter landed on a fiber with zero discriminant.
struct degenerate_fiber_error : math_error {
    explicit degenerate_fiber_error(const std::string& what) : math_error(what) {}
};

// A rational map was evaluated where a denominator vanishes.
struct indeterminacy_error : math_error {
    explicit indeterminacy_error(const std::string& what) : math_error(what) {}
};

// A prime fails the good-reduction requirements of a point-count oracle.
struct bad_prime_error : math_error {
    explicit bad_prime_error(const std::string& what) : math_error(what) {}
};

// Mixed arithmetic between elements of different quotient algebras.
struct context_mismatch_error : math_error {
    explicit context_mismatch_error(const std::string& what) : math_error(what) {}
};

struct parse_error : std::runtime_error {
    explicit parse_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace congruent6

#endif
