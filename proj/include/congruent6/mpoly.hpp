#ifndef CONGRUENT6_MPOLY_HPP
#define CONGRUENT6_MPOLY_HPP

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "congruent6/rat.hpp"

namespace congruent6 {

// Fixed global variable order. Exponent tuples are indexed by this order so
// that canonical form is comparable across modules.
namespace sym {
enum : int {
    a = 0, b, D, u, v, lam, mu, x, y,
    x1, x2, x3, x4, x5, x6,
    X1, X2, X3, X4, X5, X6,
    COUNT
};
const char* name(int s);
int index_of(const std::string& name);  // -1 when unknown
}  // namespace sym

using Exps = std::array<std::uint8_t, sym::COUNT>;

/// Sparse multivariate polynomial with exact rational coefficients over the
/// global variable set. Canonical form: no zero coefficient is ever stored,
/// so equal polynomials compare equal term-by-term.
class MPoly {
  public:
    MPoly() = default;
    MPoly(const Rat& c);  // NOLINT: constants embed implicitly
    MPoly(long c) : MPoly(Rat(c)) {}

    static MPoly var(int symbol, unsigned exp = 1);

    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const std::map<Exps, Rat>& terms() const { return terms_; }

    MPoly operator-() const;
    MPoly& operator+=(const MPoly& o);
    MPoly& operator-=(const MPoly& o);
    friend MPoly operator+(MPoly p, const MPoly& q) { return p += q; }
    friend MPoly operator-(MPoly p, const MPoly& q) { return p -= q; }
    friend MPoly operator*(const MPoly& p, const MPoly& q);
    MPoly& operator*=(const MPoly& o) { return *this = *this * o; }
    friend bool operator==(const MPoly& p, const MPoly& q) { return p.terms_ == q.terms_; }
    friend bool operator!=(const MPoly& p, const MPoly& q) { return !(p == q); }

    MPoly scaled(const Rat& c) const;
    MPoly pow(unsigned e) const;
    MPoly derivative(int symbol) const;

    unsigned degree(int symbol) const;
    unsigned total_degree() const;
    bool depends_on(int symbol) const { return degree(symbol) > 0; }

    /// Coefficient of symbol^k, a polynomial in the remaining variables.
    MPoly coeff_of(int symbol, unsigned k) const;

    /// Exact value with every occurring variable bound; throws math_error
    /// naming the first unbound symbol.
    Rat eval(const std::map<int, Rat>& bindings) const;

    MPoly subst(int symbol, const Rat& value) const;
    MPoly subst(int symbol, const MPoly& value) const;

    /// Rational constant term / whole-polynomial constant access.
    Rat constant_term() const;

    std::string to_string() const;

    // term insertion used by builders; keeps canonical form
    void add_term(const Exps& e, const Rat& c);

  private:
    std::map<Exps, Rat> terms_;
};

enum class MPolyOp { add, sub, mul };
MPoly mpoly_arith(const MPoly& p, const MPoly& q, MPolyOp op);

/// Replaces every square of `yvar` by `rhs` until the `yvar`-degree is <= 1.
/// `rhs` must not involve `yvar`. Idempotent; a ring homomorphism on
/// representatives modulo (yvar^2 - rhs).
MPoly reduce_var_square(const MPoly& p, int yvar, const MPoly& rhs);

/// reduce_var_square specialized to the Weierstrass shape: y^2 -> rhs(x).
MPoly reduce_mod_weierstrass(const MPoly& p, const MPoly& rhs_in_x);

/// Dense coefficient list [c_0, ..., c_deg] of a univariate polynomial in
/// `symbol`; throws if other variables occur.
std::vector<Rat> univariate_coeffs(const MPoly& p, int symbol);

}  // namespace congruent6

#endif
