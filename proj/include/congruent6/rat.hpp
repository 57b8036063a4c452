#ifndef CONGRUENT6_RAT_HPP
#define CONGRUENT6_RAT_HPP

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "congruent6/errors.hpp"

namespace congruent6 {

using Int = mpz_class;

/// Exact rational number. Always canonical: gcd(|num|, den) = 1, den >= 1,
/// zero is 0/1. All arithmetic is exact; there is no floating point anywhere.
class Rat {
  public:
    Rat() : q_(0) {}
    Rat(long n) : q_(n) {}  // NOLINT: implicit by design, mirrors integer literals
    Rat(long n, long d);
    Rat(const Int& n, const Int& d);
    explicit Rat(const Int& n) : q_(n) {}

    /// Parses "p/q" or "n" (optional sign, base 10). Throws parse_error.
    static Rat from_string(const std::string& s);

    const Int num() const { return q_.get_num(); }
    const Int den() const { return q_.get_den(); }

    bool is_zero() const { return sgn(q_) == 0; }
    bool is_integer() const { return q_.get_den() == 1; }
    int sign() const { return sgn(q_); }

    Rat operator-() const { return Rat(mpq_class(-q_)); }
    Rat& operator+=(const Rat& o) { q_ += o.q_; return *this; }
    Rat& operator-=(const Rat& o) { q_ -= o.q_; return *this; }
    Rat& operator*=(const Rat& o) { q_ *= o.q_; return *this; }
    Rat& operator/=(const Rat& o);

    friend Rat operator+(Rat a, const Rat& b) { return a += b; }
    friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
    friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
    friend Rat operator/(Rat a, const Rat& b) { return a /= b; }

    friend bool operator==(const Rat& a, const Rat& b) { return a.q_ == b.q_; }
    friend bool operator!=(const Rat& a, const Rat& b) { return a.q_ != b.q_; }
    friend bool operator<(const Rat& a, const Rat& b) { return a.q_ < b.q_; }
    friend bool operator<=(const Rat& a, const Rat& b) { return a.q_ <= b.q_; }
    friend bool operator>(const Rat& a, const Rat& b) { return a.q_ > b.q_; }
    friend bool operator>=(const Rat& a, const Rat& b) { return a.q_ >= b.q_; }

    Rat abs() const { return Rat(mpq_class(::abs(q_))); }
    Rat pow(unsigned e) const;
    Rat inv() const;

    /// "p/q" when q != 1, else "n".
    std::string to_string() const;

  private:
    explicit Rat(const mpq_class& q) : q_(q) {}
    mpq_class q_;
};

/// p-adic valuation of a nonzero integer.
long valuation(const Int& n, long p);

/// p-adic valuation of a nonzero rational: v(num) - v(den).
long valuation(const Rat& r, long p);

/// Legendre symbol (n/p) for odd prime p.
int legendre(const Int& n, long p);

/// n mod p represented in [0, p). Requires p does not divide den(r).
long mod_p(const Rat& r, long p);

/// Exact k-th root of an integer if it exists (k >= 1; n >= 0 for even k).
std::optional<Int> exact_root(const Int& n, unsigned k);

/// Exact k-th root of a rational if one exists in Q.
std::optional<Rat> exact_root(const Rat& r, unsigned k);

bool is_prime(long n);
std::vector<long> primes_up_to(long bound);

}  // namespace congruent6

#endif
