#ifndef CONGRUENT6_ELLIPTIC_HPP
#define CONGRUENT6_ELLIPTIC_HPP

#include <array>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "congruent6/rat.hpp"

namespace congruent6 {

/// Elliptic curve y^2 = x^3 + a*x + b over Q in short Weierstrass form.
/// Construction rejects singular input (discriminant zero).
class Curve {
  public:
    Curve(Rat a, Rat b);

    const Rat& a() const { return a_; }
    const Rat& b() const { return b_; }

    Rat discriminant() const;  // -16(4a^3 + 27b^2)
    Rat j_invariant() const;   // (-48a)^3 / discriminant

    friend bool operator==(const Curve& e, const Curve& f) {
        return e.a_ == f.a_ && e.b_ == f.b_;
    }
    friend bool operator!=(const Curve& e, const Curve& f) { return !(e == f); }

    std::string to_string() const;  // "y^2 = x^3 + a*x + b"

  private:
    Rat a_, b_;
};

/// Binary quartic y^2 = c4*l^4 + c3*l^3*m + c2*l^2*m^2 + c1*l*m^3 + c0*m^4,
/// the model of a 2-covering.
struct Quartic {
    Rat c4, c3, c2, c1, c0;

    Rat eval(const Rat& lam, const Rat& mu) const;
    Quartic scaled(const Rat& c) const;
    friend bool operator==(const Quartic& p, const Quartic& q) {
        return p.c4 == q.c4 && p.c3 == q.c3 && p.c2 == q.c2 && p.c1 == q.c1 && p.c0 == q.c0;
    }
    bool is_zero() const;
    std::string to_string() const;
};

struct ApReport {
    long p = 0;
    long ap = 0;     // trace of Frobenius
    long count = 0;  // #E(F_p) = p + 1 - ap, projective
};

Rat discriminant(const Curve& e);
Rat j_invariant(const Curve& e);

/// Naive point count over F_p at a prime of good reduction (p >= 3, p not
/// dividing any denominator of a, b nor the discriminant numerator).
ApReport ap(const Curve& e, long p);

bool is_good_prime(const Curve& e, long p);

/// Primes p <= bound with p coprime to 6 and good for every listed curve.
std::vector<long> good_primes(std::span<const Curve> curves, long bound);

/// Classical binary-quartic invariants.
/// I = 12*c4*c0 - 3*c3*c1 + c2^2
/// J = 72*c4*c2*c0 + 9*c3*c2*c1 - 27*c4*c1^2 - 27*c0*c3^2 - 2*c2^3
std::pair<Rat, Rat> quartic_invariants(const Quartic& q);

/// Repeated root in P^1 (including multiplicity >= 2 at infinity), decided by
/// resultant(q(l,1), q'(l,1)) together with leading-coefficient bookkeeping.
bool has_repeated_root(const Quartic& q);

/// Jacobian y^2 = x^3 - 27*I*x - 27*J of a nondegenerate quartic; throws on a
/// repeated root.
Curve jacobian_of_quartic(const Quartic& q);

/// The scalar u with F.a = u^4 E.a and F.b = u^6 E.b, when one exists in Q*.
std::optional<Rat> is_Q_isomorphic(const Curve& e, const Curve& f);

/// y^2 = x^3 + d^2*a*x + d^3*b.
Curve quadratic_twist(const Curve& e, const Rat& d);

/// Factorization type of x^3 + ax + b mod p as a partition of 3:
/// {1,1,1}, {1,2} or {3}. Requires good reduction at p.
std::vector<int> cubic_splitting_type(const Curve& e, long p);

/// Solubility of y^2 = q over the p-adics, by exhaustive residue search with
/// recursive lifting (depth bound 2*v_p(disc q) + 3).
bool locally_soluble_at(const Quartic& q, long p);

// -- small finite-field helpers shared by the oracles --

/// Projective point count of y^2 = x^3 + a x + b over F_p (affine + 1).
long weierstrass_count(const Curve& e, long p);

/// Projective point count of the weighted quartic model y^2 = q(l, m) over
/// F_p, for p odd not dividing the cleared discriminant.
long quartic_count(const Quartic& q, long p);

}  // namespace congruent6

#endif
