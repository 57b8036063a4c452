#ifndef CONGRUENT6_FAMILIES_HPP
#define CONGRUENT6_FAMILIES_HPP

#include <utility>

#include "congruent6/elliptic.hpp"
#include "congruent6/mpoly.hpp"

namespace congruent6 {

enum class Congruence3 { direct, reverse };

/// Fiber F_{u,v} of the family parameterized by Y_E(2):
///   y^2 = x^3 + 3(3av^2 + 9buv - a^2u^2) x
///         + 27bv^3 - 18a^2uv^2 - 27abu^2v - (2a^3 + 27b^2)u^3.
/// Throws degenerate_fiber_error when v^3 + au^2v + bu^3 = 0.
Curve family2(const Curve& e, const Rat& u, const Rat& v);

/// (c4(l,m), c6(l,m)) for the 3-congruent families, built on the normalized
/// invariants c4 = -a/27, c6 = -b/54. The reverse pair carries the factor
/// 1/(c4^3 - c6^2) and is homogeneous of degrees (4, 6) in (l, m).
std::pair<Rat, Rat> frak_coeffs(const Curve& e, const Rat& lam, const Rat& mu, Congruence3 variant);

/// Fiber of the family parameterized by Y_E(3) (direct) or Y^-_E(3) (reverse):
/// y^2 = x^3 - 27*frak_c4*x - 54*frak_c6.
Curve family3(const Curve& e, const Rat& lam, const Rat& mu, Congruence3 variant);

// Symbolic forms of the family data over Q[a,b,u,v,lambda,mu]; exposed so the
// identity suite and the covering models can share one transcription.
MPoly family2_A_sym();
MPoly family2_B_sym();
MPoly frak_c4_sym();  // in a, b, lambda, mu (denominators cleared into Rat coefficients)
MPoly frak_c6_sym();
MPoly discriminant_sym(const MPoly& A, const MPoly& B);  // -16(4A^3 + 27B^2)

/// Verifies the two displayed discriminant identities as exact polynomial
/// identities: the 2-family one in Q[a,b,u,v] and the 3-family cube in
/// Q[a,b,lambda,mu]. True iff both differences reduce to zero.
bool disc_identity_suite();

}  // namespace congruent6

#endif
