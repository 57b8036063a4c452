#ifndef CONGRUENT6_MORPHISMS_HPP
#define CONGRUENT6_MORPHISMS_HPP

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "congruent6/elliptic.hpp"
#include "congruent6/modular_models.hpp"
#include "congruent6/mpoly.hpp"

namespace congruent6 {

/// Explicit rational map between two named models: a list of component
/// functions, each an exact fraction of polynomials.
struct RationalMap {
    std::string source, target;
    std::vector<std::pair<MPoly, MPoly>> components;  // (numerator, denominator)

    std::string to_string() const;
    /// Evaluates all components at the given bindings; throws
    /// indeterminacy_error when a denominator vanishes.
    std::vector<Rat> apply(const std::map<int, Rat>& bindings) const;
};

/// Degree-3 isogeny y^2 = x^3 + D -> y^2 = x^3 - 27D,
/// (x, y) -> ((x^3 + 4D)/x^2, (x^3 y - 8D y)/x^3).
RationalMap isogeny_f(const Curve& e);

/// Isomorphism y^2 = x^3 - 27D -> CX,
/// (x, y) -> ((-y/6 - 18b)/(x + 12a),
///            (x^3/18 + a x^2 - y^2/36 - 6by - 48a^3 - 324b^2)/(x + 12a)^2).
RationalMap iso_g(const Curve& e);

/// First coordinate of iso_g after isogeny_f in lowest terms:
/// v = (-x^3 y/6 - 18b x^3 + 4Dy/3) / (x^4 + 12a x^3 + 4D x).
RationalMap forget_6_to_3_direct(const Curve& e);

/// lambda = v/3 evaluated at an affine point of y^2 = x^3 + D. The fiber
/// family3(e, lambda, 1, direct) is then 6-congruent to e.
Rat map6to3_direct(const Curve& e, const Rat& x0, const Rat& y0);

/// 2x2 minors (u, v, y) = (x2 x6 - x3 x5, x3 x4 - x1 x6, x1 x5 - x2 x4),
/// landing on CYminus. Throws when all three minors vanish.
std::array<Rat, 3> minors_chi2(const ProjPoint6& p);

/// (x3/3 : x6) on the reverse 3-congruence line. Throws when both vanish.
std::pair<Rat, Rat> map6to3_reverse(const ProjPoint6& p);

/// Affine chart x6 = 1: (x3, (-x1 x5 + x2 x4)/2) on CXminus.
std::pair<Rat, Rat> map_to_CXminus(const ProjPoint6& p);

/// The two defining equations (f, g) of the birational plane model in
/// coordinates (x, y, z), specialized to e.
std::pair<MPoly, MPoly> birational_model(const Curve& e);

// Symbolic certificates over generic coefficients; each reduces an exact
// polynomial difference to zero.

/// (x^3 + D)(x^3 - 8D)^2 = (x^3 + 4D)^3 - 27 D x^6 in Q[x, D].
bool isogeny_f_certificate();

/// The image of iso_g satisfies the CX relation modulo y^2 = x^3 - 27D,
/// in Q[a, b, x, y] with D expanded.
bool iso_g_certificate();

/// The printed forgetful numerator/denominator agree with the composite
/// iso_g after isogeny_f as fractions, in Q[a, b, D, x, y].
bool forgetful_composition_certificate();

}  // namespace congruent6

#endif
