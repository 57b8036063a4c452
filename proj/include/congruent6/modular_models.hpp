#ifndef CONGRUENT6_MODULAR_MODELS_HPP
#define CONGRUENT6_MODULAR_MODELS_HPP

#include <array>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "congruent6/cubic_alg.hpp"
#include "congruent6/elliptic.hpp"
#include "congruent6/mpoly.hpp"
#include "congruent6/qmatrix.hpp"

namespace congruent6 {

/// Plane cubic y^3 = c*(v^3 + a*u^2*v + b*u^3) in P^2 with coordinates
/// (u : v : y). Smooth iff c != 0 and the underlying curve is nonsingular.
struct TwistedCubic {
    Rat c, a, b;

    bool contains(const Rat& u, const Rat& v, const Rat& y) const;
    long count_points(long p) const;  // projective count over F_p
    std::string to_string() const;
};

enum class ModelId { CX, CY, CXminus, CYminus, Z, XE6, Zminus, Zminus1_jac, Xminus1 };

std::optional<ModelId> parse_model_id(const std::string& name);
const char* model_id_name(ModelId id);
std::vector<ModelId> all_model_ids();

using Model = std::variant<Quartic, TwistedCubic, Curve>;

/// The printed canonical model attached to E for each selector, with exact
/// coefficients:
///   CX          y^2 = l^4 + 2a l^2 m^2 + 4b l m^3 - (a^2/3) m^4
///   CY          y^3 = v^3 + a u^2 v + b u^3
///   CXminus     y^2 = D*(a l^4 + 6b l^3 m - 2a^2 l^2 m^2 - 2ab l m^3 + (-a^3/3 - 3b^2) m^4)
///   CYminus     y^3 = D*(v^3 + a u^2 v + b u^3)
///   Z           y^2 = x^3 - 27 D
///   XE6         y^2 = x^3 + D
///   Zminus      y^2 = x^3 - 27/D
///   Zminus1_jac y^2 = x^3 + 1/D
///   Xminus1     y^2 = (-D/3)*(same inner quartic as CXminus)
Model canonical_model(const Curve& e, ModelId which);
std::string model_to_string(const Model& m);

Quartic quartic_CX(const Curve& e);
Quartic quartic_CXminus(const Curve& e);
Quartic quartic_Xminus1(const Curve& e);
Quartic quartic_CXminus_inner(const Curve& e);
TwistedCubic cubic_CY(const Curve& e);
TwistedCubic cubic_CYminus(const Curve& e);

struct JacobianCheck {
    long p = 0;
    long cubic_count = 0;
    long jacobian_count = 0;
};

struct JacobianReport {
    std::vector<JacobianCheck> direct;   // CY vs y^2 = x^3 + D
    std::vector<JacobianCheck> reverse;  // CYminus vs y^2 = x^3 + 1/D
    std::vector<long> skipped_primes;
    bool all_equal = false;
};

/// Certifies the plane-cubic Jacobians by point-count equality at every good
/// prime up to the bound.
JacobianReport jacobian_consistency(const Curve& e, long p_bound);

/// Point of P^5 with exact rational coordinates, defined up to scaling.
struct ProjPoint6 {
    std::array<Rat, 6> x;

    bool is_zero() const;
    std::string to_string() const;
};

/// Index of the monomial x_i x_j (1-based, i <= j) in the fixed degree-two
/// basis of quadratic forms in six variables.
std::size_t mono6_index(int i, int j);
std::pair<int, int> mono6_pair(std::size_t idx);
inline constexpr std::size_t kMono6Count = 21;

/// A list of quadratic forms in six variables, each stored as its 21 exact
/// coefficients over the monomial basis {x_i x_j : i <= j}.
struct QuadricSystem {
    std::vector<std::array<Rat, kMono6Count>> forms;

    std::size_t size() const { return forms.size(); }
    Rat eval(std::size_t k, const ProjPoint6& pt) const;
    bool vanishes_at(const ProjPoint6& pt) const;
    QMatrix coefficient_matrix() const;
    std::size_t rank() const;
    QuadricSystem echelon_basis() const;
    MPoly form_as_mpoly(std::size_t k, bool capital_vars) const;
    std::string form_to_string(std::size_t k, bool capital_vars) const;
};

bool spans_equal(const QuadricSystem& lhs, const QuadricSystem& rhs);

/// The 2x3 syzygy matrix attached to the 2-covering quartic of X^-_1:
/// U is the covering quartic (as a form of degree 4 in lambda, mu), H the
/// sextic-free quartic covariant det(Hessian(U))/3, and the entries are
///   [ -9 dH/dmu   -3 dU/dmu   lambda*y ]
///   [  9 dH/dlam   3 dU/dlam      mu*y ]
struct SyzygyMatrix {
    MPoly U, H;
    std::array<MPoly, 6> entry;  // A1..A6, row-major
};

SyzygyMatrix build_A23(const Curve& e);

/// Recomputes the nine quadrics cutting out the degree-6 image of the syzygy
/// matrix: substitutes the entries into all 21 degree-2 monomials, reduces
/// modulo y^2 - U, and returns the kernel of the coefficient matrix as a
/// reduced-echelon QuadricSystem. Throws math_error when the kernel dimension
/// is not 9.
QuadricSystem derive_quadrics(const Curve& e);

/// The nine printed forms s_1..s_9 of the X^-_E(6) model, specialized to E.
QuadricSystem quadrics_s(const Curve& e);

/// The intermediate nine quadrics q_1..q_9 as printed (typo-corrected),
/// kept for documentation and span comparisons; derive_quadrics is the
/// pipeline's source of truth.
QuadricSystem printed_quadrics_q(const Curve& e);

/// Inverse flex matrix over Q[alpha]/(alpha^3 + a*alpha + b):
///   [ -648 a D^2 alpha - 972 b D^2    0                      1     ]
///   [  972 b D^2 alpha - 216 a^2 D^2  0                      alpha ]
///   [  0                              -18 D alpha^2 - 6 a D  0     ]
struct FlexMatrixInverse {
    Mat3Alg m;
};

FlexMatrixInverse flex_inverse(const Curve& e);

struct TwistResult {
    QuadricSystem forms27;
    std::size_t rank = 0;
    QuadricSystem echelon9;
};

/// Substitutes x = X * g^{-1} (blockwise on the two rows of the coordinate
/// matrix) into each form, expands over the basis {1, alpha, alpha^2} and
/// returns the 27 rational quadrics together with the rank of their span.
TwistResult twist_by_flex(const Curve& e, const QuadricSystem& nine);

/// Exact certificate that the twisted span vanishes on the image of the
/// syzygy matrix: substitutes X = A * adj(g^{-1}) (a determinant multiple of
/// the honest image) and reduces modulo y^2 - U. Uses multiplication only.
bool twist_image_certificate(const Curve& e, const QuadricSystem& nine, const TwistResult& tw);

}  // namespace congruent6

#endif
