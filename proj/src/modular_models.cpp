#include "congruent6/modular_models.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "congruent6/errors.hpp"

namespace congruent6 {

bool TwistedCubic::contains(const Rat& u, const Rat& v, const Rat& y) const {
    return y.pow(3) == c * (v.pow(3) + a * u * u * v + b * u.pow(3));
}

long TwistedCubic::count_points(long p) const {
    if (p < 3) throw bad_prime_error("cubic count requires an odd prime");
    long am = mod_p(a, p), bm = mod_p(b, p), cm = mod_p(c, p);
    if (cm == 0) throw bad_prime_error("cubic scale vanishes mod p");
    long count = 0;
    // chart u = 1
    for (long v = 0; v < p; ++v) {
        long rhs = (cm * (((((v * v) % p) * v) + am * v + bm) % p)) % p;
        for (long y = 0; y < p; ++y)
            if ((((y * y) % p) * y) % p == rhs) ++count;
    }
    // points with u = 0, v = 1: y^3 = c
    for (long y = 0; y < p; ++y)
        if ((((y * y) % p) * y) % p == cm) ++count;
    return count;
}

std::string TwistedCubic::to_string() const {
    std::ostringstream os;
    os << "y^3 = ";
    if (c != Rat(1)) os << c.to_string() << "*(";
    MPoly inner = MPoly::var(sym::v, 3) +
                  MPoly::var(sym::u, 2).scaled(a) * MPoly::var(sym::v) +
                  MPoly::var(sym::u, 3).scaled(b);
    os << inner.to_string();
    if (c != Rat(1)) os << ")";
    return os.str();
}

std::optional<ModelId> parse_model_id(const std::string& name) {
    static const std::map<std::string, ModelId> table = {
        {"CX", ModelId::CX},           {"CY", ModelId::CY},
        {"CXminus", ModelId::CXminus}, {"CYminus", ModelId::CYminus},
        {"Z", ModelId::Z},             {"XE6", ModelId::XE6},
        {"Zminus", ModelId::Zminus},   {"Zminus1_jac", ModelId::Zminus1_jac},
        {"Xminus1", ModelId::Xminus1},
    };
    auto it = table.find(name);
    if (it == table.end()) return std::nullopt;
    return it->second;
}

const char* model_id_name(ModelId id) {
    switch (id) {
        case ModelId::CX: return "CX";
        case ModelId::CY: return "CY";
        case ModelId::CXminus: return "CXminus";
        case ModelId::CYminus: return "CYminus";
        case ModelId::Z: return "Z";
        case ModelId::XE6: return "XE6";
        case ModelId::Zminus: return "Zminus";
        case ModelId::Zminus1_jac: return "Zminus1_jac";
        case ModelId::Xminus1: return "Xminus1";
    }
    return "?";
}

std::vector<ModelId> all_model_ids() {
    return {ModelId::CX,     ModelId::CY,     ModelId::CXminus,     ModelId::CYminus, ModelId::Z,
            ModelId::XE6,    ModelId::Zminus, ModelId::Zminus1_jac, ModelId::Xminus1};
}

Quartic quartic_CX(const Curve& e) {
    const Rat &a = e.a(), &b = e.b();
    return {Rat(1), Rat(0), Rat(2) * a, Rat(4) * b, -a * a / Rat(3)};
}

Quartic quartic_CXminus_inner(const Curve& e) {
    const Rat &a = e.a(), &b = e.b();
    return {a, Rat(6) * b, Rat(-2) * a * a, Rat(-2) * a * b, -a.pow(3) / Rat(3) - Rat(3) * b * b};
}

Quartic quartic_CXminus(const Curve& e) {
    return quartic_CXminus_inner(e).scaled(e.discriminant());
}

Quartic quartic_Xminus1(const Curve& e) {
    // -3 y^2 = D * inner, rewritten with a unit y-scale as y^2 = (-D/3) * inner
    return quartic_CXminus_inner(e).scaled(-e.discriminant() / Rat(3));
}

TwistedCubic cubic_CY(const Curve& e) { return {Rat(1), e.a(), e.b()}; }
TwistedCubic cubic_CYminus(const Curve& e) { return {e.discriminant(), e.a(), e.b()}; }

Model canonical_model(const Curve& e, ModelId which) {
    Rat D = e.discriminant();
    switch (which) {
        case ModelId::CX: return quartic_CX(e);
        case ModelId::CY: return cubic_CY(e);
        case ModelId::CXminus: return quartic_CXminus(e);
        case ModelId::CYminus: return cubic_CYminus(e);
        case ModelId::Z: return Curve(Rat(0), Rat(-27) * D);
        case ModelId::XE6: return Curve(Rat(0), D);
        case ModelId::Zminus: return Curve(Rat(0), Rat(-27) / D);
        case ModelId::Zminus1_jac: return Curve(Rat(0), Rat(1) / D);
        case ModelId::Xminus1: return quartic_Xminus1(e);
    }
    throw math_error("unknown model selector");
}

std::string model_to_string(const Model& m) {
    return std::visit([](const auto& v) { return v.to_string(); }, m);
}

JacobianReport jacobian_consistency(const Curve& e, long p_bound) {
    Rat D = e.discriminant();
    Curve jac_direct(Rat(0), D);
    Curve jac_reverse(Rat(0), Rat(1) / D);
    TwistedCubic cy = cubic_CY(e);
    TwistedCubic cym = cubic_CYminus(e);

    std::array<Curve, 3> all = {e, jac_direct, jac_reverse};
    auto good = good_primes(std::span<const Curve>(all.data(), all.size()), p_bound);

    JacobianReport rep;
    rep.all_equal = true;
    std::vector<char> is_good(p_bound + 1, 0);
    for (long p : good) is_good[p] = 1;
    for (long p : primes_up_to(p_bound))
        if (!is_good[p]) rep.skipped_primes.push_back(p);

    for (long p : good) {
        JacobianCheck d{p, cy.count_points(p), weierstrass_count(jac_direct, p)};
        JacobianCheck r{p, cym.count_points(p), weierstrass_count(jac_reverse, p)};
        rep.all_equal = rep.all_equal && d.cubic_count == d.jacobian_count &&
                        r.cubic_count == r.jacobian_count;
        rep.direct.push_back(d);
        rep.reverse.push_back(r);
    }
    return rep;
}

bool ProjPoint6::is_zero() const {
    return std::all_of(x.begin(), x.end(), [](const Rat& r) { return r.is_zero(); });
}

std::string ProjPoint6::to_string() const {
    std::string s = "(";
    for (int i = 0; i < 6; ++i) {
        if (i) s += " : ";
        s += x[i].to_string();
    }
    return s + ")";
}

std::size_t mono6_index(int i, int j) {
    if (i < 1 || j < i || j > 6) throw math_error("bad quadric monomial index");
    std::size_t start = static_cast<std::size_t>((i - 1) * 7 - (i - 1) * i / 2);
    return start + static_cast<std::size_t>(j - i);
}

std::pair<int, int> mono6_pair(std::size_t idx) {
    for (int i = 1; i <= 6; ++i)
        for (int j = i; j <= 6; ++j)
            if (mono6_index(i, j) == idx) return {i, j};
    throw math_error("bad quadric monomial position");
}

Rat QuadricSystem::eval(std::size_t k, const ProjPoint6& pt) const {
    Rat acc = 0;
    for (std::size_t idx = 0; idx < kMono6Count; ++idx) {
        if (forms[k][idx].is_zero()) continue;
        auto [i, j] = mono6_pair(idx);
        acc += forms[k][idx] * pt.x[i - 1] * pt.x[j - 1];
    }
    return acc;
}

bool QuadricSystem::vanishes_at(const ProjPoint6& pt) const {
    for (std::size_t k = 0; k < forms.size(); ++k)
        if (!eval(k, pt).is_zero()) return false;
    return true;
}

QMatrix QuadricSystem::coefficient_matrix() const {
    QMatrix m(forms.size(), kMono6Count);
    for (std::size_t i = 0; i < forms.size(); ++i)
        for (std::size_t j = 0; j < kMono6Count; ++j) m.at(i, j) = forms[i][j];
    return m;
}

std::size_t QuadricSystem::rank() const { return rowspace(coefficient_matrix()).rank; }

QuadricSystem QuadricSystem::echelon_basis() const {
    RowSpace rs = rowspace(coefficient_matrix());
    QuadricSystem out;
    out.forms.resize(rs.rank);
    for (std::size_t i = 0; i < rs.rank; ++i)
        for (std::size_t j = 0; j < kMono6Count; ++j) out.forms[i][j] = rs.basis.at(i, j);
    return out;
}

MPoly QuadricSystem::form_as_mpoly(std::size_t k, bool capital_vars) const {
    const int base = capital_vars ? sym::X1 : sym::x1;
    MPoly p;
    for (std::size_t idx = 0; idx < kMono6Count; ++idx) {
        if (forms[k][idx].is_zero()) continue;
        auto [i, j] = mono6_pair(idx);
        p += (MPoly::var(base + i - 1) * MPoly::var(base + j - 1)).scaled(forms[k][idx]);
    }
    return p;
}

std::string QuadricSystem::form_to_string(std::size_t k, bool capital_vars) const {
    return form_as_mpoly(k, capital_vars).to_string();
}

bool spans_equal(const QuadricSystem& lhs, const QuadricSystem& rhs) {
    return rowspace(lhs.coefficient_matrix()).basis == rowspace(rhs.coefficient_matrix()).basis;
}

SyzygyMatrix build_A23(const Curve& e) {
    Rat D = e.discriminant();
    Quartic inner = quartic_CXminus_inner(e);
    MPoly l = MPoly::var(sym::lam), m = MPoly::var(sym::mu);
    MPoly U = (l.pow(4).scaled(inner.c4) + (l.pow(3) * m).scaled(inner.c3) +
               (l * l * m * m).scaled(inner.c2) + (l * m.pow(3)).scaled(inner.c1) +
               m.pow(4).scaled(inner.c0))
                  .scaled(Rat(-3) * D);
    MPoly Ull = U.derivative(sym::lam).derivative(sym::lam);
    MPoly Umm = U.derivative(sym::mu).derivative(sym::mu);
    MPoly Ulm = U.derivative(sym::lam).derivative(sym::mu);
    MPoly H = (Ull * Umm - Ulm * Ulm).scaled(Rat(1, 3));

    SyzygyMatrix s;
    s.U = U;
    s.H = H;
    MPoly yv = MPoly::var(sym::y);
    s.entry[0] = H.derivative(sym::mu).scaled(Rat(-9));
    s.entry[1] = U.derivative(sym::mu).scaled(Rat(-3));
    s.entry[2] = l * yv;
    s.entry[3] = H.derivative(sym::lam).scaled(Rat(9));
    s.entry[4] = U.derivative(sym::lam).scaled(Rat(3));
    s.entry[5] = m * yv;
    return s;
}

QuadricSystem derive_quadrics(const Curve& e) {
    SyzygyMatrix s = build_A23(e);

    // monomial products of the entries, reduced modulo y^2 = U
    std::vector<MPoly> products(kMono6Count);
    for (int i = 1; i <= 6; ++i)
        for (int j = i; j <= 6; ++j)
            products[mono6_index(i, j)] =
                reduce_var_square(s.entry[i - 1] * s.entry[j - 1], sym::y, s.U);

    // coefficient matrix over the (lambda, mu, y) monomials that occur
    std::map<Exps, std::size_t> col_of;
    for (const MPoly& p : products)
        for (const auto& [exps, c] : p.terms())
            col_of.emplace(exps, col_of.size());

    QMatrix m(kMono6Count, col_of.size());
    for (std::size_t r = 0; r < kMono6Count; ++r)
        for (const auto& [exps, c] : products[r].terms()) m.at(r, col_of.at(exps)) = c;

    // left kernel: coefficient vectors combining the products to zero
    QMatrix mt(m.cols(), m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) mt.at(j, i) = m.at(i, j);
    QMatrix kern = nullspace(mt);

    if (kern.rows() != 9)
        throw math_error("expected a 9-dimensional space of quadrics, got " +
                         std::to_string(kern.rows()));

    QuadricSystem qs;
    qs.forms.resize(kern.rows());
    for (std::size_t i = 0; i < kern.rows(); ++i)
        for (std::size_t j = 0; j < kMono6Count; ++j) qs.forms[i][j] = kern.at(i, j);
    qs = qs.echelon_basis();

    // exact self-check: every returned form vanishes identically on the image
    for (std::size_t k = 0; k < qs.forms.size(); ++k) {
        MPoly acc;
        for (std::size_t idx = 0; idx < kMono6Count; ++idx)
            acc += products[idx].scaled(qs.forms[k][idx]);
        if (!acc.is_zero()) throw math_error("derived quadric does not vanish on the image");
    }
    return qs;
}

namespace {

struct Term {
    int i, j;
    Rat c;
};

std::array<Rat, kMono6Count> make_form(const std::vector<Term>& terms) {
    std::array<Rat, kMono6Count> f;
    f.fill(Rat(0));
    for (const auto& t : terms) f[mono6_index(t.i, t.j)] += t.c;
    return f;
}

}  // namespace

QuadricSystem quadrics_s(const Curve& e) {
    const Rat a = e.a(), b = e.b(), D = e.discriminant();
    QuadricSystem qs;
    qs.forms.reserve(9);
    qs.forms.push_back(make_form({{1, 5, Rat(-6)},
                                  {1, 6, Rat(24) * a},
                                  {2, 2, Rat(-6)},
                                  {2, 3, Rat(24) * a},
                                  {2, 4, Rat(-6)},
                                  {3, 4, Rat(24) * a},
                                  {4, 6, Rat(72) * b},
                                  {5, 5, Rat(2) * a},
                                  {5, 6, Rat(8) * a * a},
                                  {6, 6, D}}));
    qs.forms.push_back(make_form({{1, 3, Rat(-6)},
                                  {2, 5, Rat(1)},
                                  {2, 6, Rat(2) * a},
                                  {3, 3, Rat(-36) * b},
                                  {3, 5, Rat(2) * a},
                                  {3, 6, Rat(16) * a * a},
                                  {4, 5, Rat(1)},
                                  {4, 6, Rat(2) * a},
                                  {6, 6, Rat(12) * a * b}}));
    qs.forms.push_back(make_form({{1, 3, Rat(12) * a},
                                  {1, 6, Rat(18) * b},
                                  {3, 4, Rat(18) * b},
                                  {4, 5, Rat(-2) * a},
                                  {4, 6, Rat(-4) * a * a},
                                  {5, 5, Rat(3) * b}}));
    qs.forms.push_back(make_form({{2, 3, Rat(-12) * a},
                                  {2, 6, Rat(-18) * b},
                                  {3, 5, Rat(-18) * b},
                                  {4, 4, Rat(-3)},
                                  {5, 5, -a},
                                  {5, 6, Rat(4) * a * a}}));
    qs.forms.push_back(make_form({{2, 2, Rat(3)},
                                  {3, 3, Rat(-48) * a * a},
                                  {3, 6, Rat(-144) * a * b},
                                  {4, 6, Rat(-36) * b},
                                  {5, 5, a},
                                  {5, 6, Rat(-8) * a * a},
                                  {6, 6, Rat(16) * a.pow(3)}}));
    qs.forms.push_back(make_form({{1, 4, Rat(-3)},
                                  {2, 3, Rat(18) * b},
                                  {2, 5, -a},
                                  {2, 6, Rat(-4) * a * a},
                                  {3, 5, Rat(-4) * a * a},
                                  {5, 6, Rat(-6) * a * b}}));
    qs.forms.push_back(make_form({{1, 3, Rat(-108) * b},
                                  {2, 2, Rat(6) * a},
                                  {2, 3, Rat(-24) * a * a},
                                  {2, 5, Rat(18) * b},
                                  {4, 6, Rat(-36) * a * b},
                                  {5, 5, Rat(-2) * a * a},
                                  {5, 6, Rat(-8) * a.pow(3)},
                                  {6, 6, -a * D}}));
    qs.forms.push_back(make_form({{1, 2, Rat(3)},
                                  {3, 3, Rat(-72) * a * b},
                                  {3, 6, Rat(-216) * b * b},
                                  {4, 5, a},
                                  {4, 6, Rat(8) * a * a},
                                  {5, 6, Rat(-12) * a * b},
                                  {6, 6, Rat(24) * a * a * b}}));
    qs.forms.push_back(make_form({{1, 1, Rat(36)},
                                  {2, 2, Rat(12) * a},
                                  {4, 4, Rat(12) * a},
                                  {5, 5, Rat(4) * a * a},
                                  {5, 6, D}}));
    return qs;
}

QuadricSystem printed_quadrics_q(const Curve& e) {
    const Rat a = e.a(), b = e.b(), D = e.discriminant();
    const Rat D2 = D * D, D3 = D.pow(3), D4 = D.pow(4), D5 = D.pow(5);
    QuadricSystem qs;
    qs.forms.reserve(9);
    qs.forms.push_back(make_form({{1, 4, Rat(-1)},
                                  {2, 5, Rat(8) * a * D3},
                                  {3, 6, Rat(-3) * D5},
                                  {5, 5, Rat(12) * b * D3}}));
    qs.forms.push_back(make_form({{1, 5, Rat(1)},
                                  {2, 2, Rat(72) * b * D},
                                  {2, 4, Rat(1)},
                                  {2, 5, Rat(-32) * a * a * D},
                                  {3, 6, Rat(24) * a * D3},
                                  {5, 5, Rat(-24) * a * b * D},
                                  {6, 6, Rat(36) * b * D3}}));
    qs.forms.push_back(make_form({{1, 5, Rat(-72) * b * D},
                                  {2, 4, Rat(-72) * b * D},
                                  {3, 3, Rat(-576) * a * a * D4},
                                  {3, 6, Rat(-1728) * a * b * D4},
                                  {4, 4, Rat(-1)},
                                  {4, 5, Rat(32) * a * a * D},
                                  {5, 5, Rat(-8) * a * D3},
                                  {6, 6, Rat(-1296) * b * b * D4}}));
    qs.forms.push_back(make_form({{2, 3, Rat(-24) * a * D},
                                  {2, 6, Rat(-36) * b * D},
                                  {3, 5, Rat(-36) * b * D},
                                  {4, 6, Rat(1)},
                                  {5, 6, Rat(8) * a * a * D}}));
    qs.forms.push_back(make_form({{1, 1, Rat(-3)},
                                  {3, 3, Rat(9) * D5},
                                  {4, 4, -a},
                                  {4, 5, -D2},
                                  {6, 6, Rat(3) * a * D5}}));
    qs.forms.push_back(make_form({{2, 2, Rat(24) * a * D},
                                  {2, 5, Rat(72) * b * D},
                                  {3, 3, Rat(18) * D3},
                                  {4, 5, Rat(-1)},
                                  {5, 5, Rat(-8) * a * a * D},
                                  {6, 6, Rat(6) * a * D3}}));
    qs.forms.push_back(make_form({{1, 6, Rat(1)},
                                  {2, 3, Rat(72) * b * D},
                                  {2, 6, Rat(-16) * a * a * D},
                                  {3, 4, Rat(1)},
                                  {3, 5, Rat(-16) * a * a * D},
                                  {5, 6, Rat(-24) * a * b * D}}));
    qs.forms.push_back(make_form({{1, 2, Rat(-3)},
                                  {3, 3, Rat(36) * a * D3},
                                  {3, 6, Rat(108) * b * D3},
                                  {4, 5, -a},
                                  {5, 5, D2 / Rat(2)},
                                  {6, 6, Rat(-12) * a * a * D3}}));
    qs.forms.push_back(make_form({{1, 3, Rat(-3)},
                                  {4, 6, -a},
                                  {5, 6, D2 / Rat(2)}}));
    return qs;
}

FlexMatrixInverse flex_inverse(const Curve& e) {
    const Rat a = e.a(), b = e.b(), D = e.discriminant();
    const Rat D2 = D * D;
    auto elem = [&](Rat c0, Rat c1, Rat c2) {
        return CubicAlgElem(std::move(c0), std::move(c1), std::move(c2), a, b);
    };
    FlexMatrixInverse g;
    g.m.at(0, 0) = elem(Rat(-972) * b * D2, Rat(-648) * a * D2, Rat(0));
    g.m.at(0, 1) = elem(0, 0, 0);
    g.m.at(0, 2) = elem(1, 0, 0);
    g.m.at(1, 0) = elem(Rat(-216) * a * a * D2, Rat(972) * b * D2, Rat(0));
    g.m.at(1, 1) = elem(0, 0, 0);
    g.m.at(1, 2) = elem(0, 1, 0);
    g.m.at(2, 0) = elem(0, 0, 0);
    g.m.at(2, 1) = elem(Rat(-6) * a * D, Rat(0), Rat(-18) * D);
    g.m.at(2, 2) = elem(0, 0, 0);
    return g;
}

TwistResult twist_by_flex(const Curve& e, const QuadricSystem& nine) {
    const Rat a = e.a(), b = e.b();
    FlexMatrixInverse g = flex_inverse(e);

    // x_i as algebra-linear forms in X_1..X_6; kappa[i][k] multiplies X_{k+1}
    std::array<std::array<CubicAlgElem, 6>, 6> kappa;
    CubicAlgElem zero(0, 0, 0, a, b);
    for (auto& row : kappa) row.fill(zero);
    for (int blk = 0; blk < 2; ++blk) {
        for (int j = 0; j < 3; ++j) {
            for (int i = 0; i < 3; ++i) {
                // row vector times matrix: x_{blk,j} = sum_i X_{blk,i} g^{-1}[i][j]
                kappa[blk * 3 + j][blk * 3 + i] = g.m.at(i, j);
            }
        }
    }

    TwistResult out;
    out.forms27.forms.reserve(nine.size() * 3);
    for (std::size_t k = 0; k < nine.size(); ++k) {
        std::array<std::array<CubicAlgElem, 6>, 6> acc;
        for (auto& row : acc) row.fill(zero);
        for (std::size_t idx = 0; idx < kMono6Count; ++idx) {
            const Rat& w = nine.forms[k][idx];
            if (w.is_zero()) continue;
            auto [i, j] = mono6_pair(idx);
            for (int kk = 0; kk < 6; ++kk) {
                if (kappa[i - 1][kk].is_zero()) continue;
                for (int ll = 0; ll < 6; ++ll) {
                    if (kappa[j - 1][ll].is_zero()) continue;
                    acc[kk][ll] = acc[kk][ll] + (kappa[i - 1][kk] * kappa[j - 1][ll]).scaled(w);
                }
            }
        }
        std::array<std::array<Rat, kMono6Count>, 3> comp;
        for (auto& c : comp) c.fill(Rat(0));
        for (int kk = 0; kk < 6; ++kk) {
            for (int ll = kk; ll < 6; ++ll) {
                CubicAlgElem v = acc[kk][ll];
                if (kk < ll) v = v + acc[ll][kk];
                std::size_t idx = mono6_index(kk + 1, ll + 1);
                for (int t = 0; t < 3; ++t) comp[t][idx] += v.coeff(t);
            }
        }
        for (int t = 0; t < 3; ++t) out.forms27.forms.push_back(comp[t]);
    }
    out.rank = out.forms27.rank();
    out.echelon9 = out.forms27.echelon_basis();
    return out;
}

bool twist_image_certificate(const Curve& e, const QuadricSystem& nine, const TwistResult& tw) {
    const Rat a = e.a(), b = e.b();
    SyzygyMatrix s = build_A23(e);
    Mat3Alg adj = flex_inverse(e).m.adjugate();

    // X = A * adj(g^{-1}) blockwise, entries live in the algebra with
    // polynomial components
    std::array<AlphaPoly, 6> X;
    for (int blk = 0; blk < 2; ++blk) {
        for (int j = 0; j < 3; ++j) {
            AlphaPoly acc(a, b);
            for (int i = 0; i < 3; ++i) {
                AlphaPoly term = AlphaPoly::from_poly(s.entry[blk * 3 + i], a, b)
                                     .scaled_elem(adj.at(i, j));
                acc = acc + term;
            }
            X[blk * 3 + j] = acc;
        }
    }

    std::array<AlphaPoly, kMono6Count> prods;
    for (int i = 1; i <= 6; ++i)
        for (int j = i; j <= 6; ++j) prods[mono6_index(i, j)] = X[i - 1] * X[j - 1];

    CubicAlgElem alpha(0, 1, 0, a, b);
    for (std::size_t k = 0; k < nine.size(); ++k) {
        AlphaPoly combined(a, b);
        for (int t = 0; t < 3; ++t) {
            AlphaPoly part(a, b);
            for (std::size_t idx = 0; idx < kMono6Count; ++idx) {
                const Rat& w = tw.forms27.forms[3 * k + t][idx];
                if (w.is_zero()) continue;
                part = part + prods[idx].scaled(w);
            }
            CubicAlgElem alpha_t = t == 0 ? CubicAlgElem(1, 0, 0, a, b)
                                          : (t == 1 ? alpha : alpha * alpha);
            combined = combined + part.scaled_elem(alpha_t);
        }
        for (int t = 0; t < 3; ++t) {
            MPoly reduced = reduce_var_square(combined.comp[t], sym::y, s.U);
            if (!reduced.is_zero()) return false;
        }
    }
    return true;
}

}  // namespace congruent6
