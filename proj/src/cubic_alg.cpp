#include "congruent6/cubic_alg.hpp"

#include <sstream>

#include "congruent6/errors.hpp"
#include "congruent6/qmatrix.hpp"

namespace congruent6 {

namespace {

void require_same_context(const Rat& a1, const Rat& b1, const Rat& a2, const Rat& b2) {
    if (a1 != a2 || b1 != b2)
        throw context_mismatch_error("cubic algebra elements from different contexts");
}

}  // namespace

CubicAlgElem operator+(const CubicAlgElem& u, const CubicAlgElem& w) {
    require_same_context(u.ctx_a(), u.ctx_b(), w.ctx_a(), w.ctx_b());
    return {u.c0() + w.c0(), u.c1() + w.c1(), u.c2() + w.c2(), u.ctx_a(), u.ctx_b()};
}

CubicAlgElem operator-(const CubicAlgElem& u, const CubicAlgElem& w) {
    require_same_context(u.ctx_a(), u.ctx_b(), w.ctx_a(), w.ctx_b());
    return {u.c0() - w.c0(), u.c1() - w.c1(), u.c2() - w.c2(), u.ctx_a(), u.ctx_b()};
}

CubicAlgElem operator*(const CubicAlgElem& u, const CubicAlgElem& w) {
    require_same_context(u.ctx_a(), u.ctx_b(), w.ctx_a(), w.ctx_b());
    const Rat &a = u.ctx_a(), &b = u.ctx_b();
    std::array<Rat, 5> d{Rat(0), Rat(0), Rat(0), Rat(0), Rat(0)};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) d[i + j] += u.coeff(i) * w.coeff(j);
    // alpha^3 = -a*alpha - b, alpha^4 = -a*alpha^2 - b*alpha
    return {d[0] - b * d[3], d[1] - a * d[3] - b * d[4], d[2] - a * d[4], a, b};
}

CubicAlgElem cubic_alg_mul(const CubicAlgElem& u, const CubicAlgElem& w) { return u * w; }

Rat CubicAlgElem::norm() const {
    // columns are this * {1, alpha, alpha^2} in coordinates
    QMatrix m(3, 3);
    CubicAlgElem basis[3] = {
        CubicAlgElem(1, 0, 0, a_, b_),
        CubicAlgElem(0, 1, 0, a_, b_),
        CubicAlgElem(0, 0, 1, a_, b_),
    };
    for (int j = 0; j < 3; ++j) {
        CubicAlgElem col = *this * basis[j];
        for (int i = 0; i < 3; ++i) m.at(i, j) = col.coeff(i);
    }
    return determinant(std::move(m));
}

std::string CubicAlgElem::to_string() const {
    std::ostringstream os;
    os << "(" << c_[0].to_string() << ") + (" << c_[1].to_string() << ")*alpha + ("
       << c_[2].to_string() << ")*alpha^2";
    return os.str();
}

CubicAlgElem Mat3Alg::det() const {
    auto minor2 = [&](int i0, int i1, int j0, int j1) {
        return at(i0, j0) * at(i1, j1) - at(i0, j1) * at(i1, j0);
    };
    return at(0, 0) * minor2(1, 2, 1, 2) - at(0, 1) * minor2(1, 2, 0, 2) +
           at(0, 2) * minor2(1, 2, 0, 1);
}

Mat3Alg Mat3Alg::adjugate() const {
    auto minor2 = [&](int i0, int i1, int j0, int j1) {
        return at(i0, j0) * at(i1, j1) - at(i0, j1) * at(i1, j0);
    };
    Mat3Alg adj;
    for (int i = 0; i < 3; ++i) {
        int r0 = (i + 1) % 3, r1 = (i + 2) % 3;
        if (r0 > r1) std::swap(r0, r1);
        for (int j = 0; j < 3; ++j) {
            int c0 = (j + 1) % 3, c1 = (j + 2) % 3;
            if (c0 > c1) std::swap(c0, c1);
            CubicAlgElem cof = minor2(r0, r1, c0, c1);
            if ((i + j) % 2 == 1) cof = -cof;
            adj.at(j, i) = cof;  // transpose of cofactors
        }
    }
    return adj;
}

AlphaPoly AlphaPoly::from_elem(const CubicAlgElem& e) {
    AlphaPoly p(e.ctx_a(), e.ctx_b());
    for (int k = 0; k < 3; ++k) p.comp[k] = MPoly(e.coeff(k));
    return p;
}

AlphaPoly AlphaPoly::from_poly(const MPoly& q, Rat a, Rat b) {
    AlphaPoly p(std::move(a), std::move(b));
    p.comp[0] = q;
    return p;
}

AlphaPoly operator+(const AlphaPoly& p, const AlphaPoly& q) {
    require_same_context(p.a, p.b, q.a, q.b);
    AlphaPoly r(p.a, p.b);
    for (int k = 0; k < 3; ++k) r.comp[k] = p.comp[k] + q.comp[k];
    return r;
}

AlphaPoly operator*(const AlphaPoly& p, const AlphaPoly& q) {
    require_same_context(p.a, p.b, q.a, q.b);
    std::array<MPoly, 5> d;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) d[i + j] += p.comp[i] * q.comp[j];
    AlphaPoly r(p.a, p.b);
    r.comp[0] = d[0] + d[3].scaled(-p.b);
    r.comp[1] = d[1] + d[3].scaled(-p.a) + d[4].scaled(-p.b);
    r.comp[2] = d[2] + d[4].scaled(-p.a);
    return r;
}

AlphaPoly AlphaPoly::scaled(const Rat& r) const {
    AlphaPoly out(a, b);
    for (int k = 0; k < 3; ++k) out.comp[k] = comp[k].scaled(r);
    return out;
}

AlphaPoly AlphaPoly::scaled_elem(const CubicAlgElem& e) const {
    require_same_context(a, b, e.ctx_a(), e.ctx_b());
    return *this * AlphaPoly::from_elem(e);
}

}  // namespace congruent6
