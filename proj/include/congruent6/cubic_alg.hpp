#ifndef CONGRUENT6_CUBIC_ALG_HPP
#define CONGRUENT6_CUBIC_ALG_HPP

#include <array>
#include <string>

#include "congruent6/mpoly.hpp"
#include "congruent6/rat.hpp"

namespace congruent6 {

/// Element c0 + c1*alpha + c2*alpha^2 of Q[alpha]/(alpha^3 + a*alpha + b).
/// This is a quotient ring, not a field: the cubic may be reducible, and no
/// division is ever performed. Multiplication reduces alpha^3 -> -a*alpha - b.
class CubicAlgElem {
  public:
    CubicAlgElem() : c_{Rat(0), Rat(0), Rat(0)}, a_(0), b_(0) {}
    CubicAlgElem(Rat c0, Rat c1, Rat c2, Rat a, Rat b)
        : c_{std::move(c0), std::move(c1), std::move(c2)}, a_(std::move(a)), b_(std::move(b)) {}

    const Rat& c0() const { return c_[0]; }
    const Rat& c1() const { return c_[1]; }
    const Rat& c2() const { return c_[2]; }
    const Rat& coeff(int k) const { return c_[k]; }
    const Rat& ctx_a() const { return a_; }
    const Rat& ctx_b() const { return b_; }

    bool is_zero() const { return c_[0].is_zero() && c_[1].is_zero() && c_[2].is_zero(); }

    CubicAlgElem operator-() const { return {-c_[0], -c_[1], -c_[2], a_, b_}; }
    friend CubicAlgElem operator+(const CubicAlgElem& u, const CubicAlgElem& w);
    friend CubicAlgElem operator-(const CubicAlgElem& u, const CubicAlgElem& w);
    friend CubicAlgElem operator*(const CubicAlgElem& u, const CubicAlgElem& w);
    friend bool operator==(const CubicAlgElem& u, const CubicAlgElem& w) {
        return u.c_ == w.c_ && u.a_ == w.a_ && u.b_ == w.b_;
    }

    CubicAlgElem scaled(const Rat& r) const { return {c_[0] * r, c_[1] * r, c_[2] * r, a_, b_}; }

    /// Norm to Q: determinant of the multiplication-by-this matrix on the
    /// basis {1, alpha, alpha^2}.
    Rat norm() const;

    std::string to_string() const;

  private:
    std::array<Rat, 3> c_;
    Rat a_, b_;
};

CubicAlgElem cubic_alg_mul(const CubicAlgElem& u, const CubicAlgElem& w);

/// 3x3 matrix over the cubic algebra; enough structure for the flex twist
/// (multiplication, determinant, adjugate).
struct Mat3Alg {
    std::array<CubicAlgElem, 9> m;

    const CubicAlgElem& at(int i, int j) const { return m[i * 3 + j]; }
    CubicAlgElem& at(int i, int j) { return m[i * 3 + j]; }

    CubicAlgElem det() const;
    Mat3Alg adjugate() const;
};

/// Polynomial with coefficients in the cubic algebra, stored as three MPoly
/// components p0 + p1*alpha + p2*alpha^2 over the context (a, b).
struct AlphaPoly {
    std::array<MPoly, 3> comp;
    Rat a, b;

    AlphaPoly() : a(0), b(0) {}
    AlphaPoly(Rat a_, Rat b_) : a(std::move(a_)), b(std::move(b_)) {}
    static AlphaPoly from_elem(const CubicAlgElem& e);
    static AlphaPoly from_poly(const MPoly& p, Rat a, Rat b);

    bool is_zero() const { return comp[0].is_zero() && comp[1].is_zero() && comp[2].is_zero(); }

    friend AlphaPoly operator+(const AlphaPoly& p, const AlphaPoly& q);
    friend AlphaPoly operator*(const AlphaPoly& p, const AlphaPoly& q);
    AlphaPoly scaled(const Rat& r) const;
    AlphaPoly scaled_elem(const CubicAlgElem& e) const;
};

}  // namespace congruent6

#endif
