#ifndef CONGRUENT6_QMATRIX_HPP
#define CONGRUENT6_QMATRIX_HPP

#include <cstddef>
#include <vector>

#include "congruent6/rat.hpp"

namespace congruent6 {

/// Dense matrix of exact rationals. Row reduction is plain Gauss-Jordan over
/// Q; sizes in this project stay at most a few dozen rows.
class QMatrix {
  public:
    QMatrix() : rows_(0), cols_(0) {}
    QMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), e_(rows * cols, Rat(0)) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rat& at(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }
    const Rat& at(std::size_t i, std::size_t j) const { return e_[i * cols_ + j]; }

    void append_row(const std::vector<Rat>& row);

    friend bool operator==(const QMatrix& a, const QMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.e_ == b.e_;
    }

  private:
    std::size_t rows_, cols_;
    std::vector<Rat> e_;
};

struct RowSpace {
    std::size_t rank = 0;
    QMatrix basis;  // reduced row echelon form with zero rows dropped
};

/// Reduced row-echelon basis of the row space. Two matrices have equal row
/// spaces iff their bases here are identical.
RowSpace rowspace(const QMatrix& m);

/// Basis of { x : m x = 0 }, one solution per row.
QMatrix nullspace(const QMatrix& m);

Rat determinant(QMatrix m);

/// Resultant of two univariate polynomials given as dense coefficient lists
/// [c_0..c_deg] (true degrees; leading zeros are trimmed first).
Rat resultant(std::vector<Rat> f, std::vector<Rat> g);

}  // namespace congruent6

#endif
