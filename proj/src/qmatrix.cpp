#include "congruent6/qmatrix.hpp"

#include "congruent6/errors.hpp"

namespace congruent6 {

void QMatrix::append_row(const std::vector<Rat>& row) {
    if (rows_ == 0 && cols_ == 0) cols_ = row.size();
    if (row.size() != cols_) throw math_error("appended row has wrong length");
    e_.insert(e_.end(), row.begin(), row.end());
    ++rows_;
}

namespace {

// In-place reduced row echelon form; returns (rank, pivot columns).
std::pair<std::size_t, std::vector<std::size_t>> rref(QMatrix& m) {
    std::size_t r = 0;
    std::vector<std::size_t> pivots;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t sel = r;
        while (sel < m.rows() && m.at(sel, c).is_zero()) ++sel;
        if (sel == m.rows()) continue;
        if (sel != r)
            for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m.at(sel, j), m.at(r, j));
        Rat inv = m.at(r, c).inv();
        for (std::size_t j = c; j < m.cols(); ++j) m.at(r, j) *= inv;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == r || m.at(i, c).is_zero()) continue;
            Rat f = m.at(i, c);
            for (std::size_t j = c; j < m.cols(); ++j) m.at(i, j) -= f * m.at(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    return {r, pivots};
}

}  // namespace

RowSpace rowspace(const QMatrix& m) {
    QMatrix w = m;
    auto [rank, pivots] = rref(w);
    RowSpace rs;
    rs.rank = rank;
    rs.basis = QMatrix(rank, m.cols());
    for (std::size_t i = 0; i < rank; ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) rs.basis.at(i, j) = w.at(i, j);
    return rs;
}

QMatrix nullspace(const QMatrix& m) {
    QMatrix w = m;
    auto [rank, pivots] = rref(w);
    std::vector<char> is_pivot(m.cols(), 0);
    for (auto c : pivots) is_pivot[c] = 1;
    QMatrix out(m.cols() - rank, m.cols());
    std::size_t k = 0;
    for (std::size_t free_c = 0; free_c < m.cols(); ++free_c) {
        if (is_pivot[free_c]) continue;
        out.at(k, free_c) = Rat(1);
        for (std::size_t i = 0; i < rank; ++i) out.at(k, pivots[i]) = -w.at(i, free_c);
        ++k;
    }
    return out;
}

Rat determinant(QMatrix m) {
    if (m.rows() != m.cols()) throw math_error("determinant of non-square matrix");
    Rat det = 1;
    for (std::size_t c = 0; c < m.cols(); ++c) {
        std::size_t sel = c;
        while (sel < m.rows() && m.at(sel, c).is_zero()) ++sel;
        if (sel == m.rows()) return Rat(0);
        if (sel != c) {
            for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m.at(sel, j), m.at(c, j));
            det = -det;
        }
        det *= m.at(c, c);
        Rat inv = m.at(c, c).inv();
        for (std::size_t i = c + 1; i < m.rows(); ++i) {
            if (m.at(i, c).is_zero()) continue;
            Rat f = m.at(i, c) * inv;
            for (std::size_t j = c; j < m.cols(); ++j) m.at(i, j) -= f * m.at(c, j);
        }
    }
    return det;
}

Rat resultant(std::vector<Rat> f, std::vector<Rat> g) {
    auto trim = [](std::vector<Rat>& p) {
        while (!p.empty() && p.back().is_zero()) p.pop_back();
    };
    trim(f);
    trim(g);
    if (f.empty() || g.empty()) return Rat(0);
    std::size_t m = f.size() - 1, n = g.size() - 1;
    if (m == 0) return f[0].pow(static_cast<unsigned>(n));
    if (n == 0) return g[0].pow(static_cast<unsigned>(m));
    QMatrix s(m + n, m + n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j <= m; ++j) s.at(i, i + j) = f[m - j];
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j <= n; ++j) s.at(n + i, i + j) = g[n - j];
    return determinant(std::move(s));
}

}  // namespace congruent6
