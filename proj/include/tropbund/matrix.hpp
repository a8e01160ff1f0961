#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "tropbund/perm.hpp"
#include "tropbund/semiring.hpp"

namespace tropbund {

template <class SR>
class Matrix {
  public:
    using Elem = typename SR::Elem;

    Matrix(SR sr, std::size_t rows, std::size_t cols)
        : sr_(sr), rows_(rows), cols_(cols), e_(rows * cols, sr.zero()) {}

    static Matrix identity(SR sr, std::size_t n) {
        Matrix m(sr, n, n);
        for (std::size_t i = 0; i < n; ++i) m.at(i, i) = sr.one();
        return m;
    }

    Elem& at(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }
    const Elem& at(std::size_t i, std::size_t j) const { return e_[i * cols_ + j]; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    const SR& sr() const { return sr_; }

    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product: shape");
        Matrix r(a.sr_, a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t j = 0; j < b.cols_; ++j) {
                Elem s = a.sr_.zero();
                for (std::size_t k = 0; k < a.cols_; ++k)
                    s = a.sr_.add(s, a.sr_.mul(a.at(i, k), b.at(k, j)));
                r.at(i, j) = s;
            }
        return r;
    }
    bool operator==(const Matrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && e_ == o.e_;
    }
    bool operator!=(const Matrix& o) const { return !(*this == o); }

    bool is_identity() const {
        if (rows_ != cols_) return false;
        return *this == identity(sr_, rows_);
    }

  private:
    SR sr_;
    std::size_t rows_, cols_;
    std::vector<Elem> e_;
};

/// Invertible matrix in diagonal-times-permutation form: the matrix with
/// nonzero entry diag[p(i)] at row p(i), column i.
template <class SR>
struct GLn {
    SR sr;
    std::vector<typename SR::Elem> diag;  // indexed by row
    Perm perm;

    Matrix<SR> recompose() const {
        std::size_t n = diag.size();
        Matrix<SR> m(sr, n, n);
        for (std::size_t i = 0; i < n; ++i) m.at(perm(i), i) = diag[perm(i)];
        return m;
    }
};

/// Semidirect-product multiplication; matches matrix multiplication after
/// recomposition.
template <class SR>
GLn<SR> gln_compose(const GLn<SR>& a, const GLn<SR>& b) {
    if (a.diag.size() != b.diag.size()) throw std::invalid_argument("gln_compose: size");
    std::size_t n = a.diag.size();
    GLn<SR> r{a.sr, std::vector<typename SR::Elem>(n, a.sr.zero()), a.perm * b.perm};
    Perm ainv = a.perm.inverse();
    for (std::size_t k = 0; k < n; ++k) r.diag[k] = a.sr.mul(a.diag[k], b.diag[ainv(k)]);
    return r;
}

template <class SR>
GLn<SR> gln_inverse(const GLn<SR>& a) {
    std::size_t n = a.diag.size();
    GLn<SR> r{a.sr, std::vector<typename SR::Elem>(n, a.sr.zero()), a.perm.inverse()};
    for (std::size_t k = 0; k < n; ++k) r.diag[r.perm(k)] = *a.sr.unit_inv(a.diag[k]);
    return r;
}

/// Structural inversion over zero-sum-free semirings with trivial idempotent
/// pairs: invertible iff generalized permutation with unit entries.
template <class SR>
std::optional<GLn<SR>> gln_decompose(const Matrix<SR>& a) {
    if (a.rows() != a.cols()) throw std::invalid_argument("gln_decompose: non-square");
    if (!a.sr().structural_gl())
        throw std::invalid_argument("gln_decompose: semiring does not qualify");
    std::size_t n = a.rows();
    std::vector<int> img(n, -1);
    std::vector<typename SR::Elem> diag(n, a.sr().zero());
    std::vector<bool> used(n, false);
    for (std::size_t j = 0; j < n; ++j) {
        int row = -1;
        for (std::size_t i = 0; i < n; ++i)
            if (!a.sr().is_zero(a.at(i, j))) {
                if (row >= 0) return std::nullopt;  // two nonzero entries in a column
                row = static_cast<int>(i);
            }
        if (row < 0 || used[row]) return std::nullopt;
        if (!a.sr().unit_inv(a.at(row, j))) return std::nullopt;
        used[row] = true;
        img[j] = row;
        diag[row] = a.at(row, j);
    }
    return GLn<SR>{a.sr(), std::move(diag), Perm(img)};
}

template <class SR>
std::optional<Matrix<SR>> invert_structural(const Matrix<SR>& a) {
    auto d = gln_decompose(a);
    if (!d) return std::nullopt;
    return gln_inverse(*d).recompose();
}

/// Exhaustive inverse search for finite scalar tables.
inline std::optional<Matrix<TableSR>> invert_bruteforce(const Matrix<TableSR>& a,
                                                        unsigned long cap = 1ul << 25) {
    if (a.rows() != a.cols()) throw std::invalid_argument("invert: non-square");
    std::size_t n = a.rows(), cells = n * n, base = a.sr().r->size;
    unsigned long total = 1;
    for (std::size_t i = 0; i < cells; ++i) {
        total *= base;
        if (total > cap) throw std::invalid_argument("invert: search budget exceeded");
    }
    for (unsigned long code = 0; code < total; ++code) {
        Matrix<TableSR> b(a.sr(), n, n);
        unsigned long c = code;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                b.at(i, j) = static_cast<int>(c % base);
                c /= base;
            }
        if ((a * b).is_identity() && (b * a).is_identity()) return b;
    }
    return std::nullopt;
}

}  // namespace tropbund
