#pragma once

// Dense matrices over an exact ring plus the linear algebra the toolkit needs:
// fraction-free (Bareiss) determinants, reduced row echelon forms, ranks and
// null spaces.

#include <algorithm>
#include <cstddef>
#include <utility>
#include <vector>

#include "qnets/exactalg/field.hpp"

namespace qnets {

template <class T>
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols, const T& fill) : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

    static Matrix identity(std::size_t n, const T& zero, const T& one) {
        Matrix m(n, n, zero);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = one;
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool square() const { return rows_ == cols_; }

    T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    std::vector<T> row(std::size_t r) const {
        return std::vector<T>(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                              data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
    }

    void swap_rows(std::size_t a, std::size_t b) {
        if (a == b) return;
        for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
    }

    Matrix transposed() const {
        if (rows_ == 0 || cols_ == 0) return Matrix(cols_, rows_, T{});
        Matrix t(cols_, rows_, data_.front());
        for (std::size_t r = 0; r < rows_; ++r)
            for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
        return t;
    }

    bool is_symmetric() const {
        if (!square()) return false;
        for (std::size_t r = 0; r < rows_; ++r)
            for (std::size_t c = r + 1; c < cols_; ++c)
                if (!((*this)(r, c) == (*this)(c, r))) return false;
        return true;
    }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        Matrix out(a.rows_, b.cols_, a.data_.empty() ? T{} : a.data_.front() - a.data_.front());
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const T& aik = a(i, k);
                if (is_zero(aik)) continue;
                for (std::size_t j = 0; j < b.cols_; ++j) out(i, j) += aik * b(k, j);
            }
        return out;
    }

    friend Matrix operator+(Matrix a, const Matrix& b) {
        for (std::size_t i = 0; i < a.data_.size(); ++i) a.data_[i] += b.data_[i];
        return a;
    }

    Matrix scaled(const T& s) const {
        Matrix out = *this;
        for (auto& x : out.data_) x *= s;
        return out;
    }

    const std::vector<T>& data() const { return data_; }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<T> data_;
};

inline BigInt exact_divide(const BigInt& a, const BigInt& b) {
    BigInt q;
    mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}
inline Fp exact_divide(const Fp& a, const Fp& b) { return a / b; }

/// Bareiss elimination over an integral domain with exact division.
/// `one` is the ring's unit; the matrix must be square.
template <class R>
R bareiss_determinant(Matrix<R> m, const R& one) {
    const std::size_t n = m.rows();
    if (n == 0) return one;
    R prev = one;
    bool negate = false;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (is_zero(m(k, k))) {
            std::size_t swap = k + 1;
            while (swap < n && is_zero(m(swap, k))) ++swap;
            if (swap == n) return one - one;
            m.swap_rows(k, swap);
            negate = !negate;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                R t = m(k, k) * m(i, j) - m(i, k) * m(k, j);
                m(i, j) = exact_divide(t, prev);
            }
        }
        prev = m(k, k);
    }
    R det = m(n - 1, n - 1);
    return negate ? R(-det) : det;
}

/// Exact determinant. Rational input is scaled row-wise to integers so the
/// elimination runs fraction-free over Z.
inline Rational det_fraction_free(const Matrix<Rational>& m) {
    const std::size_t n = m.rows();
    if (n == 0) return Rational(1);
    Matrix<BigInt> z(n, n, BigInt(0));
    BigInt scale = 1;
    for (std::size_t r = 0; r < n; ++r) {
        BigInt l = 1;
        for (std::size_t c = 0; c < n; ++c) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(r, c).get_den_mpz_t());
        for (std::size_t c = 0; c < n; ++c) z(r, c) = m(r, c).get_num() * (l / m(r, c).get_den());
        scale *= l;
    }
    Rational d(bareiss_determinant(std::move(z), BigInt(1)), scale);
    d.canonicalize();
    return d;
}

inline Fp det_fraction_free(const Matrix<Fp>& m) {
    if (m.rows() == 0) throw InvalidInput("empty F_p matrix has no modulus; use a field-aware overload");
    return bareiss_determinant(m, Fp(1, m(0, 0).modulus()));
}

template <class F>
typename F::Element determinant(const F& field, const Matrix<typename F::Element>& m) {
    if (m.rows() == 0) return field.one();
    return det_fraction_free(m);
}

/// Result of Gauss-Jordan elimination.
template <class T>
struct EchelonForm {
    Matrix<T> reduced;                 // reduced row echelon form
    std::vector<std::size_t> pivots;   // pivot column per nonzero row
    std::size_t rank() const { return pivots.size(); }
};

template <class F>
EchelonForm<typename F::Element> rref(const F& field, Matrix<typename F::Element> m) {
    using E = typename F::Element;
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t piv = r;
        while (piv < m.rows() && is_zero(m(piv, c))) ++piv;
        if (piv == m.rows()) continue;
        m.swap_rows(r, piv);
        E inv = field.one() / m(r, c);
        for (std::size_t j = c; j < m.cols(); ++j) m(r, j) *= inv;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == r || is_zero(m(i, c))) continue;
            E f = m(i, c);
            for (std::size_t j = c; j < m.cols(); ++j) m(i, j) -= f * m(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    return {std::move(m), std::move(pivots)};
}

template <class F>
std::size_t rank(const F& field, const Matrix<typename F::Element>& m) {
    return rref(field, m).rank();
}

/// Basis of the right null space {x : m x = 0}, one vector per free column.
template <class F>
std::vector<std::vector<typename F::Element>> null_space(const F& field, const Matrix<typename F::Element>& m) {
    auto ech = rref(field, m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto c : ech.pivots) is_pivot[c] = true;
    std::vector<std::vector<typename F::Element>> basis;
    for (std::size_t free = 0; free < m.cols(); ++free) {
        if (is_pivot[free]) continue;
        std::vector<typename F::Element> v(m.cols(), field.zero());
        v[free] = field.one();
        for (std::size_t i = 0; i < ech.pivots.size(); ++i) v[ech.pivots[i]] = -ech.reduced(i, free);
        basis.push_back(std::move(v));
    }
    return basis;
}

/// Inverse of a square matrix; nullopt if singular.
template <class F>
std::optional<Matrix<typename F::Element>> inverse(const F& field, const Matrix<typename F::Element>& m) {
    const std::size_t n = m.rows();
    Matrix<typename F::Element> aug(n, 2 * n, field.zero());
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
        aug(i, n + i) = field.one();
    }
    auto ech = rref(field, std::move(aug));
    if (ech.rank() < n || ech.pivots[n - 1] != n - 1) return std::nullopt;
    Matrix<typename F::Element> out(n, n, field.zero());
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) out(i, j) = ech.reduced(i, n + j);
    return out;
}

/// Solves the square system a x = b; nullopt if a is singular.
template <class F>
std::optional<std::vector<typename F::Element>> solve(const F& field, const Matrix<typename F::Element>& a,
                                                      const std::vector<typename F::Element>& b) {
    const std::size_t n = a.rows();
    Matrix<typename F::Element> aug(n, n + 1, field.zero());
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug(i, j) = a(i, j);
        aug(i, n) = b[i];
    }
    auto ech = rref(field, std::move(aug));
    if (ech.rank() < n || (n > 0 && ech.pivots[n - 1] != n - 1)) return std::nullopt;
    std::vector<typename F::Element> x(n, field.zero());
    for (std::size_t i = 0; i < n; ++i) x[i] = ech.reduced(i, n);
    return x;
}

template <class F>
std::vector<typename F::Element> mat_vec(const F& field, const Matrix<typename F::Element>& m,
                                         const std::vector<typename F::Element>& v) {
    std::vector<typename F::Element> out(m.rows(), field.zero());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) out[i] += m(i, j) * v[j];
    return out;
}

}  // namespace qnets
