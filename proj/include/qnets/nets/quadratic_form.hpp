#pragma once

#include <algorithm>
#include <array>
#include <sstream>
#include <utility>
#include <vector>

#include "qnets/errors.hpp"
#include "qnets/exactalg/matrix.hpp"

namespace qnets {

/// Quadric in P^N given by its symmetric (N+1)x(N+1) Gram matrix.
template <class F>
class QuadraticForm {
public:
    using Element = typename F::Element;

    QuadraticForm(F field, Matrix<Element> gram) : field_(std::move(field)), gram_(std::move(gram)) {
        if (!gram_.square() || gram_.rows() < 2) throw InvalidInput("Gram matrix must be square of size >= 2");
        if (!gram_.is_symmetric()) throw InvalidInput("Gram matrix is not symmetric");
    }

    const F& field() const { return field_; }
    const Matrix<Element>& gram() const { return gram_; }
    std::size_t ambient_dim() const { return gram_.rows() - 1; }
    std::size_t size() const { return gram_.rows(); }
    const Element& operator()(std::size_t i, std::size_t j) const { return gram_(i, j); }

    Element evaluate(const std::vector<Element>& x) const {
        Element acc = field_.zero();
        for (std::size_t i = 0; i < size(); ++i) {
            if (is_zero(x[i])) continue;
            Element row = field_.zero();
            for (std::size_t j = 0; j < size(); ++j) row += gram_(i, j) * x[j];
            acc += x[i] * row;
        }
        return acc;
    }

    /// Bilinear form x^T G y.
    Element pair(const std::vector<Element>& x, const std::vector<Element>& y) const {
        return dot(x, mat_vec(field_, gram_, y));
    }

    std::vector<Element> gradient(const std::vector<Element>& x) const {
        auto g = mat_vec(field_, gram_, x);
        for (auto& v : g) v += Element(v);
        return g;
    }

    QuadraticForm congruent(const Matrix<Element>& b) const { return QuadraticForm(field_, b.transposed() * gram_ * b); }

    friend bool operator==(const QuadraticForm& a, const QuadraticForm& b) { return a.gram_ == b.gram_; }

private:
    Element dot(const std::vector<Element>& a, const std::vector<Element>& b) const {
        Element acc = field_.zero();
        for (std::size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i];
        return acc;
    }

    F field_;
    Matrix<Element> gram_;
};

/// Ordered triple (Q1, Q2, Q3); the order fixes the l-coordinates on the net plane.
template <class F>
class NetOfQuadrics {
public:
    using Element = typename F::Element;

    NetOfQuadrics(QuadraticForm<F> q1, QuadraticForm<F> q2, QuadraticForm<F> q3) : q_{std::move(q1), std::move(q2), std::move(q3)} {
        if (q_[0].size() != q_[1].size() || q_[0].size() != q_[2].size())
            throw InvalidInput("quadrics of a net must live on the same space");
    }

    const F& field() const { return q_[0].field(); }
    const QuadraticForm<F>& operator[](std::size_t i) const { return q_.at(i); }
    const std::array<QuadraticForm<F>, 3>& quadrics() const { return q_; }
    std::size_t ambient_dim() const { return q_[0].ambient_dim(); }
    std::size_t size() const { return q_[0].size(); }

    /// l1 G1 + l2 G2 + l3 G3.
    Matrix<Element> pencil(const Element& l1, const Element& l2, const Element& l3) const {
        return q_[0].gram().scaled(l1) + q_[1].gram().scaled(l2) + q_[2].gram().scaled(l3);
    }

    NetOfQuadrics congruent(const Matrix<Element>& b) const {
        return {q_[0].congruent(b), q_[1].congruent(b), q_[2].congruent(b)};
    }

    /// Net with members Q'_i = sum_j A_ij Q_j.
    NetOfQuadrics recombined(const Matrix<Element>& a) const {
        std::vector<QuadraticForm<F>> out;
        for (std::size_t i = 0; i < 3; ++i)
            out.emplace_back(field(), pencil(a(i, 0), a(i, 1), a(i, 2)));
        return {out[0], out[1], out[2]};
    }

    friend bool operator==(const NetOfQuadrics& a, const NetOfQuadrics& b) { return a.q_ == b.q_; }

private:
    std::array<QuadraticForm<F>, 3> q_;
};

/// Linear subspace of F^n stored by a basis in reduced row echelon form, so
/// equal subspaces compare equal.
template <class F>
class Subspace {
public:
    using Element = typename F::Element;
    using Vector = std::vector<Element>;

    Subspace(F field, std::size_t ambient) : field_(std::move(field)), ambient_(ambient) {}

    /// Throws InvalidInput if the vectors are linearly dependent.
    static Subspace from_basis(const F& field, std::size_t ambient, const std::vector<Vector>& vectors) {
        Subspace s = span(field, ambient, vectors);
        if (s.dim() != vectors.size()) throw InvalidInput("subspace basis vectors are linearly dependent");
        return s;
    }

    static Subspace span(const F& field, std::size_t ambient, const std::vector<Vector>& vectors) {
        Subspace s(field, ambient);
        if (vectors.empty()) return s;
        Matrix<Element> m(vectors.size(), ambient, field.zero());
        for (std::size_t i = 0; i < vectors.size(); ++i) {
            if (vectors[i].size() != ambient) throw InvalidInput("vector length does not match ambient dimension");
            for (std::size_t j = 0; j < ambient; ++j) m(i, j) = vectors[i][j];
        }
        auto ech = rref(field, std::move(m));
        for (std::size_t i = 0; i < ech.rank(); ++i) s.basis_.push_back(ech.reduced.row(i));
        return s;
    }

    /// span(e_0, ..., e_{k-1}).
    static Subspace leading_coordinates(const F& field, std::size_t ambient, std::size_t k) {
        std::vector<Vector> vs;
        for (std::size_t i = 0; i < k; ++i) {
            Vector v(ambient, field.zero());
            v[i] = field.one();
            vs.push_back(std::move(v));
        }
        return from_basis(field, ambient, vs);
    }

    const F& field() const { return field_; }
    std::size_t ambient_dim() const { return ambient_; }
    std::size_t dim() const { return basis_.size(); }
    bool is_zero() const { return basis_.empty(); }
    const std::vector<Vector>& basis() const { return basis_; }

    bool contains(const Vector& v) const {
        auto vs = basis_;
        vs.push_back(v);
        return span(field_, ambient_, vs).dim() == dim();
    }

    bool contains(const Subspace& other) const {
        return std::all_of(other.basis_.begin(), other.basis_.end(), [&](const Vector& v) { return contains(v); });
    }

    /// Vector with the given coordinates in this basis.
    Vector combine(const std::vector<Element>& coords) const {
        Vector out(ambient_, field_.zero());
        for (std::size_t i = 0; i < basis_.size(); ++i)
            for (std::size_t j = 0; j < ambient_; ++j) out[j] += coords[i] * basis_[i][j];
        return out;
    }

    friend bool operator==(const Subspace& a, const Subspace& b) {
        return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
    }

private:
    F field_;
    std::size_t ambient_;
    std::vector<Vector> basis_;
};

/// Null space of the Gram matrix; P(ker) is the singular locus of the quadric.
template <class F>
Subspace<F> kernel(const QuadraticForm<F>& q) {
    return Subspace<F>::span(q.field(), q.size(), null_space(q.field(), q.gram()));
}

/// Gram matrix of q restricted to the subspace k (in k's echelon basis).
template <class F>
Matrix<typename F::Element> restricted_gram(const QuadraticForm<F>& q, const Subspace<F>& k) {
    const auto& b = k.basis();
    Matrix<typename F::Element> r(b.size(), b.size(), q.field().zero());
    for (std::size_t i = 0; i < b.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r(i, j) = q.pair(b[i], b[j]);
    return r;
}

/// Multiplicity of q along the center P(k): 2 if k lies in ker q, 1 if q
/// vanishes on k without k lying in ker q, 0 otherwise. The strict transform
/// of q under the blowup of P(k) then has bidegree (m, 2-m).
template <class F>
int vanishing_order_along(const QuadraticForm<F>& q, const Subspace<F>& k) {
    if (k.is_zero()) throw EmptyCenter();
    bool in_kernel = true;
    for (const auto& v : k.basis())
        for (const auto& x : mat_vec(q.field(), q.gram(), v))
            if (!is_zero(x)) in_kernel = false;
    if (in_kernel) return 2;
    const auto r = restricted_gram(q, k);
    for (const auto& x : r.data())
        if (!is_zero(x)) return 0;
    return 1;
}

/// Smallest kernel dimension a quadric on F^n that vanishes on a k-dimensional
/// subspace can have: such a form has rank at most 2(n - k).
inline std::size_t forced_kernel_dim(std::size_t n, std::size_t k) { return 2 * k > n ? 2 * k - n : 0; }

/// Common kernel K of the net. Nonzero kernels must coincide; the one
/// tolerated exception is a quadric that contains P(K) and whose kernel is the
/// minimal one forced by containing it (it then lies inside K). A single
/// nonzero kernel is trivially shared.
template <class F>
Subspace<F> check_shared_kernel(const NetOfQuadrics<F>& net) {
    std::array<Subspace<F>, 3> ks{kernel(net[0]), kernel(net[1]), kernel(net[2])};
    std::size_t largest = 0;
    for (std::size_t i = 1; i < 3; ++i)
        if (ks[i].dim() > ks[largest].dim()) largest = i;
    const Subspace<F>& k = ks[largest];
    if (k.is_zero()) return k;
    for (std::size_t i = 0; i < 3; ++i) {
        if (ks[i].is_zero() || ks[i] == k) continue;
        const bool forced = k.contains(ks[i]) && vanishing_order_along(net[i], k) == 1 &&
                            ks[i].dim() == forced_kernel_dim(net.size(), k.dim());
        if (forced) continue;
        std::ostringstream os;
        os << "kernels do not coincide: dim ker Q" << (largest + 1) << " = " << k.dim() << ", dim ker Q" << (i + 1)
           << " = " << ks[i].dim();
        throw AssumptionViolated(os.str());
    }
    return k;
}

}  // namespace qnets
