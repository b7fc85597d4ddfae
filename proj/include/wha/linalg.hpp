#pragma once

// Dense vectors, matrices and small tensors over Scalar, with exact elimination.

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include "wha/scalar.hpp"

namespace wha {

class Vec {
public:
    Vec() = default;
    explicit Vec(std::size_t n) : v_(n) {}
    Vec(std::initializer_list<Scalar> xs) : v_(xs) {}
    explicit Vec(std::vector<Scalar> xs) : v_(std::move(xs)) {}

    static Vec basis(std::size_t n, std::size_t i) {
        Vec v(n);
        v[i] = 1;
        return v;
    }

    std::size_t size() const { return v_.size(); }
    Scalar& operator[](std::size_t i) { return v_[i]; }
    const Scalar& operator[](std::size_t i) const { return v_[i]; }
    const std::vector<Scalar>& entries() const { return v_; }
    auto begin() const { return v_.begin(); }
    auto end() const { return v_.end(); }

    bool is_zero() const {
        return std::all_of(v_.begin(), v_.end(), [](const Scalar& s) { return s.is_zero(); });
    }

    Vec& operator+=(const Vec& o) {
        check(o);
        for (std::size_t i = 0; i < size(); ++i) v_[i] += o[i];
        return *this;
    }
    Vec& operator-=(const Vec& o) {
        check(o);
        for (std::size_t i = 0; i < size(); ++i) v_[i] -= o[i];
        return *this;
    }
    friend Vec operator+(Vec a, const Vec& b) { return a += b; }
    friend Vec operator-(Vec a, const Vec& b) { return a -= b; }
    friend Vec operator-(Vec a) {
        for (auto& x : a.v_) x = -x;
        return a;
    }
    friend Vec operator*(const Scalar& s, Vec a) {
        for (auto& x : a.v_) x = s * x;
        return a;
    }
    friend bool operator==(const Vec& a, const Vec& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Vec& a, const Vec& b) { return !(a == b); }

private:
    void check(const Vec& o) const {
        if (o.size() != size()) throw DimensionMismatch("vector sizes differ");
    }
    std::vector<Scalar> v_;
};

class Mat {
public:
    Mat() = default;
    Mat(std::size_t rows, std::size_t cols) : r_(rows), c_(cols), a_(rows * cols) {}
    Mat(std::initializer_list<std::initializer_list<Scalar>> rows) {
        r_ = rows.size();
        c_ = r_ ? rows.begin()->size() : 0;
        for (const auto& row : rows) {
            if (row.size() != c_) throw DimensionMismatch("ragged matrix literal");
            a_.insert(a_.end(), row.begin(), row.end());
        }
    }

    static Mat identity(std::size_t n) {
        Mat m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }

    std::size_t rows() const { return r_; }
    std::size_t cols() const { return c_; }
    bool square() const { return r_ == c_; }
    Scalar& operator()(std::size_t i, std::size_t j) { return a_[i * c_ + j]; }
    const Scalar& operator()(std::size_t i, std::size_t j) const { return a_[i * c_ + j]; }

    Mat transpose() const {
        Mat t(c_, r_);
        for (std::size_t i = 0; i < r_; ++i)
            for (std::size_t j = 0; j < c_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    Vec column(std::size_t j) const {
        Vec v(r_);
        for (std::size_t i = 0; i < r_; ++i) v[i] = (*this)(i, j);
        return v;
    }

    friend Mat operator*(const Mat& a, const Mat& b) {
        if (a.c_ != b.r_) throw DimensionMismatch("matrix product shape");
        Mat p(a.r_, b.c_);
        for (std::size_t i = 0; i < a.r_; ++i)
            for (std::size_t k = 0; k < a.c_; ++k) {
                const Scalar& x = a(i, k);
                if (x.is_zero()) continue;
                for (std::size_t j = 0; j < b.c_; ++j) p(i, j) += x * b(k, j);
            }
        return p;
    }
    friend Vec operator*(const Mat& a, const Vec& v) {
        if (a.c_ != v.size()) throw DimensionMismatch("matrix-vector shape");
        Vec out(a.r_);
        for (std::size_t i = 0; i < a.r_; ++i)
            for (std::size_t k = 0; k < a.c_; ++k)
                if (!v[k].is_zero()) out[i] += a(i, k) * v[k];
        return out;
    }
    friend Mat operator+(Mat a, const Mat& b) {
        a.check_same(b);
        for (std::size_t i = 0; i < a.a_.size(); ++i) a.a_[i] += b.a_[i];
        return a;
    }
    friend Mat operator-(Mat a, const Mat& b) {
        a.check_same(b);
        for (std::size_t i = 0; i < a.a_.size(); ++i) a.a_[i] -= b.a_[i];
        return a;
    }
    friend Mat operator*(const Scalar& s, Mat a) {
        for (auto& x : a.a_) x = s * x;
        return a;
    }
    friend bool operator==(const Mat& a, const Mat& b) { return a.r_ == b.r_ && a.c_ == b.c_ && a.a_ == b.a_; }
    friend bool operator!=(const Mat& a, const Mat& b) { return !(a == b); }

    Scalar trace() const {
        if (!square()) throw DimensionMismatch("trace of non-square matrix");
        Scalar t;
        for (std::size_t i = 0; i < r_; ++i) t += (*this)(i, i);
        return t;
    }

    /// Stable text key, used for deduplication.
    std::string key() const {
        std::string s = std::to_string(r_) + "x" + std::to_string(c_) + ":";
        for (const auto& x : a_) s += x.to_string() + ";";
        return s;
    }

private:
    void check_same(const Mat& o) const {
        if (o.r_ != r_ || o.c_ != c_) throw DimensionMismatch("matrix shapes differ");
    }
    std::size_t r_ = 0, c_ = 0;
    std::vector<Scalar> a_;
};

/// Element of V (x) V: entry (i,j) is the coefficient of e_i (x) e_j.
class Tensor2 {
public:
    Tensor2() = default;
    explicit Tensor2(std::size_t n) : n_(n), a_(n * n) {}
    std::size_t dim() const { return n_; }
    Scalar& operator()(std::size_t i, std::size_t j) { return a_[i * n_ + j]; }
    const Scalar& operator()(std::size_t i, std::size_t j) const { return a_[i * n_ + j]; }
    bool is_zero() const {
        return std::all_of(a_.begin(), a_.end(), [](const Scalar& s) { return s.is_zero(); });
    }
    Tensor2& operator+=(const Tensor2& o) {
        check(o);
        for (std::size_t i = 0; i < a_.size(); ++i) a_[i] += o.a_[i];
        return *this;
    }
    Tensor2& operator-=(const Tensor2& o) {
        check(o);
        for (std::size_t i = 0; i < a_.size(); ++i) a_[i] -= o.a_[i];
        return *this;
    }
    friend Tensor2 operator+(Tensor2 a, const Tensor2& b) { return a += b; }
    friend Tensor2 operator-(Tensor2 a, const Tensor2& b) { return a -= b; }
    friend Tensor2 operator*(const Scalar& s, Tensor2 a) {
        for (auto& x : a.a_) x = s * x;
        return a;
    }
    friend bool operator==(const Tensor2& a, const Tensor2& b) { return a.n_ == b.n_ && a.a_ == b.a_; }

    Mat as_matrix() const {
        Mat m(n_, n_);
        for (std::size_t i = 0; i < n_; ++i)
            for (std::size_t j = 0; j < n_; ++j) m(i, j) = (*this)(i, j);
        return m;
    }

private:
    void check(const Tensor2& o) const {
        if (o.n_ != n_) throw DimensionMismatch("tensor dims differ");
    }
    std::size_t n_ = 0;
    std::vector<Scalar> a_;
};

/// Three-index array; holds C_{a,b}^c as (a,b,c), D_k^{i,j} as (k,i,j), or elements of V(x)V(x)V.
class Tensor3 {
public:
    Tensor3() = default;
    explicit Tensor3(std::size_t n) : n_(n), a_(n * n * n) {}
    std::size_t dim() const { return n_; }
    Scalar& operator()(std::size_t a, std::size_t b, std::size_t c) { return a_[(a * n_ + b) * n_ + c]; }
    const Scalar& operator()(std::size_t a, std::size_t b, std::size_t c) const { return a_[(a * n_ + b) * n_ + c]; }
    bool is_zero() const {
        return std::all_of(a_.begin(), a_.end(), [](const Scalar& s) { return s.is_zero(); });
    }
    Tensor3& operator-=(const Tensor3& o) {
        if (o.n_ != n_) throw DimensionMismatch("tensor dims differ");
        for (std::size_t i = 0; i < a_.size(); ++i) a_[i] -= o.a_[i];
        return *this;
    }
    friend Tensor3 operator-(Tensor3 a, const Tensor3& b) { return a -= b; }
    friend bool operator==(const Tensor3& a, const Tensor3& b) { return a.n_ == b.n_ && a.a_ == b.a_; }

private:
    std::size_t n_ = 0;
    std::vector<Scalar> a_;
};

inline Tensor2 outer(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw DimensionMismatch("outer product of different sizes");
    Tensor2 t(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.size(); ++j) t(i, j) = a[i] * b[j];
    }
    return t;
}

namespace detail {

// Row echelon form in place; returns rank. Optionally tracks the pivot columns.
inline std::size_t row_reduce(Mat& m, std::vector<std::size_t>* pivots = nullptr) {
    std::size_t rank = 0;
    for (std::size_t c = 0; c < m.cols() && rank < m.rows(); ++c) {
        std::size_t p = rank;
        while (p < m.rows() && m(p, c).is_zero()) ++p;
        if (p == m.rows()) continue;
        if (p != rank)
            for (std::size_t k = 0; k < m.cols(); ++k) std::swap(m(p, k), m(rank, k));
        Scalar inv = m(rank, c).inverse();
        for (std::size_t k = c; k < m.cols(); ++k) m(rank, k) *= inv;
        for (std::size_t r = 0; r < m.rows(); ++r) {
            if (r == rank || m(r, c).is_zero()) continue;
            Scalar f = m(r, c);
            for (std::size_t k = c; k < m.cols(); ++k)
                if (!m(rank, k).is_zero()) m(r, k) -= f * m(rank, k);
        }
        if (pivots) pivots->push_back(c);
        ++rank;
    }
    return rank;
}

}  // namespace detail

inline std::size_t rank(Mat m) { return detail::row_reduce(m); }

inline std::size_t kernel_dim(const Mat& m) { return m.cols() - rank(m); }

inline Mat inverse(const Mat& m) {
    if (!m.square()) throw DimensionMismatch("inverse of non-square matrix");
    const std::size_t n = m.rows();
    Mat aug(n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
        aug(i, n + i) = 1;
    }
    std::vector<std::size_t> piv;
    detail::row_reduce(aug, &piv);
    if (piv.size() < n || piv[n - 1] != n - 1) throw SingularMatrix();
    Mat inv(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
    return inv;
}

inline bool invertible(const Mat& m) { return m.square() && rank(m) == m.rows(); }

inline Scalar determinant(Mat m) {
    if (!m.square()) throw DimensionMismatch("determinant of non-square matrix");
    const std::size_t n = m.rows();
    Scalar det(1);
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && m(p, c).is_zero()) ++p;
        if (p == n) return Scalar(0);
        if (p != c) {
            for (std::size_t k = 0; k < n; ++k) std::swap(m(p, k), m(c, k));
            det = -det;
        }
        det *= m(c, c);
        Scalar inv = m(c, c).inverse();
        for (std::size_t r = c + 1; r < n; ++r) {
            if (m(r, c).is_zero()) continue;
            Scalar f = m(r, c) * inv;
            for (std::size_t k = c; k < n; ++k) m(r, k) -= f * m(c, k);
        }
    }
    return det;
}

/// det(x I - m), coefficient of x^i at index i (Faddeev-LeVerrier).
inline std::vector<Scalar> characteristic_polynomial(const Mat& a) {
    if (!a.square()) throw DimensionMismatch("charpoly of non-square matrix");
    const std::size_t n = a.rows();
    std::vector<Scalar> c(n + 1);
    c[n] = 1;
    Mat mk(n, n);
    for (std::size_t k = 1; k <= n; ++k) {
        Mat next = a * mk;
        for (std::size_t i = 0; i < n; ++i) next(i, i) += c[n - k + 1];
        mk = std::move(next);
        c[n - k] = -(a * mk).trace() / Scalar(static_cast<long>(k));
    }
    return c;
}

inline std::size_t tensor2_rank(const Tensor2& t) { return rank(t.as_matrix()); }

}  // namespace wha
