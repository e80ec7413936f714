#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "ecurve/errors.hpp"

namespace ecurve {

/// Dense n-dimensional Euclidean vector (a grade-1 element). Used for signal
/// samples, their time/arc-length derivatives, and frame vectors. Component
/// units depend on context (V, V/s, ... or dimensionless for unit vectors).
class VecN {
public:
    VecN() = default;

    /// Zero vector of the given dimension (dim >= 2).
    explicit VecN(std::size_t dim) : c_(checked_dim(dim), 0.0) {}

    VecN(std::initializer_list<double> comps) : c_(comps) { checked_dim(c_.size()); }

    explicit VecN(std::vector<double> comps) : c_(std::move(comps)) { checked_dim(c_.size()); }

    std::size_t dim() const noexcept { return c_.size(); }

    double operator[](std::size_t i) const noexcept { return c_[i]; }
    double& operator[](std::size_t i) noexcept { return c_[i]; }

    const std::vector<double>& comps() const noexcept { return c_; }

    bool all_finite() const noexcept;

    VecN& operator+=(const VecN& rhs);
    VecN& operator-=(const VecN& rhs);
    VecN& operator*=(double s) noexcept;
    VecN& operator/=(double s) noexcept;

private:
    static std::size_t checked_dim(std::size_t dim);
    std::vector<double> c_;
};

VecN operator+(VecN lhs, const VecN& rhs);
VecN operator-(VecN lhs, const VecN& rhs);
VecN operator-(VecN v);
VecN operator*(double s, VecN v);
VecN operator*(VecN v, double s);
VecN operator/(VecN v, double s);

/// Dense antisymmetric grade-2 element over the n-dimensional basis. Only the
/// i<j components are stored, in canonical lexicographic order
/// (1,2),(1,3),...,(1,n),(2,3),...,(n-1,n); the j>i value is the negation by
/// definition. Angular-velocity bivectors carry rad/s components.
class BivecN {
public:
    BivecN() = default;

    /// Zero bivector over an n-dimensional base space (n >= 2).
    explicit BivecN(std::size_t dim);

    std::size_t dim() const noexcept { return n_; }

    /// Number of stored components: n(n-1)/2.
    std::size_t size() const noexcept { return c_.size(); }

    static std::size_t pair_count(std::size_t dim) noexcept { return dim * (dim - 1) / 2; }

    /// Storage index of the (i,j) component, 0-based, i < j < dim.
    std::size_t pair_index(std::size_t i, std::size_t j) const noexcept {
        return i * n_ - i * (i + 1) / 2 + (j - i - 1);
    }

    /// Inverse of pair_index: the (i,j) basis pair of storage slot idx.
    std::pair<std::size_t, std::size_t> pair_at(std::size_t idx) const noexcept;

    double operator[](std::size_t idx) const noexcept { return c_[idx]; }
    double& operator[](std::size_t idx) noexcept { return c_[idx]; }

    /// Component B_ij for any i != j via the antisymmetric extension; 0 for i == j.
    double comp(std::size_t i, std::size_t j) const noexcept;

    /// Mutable access to a stored (i<j) component.
    double& at_pair(std::size_t i, std::size_t j) noexcept { return c_[pair_index(i, j)]; }

    const std::vector<double>& comps() const noexcept { return c_; }

    bool all_finite() const noexcept;

    BivecN& operator+=(const BivecN& rhs);
    BivecN& operator-=(const BivecN& rhs);
    BivecN& operator*=(double s) noexcept;
    BivecN& operator/=(double s) noexcept;

private:
    std::size_t n_ = 0;
    std::vector<double> c_;
};

BivecN operator+(BivecN lhs, const BivecN& rhs);
BivecN operator-(BivecN lhs, const BivecN& rhs);
BivecN operator-(BivecN b);
BivecN operator*(double s, BivecN b);
BivecN operator*(BivecN b, double s);
BivecN operator/(BivecN b, double s);

/// Euclidean inner product a.b = sum_i a_i b_i. Symmetric and bilinear.
/// Throws DimensionError on mismatched dimensions.
double dot(const VecN& a, const VecN& b);

/// Outer (wedge) product: (a ^ b)_ij = a_i b_j - a_j b_i for i < j.
/// Antisymmetric: wedge(a,b) == -wedge(b,a); wedge(a,a) == 0.
BivecN wedge(const VecN& a, const VecN& b);

/// Left contraction of a vector onto a bivector:
/// (a |_ B)_k = sum_i a_i B_ik (antisymmetric extension for i > k).
/// Satisfies a |_ (x ^ y) = (a.x) y - (a.y) x.
VecN left_contract(const VecN& a, const BivecN& B);

/// Euclidean norms. For B = k e1^e2 with orthonormal e1,e2, norm_bivec(B) = |k|.
double norm_vec(const VecN& a);
double norm_bivec(const BivecN& B);

/// a / ||a||. Throws RegularityError if the norm is zero.
VecN normalized(const VecN& a);

/// Human-readable basis label for stored slot idx: "e12", "e13", ... (1-based
/// indices, underscore-separated above nine dimensions: "e10_12").
std::string bivec_basis_label(const BivecN& B, std::size_t idx);

} // namespace ecurve
