#include "ecurve/ga.hpp"

#include <cmath>
#include <string>

namespace ecurve {

namespace {

void require_same_dim(std::size_t a, std::size_t b, const char* what) {
    if (a != b) {
        throw DimensionError(std::string(what) + ": dimension mismatch (" +
                             std::to_string(a) + " vs " + std::to_string(b) + ")");
    }
}

} // namespace

std::size_t VecN::checked_dim(std::size_t dim) {
    if (dim < 2) {
        throw DimensionError("VecN requires dimension >= 2, got " + std::to_string(dim));
    }
    return dim;
}

bool VecN::all_finite() const noexcept {
    for (double x : c_) {
        if (!std::isfinite(x)) return false;
    }
    return true;
}

VecN& VecN::operator+=(const VecN& rhs) {
    require_same_dim(dim(), rhs.dim(), "VecN +");
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += rhs.c_[i];
    return *this;
}

VecN& VecN::operator-=(const VecN& rhs) {
    require_same_dim(dim(), rhs.dim(), "VecN -");
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= rhs.c_[i];
    return *this;
}

VecN& VecN::operator*=(double s) noexcept {
    for (double& x : c_) x *= s;
    return *this;
}

VecN& VecN::operator/=(double s) noexcept {
    for (double& x : c_) x /= s;
    return *this;
}

VecN operator+(VecN lhs, const VecN& rhs) { return lhs += rhs; }
VecN operator-(VecN lhs, const VecN& rhs) { return lhs -= rhs; }

VecN operator-(VecN v) {
    for (std::size_t i = 0; i < v.dim(); ++i) v[i] = -v[i];
    return v;
}

VecN operator*(double s, VecN v) { return v *= s; }
VecN operator*(VecN v, double s) { return v *= s; }
VecN operator/(VecN v, double s) { return v /= s; }

BivecN::BivecN(std::size_t dim) : n_(dim), c_(pair_count(dim), 0.0) {
    if (dim < 2) {
        throw DimensionError("BivecN requires base dimension >= 2, got " + std::to_string(dim));
    }
}

std::pair<std::size_t, std::size_t> BivecN::pair_at(std::size_t idx) const noexcept {
    // Walk the row blocks: row i holds (n-1-i) pairs (i,i+1)..(i,n-1).
    std::size_t i = 0;
    std::size_t remaining = idx;
    while (remaining >= n_ - 1 - i) {
        remaining -= n_ - 1 - i;
        ++i;
    }
    return {i, i + 1 + remaining};
}

double BivecN::comp(std::size_t i, std::size_t j) const noexcept {
    if (i == j) return 0.0;
    if (i < j) return c_[pair_index(i, j)];
    return -c_[pair_index(j, i)];
}

bool BivecN::all_finite() const noexcept {
    for (double x : c_) {
        if (!std::isfinite(x)) return false;
    }
    return true;
}

BivecN& BivecN::operator+=(const BivecN& rhs) {
    require_same_dim(n_, rhs.n_, "BivecN +");
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += rhs.c_[i];
    return *this;
}

BivecN& BivecN::operator-=(const BivecN& rhs) {
    require_same_dim(n_, rhs.n_, "BivecN -");
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= rhs.c_[i];
    return *this;
}

BivecN& BivecN::operator*=(double s) noexcept {
    for (double& x : c_) x *= s;
    return *this;
}

BivecN& BivecN::operator/=(double s) noexcept {
    for (double& x : c_) x /= s;
    return *this;
}

BivecN operator+(BivecN lhs, const BivecN& rhs) { return lhs += rhs; }
BivecN operator-(BivecN lhs, const BivecN& rhs) { return lhs -= rhs; }

BivecN operator-(BivecN b) {
    for (std::size_t i = 0; i < b.size(); ++i) b[i] = -b[i];
    return b;
}

BivecN operator*(double s, BivecN b) { return b *= s; }
BivecN operator*(BivecN b, double s) { return b *= s; }
BivecN operator/(BivecN b, double s) { return b /= s; }

double dot(const VecN& a, const VecN& b) {
    require_same_dim(a.dim(), b.dim(), "dot");
    double acc = 0.0;
    for (std::size_t i = 0; i < a.dim(); ++i) acc += a[i] * b[i];
    return acc;
}

BivecN wedge(const VecN& a, const VecN& b) {
    require_same_dim(a.dim(), b.dim(), "wedge");
    const std::size_t n = a.dim();
    BivecN out(n);
    std::size_t idx = 0;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            out[idx++] = a[i] * b[j] - a[j] * b[i];
        }
    }
    return out;
}

VecN left_contract(const VecN& a, const BivecN& B) {
    require_same_dim(a.dim(), B.dim(), "left_contract");
    const std::size_t n = a.dim();
    VecN out(n);
    // (a |_ B)_k = sum_i a_i B_ik; accumulate each stored (i,j) pair into both
    // k = j (with +B_ij) and k = i (with -B_ij, the antisymmetric extension).
    std::size_t idx = 0;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            const double bij = B[idx++];
            out[j] += a[i] * bij;
            out[i] -= a[j] * bij;
        }
    }
    return out;
}

double norm_vec(const VecN& a) {
    double acc = 0.0;
    for (std::size_t i = 0; i < a.dim(); ++i) acc += a[i] * a[i];
    return std::sqrt(acc);
}

double norm_bivec(const BivecN& B) {
    double acc = 0.0;
    for (std::size_t i = 0; i < B.size(); ++i) acc += B[i] * B[i];
    return std::sqrt(acc);
}

VecN normalized(const VecN& a) {
    const double n = norm_vec(a);
    if (n == 0.0) {
        throw RegularityError("cannot normalize a zero vector", 0.0);
    }
    return a / n;
}

std::string bivec_basis_label(const BivecN& B, std::size_t idx) {
    const auto [i, j] = B.pair_at(idx);
    if (B.dim() <= 9) {
        return "e" + std::to_string(i + 1) + std::to_string(j + 1);
    }
    return "e" + std::to_string(i + 1) + "_" + std::to_string(j + 1);
}

} // namespace ecurve
