#include "ecurve/spline.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <string>
#include <utility>

#include <Eigen/Dense>
#include <Eigen/Sparse>
#include <Eigen/SparseLU>

namespace ecurve {

namespace {

constexpr int kDeg = QuinticSpline::kDegree;

// Index of the knot span containing x: the last i with U[i] <= x < U[i+1],
// clamped to the valid basis range so end evaluations use the end spans.
std::size_t find_span(const std::vector<double>& U, std::size_t n_basis, double x) {
    if (x >= U[n_basis]) return n_basis - 1;
    if (x <= U[kDeg]) return kDeg;
    const auto it = std::upper_bound(U.begin(), U.end(), x);
    return static_cast<std::size_t>(it - U.begin()) - 1;
}

// Values and derivatives of the kDeg+1 basis functions that are nonzero on
// the span of x. ders[k][j] is the k-th derivative of basis span-kDeg+j.
// This is the standard triangular-table recurrence for B-spline bases
// (de Boor / NURBS-book DersBasisFuns).
struct BasisDers {
    std::size_t span;
    // rows: derivative order 0..nd; cols: local basis index 0..kDeg
    std::array<std::array<double, kDeg + 1>, kDeg + 1> d{};
};

BasisDers ders_basis(const std::vector<double>& U, std::size_t n_basis, double x, int nd) {
    BasisDers out;
    out.span = find_span(U, n_basis, x);
    const std::size_t span = out.span;
    nd = std::min(nd, kDeg);

    double ndu[kDeg + 1][kDeg + 1];
    double left[kDeg + 1], right[kDeg + 1];
    ndu[0][0] = 1.0;
    for (int j = 1; j <= kDeg; ++j) {
        left[j] = x - U[span + 1 - j];
        right[j] = U[span + j] - x;
        double saved = 0.0;
        for (int r = 0; r < j; ++r) {
            ndu[j][r] = right[r + 1] + left[j - r];
            const double temp = ndu[r][j - 1] / ndu[j][r];
            ndu[r][j] = saved + right[r + 1] * temp;
            saved = left[j - r] * temp;
        }
        ndu[j][j] = saved;
    }
    for (int j = 0; j <= kDeg; ++j) out.d[0][j] = ndu[j][kDeg];

    double a[2][kDeg + 1];
    for (int r = 0; r <= kDeg; ++r) {
        int s1 = 0, s2 = 1;
        a[0][0] = 1.0;
        for (int k = 1; k <= nd; ++k) {
            double dsum = 0.0;
            const int rk = r - k, pk = kDeg - k;
            if (r >= k) {
                a[s2][0] = a[s1][0] / ndu[pk + 1][rk];
                dsum = a[s2][0] * ndu[rk][pk];
            }
            const int j1 = (rk >= -1) ? 1 : -rk;
            const int j2 = (r - 1 <= pk) ? k - 1 : kDeg - r;
            for (int j = j1; j <= j2; ++j) {
                a[s2][j] = (a[s1][j] - a[s1][j - 1]) / ndu[pk + 1][rk + j];
                dsum += a[s2][j] * ndu[rk + j][pk];
            }
            if (r <= pk) {
                a[s2][k] = -a[s1][k - 1] / ndu[pk + 1][r];
                dsum += a[s2][k] * ndu[r][pk];
            }
            out.d[k][r] = dsum;
            std::swap(s1, s2);
        }
    }
    double fac = kDeg;
    for (int k = 1; k <= nd; ++k) {
        for (int j = 0; j <= kDeg; ++j) out.d[k][j] *= fac;
        fac *= kDeg - k;
    }
    return out;
}

// Clamped knot vector for the interpolation layout: interior knots are the
// sample times with three dropped at each end (a not-a-knot-like condition),
// making the collocation system square (n_basis == N).
std::vector<double> knots_interp(const std::vector<double>& t) {
    const std::size_t N = t.size();
    std::vector<double> U;
    U.reserve(N + 6);
    for (int i = 0; i <= kDeg; ++i) U.push_back(t.front());
    for (std::size_t i = 3; i + 3 < N; ++i) U.push_back(t[i]);
    for (int i = 0; i <= kDeg; ++i) U.push_back(t.back());
    return U;
}

// Penalized layout: every interior sample becomes a knot (n_basis == N + 4);
// the roughness penalty supplies the extra conditions.
std::vector<double> knots_smooth(const std::vector<double>& t) {
    const std::size_t N = t.size();
    std::vector<double> U;
    U.reserve(N + 10);
    for (int i = 0; i <= kDeg; ++i) U.push_back(t.front());
    for (std::size_t i = 1; i + 1 < N; ++i) U.push_back(t[i]);
    for (int i = 0; i <= kDeg; ++i) U.push_back(t.back());
    return U;
}

Eigen::SparseMatrix<double> collocation(const std::vector<double>& U, std::size_t n_basis,
                                        const std::vector<double>& t) {
    std::vector<Eigen::Triplet<double>> trips;
    trips.reserve(t.size() * (kDeg + 1));
    for (std::size_t r = 0; r < t.size(); ++r) {
        const BasisDers bd = ders_basis(U, n_basis, t[r], 0);
        for (int j = 0; j <= kDeg; ++j) {
            trips.emplace_back(static_cast<int>(r), static_cast<int>(bd.span - kDeg + j),
                               bd.d[0][j]);
        }
    }
    Eigen::SparseMatrix<double> B(static_cast<int>(t.size()), static_cast<int>(n_basis));
    B.setFromTriplets(trips.begin(), trips.end());
    return B;
}

// Gram matrix of third-derivative inner products, G_jk = int B_j''' B_k''' dt.
// Third derivatives of a quintic are quadratics, so 3-point Gauss-Legendre
// per knot span integrates the degree-4 products exactly.
Eigen::SparseMatrix<double> penalty_gram(const std::vector<double>& U, std::size_t n_basis) {
    static const double gx[3] = {-std::sqrt(3.0 / 5.0), 0.0, std::sqrt(3.0 / 5.0)};
    static const double gw[3] = {5.0 / 9.0, 8.0 / 9.0, 5.0 / 9.0};
    std::vector<Eigen::Triplet<double>> trips;
    for (std::size_t s = kDeg; s < n_basis; ++s) {
        const double a = U[s], b = U[s + 1];
        if (!(b > a)) continue;
        for (int q = 0; q < 3; ++q) {
            const double x = 0.5 * (a + b) + 0.5 * (b - a) * gx[q];
            const double w = 0.5 * (b - a) * gw[q];
            const BasisDers bd = ders_basis(U, n_basis, x, 3);
            for (int i = 0; i <= kDeg; ++i) {
                for (int j = 0; j <= kDeg; ++j) {
                    trips.emplace_back(static_cast<int>(bd.span - kDeg + i),
                                       static_cast<int>(bd.span - kDeg + j),
                                       w * bd.d[3][i] * bd.d[3][j]);
                }
            }
        }
    }
    Eigen::SparseMatrix<double> G(static_cast<int>(n_basis), static_cast<int>(n_basis));
    G.setFromTriplets(trips.begin(), trips.end());
    return G;
}

} // namespace

QuinticSpline::QuinticSpline(std::vector<double> knots, std::vector<double> coefs)
    : knots_(std::move(knots)), coefs_(std::move(coefs)) {
    if (knots_.size() != coefs_.size() + kDegree + 1) {
        throw DimensionError("QuinticSpline: knot/coefficient size mismatch");
    }
}

double QuinticSpline::eval(double x, int order) const {
    if (order < 0) throw UnsupportedError("QuinticSpline::eval: negative order");
    if (order > kDegree) return 0.0;
    const BasisDers bd = ders_basis(knots_, coefs_.size(), x, order);
    double acc = 0.0;
    for (int j = 0; j <= kDegree; ++j) {
        acc += bd.d[order][j] * coefs_[bd.span - kDegree + j];
    }
    return acc;
}

SplineCurve::SplineCurve(std::vector<QuinticSpline> phases, double t_lo, double t_hi)
    : phases_(std::move(phases)), lo_(t_lo), hi_(t_hi) {
    if (phases_.size() < 2) throw DimensionError("SplineCurve: needs >= 2 phases");
}

VecN SplineCurve::eval(double t, int order) const {
    if (order < 0 || order > max_order()) {
        throw UnsupportedError("SplineCurve: derivative order " + std::to_string(order) +
                               " unavailable (max 4)");
    }
    const double slack = 1e-9 * (hi_ - lo_);
    if (t < lo_ - slack || t > hi_ + slack) {
        throw DomainError("SplineCurve: t=" + std::to_string(t) +
                          " outside fitted domain [" + std::to_string(lo_) + ", " +
                          std::to_string(hi_) + "]");
    }
    VecN out(phases_.size());
    for (std::size_t i = 0; i < phases_.size(); ++i) out[i] = phases_[i].eval(t, order);
    return out;
}

SplineCurve fit_sampled(const SampledSignal& signal, double smoothing) {
    const std::vector<double>& t = signal.times;
    const std::size_t N = t.size();
    if (N < 8) {
        throw DataError("fit_sampled: needs at least 8 samples, got " + std::to_string(N));
    }
    if (signal.values.size() != N) {
        throw DataError("fit_sampled: times/values length mismatch");
    }
    for (std::size_t i = 1; i < N; ++i) {
        if (t[i] == t[i - 1]) {
            throw DataError("fit_sampled: duplicate time at sample " + std::to_string(i));
        }
        if (t[i] < t[i - 1]) {
            throw DataError("fit_sampled: times must be strictly increasing (sample " +
                            std::to_string(i) + ")");
        }
    }
    const std::size_t nph = signal.values.front().dim();
    for (const VecN& v : signal.values) {
        if (v.dim() != nph) throw DimensionError("fit_sampled: inconsistent sample dimension");
        if (!v.all_finite()) throw DataError("fit_sampled: non-finite sample value");
    }
    if (!(smoothing >= 0.0)) throw DataError("fit_sampled: smoothing must be >= 0");

    std::vector<double> knots;
    std::size_t n_basis;
    Eigen::MatrixXd coef;  // n_basis x nph

    if (smoothing == 0.0) {
        knots = knots_interp(t);
        n_basis = knots.size() - kDeg - 1;  // == N
        Eigen::SparseMatrix<double> B = collocation(knots, n_basis, t);
        B.makeCompressed();
        Eigen::SparseLU<Eigen::SparseMatrix<double>> lu(B);
        if (lu.info() != Eigen::Success) {
            throw DataError("fit_sampled: interpolation system is singular");
        }
        Eigen::MatrixXd Y(N, nph);
        for (std::size_t r = 0; r < N; ++r) {
            for (std::size_t c = 0; c < nph; ++c) Y(r, c) = signal.values[r][c];
        }
        coef = lu.solve(Y);
    } else {
        knots = knots_smooth(t);
        n_basis = knots.size() - kDeg - 1;  // == N + 4
        Eigen::SparseMatrix<double> B = collocation(knots, n_basis, t);
        Eigen::SparseMatrix<double> G = penalty_gram(knots, n_basis);
        Eigen::SparseMatrix<double> M = Eigen::SparseMatrix<double>(B.transpose() * B) +
                                        smoothing * G;
        M.makeCompressed();
        Eigen::SimplicialLDLT<Eigen::SparseMatrix<double>> ldlt(M);
        if (ldlt.info() != Eigen::Success) {
            throw DataError("fit_sampled: penalized system is not positive definite");
        }
        Eigen::MatrixXd Y(N, nph);
        for (std::size_t r = 0; r < N; ++r) {
            for (std::size_t c = 0; c < nph; ++c) Y(r, c) = signal.values[r][c];
        }
        coef = ldlt.solve(B.transpose() * Y);
    }

    std::vector<QuinticSpline> phases;
    phases.reserve(nph);
    for (std::size_t c = 0; c < nph; ++c) {
        std::vector<double> cc(n_basis);
        for (std::size_t r = 0; r < n_basis; ++r) cc[r] = coef(r, c);
        phases.emplace_back(knots, std::move(cc));
    }
    return SplineCurve(std::move(phases), t[2], t[N - 3]);
}

} // namespace ecurve
