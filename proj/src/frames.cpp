#include "ecurve/frames.hpp"

#include <cmath>
#include <limits>
#include <string>
#include <utility>

namespace ecurve {

namespace {

// Shared truncation policy: returns true if candidate u should end the frame
// (too small relative to the vector it was built from). A degenerate *first*
// vector is an error instead - there is no tangent at all.
bool truncates(const VecN& u, const VecN& source, double tau_rank, std::size_t index) {
    const double nu = norm_vec(u);
    const double ns = norm_vec(source);
    if (ns == 0.0 || nu < tau_rank * ns) {
        if (index == 0) {
            throw RegularityError("orthogonalization: the first input vector is "
                                  "(numerically) zero; no frame exists",
                                  std::numeric_limits<double>::quiet_NaN());
        }
        return true;
    }
    return false;
}

// ----- minimal grade-3 helpers, private to the blade-based orthogonalizer ---
//
// Components are stored densely over lexicographic triples (i<j<k). Only the
// few products needed to expand "reject vs_i from a blade" - bivector^vector,
// vector |_ trivector - are implemented.

struct Trivec {
    std::size_t n = 0;
    std::vector<double> c;  // C(n,3) components, triples (i<j<k) in lex order

    explicit Trivec(std::size_t dim)
        : n(dim), c(dim * (dim - 1) * (dim - 2) / 6, 0.0) {}
};

// (B ^ v)_{ijk} = B_ij v_k - B_ik v_j + B_jk v_i
Trivec wedge_bivec_vec(const BivecN& B, const VecN& v) {
    const std::size_t n = v.dim();
    Trivec T(n);
    std::size_t idx = 0;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            for (std::size_t k = j + 1; k < n; ++k) {
                T.c[idx++] = B.comp(i, j) * v[k] - B.comp(i, k) * v[j] + B.comp(j, k) * v[i];
            }
        }
    }
    return T;
}

// (a |_ T)_{jk} = sum_i a_i T_{ijk}; each stored triple (p<q<r) feeds the
// three pairs below it with the signs of the antisymmetric extension.
BivecN contract_vec_trivec(const VecN& a, const Trivec& T) {
    const std::size_t n = a.dim();
    BivecN out(n);
    std::size_t idx = 0;
    for (std::size_t p = 0; p < n; ++p) {
        for (std::size_t q = p + 1; q < n; ++q) {
            for (std::size_t r = q + 1; r < n; ++r) {
                const double t = T.c[idx++];
                out.at_pair(q, r) += a[p] * t;
                out.at_pair(p, r) -= a[q] * t;
                out.at_pair(p, q) += a[r] * t;
            }
        }
    }
    return out;
}

double norm2_bivec(const BivecN& B) {
    double acc = 0.0;
    for (std::size_t i = 0; i < B.size(); ++i) acc += B[i] * B[i];
    return acc;
}

double norm2_trivec(const Trivec& T) {
    double acc = 0.0;
    for (double x : T.c) acc += x * x;
    return acc;
}

} // namespace

std::vector<VecN> orthogonalize_cgs(const std::vector<VecN>& vs, double tau_rank) {
    if (vs.empty()) throw DimensionError("orthogonalize_cgs: empty input");
    std::vector<VecN> u;
    u.reserve(vs.size());
    for (std::size_t i = 0; i < vs.size(); ++i) {
        VecN ui = vs[i];
        for (const VecN& uj : u) {
            ui -= (dot(vs[i], uj) / dot(uj, uj)) * uj;
        }
        if (truncates(ui, vs[i], tau_rank, i)) break;
        u.push_back(std::move(ui));
    }
    return u;
}

std::vector<VecN> orthogonalize_mgs(const std::vector<VecN>& vs, double tau_rank) {
    if (vs.empty()) throw DimensionError("orthogonalize_mgs: empty input");
    std::vector<VecN> work = vs;
    std::vector<VecN> u;
    u.reserve(vs.size());
    for (std::size_t i = 0; i < work.size(); ++i) {
        if (truncates(work[i], vs[i], tau_rank, i)) break;
        // Reject the freshly finished direction from every remaining vector.
        const VecN& ui = work[i];
        const double ui2 = dot(ui, ui);
        for (std::size_t j = i + 1; j < work.size(); ++j) {
            work[j] -= (dot(work[j], ui) / ui2) * ui;
        }
        u.push_back(work[i]);
    }
    return u;
}

std::vector<VecN> orthogonalize_gags(const std::vector<VecN>& vs, double tau_rank) {
    if (vs.empty()) throw DimensionError("orthogonalize_gags: empty input");
    if (vs.size() > 4) {
        throw UnsupportedError("orthogonalize_gags: blade arithmetic is provided for at "
                               "most 4 vectors; use MGS for larger frames");
    }
    std::vector<VecN> u;
    u.reserve(vs.size());

    // u_1: the blade chain starts with the vector itself.
    truncates(vs[0], vs[0], tau_rank, 0);
    u.push_back(vs[0]);
    if (vs.size() == 1) return u;

    // u_2 = vs_1 |_ (vs_1 ^ vs_2) / ||vs_1||^2
    //     = rejection of vs_2 from vs_1, via the grade-2 blade.
    const BivecN A2 = wedge(vs[0], vs[1]);
    {
        VecN u2 = left_contract(vs[0], A2) / dot(vs[0], vs[0]);
        if (truncates(u2, vs[1], tau_rank, 1)) return u;
        u.push_back(std::move(u2));
    }
    if (vs.size() == 2) return u;

    // u_3 = (vs_2 ^ vs_1) |_ A3 / ||A2||^2 with A3 = vs_1 ^ vs_2 ^ vs_3:
    // contracting by the reversed blade divided by its square norm applies
    // the blade inverse, leaving exactly the component of vs_3 outside
    // span{vs_1, vs_2}.
    const Trivec A3 = wedge_bivec_vec(A2, vs[2]);
    {
        VecN u3 = left_contract(vs[1], contract_vec_trivec(vs[0], A3)) / norm2_bivec(A2);
        if (truncates(u3, vs[2], tau_rank, 2)) return u;
        u.push_back(std::move(u3));
    }
    if (vs.size() == 3) return u;

    // u_4 needs vs_1 |_ A4 with A4 = A3 ^ vs_4. Rather than storing a grade-4
    // element, expand with the graded Leibniz rule:
    //   vs_1 |_ (A3 ^ vs_4) = (vs_1 |_ A3) ^ vs_4 - (vs_1 . vs_4) A3
    // (grade-3 wedge is odd, so the vector term picks up the minus sign).
    {
        const BivecN inner = contract_vec_trivec(vs[0], A3);
        Trivec X = wedge_bivec_vec(inner, vs[3]);
        const double d14 = dot(vs[0], vs[3]);
        for (std::size_t i = 0; i < X.c.size(); ++i) X.c[i] -= d14 * A3.c[i];
        VecN u4 =
            left_contract(vs[2], contract_vec_trivec(vs[1], X)) / norm2_trivec(A3);
        if (truncates(u4, vs[3], tau_rank, 3)) return u;
        u.push_back(std::move(u4));
    }
    return u;
}

std::vector<VecN> orthogonalize(Ortho method, const std::vector<VecN>& vs, double tau_rank) {
    switch (method) {
        case Ortho::CGS: return orthogonalize_cgs(vs, tau_rank);
        case Ortho::MGS: return orthogonalize_mgs(vs, tau_rank);
        case Ortho::GAGS: return orthogonalize_gags(vs, tau_rank);
    }
    throw UnsupportedError("orthogonalize: unknown method");
}

Curvatures curvatures(const std::vector<VecN>& u, double s_prime) {
    Curvatures out;
    if (u.size() < 2) return out;
    out.kappa.reserve(u.size() - 1);
    out.k.reserve(u.size() - 1);
    double prev = norm_vec(u[0]);
    for (std::size_t i = 1; i < u.size(); ++i) {
        const double cur = norm_vec(u[i]);
        out.kappa.push_back(cur / prev);
        out.k.push_back(s_prime * (cur / prev));
        prev = cur;
    }
    return out;
}

FrameState frame_from_arc(const ArcData& ad, Ortho method, double tau_rank) {
    FrameState fs;
    fs.t = ad.t;
    fs.s_prime = ad.s_prime();
    fs.u = orthogonalize(method, ad.sdot, tau_rank);
    fs.e.reserve(fs.u.size());
    for (const VecN& ui : fs.u) fs.e.push_back(ui / norm_vec(ui));
    Curvatures c = curvatures(fs.u, fs.s_prime);
    fs.kappa = std::move(c.kappa);
    fs.k = std::move(c.k);
    return fs;
}

FrameState frame_at(const CurveModel& model, double t, int m_req, Ortho method,
                    double eps_reg, double tau_rank) {
    if (m_req < 2 || m_req > 4) {
        throw UnsupportedError("frame_at: derivative order must be within 2..4");
    }
    const ArcData ad = compute_arc_data(model, t, m_req, eps_reg);
    FrameState fs = frame_from_arc(ad, method, tau_rank);
    fs.t = t;
    return fs;
}

FrameDerivs frame_derivs_fd(const CurveModel& model, double t, double h, int m_req,
                            Ortho method, double eps_reg, double tau_rank) {
    if (!(h > 0.0)) throw UnsupportedError("frame_derivs_fd: step must be positive");
    FrameDerivs fd;
    fd.frame = frame_at(model, t, m_req, method, eps_reg, tau_rank);
    FrameState lo = frame_at(model, t - h, m_req, method, eps_reg, tau_rank);
    FrameState hi = frame_at(model, t + h, m_req, method, eps_reg, tau_rank);
    const std::size_t m = fd.frame.m();
    if (lo.m() != m || hi.m() != m) {
        throw ComparabilityError(
            "frame_derivs_fd: frame size changes across the stencil (" +
            std::to_string(lo.m()) + "/" + std::to_string(m) + "/" +
            std::to_string(hi.m()) + " at t-h/t/t+h); the axes cannot be differenced");
    }
    fd.e_prime.reserve(m);
    for (std::size_t i = 0; i < m; ++i) {
        // Gram-Schmidt fixes each axis only up to sign; align the stencil
        // frames with the center one before differencing.
        VecN el = (dot(lo.e[i], fd.frame.e[i]) < 0.0) ? -lo.e[i] : lo.e[i];
        VecN eh = (dot(hi.e[i], fd.frame.e[i]) < 0.0) ? -hi.e[i] : hi.e[i];
        fd.e_prime.push_back((eh - el) / (2.0 * h));
    }
    return fd;
}

std::vector<double> frenet_curvatures_check(const CurveModel& model, double t, double h,
                                            int m_req, Ortho method, double eps_reg,
                                            double tau_rank) {
    const FrameDerivs fd = frame_derivs_fd(model, t, h, m_req, method, eps_reg, tau_rank);
    const FrameState& fs = fd.frame;
    std::vector<double> residuals;
    residuals.reserve(fs.m() > 0 ? fs.m() - 1 : 0);
    for (std::size_t i = 0; i + 1 < fs.m(); ++i) {
        // kappa_i should equal (de_i/ds) . e_{i+1} = (e_i'/s') . e_{i+1}.
        const double fd_kappa = dot(fd.e_prime[i] / fs.s_prime, fs.e[i + 1]);
        residuals.push_back(std::abs(fd_kappa - fs.kappa[i]));
    }
    return residuals;
}

} // namespace ecurve
