#include "latticemap/ybe.hpp"

#include <string>
#include <cmath>
#include <limits>

namespace latticemap::ybe {

int local_dim(const CMatrix& op) {
    if (!is_square(op)) throw InvalidArgument("expected a square n^2 x n^2 operator");
    const int n = static_cast<int>(std::lround(std::sqrt(static_cast<double>(op.rows()))));
    if (n < 2 || n * n != op.rows()) throw InvalidArgument("operator size is not n^2 for n >= 2");
    return n;
}

CMatrix embed12(const CMatrix& op) { return kron(op, identity(local_dim(op))); }

CMatrix embed23(const CMatrix& op) { return kron(identity(local_dim(op)), op); }

CMatrix embed13(const CMatrix& op) {
    const int n = local_dim(op);
    CMatrix p23 = kron(identity(n), permutator(n));
    return p23 * embed12(op) * p23;
}

namespace {

void same_size(const CMatrix& a, const CMatrix& b, const char* what) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) throw InvalidArgument(std::string(what) + ": dimension mismatch");
}

double rel_norm(const CMatrix& l, const CMatrix& r) {
    const double s = l.norm();
    return s > 0 ? (l - r).norm() / s : (l - r).norm();
}

}  // namespace

double rll_residual(const CMatrix& r, const CMatrix& lax1, const CMatrix& lax2) {
    same_size(r, lax1, "rll_residual");
    same_size(r, lax2, "rll_residual");
    CMatrix r12 = embed12(r), l13 = embed13(lax1), l23 = embed23(lax2);
    return rel_norm(r12 * l13 * l23, l23 * l13 * r12);
}

double ybe_residual(const CMatrix& r12, const CMatrix& r13, const CMatrix& r23) {
    same_size(r12, r13, "ybe_residual");
    same_size(r12, r23, "ybe_residual");
    CMatrix a = embed12(r12), b = embed13(r13), c = embed23(r23);
    return rel_norm(a * b * c, c * b * a);
}

UnitarityResult unitarity_residual(const CMatrix& r_ab, const CMatrix& r_ba) {
    same_size(r_ab, r_ba, "unitarity_residual");
    const int n = local_dim(r_ab);
    CMatrix p = permutator(n);
    CMatrix m = r_ab * p * r_ba * p;
    UnitarityResult u;
    u.constant = m.trace() / static_cast<double>(m.rows());
    const double dev = max_abs(m - u.constant * identity(m.rows()));
    u.residual = std::abs(u.constant) > 0 ? dev / std::abs(u.constant) : dev;
    return u;
}

CMatrix normalize_r(const CMatrix& r) {
    CMatrix out = r;
    const double mx = max_abs(out);
    if (mx == 0.0) return out;
    const double nrm = out.norm();
    if (std::abs(nrm - 1.0) > 4 * std::numeric_limits<double>::epsilon()) out /= nrm;
    for (Eigen::Index i = 0; i < out.size(); ++i) {
        cplx& e = out.data()[i];
        if (std::abs(e) > 1e-10 * max_abs(out)) {
            if (!(e.imag() == 0.0 && e.real() > 0.0)) {
                const cplx phase = std::conj(e) / std::abs(e);
                out *= phase;
                e = cplx(std::abs(e), 0.0);
            }
            break;
        }
    }
    return out;
}

RSolveReport solve_r(const std::vector<std::pair<CMatrix, CMatrix>>& lax_pairs, double tol,
                     const std::optional<Mask>& mask) {
    if (lax_pairs.empty()) throw InvalidArgument("solve_r: no Lax pairs given");
    if (!(tol > 0)) throw InvalidArgument("solve_r: tol must be positive");
    const int n = local_dim(lax_pairs.front().first);
    const int nn = n * n, n3 = nn * n;
    for (const auto& [l1, l2] : lax_pairs) {
        if (l1.rows() != nn || l2.rows() != nn || l1.cols() != nn || l2.cols() != nn)
            throw InvalidArgument("solve_r: all Lax operators must be n^2 x n^2");
    }
    if (mask && (mask->rows() != nn || mask->cols() != nn)) throw InvalidArgument("solve_r: mask must be n^2 x n^2");

    std::vector<std::pair<int, int>> unknowns;
    for (int p = 0; p < nn; ++p)
        for (int q = 0; q < nn; ++q)
            if (!mask || (*mask)(p, q)) unknowns.emplace_back(p, q);

    const Eigen::Index rows_per = static_cast<Eigen::Index>(n3) * n3;
    CMatrix sys = CMatrix::Zero(rows_per * static_cast<Eigen::Index>(lax_pairs.size()),
                                static_cast<Eigen::Index>(unknowns.size()));
    for (std::size_t k = 0; k < lax_pairs.size(); ++k) {
        CMatrix a = embed13(lax_pairs[k].first) * embed23(lax_pairs[k].second);
        CMatrix b = embed23(lax_pairs[k].second) * embed13(lax_pairs[k].first);
        for (std::size_t u = 0; u < unknowns.size(); ++u) {
            const auto [p, q] = unknowns[u];
            // (E_pq (x) I) A - B (E_pq (x) I)
            CMatrix c = CMatrix::Zero(n3, n3);
            for (int s = 0; s < n; ++s) {
                c.row(p * n + s) += a.row(q * n + s);
                c.col(q * n + s) -= b.col(p * n + s);
            }
            sys.block(rows_per * static_cast<Eigen::Index>(k), static_cast<Eigen::Index>(u), rows_per, 1) =
                Eigen::Map<const Eigen::VectorXcd>(c.data(), rows_per);
        }
    }

    NullspaceResult ns = nullspace(sys, tol);
    RSolveReport rep;
    rep.kernel_dim = static_cast<int>(ns.basis.size());
    rep.mask = mask;
    for (const auto& v : ns.basis) {
        CMatrix r = CMatrix::Zero(nn, nn);
        for (std::size_t u = 0; u < unknowns.size(); ++u) r(unknowns[u].first, unknowns[u].second) = v(u);
        rep.basis.push_back(normalize_r(r));
    }
    if (rep.basis.empty()) {
        rep.r = CMatrix::Zero(nn, nn);
        rep.residual = std::numeric_limits<double>::infinity();
        return rep;
    }
    rep.r = rep.basis.front();
    for (const auto& [l1, l2] : lax_pairs) rep.residual = std::max(rep.residual, rll_residual(rep.r, l1, l2));
    return rep;
}

Mask infer_mask(const std::vector<RSolveReport>& solves, double rel) {
    if (solves.empty()) throw InvalidArgument("infer_mask: no solves given");
    const Eigen::Index nn = solves.front().r.rows();
    Mask m = Mask::Constant(nn, nn, false);
    for (const auto& s : solves) {
        if (s.r.rows() != nn) throw InvalidArgument("infer_mask: inconsistent sizes");
        const double mx = max_abs(s.r);
        for (Eigen::Index i = 0; i < nn; ++i)
            for (Eigen::Index j = 0; j < nn; ++j)
                if (std::abs(s.r(i, j)) >= rel * mx) m(i, j) = true;
    }
    return m;
}

}  // namespace latticemap::ybe
