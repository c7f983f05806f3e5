#include "latticemap/matcore.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <string>

namespace latticemap {

Limits Limits::from_env() {
    Limits lim;
    if (const char* s = std::getenv("LATTICEMAP_MAX_DIM")) {
        char* end = nullptr;
        unsigned long long v = std::strtoull(s, &end, 10);
        if (end == s || *end != '\0' || v == 0)
            throw InvalidArgument(std::string("LATTICEMAP_MAX_DIM is not a positive integer: ") + s);
        lim.max_dim = static_cast<std::size_t>(v);
    }
    return lim;
}

CMatrix identity(std::size_t d) {
    return CMatrix::Identity(static_cast<Eigen::Index>(d), static_cast<Eigen::Index>(d));
}

CMatrix kron(const CMatrix& a, const CMatrix& b) {
    const Eigen::Index rb = b.rows(), cb = b.cols();
    CMatrix out(a.rows() * rb, a.cols() * cb);
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index j = 0; j < a.cols(); ++j)
            out.block(i * rb, j * cb, rb, cb) = a(i, j) * b;
    return out;
}

bool is_square(const CMatrix& a) { return a.rows() == a.cols() && a.rows() > 0; }

cplx trace(const CMatrix& a) {
    if (!is_square(a)) throw InvalidArgument("trace: matrix is not square");
    return a.trace();
}

cplx mat_trace_power(const CMatrix& t, int p) {
    if (!is_square(t)) throw InvalidArgument("mat_trace_power: matrix is not square");
    if (p < 1) throw InvalidArgument("mat_trace_power: power must be >= 1");
    if (p == 1) return t.trace();
    CMatrix pw = t;
    for (int i = 2; i < p; ++i) pw = (pw * t).eval();
    // Tr(pw * t) without forming the product
    cplx s = 0.0;
    for (Eigen::Index i = 0; i < t.rows(); ++i)
        for (Eigen::Index k = 0; k < t.cols(); ++k) s += pw(i, k) * t(k, i);
    return s;
}

NullspaceResult nullspace(const CMatrix& a, double tol) {
    if (!(tol > 0)) throw InvalidArgument("nullspace: tol must be positive");
    const Eigen::Index cols = a.cols();
    NullspaceResult res;
    // kernel of A = complement of range(A^H); pivoted QR of A^H exposes it
    Eigen::MatrixXcd ah = a.adjoint();
    Eigen::ColPivHouseholderQR<Eigen::MatrixXcd> qr(ah);
    qr.setThreshold(tol);
    res.rank = ah.cols() == 0 ? 0 : static_cast<int>(qr.rank());
    Eigen::MatrixXcd q = qr.householderQ() * Eigen::MatrixXcd::Identity(cols, cols);
    for (Eigen::Index j = res.rank; j < cols; ++j) {
        CVector v = q.col(j);
        res.residual = std::max(res.residual, (a * v).norm());
        res.basis.push_back(std::move(v));
    }
    return res;
}

std::vector<cplx> eig_spectrum(const CMatrix& a) {
    if (!is_square(a)) throw InvalidArgument("eig_spectrum: matrix is not square");
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(Eigen::MatrixXcd(a), false);
    if (es.info() != Eigen::Success) throw DomainError("eig_spectrum: eigenvalue iteration did not converge");
    std::vector<cplx> ev(es.eigenvalues().data(), es.eigenvalues().data() + es.eigenvalues().size());
    std::sort(ev.begin(), ev.end(), [](cplx x, cplx y) {
        if (x.real() != y.real()) return x.real() < y.real();
        return x.imag() < y.imag();
    });
    return ev;
}

double max_abs(const CMatrix& a) { return a.size() == 0 ? 0.0 : a.cwiseAbs().maxCoeff(); }

double rel_err(cplx got, cplx want) {
    double scale = std::abs(want);
    return scale > 0 ? std::abs(got - want) / scale : std::abs(got);
}

std::size_t checked_dim(int n, int L, const Limits& lim) {
    if (n < 1 || L < 1) throw InvalidArgument("dimension: n and L must be positive");
    std::size_t d = 1;
    for (int i = 0; i < L; ++i) {
        if (d > lim.max_dim / static_cast<std::size_t>(n))
            throw SizeCapError("matrix dimension " + std::to_string(n) + "^" + std::to_string(L) +
                               " exceeds cap " + std::to_string(lim.max_dim));
        d *= static_cast<std::size_t>(n);
    }
    return d;
}

std::uint64_t checked_configs(int n, int sites, const Limits& lim) {
    if (n < 1 || sites < 1) throw InvalidArgument("enumeration: n and site count must be positive");
    std::uint64_t c = 1;
    for (int i = 0; i < sites; ++i) {
        if (c > lim.max_configs / static_cast<std::uint64_t>(n))
            throw SizeCapError("enumeration " + std::to_string(n) + "^" + std::to_string(sites) +
                               " exceeds cap " + std::to_string(lim.max_configs));
        c *= static_cast<std::uint64_t>(n);
    }
    return c;
}

CMatrix permutator(int n) {
    CMatrix p = CMatrix::Zero(n * n, n * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) p(i * n + j, j * n + i) = 1.0;
    return p;
}

std::vector<int> digits(std::size_t index, int n, int L) {
    std::vector<int> d(L);
    for (int j = L - 1; j >= 0; --j) {
        d[j] = static_cast<int>(index % n);
        index /= n;
    }
    return d;
}

namespace {

std::size_t power(int n, int e) {
    std::size_t r = 1;
    for (int i = 0; i < e; ++i) r *= static_cast<std::size_t>(n);
    return r;
}

}  // namespace

CMatrix site_op(const CMatrix& op, int n, int L, int j) {
    if (op.rows() != n || op.cols() != n) throw InvalidArgument("site_op: operator must be n x n");
    if (j < 0 || j >= L) throw InvalidArgument("site_op: site out of range");
    return kron(kron(identity(power(n, j)), op), identity(power(n, L - j - 1)));
}

CMatrix embed_two_site(const CMatrix& h, int n, int L, int j) {
    if (h.rows() != n * n || h.cols() != n * n) throw InvalidArgument("embed_two_site: operator must be n^2 x n^2");
    if (L < 2 || j < 0 || j >= L) throw InvalidArgument("embed_two_site: bad site");
    const int k = (j + 1) % L;
    const std::size_t d = power(n, L);
    const std::size_t sj = power(n, L - 1 - j), sk = power(n, L - 1 - k);
    CMatrix out = CMatrix::Zero(d, d);
    for (std::size_t x = 0; x < d; ++x) {
        const int a = static_cast<int>((x / sj) % n), b = static_cast<int>((x / sk) % n);
        const std::size_t base = x - a * sj - b * sk;
        const int col = a * n + b;
        for (int oa = 0; oa < n; ++oa)
            for (int ob = 0; ob < n; ++ob) {
                cplx v = h(oa * n + ob, col);
                if (v != 0.0) out(base + oa * sj + ob * sk, x) += v;
            }
    }
    return out;
}

CMatrix periodic_bond_sum(const CMatrix& h, int n, int L) {
    CMatrix out = embed_two_site(h, n, L, 0);
    for (int j = 1; j < L; ++j) out += embed_two_site(h, n, L, j);
    return out;
}

CMatrix site_reversal(int n, int L) {
    const std::size_t d = power(n, L);
    CMatrix r = CMatrix::Zero(d, d);
    for (std::size_t x = 0; x < d; ++x) {
        std::size_t y = 0, t = x;
        for (int j = 0; j < L; ++j) {
            y = y * n + t % n;
            t /= n;
        }
        r(y, x) = 1.0;
    }
    return r;
}

}  // namespace latticemap
