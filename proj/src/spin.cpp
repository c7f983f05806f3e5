#include "latticemap/spin.hpp"

#include <cmath>
#include <random>

namespace latticemap::spin {

namespace {

void require_L(int L) {
    if (L < 1) throw InvalidArgument("lattice size L must be >= 1");
}

bool finite(const CMatrix& m) { return m.allFinite(); }

}  // namespace

void EdgeWeights::validate() const {
    if (n < 2) throw InvalidArgument("EdgeWeights: n must be >= 2");
    if (wh.rows() != n || wh.cols() != n || wv.rows() != n || wv.cols() != n)
        throw InvalidArgument("EdgeWeights: W_h and W_v must be n x n");
    if (!finite(wh) || !finite(wv)) throw InvalidArgument("EdgeWeights: non-finite entry");
}

EdgeWeights ising_edge_weights(const IsingParams& p) {
    auto edge = [&](double j) {
        CMatrix w(2, 2);
        w(0, 0) = std::exp(p.beta * (j + p.hfield / 2));
        w(0, 1) = w(1, 0) = std::exp(-p.beta * j);
        w(1, 1) = std::exp(p.beta * (j - p.hfield / 2));
        return w;
    };
    return EdgeWeights{2, edge(p.jh), edge(p.jv)};
}

EdgeWeights random_edge_weights(int n, std::uint64_t seed) {
    if (n < 2) throw InvalidArgument("random_edge_weights: n must be >= 2");
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> u(0.5, 1.5);
    EdgeWeights ew{n, CMatrix(n, n), CMatrix(n, n)};
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) ew.wh(a, b) = u(rng);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) ew.wv(a, b) = u(rng);
    return ew;
}

CMatrix t_diag(const EdgeWeights& ew, int L, const Limits& lim) {
    ew.validate();
    require_L(L);
    const std::size_t d = checked_dim(ew.n, L, lim);
    CMatrix t(d, d);
    std::vector<std::vector<int>> dig(d);
    for (std::size_t x = 0; x < d; ++x) dig[x] = digits(x, ew.n, L);
    for (std::size_t x = 0; x < d; ++x) {
        const auto& a = dig[x];
        for (std::size_t y = 0; y < d; ++y) {
            const auto& b = dig[y];
            cplx v = 1.0;
            for (int j = 0; j < L; ++j) v *= ew.wv(a[j], b[j]) * ew.wh(a[j], b[(j + 1) % L]);
            t(x, y) = v;
        }
    }
    return t;
}

CMatrix t_v(const EdgeWeights& ew, int L, const Limits& lim) {
    ew.validate();
    require_L(L);
    const std::size_t d = checked_dim(ew.n, L, lim);
    CMatrix t(d, d);
    std::vector<std::vector<int>> dig(d);
    for (std::size_t x = 0; x < d; ++x) dig[x] = digits(x, ew.n, L);
    for (std::size_t x = 0; x < d; ++x)
        for (std::size_t y = 0; y < d; ++y) {
            cplx v = 1.0;
            for (int j = 0; j < L; ++j) v *= ew.wv(dig[x][j], dig[y][j]);
            t(x, y) = v;
        }
    return t;
}

CMatrix t_h(const EdgeWeights& ew, int L, const Limits& lim) {
    ew.validate();
    require_L(L);
    const std::size_t d = checked_dim(ew.n, L, lim);
    // the delta factors force b = a
    CMatrix t = CMatrix::Zero(d, d);
    for (std::size_t x = 0; x < d; ++x) {
        auto a = digits(x, ew.n, L);
        cplx v = 1.0;
        for (int j = 0; j < L; ++j) v *= ew.wh(a[j], a[(j + 1) % L]);
        t(x, x) = v;
    }
    return t;
}

CMatrix t_row(const EdgeWeights& ew, int L, const Limits& lim) {
    CMatrix t = t_v(ew, L, lim);
    CMatrix h = t_h(ew, L, lim);
    for (Eigen::Index y = 0; y < t.cols(); ++y) t.col(y) *= h(y, y);
    return t;
}

cplx z_spin_bruteforce(const EdgeWeights& ew, int L, const Limits& lim) {
    ew.validate();
    require_L(L);
    const std::uint64_t total = checked_configs(ew.n, L * L, lim);
    std::vector<int> s(L * L, 0);
    auto at = [&](int i, int j) { return s[((i + L) % L) * L + (j + L) % L]; };
    cplx z = 0.0;
    for (std::uint64_t c = 0; c < total; ++c) {
        cplx w = 1.0;
        for (int i = 0; i < L; ++i)
            for (int j = 0; j < L; ++j) w *= ew.wh(at(i, j), at(i, j + 1)) * ew.wv(at(i, j), at(i + 1, j));
        z += w;
        for (int k = L * L - 1; k >= 0; --k) {
            if (++s[k] < ew.n) break;
            s[k] = 0;
        }
    }
    return z;
}

CMatrix spin_two_site(const SpinHamiltonianLimit& hl) {
    const Eigen::Index n = hl.wh_dot.rows();
    if (n < 2 || hl.wh_dot.cols() != n || hl.wv_dot.rows() != n || hl.wv_dot.cols() != n)
        throw InvalidArgument("spin_two_site: Wh_dot and Wv_dot must be n x n");
    CMatrix h = CMatrix::Zero(n * n, n * n);
    for (Eigen::Index i1 = 0; i1 < n; ++i1)
        for (Eigen::Index i2 = 0; i2 < n; ++i2) {
            h(i1 * n + i2, i1 * n + i2) += hl.wh_dot(i1, i2);
            for (Eigen::Index i3 = 0; i3 < n; ++i3) h(i1 * n + i3, i2 * n + i3) += hl.wv_dot(i1, i2);
        }
    return h;
}

CMatrix spin_hamiltonian(const SpinHamiltonianLimit& hl, int L) {
    if (L < 2) throw InvalidArgument("spin_hamiltonian: L must be >= 2");
    CMatrix h = spin_two_site(hl);
    return periodic_bond_sum(h, static_cast<int>(hl.wh_dot.rows()), L);
}

}  // namespace latticemap::spin
