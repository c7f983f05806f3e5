#include <doctest.h>

#include <cmath>

#include "latticemap/spin.hpp"
#include "testutil.hpp"

using namespace latticemap;
using namespace latticemap::spin;

namespace {

EdgeWeights ones(int n) { return EdgeWeights{n, CMatrix::Ones(n, n), CMatrix::Ones(n, n)}; }

// standard Ising energy sum_<ij> J s_i s_j + H sum_i s_i on the L x L torus
double ising_z_direct(double beta, double jh, double jv, double h, int L) {
    double z = 0.0;
    const int sites = L * L;
    for (long c = 0; c < (1L << sites); ++c) {
        auto s = [&](int i, int j) { return (c >> (((i + L) % L) * L + (j + L) % L)) & 1 ? -1 : 1; };
        double e = 0.0;
        for (int i = 0; i < L; ++i)
            for (int j = 0; j < L; ++j) e += jh * s(i, j) * s(i, j + 1) + jv * s(i, j) * s(i + 1, j) + h * s(i, j);
        z += std::exp(beta * e);
    }
    return z;
}

}  // namespace

TEST_CASE("ising edge weights") {
    auto w0 = ising_edge_weights({1.0, 0.0, 0.0, 0.0});
    CHECK(w0.wh == CMatrix::Ones(2, 2));
    CHECK(w0.wv == CMatrix::Ones(2, 2));
    auto w1 = ising_edge_weights({1.0, 0.5, 0.0, 0.0});
    CHECK(std::abs(w1.wh(0, 0) - std::exp(0.5)) < 1e-15);
    CHECK(std::abs(w1.wh(1, 1) - std::exp(0.5)) < 1e-15);
    CHECK(std::abs(w1.wh(0, 1) - std::exp(-0.5)) < 1e-15);
    auto w2 = ising_edge_weights({1.0, 0.5, 0.0, 0.4});
    CHECK(std::abs(w2.wh(0, 0) - std::exp(0.7)) < 1e-15);
    CHECK(std::abs(w2.wh(1, 1) - std::exp(0.3)) < 1e-15);
}

TEST_CASE("t_diag examples") {
    CHECK(t_diag(ones(2), 2) == CMatrix::Ones(4, 4));
    auto ew = random_edge_weights(2, 3);
    CMatrix t1 = t_diag(ew, 1);
    for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b) CHECK(std::abs(t1(a, b) - ew.wv(a, b) * ew.wh(a, b)) < 1e-15);
    auto is = ising_edge_weights({1.0, 0.3, 0.3, 0.1});
    CHECK(rel_err(mat_trace_power(t_diag(is, 3), 3), 1883.8152282692554) < 1e-10);
}

TEST_CASE("t_diag element law at L = 2") {
    auto ew = random_edge_weights(3, 17);
    CMatrix t = t_diag(ew, 2);
    for (int a1 = 0; a1 < 3; ++a1)
        for (int a2 = 0; a2 < 3; ++a2)
            for (int b1 = 0; b1 < 3; ++b1)
                for (int b2 = 0; b2 < 3; ++b2) {
                    cplx want = ew.wv(a1, b1) * ew.wh(a1, b2) * ew.wv(a2, b2) * ew.wh(a2, b1);
                    CHECK(std::abs(t(a1 * 3 + a2, b1 * 3 + b2) - want) < 1e-14);
                }
}

TEST_CASE("t_diag with identity vertical weights") {
    auto ew = random_edge_weights(2, 4);
    ew.wv = identity(2);
    CMatrix t = t_diag(ew, 2);
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b) {
            const int a1 = a / 2, a2 = a % 2;
            cplx want = a == b ? ew.wh(a1, a2) * ew.wh(a2, a1) : cplx(0.0);
            CHECK(std::abs(t(a, b) - want) < 1e-15);
        }
}

TEST_CASE("t_row and its factors") {
    CMatrix tv = t_v(ones(2), 2), th = t_h(ones(2), 2);
    CHECK(tv == CMatrix::Ones(4, 4));
    // T_h is diagonal, each row sums to 1 for unit weights; T_row = T_v T_h sums to 4
    CHECK(th == identity(4));
    CMatrix tr = t_row(ones(2), 2);
    for (int r = 0; r < 4; ++r) CHECK(std::abs(tr.row(r).sum() - 4.0) < 1e-15);

    auto ew = random_edge_weights(2, 9);
    ew.wv = identity(2);
    CHECK(tu::rel(t_row(ew, 2), t_h(ew, 2)) < 1e-15);

    auto is = ising_edge_weights({1.0, 0.7, 0.3, 0.2});
    const double z = ising_z_direct(1.0, 0.7, 0.3, 0.2, 3);
    CHECK(rel_err(mat_trace_power(t_row(is, 3), 3), z) < 1e-10);
    CHECK(rel_err(z_spin_bruteforce(is, 3), z) < 1e-10);
}

TEST_CASE("z_spin_bruteforce") {
    CHECK(z_spin_bruteforce(ones(2), 2) == cplx(16.0));
    // frozen from the enumeration
    CHECK(rel_err(z_spin_bruteforce(ising_edge_weights({1.0, 1.0, 1.0, 0.0}), 2), 5973.916645008712) < 1e-12);
    auto ew = random_edge_weights(3, 7);
    CHECK(rel_err(z_spin_bruteforce(ew, 2), mat_trace_power(t_diag(ew, 2), 2)) < 1e-10);
    CHECK_THROWS_AS(z_spin_bruteforce(ones(2), 6), SizeCapError);
}

TEST_CASE("layering invariance of Z") {
    for (int n : {2, 3})
        for (int L : {2, 3})
            for (std::uint64_t seed : {1u, 2u}) {
                auto ew = random_edge_weights(n, seed);
                const cplx z = z_spin_bruteforce(ew, L);
                CHECK(rel_err(mat_trace_power(t_diag(ew, L), L), z) < 1e-10);
                CHECK(rel_err(mat_trace_power(t_row(ew, L), L), z) < 1e-10);
            }
}

TEST_CASE("random edge weights are seeded and in range") {
    auto a = random_edge_weights(3, 42), b = random_edge_weights(3, 42), c = random_edge_weights(3, 43);
    CHECK(a.wh == b.wh);
    CHECK(a.wv == b.wv);
    CHECK(a.wh != c.wh);
    for (Eigen::Index i = 0; i < 9; ++i) {
        CHECK(a.wh.data()[i].real() >= 0.5);
        CHECK(a.wh.data()[i].real() <= 1.5);
    }
    CHECK_THROWS_AS(random_edge_weights(1, 1), InvalidArgument);
}

TEST_CASE("spin hamiltonian") {
    SpinHamiltonianLimit zero{CMatrix::Zero(2, 2), CMatrix::Zero(2, 2)};
    CHECK(spin_hamiltonian(zero, 3) == CMatrix::Zero(8, 8));

    SpinHamiltonianLimit sx{CMatrix::Zero(2, 2), tu::sigma_x()};
    CMatrix want = kron(tu::sigma_x(), identity(2)) + kron(identity(2), tu::sigma_x());
    CHECK(tu::rel(spin_hamiltonian(sx, 2), want) < 1e-15);

    SpinHamiltonianLimit hl{tu::random_matrix(3, 3, 1), tu::random_matrix(3, 3, 2)};
    const int L = 3;
    auto at = [&](double e) {
        return t_diag(EdgeWeights{3, CMatrix::Ones(3, 3) + e * hl.wh_dot, identity(3) + e * hl.wv_dot}, L);
    };
    CMatrix h = spin_hamiltonian(hl, L);
    CHECK(max_abs((at(1e-6) - identity(27)) / 1e-6 - h) < 1e-4);
    CHECK(max_abs((at(1e-5) - at(-1e-5)) / 2e-5 - h) < 1e-6);
    CHECK_THROWS_AS(spin_hamiltonian(hl, 1), InvalidArgument);
}
