#include <doctest.h>

#include <cmath>
#include <random>

#include "latticemap/elliptic.hpp"
#include "latticemap/equivmap.hpp"
#include "latticemap/mixed8v.hpp"
#include "latticemap/ybe.hpp"
#include "testutil.hpp"

using namespace latticemap;
using namespace latticemap::mixed8v;
using elliptic::jacobi_sn;

namespace {

constexpr double kK = 0.4, kLambda = 0.6;
const cplx I(0.0, 1.0);

Mixed8VWeights at(double x) { return uniformized_weights({kK, kLambda, x}); }

double commutator_rel(const CMatrix& a, const CMatrix& b) { return max_abs(a * b - b * a) / max_abs(a * b); }

CMatrix transfer(const Mixed8VWeights& m, int L) { return vertex::t_vertex_from_lax(mixed_lax(m), 2, L); }

}  // namespace

TEST_CASE("invariants of the Ising weight lists") {
    for (auto [b, jh, jv] : {std::tuple{1.0, 0.7, 0.3}, {0.5, 0.2, 1.1}, {2.0, 0.35, 0.35}}) {
        auto a = invariants_of(equiv::ising_mixed8v({b, jh, jv, 0.0}, equiv::MapKind::A));
        CHECK(std::abs(a.delta1 - 1.0) <= 1e-12);
        CHECK(std::abs(a.delta2 - 2 * std::sinh(2 * b * jh) * std::sinh(2 * b * jv)) <= 1e-12);
        auto bb = invariants_of(equiv::ising_mixed8v({b, jh, jv, 0.0}, equiv::MapKind::B));
        // displayed as exp(+4 beta Jh); the invariant formula gives the reciprocal
        CHECK(rel_err(bb.delta1, std::exp(-4 * b * jh)) <= 1e-12);
        CHECK(rel_err(1.0 / bb.delta1, std::exp(4 * b * jh)) <= 1e-12);
        CHECK(rel_err(bb.delta2, 2 * std::exp(-2 * b * jh) * std::cosh(2 * b * jv) * std::sinh(2 * b * jh)) <= 1e-12);
    }
    CHECK_THROWS_AS(invariants_of(symmetric_weights(0.0, 1.0, 1.0, 1.0)), DomainError);
}

TEST_CASE("uniformization") {
    auto m0 = at(0.0);
    CHECK(std::abs(m0.v1) < 1e-15);
    CHECK(std::abs(m0.v5) < 1e-15);
    CHECK(std::abs(m0.w1 - m0.w5) < 1e-15);
    CHECK(tu::rel(mixed_lax(m0), m0.w5 * permutator(2)) < 1e-15);

    const auto want = uniformized_invariants(kK, kLambda);
    const cplx sil = jacobi_sn(I * kLambda, kK);
    CHECK(std::abs(want.delta1 + kK * sil * sil) < 1e-15);
    CHECK(std::abs(want.delta1 - 0.165910383967838) < 1e-12);
    CHECK(std::abs(want.delta2 - 1.22827780612331) < 1e-12);
    for (double x : {0.31, 0.17, 0.05, -0.4, 0.9}) {
        auto inv = invariants_of(at(x));
        CHECK(std::abs(inv.delta1 - want.delta1) <= 1e-10);
        CHECK(std::abs(inv.delta2 - want.delta2) <= 1e-10);
    }
}

TEST_CASE("closed-form R") {
    auto m1 = at(0.31), m2 = at(0.17);
    CMatrix rp = closed_form_r(m1, m1);
    CHECK(tu::rel(rp, rp(0, 0) * permutator(2)) < 1e-14);

    auto r = closed_form_r_entries(m1, m2);
    const cplx il = I * kLambda;
    CHECK(std::abs(r.w1 / r.w5 - jacobi_sn(il + 0.31, kK) / jacobi_sn(il + 0.17, kK)) <= 1e-9);
    CHECK(std::abs(r.v5 / r.w5 - jacobi_sn(0.14, kK) / jacobi_sn(il + 0.17, kK)) <= 1e-9);
    CHECK(std::abs(r.v1 / r.w5 + kK * jacobi_sn(il + 0.31, kK) * jacobi_sn(0.14, kK)) <= 1e-9);
    CHECK(ybe::rll_residual(closed_form_r(m1, m2), mixed_lax(m1), mixed_lax(m2)) <= 1e-9);

    auto off = uniformized_weights({kK, 0.7, 0.17});
    CHECK_THROWS_AS(closed_form_r(m1, off), DomainError);
}

TEST_CASE("functional equations") {
    for (auto [x1, x2] : {std::pair{0.31, 0.17}, {0.05, 0.6}, {-0.2, 0.45}}) {
        auto m1 = at(x1), m2 = at(x2);
        for (cplx f : functional_equations(closed_form_r_entries(m1, m2), m1, m2)) CHECK(std::abs(f) <= 1e-10);
    }
    auto m1 = at(0.31), m2 = at(0.17);
    auto r = closed_form_r_entries(m1, m2);
    r.v1 *= 1.01;
    double worst = 0.0;
    for (cplx f : functional_equations(r, m1, m2)) worst = std::max(worst, std::abs(f));
    CHECK(worst > 1e-4);
}

TEST_CASE("transfer commutativity along the curve") {
    CHECK(commutator_rel(transfer(at(0.31), 3), transfer(at(0.17), 3)) <= 1e-9);
    CHECK(commutator_rel(transfer(at(0.31), 3), transfer(uniformized_weights({kK, 0.9, 0.17}), 3)) > 1e-6);
}

TEST_CASE("unitarity constant") {
    auto m1 = at(0.31), m2 = at(0.17);
    auto u = ybe::unitarity_residual(unitarity_normalization(kK, 0.31, 0.17) * closed_form_r(m1, m2),
                                     unitarity_normalization(kK, 0.17, 0.31) * closed_form_r(m2, m1));
    CHECK(u.residual <= 1e-8);
    CHECK(std::abs(u.constant - 1.0) <= 1e-8);
}

TEST_CASE("surface") {
    const auto inv = uniformized_invariants(kK, kLambda);
    for (const auto& p : singular_points()) {
        const REntries r{double(p[0]), double(p[1]), double(p[2]), double(p[3])};
        auto s = surface_eval(r, inv);
        CHECK(std::abs(s.s) <= 1e-14);
        for (cplx g : s.grad) CHECK(std::abs(g) <= 1e-14);
    }
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    for (int i = 0; i < 20; ++i) {
        const double x1 = u(rng), x2 = u(rng);
        auto r = closed_form_r_entries(at(x1), at(x2));
        const double sc = std::max({std::abs(r.w1), std::abs(r.w5), std::abs(r.v1), std::abs(r.v5)});
        CHECK(std::abs(surface_eval({r.w1 / sc, r.w5 / sc, r.v1 / sc, r.v5 / sc}, inv).s) <= 1e-8);
    }
    int spurious = 0;
    for (int i = 0; i < 10000; ++i) {
        REntries r{cplx(u(rng), u(rng)), cplx(u(rng), u(rng)), cplx(u(rng), u(rng)), cplx(u(rng), u(rng))};
        auto s = surface_eval(r, inv);
        double mx = std::abs(s.s);
        for (cplx g : s.grad) mx = std::max(mx, std::abs(g));
        spurious += mx < 1e-6;
    }
    CHECK(spurious == 0);
    CHECK_THROWS_AS(surface_eval({1.0, 1.0, 1.0, 1.0}, {0.0, 1.0}), DomainError);
}

TEST_CASE("surface gradient against finite differences") {
    const InvariantPair inv{cplx(0.3, 0.1), cplx(1.2, -0.2)};
    REntries r{cplx(0.4, 0.2), cplx(-0.3, 0.5), cplx(0.7, -0.1), cplx(0.2, 0.3)};
    auto s = surface_eval(r, inv);
    const double h = 1e-6;
    for (int k = 0; k < 4; ++k) {
        REntries a = r, b = r;
        cplx* pa[4] = {&a.w1, &a.w5, &a.v1, &a.v5};
        cplx* pb[4] = {&b.w1, &b.w5, &b.v1, &b.v5};
        *pa[k] += h;
        *pb[k] -= h;
        CHECK(std::abs((surface_eval(a, inv).s - surface_eval(b, inv).s) / (2 * h) - s.grad[k]) < 1e-7);
    }
}

TEST_CASE("invariant functions and the affine chain") {
    const auto inv = uniformized_invariants(kK, kLambda);
    auto m1 = at(0.31), m2 = at(0.17);
    auto f = r_invariant_functions(m1, m2);
    auto r = closed_form_r_entries(m1, m2);
    CHECK(rel_err(r.w5 * r.v1 / (r.w1 * r.v5), f.f1) <= 1e-9);
    CHECK_NOTHROW(r_invariant_functions(m1, m1));

    for (double x2 : {0.17, 0.05, 0.52, -0.3}) {
        auto b = at(x2);
        auto rr = closed_form_r_entries(m1, b);
        CHECK(std::abs(eli5_residual(b, inv)) <= 1e-10);
        const cplx sc = rr.w5;
        const REntries rn{rr.w1 / sc, 1.0, rr.v1 / sc, rr.v5 / sc};
        CHECK(std::abs(eli3_residual(rn, b, inv)) <= 1e-9);
        CHECK(std::abs(eli4_residual(rn, b, inv)) <= 1e-9);
        const cplx x = b.w1 / b.w5;
        CHECK(std::abs(eliminated_y(rn, x, inv) - b.v5 / b.w5) <= 1e-9);
        CHECK(std::abs(final_residual(rn, x, inv)) <= 1e-9);
    }
}

TEST_CASE("chain parameters and the Hermitian circle") {
    MixedChainParams p{0.4, 1.3, 1.0};
    CHECK(std::abs(p.h() * p.h() + p.d() * p.d() - p.kappa * p.kappa) < 1e-15);
    CHECK(p.gamma() == doctest::Approx(std::sqrt(1 + p.d() * p.d())));
    BaxterParams bx{cplx(0.3, 0.1), cplx(0.8, -0.2)};
    auto back = BaxterParams::from_invariants(bx.invariants());
    CHECK(std::abs(back.gamma_b - bx.gamma_b) < 1e-14);
    CHECK(std::abs(back.delta_b - bx.delta_b) < 1e-14);
}

TEST_CASE("mixed hamiltonian") {
    const int L = 3;
    MixedChainParams ising{0.7, 0.0, 1.3};
    CMatrix zz = CMatrix::Zero(4, 4);
    zz.diagonal() << 1.0, -1.0, -1.0, 1.0;
    CHECK(tu::rel(mixed_hamiltonian(ising, L), -1.3 * periodic_bond_sum(zz, 2, L)) < 1e-15);

    for (double th : {0.0, 0.4, 1.1, 2.5, M_PI}) {
        MixedChainParams p{th, 0.9, 1.0};
        CMatrix h = mixed_hamiltonian(p, L);
        CHECK(max_abs(h - h.adjoint()) <= 1e-12);
        auto inv = hermitian_invariants(p);
        CHECK(max_abs(mixed_hamiltonian_general(inv, p.j, L) - h) <= 1e-12);
    }

    const InvariantPair gen{cplx(0.3, 0.2), cplx(1.1, -0.4)};
    const double j = 0.8;
    CMatrix assembled = periodic_bond_sum(htwomix(gen, 0.0, -2.0 * j / gen.delta2), 2, L);
    CHECK(max_abs(assembled - (mixed_hamiltonian_general(gen, j, L) - j * L * identity(8))) <= 1e-12);
}

TEST_CASE("XY model with DM interaction") {
    const int L = 3;
    MixedChainParams flat{0.0, 0.0, 1.0};
    CMatrix sx(2, 2);
    sx << 0.0, 1.0, 1.0, 0.0;
    CHECK(tu::rel(xy_dm_hamiltonian(flat, L), -1.0 * periodic_bond_sum(kron(sx, sx), 2, L)) < 1e-15);

    for (auto [th, ka] : {std::pair{0.4, 1.3}, {2.2, 0.7}, {1.0, 2.0}}) {
        MixedChainParams p{th, ka, 1.0};
        auto e1 = eig_spectrum(mixed_hamiltonian(p, L)), e2 = eig_spectrum(xy_dm_hamiltonian(p, L));
        double gap = 0.0;
        for (std::size_t i = 0; i < e1.size(); ++i) gap = std::max(gap, std::abs(e1[i] - e2[i]));
        CHECK(gap <= 1e-9);
        CHECK(max_abs(substituted_mixed_hamiltonian(p, L) - xy_dm_hamiltonian(p, L)) <= 1e-12);
        auto t = canonical_transform(p.d());
        CHECK(std::abs(t.u * t.u + t.v * t.v - 1.0) <= 1e-12);
    }
}

TEST_CASE("even eight-vertex comparison") {
    auto e1 = even_from_mixed(at(0.31)), e2 = even_from_mixed(at(0.17));
    CMatrix same = baxter_even_r(e1, e1);
    CHECK(tu::rel(same, same(1, 2) * permutator(2)) < 1e-12);
    const CMatrix l1 = vertex::lax_from_tensor(vertex::tensor_from_even8v(e1));
    const CMatrix l2 = vertex::lax_from_tensor(vertex::tensor_from_even8v(e2));
    CHECK(ybe::rll_residual(baxter_even_r(e1, e2), l1, l2) <= 1e-9);
    auto bold = even_invariants(baxter_even_r_entries(e1, e2));
    auto base = even_invariants(e1);
    CHECK(std::abs(bold.delta1 - base.delta1) <= 1e-9);
    CHECK(std::abs(bold.delta2 - base.delta2) <= 1e-9);
    auto mi = invariants_of(at(0.31));
    CHECK(std::abs(base.delta1 - mi.delta1) <= 1e-12);
    CHECK(std::abs(base.delta2 - mi.delta2) <= 1e-12);
}

TEST_CASE("Onsager condition") {
    auto o = onsager_check({1.0, 0.7, 0.3, 0.0});
    CHECK(std::abs(o.delta1 - 1.0) <= 1e-12);
    CHECK(std::abs(o.delta2 - 2 * std::sinh(1.4) * std::sinh(0.6)) <= 1e-12);
    CHECK(std::abs(o.delta2 - o.onsager_rhs) <= 1e-12);
    CHECK(std::abs(onsager_check({1.0, 0.0, 0.0, 0.0}).delta2) == 0.0);

    // second coupling pair on the same Onsager curve
    const double jh2 = 0.45;
    const double jv2 = std::asinh(o.delta2.real() / (2 * std::sinh(2 * jh2))) / 2;
    auto a = equiv::ising_mixed8v({1.0, 0.7, 0.3, 0.0}, equiv::MapKind::A);
    auto b = equiv::ising_mixed8v({1.0, jh2, jv2, 0.0}, equiv::MapKind::A);
    CHECK(commutator_rel(transfer(a, 3), transfer(b, 3)) <= 1e-9);
    auto c = equiv::ising_mixed8v({1.0, jh2, jv2 + 0.1, 0.0}, equiv::MapKind::A);
    CHECK(commutator_rel(transfer(a, 3), transfer(c, 3)) > 1e-6);
}
