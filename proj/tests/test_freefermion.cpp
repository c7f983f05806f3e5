#include <doctest.h>

#include <cmath>
#include <random>

#include "latticemap/equivmap.hpp"
#include "latticemap/freefermion.hpp"
#include "testutil.hpp"

using namespace latticemap;
using namespace latticemap::freefermion;
using equiv::MapKind;

namespace {

// random point on the gauge constraint surface
Mixed8VWeights random_constrained(std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> u(0.5, 1.5);
    Mixed8VWeights m;
    m.w1 = m.w2 = u(rng);
    m.w5 = u(rng);
    m.w6 = u(rng);
    m.v1 = u(rng);
    m.v2 = u(rng);
    m.v5 = u(rng);
    m.v6 = m.v2 * m.v5 * m.w6 / (m.v1 * m.w5);
    return m;
}

std::array<cplx, 8> list(const Even8VWeights& e) {
    return {e.a_plus, e.a_minus, e.b_plus, e.b_minus, e.c_plus, e.c_minus, e.d_plus, e.d_minus};
}

double max_dev(const Even8VWeights& a, const Even8VWeights& b) {
    auto x = list(a), y = list(b);
    double d = 0.0;
    for (int i = 0; i < 8; ++i) d = std::max(d, std::abs(x[i] - y[i]));
    return d;
}

}  // namespace

TEST_CASE("gauge matrices") {
    Mixed8VWeights sym{1.0, 1.0, 0.5, 0.5, 0.7, 0.7, 0.3, 0.3};
    auto [m1, m2] = gauge_matrices(sym, {});
    CMatrix want(2, 2);
    want << 1.0, 1.0, -1.0, 1.0;
    CHECK(tu::rel(m1, want) < 1e-15);
    CHECK(tu::rel(m2, want) < 1e-15);

    auto a = equiv::ising_mixed8v({1.0, 0.5, 0.5, 0.0}, MapKind::A);
    CHECK_NOTHROW(gauge_matrices(a, {}));
    for (std::uint64_t s = 1; s <= 5; ++s) {
        const GaugeParams g{cplx(0.7, 0.2), cplx(1.3, -0.4)};
        auto [n1, n2] = gauge_matrices(random_constrained(s), g);
        CHECK(std::abs(n1.determinant() - 2.0 * g.z1) < 1e-13);
        CHECK(std::abs(n2.determinant() - 2.0 * g.z2) < 1e-13);
    }
    Mixed8VWeights bad = sym;
    bad.w2 = 2.0;
    CHECK_THROWS_AS(gauge_matrices(bad, {}), DomainError);
    bad = sym;
    bad.v6 = 0.9;
    CHECK_THROWS_AS(gauge_matrices(bad, {}), DomainError);
    bad = sym;
    bad.v1 = bad.v2 = 0.0;
    CHECK_THROWS_AS(gauge_matrices(bad, {}), DomainError);
    CHECK_THROWS_AS(gauge_matrices(sym, {0.0, 1.0}), DomainError);
}

TEST_CASE("gauge transform of the Ising lists") {
    const spin::IsingParams p{1.0, 0.5, 0.5, 0.0};
    for (auto k : {MapKind::A, MapKind::B}) {
        auto m = equiv::ising_mixed8v(p, k);
        auto e = gauge_transform_lax(m, balancing_gauge(m));
        CHECK(max_dev(e, ising_freefermion_weights(p, k)) <= 1e-10);
        CHECK(std::abs(free_fermion_residual(e)) <= 1e-10);
    }
    auto f1 = ising_freefermion_weights(p, MapKind::A);
    CHECK(std::abs(f1.a_plus - 2 * std::cosh(0.5) * std::cosh(0.5)) < 1e-15);
    CHECK(std::abs(f1.c_plus - std::cosh(0.5) * std::sqrt(2 * std::sinh(1.0))) < 1e-15);
    auto f2 = ising_freefermion_weights(p, MapKind::B);
    CHECK(std::abs(f2.c_plus - std::sinh(1.0)) < 1e-15);
    CHECK(f2.c_plus == f2.d_minus);
    CHECK(std::abs(free_fermion_residual(ising_freefermion_weights({1.0, 0.5, 0.5, 0.0}, MapKind::A))) <= 1e-12);
    CHECK_THROWS_AS(ising_freefermion_weights({1.0, 0.5, 0.5, 0.1}, MapKind::A), InvalidArgument);
    CHECK_THROWS_AS(ising_freefermion_weights({1.0, -0.5, 0.5, 0.0}, MapKind::A), InvalidArgument);
}

TEST_CASE("balancing gauge") {
    for (std::uint64_t s = 1; s <= 5; ++s) {
        auto m = random_constrained(s);
        auto e = gauge_transform_lax(m, balancing_gauge(m));
        CHECK(rel_err(e.c_plus, e.c_minus) <= 1e-12);
        CHECK(rel_err(e.d_plus, e.d_minus) <= 1e-12);
    }
}

TEST_CASE("transformed Lax keeps the even pattern and the closed forms") {
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> u(0.5, 1.5);
    for (std::uint64_t s = 1; s <= 20; ++s) {
        auto m = random_constrained(s);
        const GaugeParams g{cplx(u(rng), u(rng) - 1.0), cplx(u(rng), u(rng) - 1.0)};
        auto out = gauge_transform(m, g);
        CHECK(out.pattern_residual <= 1e-10);
        CHECK(out.closed_form_deviation <= 1e-9);
        CHECK(std::abs(free_fermion_residual(out.weights)) <= 1e-10);
        CHECK(max_dev(out.weights, gauge_closed_form(m, g)) <= 1e-9);
    }
}

TEST_CASE("products c+c- and d+d- do not depend on the gauge") {
    auto m = random_constrained(4);
    auto e0 = gauge_closed_form(m, {});
    for (auto g : {GaugeParams{2.0, 0.5}, GaugeParams{cplx(0.3, 0.8), cplx(-1.1, 0.2)}}) {
        auto e = gauge_closed_form(m, g);
        CHECK(std::abs(e.c_plus * e.c_minus - e0.c_plus * e0.c_minus) <= 1e-12);
        CHECK(std::abs(e.d_plus * e.d_minus - e0.d_plus * e0.d_minus) <= 1e-12);
        CHECK(std::abs(e.a_plus - e0.a_plus) <= 1e-15);
    }
}

TEST_CASE("gauge invariance of the partition function") {
    for (std::uint64_t s = 1; s <= 3; ++s) {
        auto m = random_constrained(s);
        const GaugeParams g{cplx(0.8, 0.3), cplx(1.4, -0.2)};
        auto e = gauge_transform_lax(m, g);
        for (int L : {2, 3}) {
            const cplx zm = mat_trace_power(vertex::t_vertex(vertex::tensor_from_mixed8v(m), L), L);
            const cplx ze = mat_trace_power(vertex::t_vertex(vertex::tensor_from_even8v(e), L), L);
            CHECK(rel_err(ze, zm) <= 1e-9);
        }
    }
}

TEST_CASE("free-fermion partition equals zero-field Ising") {
    for (auto [jh, jv] : {std::pair{0.5, 0.5}, {0.3, 0.9}}) {
        const spin::IsingParams p{1.0, jh, jv, 0.0};
        for (auto k : {MapKind::A, MapKind::B})
            for (int L : {2, 3}) {
                const cplx zt = mat_trace_power(vertex::t_vertex(vertex::tensor_from_even8v(ising_freefermion_weights(p, k)), L), L);
                CHECK(rel_err(zt, spin::z_spin_bruteforce(spin::ising_edge_weights(p), L)) <= 1e-10);
            }
    }
    const spin::IsingParams p{1.0, 0.5, 0.5, 0.0};
    auto t = [&](int L) {
        return mat_trace_power(vertex::t_vertex(vertex::tensor_from_even8v(ising_freefermion_weights(p, MapKind::A)), L), L);
    };
    CHECK(rel_err(t(2), 121.232931344066) <= 1e-12);
    CHECK(rel_err(t(3), 20437.9832138472) <= 1e-12);
}
