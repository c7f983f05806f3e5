#include "latticemap/commands.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "latticemap/equivmap.hpp"
#include "latticemap/freefermion.hpp"
#include "latticemap/fz27.hpp"
#include "latticemap/mixed8v.hpp"
#include "latticemap/ybe.hpp"

namespace latticemap::cli {

namespace {

equiv::MapKind parse_map(const std::string& s) {
    if (s == "a" || s == "A") return equiv::MapKind::A;
    if (s == "b" || s == "B") return equiv::MapKind::B;
    throw InvalidArgument("map must be a or b, got " + s);
}

void require_L(int L, int lo) {
    if (L < lo) throw InvalidArgument("L must be >= " + std::to_string(lo));
}

double spectrum_gap(const CMatrix& a, const CMatrix& b) {
    auto ea = eig_spectrum(a), eb = eig_spectrum(b);
    double gap = 0.0;
    for (std::size_t i = 0; i < ea.size(); ++i) gap = std::max(gap, std::abs(ea[i] - eb[i]));
    return gap;
}

std::array<mixed8v::Mixed8VWeights, 3> curve_points(double k, double lambda, const std::array<double, 3>& xs) {
    std::array<mixed8v::Mixed8VWeights, 3> m;
    for (int i = 0; i < 3; ++i) m[i] = mixed8v::uniformized_weights({k, lambda, xs[i]});
    return m;
}

CMatrix even_lax(const vertex::Even8VWeights& e) { return vertex::lax_from_tensor(vertex::tensor_from_even8v(e)); }

}  // namespace

int exit_code_for(const std::exception& e) {
    if (dynamic_cast<const InvalidArgument*>(&e)) return kExitUsage;
    if (dynamic_cast<const SizeCapError*>(&e)) return kExitSizeCap;
    if (dynamic_cast<const DomainError*>(&e)) return kExitDomain;
    if (dynamic_cast<const CheckFailed*>(&e)) return kExitCheckFailed;
    return kExitCheckFailed;
}

RunReport cmd_equiv(const EquivOptions& o, const Limits& lim) {
    RunReport rep;
    rep.command = "equiv";
    rep.seed = o.seed;
    const equiv::MapKind kind = parse_map(o.map);
    require_L(o.L, 1);
    spin::EdgeWeights ew;
    if (o.model == "ising") {
        rep.param("beta", o.beta);
        rep.param("jh", o.jh);
        rep.param("jv", o.jv);
        rep.param("hfield", o.hfield);
        checked_dim(2, o.L, lim);
        ew = spin::ising_edge_weights({o.beta, o.jh, o.jv, o.hfield});
    } else if (o.model == "fz3") {
        rep.param("x", o.x);
        checked_dim(3, o.L, lim);
        ew = fz27::fz_edge_weights({o.x});
    } else if (o.model == "random") {
        if (o.n < 2) throw InvalidArgument("n must be >= 2");
        rep.param("n", std::to_string(o.n));
        checked_dim(o.n, o.L, lim);
        ew = spin::random_edge_weights(o.n, o.seed);
    } else {
        throw InvalidArgument("model must be ising, fz3 or random, got " + o.model);
    }
    rep.param("model", o.model);
    rep.param("map", equiv::to_string(kind));
    rep.param("L", std::to_string(o.L));
    checked_configs(ew.n, o.L * o.L, lim);

    const vertex::VertexTensor t = equiv::map_spin_to_vertex(ew, kind);
    const double n3 = std::pow(ew.n, 3);
    rep.record("nonzero_vertex_weights", static_cast<double>(t.count_nonzero()), 0.0, t.count_nonzero() == n3);
    rep.check("transfer_identity_max_dev", equiv::verify_transfer_identity(ew, kind, o.L, lim), 1e-12);
    const cplx zt = mat_trace_power(vertex::t_vertex(t, o.L, lim), o.L);
    const cplx zs = spin::z_spin_bruteforce(ew, o.L, lim);
    rep.record("z_spin", zs.real(), 0.0, true);
    rep.check("partition_rel_err", rel_err(zt, zs), 1e-10);
    return rep;
}

RunReport cmd_ybe(const YbeOptions& o) {
    RunReport rep;
    rep.command = "ybe";
    rep.param("system", o.system);
    const auto& x = o.points;
    rep.param("points", format_double(x[0]) + "," + format_double(x[1]) + "," + format_double(x[2]));
    if (o.system == "fz27") {
        using namespace fz27;
        rep.check("rll_residual", ybe::rll_residual(fz_r_matrix(x[0], x[1]), fz_lax({x[0]}), fz_lax({x[1]})), 1e-9);
        rep.check("ybe_residual",
                  ybe::ybe_residual(fz_r_matrix(x[0], x[1]), fz_r_matrix(x[0], x[2]), fz_r_matrix(x[1], x[2])), 1e-9);
        const auto u = ybe::unitarity_residual(fz_unitarity_norm(x[0], x[1]) * fz_r_matrix(x[0], x[1]),
                                               fz_unitarity_norm(x[1], x[0]) * fz_r_matrix(x[1], x[0]));
        rep.check("unitarity_residual", u.residual, 1e-8);
        rep.check("unitarity_constant_minus_1", std::abs(u.constant - 1.0), 1e-8);
        rep.check("r_at_zero_vs_lax", max_abs(fz_r_matrix(x[0], 0.0) - fz_lax({x[0]})), 1e-10);
        return rep;
    }
    if (o.system != "mixed8v" && o.system != "even8v")
        throw InvalidArgument("system must be mixed8v, fz27 or even8v, got " + o.system);
    rep.param("k", o.k);
    rep.param("lambda", o.lambda);
    const auto m = curve_points(o.k, o.lambda, x);
    const auto inv = mixed8v::uniformized_invariants(o.k, o.lambda);
    if (o.system == "mixed8v") {
        double drift = 0.0;
        for (const auto& mi : m) {
            const auto iv = mixed8v::invariants_of(mi);
            drift = std::max({drift, std::abs(iv.delta1 - inv.delta1), std::abs(iv.delta2 - inv.delta2)});
        }
        rep.check("invariant_drift", drift, 1e-10);
        auto r = [&](int a, int b) { return mixed8v::closed_form_r(m[a], m[b]); };
        rep.check("rll_residual", ybe::rll_residual(r(0, 1), mixed8v::mixed_lax(m[0]), mixed8v::mixed_lax(m[1])), 1e-9);
        rep.check("ybe_residual", ybe::ybe_residual(r(0, 1), r(0, 2), r(1, 2)), 1e-9);
        const auto u = ybe::unitarity_residual(mixed8v::unitarity_normalization(o.k, x[0], x[1]) * r(0, 1),
                                               mixed8v::unitarity_normalization(o.k, x[1], x[0]) * r(1, 0));
        rep.check("unitarity_residual", u.residual, 1e-8);
        rep.check("unitarity_constant_minus_1", std::abs(u.constant - 1.0), 1e-8);
        const auto fe = mixed8v::functional_equations(mixed8v::closed_form_r_entries(m[0], m[1]), m[0], m[1]);
        double worst = 0.0;
        for (cplx f : fe) worst = std::max(worst, std::abs(f));
        rep.check("functional_equations_max", worst, 1e-10);
    } else {
        std::array<vertex::Even8VWeights, 3> e;
        for (int i = 0; i < 3; ++i) e[i] = mixed8v::even_from_mixed(m[i]);
        double drift = 0.0;
        for (const auto& ei : e) {
            const auto iv = mixed8v::even_invariants(ei);
            drift = std::max({drift, std::abs(iv.delta1 - inv.delta1), std::abs(iv.delta2 - inv.delta2)});
        }
        rep.check("invariant_drift", drift, 1e-10);
        auto r = [&](int a, int b) { return mixed8v::baxter_even_r(e[a], e[b]); };
        rep.check("rll_residual", ybe::rll_residual(r(0, 1), even_lax(e[0]), even_lax(e[1])), 1e-9);
        rep.check("ybe_residual", ybe::ybe_residual(r(0, 1), r(0, 2), r(1, 2)), 1e-9);
        const auto u = ybe::unitarity_residual(r(0, 1), r(1, 0));
        rep.check("unitarity_residual", u.residual, 1e-8);
        rep.record("unitarity_constant", std::abs(u.constant), 0.0, true);
    }
    return rep;
}

RunReport cmd_solve_r(const SolveROptions& o) {
    RunReport rep;
    rep.command = "solve-r";
    rep.param("system", o.system);
    rep.param("x", o.x);
    rep.param("y", o.y);
    rep.param("tol", o.tol);
    CMatrix la, lb, closed;
    if (o.system == "fz27") {
        la = fz27::fz_lax({o.x});
        lb = fz27::fz_lax({o.y});
        closed = fz27::fz_r_matrix(o.x, o.y);
    } else if (o.system == "mixed8v" || o.system == "even8v") {
        rep.param("k", o.k);
        rep.param("lambda", o.lambda);
        const auto ma = mixed8v::uniformized_weights({o.k, o.lambda, o.x});
        const auto mb = mixed8v::uniformized_weights({o.k, o.lambda, o.y});
        if (o.system == "mixed8v") {
            la = mixed8v::mixed_lax(ma);
            lb = mixed8v::mixed_lax(mb);
            closed = mixed8v::closed_form_r(ma, mb);
        } else {
            const auto ea = mixed8v::even_from_mixed(ma), eb = mixed8v::even_from_mixed(mb);
            la = even_lax(ea);
            lb = even_lax(eb);
            closed = mixed8v::baxter_even_r(ea, eb);
        }
    } else {
        throw InvalidArgument("system must be fz27, mixed8v or even8v, got " + o.system);
    }
    const auto res = ybe::solve_r({{la, lb}}, o.tol);
    rep.record("kernel_dim", res.kernel_dim, 1.0, res.kernel_dim == 1);
    rep.check("rll_kernel_residual", res.residual, 1e-9);
    const double dev = res.kernel_dim >= 1 ? max_abs(res.r - ybe::normalize_r(closed)) : INFINITY;
    rep.check("closed_form_max_dev", dev, 1e-6);
    return rep;
}

RunReport cmd_surface(const SurfaceOptions& o) {
    RunReport rep;
    rep.command = "surface";
    rep.param("k", o.k);
    rep.param("lambda", o.lambda);
    rep.param("x1", o.x1);
    rep.param("x2", o.x2);
    const auto m1 = mixed8v::uniformized_weights({o.k, o.lambda, o.x1});
    const auto m2 = mixed8v::uniformized_weights({o.k, o.lambda, o.x2});
    const auto inv = mixed8v::uniformized_invariants(o.k, o.lambda);
    const auto r = mixed8v::closed_form_r_entries(m1, m2);
    const double scale = std::max({std::abs(r.w1), std::abs(r.w5), std::abs(r.v1), std::abs(r.v5)});
    rep.check("surface_abs_normalized", std::abs(mixed8v::surface_eval(r, inv).s) / std::pow(scale, 4), 1e-8);
    rep.check("eli5_residual", std::abs(mixed8v::eli5_residual(m2, inv)), 1e-10);
    for (const auto& p : mixed8v::singular_points()) {
        const mixed8v::REntries sp{double(p[0]), double(p[1]), double(p[2]), double(p[3])};
        const auto sv = mixed8v::surface_eval(sp, inv);
        double worst = std::abs(sv.s);
        for (cplx g : sv.grad) worst = std::max(worst, std::abs(g));
        rep.check("singular[" + std::to_string(p[0]) + ":" + std::to_string(p[1]) + ":" + std::to_string(p[2]) + ":" +
                      std::to_string(p[3]) + "]",
                  worst, 1e-14);
    }
    return rep;
}

RunReport cmd_freefermion(const FreefermionOptions& o, const Limits& lim) {
    RunReport rep;
    rep.command = "freefermion";
    const equiv::MapKind kind = parse_map(o.map);
    require_L(o.L, 1);
    rep.param("map", equiv::to_string(kind));
    rep.param("beta", o.beta);
    rep.param("jh", o.jh);
    rep.param("jv", o.jv);
    rep.param("L", std::to_string(o.L));
    checked_dim(2, o.L, lim);
    checked_configs(2, o.L * o.L, lim);
    const spin::IsingParams p{o.beta, o.jh, o.jv, 0.0};
    const auto m = equiv::ising_mixed8v(p, kind);
    const auto g = freefermion::balancing_gauge(m);
    const auto out = freefermion::gauge_transform(m, g);
    rep.check("zero_pattern_residual", out.pattern_residual, 1e-10);
    rep.check("closed_form_dev", out.closed_form_deviation, 1e-9);
    rep.check("free_fermion_residual", std::abs(freefermion::free_fermion_residual(out.weights)), 1e-10);
    const auto e = freefermion::ising_freefermion_weights(p, kind);
    const cplx got[8] = {out.weights.a_plus, out.weights.a_minus, out.weights.b_plus, out.weights.b_minus,
                         out.weights.c_plus, out.weights.c_minus, out.weights.d_plus, out.weights.d_minus};
    const cplx want[8] = {e.a_plus, e.a_minus, e.b_plus, e.b_minus, e.c_plus, e.c_minus, e.d_plus, e.d_minus};
    double dev = 0.0;
    for (int i = 0; i < 8; ++i) dev = std::max(dev, std::abs(got[i] - want[i]));
    rep.check("ising_weight_list_dev", dev, 1e-10);
    const cplx zs = spin::z_spin_bruteforce(spin::ising_edge_weights(p), o.L, lim);
    const cplx zt = mat_trace_power(vertex::t_vertex(vertex::tensor_from_even8v(e), o.L, lim), o.L);
    rep.record("z_ising", zs.real(), 0.0, true);
    rep.check("partition_rel_err", rel_err(zt, zs), 1e-10);
    return rep;
}

spin::SpinHamiltonianLimit random_spin_limit(int n, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    spin::SpinHamiltonianLimit hl{CMatrix(n, n), CMatrix(n, n)};
    for (int i = 0; i < n * n; ++i) hl.wh_dot.data()[i] = u(rng);
    for (int i = 0; i < n * n; ++i) hl.wv_dot.data()[i] = u(rng);
    return hl;
}

vertex::VertexHamiltonianLimit random_vertex_limit(int n, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    vertex::VertexHamiltonianLimit hl{vertex::VertexTensor(n)};
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
                for (int d = 0; d < n; ++d) hl.w_dot(a, b, c, d) = u(rng);
    return hl;
}

double fd_spin_limit_deviation(const spin::SpinHamiltonianLimit& hl, int L, double step, const Limits& lim) {
    const int n = static_cast<int>(hl.wh_dot.rows());
    auto at = [&](double e) {
        spin::EdgeWeights ew{n, CMatrix::Ones(n, n) + e * hl.wh_dot, identity(n) + e * hl.wv_dot};
        return spin::t_diag(ew, L, lim);
    };
    const CMatrix fd = (at(step) - at(-step)) / (2 * step);
    return max_abs(fd - spin::spin_hamiltonian(hl, L));
}

double fd_vertex_limit_deviation(const vertex::VertexHamiltonianLimit& hl, int L, double step, const Limits& lim) {
    const int n = hl.w_dot.n();
    const vertex::VertexTensor p = vertex::VertexTensor::permutator(n);
    const CMatrix t0 = vertex::t_vertex(p, L, lim);
    const CMatrix diff = (vertex::t_vertex(p + hl.w_dot * step, L, lim) - vertex::t_vertex(p + hl.w_dot * (-step), L, lim)) /
                         (2 * step);
    const CMatrix fd = t0.partialPivLu().solve(diff);
    return max_abs(fd - vertex::vertex_hamiltonian(hl, L));
}

RunReport cmd_hamiltonian(const HamiltonianOptions& o, const Limits& lim) {
    RunReport rep;
    rep.command = "hamiltonian";
    rep.param("system", o.system);
    rep.param("L", std::to_string(o.L));
    require_L(o.L, 2);
    if (o.system == "mixed") {
        rep.param("theta", o.theta);
        rep.param("kappa", o.kappa);
        rep.param("j", o.j);
        checked_dim(2, o.L, lim);
        const mixed8v::MixedChainParams p{o.theta, o.kappa, o.j};
        const CMatrix h1 = mixed8v::mixed_hamiltonian(p, o.L);
        const CMatrix h2 = mixed8v::xy_dm_hamiltonian(p, o.L);
        rep.check("hermiticity_dev", max_abs(h1 - h1.adjoint()), 1e-12);
        rep.check("spectrum_gap", spectrum_gap(h1, h2), 1e-9);
        rep.check("substitution_operator_dev", max_abs(mixed8v::substituted_mixed_hamiltonian(p, o.L) - h2), 1e-12);
    } else if (o.system == "fz27") {
        rep.param("x", o.x);
        rep.param("x0", o.x0);
        checked_dim(3, o.L, lim);
        const CMatrix t = fz27::fz_extended_transfer(o.x, o.x0, o.L, lim);
        const CMatrix h = fz27::fz_hamiltonian(o.x0, o.L, lim);
        rep.check("commutator", max_abs(t * h - h * t), 1e-8);
    } else if (o.system == "spin" || o.system == "vertex") {
        if (o.n < 2) throw InvalidArgument("n must be >= 2");
        rep.param("n", std::to_string(o.n));
        rep.param("step", o.step);
        rep.seed = o.seed;
        checked_dim(o.n, o.L, lim);
        const double dev = o.system == "spin"
                               ? fd_spin_limit_deviation(random_spin_limit(o.n, o.seed), o.L, o.step, lim)
                               : fd_vertex_limit_deviation(random_vertex_limit(o.n, o.seed), o.L, o.step, lim);
        rep.check("finite_difference_dev", dev, 1e-6);
    } else {
        throw InvalidArgument("system must be mixed, fz27, spin or vertex, got " + o.system);
    }
    return rep;
}

}  // namespace latticemap::cli
