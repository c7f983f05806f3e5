#include "latticemap/freefermion.hpp"

#include <cmath>
#include <string>

namespace latticemap::freefermion {

namespace {

cplx sq(cplx z) { return std::sqrt(z); }

void require_nonzero(cplx z, const char* what) {
    if (z == 0.0) throw DomainError(std::string(what) + " must be nonzero");
}

}  // namespace

void check_constraint(const Mixed8VWeights& m, double tol) {
    auto close = [tol](cplx a, cplx b) { return std::abs(a - b) <= tol * std::max(1.0, std::max(std::abs(a), std::abs(b))); };
    if (!close(m.w2, m.w1)) throw DomainError("gauge constraint w2 = w1 violated");
    if (!close(m.v1 * m.v6 * m.w5, m.v2 * m.v5 * m.w6)) throw DomainError("gauge constraint v1 v6 w5 = v2 v5 w6 violated");
    for (cplx v : {m.v1, m.v2, m.v5, m.v6}) require_nonzero(v, "gauge: odd weight");
    for (cplx w : {m.w5, m.w6}) require_nonzero(w, "gauge: w5, w6");
}

std::pair<CMatrix, CMatrix> gauge_matrices(const Mixed8VWeights& m, const GaugeParams& g) {
    check_constraint(m);
    require_nonzero(g.z1, "z1");
    require_nonzero(g.z2, "z2");
    CMatrix m1(2, 2), m2(2, 2);
    m1 << 1.0, sq(m.v1 / m.v2), -g.z1 * sq(m.v2 / m.v1), g.z1;
    m2 << 1.0, sq(m.v5 / m.v6), -g.z2 * sq(m.v6 / m.v5), g.z2;
    return {m1, m2};
}

Even8VWeights gauge_closed_form(const Mixed8VWeights& m, const GaugeParams& g) {
    check_constraint(m);
    const cplx w1 = m.w1, w5 = m.w5, w6 = m.w6, v1 = m.v1, v2 = m.v2, v5 = m.v5, v6 = m.v6;
    const cplx s56 = sq(w6 * w5), s12 = sq(v1 * v2), sv56 = sq(v5 * v6);
    Even8VWeights e;
    e.a_plus = (w1 + s56 + s12 + sv56) / 2.0;
    e.a_minus = (w1 + s56 - s12 - sv56) / 2.0;
    e.b_plus = (w1 - s56 + s12 - sv56) / 2.0;
    e.b_minus = (w1 - s56 - s12 + sv56) / 2.0;
    e.c_plus = g.z2 / g.z1 * (w1 * sq(w6 / w5) + w6 - v1 * sq(v6 / v5) - v6 * sq(v1 / v2)) / 2.0;
    e.c_minus = g.z1 / g.z2 * (w1 * sq(w5 / w6) + w5 + v2 * sq(v5 / v6) + v5 * sq(v2 / v1)) / 2.0;
    e.d_plus = 1.0 / (g.z1 * g.z2) * (w1 * sq(v1 * v5 / (v2 * v6)) - v1 * w5 / v2 + v5 * sq(v1 / v2) - v1 * sq(v5 / v6)) / 2.0;
    e.d_minus = g.z1 * g.z2 * (w1 * sq(v2 * v6 / (v1 * v5)) - v6 * w5 / v5 + v2 * sq(v6 / v5) - v6 * sq(v2 / v1)) / 2.0;
    return e;
}

GaugeOutcome gauge_transform(const Mixed8VWeights& m, const GaugeParams& g) {
    auto [m1, m2] = gauge_matrices(m, g);
    CMatrix gm = kron(m1, m2);
    GaugeOutcome out;
    out.lax = gm * vertex::lax_from_tensor(vertex::tensor_from_mixed8v(m)) * gm.inverse();
    vertex::VertexTensor t = vertex::tensor_from_lax(out.lax, 2);
    out.weights = vertex::even8v_from_tensor(t);
    vertex::VertexTensor even = vertex::tensor_from_even8v(out.weights);
    double vanished = 0.0;
    for (std::size_t i = 0; i < t.data().size(); ++i)
        if (even.data()[i] == 0.0) vanished = std::max(vanished, std::abs(t.data()[i]));
    const double mx = max_abs(out.lax);
    out.pattern_residual = mx > 0 ? vanished / mx : vanished;
    const Even8VWeights cf = gauge_closed_form(m, g);
    const cplx got[8] = {out.weights.a_plus, out.weights.a_minus, out.weights.b_plus, out.weights.b_minus,
                         out.weights.c_plus, out.weights.c_minus, out.weights.d_plus, out.weights.d_minus};
    const cplx want[8] = {cf.a_plus, cf.a_minus, cf.b_plus, cf.b_minus, cf.c_plus, cf.c_minus, cf.d_plus, cf.d_minus};
    for (int i = 0; i < 8; ++i)
        out.closed_form_deviation = std::max(out.closed_form_deviation, std::abs(got[i] - want[i]) / std::max(1.0, mx));
    return out;
}

Even8VWeights gauge_transform_lax(const Mixed8VWeights& m, const GaugeParams& g) {
    GaugeOutcome out = gauge_transform(m, g);
    if (out.pattern_residual > 1e-10) throw CheckFailed("gauge transform did not produce the even eight-vertex pattern");
    if (out.closed_form_deviation > 1e-9) throw CheckFailed("gauge transform disagrees with the closed-form weights");
    return out.weights;
}

GaugeParams balancing_gauge(const Mixed8VWeights& m) {
    const Even8VWeights e0 = gauge_closed_form(m, GaugeParams{});
    for (cplx v : {e0.c_plus, e0.c_minus, e0.d_plus, e0.d_minus}) require_nonzero(v, "balancing_gauge: c and d weights");
    // c+ ~ z2/z1, c- ~ z1/z2, d+ ~ 1/(z1 z2), d- ~ z1 z2
    const cplx rho = sq(e0.c_plus / e0.c_minus);
    const cplx sigma = sq(e0.d_plus / e0.d_minus);
    return GaugeParams{sq(rho * sigma), sq(sigma / rho)};
}

Even8VWeights ising_freefermion_weights(const spin::IsingParams& p, equiv::MapKind kind) {
    if (p.hfield != 0.0) throw InvalidArgument("ising_freefermion_weights: needs zero field");
    const double jh = p.beta * p.jh, jv = p.beta * p.jv;
    if (!(jh > 0.0) || !(jv > 0.0)) throw InvalidArgument("ising_freefermion_weights: needs positive couplings");
    const double ch = std::cosh(jh), sh = std::sinh(jh), cv = std::cosh(jv), sv = std::sinh(jv);
    Even8VWeights e;
    e.a_plus = 2 * ch * cv;
    if (kind == equiv::MapKind::A) {
        e.a_minus = 2 * ch * sv;
        e.b_plus = 2 * sh * cv;
        e.b_minus = 2 * sh * sv;
        const double r = std::sqrt(2 * std::sinh(2 * jv));
        e.c_plus = e.c_minus = ch * r;
        e.d_plus = e.d_minus = sh * r;
    } else {
        e.a_minus = 2 * sh * sv;
        e.b_plus = 2 * ch * sv;
        e.b_minus = 2 * sh * cv;
        e.c_plus = e.c_minus = e.d_plus = e.d_minus = std::sqrt(std::sinh(2 * jh) * std::sinh(2 * jv));
    }
    return e;
}

cplx free_fermion_residual(const Even8VWeights& e) {
    return e.a_plus * e.a_minus + e.b_plus * e.b_minus - e.c_plus * e.c_minus - e.d_plus * e.d_minus;
}

}  // namespace latticemap::freefermion
