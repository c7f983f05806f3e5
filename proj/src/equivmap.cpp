#include "latticemap/equivmap.hpp"

#include <cmath>

namespace latticemap::equiv {

const char* to_string(MapKind k) { return k == MapKind::A ? "a" : "b"; }

vertex::VertexTensor map_spin_to_vertex(const spin::EdgeWeights& ew, MapKind kind) {
    ew.validate();
    const int n = ew.n;
    vertex::VertexTensor t(n);
    for (int i1 = 0; i1 < n; ++i1)
        for (int i2 = 0; i2 < n; ++i2)
            for (int i3 = 0; i3 < n; ++i3)
                t(i1, i2, i3, i1) = kind == MapKind::A ? ew.wh(i3, i1) * ew.wv(i3, i2) : ew.wv(i3, i1) * ew.wh(i1, i2);
    return t;
}

double verify_transfer_identity(const spin::EdgeWeights& ew, MapKind kind, int L, const Limits& lim, Frame frame) {
    CMatrix tv = vertex::t_vertex(map_spin_to_vertex(ew, kind), L, lim);
    CMatrix target = kind == MapKind::A ? spin::t_diag(spin::EdgeWeights{ew.n, ew.wv, ew.wh}, L, lim)
                                        : spin::t_row(ew, L, lim);
    const std::size_t d = static_cast<std::size_t>(tv.rows());
    std::vector<std::size_t> rev(d);
    for (std::size_t x = 0; x < d; ++x) {
        if (frame == Frame::Literal) {
            rev[x] = x;
            continue;
        }
        std::size_t y = 0, t = x;
        for (int j = 0; j < L; ++j) {
            y = y * ew.n + t % ew.n;
            t /= ew.n;
        }
        rev[x] = y;
    }
    double dev = 0.0;
    for (std::size_t x = 0; x < d; ++x)
        for (std::size_t y = 0; y < d; ++y) dev = std::max(dev, std::abs(tv(x, y) - target(rev[x], rev[y])));
    return dev;
}

vertex::Mixed8VWeights ising_mixed8v(const spin::IsingParams& p, MapKind kind) {
    const double b = p.beta, jh = p.jh, jv = p.jv, h = p.hfield;
    auto e = [b](double s) { return cplx(std::exp(b * s), 0.0); };
    vertex::Mixed8VWeights m;
    m.w1 = e(jh + jv + h);
    m.w2 = e(jh + jv - h);
    if (kind == MapKind::A) {
        m.w5 = e(-jh + jv + h / 2);
        m.w6 = e(-jh + jv - h / 2);
        m.v1 = e(jh - jv + h / 2);
        m.v2 = e(jh - jv - h / 2);
        m.v5 = m.v6 = e(-jh - jv);
    } else {
        m.w5 = m.w6 = e(-jh - jv);
        m.v1 = e(-jh + jv + h / 2);
        m.v2 = e(-jh + jv - h / 2);
        m.v5 = e(jh - jv - h / 2);
        m.v6 = e(jh - jv + h / 2);
    }
    return m;
}

vertex::Sixteen16VWeights liwu_sixteen(const spin::IsingParams& p) {
    const double bj = p.beta * p.jh, bh = p.beta * p.hfield;
    if (!(p.jh > 0.0) || !(p.beta > 0.0)) throw InvalidArgument("liwu_sixteen: needs beta*J > 0 for sqrt(tanh)");
    const double rt = std::sqrt(std::tanh(bj));
    const double ch = std::cosh(bj), sh = std::sinh(bj);
    vertex::Sixteen16VWeights s;
    s.w[0] = 2 * std::cosh(bh) * ch * ch;
    s.w[1] = 2 * std::cosh(bh) * sh * sh;
    for (int i = 2; i < 8; ++i) s.w[i] = std::cosh(bh) * std::sinh(2 * bj);
    const double plus = 2 * std::sinh(bh) * ch * ch * rt;
    const double minus = 2 * std::sinh(bh) * sh * sh / rt;
    for (int i : {0, 2, 5, 7}) s.v[i] = plus;
    for (int i : {1, 3, 4, 6}) s.v[i] = minus;
    return s;
}

}  // namespace latticemap::equiv
