#include "latticemap/fz27.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "latticemap/equivmap.hpp"
#include "latticemap/vertex.hpp"

namespace latticemap::fz27 {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kPoleTol = 1e-12;

cplx ratio(cplx num, cplx den, const char* what) {
    if (std::abs(den) < kPoleTol) throw DomainError(std::string("fz27: pole in ") + what);
    return num / den;
}

}  // namespace

cplx FZParams::b() const { return ratio(std::sin(kPi / 6 - x), std::sin(kPi / 6 + x), "b(x)"); }

cplx FZParams::bbar() const { return ratio(std::sin(x), std::cos(kPi / 6 + x), "bbar(x)"); }

void FZParams::validate() const {
    if (!std::isfinite(x.real()) || !std::isfinite(x.imag())) throw InvalidArgument("fz27: non-finite x");
    (void)b();
    (void)bbar();
}

Z3Generators Z3Generators::make() {
    const cplx om = std::polar(1.0, 2 * kPi / 3);
    Z3Generators g;
    g.x_op = CMatrix::Zero(3, 3);
    g.x_op(0, 2) = g.x_op(1, 0) = g.x_op(2, 1) = 1.0;
    g.z_op = CMatrix::Zero(3, 3);
    g.z_op(0, 0) = 1.0;
    g.z_op(1, 1) = om;
    g.z_op(2, 2) = om * om;
    return g;
}

spin::EdgeWeights fz_edge_weights(const FZParams& p) {
    p.validate();
    spin::EdgeWeights ew;
    ew.n = 3;
    ew.wh = CMatrix::Constant(3, 3, p.b());
    ew.wv = CMatrix::Constant(3, 3, p.bbar());
    ew.wh.diagonal().setOnes();
    ew.wv.diagonal().setOnes();
    return ew;
}

FZWeights fz_lax_weights(const FZParams& p) {
    p.validate();
    const cplx b = p.b(), bb = p.bbar();
    return FZWeights{1.0, bb, b * bb, b, b * bb};
}

CMatrix fz_pattern(const FZWeights& w) {
    const cplx z = 0.0;
    CMatrix m(9, 9);
    m << w.w1, z, z, w.w2, z, z, w.w2, z, z,
         w.w3, z, z, w.w4, z, z, w.w5, z, z,
         w.w3, z, z, w.w5, z, z, w.w4, z, z,
         z, w.w4, z, z, w.w3, z, z, w.w5, z,
         z, w.w2, z, z, w.w1, z, z, w.w2, z,
         z, w.w5, z, z, w.w3, z, z, w.w4, z,
         z, z, w.w4, z, z, w.w5, z, z, w.w3,
         z, z, w.w5, z, z, w.w4, z, z, w.w3,
         z, z, w.w2, z, z, w.w2, z, z, w.w1;
    return m;
}

CMatrix fz_lax(const FZParams& p) {
    CMatrix lax = vertex::lax_from_tensor(equiv::map_spin_to_vertex(fz_edge_weights(p), equiv::MapKind::A));
    const CMatrix expect = fz_pattern(fz_lax_weights(p));
    if (max_abs(lax - expect) > 1e-12 * std::max(1.0, max_abs(expect)))
        throw CheckFailed("fz_lax: map A does not reproduce the 27-vertex pattern");
    return lax;
}

FZWeights fz_r_weights(cplx x, cplx y) {
    const cplx f = ratio(std::sin(x - y), std::cos(kPi / 6 + x - y), "R(x,y)");
    const cplx g = ratio(std::sin(kPi / 6 + y), std::sin(kPi / 6 - y), "R(x,y)");
    const cplx hx = ratio(std::sin(kPi / 6 - x), std::sin(kPi / 6 + x), "R(x,y)");
    return FZWeights{1.0, f * g, f * hx, hx * g, f * hx * g};
}

CMatrix fz_r_matrix(cplx x, cplx y) { return fz_pattern(fz_r_weights(x, y)); }

cplx fz_unitarity_norm(cplx x, cplx y) {
    const cplx s = std::sin(x - y);
    return ratio(s - std::cos(kPi / 6), std::sqrt(3.0) * (s - std::sin(kPi / 6)), "unitarity normalization");
}

CMatrix fz_extended_transfer(cplx x, double x0, int L, const Limits& lim) {
    return vertex::t_vertex_from_lax(fz_r_matrix(x, x0), 3, L, lim);
}

CMatrix fz_hamiltonian(double x0, int L, const Limits& lim) {
    if (L < 2) throw InvalidArgument("fz_hamiltonian: L must be >= 2");
    const std::size_t d = checked_dim(3, L, lim);
    const Z3Generators g = Z3Generators::make();
    const CMatrix zzd = kron(g.z_op, CMatrix(g.z_op.adjoint()));
    const CMatrix x1 = kron(g.x_op, identity(3));
    const CMatrix x2 = x1 * x1;
    const CMatrix zz2 = zzd * zzd;
    const double s3 = std::sqrt(3.0);
    const cplx c0 = -2.0 / s3;
    const cplx cm = 4.0 * std::sin(x0) / s3 * std::polar(1.0, -(kPi / 6 + x0));
    const cplx cp = 4.0 * std::sin(x0) / s3 * std::polar(1.0, kPi / 6 + x0);
    const CMatrix h = c0 * (x1 + zzd + x2 + zz2) + cm * (x1 * zzd + x2 * zz2) + cp * (x1 * zz2 + x2 * zzd);
    CMatrix out = periodic_bond_sum(h, 3, L);
    (void)d;
    return out;
}

}  // namespace latticemap::fz27
