#include "latticemap/mixed8v.hpp"

#include <cmath>
#include <string>

#include "latticemap/equivmap.hpp"

namespace latticemap::mixed8v {

namespace {

const cplx I(0.0, 1.0);

cplx ratio(cplx num, cplx den, const char* what) {
    if (std::abs(den) <= 1e-14 * std::max(1.0, std::abs(num)) || !std::isfinite(std::abs(num / den)))
        throw DomainError(std::string(what) + ": vanishing denominator");
    return num / den;
}

CMatrix pauli_x() {
    CMatrix m = CMatrix::Zero(2, 2);
    m(0, 1) = m(1, 0) = 1.0;
    return m;
}

CMatrix pauli_y() {
    CMatrix m = CMatrix::Zero(2, 2);
    m(0, 1) = -I;
    m(1, 0) = I;
    return m;
}

CMatrix pauli_z() {
    CMatrix m = CMatrix::Zero(2, 2);
    m(0, 0) = 1.0;
    m(1, 1) = -1.0;
    return m;
}

void require_symmetric(const Mixed8VWeights& m, const char* what) {
    if (!is_symmetric(m)) throw InvalidArgument(std::string(what) + ": weights are not on the symmetric manifold");
}

void require_chain(int L) {
    if (L < 2) throw InvalidArgument("chain length L must be >= 2");
}

// -J sum_j (zz + c1 x_j + c2 y_j z_{j+1})
CMatrix zz_x_yz_chain(double j, cplx c1, cplx c2, int L) {
    require_chain(L);
    CMatrix sx = pauli_x(), sy = pauli_y(), sz = pauli_z(), id = identity(2);
    CMatrix h = -j * (kron(sz, sz) + c1 * kron(sx, id) + c2 * kron(sy, sz));
    return periodic_bond_sum(h, 2, L);
}

}  // namespace

double MixedChainParams::h() const { return kappa * std::cos(theta); }
double MixedChainParams::d() const { return kappa * std::sin(theta); }
double MixedChainParams::gamma() const { return std::sqrt(1.0 + d() * d()); }

InvariantPair BaxterParams::invariants() const {
    return {ratio(1.0 - gamma_b, 1.0 + gamma_b, "BaxterParams"), delta_b * (1.0 + gamma_b)};
}

BaxterParams BaxterParams::from_invariants(const InvariantPair& inv) {
    BaxterParams b;
    b.gamma_b = ratio(1.0 - inv.delta1, 1.0 + inv.delta1, "BaxterParams");
    b.delta_b = ratio(inv.delta2, 1.0 + b.gamma_b, "BaxterParams");
    return b;
}

Mixed8VWeights symmetric_weights(cplx w1, cplx w5, cplx v1, cplx v5) { return {w1, w1, w5, w5, v1, v1, v5, v5}; }

bool is_symmetric(const Mixed8VWeights& m, double tol) {
    auto close = [tol](cplx a, cplx b) { return std::abs(a - b) <= tol * std::max(1.0, std::max(std::abs(a), std::abs(b))); };
    return close(m.w1, m.w2) && close(m.w5, m.w6) && close(m.v1, m.v2) && close(m.v5, m.v6);
}

CMatrix mixed_lax(const Mixed8VWeights& m) { return vertex::lax_from_tensor(vertex::tensor_from_mixed8v(m)); }

InvariantPair invariants_of(const Mixed8VWeights& m) {
    require_symmetric(m, "invariants_of");
    const cplx den = m.w1 * m.v5;
    if (den == 0.0) throw DomainError("invariants_of: w1 v5 = 0");
    return {m.w5 * m.v1 / den, (m.w1 * m.w1 + m.v5 * m.v5 - m.w5 * m.w5 - m.v1 * m.v1) / (2.0 * den)};
}

bool same_curve(const InvariantPair& a, const InvariantPair& b, double tol) {
    auto close = [tol](cplx x, cplx y) { return std::abs(x - y) <= tol * std::max(1.0, std::abs(x)); };
    return close(a.delta1, b.delta1) && close(a.delta2, b.delta2);
}

Mixed8VWeights uniformized_weights(const EllipticParams& p) {
    p.validate();
    const cplx il = I * p.lambda;
    const cplx w1 = elliptic::jacobi_sn(p.x + il, p.k);
    const cplx w5 = elliptic::jacobi_sn(il, p.k);
    const cplx v5 = elliptic::jacobi_sn(p.x, p.k);
    const cplx v1 = -p.k * w5 * v5 * w1;
    return symmetric_weights(w1, w5, v1, v5);
}

InvariantPair uniformized_invariants(double k, double lambda) {
    EllipticParams{k, lambda, 0.0}.validate();
    const auto f = elliptic::jacobi(I * lambda, k);
    return {-k * f.sn * f.sn, f.cn * f.dn};
}

REntries closed_form_r_entries(const Mixed8VWeights& a, const Mixed8VWeights& b, cplx w5) {
    require_symmetric(a, "closed_form_r");
    require_symmetric(b, "closed_form_r");
    if (!same_curve(invariants_of(a), invariants_of(b)))
        throw DomainError("closed_form_r: weight sets are not on the same invariant curve");
    REntries r;
    r.w5 = w5;
    r.w1 = w5 * ratio(a.w1 * b.w5, a.w5 * b.w1, "closed_form_r bold w1");
    r.v5 = w5 * ratio(b.w5 * (a.w1 * b.v5 - a.v5 * b.w1), b.w1 * (a.v1 * b.v1 - a.w5 * b.w5), "closed_form_r bold v5");
    r.v1 = r.v5 * ratio(a.w1 * b.v1, a.w5 * b.v5, "closed_form_r bold v1");
    return r;
}

CMatrix r_from_entries(const REntries& r) { return mixed_lax(symmetric_weights(r.w1, r.w5, r.v1, r.v5)); }

CMatrix closed_form_r(const Mixed8VWeights& m1, const Mixed8VWeights& m2) {
    return r_from_entries(closed_form_r_entries(m1, m2));
}

cplx unitarity_normalization(double k, cplx x1, cplx x2) {
    return 1.0 / (1.0 + I * std::sqrt(k) * elliptic::jacobi_sn(x1 - x2, k));
}

std::array<cplx, 12> functional_equations(const REntries& r, const Mixed8VWeights& a, const Mixed8VWeights& b) {
    const cplx W1 = r.w1, W5 = r.w5, V1 = r.v1, V5 = r.v5;
    const cplx w1p = a.w1, w5p = a.w5, v1p = a.v1, v5p = a.v5;
    const cplx w1q = b.w1, w5q = b.w5, v1q = b.v1, v5q = b.v5;
    return {
        W1 * w5p * w1q - W5 * w1p * w5q,
        W5 * v1p * v5q - W1 * v5p * v1q,
        V1 * w5p * v5q - V5 * w1p * v1q,
        V5 * v1p * w1q - V1 * v5p * w5q,
        W5 * v1p * w1q - V1 * (w5p * w5q - v1p * v1q) - W1 * w1p * v1q,
        W5 * (v5p * w1q - w1p * v5q) - V5 * w5p * w1q + V1 * v5p * v1q,
        W1 * w5p * v5q - W5 * v5p * w5q + V5 * (w5p * w5q - v1p * v1q),
        W1 * (v5p * w1q - w1p * v5q) + V1 * v1p * v5q - V5 * w1p * w5q,
        V1 * (w1p * w1q - v5p * v5q) - W1 * v1p * w1q + W5 * w1p * v1q,
        V1 * w5p * w1q - W5 * (v1p * w5q - w5p * v1q) - V5 * v5p * v1q,
        V5 * (w1p * w1q - v5p * v5q) + W5 * w5p * v5q - W1 * v5p * w5q,
        V5 * v1p * v5q - V1 * w1p * w5q + W1 * (v1p * w5q - w5p * v1q),
    };
}

SurfaceValue surface_eval(const REntries& r, const InvariantPair& inv) {
    if (inv.delta1 == 0.0) throw DomainError("surface_eval: Delta1 = 0");
    const cplx c = (1.0 + inv.delta1 * inv.delta1 - inv.delta2 * inv.delta2) / inv.delta1;
    const cplx w1 = r.w1, w5 = r.w5, v1 = r.v1, v5 = r.v5;
    const cplx dv = v5 * v5 - w5 * w5;
    const cplx q = dv * dv - 2.0 * w1 * w1 * (v5 * v5 + w5 * w5) + w1 * w1 * w1 * w1;
    SurfaceValue s;
    s.s = v1 * v1 * v1 * v1 + 4.0 * c * v1 * v5 * w1 * w5 - 2.0 * v1 * v1 * (v5 * v5 + w1 * w1 + w5 * w5) + q;
    s.grad[0] = 4.0 * c * v1 * v5 * w5 - 4.0 * v1 * v1 * w1 - 4.0 * w1 * (v5 * v5 + w5 * w5) + 4.0 * w1 * w1 * w1;
    s.grad[1] = 4.0 * c * v1 * v5 * w1 - 4.0 * v1 * v1 * w5 - 4.0 * w5 * dv - 4.0 * w1 * w1 * w5;
    s.grad[2] = 4.0 * v1 * v1 * v1 + 4.0 * c * v5 * w1 * w5 - 4.0 * v1 * (v5 * v5 + w1 * w1 + w5 * w5);
    s.grad[3] = 4.0 * c * v1 * w1 * w5 - 4.0 * v1 * v1 * v5 + 4.0 * v5 * dv - 4.0 * w1 * w1 * v5;
    return s;
}

std::array<std::array<int, 4>, 12> singular_points() {
    return {{{0, 1, 0, 1}, {0, 1, 0, -1}, {0, 1, 1, 0}, {0, 1, -1, 0}, {1, 1, 0, 0}, {1, -1, 0, 0},
             {1, 0, 1, 0}, {1, 0, -1, 0}, {1, 0, 0, 1}, {1, 0, 0, -1}, {0, 0, 1, 1}, {0, 0, 1, -1}}};
}

FPair r_invariant_functions(const Mixed8VWeights& m1, const Mixed8VWeights& m2) {
    const REntries r = closed_form_r_entries(m1, m2);
    const Mixed8VWeights& b = m2;
    FPair rhs;
    rhs.f1 = ratio(b.w1 * b.v1, b.w5 * b.v5, "r_invariant_functions");
    rhs.f2 = ratio(b.w1 * b.w1 + b.v1 * b.v1 - b.w5 * b.w5 - b.v5 * b.v5, 2.0 * b.w5 * b.v5, "r_invariant_functions");
    const double scale = std::max(std::abs(r.w1), std::abs(r.w5));
    // coincident points give R proportional to P; the bold-side ratios are 0/0 there
    if (std::abs(r.v1) <= 1e-12 * scale || std::abs(r.v5) <= 1e-12 * scale) return rhs;
    const cplx f1 = r.w5 * r.v1 / (r.w1 * r.v5);
    const cplx f2 = (r.w1 * r.w1 + r.v5 * r.v5 - r.w5 * r.w5 - r.v1 * r.v1) / (2.0 * r.w1 * r.v5);
    if (rel_err(f1, rhs.f1) > 1e-8 || rel_err(f2, rhs.f2) > 1e-8)
        throw CheckFailed("r_invariant_functions: bold-entry and second-point values disagree");
    return rhs;
}

namespace {

void affine(const Mixed8VWeights& m2, cplx& x, cplx& y) {
    x = ratio(m2.w1, m2.w5, "affine chart");
    y = ratio(m2.v5, m2.w5, "affine chart");
}

}  // namespace

cplx eli5_residual(const Mixed8VWeights& m2, const InvariantPair& inv) {
    cplx x, y;
    affine(m2, x, y);
    const cplx d1 = inv.delta1, d2 = inv.delta2;
    return x * x - 2.0 * d2 * x * y + y * y - d1 * d1 * x * x * y * y - 1.0;
}

cplx eli3_residual(const REntries& r, const Mixed8VWeights& m2, const InvariantPair& inv) {
    cplx x, y;
    affine(m2, x, y);
    const cplx d1 = inv.delta1, d2 = inv.delta2;
    const cplx vw = r.v5 * r.w1;
    return r.v5 * r.v5 - r.v1 * r.v1 + r.w1 * r.w1 - r.w5 * r.w5 - 2.0 * d2 * vw * x + 2.0 * vw * y -
           2.0 * d1 * d1 * vw * x * x * y;
}

cplx eli4_residual(const REntries& r, const Mixed8VWeights& m2, const InvariantPair& inv) {
    cplx x, y;
    affine(m2, x, y);
    return r.v1 * r.w5 - inv.delta1 * r.v5 * r.w1 * x * x;
}

cplx eliminated_y(const REntries& r, cplx x, const InvariantPair& inv) {
    const cplx d1 = inv.delta1, d2 = inv.delta2;
    const cplx vw = r.v5 * r.w1;
    return ratio(r.v5 * r.v5 - r.v1 * r.v1 + r.w1 * r.w1 - r.w5 * r.w5 - 2.0 * d2 * vw * x,
                 2.0 * vw * (-1.0 + d1 * d1 * x * x), "eliminated_y");
}

cplx final_residual(const REntries& r, cplx x, const InvariantPair& inv) {
    const cplx d1 = inv.delta1, d2 = inv.delta2;
    const cplx v1s = r.v1 * r.v1, v5s = r.v5 * r.v5, w1s = r.w1 * r.w1, w5s = r.w5 * r.w5;
    const cplx x2 = x * x;
    return -v1s * v1s - v5s * v5s - (w1s - w5s) * (w1s - w5s) + 2.0 * v1s * (v5s + w1s - w5s) +
           2.0 * v5s * (w5s + w1s * (1.0 + 2.0 * x2 * (-1.0 + d2 * d2 + d1 * d1 * (-1.0 + x2))));
}

CMatrix htwomix(const InvariantPair& inv, cplx w5_dot, cplx v5_dot) {
    CMatrix h = CMatrix::Zero(4, 4);
    h(0, 0) = h(3, 3) = w5_dot + inv.delta2 * v5_dot;
    h(1, 1) = h(2, 2) = w5_dot;
    h(0, 2) = h(3, 1) = inv.delta1 * v5_dot;
    h(1, 3) = h(2, 0) = v5_dot;
    return h;
}

CMatrix mixed_hamiltonian_general(const InvariantPair& inv, double j, int L) {
    if (inv.delta2 == 0.0) throw DomainError("mixed_hamiltonian_general: Delta2 = 0");
    return zz_x_yz_chain(j, (inv.delta1 + 1.0) / inv.delta2, I * (inv.delta1 - 1.0) / inv.delta2, L);
}

InvariantPair hermitian_invariants(const MixedChainParams& p) {
    if (p.kappa == 0.0) throw DomainError("hermitian_invariants: kappa = 0 sends Delta2 to infinity");
    return {std::exp(-2.0 * I * p.theta), 2.0 * std::exp(-I * p.theta) / p.kappa};
}

CMatrix mixed_hamiltonian(const MixedChainParams& p, int L) { return zz_x_yz_chain(p.j, p.h(), p.d(), L); }

CMatrix xy_dm_hamiltonian(const MixedChainParams& p, int L) {
    require_chain(L);
    CMatrix sx = pauli_x(), sy = pauli_y(), sz = pauli_z(), id = identity(2);
    const double g = p.gamma();
    CMatrix h = -p.j * ((1 + g) / 2 * kron(sx, sx) + (1 - g) / 2 * kron(sy, sy) + p.h() * kron(sz, id) +
                        p.d() / 2 * (kron(sx, sy) - kron(sy, sx)));
    return periodic_bond_sum(h, 2, L);
}

CanonicalTransform canonical_transform(double d) {
    CanonicalTransform t;
    t.u = (std::sqrt(cplx(1.0, d)) + std::sqrt(cplx(1.0, -d))) / (2.0 * std::pow(1.0 + d * d, 0.25));
    const double sgn = d > 0 ? 1.0 : (d < 0 ? -1.0 : 0.0);
    t.v = -sgn * std::sqrt(1.0 - t.u * t.u);
    return t;
}

CMatrix substituted_mixed_hamiltonian(const MixedChainParams& p, int L) {
    require_chain(L);
    const CanonicalTransform t = canonical_transform(p.d());
    CMatrix sx = pauli_z();
    CMatrix sy = t.u * pauli_y() + t.v * pauli_x();
    CMatrix sz = t.v * pauli_y() - t.u * pauli_x();
    CMatrix id = identity(2);
    CMatrix h = -p.j * (kron(sz, sz) + p.h() * kron(sx, id) + p.d() * kron(sy, sz));
    return periodic_bond_sum(h, 2, L);
}

Even8VWeights even_symmetric(cplx a, cplx b, cplx c, cplx d) { return {a, a, b, b, c, c, d, d}; }

Even8VWeights even_from_mixed(const Mixed8VWeights& m) {
    require_symmetric(m, "even_from_mixed");
    return even_symmetric(m.w1, m.v5, m.w5, m.v1);
}

bool is_even_symmetric(const Even8VWeights& e, double tol) {
    auto close = [tol](cplx a, cplx b) { return std::abs(a - b) <= tol * std::max(1.0, std::max(std::abs(a), std::abs(b))); };
    return close(e.a_plus, e.a_minus) && close(e.b_plus, e.b_minus) && close(e.c_plus, e.c_minus) &&
           close(e.d_plus, e.d_minus);
}

InvariantPair even_invariants(const Even8VWeights& e) {
    if (!is_even_symmetric(e)) throw InvalidArgument("even_invariants: weights are not symmetric");
    const cplx a = e.a_plus, b = e.b_plus, c = e.c_plus, d = e.d_plus;
    return {ratio(c * d, a * b, "even_invariants"), ratio(a * a + b * b - c * c - d * d, 2.0 * a * b, "even_invariants")};
}

Even8VWeights baxter_even_r_entries(const Even8VWeights& e1, const Even8VWeights& e2) {
    if (!same_curve(even_invariants(e1), even_invariants(e2)))
        throw DomainError("baxter_even_r: weight sets are not on the same invariant curve");
    const cplx a1 = e1.a_plus, b1 = e1.b_plus, c1 = e1.c_plus, d1 = e1.d_plus;
    const cplx a2 = e2.a_plus, b2 = e2.b_plus, c2 = e2.c_plus, d2 = e2.d_plus;
    const cplx common = ratio(c1 * c1 * b2 * b2 - a1 * a1 * c2 * c2,
                              (b1 * b2 - a1 * a2) * (c1 * c1 * a2 * a2 - a1 * a1 * d2 * d2), "baxter_even_r");
    const cplx ra = ratio(a2 * a2, c2 * c2, "baxter_even_r") * (c1 * c2 - d1 * d2) * common;
    const cplx rb = ratio(a2 * b2, c2 * d2, "baxter_even_r") * ratio(c1 * d2 - d1 * c2, b1 * b2 - a1 * a2, "baxter_even_r");
    const cplx rd = ratio(d2 * a2, b2 * c2, "baxter_even_r") * (b1 * a2 - a1 * b2) * common;
    return even_symmetric(ra, rb, 1.0, rd);
}

CMatrix baxter_even_r(const Even8VWeights& e1, const Even8VWeights& e2) {
    return vertex::lax_from_tensor(vertex::tensor_from_even8v(baxter_even_r_entries(e1, e2)));
}

OnsagerResult onsager_check(const spin::IsingParams& p) {
    spin::IsingParams q = p;
    q.hfield = 0.0;
    const InvariantPair inv = invariants_of(equiv::ising_mixed8v(q, equiv::MapKind::A));
    return {inv.delta1, inv.delta2, 2.0 * std::sinh(2 * p.beta * p.jh) * std::sinh(2 * p.beta * p.jv)};
}

}  // namespace latticemap::mixed8v
