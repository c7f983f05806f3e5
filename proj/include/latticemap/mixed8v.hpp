#pragma once

#include <array>

#include "latticemap/elliptic.hpp"
#include "latticemap/spin.hpp"
#include "latticemap/vertex.hpp"

namespace latticemap::mixed8v {

using elliptic::EllipticParams;
using vertex::Even8VWeights;
using vertex::Mixed8VWeights;

struct InvariantPair {
    cplx delta1 = 0.0;
    cplx delta2 = 0.0;
};

struct MixedChainParams {
    double theta = 0.0;
    double kappa = 0.0;
    double j = 1.0;

    double h() const;
    double d() const;
    double gamma() const;
};

struct BaxterParams {
    cplx gamma_b = 0.0;
    cplx delta_b = 0.0;

    InvariantPair invariants() const;
    static BaxterParams from_invariants(const InvariantPair& inv);
};

struct CanonicalTransform {
    cplx u = 1.0;
    cplx v = 0.0;
};

// bold R entries in the symmetric pattern
struct REntries {
    cplx w1, w5, v1, v5;
};

struct SurfaceValue {
    cplx s;
    // d/dw1, d/dw5, d/dv1, d/dv5
    std::array<cplx, 4> grad;
};

struct FPair {
    cplx f1, f2;
};

struct OnsagerResult {
    cplx delta1, delta2, onsager_rhs;
};

// on-curve tolerance used before building R
inline constexpr double kCurveTol = 1e-8;

Mixed8VWeights symmetric_weights(cplx w1, cplx w5, cplx v1, cplx v5);
bool is_symmetric(const Mixed8VWeights& m, double tol = 1e-10);
CMatrix mixed_lax(const Mixed8VWeights& m);

InvariantPair invariants_of(const Mixed8VWeights& m);
bool same_curve(const InvariantPair& a, const InvariantPair& b, double tol = kCurveTol);

Mixed8VWeights uniformized_weights(const EllipticParams& p);
InvariantPair uniformized_invariants(double k, double lambda);

REntries closed_form_r_entries(const Mixed8VWeights& m1, const Mixed8VWeights& m2, cplx w5 = 1.0);
CMatrix r_from_entries(const REntries& r);
CMatrix closed_form_r(const Mixed8VWeights& m1, const Mixed8VWeights& m2);

// 1 / (1 + i sqrt(k) sn(x1 - x2))
cplx unitarity_normalization(double k, cplx x1, cplx x2);

// two-monomial then four-monomial relations, in that order
std::array<cplx, 12> functional_equations(const REntries& r, const Mixed8VWeights& m1, const Mixed8VWeights& m2);

SurfaceValue surface_eval(const REntries& r, const InvariantPair& inv);

// [w1:w5:v1:v5] of the isolated singular points
std::array<std::array<int, 4>, 12> singular_points();

FPair r_invariant_functions(const Mixed8VWeights& m1, const Mixed8VWeights& m2);

// affine chart x = w1''/w5'', y = v5''/w5''
cplx eli5_residual(const Mixed8VWeights& m2, const InvariantPair& inv);
cplx eli3_residual(const REntries& r, const Mixed8VWeights& m2, const InvariantPair& inv);
cplx eli4_residual(const REntries& r, const Mixed8VWeights& m2, const InvariantPair& inv);
cplx eliminated_y(const REntries& r, cplx x, const InvariantPair& inv);
cplx final_residual(const REntries& r, cplx x, const InvariantPair& inv);

CMatrix htwomix(const InvariantPair& inv, cplx w5_dot, cplx v5_dot);
CMatrix mixed_hamiltonian_general(const InvariantPair& inv, double j, int L);
InvariantPair hermitian_invariants(const MixedChainParams& p);
CMatrix mixed_hamiltonian(const MixedChainParams& p, int L);
CMatrix xy_dm_hamiltonian(const MixedChainParams& p, int L);
CanonicalTransform canonical_transform(double d);

// mixed chain with the Pauli substitution applied site by site
CMatrix substituted_mixed_hamiltonian(const MixedChainParams& p, int L);

// a = w1, b = v5, c = w5, d = v1
Even8VWeights even_from_mixed(const Mixed8VWeights& m);
Even8VWeights even_symmetric(cplx a, cplx b, cplx c, cplx d);
bool is_even_symmetric(const Even8VWeights& e, double tol = 1e-10);
InvariantPair even_invariants(const Even8VWeights& e);

// bold a, b, d with bold c = 1
Even8VWeights baxter_even_r_entries(const Even8VWeights& e1, const Even8VWeights& e2);
CMatrix baxter_even_r(const Even8VWeights& e1, const Even8VWeights& e2);

OnsagerResult onsager_check(const spin::IsingParams& p);

}  // namespace latticemap::mixed8v
