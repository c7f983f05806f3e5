#pragma once

#include <cstdint>

#include "latticemap/matcore.hpp"

namespace latticemap::spin {

// W_h(a,b), W_v(a,b) on n local states
struct EdgeWeights {
    int n = 2;
    CMatrix wh;
    CMatrix wv;

    void validate() const;
};

struct IsingParams {
    double beta = 1.0;
    double jh = 0.0;
    double jv = 0.0;
    double hfield = 0.0;
};

// first-order coefficients of W_h(e) = 1 + e*wh_dot, W_v(e) = delta + e*wv_dot
struct SpinHamiltonianLimit {
    CMatrix wh_dot;
    CMatrix wv_dot;
};

// state order (+,-) -> (0,1)
EdgeWeights ising_edge_weights(const IsingParams& p);

// entries uniform in [0.5, 1.5]
EdgeWeights random_edge_weights(int n, std::uint64_t seed);

// [(a),(b)] = prod_j W_v(a_j,b_j) W_h(a_j,b_{j+1})
CMatrix t_diag(const EdgeWeights& ew, int L, const Limits& lim = {});

// [(a),(b)] = prod_j W_v(a_j,b_j)
CMatrix t_v(const EdgeWeights& ew, int L, const Limits& lim = {});

// [(a),(b)] = prod_j W_h(a_j,b_{j+1}) delta(a_{j+1},b_{j+1}); diagonal
CMatrix t_h(const EdgeWeights& ew, int L, const Limits& lim = {});

// T_v T_h
CMatrix t_row(const EdgeWeights& ew, int L, const Limits& lim = {});

// toroidal L x L enumeration
cplx z_spin_bruteforce(const EdgeWeights& ew, int L, const Limits& lim = {});

CMatrix spin_two_site(const SpinHamiltonianLimit& hl);
CMatrix spin_hamiltonian(const SpinHamiltonianLimit& hl, int L);

}  // namespace latticemap::spin
