#pragma once

#include "latticemap/spin.hpp"

namespace latticemap::fz27 {

struct FZParams {
    cplx x = 0.0;

    // sin(pi/6 - x) / sin(pi/6 + x)
    cplx b() const;
    // sin(x) / cos(pi/6 + x)
    cplx bbar() const;
    void validate() const;
};

struct Z3Generators {
    CMatrix x_op;
    CMatrix z_op;

    static Z3Generators make();
};

struct FZWeights {
    cplx w1, w2, w3, w4, w5;
};

spin::EdgeWeights fz_edge_weights(const FZParams& p);

FZWeights fz_lax_weights(const FZParams& p);
CMatrix fz_pattern(const FZWeights& w);
CMatrix fz_lax(const FZParams& p);

// bold w1 = 1
FZWeights fz_r_weights(cplx x, cplx y);
CMatrix fz_r_matrix(cplx x, cplx y);

// bold w1 giving R(x,y) P R(y,x) P = I
cplx fz_unitarity_norm(cplx x, cplx y);

// Tr_aux[R_{A,L}(x,x0) ... R_{A,1}(x,x0)]
CMatrix fz_extended_transfer(cplx x, double x0, int L, const Limits& lim = {});

CMatrix fz_hamiltonian(double x0, int L, const Limits& lim = {});

}  // namespace latticemap::fz27
