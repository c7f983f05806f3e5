#pragma once

#include <utility>

#include "latticemap/equivmap.hpp"
#include "latticemap/vertex.hpp"

namespace latticemap::freefermion {

using vertex::Even8VWeights;
using vertex::Mixed8VWeights;

struct GaugeParams {
    cplx z1 = 1.0;
    cplx z2 = 1.0;
};

struct GaugeOutcome {
    Even8VWeights weights;
    CMatrix lax;
    // largest vanished entry over largest entry
    double pattern_residual = 0.0;
    // largest relative gap to the closed-form weights
    double closed_form_deviation = 0.0;
};

// w2 = w1 and v1 v6 w5 = v2 v5 w6
void check_constraint(const Mixed8VWeights& m, double tol = 1e-10);

std::pair<CMatrix, CMatrix> gauge_matrices(const Mixed8VWeights& m, const GaugeParams& g);

// (M1 (x) M2) L (M1 (x) M2)^-1 read as an even eight-vertex Lax
GaugeOutcome gauge_transform(const Mixed8VWeights& m, const GaugeParams& g);
Even8VWeights gauge_transform_lax(const Mixed8VWeights& m, const GaugeParams& g);

Even8VWeights gauge_closed_form(const Mixed8VWeights& m, const GaugeParams& g);

// (z1, z2) giving c+ = c- and d+ = d-
GaugeParams balancing_gauge(const Mixed8VWeights& m);

// A: first Ising list, B: second; beta folded into the couplings
Even8VWeights ising_freefermion_weights(const spin::IsingParams& p, equiv::MapKind kind);

cplx free_fermion_residual(const Even8VWeights& e);

}  // namespace latticemap::freefermion
