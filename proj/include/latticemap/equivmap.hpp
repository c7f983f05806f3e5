#pragma once

#include "latticemap/spin.hpp"
#include "latticemap/vertex.hpp"

namespace latticemap::equiv {

enum class MapKind { A, B };

// comparison frame for the transfer-element identity
enum class Frame {
    Reflected,  // target conjugated by the site-reversal permutation
    Literal,
};

const char* to_string(MapKind k);

// A: w = W_h(i3,i1) W_v(i3,i2) delta(i1,i4)
// B: w = W_v(i3,i1) W_h(i1,i2) delta(i1,i4)
vertex::VertexTensor map_spin_to_vertex(const spin::EdgeWeights& ew, MapKind kind);

// max |T_ver - target|; A targets t_diag with h and v exchanged, B targets t_row
double verify_transfer_identity(const spin::EdgeWeights& ew, MapKind kind, int L, const Limits& lim = {},
                                Frame frame = Frame::Reflected);

vertex::Mixed8VWeights ising_mixed8v(const spin::IsingParams& p, MapKind kind);

// isotropic: uses p.jh as J
vertex::Sixteen16VWeights liwu_sixteen(const spin::IsingParams& p);

}  // namespace latticemap::equiv
