#pragma once

#include <array>
#include <vector>

#include "latticemap/matcore.hpp"

namespace latticemap::vertex {

// w(i1,i2|i3,i4); geometrically i1 right, i2 top, i3 left, i4 bottom
class VertexTensor {
public:
    explicit VertexTensor(int n = 2);

    int n() const { return n_; }
    cplx& operator()(int i1, int i2, int i3, int i4) { return w_[index(i1, i2, i3, i4)]; }
    cplx operator()(int i1, int i2, int i3, int i4) const { return w_[index(i1, i2, i3, i4)]; }
    const std::vector<cplx>& data() const { return w_; }

    // delta(i1,i4) delta(i2,i3)
    static VertexTensor permutator(int n);
    std::size_t count_nonzero(double tol = 0.0) const;
    VertexTensor operator+(const VertexTensor& o) const;
    VertexTensor operator*(cplx s) const;

private:
    std::size_t index(int i1, int i2, int i3, int i4) const {
        return ((static_cast<std::size_t>(i1) * n_ + i2) * n_ + i3) * n_ + i4;
    }
    int n_;
    std::vector<cplx> w_;
};

struct Mixed8VWeights {
    cplx w1, w2, w5, w6, v1, v2, v5, v6;
};

struct Even8VWeights {
    cplx a_plus, a_minus, b_plus, b_minus, c_plus, c_minus, d_plus, d_minus;
};

// w[0] is w1, ..., v[7] is v8
struct Sixteen16VWeights {
    std::array<cplx, 8> w{};
    std::array<cplx, 8> v{};
};

struct VertexHamiltonianLimit {
    VertexTensor w_dot;
};

// <a',q'|L|a,q> = w(q,a|q',a'), aux most significant
CMatrix lax_from_tensor(const VertexTensor& t);
VertexTensor tensor_from_lax(const CMatrix& lax, int n);

// Tr_aux[L_{A,L} ... L_{A,1}]
CMatrix t_vertex(const VertexTensor& t, int L, const Limits& lim = {});
CMatrix t_vertex_from_lax(const CMatrix& lax, int n, int L, const Limits& lim = {});

// toroidal sum with h(i,j) left of vertex (i,j) and v(i,j) above it
cplx z_vertex_bruteforce(const VertexTensor& t, int L, const Limits& lim = {});

VertexTensor tensor_from_mixed8v(const Mixed8VWeights& m);
VertexTensor tensor_from_even8v(const Even8VWeights& e);
VertexTensor tensor_from_sixteen(const Sixteen16VWeights& s);
Mixed8VWeights mixed8v_from_tensor(const VertexTensor& t);
Even8VWeights even8v_from_tensor(const VertexTensor& t);
Sixteen16VWeights sixteen_from_tensor(const VertexTensor& t);

// sum_{i} w_dot(i1,i2|i3,i4) e_{i3,i2} (x) e_{i4,i1}
CMatrix vertex_two_site(const VertexHamiltonianLimit& hl);
CMatrix vertex_hamiltonian(const VertexHamiltonianLimit& hl, int L);

}  // namespace latticemap::vertex
