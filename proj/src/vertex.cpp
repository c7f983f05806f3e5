#include "latticemap/vertex.hpp"

namespace latticemap::vertex {

namespace {

constexpr int P = 0;
constexpr int M = 1;

using Slot = std::array<int, 4>;

// a+, a-, b+, b-, c+, c-, d+, d-
constexpr std::array<Slot, 8> kEvenSlots{{{P, P, P, P}, {M, M, M, M}, {M, P, M, P}, {P, M, P, M},
                                           {P, M, M, P}, {M, P, P, M}, {M, M, P, P}, {P, P, M, M}}};

// w1, w2, w5, w6, v1, v2, v5, v6
constexpr std::array<Slot, 8> kMixedSlots{{{P, P, P, P}, {M, M, M, M}, {M, P, P, M}, {P, M, M, P},
                                            {P, M, P, P}, {M, P, M, M}, {M, M, P, M}, {P, P, M, P}}};

// sixteen-vertex w1..w8 then v1..v8
constexpr std::array<Slot, 8> kSixteenW{{{P, P, P, P}, {M, M, M, M}, {P, M, P, M}, {M, P, M, P},
                                          {M, P, P, M}, {P, M, M, P}, {P, P, M, M}, {M, M, P, P}}};
constexpr std::array<Slot, 8> kSixteenV{{{P, M, P, P}, {M, P, M, M}, {P, P, P, M}, {M, M, M, P},
                                          {M, M, P, M}, {P, P, M, P}, {P, M, M, M}, {M, P, P, P}}};

cplx& slot(VertexTensor& t, const Slot& s) { return t(s[0], s[1], s[2], s[3]); }
cplx slot(const VertexTensor& t, const Slot& s) { return t(s[0], s[1], s[2], s[3]); }

void require_n2(const VertexTensor& t) {
    if (t.n() != 2) throw InvalidArgument("named-slot readback needs n = 2");
}

bool lax_layout_ok() {
    // hand-written 4x4 swap against the generic layout
    CMatrix p = CMatrix::Zero(4, 4);
    p(0, 0) = p(1, 2) = p(2, 1) = p(3, 3) = 1.0;
    VertexTensor t = VertexTensor::permutator(2);
    CMatrix l = CMatrix::Zero(4, 4);
    for (int i1 = 0; i1 < 2; ++i1)
        for (int i2 = 0; i2 < 2; ++i2)
            for (int i3 = 0; i3 < 2; ++i3)
                for (int i4 = 0; i4 < 2; ++i4) l(i4 * 2 + i3, i2 * 2 + i1) = t(i1, i2, i3, i4);
    return l == p;
}

}  // namespace

VertexTensor::VertexTensor(int n) : n_(n) {
    if (n < 2) throw InvalidArgument("VertexTensor: n must be >= 2");
    w_.assign(static_cast<std::size_t>(n) * n * n * n, 0.0);
}

VertexTensor VertexTensor::permutator(int n) {
    VertexTensor t(n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) t(a, b, b, a) = 1.0;
    return t;
}

std::size_t VertexTensor::count_nonzero(double tol) const {
    std::size_t c = 0;
    for (auto v : w_)
        if (std::abs(v) > tol) ++c;
    return c;
}

VertexTensor VertexTensor::operator+(const VertexTensor& o) const {
    if (o.n_ != n_) throw InvalidArgument("VertexTensor: size mismatch");
    VertexTensor r(*this);
    for (std::size_t i = 0; i < w_.size(); ++i) r.w_[i] += o.w_[i];
    return r;
}

VertexTensor VertexTensor::operator*(cplx s) const {
    VertexTensor r(*this);
    for (auto& v : r.w_) v *= s;
    return r;
}

CMatrix lax_from_tensor(const VertexTensor& t) {
    static const bool checked = lax_layout_ok();
    if (!checked) throw CheckFailed("lax layout self-test failed");
    const int n = t.n();
    CMatrix l(n * n, n * n);
    for (int i1 = 0; i1 < n; ++i1)
        for (int i2 = 0; i2 < n; ++i2)
            for (int i3 = 0; i3 < n; ++i3)
                for (int i4 = 0; i4 < n; ++i4) l(i4 * n + i3, i2 * n + i1) = t(i1, i2, i3, i4);
    return l;
}

VertexTensor tensor_from_lax(const CMatrix& lax, int n) {
    if (lax.rows() != n * n || lax.cols() != n * n) throw InvalidArgument("tensor_from_lax: expected n^2 x n^2");
    VertexTensor t(n);
    for (int i1 = 0; i1 < n; ++i1)
        for (int i2 = 0; i2 < n; ++i2)
            for (int i3 = 0; i3 < n; ++i3)
                for (int i4 = 0; i4 < n; ++i4) t(i1, i2, i3, i4) = lax(i4 * n + i3, i2 * n + i1);
    return t;
}

CMatrix t_vertex(const VertexTensor& t, int L, const Limits& lim) {
    return t_vertex_from_lax(lax_from_tensor(t), t.n(), L, lim);
}

CMatrix t_vertex_from_lax(const CMatrix& lax, int n, int L, const Limits& lim) {
    if (lax.rows() != n * n || lax.cols() != n * n) throw InvalidArgument("t_vertex: Lax must be n^2 x n^2");
    if (L < 1) throw InvalidArgument("t_vertex: L must be >= 1");
    const std::size_t d = checked_dim(n, L, lim);
    const std::size_t nn = static_cast<std::size_t>(n) * n;

    // aux blocks B(q',q)[a',a] = L(a' n + q', a n + q)
    std::vector<std::vector<cplx>> blocks(nn * nn, std::vector<cplx>(nn));
    std::vector<bool> zero(nn * nn, true);
    for (int qo = 0; qo < n; ++qo)
        for (int qi = 0; qi < n; ++qi) {
            auto& b = blocks[qo * n + qi];
            for (int ao = 0; ao < n; ++ao)
                for (int ai = 0; ai < n; ++ai) {
                    b[ao * n + ai] = lax(ao * n + qo, ai * n + qi);
                    if (b[ao * n + ai] != 0.0) zero[qo * n + qi] = false;
                }
        }

    CMatrix out = CMatrix::Zero(d, d);
    // prefix[j] = B_j ... B_1 for the first j sites, site 1 most significant
    std::vector<std::vector<cplx>> prefix(L, std::vector<cplx>(nn, 0.0));
    for (int a = 0; a < n; ++a) prefix[0][a * n + a] = 1.0;

    auto rec = [&](auto&& self, int level, std::size_t row, std::size_t col) -> void {
        const auto& pre = prefix[level];
        for (int qo = 0; qo < n; ++qo)
            for (int qi = 0; qi < n; ++qi) {
                const int bi = qo * n + qi;
                if (zero[bi]) continue;
                const auto& b = blocks[bi];
                const std::size_t r = row * n + qo, c = col * n + qi;
                if (level == L - 1) {
                    cplx s = 0.0;
                    for (int x = 0; x < n; ++x)
                        for (int y = 0; y < n; ++y) s += b[x * n + y] * pre[y * n + x];
                    out(r, c) = s;
                } else {
                    auto& nxt = prefix[level + 1];
                    for (int x = 0; x < n; ++x)
                        for (int y = 0; y < n; ++y) {
                            cplx s = 0.0;
                            for (int z = 0; z < n; ++z) s += b[x * n + z] * pre[z * n + y];
                            nxt[x * n + y] = s;
                        }
                    self(self, level + 1, r, c);
                }
            }
    };
    rec(rec, 0, 0, 0);
    return out;
}

cplx z_vertex_bruteforce(const VertexTensor& t, int L, const Limits& lim) {
    if (L < 1) throw InvalidArgument("z_vertex_bruteforce: L must be >= 1");
    const int n = t.n();
    const std::uint64_t total = checked_configs(n, 2 * L * L, lim);
    std::vector<int> s(2 * L * L, 0);
    auto h = [&](int i, int j) { return s[((i + L) % L) * L + (j + L) % L]; };
    auto v = [&](int i, int j) { return s[L * L + ((i + L) % L) * L + (j + L) % L]; };
    cplx z = 0.0;
    for (std::uint64_t c = 0; c < total; ++c) {
        cplx w = 1.0;
        for (int i = 0; i < L && w != 0.0; ++i)
            for (int j = 0; j < L; ++j) w *= t(h(i, j + 1), v(i, j), h(i, j), v(i + 1, j));
        z += w;
        for (int k = 2 * L * L - 1; k >= 0; --k) {
            if (++s[k] < n) break;
            s[k] = 0;
        }
    }
    return z;
}

VertexTensor tensor_from_mixed8v(const Mixed8VWeights& m) {
    VertexTensor t(2);
    const std::array<cplx, 8> vals{m.w1, m.w2, m.w5, m.w6, m.v1, m.v2, m.v5, m.v6};
    for (std::size_t i = 0; i < 8; ++i) slot(t, kMixedSlots[i]) = vals[i];
    return t;
}

Mixed8VWeights mixed8v_from_tensor(const VertexTensor& t) {
    require_n2(t);
    Mixed8VWeights m;
    cplx* out[8] = {&m.w1, &m.w2, &m.w5, &m.w6, &m.v1, &m.v2, &m.v5, &m.v6};
    for (std::size_t i = 0; i < 8; ++i) *out[i] = slot(t, kMixedSlots[i]);
    return m;
}

VertexTensor tensor_from_even8v(const Even8VWeights& e) {
    VertexTensor t(2);
    const std::array<cplx, 8> vals{e.a_plus, e.a_minus, e.b_plus, e.b_minus, e.c_plus, e.c_minus, e.d_plus, e.d_minus};
    for (std::size_t i = 0; i < 8; ++i) slot(t, kEvenSlots[i]) = vals[i];
    return t;
}

Even8VWeights even8v_from_tensor(const VertexTensor& t) {
    require_n2(t);
    Even8VWeights e;
    cplx* out[8] = {&e.a_plus, &e.a_minus, &e.b_plus, &e.b_minus, &e.c_plus, &e.c_minus, &e.d_plus, &e.d_minus};
    for (std::size_t i = 0; i < 8; ++i) *out[i] = slot(t, kEvenSlots[i]);
    return e;
}

VertexTensor tensor_from_sixteen(const Sixteen16VWeights& s) {
    VertexTensor t(2);
    for (std::size_t i = 0; i < 8; ++i) {
        slot(t, kSixteenW[i]) = s.w[i];
        slot(t, kSixteenV[i]) = s.v[i];
    }
    return t;
}

Sixteen16VWeights sixteen_from_tensor(const VertexTensor& t) {
    require_n2(t);
    Sixteen16VWeights s;
    for (std::size_t i = 0; i < 8; ++i) {
        s.w[i] = slot(t, kSixteenW[i]);
        s.v[i] = slot(t, kSixteenV[i]);
    }
    return s;
}

CMatrix vertex_two_site(const VertexHamiltonianLimit& hl) {
    const VertexTensor& w = hl.w_dot;
    const int n = w.n();
    CMatrix h = CMatrix::Zero(n * n, n * n);
    for (int i1 = 0; i1 < n; ++i1)
        for (int i2 = 0; i2 < n; ++i2)
            for (int i3 = 0; i3 < n; ++i3)
                for (int i4 = 0; i4 < n; ++i4) h(i3 * n + i4, i2 * n + i1) += w(i1, i2, i3, i4);
    return h;
}

CMatrix vertex_hamiltonian(const VertexHamiltonianLimit& hl, int L) {
    if (L < 2) throw InvalidArgument("vertex_hamiltonian: L must be >= 2");
    return periodic_bond_sum(vertex_two_site(hl), hl.w_dot.n(), L);
}

}  // namespace latticemap::vertex
