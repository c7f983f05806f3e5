#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include <Eigen/Dense>

#include "latticemap/errors.hpp"

namespace latticemap {

using cplx = std::complex<double>;
using CMatrix = Eigen::Matrix<cplx, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
using CVector = Eigen::VectorXcd;

struct Limits {
    std::size_t max_dim = 1024;
    std::uint64_t max_configs = std::uint64_t{1} << 25;

    // max_dim taken from LATTICEMAP_MAX_DIM when set
    static Limits from_env();
};

struct NullspaceResult {
    std::vector<CVector> basis;
    int rank = 0;
    double residual = 0.0;
};

CMatrix identity(std::size_t d);
CMatrix kron(const CMatrix& a, const CMatrix& b);
cplx trace(const CMatrix& a);

// Tr(T^p); keeps a single running power
cplx mat_trace_power(const CMatrix& t, int p);

NullspaceResult nullspace(const CMatrix& a, double tol = 1e-9);

// sorted by (real, imag)
std::vector<cplx> eig_spectrum(const CMatrix& a);

double max_abs(const CMatrix& a);
double rel_err(cplx got, cplx want);
bool is_square(const CMatrix& a);

// n^L, throws SizeCapError above lim.max_dim
std::size_t checked_dim(int n, int L, const Limits& lim);
std::uint64_t checked_configs(int n, int sites, const Limits& lim);

// swap on C^n (x) C^n
CMatrix permutator(int n);

// 1-site operator acting on site j of L sites (site 0 most significant)
CMatrix site_op(const CMatrix& op, int n, int L, int j);

// 2-site operator h on sites (j, j+1 mod L); h basis has site j most significant
CMatrix embed_two_site(const CMatrix& h, int n, int L, int j);

// sum over j of embed_two_site(h, n, L, j)
CMatrix periodic_bond_sum(const CMatrix& h, int n, int L);

// site-reversal permutation on n^L
CMatrix site_reversal(int n, int L);

std::vector<int> digits(std::size_t index, int n, int L);

}  // namespace latticemap
