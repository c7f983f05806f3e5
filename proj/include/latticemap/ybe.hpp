#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "latticemap/matcore.hpp"

namespace latticemap::ybe {

using Mask = Eigen::Array<bool, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

struct RSolveReport {
    CMatrix r;
    int kernel_dim = 0;
    double residual = 0.0;
    std::optional<Mask> mask;
    // all kernel directions reshaped to n^2 x n^2, normalized
    std::vector<CMatrix> basis;
};

struct UnitarityResult {
    double residual = 0.0;
    cplx constant = 0.0;
};

// local dimension n from an n^2 x n^2 operator
int local_dim(const CMatrix& op);

CMatrix embed12(const CMatrix& op);
CMatrix embed23(const CMatrix& op);
CMatrix embed13(const CMatrix& op);

// |R12 L13 L23 - L23 L13 R12| / |R12 L13 L23|
double rll_residual(const CMatrix& r, const CMatrix& lax1, const CMatrix& lax2);

// |R12 R13 R23 - R23 R13 R12| / |R12 R13 R23|
double ybe_residual(const CMatrix& r12, const CMatrix& r13, const CMatrix& r23);

// M = R(x1,x2) P R(x2,x1) P against (Tr M / dim) I
UnitarityResult unitarity_residual(const CMatrix& r_ab, const CMatrix& r_ba);

// unit Frobenius norm, first nonzero row-major entry real positive
CMatrix normalize_r(const CMatrix& r);

RSolveReport solve_r(const std::vector<std::pair<CMatrix, CMatrix>>& lax_pairs, double tol = 1e-9,
                     const std::optional<Mask>& mask = std::nullopt);

// entry is zero only if below rel * max in every solve
Mask infer_mask(const std::vector<RSolveReport>& solves, double rel = 1e-8);

}  // namespace latticemap::ybe
