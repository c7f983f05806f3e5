#pragma once

#include "latticemap/matcore.hpp"

namespace latticemap::elliptic {

// x spectral point, lambda crossing parameter, k modulus
struct EllipticParams {
    double k = 0.5;
    double lambda = 0.5;
    cplx x = 0.0;

    void validate() const;
};

struct SnCnDn {
    cplx sn, cn, dn;
};

// |value| above this is reported as a pole
inline constexpr double kPoleThreshold = 1e12;

// complete elliptic integral of the first kind, 0 <= k < 1
double complete_k(double k);
double complementary_modulus(double k);

// real argument, 0 <= k <= 1
void jacobi_real(double u, double k, double& sn, double& cn, double& dn);

// complex argument; accurate for |Im u| < K'
SnCnDn jacobi(cplx u, double k);
cplx jacobi_sn(cplx u, double k);
cplx jacobi_cn(cplx u, double k);
cplx jacobi_dn(cplx u, double k);

}  // namespace latticemap::elliptic
