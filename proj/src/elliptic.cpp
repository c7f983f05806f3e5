#include "latticemap/elliptic.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <string>

namespace latticemap::elliptic {

namespace {

constexpr int kMaxAgm = 64;

void check_modulus(double k) {
    if (!(k >= 0.0 && k < 1.0)) throw InvalidArgument("elliptic modulus must satisfy 0 <= k < 1, got " + std::to_string(k));
}

}  // namespace

void EllipticParams::validate() const {
    check_modulus(k);
    if (!(k > 0.0)) throw InvalidArgument("EllipticParams: k must be positive");
    if (!std::isfinite(lambda) || !(lambda > 0.0)) throw InvalidArgument("EllipticParams: lambda must be positive and finite");
    if (!std::isfinite(x.real()) || !std::isfinite(x.imag())) throw InvalidArgument("EllipticParams: x must be finite");
}

double complementary_modulus(double k) { return std::sqrt((1.0 - k) * (1.0 + k)); }

double complete_k(double k) {
    check_modulus(k);
    double a = 1.0, b = complementary_modulus(k);
    for (int i = 0; i < kMaxAgm && std::abs(a - b) > 1e-16 * a; ++i) {
        double an = 0.5 * (a + b);
        b = std::sqrt(a * b);
        a = an;
    }
    return std::numbers::pi / (2.0 * a);
}

void jacobi_real(double u, double k, double& sn, double& cn, double& dn) {
    if (!(k >= 0.0 && k <= 1.0)) throw InvalidArgument("jacobi_real: modulus out of [0,1]");
    if (k == 0.0) {
        sn = std::sin(u);
        cn = std::cos(u);
        dn = 1.0;
        return;
    }
    if (k == 1.0) {
        sn = std::tanh(u);
        cn = dn = 1.0 / std::cosh(u);
        return;
    }
    // descending Landen / AGM (A&S 16.4)
    std::array<double, kMaxAgm + 1> a{}, c{};
    a[0] = 1.0;
    c[0] = k;
    double b = complementary_modulus(k);
    int n = 0;
    while (std::abs(c[n]) > 1e-16 && n < kMaxAgm) {
        a[n + 1] = 0.5 * (a[n] + b);
        c[n + 1] = 0.5 * (a[n] - b);
        b = std::sqrt(a[n] * b);
        ++n;
    }
    double phi = std::ldexp(a[n] * u, n);
    for (int i = n; i > 0; --i) {
        phi = 0.5 * (phi + std::asin(c[i] * std::sin(phi) / a[i]));
    }
    sn = std::sin(phi);
    cn = std::cos(phi);
    dn = std::sqrt((1.0 - k * sn) * (1.0 + k * sn));
}

SnCnDn jacobi(cplx u, double k) {
    check_modulus(k);
    if (!std::isfinite(u.real()) || !std::isfinite(u.imag())) throw InvalidArgument("jacobi: argument not finite");
    double s, c, d, s1, c1, d1;
    jacobi_real(u.real(), k, s, c, d);
    jacobi_real(u.imag(), complementary_modulus(k), s1, c1, d1);
    // imaginary transformation plus addition theorem (A&S 16.21)
    const double den = c1 * c1 + k * k * s * s * s1 * s1;
    const double k2 = k * k;
    SnCnDn r;
    const double num = std::abs(s * d1) + std::abs(c * d * s1 * c1) + std::abs(c * c1) + std::abs(s * d * s1 * d1) +
                       std::abs(d * c1 * d1) + std::abs(k2 * s * c * s1);
    if (den == 0.0 || num > kPoleThreshold * std::abs(den))
        throw DomainError("jacobi: argument (" + std::to_string(u.real()) + "," + std::to_string(u.imag()) +
                          ") is at a pole");
    r.sn = cplx(s * d1, c * d * s1 * c1) / den;
    r.cn = cplx(c * c1, -s * d * s1 * d1) / den;
    r.dn = cplx(d * c1 * d1, -k2 * s * c * s1) / den;
    return r;
}

cplx jacobi_sn(cplx u, double k) { return jacobi(u, k).sn; }
cplx jacobi_cn(cplx u, double k) { return jacobi(u, k).cn; }
cplx jacobi_dn(cplx u, double k) { return jacobi(u, k).dn; }

}  // namespace latticemap::elliptic
