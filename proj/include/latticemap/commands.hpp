#pragma once

#include <array>
#include <cstdint>
#include <exception>
#include <string>

#include "latticemap/matcore.hpp"
#include "latticemap/report.hpp"
#include "latticemap/spin.hpp"
#include "latticemap/vertex.hpp"

namespace latticemap::cli {

enum ExitCode : int {
    kExitPass = 0,
    kExitCheckFailed = 1,
    kExitUsage = 2,
    kExitSizeCap = 3,
    kExitDomain = 4,
};

int exit_code_for(const std::exception& e);

struct EquivOptions {
    std::string model = "ising";  // ising | fz3 | random
    std::string map = "a";
    int n = 2;
    int L = 3;
    double beta = 1.0;
    double jh = 0.7;
    double jv = 0.3;
    double hfield = 0.2;
    double x = 0.11;
    std::uint64_t seed = 7;
};

struct YbeOptions {
    std::string system = "mixed8v";  // mixed8v | fz27 | even8v
    double k = 0.4;
    double lambda = 0.6;
    std::array<double, 3> points{0.31, 0.17, 0.05};
};

struct SolveROptions {
    std::string system = "fz27";  // fz27 | mixed8v | even8v
    double x = 0.11;
    double y = 0.07;
    double k = 0.4;
    double lambda = 0.6;
    double tol = 1e-9;
};

struct SurfaceOptions {
    double k = 0.4;
    double lambda = 0.6;
    double x1 = 0.31;
    double x2 = 0.17;
};

struct FreefermionOptions {
    std::string map = "a";
    double beta = 1.0;
    double jh = 0.5;
    double jv = 0.5;
    int L = 3;
};

struct HamiltonianOptions {
    std::string system = "mixed";  // mixed | fz27 | spin | vertex
    int L = 3;
    double theta = 0.4;
    double kappa = 1.3;
    double j = 1.0;
    double x = 0.09;
    double x0 = 0.05;
    int n = 2;
    double step = 1e-5;
    std::uint64_t seed = 7;
};

RunReport cmd_equiv(const EquivOptions& o, const Limits& lim);
RunReport cmd_ybe(const YbeOptions& o);
RunReport cmd_solve_r(const SolveROptions& o);
RunReport cmd_surface(const SurfaceOptions& o);
RunReport cmd_freefermion(const FreefermionOptions& o, const Limits& lim);
RunReport cmd_hamiltonian(const HamiltonianOptions& o, const Limits& lim);

// central difference of t_diag at W_h = 1 + e*wh_dot, W_v = I + e*wv_dot, against spin_hamiltonian
double fd_spin_limit_deviation(const spin::SpinHamiltonianLimit& hl, int L, double step, const Limits& lim = {});

// T(0)^-1 dT/de of t_vertex at P + e*w_dot, against vertex_hamiltonian
double fd_vertex_limit_deviation(const vertex::VertexHamiltonianLimit& hl, int L, double step, const Limits& lim = {});

// random first-order coefficients, entries uniform in [-1, 1]
spin::SpinHamiltonianLimit random_spin_limit(int n, std::uint64_t seed);
vertex::VertexHamiltonianLimit random_vertex_limit(int n, std::uint64_t seed);

}  // namespace latticemap::cli
