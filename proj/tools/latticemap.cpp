#include <cstdio>
#include <exception>
#include <functional>
#include <iostream>

#include <CLI11.hpp>

#include "latticemap/commands.hpp"

using namespace latticemap;
using namespace latticemap::cli;

int main(int argc, char** argv) {
    CLI::App app{"latticemap: spin/vertex lattice model equivalences and integrability checks"};
    app.require_subcommand(1);
    app.fallthrough();
    bool quiet = false;
    app.add_flag("-q,--quiet", quiet, "suppress the table on stderr");
    std::function<RunReport(const Limits&)> run;

    EquivOptions eq;
    auto* s_eq = app.add_subcommand("equiv", "spin to vertex map, transfer identity and partition equality");
    s_eq->add_option("--model", eq.model)->check(CLI::IsMember({"ising", "fz3", "random"}));
    s_eq->add_option("--map", eq.map)->check(CLI::IsMember({"a", "b"}));
    s_eq->add_option("--n", eq.n);
    s_eq->add_option("--L", eq.L);
    s_eq->add_option("--beta", eq.beta);
    s_eq->add_option("--jh", eq.jh);
    s_eq->add_option("--jv", eq.jv);
    s_eq->add_option("--hfield", eq.hfield);
    s_eq->add_option("--x", eq.x);
    s_eq->add_option("--seed", eq.seed);
    s_eq->callback([&] { run = [&](const Limits& lim) { return cmd_equiv(eq, lim); }; });

    YbeOptions yb;
    std::vector<double> points;
    auto* s_yb = app.add_subcommand("ybe", "RLL, Yang-Baxter and unitarity residuals");
    s_yb->add_option("--system", yb.system)->check(CLI::IsMember({"mixed8v", "fz27", "even8v"}));
    s_yb->add_option("--k", yb.k)->check(CLI::Range(0.0, 1.0).description("modulus in (0,1)"));
    s_yb->add_option("--lambda", yb.lambda);
    s_yb->add_option("--points", points)->delimiter(',')->expected(3);
    s_yb->callback([&] {
        if (!points.empty()) std::copy(points.begin(), points.end(), yb.points.begin());
        run = [&](const Limits&) { return cmd_ybe(yb); };
    });

    SolveROptions sr;
    auto* s_sr = app.add_subcommand("solve-r", "numerical R-matrix from the RLL relation");
    s_sr->add_option("--system", sr.system)->check(CLI::IsMember({"fz27", "mixed8v", "even8v"}));
    s_sr->add_option("--x", sr.x);
    s_sr->add_option("--y", sr.y);
    s_sr->add_option("--k", sr.k)->check(CLI::Range(0.0, 1.0));
    s_sr->add_option("--lambda", sr.lambda);
    s_sr->add_option("--tol", sr.tol);
    s_sr->callback([&] { run = [&](const Limits&) { return cmd_solve_r(sr); }; });

    SurfaceOptions su;
    auto* s_su = app.add_subcommand("surface", "quartic surface of the R entries and its singular points");
    s_su->add_option("--k", su.k)->check(CLI::Range(0.0, 1.0));
    s_su->add_option("--lambda", su.lambda);
    s_su->add_option("--x1", su.x1);
    s_su->add_option("--x2", su.x2);
    s_su->callback([&] { run = [&](const Limits&) { return cmd_surface(su); }; });

    FreefermionOptions ff;
    auto* s_ff = app.add_subcommand("freefermion", "gauge map to the free-fermion eight-vertex model");
    s_ff->add_option("--map", ff.map)->check(CLI::IsMember({"a", "b"}));
    s_ff->add_option("--beta", ff.beta);
    s_ff->add_option("--jh", ff.jh);
    s_ff->add_option("--jv", ff.jv);
    s_ff->add_option("--L", ff.L);
    s_ff->callback([&] { run = [&](const Limits& lim) { return cmd_freefermion(ff, lim); }; });

    HamiltonianOptions hm;
    auto* s_hm = app.add_subcommand("hamiltonian", "spin chain limits and commutation checks");
    s_hm->add_option("--system", hm.system)->check(CLI::IsMember({"mixed", "fz27", "spin", "vertex"}));
    s_hm->add_option("--L", hm.L);
    s_hm->add_option("--theta", hm.theta);
    s_hm->add_option("--kappa", hm.kappa);
    s_hm->add_option("--j", hm.j);
    s_hm->add_option("--x", hm.x);
    s_hm->add_option("--x0", hm.x0);
    s_hm->add_option("--n", hm.n);
    s_hm->add_option("--step", hm.step);
    s_hm->add_option("--seed", hm.seed);
    s_hm->callback([&] { run = [&](const Limits& lim) { return cmd_hamiltonian(hm, lim); }; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        RunReport rep = run(Limits::from_env());
        rep.timestamp = utc_timestamp();
        std::cout << rep.to_json();
        if (!quiet) std::cerr << rep.to_table();
        return rep.all_pass() ? kExitPass : kExitCheckFailed;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_code_for(e);
    }
}
