#include <iostream>
#include <string>

#include <CLI11.hpp>
#ifdef _OPENMP
#include <omp.h>
#endif

#include "kitpulse/runner.hpp"

namespace {

using kitpulse::RunConfig;

struct CommonArgs {
    std::string config_path;
    std::string out;
    long long seed = -1;
    int threads = -1;
};

void add_common(CLI::App* sub, CommonArgs& args) {
    sub->add_option("config", args.config_path, "JSON config file")->required();
    sub->add_option("--out", args.out, "output path (overrides config)");
    sub->add_option("--seed", args.seed, "hyperfine RNG seed (overrides config)");
    sub->add_option("--threads", args.threads, "OpenMP thread count (overrides config)");
}

RunConfig make_config(const CommonArgs& args) {
    RunConfig cfg = kitpulse::load_config(args.config_path);
    if (!args.out.empty()) cfg.out = args.out;
    if (args.seed >= 0) cfg.hf.seed = static_cast<std::uint64_t>(args.seed);
    if (args.threads >= 0) cfg.threads = args.threads;
#ifdef _OPENMP
    if (cfg.threads > 0) omp_set_num_threads(cfg.threads);
#endif
    return cfg;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Pulse-engineered Kitaev honeycomb model toolkit"};
    app.require_subcommand(1);

    struct Sub {
        const char* name;
        const char* help;
        int (*run)(const RunConfig&, std::ostream&);
        CommonArgs args;
    };
    Sub subs[] = {
        {"verify-pulses", "synthesize pulse patterns and verify the engineered target",
         kitpulse::run_verify_pulses, {}},
        {"fidelity", "gate-fidelity sweep over a time grid (CSV)", kitpulse::run_fidelity, {}},
        {"spectrum", "effective-Hamiltonian spectra and gap over a time grid (CSV)",
         kitpulse::run_spectrum, {}},
        {"constraints", "perturbation budgets and coupling constraints (JSON)",
         kitpulse::run_constraints, {}},
        {"overhead", "refresh-overhead arithmetic (JSON)", kitpulse::run_overhead, {}},
        {"dump-hamiltonian", "emit a Hamiltonian, one Pauli term per line",
         kitpulse::run_dump_hamiltonian, {}},
    };
    for (Sub& s : subs) add_common(app.add_subcommand(s.name, s.help), s.args);

    CLI11_PARSE(app, argc, argv);

    for (Sub& s : subs) {
        if (!app.get_subcommand(s.name)->parsed()) continue;
        try {
            return s.run(make_config(s.args), std::cout);
        } catch (const kitpulse::config_error& e) {
            std::cerr << "config error: " << e.what() << '\n';
            return kitpulse::kExitConfigError;
        } catch (const kitpulse::resource_error& e) {
            std::cerr << "resource cap: " << e.what() << '\n';
            return kitpulse::kExitResourceCap;
        } catch (const kitpulse::synthesis_error& e) {
            std::cerr << "synthesis failed: " << e.what() << " (violated links:";
            for (int b : e.violated_bonds) std::cerr << ' ' << b;
            std::cerr << ")\n";
            return kitpulse::kExitVerificationFailed;
        } catch (const std::exception& e) {
            std::cerr << "error: " << e.what() << '\n';
            return kitpulse::kExitVerificationFailed;
        }
    }
    return kitpulse::kExitConfigError;
}
