#pragma once

#include <optional>
#include <string>

#include "kitpulse/analysis.hpp"
#include "kitpulse/hamiltonians.hpp"
#include "kitpulse/lattice.hpp"
#include "kitpulse/propagator.hpp"
#include "kitpulse/pulse.hpp"

namespace kitpulse {

// Parsed, validated run configuration.  All energies are normalized to
// J_z = 1 during validation; times are in units of 1/J_z throughout.
struct RunConfig {
    int rows = 1;
    int cols = 1;
    Boundary boundary = Boundary::Open;

    Couplings j{0.3, 0.3, 1.0};
    SpinOrbitParams so;
    HyperfineField hf;
    std::string case_name = "custom";

    Scheme scheme = Scheme::Efficient;
    int bch_reps = 1;
    TGrid t_grid{0.0, 1.0, 21};
    EvolveMethod method = EvolveMethod::Exact;
    int cheb_order = 6;

    double tau_rot = 0.0;
    double tau = 1.0;
    double j_meas = 10.0;

    std::string dump = "heisenberg";  // heisenberg|kitaev|rotated|effective|unwanted
    double dump_time = 0.0;
    std::string pattern_file;  // override for verify-pulses; empty = synthesize

    std::string out;           // output path; empty = stdout (reports only)
    int threads = 0;           // 0 = leave the OpenMP default

    // Verbatim config text as parsed, echoed into the manifest.
    std::string echo;
};

// Parse a JSON config file (comments allowed).  Unknown keys and
// out-of-domain values raise config_error naming the field.
RunConfig load_config(const std::string& path);
RunConfig parse_config(const std::string& json_text);

HoneycombLattice lattice_from_config(const RunConfig& cfg);
ParameterCase parameter_case_from_config(const RunConfig& cfg);

}  // namespace kitpulse
