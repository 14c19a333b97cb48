#include "kitpulse/runner.hpp"

#include <chrono>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "kitpulse/kernels.hpp"

namespace kitpulse {

namespace {

std::string fmt(double x) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw config_error("cannot open output file " + path);
    out << text;
}

void write_manifest(const RunConfig& cfg, const std::string& out_path,
                    const std::string& output_text, double wall_seconds) {
    nlohmann::json m;
    m["version"] = kArtifactVersion;
    m["config"] = nlohmann::json::parse(cfg.echo);
    m["wall_clock_seconds"] = wall_seconds;
    char hex[32];
    std::snprintf(hex, sizeof(hex), "fnv1a64:%016llx",
                  static_cast<unsigned long long>(fnv1a64(output_text)));
    m["checksums"][out_path] = hex;
    write_file(out_path + ".manifest.json", m.dump(2) + "\n");
}

// Emit to file + manifest when an output path is configured, otherwise
// to the fallback stream.
void deliver(const RunConfig& cfg, const std::string& text, std::ostream& fallback,
             double wall_seconds) {
    if (cfg.out.empty()) {
        fallback << text;
    } else {
        write_file(cfg.out, text);
        write_manifest(cfg, cfg.out, text, wall_seconds);
    }
}

class Stopwatch {
public:
    double seconds() const {
        return std::chrono::duration<double>(clock::now() - start_).count();
    }

private:
    using clock = std::chrono::steady_clock;
    clock::time_point start_ = clock::now();
};

std::string dump_terms(const OperatorSum& op) {
    std::ostringstream os;
    for (const auto& t : normalize(op).terms) {
        os << fmt(t.coeff.real()) << ' ' << fmt(t.coeff.imag());
        if (t.is_identity()) os << " I";
        for (const auto& [site, axis] : t.axes) os << ' ' << site << ':' << axis_char(axis);
        os << '\n';
    }
    return os.str();
}

PulseSequence sequence_for(const RunConfig& cfg, const HoneycombLattice& lat) {
    if (!cfg.pattern_file.empty()) {
        if (cfg.scheme != Scheme::Efficient)
            throw config_error("pattern_file override requires the efficient scheme");
        std::ifstream in(cfg.pattern_file);
        if (!in) throw config_error("cannot open pattern file " + cfg.pattern_file);
        PulsePattern p = pattern_from_text(in);
        if (p.n_sites() < lat.n_sites) p.axis.resize(lat.n_sites, Rot::None);
        PulseSequence seq;
        seq.scheme = Scheme::Efficient;
        seq.stages.push_back({std::move(p), "efficient"});
        return seq;
    }
    return cfg.scheme == Scheme::Efficient ? efficient_sequence(lat) : standard_sequence(lat);
}

}  // namespace

std::uint64_t fnv1a64(std::string_view data) {
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (unsigned char c : data) {
        h ^= c;
        h *= 0x100000001b3ull;
    }
    return h;
}

int run_verify_pulses(const RunConfig& cfg, std::ostream& fallback) {
    Stopwatch sw;
    const HoneycombLattice lat = lattice_from_config(cfg);
    const OperatorSum h_s = heisenberg(lat, cfg.j);
    const PulseSequence seq = sequence_for(cfg, lat);
    const OperatorSum target = kitaev(lat, cfg.j, +1);
    const VerificationReport rep = verify_target(h_s, seq, target, &lat);

    std::ostringstream os;
    os << "scheme " << scheme_name(seq.scheme) << '\n';
    os << "sites " << lat.n_sites << " bonds " << lat.bonds.size() << '\n';
    for (const auto& stage : seq.stages) {
        os << "stage " << stage.role << ":";
        for (int s = 0; s < lat.n_sites; ++s)
            os << ' ' << s << '=' << rot_name(stage.pattern.axis[s]);
        os << '\n';
    }
    std::set<int> bad(rep.offending_bonds.begin(), rep.offending_bonds.end());
    for (std::size_t b = 0; b < lat.bonds.size(); ++b)
        os << "link " << b << " (" << lat.bonds[b].i << ',' << lat.bonds[b].j << ','
           << link_char(lat.bonds[b].type) << "): " << (bad.count(int(b)) ? "residual" : "ok")
           << '\n';
    os << "result: " << (rep.exact ? "exact" : "MISMATCH") << '\n';
    if (!rep.exact) {
        os << "residual terms:\n" << dump_terms(rep.residual);
    }
    deliver(cfg, os.str(), fallback, sw.seconds());
    return rep.exact ? kExitOk : kExitVerificationFailed;
}

int run_fidelity(const RunConfig& cfg, std::ostream& fallback) {
    Stopwatch sw;
    const HoneycombLattice lat = lattice_from_config(cfg);
    const FidelityCurve curve = fidelity_sweep(lat, parameter_case_from_config(cfg), cfg.scheme,
                                               cfg.bch_reps, cfg.t_grid, cfg.method,
                                               cfg.cheb_order);
    std::ostringstream os;
    os << "t,F,scheme,n,case\n";
    for (std::size_t k = 0; k < curve.times.size(); ++k)
        os << fmt(curve.times[k]) << ',' << fmt(curve.values[k]) << ',' << curve.scheme << ','
           << curve.bch_reps << ',' << curve.case_name << '\n';
    deliver(cfg, os.str(), fallback, sw.seconds());
    return kExitOk;
}

int run_spectrum(const RunConfig& cfg, std::ostream& fallback) {
    Stopwatch sw;
    const HoneycombLattice lat = lattice_from_config(cfg);
    const OperatorSum h_clean = heisenberg(lat, cfg.j);
    const OperatorSum h_s = normalize(
        add(add(h_clean, spin_orbit(lat, cfg.so)), hyperfine(lat, cfg.hf)));
    // H_R from the clean efficient pattern; perturbations ride along in H_S.
    const OperatorSum h_r = rotated_hamiltonian(h_clean, efficient_pattern(lat));
    const SpectrumCurve curve = spectrum_sweep(h_s, h_r, cfg.t_grid);

    std::ostringstream os;
    os << "t";
    for (std::size_t k = 0; k < curve.eigenvalues[0].size(); ++k) os << ",eig_" << k;
    os << ",gap\n";
    for (std::size_t k = 0; k < curve.times.size(); ++k) {
        os << fmt(curve.times[k]);
        for (double w : curve.eigenvalues[k]) os << ',' << fmt(w);
        os << ',' << fmt(curve.gap[k]) << '\n';
    }
    deliver(cfg, os.str(), fallback, sw.seconds());
    return kExitOk;
}

int run_constraints(const RunConfig& cfg, std::ostream& fallback) {
    Stopwatch sw;
    const HoneycombLattice lat = lattice_from_config(cfg);
    const ConstraintReport rep = perturbation_budgets(cfg.j, cfg.so, cfg.hf, lat.n_sites);

    nlohmann::json out;
    out["j_eff_k"] = rep.j_eff_k;
    out["t_max"] = rep.t_max;
    out["so_budget"] = rep.so_budget;
    out["hf_budget"] = rep.hf_budget;
    out["so_pass"] = rep.so_pass;
    out["hf_pass"] = rep.hf_pass;
    out["phase"] = phase_classify(cfg.j) == Phase::A ? "A" : "B";
    out["overhead_efficient"] = refresh_overhead(cfg.tau_rot, cfg.tau, Scheme::Efficient);
    out["overhead_standard"] = refresh_overhead(cfg.tau_rot, cfg.tau, Scheme::Standard);
    out["measurement_cycle_time"] = measurement_cycle_time(cfg.j_meas);
    out["j_meas_exceeds_jz"] = cfg.j_meas > 1.0;  // advisory only
    deliver(cfg, out.dump(2) + "\n", fallback, sw.seconds());
    return kExitOk;
}

int run_overhead(const RunConfig& cfg, std::ostream& fallback) {
    Stopwatch sw;
    nlohmann::json out;
    out["tau_rot"] = cfg.tau_rot;
    out["tau"] = cfg.tau;
    out["efficient"] = refresh_overhead(cfg.tau_rot, cfg.tau, Scheme::Efficient);
    out["standard"] = refresh_overhead(cfg.tau_rot, cfg.tau, Scheme::Standard);
    out["ratio"] = out["standard"].get<double>() / out["efficient"].get<double>();
    deliver(cfg, out.dump(2) + "\n", fallback, sw.seconds());
    return kExitOk;
}

int run_dump_hamiltonian(const RunConfig& cfg, std::ostream& fallback) {
    Stopwatch sw;
    const HoneycombLattice lat = lattice_from_config(cfg);
    const OperatorSum h_s = heisenberg(lat, cfg.j);
    OperatorSum op;
    if (cfg.dump == "heisenberg") {
        op = h_s;
    } else if (cfg.dump == "kitaev") {
        op = kitaev(lat, cfg.j, +1);
    } else {
        const OperatorSum h_r = rotated_hamiltonian(h_s, efficient_pattern(lat));
        if (cfg.dump == "rotated")
            op = h_r;
        else if (cfg.dump == "effective")
            op = effective_bch_hamiltonian(h_s, h_r, cfg.dump_time);
        else
            op = unwanted_first_order(h_s, h_r, cfg.dump_time);
    }
    deliver(cfg, dump_terms(op), fallback, sw.seconds());
    return kExitOk;
}

}  // namespace kitpulse
