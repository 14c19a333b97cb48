#include "kitpulse/config.hpp"

#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

namespace kitpulse {

namespace {

using nlohmann::json;

void require_keys(const json& obj, const std::string& scope,
                  const std::set<std::string>& allowed) {
    for (const auto& [key, value] : obj.items()) {
        (void)value;
        if (!allowed.count(key))
            throw config_error("config: unknown field '" + scope + key + "'");
    }
}

double finite_number(const json& v, const std::string& field) {
    if (!v.is_number()) throw config_error("config: field '" + field + "' must be a number");
    const double x = v.get<double>();
    if (!std::isfinite(x)) throw config_error("config: field '" + field + "' must be finite");
    return x;
}

int integer_field(const json& v, const std::string& field, int lo) {
    if (!v.is_number_integer())
        throw config_error("config: field '" + field + "' must be an integer");
    const int x = v.get<int>();
    if (x < lo)
        throw config_error("config: field '" + field + "' must be >= " + std::to_string(lo));
    return x;
}

std::array<double, 3> vec3_field(const json& v, const std::string& field) {
    if (!v.is_array() || v.size() != 3)
        throw config_error("config: field '" + field + "' must be a 3-element array");
    std::array<double, 3> out{};
    for (int k = 0; k < 3; ++k) out[k] = finite_number(v[k], field);
    return out;
}

}  // namespace

RunConfig parse_config(const std::string& json_text) {
    json root;
    try {
        root = json::parse(json_text, nullptr, true, /*ignore_comments=*/true);
    } catch (const json::parse_error& e) {
        throw config_error(std::string("config: invalid JSON: ") + e.what());
    }
    if (!root.is_object()) throw config_error("config: top level must be an object");

    require_keys(root, "", {"lattice", "case", "couplings", "spin_orbit", "hyperfine",
                            "scheme", "bch_reps", "t_grid", "method", "chebyshev_order",
                            "overhead", "j_meas", "dump", "dump_time", "pattern_file",
                            "out", "threads"});

    RunConfig cfg;
    cfg.echo = root.dump(2);

    if (root.contains("lattice")) {
        const json& l = root["lattice"];
        require_keys(l, "lattice.", {"rows", "cols", "boundary"});
        if (l.contains("rows")) cfg.rows = integer_field(l["rows"], "lattice.rows", 1);
        if (l.contains("cols")) cfg.cols = integer_field(l["cols"], "lattice.cols", 1);
        if (l.contains("boundary")) {
            const std::string b = l["boundary"].get<std::string>();
            if (b == "open")
                cfg.boundary = Boundary::Open;
            else if (b == "closed")
                cfg.boundary = Boundary::Closed;
            else
                throw config_error("config: field 'lattice.boundary' must be open|closed");
        }
    }

    if (root.contains("case")) {
        const std::string c = root["case"].get<std::string>();
        ParameterCase pc;
        if (c == "i")
            pc = case_i();
        else if (c == "ii")
            pc = case_ii();
        else if (c == "iii")
            pc = case_iii();
        else
            throw config_error("config: field 'case' must be i|ii|iii");
        cfg.case_name = pc.name;
        cfg.j = pc.j;
        cfg.so = pc.so;
        cfg.hf = pc.hf;
    }

    if (root.contains("couplings")) {
        const json& c = root["couplings"];
        require_keys(c, "couplings.", {"jx", "jy", "jz"});
        if (c.contains("jx")) cfg.j.jx = finite_number(c["jx"], "couplings.jx");
        if (c.contains("jy")) cfg.j.jy = finite_number(c["jy"], "couplings.jy");
        if (c.contains("jz")) cfg.j.jz = finite_number(c["jz"], "couplings.jz");
        if (!root.contains("case")) cfg.case_name = "custom";
    }
    if (cfg.j.jz <= 0.0)
        throw config_error("config: field 'couplings.jz' must be positive (reference scale)");

    if (root.contains("spin_orbit")) {
        const json& s = root["spin_orbit"];
        require_keys(s, "spin_orbit.", {"c", "d"});
        if (s.contains("c")) cfg.so.c = vec3_field(s["c"], "spin_orbit.c");
        if (s.contains("d")) cfg.so.d = vec3_field(s["d"], "spin_orbit.d");
    }

    if (root.contains("hyperfine")) {
        const json& h = root["hyperfine"];
        require_keys(h, "hyperfine.", {"mode", "amplitude", "seed"});
        if (h.contains("mode")) {
            const std::string m = h["mode"].get<std::string>();
            if (m == "uniform")
                cfg.hf.mode = HyperfineMode::Uniform;
            else if (m == "random")
                cfg.hf.mode = HyperfineMode::SeededRandom;
            else
                throw config_error("config: field 'hyperfine.mode' must be uniform|random");
        }
        if (h.contains("amplitude"))
            cfg.hf.amplitude = vec3_field(h["amplitude"], "hyperfine.amplitude");
        if (h.contains("seed"))
            cfg.hf.seed = h["seed"].get<std::uint64_t>();
        else if (cfg.hf.mode == HyperfineMode::SeededRandom)
            throw config_error("config: field 'hyperfine.seed' is mandatory in random mode");
    }

    if (root.contains("scheme"))
        cfg.scheme = scheme_from_name(root["scheme"].get<std::string>());
    if (root.contains("bch_reps")) cfg.bch_reps = integer_field(root["bch_reps"], "bch_reps", 1);

    if (root.contains("t_grid")) {
        const json& g = root["t_grid"];
        require_keys(g, "t_grid.", {"start", "stop", "points"});
        if (g.contains("start")) cfg.t_grid.start = finite_number(g["start"], "t_grid.start");
        if (g.contains("stop")) cfg.t_grid.stop = finite_number(g["stop"], "t_grid.stop");
        if (g.contains("points"))
            cfg.t_grid.points = integer_field(g["points"], "t_grid.points", 1);
    }

    if (root.contains("method")) {
        const std::string m = root["method"].get<std::string>();
        if (m == "exact")
            cfg.method = EvolveMethod::Exact;
        else if (m == "chebyshev")
            cfg.method = EvolveMethod::Chebyshev;
        else
            throw config_error("config: field 'method' must be exact|chebyshev");
    }
    if (root.contains("chebyshev_order"))
        cfg.cheb_order = integer_field(root["chebyshev_order"], "chebyshev_order", 1);

    if (root.contains("overhead")) {
        const json& o = root["overhead"];
        require_keys(o, "overhead.", {"tau_rot", "tau"});
        if (o.contains("tau_rot")) cfg.tau_rot = finite_number(o["tau_rot"], "overhead.tau_rot");
        if (o.contains("tau")) cfg.tau = finite_number(o["tau"], "overhead.tau");
        if (cfg.tau <= 0.0) throw config_error("config: field 'overhead.tau' must be positive");
        if (cfg.tau_rot < 0.0)
            throw config_error("config: field 'overhead.tau_rot' must be non-negative");
    }

    if (root.contains("j_meas")) {
        cfg.j_meas = finite_number(root["j_meas"], "j_meas");
        if (cfg.j_meas <= 0.0) throw config_error("config: field 'j_meas' must be positive");
    }

    if (root.contains("dump")) {
        cfg.dump = root["dump"].get<std::string>();
        static const std::set<std::string> kDumps = {"heisenberg", "kitaev", "rotated",
                                                     "effective", "unwanted"};
        if (!kDumps.count(cfg.dump))
            throw config_error("config: field 'dump' must be one of "
                               "heisenberg|kitaev|rotated|effective|unwanted");
    }
    if (root.contains("dump_time")) cfg.dump_time = finite_number(root["dump_time"], "dump_time");
    if (root.contains("pattern_file")) cfg.pattern_file = root["pattern_file"].get<std::string>();
    if (root.contains("out")) cfg.out = root["out"].get<std::string>();
    if (root.contains("threads")) cfg.threads = integer_field(root["threads"], "threads", 0);

    // Normalize energies to the reference scale.
    const double jz = cfg.j.jz;
    cfg.j.jx /= jz;
    cfg.j.jy /= jz;
    cfg.j.jz = 1.0;
    for (int k = 0; k < 3; ++k) {
        cfg.so.c[k] /= jz;
        cfg.so.d[k] /= jz;
        cfg.hf.amplitude[k] /= jz;
    }
    cfg.j_meas /= jz;
    return cfg;
}

RunConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw config_error("config: cannot open file " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_config(buf.str());
}

HoneycombLattice lattice_from_config(const RunConfig& cfg) {
    HoneycombLattice lat = build_patch(cfg.rows, cfg.cols, cfg.boundary);
    if (lat.n_sites > kDenseCap)
        throw resource_error("config: lattice has " + std::to_string(lat.n_sites) +
                             " sites, above the dense cap of " + std::to_string(kDenseCap));
    return lat;
}

ParameterCase parameter_case_from_config(const RunConfig& cfg) {
    return {cfg.case_name, cfg.j, cfg.so, cfg.hf};
}

}  // namespace kitpulse
