#include "kitpulse/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <set>

#include "kitpulse/kernels.hpp"
#include "kitpulse/propagator.hpp"

namespace kitpulse {

std::vector<double> TGrid::values() const {
    if (points < 1) throw config_error("t_grid: points must be >= 1");
    std::vector<double> v(points);
    if (points == 1) {
        v[0] = start;
        return v;
    }
    const double step = (stop - start) / (points - 1);
    for (int k = 0; k < points; ++k) v[k] = start + k * step;
    return v;
}

ParameterCase case_i() {
    return {"i", Couplings{0.3, 0.3, 1.0}, SpinOrbitParams{}, HyperfineField{}};
}

ParameterCase case_ii() {
    ParameterCase pc{"ii", Couplings{0.3, 0.3, 1.0}, SpinOrbitParams{}, HyperfineField{}};
    pc.so.d = {0.1, 0.1, 0.1};
    pc.hf.amplitude = {0.1, 0.1, 0.1};
    return pc;
}

ParameterCase case_iii() {
    ParameterCase pc{"iii", Couplings{1.0, 1.0, 1.0}, SpinOrbitParams{}, HyperfineField{}};
    pc.so.d = {0.3, 0.3, 0.3};
    pc.hf.amplitude = {0.3, 0.3, 0.3};
    return pc;
}

double gate_fidelity(const EigenSystem& target_es, const DenseOperator& u_p, double t) {
    if (target_es.v.dim != u_p.dim) throw dimension_error("gate_fidelity: dimension mismatch");
    const DenseOperator inv = evolution_from_eigensystem(target_es, t, +1.0);
    return std::abs(trace_product(inv, u_p)) / static_cast<double>(u_p.dim);
}

double gate_fidelity(const OperatorSum& target_h, const DenseOperator& u_p, double t) {
    if (!is_hermitian(target_h)) throw contract_error("gate_fidelity: target not Hermitian");
    return gate_fidelity(eigh(kernels::to_dense(target_h)), u_p, t);
}

OperatorSum engineered_target(const OperatorSum& h, const PulseSequence& seq) {
    OperatorSum avg = stage_averaged_hamiltonian(h, seq);
    return seq.scheme == Scheme::Efficient ? scale(avg, cplx{2.0, 0.0}) : avg;
}

FidelityCurve fidelity_sweep(const HoneycombLattice& lattice, const ParameterCase& pc,
                             Scheme scheme, int bch_reps, const TGrid& grid,
                             EvolveMethod method, int cheb_order) {
    const OperatorSum h_clean = heisenberg(lattice, pc.j);
    const OperatorSum h_evolved = normalize(
        add(add(h_clean, spin_orbit(lattice, pc.so)), hyperfine(lattice, pc.hf)));
    const PulseSequence seq = scheme == Scheme::Efficient ? efficient_sequence(lattice)
                                                          : standard_sequence(lattice);
    const EigenSystem target_es = eigh(kernels::to_dense(engineered_target(h_clean, seq)));
    const PulsedPropagator prop(h_evolved, seq, method, cheb_order);

    FidelityCurve curve;
    curve.times = grid.values();
    curve.scheme = scheme_name(scheme);
    curve.bch_reps = bch_reps;
    curve.case_name = pc.name;
    curve.values.reserve(curve.times.size());
    for (double t : curve.times)
        curve.values.push_back(gate_fidelity(target_es, prop.evolve(t, bch_reps), t));
    return curve;
}

SpectrumCurve spectrum_sweep(const OperatorSum& h_s, const OperatorSum& h_r,
                             const TGrid& grid) {
    SpectrumCurve curve;
    curve.times = grid.values();
    for (double t : curve.times) {
        std::vector<double> w = eigvalsh(kernels::to_dense(effective_bch_hamiltonian(h_s, h_r, t)));
        double gap = 0.0;
        for (std::size_t k = 1; k < w.size(); ++k) {
            if (w[k] - w[0] > kGapDegeneracyTol) {
                gap = w[k] - w[0];
                break;
            }
        }
        curve.eigenvalues.push_back(std::move(w));
        curve.gap.push_back(gap);
    }
    return curve;
}

Phase phase_classify(const Couplings& j) {
    if (j.jx < 0.0 || j.jy < 0.0 || j.jz < 0.0)
        throw contract_error("phase_classify: couplings must be non-negative");
    const bool b = j.jx <= j.jy + j.jz && j.jy <= j.jx + j.jz && j.jz <= j.jx + j.jy;
    return b ? Phase::B : Phase::A;
}

PauliString plaquette_operator(const HoneycombLattice& lattice, int p) {
    if (p < 0 || p >= static_cast<int>(lattice.plaquettes.size()))
        throw dimension_error("plaquette_operator: plaquette index out of range");
    const Plaquette& pl = lattice.plaquettes[p];
    std::vector<std::pair<int, Axis>> axes;
    for (int k = 0; k < 6; ++k)
        axes.push_back({pl.sites[k], link_axis(lattice.external_link_type(pl, k))});
    std::sort(axes.begin(), axes.end());
    return PauliString{cplx{1.0, 0.0}, std::move(axes)};
}

EffectiveSpinResult effective_spin_map(const OperatorSum& op,
                                       const std::vector<std::pair<int, int>>& dimer_pairs) {
    std::map<int, std::pair<int, int>> site_to_dimer;  // site -> (dimer index, position)
    for (std::size_t d = 0; d < dimer_pairs.size(); ++d) {
        site_to_dimer[dimer_pairs[d].first] = {static_cast<int>(d), 0};
        site_to_dimer[dimer_pairs[d].second] = {static_cast<int>(d), 1};
    }

    EffectiveSpinResult res;
    res.mapped.n_sites = static_cast<int>(dimer_pairs.size());
    res.unmapped.n_sites = op.n_sites;

    // pair code: 4*left + right with I=0, X=1, Y=2, Z=3.
    auto code_of = [](Axis a) { return static_cast<int>(a) + 1; };
    for (const auto& term : op.terms) {
        std::vector<std::array<int, 2>> dimer_codes(dimer_pairs.size(), {0, 0});
        bool outside = false;
        for (const auto& [site, axis] : term.axes) {
            auto it = site_to_dimer.find(site);
            if (it == site_to_dimer.end()) {
                outside = true;
                break;
            }
            dimer_codes[it->second.first][it->second.second] = code_of(axis);
        }
        PauliString out;
        out.coeff = term.coeff;
        bool killed = outside;
        if (!killed) {
            for (std::size_t d = 0; d < dimer_codes.size(); ++d) {
                const int l = dimer_codes[d][0], r = dimer_codes[d][1];
                const int code = 4 * l + r;
                const int e = static_cast<int>(d);
                switch (code) {
                    case 0: break;                                            // I x I -> I
                    case 5: out.axes.push_back({e, Axis::X}); break;          // X x X
                    case 10: out.coeff = -out.coeff;                          // Y x Y -> -X
                        out.axes.push_back({e, Axis::X});
                        break;
                    case 6:                                                   // X x Y
                    case 9: out.axes.push_back({e, Axis::Y}); break;          // Y x X
                    case 12:                                                  // Z x I
                    case 3: out.axes.push_back({e, Axis::Z}); break;          // I x Z
                    case 15: break;                                           // Z x Z -> I
                    default: killed = true; break;
                }
                if (killed) break;
            }
        }
        if (killed)
            res.unmapped.terms.push_back(term);
        else
            res.mapped.terms.push_back(std::move(out));
    }
    res.mapped = normalize(res.mapped);
    res.unmapped = normalize(res.unmapped);
    return res;
}

double toric_coupling(const Couplings& j) {
    if (j.jz == 0.0) throw contract_error("toric_coupling: J_z must be nonzero");
    return j.jx * j.jx * j.jy * j.jy / (16.0 * j.jz * j.jz * j.jz);
}

EffectiveMatrix second_order_effective(const OperatorSum& h0, const OperatorSum& v,
                                       double ground_energy_tolerance) {
    if (h0.n_sites != v.n_sites)
        throw dimension_error("second_order_effective: site count mismatch");
    const EigenSystem es = eigh(kernels::to_dense(h0));
    const std::size_t dim = es.v.dim;
    std::size_t g = 1;
    while (g < dim && es.w[g] - es.w[0] <= ground_energy_tolerance) ++g;
    if (g == dim)
        throw contract_error("second_order_effective: no excited manifold above tolerance");

    // B = V^H (V_dense V): matrix elements of the perturbation in the
    // H0 eigenbasis.
    const DenseOperator b =
        kernels::matmul(dense_adjoint(es.v), kernels::matmul(kernels::to_dense(v), es.v));

    EffectiveMatrix m;
    m.dim = g;
    m.a.assign(g * g, cplx{0.0, 0.0});
    const double e0 = es.w[0];
    for (std::size_t col = 0; col < g; ++col)
        for (std::size_t row = 0; row < g; ++row) {
            cplx s{0.0, 0.0};
            for (std::size_t j = g; j < dim; ++j)
                s += b.at(row, j) * b.at(j, col) / (e0 - es.w[j]);
            m.at(row, col) = s;
        }
    return m;
}

ConstraintReport perturbation_budgets(const Couplings& j, const SpinOrbitParams& so,
                                      const HyperfineField& hf, int n_sites) {
    if (j.jz <= 0.0) throw contract_error("perturbation_budgets: J_z must be positive");
    ConstraintReport rep;
    rep.j_eff_k = toric_coupling(j);
    const double j_max = std::max(j.jx, j.jy);
    rep.t_max = j_max > 0.0 ? std::sqrt(rep.j_eff_k / (j_max * j_max * j.jz)) : 0.0;
    rep.so_budget = 2.0 * so.d[0] * so.d[1] / j.jz;

    double hxy = 0.0;
    if (hf.mode == HyperfineMode::Uniform) {
        hxy = hf.amplitude[0] * hf.amplitude[1];
    } else {
        const auto fields = hf.realize(n_sites);
        for (const auto& f : fields) hxy += f[0] * f[1];
        hxy /= static_cast<double>(n_sites);
    }
    rep.hf_budget = hxy / j.jz;
    rep.so_pass = std::abs(rep.so_budget) < rep.j_eff_k;
    rep.hf_pass = std::abs(rep.hf_budget) < rep.j_eff_k;
    return rep;
}

double refresh_overhead(double tau_rot, double tau, Scheme scheme) {
    if (tau <= 0.0) throw contract_error("refresh_overhead: tau must be positive");
    if (tau_rot < 0.0) throw contract_error("refresh_overhead: tau_rot must be non-negative");
    const double efc = (2.0 * tau_rot + tau) / tau;
    return scheme == Scheme::Efficient ? efc : 3.0 * efc;
}

double measurement_cycle_time(double j_meas) {
    if (j_meas <= 0.0) throw contract_error("measurement_cycle_time: J_meas must be positive");
    return std::numbers::pi / j_meas;
}

}  // namespace kitpulse
