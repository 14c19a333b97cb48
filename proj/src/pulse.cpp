#include "kitpulse/pulse.hpp"

#include <algorithm>
#include <queue>
#include <set>

namespace kitpulse {

std::string scheme_name(Scheme s) {
    return s == Scheme::Efficient ? "efficient" : "standard";
}

Scheme scheme_from_name(const std::string& s) {
    if (s == "efficient") return Scheme::Efficient;
    if (s == "standard") return Scheme::Standard;
    throw config_error("unknown scheme: " + s);
}

namespace {

inline Rot rot_of_axis(Axis a) { return static_cast<Rot>(static_cast<int>(a) + 1); }

// Axis of a rotation, or -1 for none.
inline int rot_axis(Rot r) { return static_cast<int>(r) - 1; }

}  // namespace

std::vector<PairMask> efficient_constraints(const HoneycombLattice& lattice) {
    std::vector<PairMask> masks(lattice.bonds.size(), 0);
    for (std::size_t b = 0; b < lattice.bonds.size(); ++b) {
        const int a = static_cast<int>(lattice.bonds[b].type);
        const Rot ra = rot_of_axis(static_cast<Axis>(a));
        const Rot rb = rot_of_axis(static_cast<Axis>((a + 1) % 3));
        const Rot rc = rot_of_axis(static_cast<Axis>((a + 2) % 3));
        PairMask m = 0;
        m |= PairMask(1) << pair_index(rb, rc);
        m |= PairMask(1) << pair_index(rc, rb);
        m |= PairMask(1) << pair_index(Rot::None, ra);
        m |= PairMask(1) << pair_index(ra, Rot::None);
        masks[b] = m;
    }
    return masks;
}

PulsePattern solve_pattern(const HoneycombLattice& lattice,
                           const std::vector<PairMask>& link_constraints,
                           const std::vector<Rot>& seed) {
    const int n = lattice.n_sites;
    if (link_constraints.size() != lattice.bonds.size())
        throw dimension_error("solve_pattern: one constraint mask per bond required");
    if (!seed.empty() && static_cast<int>(seed.size()) != n)
        throw dimension_error("solve_pattern: seed size mismatch");

    // A link with no admissible pair can never be satisfied.
    {
        std::vector<int> empties;
        for (std::size_t b = 0; b < link_constraints.size(); ++b)
            if (link_constraints[b] == 0) empties.push_back(static_cast<int>(b));
        if (!empties.empty())
            throw synthesis_error("solve_pattern: link with empty admissible set", empties);
    }

    std::vector<std::vector<int>> incident(n);
    for (std::size_t b = 0; b < lattice.bonds.size(); ++b) {
        incident[lattice.bonds[b].i].push_back(static_cast<int>(b));
        incident[lattice.bonds[b].j].push_back(static_cast<int>(b));
    }

    const bool seeded = !seed.empty();
    std::vector<Rot> axis(n, Rot::None);
    std::vector<bool> assigned(n, false);

    auto admits = [&](int b, int site, Rot r) {
        const Bond& bond = lattice.bonds[b];
        const int other = bond.i == site ? bond.j : bond.i;
        if (!assigned[other]) return true;
        const Rot ri = bond.i == site ? r : axis[other];
        const Rot rj = bond.i == site ? axis[other] : r;
        return ((link_constraints[b] >> pair_index(ri, rj)) & 1) != 0;
    };

    // Fix seeded sites first so a contradictory seed is reported as the
    // certificate rather than triggering a doomed search.
    if (seeded) {
        std::vector<int> bad;
        for (int s = 0; s < n; ++s) {
            if (seed[s] == Rot::None) continue;
            for (int b : incident[s])
                if (!admits(b, s, seed[s])) bad.push_back(b);
            axis[s] = seed[s];
            assigned[s] = true;
        }
        if (!bad.empty()) {
            std::sort(bad.begin(), bad.end());
            bad.erase(std::unique(bad.begin(), bad.end()), bad.end());
            throw synthesis_error("solve_pattern: seed violates link constraints", bad);
        }
    }

    std::vector<int> free_sites;
    for (int s = 0; s < n; ++s)
        if (!assigned[s]) free_sites.push_back(s);

    // Track the frontier of the deepest failure for the certificate.
    int deepest = -1;
    std::set<int> blocking;
    static constexpr Rot kOrder[4] = {Rot::None, Rot::X, Rot::Y, Rot::Z};

    auto search = [&](auto&& self, std::size_t pos) -> bool {
        if (pos == free_sites.size()) return true;
        const int s = free_sites[pos];
        for (Rot r : kOrder) {
            bool ok = true;
            for (int b : incident[s]) {
                if (!admits(b, s, r)) {
                    ok = false;
                    if (static_cast<int>(pos) >= deepest) {
                        if (static_cast<int>(pos) > deepest) {
                            deepest = static_cast<int>(pos);
                            blocking.clear();
                        }
                        blocking.insert(b);
                    }
                    break;
                }
            }
            if (!ok) continue;
            axis[s] = r;
            assigned[s] = true;
            if (self(self, pos + 1)) return true;
            assigned[s] = false;
        }
        return false;
    };

    if (!search(search, 0))
        throw synthesis_error("solve_pattern: no satisfying assignment",
                              std::vector<int>(blocking.begin(), blocking.end()));
    return PulsePattern{std::move(axis)};
}

PulsePattern efficient_pattern(const HoneycombLattice& lattice) {
    std::vector<Rot> seed(lattice.n_sites, Rot::None);
    if (!lattice.plaquettes.empty()) {
        const Plaquette& p = lattice.plaquettes[0];
        for (int k = 0; k < 6; ++k)
            seed[p.sites[k]] = rot_of_axis(link_axis(lattice.external_link_type(p, k)));
    }
    return solve_pattern(lattice, efficient_constraints(lattice), seed);
}

PulseSequence standard_sequence(const HoneycombLattice& lattice) {
    PulseSequence seq;
    seq.scheme = Scheme::Standard;
    const char* names = "xyz";
    for (int a = 0; a < 3; ++a) {
        const Rot ra = rot_of_axis(static_cast<Axis>(a));
        const Rot rb = rot_of_axis(static_cast<Axis>((a + 1) % 3));

        // Stage 1: rotate sublattice B about alpha; every link's
        // non-alpha couplings average away.
        PulsePattern p1;
        p1.axis.resize(lattice.n_sites, Rot::None);
        for (int s = 0; s < lattice.n_sites; ++s)
            if (lattice.sublattice[s]) p1.axis[s] = ra;

        // Stage 2: two-color the sites so alpha-links join equal colors
        // and other links join opposite colors; pulse one color about an
        // axis != alpha to erase the Ising term off the alpha-links.
        std::vector<int> color(lattice.n_sites, -1);
        std::vector<std::vector<std::pair<int, int>>> adj(lattice.n_sites);
        for (std::size_t b = 0; b < lattice.bonds.size(); ++b) {
            adj[lattice.bonds[b].i].push_back({lattice.bonds[b].j, static_cast<int>(b)});
            adj[lattice.bonds[b].j].push_back({lattice.bonds[b].i, static_cast<int>(b)});
        }
        std::vector<int> odd_bonds;
        for (int root = 0; root < lattice.n_sites; ++root) {
            if (color[root] != -1) continue;
            color[root] = 0;
            std::queue<int> q;
            q.push(root);
            while (!q.empty()) {
                const int u = q.front();
                q.pop();
                for (auto [v, b] : adj[u]) {
                    const int want =
                        static_cast<int>(lattice.bonds[b].type) == a ? color[u] : 1 - color[u];
                    if (color[v] == -1) {
                        color[v] = want;
                        q.push(v);
                    } else if (color[v] != want) {
                        odd_bonds.push_back(b);
                    }
                }
            }
        }
        if (!odd_bonds.empty()) {
            std::sort(odd_bonds.begin(), odd_bonds.end());
            odd_bonds.erase(std::unique(odd_bonds.begin(), odd_bonds.end()), odd_bonds.end());
            throw synthesis_error(
                "standard_sequence: alpha-contracted graph is not bipartite", odd_bonds);
        }
        PulsePattern p2;
        p2.axis.resize(lattice.n_sites, Rot::None);
        for (int s = 0; s < lattice.n_sites; ++s)
            if (color[s] == 1) p2.axis[s] = rb;

        seq.stages.push_back({std::move(p1), std::string("step1-") + names[a]});
        seq.stages.push_back({std::move(p2), std::string("step2-") + names[a]});
    }
    return seq;
}

PulseSequence efficient_sequence(const HoneycombLattice& lattice) {
    PulseSequence seq;
    seq.scheme = Scheme::Efficient;
    seq.stages.push_back({efficient_pattern(lattice), "efficient"});
    return seq;
}

OperatorSum rotated_hamiltonian(const OperatorSum& h, const PulsePattern& p) {
    if (p.n_sites() != h.n_sites)
        throw dimension_error("rotated_hamiltonian: site count mismatch");
    return conjugate_by_pulse(h, p);
}

OperatorSum stage_averaged_hamiltonian(const OperatorSum& h, const PulseSequence& seq) {
    if (seq.stages.empty()) throw contract_error("stage_averaged_hamiltonian: empty sequence");
    if (seq.scheme == Scheme::Efficient) {
        if (seq.stages.size() != 1)
            throw contract_error("efficient sequence must have exactly one stage");
        return normalize(
            scale(add(h, rotated_hamiltonian(h, seq.stages[0].pattern)), cplx{0.5, 0.0}));
    }
    if (seq.stages.size() != 6)
        throw contract_error("standard sequence must have exactly six stages");
    OperatorSum total(h.n_sites);
    for (int k = 0; k < 6; k += 2) {
        const PulsePattern& p1 = seq.stages[k].pattern;
        const PulsePattern& p2 = seq.stages[k + 1].pattern;
        const OperatorSum r1 = rotated_hamiltonian(h, p1);
        OperatorSum leg = add(add(h, r1), add(rotated_hamiltonian(h, p2),
                                              rotated_hamiltonian(r1, p2)));
        total = add(total, scale(leg, cplx{0.25, 0.0}));
    }
    return normalize(total);
}

VerificationReport verify_target(const OperatorSum& h_s, const PulseSequence& seq,
                                 const OperatorSum& target,
                                 const HoneycombLattice* lattice) {
    VerificationReport rep;
    rep.residual = normalize(subtract(stage_averaged_hamiltonian(h_s, seq), target));
    rep.exact = rep.residual.terms.empty();
    if (!rep.exact && lattice) {
        std::set<int> support;
        for (const auto& t : rep.residual.terms)
            for (const auto& [site, ax] : t.axes) support.insert(site);
        for (std::size_t b = 0; b < lattice->bonds.size(); ++b)
            if (support.count(lattice->bonds[b].i) && support.count(lattice->bonds[b].j))
                rep.offending_bonds.push_back(static_cast<int>(b));
    }
    return rep;
}

}  // namespace kitpulse
