#include "kitpulse/hamiltonians.hpp"

#include <random>

namespace kitpulse {

std::vector<std::array<double, 3>> HyperfineField::realize(int n_sites) const {
    std::vector<std::array<double, 3>> fields(n_sites, amplitude);
    if (mode == HyperfineMode::SeededRandom) {
        std::mt19937_64 rng(seed);
        std::normal_distribution<double> g;
        for (auto& f : fields)
            for (int a = 0; a < 3; ++a) f[a] = amplitude[a] * g(rng);
    }
    return fields;
}

OperatorSum heisenberg(const HoneycombLattice& lattice, const Couplings& j) {
    OperatorSum h(lattice.n_sites);
    const double jv[3] = {j.jx, j.jy, j.jz};
    for (const Bond& b : lattice.bonds)
        for (int a = 0; a < 3; ++a) {
            const Axis ax = static_cast<Axis>(a);
            h.add(PauliString{cplx{jv[a], 0.0}, {{b.i, ax}, {b.j, ax}}});
        }
    return normalize(h);
}

OperatorSum kitaev(const HoneycombLattice& lattice, const Couplings& j, int sign) {
    OperatorSum h(lattice.n_sites);
    for (const Bond& b : lattice.bonds) {
        const Axis ax = link_axis(b.type);
        h.add(PauliString{cplx{sign * j.of(b.type), 0.0}, {{b.i, ax}, {b.j, ax}}});
    }
    return normalize(h);
}

OperatorSum spin_orbit(const HoneycombLattice& lattice, const SpinOrbitParams& p) {
    OperatorSum h(lattice.n_sites);
    for (const Bond& b : lattice.bonds) {
        for (int a = 0; a < 3; ++a) {
            const Axis ax = static_cast<Axis>(a);
            if (p.c[a] != 0.0) {
                h.add(PauliString{cplx{p.c[a], 0.0}, {{b.i, ax}}});
                h.add(PauliString{cplx{-p.c[a], 0.0}, {{b.j, ax}}});
            }
            // d_a (sigma_j x sigma_k)_a = d_a (sigma_j^b sigma_k^c - sigma_j^c sigma_k^b)
            if (p.d[a] != 0.0) {
                const Axis axb = static_cast<Axis>((a + 1) % 3);
                const Axis axc = static_cast<Axis>((a + 2) % 3);
                h.add(PauliString{cplx{p.d[a], 0.0}, {{b.i, axb}, {b.j, axc}}});
                h.add(PauliString{cplx{-p.d[a], 0.0}, {{b.i, axc}, {b.j, axb}}});
            }
        }
    }
    return normalize(h);
}

OperatorSum hyperfine(const HoneycombLattice& lattice, const HyperfineField& field) {
    OperatorSum h(lattice.n_sites);
    const auto fields = field.realize(lattice.n_sites);
    for (int s = 0; s < lattice.n_sites; ++s)
        for (int a = 0; a < 3; ++a)
            if (fields[s][a] != 0.0)
                h.add(PauliString{cplx{-fields[s][a], 0.0}, {{s, static_cast<Axis>(a)}}});
    return normalize(h);
}

OperatorSum effective_bch_hamiltonian(const OperatorSum& h_s, const OperatorSum& h_r,
                                      double t) {
    OperatorSum sum = add(h_s, h_r);
    OperatorSum comm = commutator(h_s, h_r);
    return normalize(scale(add(sum, scale(comm, cplx{0.0, -t / 2.0})), cplx{0.5, 0.0}));
}

OperatorSum unwanted_first_order(const OperatorSum& h_s, const OperatorSum& h_r, double t) {
    return normalize(scale(commutator(h_s, h_r), cplx{0.0, -t / 4.0}));
}

}  // namespace kitpulse
