#pragma once

#include <array>
#include <cstdint>
#include <string>

#include "kitpulse/lattice.hpp"
#include "kitpulse/pauli.hpp"

namespace kitpulse {

// Energies in units of J_z (the CLI normalizes raw inputs to J_z = 1).
struct Couplings {
    double jx = 0.0, jy = 0.0, jz = 1.0;

    double of(LinkType t) const {
        switch (t) {
            case LinkType::X: return jx;
            case LinkType::Y: return jy;
            default: return jz;
        }
    }
};

struct SpinOrbitParams {
    std::array<double, 3> c{0.0, 0.0, 0.0};
    std::array<double, 3> d{0.0, 0.0, 0.0};
};

enum class HyperfineMode { Uniform, SeededRandom };

struct HyperfineField {
    HyperfineMode mode = HyperfineMode::Uniform;
    std::array<double, 3> amplitude{0.0, 0.0, 0.0};  // field (uniform) or sigma (random)
    std::uint64_t seed = 0;

    // Per-site static field vectors; Gaussian per component in random mode.
    std::vector<std::array<double, 3>> realize(int n_sites) const;
};

// One XX+YY+ZZ triple per bond, same couplings on every bond.
OperatorSum heisenberg(const HoneycombLattice& lattice, const Couplings& j);

// sign * J_alpha sigma^alpha sigma^alpha per alpha-link.
OperatorSum kitaev(const HoneycombLattice& lattice, const Couplings& j, int sign = +1);

// Bond-wise c.(sigma_j - sigma_k) + d.(sigma_j x sigma_k), j < k.
OperatorSum spin_orbit(const HoneycombLattice& lattice, const SpinOrbitParams& p);

// -sum_j dh . sigma_j with per-site static fields.
OperatorSum hyperfine(const HoneycombLattice& lattice, const HyperfineField& field);

// {H_S + H_R - i(t/2)[H_S, H_R]}/2.
OperatorSum effective_bch_hamiltonian(const OperatorSum& h_s, const OperatorSum& h_r, double t);

// -i t [H_S, H_R] / 4.
OperatorSum unwanted_first_order(const OperatorSum& h_s, const OperatorSum& h_r, double t);

}  // namespace kitpulse
