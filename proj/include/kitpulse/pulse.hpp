#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "kitpulse/lattice.hpp"
#include "kitpulse/pauli.hpp"

namespace kitpulse {

struct PulseStage {
    PulsePattern pattern;
    std::string role;  // "efficient", "step1-x", "step2-x", ...
};

enum class Scheme { Efficient, Standard };

std::string scheme_name(Scheme s);
Scheme scheme_from_name(const std::string& s);

struct PulseSequence {
    Scheme scheme = Scheme::Efficient;
    std::vector<PulseStage> stages;  // 1 stage (efficient) or 6 (standard)
};

// Admissible ordered (rot_i, rot_j) pairs per bond, as a 16-bit mask
// indexed by rot_i * 4 + rot_j.
using PairMask = std::uint16_t;

inline constexpr int pair_index(Rot a, Rot b) {
    return static_cast<int>(a) * 4 + static_cast<int>(b);
}

// Constraints for the one-step scheme: on an alpha-link the endpoint
// axes are the two non-alpha axes, or {none, alpha} in either order.
std::vector<PairMask> efficient_constraints(const HoneycombLattice& lattice);

// Backtracking search over per-site axes; `seed` entries other than
// Rot::None are fixed in advance (pass an empty vector for no seed).
// Site order ascending, axis order none,x,y,z.  Throws synthesis_error
// carrying the violated bond set when no assignment exists.
PulsePattern solve_pattern(const HoneycombLattice& lattice,
                           const std::vector<PairMask>& link_constraints,
                           const std::vector<Rot>& seed = {});

// One-step pattern with plaquette 0 fully rotated (each of its sites
// pulsed about its off-plaquette link type), remaining sites solved.
PulsePattern efficient_pattern(const HoneycombLattice& lattice);

// Six-stage sequence: for each alpha, stage 1 averages the Heisenberg
// couplings to an all-bond alpha Ising form and stage 2 erases it on
// non-alpha links.
PulseSequence standard_sequence(const HoneycombLattice& lattice);

PulseSequence efficient_sequence(const HoneycombLattice& lattice);

// Term-by-term pulse conjugation P^dag H P.
OperatorSum rotated_hamiltonian(const OperatorSum& h, const PulsePattern& p);

// The exact engineered average of a sequence applied to h:
//   efficient: (h + R h) / 2
//   standard:  sum over alpha of (h + R1 h + R2 h + R2 R1 h) / 4
OperatorSum stage_averaged_hamiltonian(const OperatorSum& h, const PulseSequence& seq);

struct VerificationReport {
    bool exact = false;
    OperatorSum residual;                 // averaged - target, normalized
    std::vector<int> offending_bonds;     // bonds whose sites carry residual support
};

VerificationReport verify_target(const OperatorSum& h_s, const PulseSequence& seq,
                                 const OperatorSum& target,
                                 const HoneycombLattice* lattice = nullptr);

}  // namespace kitpulse
