#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include "kitpulse/config.hpp"

namespace kitpulse {

inline constexpr const char* kArtifactVersion = "0.1.0";

enum ExitCode : int {
    kExitOk = 0,
    kExitVerificationFailed = 1,
    kExitConfigError = 2,
    kExitResourceCap = 3,
};

std::uint64_t fnv1a64(std::string_view data);

// Each runner builds its output text, writes it to cfg.out (or `fallback`
// when no path is set) and, for file outputs, a <out>.manifest.json with
// the config echo, artifact version, wall clock and output checksum.
int run_verify_pulses(const RunConfig& cfg, std::ostream& fallback);
int run_fidelity(const RunConfig& cfg, std::ostream& fallback);
int run_spectrum(const RunConfig& cfg, std::ostream& fallback);
int run_constraints(const RunConfig& cfg, std::ostream& fallback);
int run_overhead(const RunConfig& cfg, std::ostream& fallback);
int run_dump_hamiltonian(const RunConfig& cfg, std::ostream& fallback);

}  // namespace kitpulse
