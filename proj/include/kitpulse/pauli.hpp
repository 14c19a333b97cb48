#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "kitpulse/errors.hpp"

namespace kitpulse {

using cplx = std::complex<double>;

enum class Axis : std::uint8_t { X = 0, Y = 1, Z = 2 };

char axis_char(Axis a);
Axis axis_from_char(char c);

// Per-site pi rotation axis. None means the site is not pulsed.
enum class Rot : std::uint8_t { None = 0, X = 1, Y = 2, Z = 3 };

std::string rot_name(Rot r);
Rot rot_from_name(const std::string& s);

// Per-site rotation-axis assignment; index is the site.
struct PulsePattern {
    std::vector<Rot> axis;

    int n_sites() const { return static_cast<int>(axis.size()); }
    bool operator==(const PulsePattern&) const = default;
};

// A tensor product of single-site Pauli operators with a complex
// coefficient.  Identity sites are represented by absence; `axes` is
// sorted by site index and site indices are unique.
struct PauliString {
    cplx coeff{1.0, 0.0};
    std::vector<std::pair<int, Axis>> axes;

    PauliString() = default;
    PauliString(cplx c, std::vector<std::pair<int, Axis>> a);

    bool is_identity() const { return axes.empty(); }
    int max_site() const { return axes.empty() ? -1 : axes.back().first; }
    std::string key() const;  // axes only, canonical text form
    std::string to_string() const;
};

// Convenience single-site factory.
PauliString pauli(Axis a, int site, cplx coeff = 1.0);

// Pauli group product with accumulated phase.
PauliString multiply(const PauliString& a, const PauliString& b);

// Conjugation by a pattern of pi pulses: sigma_a at a pulsed site with
// axis a is preserved, the other two axes pick up a sign.
PauliString conjugate_by_pulse(const PauliString& term, const PulsePattern& pattern);

struct OperatorSum {
    int n_sites = 0;
    std::vector<PauliString> terms;

    OperatorSum() = default;
    explicit OperatorSum(int n) : n_sites(n) {}
    OperatorSum(int n, std::vector<PauliString> t) : n_sites(n), terms(std::move(t)) {}

    OperatorSum& add(const PauliString& t);
    bool empty() const { return terms.empty(); }
    std::string to_string() const;
};

inline constexpr double kDefaultEpsilon = 1e-12;
inline constexpr int kDenseCap = 12;

// Merge duplicate axes maps, drop sub-epsilon coefficients, sort terms
// canonically.  Idempotent.
OperatorSum normalize(const OperatorSum& a, double epsilon = kDefaultEpsilon);

OperatorSum add(const OperatorSum& a, const OperatorSum& b);
OperatorSum subtract(const OperatorSum& a, const OperatorSum& b);
OperatorSum scale(const OperatorSum& a, cplx factor);
OperatorSum multiply(const OperatorSum& a, const OperatorSum& b);

// Exact symbolic [A, B] = AB - BA, normalized.
OperatorSum commutator(const OperatorSum& a, const OperatorSum& b);

OperatorSum conjugate_by_pulse(const OperatorSum& a, const PulsePattern& pattern);

// True when every normalized term has a real coefficient (a Pauli
// string tensor is Hermitian, so Hermiticity is coefficient realness).
bool is_hermitian(const OperatorSum& a, double tol = kDefaultEpsilon);

// Sum of |coeff| over normalized non-identity terms; rigorous bound on
// the spectral radius after centering.
double coefficient_one_norm(const OperatorSum& a);

}  // namespace kitpulse
