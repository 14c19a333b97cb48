#pragma once

#include "kitpulse/dense.hpp"
#include "kitpulse/pauli.hpp"
#include "kitpulse/pulse.hpp"

namespace kitpulse {

// U = exp(-iHt) via Hermitian eigendecomposition.  H must be Hermitian
// (symbolic coefficient-realness check) or a contract_error is thrown.
DenseOperator evolve_exact(const OperatorSum& h, double t);

struct ChebyshevResult {
    DenseOperator u;
    double truncation_bound = 0.0;  // sum over substeps of 2|J_{order+1}(a*h)|
    int steps = 0;                  // substep count
};

// Fixed-order Chebyshev propagator.  The time interval is split into
// ceil(a|t| / 0.5) substeps so the order-6 truncation stays far inside
// the Bessel tail; a is the coefficient 1-norm of the traceless part
// and b the identity coefficient, factored out as a pure phase.
ChebyshevResult evolve_chebyshev(const OperatorSum& h, double t, int order = 6);

struct PulsedEvolutionSpec {
    PulseSequence sequence;
    double total_time = 0.0;
    int bch_reps = 1;  // n >= 1
};

enum class EvolveMethod { Exact, Chebyshev };

// Factor Hamiltonians of one pulse-cycle repetition, in product order:
// {H, RH} (efficient) or {H, R1H, R2H, R2R1H} per x/y/z leg (standard).
std::vector<OperatorSum> stage_factor_hamiltonians(const OperatorSum& h,
                                                   const PulseSequence& seq);

// Pulsed evolution with cached stage eigendecompositions so sweeps over
// (t, n) pay for diagonalization once.
//   efficient: U = [exp(-i(t/n)H) exp(-i(t/n)RH)]^n
//   standard:  per rep, legs x,y,z; per leg tau = (t/n)/4 and factors
//              exp(-i tau H) exp(-i tau R1H) exp(-i tau R2H) exp(-i tau R2R1H)
class PulsedPropagator {
public:
    PulsedPropagator(const OperatorSum& h, const PulseSequence& seq,
                     EvolveMethod method = EvolveMethod::Exact, int cheb_order = 6);

    DenseOperator evolve(double t, int bch_reps) const;

    // The matched engineered target: H + RH (efficient) or the Kitaev
    // stage average scaled to the same engineered time (standard).
    const OperatorSum& target() const { return target_; }

private:
    Scheme scheme_;
    EvolveMethod method_;
    int cheb_order_;
    std::vector<OperatorSum> factors_;     // factor Hamiltonians in product order
    std::vector<EigenSystem> stage_eigs_;  // cached only for the exact method
    OperatorSum target_;
};

DenseOperator pulsed_evolution(const PulsedEvolutionSpec& spec, const OperatorSum& h);

}  // namespace kitpulse
