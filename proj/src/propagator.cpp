#include "kitpulse/propagator.hpp"

#include <cmath>

#include "kitpulse/kernels.hpp"

namespace kitpulse {

DenseOperator evolve_exact(const OperatorSum& h, double t) {
    if (!is_hermitian(h)) throw contract_error("evolve_exact: Hamiltonian is not Hermitian");
    return evolution_from_eigensystem(eigh(kernels::to_dense(h)), t, -1.0);
}

namespace {

double bessel_j(int k, double x) {
    // std::cyl_bessel_j requires x >= 0; J_k(-x) = (-1)^k J_k(x).
    const double v = std::cyl_bessel_j(static_cast<double>(k), std::abs(x));
    return (x < 0.0 && (k & 1)) ? -v : v;
}

}  // namespace

ChebyshevResult evolve_chebyshev(const OperatorSum& h, double t, int order) {
    if (!is_hermitian(h)) throw contract_error("evolve_chebyshev: Hamiltonian is not Hermitian");
    if (order < 1) throw contract_error("evolve_chebyshev: order must be >= 1");
    const OperatorSum hn = normalize(h);
    const kernels::CompiledOp op = kernels::compile(hn);
    const std::size_t dim = op.dim;
    const int n = hn.n_sites;

    double a = 0.0, b = 0.0;
    for (const auto& term : hn.terms) {
        if (term.is_identity())
            b = term.coeff.real();
        else
            a += std::abs(term.coeff);
    }

    ChebyshevResult res;
    if (a == 0.0) {  // pure phase, no recurrence
        res.u = dense_scale(DenseOperator::identity(n), std::exp(cplx{0.0, -b * t}));
        return res;
    }

    constexpr double kTheta = 0.5;  // max |a*h| per substep
    const int m = std::max(1, static_cast<int>(std::ceil(a * std::abs(t) / kTheta)));
    const double hstep = t / m;
    const double x = a * hstep;

    // Shifted-and-scaled action: y = (H*v - b*v)/a, columns in bulk.
    auto apply_tilde = [&](const DenseOperator& in, DenseOperator& out) {
        kernels::apply(op, in.a.data(), out.a.data(), dim);
        const double inv_a = 1.0 / a;
        for (std::size_t k = 0; k < out.a.size(); ++k)
            out.a[k] = (out.a[k] - b * in.a[k]) * inv_a;
    };

    DenseOperator t_prev = DenseOperator::identity(n);
    DenseOperator t_cur(n);
    apply_tilde(t_prev, t_cur);

    static constexpr cplx kMinusIPow[4] = {{1, 0}, {0, -1}, {-1, 0}, {0, 1}};
    DenseOperator step(n);
    // k = 0, 1 seeds
    {
        const cplx c0 = bessel_j(0, x);
        const cplx c1 = 2.0 * kMinusIPow[1] * bessel_j(1, x);
        for (std::size_t k = 0; k < step.a.size(); ++k)
            step.a[k] = c0 * t_prev.a[k] + c1 * t_cur.a[k];
    }
    DenseOperator t_next(n);
    for (int k = 2; k <= order; ++k) {
        apply_tilde(t_cur, t_next);
        for (std::size_t i = 0; i < t_next.a.size(); ++i)
            t_next.a[i] = 2.0 * t_next.a[i] - t_prev.a[i];
        const cplx ck = 2.0 * kMinusIPow[k % 4] * bessel_j(k, x);
        for (std::size_t i = 0; i < step.a.size(); ++i) step.a[i] += ck * t_next.a[i];
        std::swap(t_prev, t_cur);
        std::swap(t_cur, t_next);
    }
    step = dense_scale(step, std::exp(cplx{0.0, -b * hstep}));

    DenseOperator u = step;
    for (int s = 1; s < m; ++s) u = kernels::matmul(u, step);

    res.u = std::move(u);
    res.steps = m;
    res.truncation_bound = m * 2.0 * std::abs(bessel_j(order + 1, x));
    return res;
}

std::vector<OperatorSum> stage_factor_hamiltonians(const OperatorSum& h,
                                                   const PulseSequence& seq) {
    std::vector<OperatorSum> factors;
    if (seq.scheme == Scheme::Efficient) {
        if (seq.stages.size() != 1)
            throw contract_error("stage_factor_hamiltonians: efficient sequence needs one stage");
        factors.push_back(h);
        factors.push_back(rotated_hamiltonian(h, seq.stages[0].pattern));
    } else {
        if (seq.stages.size() != 6)
            throw contract_error("stage_factor_hamiltonians: standard sequence needs six stages");
        for (int k = 0; k < 6; k += 2) {
            const PulsePattern& p1 = seq.stages[k].pattern;
            const PulsePattern& p2 = seq.stages[k + 1].pattern;
            const OperatorSum r1 = rotated_hamiltonian(h, p1);
            factors.push_back(h);
            factors.push_back(r1);
            factors.push_back(rotated_hamiltonian(h, p2));
            factors.push_back(rotated_hamiltonian(r1, p2));
        }
    }
    return factors;
}

PulsedPropagator::PulsedPropagator(const OperatorSum& h, const PulseSequence& seq,
                                   EvolveMethod method, int cheb_order)
    : scheme_(seq.scheme), method_(method), cheb_order_(cheb_order) {
    if (!is_hermitian(h)) throw contract_error("PulsedPropagator: Hamiltonian not Hermitian");
    factors_ = stage_factor_hamiltonians(h, seq);
    if (method_ == EvolveMethod::Exact)
        for (const OperatorSum& f : factors_) stage_eigs_.push_back(eigh(kernels::to_dense(f)));
    target_ = scheme_ == Scheme::Efficient ? normalize(add(h, factors_[1]))
                                           : stage_averaged_hamiltonian(h, seq);
}

DenseOperator PulsedPropagator::evolve(double t, int bch_reps) const {
    if (bch_reps < 1) throw contract_error("PulsedPropagator: bch_reps must be >= 1");
    const double s = t / bch_reps;
    const double tau = scheme_ == Scheme::Efficient ? s : s / 4.0;

    DenseOperator rep;
    bool first = true;
    for (std::size_t k = 0; k < factors_.size(); ++k) {
        DenseOperator f = method_ == EvolveMethod::Exact
                              ? evolution_from_eigensystem(stage_eigs_[k], tau, -1.0)
                              : evolve_chebyshev(factors_[k], tau, cheb_order_).u;
        rep = first ? std::move(f) : kernels::matmul(rep, f);
        first = false;
    }
    DenseOperator u = rep;
    for (int r = 1; r < bch_reps; ++r) u = kernels::matmul(u, rep);
    return u;
}

DenseOperator pulsed_evolution(const PulsedEvolutionSpec& spec, const OperatorSum& h) {
    return PulsedPropagator(h, spec.sequence).evolve(spec.total_time, spec.bch_reps);
}

}  // namespace kitpulse
