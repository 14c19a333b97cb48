// Timings for the serial reference kernels vs their OpenMP variants.
#include <chrono>
#include <cstdio>

#include "kitpulse/hamiltonians.hpp"
#include "kitpulse/kernels.hpp"
#include "kitpulse/lattice.hpp"

using namespace kitpulse;

namespace {

template <class F>
double time_best_of(int reps, F&& f) {
    double best = 1e300;
    for (int r = 0; r < reps; ++r) {
        const auto t0 = std::chrono::steady_clock::now();
        f();
        const auto t1 = std::chrono::steady_clock::now();
        best = std::min(best, std::chrono::duration<double>(t1 - t0).count());
    }
    return best;
}

void bench_sites(int rows, int cols) {
    const HoneycombLattice lat = build_patch(rows, cols);
    const OperatorSum h = heisenberg(lat, Couplings{0.3, 0.3, 1.0});
    const kernels::CompiledOp op = kernels::compile(h);
    const std::size_t dim = op.dim;
    std::printf("N=%d (dim %zu, %zu terms)\n", lat.n_sites, dim, op.terms.size());

    DenseOperator in = DenseOperator::identity(lat.n_sites);
    DenseOperator out(lat.n_sites);
    const double ts = time_best_of(3, [&] { kernels::apply_serial(op, in.a.data(), out.a.data(), dim); });
    const double tp = time_best_of(3, [&] { kernels::apply_omp(op, in.a.data(), out.a.data(), dim); });
    std::printf("  apply      serial %.4fs  omp %.4fs  speedup %.2fx\n", ts, tp, ts / tp);

    const DenseOperator a = kernels::to_dense(h);
    DenseOperator c(lat.n_sites);
    const double ms = time_best_of(3, [&] { kernels::matmul_serial(a.a.data(), a.a.data(), c.a.data(), dim); });
    const double mp = time_best_of(3, [&] { kernels::matmul_omp(a.a.data(), a.a.data(), c.a.data(), dim); });
    std::printf("  matmul     serial %.4fs  omp %.4fs  speedup %.2fx\n", ms, mp, ms / mp);

    const double ds = time_best_of(3, [&] { kernels::to_dense_serial(h); });
    const double dp = time_best_of(3, [&] { kernels::to_dense_omp(h); });
    std::printf("  to_dense   serial %.4fs  omp %.4fs  speedup %.2fx\n", ds, dp, ds / dp);
}

}  // namespace

int main() {
    bench_sites(1, 1);  // N = 6
    bench_sites(1, 2);  // N = 10
    return 0;
}
