#pragma once

#include <cstdint>

#include "kitpulse/dense.hpp"
#include "kitpulse/pauli.hpp"

// Data-parallel inner loops on 2^N-dimensional operators.  Every kernel
// comes in a _serial reference version and an _omp version; the
// unsuffixed entry points dispatch to the OpenMP variant.  The serial
// versions are kept as oracles for the test and benchmark suites.
namespace kitpulse::kernels {

// One Pauli string in bit-kernel form: acting on basis state |j> gives
// base * (-1)^popcount(j & phase_mask) * |j ^ flip_mask>.
struct CompiledTerm {
    std::uint64_t flip_mask;
    std::uint64_t phase_mask;
    cplx base;  // coeff * i^(#Y)
};

struct CompiledOp {
    int n_sites = 0;
    std::size_t dim = 0;
    std::vector<CompiledTerm> terms;
};

CompiledOp compile(const OperatorSum& op, int dense_cap = kDenseCap);

// out[, c] = H * in[, c] for `cols` column vectors of length op.dim.
void apply_serial(const CompiledOp& op, const cplx* in, cplx* out, std::size_t cols);
void apply_omp(const CompiledOp& op, const cplx* in, cplx* out, std::size_t cols);
void apply(const CompiledOp& op, const cplx* in, cplx* out, std::size_t cols);

// C = A * B, column-major n x n.
void matmul_serial(const cplx* a, const cplx* b, cplx* c, std::size_t n);
void matmul_omp(const cplx* a, const cplx* b, cplx* c, std::size_t n);
void matmul(const cplx* a, const cplx* b, cplx* c, std::size_t n);

DenseOperator matmul(const DenseOperator& a, const DenseOperator& b);

// Dense realization of a symbolic operator (sum of Kronecker products).
DenseOperator to_dense_serial(const OperatorSum& op, int dense_cap = kDenseCap);
DenseOperator to_dense_omp(const OperatorSum& op, int dense_cap = kDenseCap);
DenseOperator to_dense(const OperatorSum& op, int dense_cap = kDenseCap);

}  // namespace kitpulse::kernels
