#pragma once

#include <complex>
#include <cstddef>
#include <vector>

#include "kitpulse/pauli.hpp"

namespace kitpulse {

// Column-major 2^N x 2^N complex matrix.
struct DenseOperator {
    int n_sites = 0;
    std::size_t dim = 0;
    std::vector<cplx> a;

    DenseOperator() = default;
    explicit DenseOperator(int n)
        : n_sites(n), dim(std::size_t(1) << n), a(dim * dim, cplx{0.0, 0.0}) {}

    cplx& at(std::size_t r, std::size_t c) { return a[c * dim + r]; }
    const cplx& at(std::size_t r, std::size_t c) const { return a[c * dim + r]; }

    static DenseOperator identity(int n);
};

DenseOperator dense_add(const DenseOperator& x, const DenseOperator& y);
DenseOperator dense_sub(const DenseOperator& x, const DenseOperator& y);
DenseOperator dense_scale(const DenseOperator& x, cplx s);
DenseOperator dense_adjoint(const DenseOperator& x);
cplx dense_trace(const DenseOperator& x);

// Tr(X * Y) without forming the product.
cplx trace_product(const DenseOperator& x, const DenseOperator& y);

double max_abs_diff(const DenseOperator& x, const DenseOperator& y);

// Largest singular value via power iteration on M^H M.
double operator_norm(const DenseOperator& m, int iters = 60);

bool is_unitary(const DenseOperator& u, double tol = 1e-10);
bool is_hermitian(const DenseOperator& h, double tol = 1e-10);

// Hermitian eigendecomposition (LAPACK zheevd); ascending eigenvalues,
// eigenvectors in columns of v.
struct EigenSystem {
    std::vector<double> w;
    DenseOperator v;
};
EigenSystem eigh(const DenseOperator& h);
std::vector<double> eigvalsh(const DenseOperator& h);

// V diag(exp(i * sign * w * t)) V^H.
DenseOperator evolution_from_eigensystem(const EigenSystem& es, double t, double sign);

}  // namespace kitpulse
