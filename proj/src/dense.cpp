#include "kitpulse/dense.hpp"

#include <cmath>
#include <random>

#include "kitpulse/kernels.hpp"

#define lapack_complex_double std::complex<double>
#define lapack_complex_float std::complex<float>
#include <lapacke.h>

namespace kitpulse {

DenseOperator DenseOperator::identity(int n) {
    DenseOperator m(n);
    for (std::size_t i = 0; i < m.dim; ++i) m.at(i, i) = cplx{1.0, 0.0};
    return m;
}

DenseOperator dense_add(const DenseOperator& x, const DenseOperator& y) {
    if (x.dim != y.dim) throw dimension_error("dense_add: dimension mismatch");
    DenseOperator out = x;
    for (std::size_t k = 0; k < out.a.size(); ++k) out.a[k] += y.a[k];
    return out;
}

DenseOperator dense_sub(const DenseOperator& x, const DenseOperator& y) {
    if (x.dim != y.dim) throw dimension_error("dense_sub: dimension mismatch");
    DenseOperator out = x;
    for (std::size_t k = 0; k < out.a.size(); ++k) out.a[k] -= y.a[k];
    return out;
}

DenseOperator dense_scale(const DenseOperator& x, cplx s) {
    DenseOperator out = x;
    for (auto& v : out.a) v *= s;
    return out;
}

DenseOperator dense_adjoint(const DenseOperator& x) {
    DenseOperator out(x.n_sites);
    for (std::size_t c = 0; c < x.dim; ++c)
        for (std::size_t r = 0; r < x.dim; ++r) out.at(c, r) = std::conj(x.at(r, c));
    return out;
}

cplx dense_trace(const DenseOperator& x) {
    cplx t{0.0, 0.0};
    for (std::size_t i = 0; i < x.dim; ++i) t += x.at(i, i);
    return t;
}

cplx trace_product(const DenseOperator& x, const DenseOperator& y) {
    if (x.dim != y.dim) throw dimension_error("trace_product: dimension mismatch");
    cplx t{0.0, 0.0};
    for (std::size_t c = 0; c < x.dim; ++c)
        for (std::size_t r = 0; r < x.dim; ++r) t += x.at(r, c) * y.at(c, r);
    return t;
}

double max_abs_diff(const DenseOperator& x, const DenseOperator& y) {
    if (x.dim != y.dim) throw dimension_error("max_abs_diff: dimension mismatch");
    double m = 0.0;
    for (std::size_t k = 0; k < x.a.size(); ++k)
        m = std::max(m, std::abs(x.a[k] - y.a[k]));
    return m;
}

double operator_norm(const DenseOperator& m, int iters) {
    const std::size_t n = m.dim;
    std::mt19937_64 rng(12345);
    std::normal_distribution<double> g;
    std::vector<cplx> v(n), w(n);
    for (auto& x : v) x = cplx{g(rng), g(rng)};
    double norm = 0.0;
    for (int it = 0; it < iters; ++it) {
        // w = M v
        for (std::size_t i = 0; i < n; ++i) w[i] = cplx{0.0, 0.0};
        for (std::size_t c = 0; c < n; ++c) {
            const cplx vc = v[c];
            const cplx* col = m.a.data() + c * n;
            for (std::size_t r = 0; r < n; ++r) w[r] += col[r] * vc;
        }
        // v = M^H w
        for (std::size_t c = 0; c < n; ++c) {
            cplx s{0.0, 0.0};
            const cplx* col = m.a.data() + c * n;
            for (std::size_t r = 0; r < n; ++r) s += std::conj(col[r]) * w[r];
            v[c] = s;
        }
        double nv = 0.0;
        for (const auto& x : v) nv += std::norm(x);
        nv = std::sqrt(nv);
        if (nv == 0.0) return 0.0;
        norm = std::sqrt(nv);
        for (auto& x : v) x /= nv;
    }
    return norm;
}

bool is_unitary(const DenseOperator& u, double tol) {
    DenseOperator p = kernels::matmul(dense_adjoint(u), u);
    for (std::size_t i = 0; i < p.dim; ++i) p.at(i, i) -= 1.0;
    return operator_norm(p) <= tol;
}

bool is_hermitian(const DenseOperator& h, double tol) {
    for (std::size_t c = 0; c < h.dim; ++c)
        for (std::size_t r = 0; r <= c; ++r)
            if (std::abs(h.at(r, c) - std::conj(h.at(c, r))) > tol) return false;
    return true;
}

EigenSystem eigh(const DenseOperator& h) {
    EigenSystem es;
    es.v = h;
    es.w.assign(h.dim, 0.0);
    const lapack_int n = static_cast<lapack_int>(h.dim);
    const lapack_int info =
        LAPACKE_zheevd(LAPACK_COL_MAJOR, 'V', 'L', n, es.v.a.data(), n, es.w.data());
    if (info != 0) throw std::runtime_error("zheevd failed: info=" + std::to_string(info));
    return es;
}

std::vector<double> eigvalsh(const DenseOperator& h) {
    DenseOperator tmp = h;
    std::vector<double> w(h.dim, 0.0);
    const lapack_int n = static_cast<lapack_int>(h.dim);
    const lapack_int info =
        LAPACKE_zheevd(LAPACK_COL_MAJOR, 'N', 'L', n, tmp.a.data(), n, w.data());
    if (info != 0) throw std::runtime_error("zheevd failed: info=" + std::to_string(info));
    return w;
}

DenseOperator evolution_from_eigensystem(const EigenSystem& es, double t, double sign) {
    const std::size_t n = es.v.dim;
    // scaled = V diag(exp(i sign w t))
    DenseOperator scaled = es.v;
    for (std::size_t c = 0; c < n; ++c) {
        const cplx ph = std::exp(cplx{0.0, sign * es.w[c] * t});
        cplx* col = scaled.a.data() + c * n;
        for (std::size_t r = 0; r < n; ++r) col[r] *= ph;
    }
    return kernels::matmul(scaled, dense_adjoint(es.v));
}

}  // namespace kitpulse
