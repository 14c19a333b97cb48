#include "kitpulse/kernels.hpp"

#include <algorithm>
#include <bit>

namespace kitpulse::kernels {

CompiledOp compile(const OperatorSum& op, int dense_cap) {
    if (op.n_sites > dense_cap)
        throw resource_error("dense cap exceeded: " + std::to_string(op.n_sites) +
                             " sites > cap " + std::to_string(dense_cap));
    CompiledOp out;
    out.n_sites = op.n_sites;
    out.dim = std::size_t(1) << op.n_sites;
    out.terms.reserve(op.terms.size());
    static constexpr cplx kIPow[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    for (const auto& t : op.terms) {
        CompiledTerm ct{0, 0, t.coeff};
        int n_y = 0;
        for (const auto& [site, axis] : t.axes) {
            const std::uint64_t bit = std::uint64_t(1) << site;
            switch (axis) {
                case Axis::X: ct.flip_mask |= bit; break;
                case Axis::Y: ct.flip_mask |= bit; ct.phase_mask |= bit; ++n_y; break;
                case Axis::Z: ct.phase_mask |= bit; break;
            }
        }
        ct.base *= kIPow[n_y % 4];
        out.terms.push_back(ct);
    }
    return out;
}

namespace {

inline void apply_column(const CompiledOp& op, const cplx* in, cplx* out) {
    const std::size_t dim = op.dim;
    for (std::size_t j = 0; j < dim; ++j) out[j] = cplx{0.0, 0.0};
    for (const auto& t : op.terms) {
        const std::uint64_t flip = t.flip_mask, pm = t.phase_mask;
        const cplx base = t.base;
        for (std::size_t j = 0; j < dim; ++j) {
            const cplx amp = (std::popcount(j & pm) & 1) ? -base : base;
            out[j ^ flip] += amp * in[j];
        }
    }
}

}  // namespace

void apply_serial(const CompiledOp& op, const cplx* in, cplx* out, std::size_t cols) {
    for (std::size_t c = 0; c < cols; ++c)
        apply_column(op, in + c * op.dim, out + c * op.dim);
}

void apply_omp(const CompiledOp& op, const cplx* in, cplx* out, std::size_t cols) {
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t c = 0; c < static_cast<std::ptrdiff_t>(cols); ++c)
        apply_column(op, in + c * op.dim, out + c * op.dim);
}

void apply(const CompiledOp& op, const cplx* in, cplx* out, std::size_t cols) {
    apply_omp(op, in, out, cols);
}

void matmul_serial(const cplx* a, const cplx* b, cplx* c, std::size_t n) {
    // saxpy order: C[,j] += B[k,j] * A[,k]; all accesses contiguous.
    std::fill(c, c + n * n, cplx{0.0, 0.0});
    for (std::size_t j = 0; j < n; ++j) {
        cplx* cj = c + j * n;
        for (std::size_t k = 0; k < n; ++k) {
            const cplx bkj = b[j * n + k];
            if (bkj == cplx{0.0, 0.0}) continue;
            const cplx* ak = a + k * n;
            for (std::size_t i = 0; i < n; ++i) cj[i] += bkj * ak[i];
        }
    }
}

void matmul_omp(const cplx* a, const cplx* b, cplx* c, std::size_t n) {
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t j = 0; j < static_cast<std::ptrdiff_t>(n); ++j) {
        cplx* cj = c + j * n;
        for (std::size_t i = 0; i < n; ++i) cj[i] = cplx{0.0, 0.0};
        for (std::size_t k = 0; k < n; ++k) {
            const cplx bkj = b[std::size_t(j) * n + k];
            if (bkj == cplx{0.0, 0.0}) continue;
            const cplx* ak = a + k * n;
            for (std::size_t i = 0; i < n; ++i) cj[i] += bkj * ak[i];
        }
    }
}

void matmul(const cplx* a, const cplx* b, cplx* c, std::size_t n) {
    matmul_omp(a, b, c, n);
}

DenseOperator matmul(const DenseOperator& a, const DenseOperator& b) {
    if (a.dim != b.dim) throw dimension_error("matmul: dimension mismatch");
    DenseOperator c(a.n_sites);
    matmul(a.a.data(), b.a.data(), c.a.data(), a.dim);
    return c;
}

namespace {

// Column j of the dense matrix receives one entry per term.
inline void dense_column(const CompiledOp& op, std::size_t j, cplx* col) {
    for (const auto& t : op.terms) {
        const cplx amp = (std::popcount(j & t.phase_mask) & 1) ? -t.base : t.base;
        col[j ^ t.flip_mask] += amp;
    }
}

}  // namespace

DenseOperator to_dense_serial(const OperatorSum& op, int dense_cap) {
    const CompiledOp cop = compile(op, dense_cap);
    DenseOperator m(op.n_sites);
    for (std::size_t j = 0; j < cop.dim; ++j) dense_column(cop, j, m.a.data() + j * cop.dim);
    return m;
}

DenseOperator to_dense_omp(const OperatorSum& op, int dense_cap) {
    const CompiledOp cop = compile(op, dense_cap);
    DenseOperator m(op.n_sites);
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t j = 0; j < static_cast<std::ptrdiff_t>(cop.dim); ++j)
        dense_column(cop, std::size_t(j), m.a.data() + std::size_t(j) * cop.dim);
    return m;
}

DenseOperator to_dense(const OperatorSum& op, int dense_cap) {
    return to_dense_omp(op, dense_cap);
}

}  // namespace kitpulse::kernels
