#include "wbr/kernels.hpp"

#include <atomic>

#include "wbr/errors.hpp"

namespace wbr::kernels {

namespace {
std::atomic<bool> g_parallel{true};

uint32_t fp_pow(uint64_t b, uint64_t e, uint64_t p) {
    uint64_t r = 1 % p;
    b %= p;
    while (e) {
        if (e & 1) r = r * b % p;
        b = b * b % p;
        e >>= 1;
    }
    return static_cast<uint32_t>(r);
}
}  // namespace

void set_parallel_enabled(bool on) { g_parallel = on; }
bool parallel_enabled() { return g_parallel; }

FpRing::Elem FpRing::inv(Elem a) const {
    if (a == 0) throw DivisionByZero("inverse of 0 in F_" + std::to_string(p));
    return fp_pow(a, p - 2, p);
}

RatRing::Elem RatRing::inv(const Elem& a) const {
    if (a == 0) throw DivisionByZero("inverse of 0 in Q");
    return 1 / a;
}

namespace {

template <class R>
void matmul_impl_serial(const R& ring, const typename R::Elem* a, const typename R::Elem* b,
                        typename R::Elem* c, size_t m, size_t k, size_t n) {
    for (size_t i = 0; i < m; ++i) {
        for (size_t j = 0; j < n; ++j) {
            typename R::Elem acc = ring.zero();
            for (size_t t = 0; t < k; ++t)
                acc = ring.add(acc, ring.mul(a[i * k + t], b[t * n + j]));
            c[i * n + j] = acc;
        }
    }
}

template <class R>
void matmul_impl_omp(const R& ring, const typename R::Elem* a, const typename R::Elem* b,
                     typename R::Elem* c, size_t m, size_t k, size_t n) {
    if (!parallel_enabled() || m * n < 4096) {
        matmul_impl_serial(ring, a, b, c, m, k, n);
        return;
    }
    const long mi = static_cast<long>(m);
#pragma omp parallel for schedule(static)
    for (long i = 0; i < mi; ++i) {
        for (size_t j = 0; j < n; ++j) {
            typename R::Elem acc = ring.zero();
            for (size_t t = 0; t < k; ++t)
                acc = ring.add(acc, ring.mul(a[static_cast<size_t>(i) * k + t], b[t * n + j]));
            c[static_cast<size_t>(i) * n + j] = acc;
        }
    }
}

// Gauss-Jordan. Pivot search is deterministic (first nonzero in column),
// so serial and parallel variants produce identical output.
template <class R>
std::vector<size_t> rref_impl(const R& ring, std::vector<typename R::Elem>& a,
                              size_t rows, size_t cols, bool parallel) {
    std::vector<size_t> pivots;
    size_t prow = 0;
    for (size_t col = 0; col < cols && prow < rows; ++col) {
        size_t sel = rows;
        for (size_t i = prow; i < rows; ++i) {
            if (!ring.is_zero(a[i * cols + col])) {
                sel = i;
                break;
            }
        }
        if (sel == rows) continue;
        if (sel != prow)
            for (size_t j = col; j < cols; ++j)
                std::swap(a[sel * cols + j], a[prow * cols + j]);
        const typename R::Elem pinv = ring.inv(a[prow * cols + col]);
        for (size_t j = col; j < cols; ++j)
            a[prow * cols + j] = ring.mul(a[prow * cols + j], pinv);

        const long nrows = static_cast<long>(rows);
        if (parallel && rows * (cols - col) >= 16384) {
#pragma omp parallel for schedule(static)
            for (long i = 0; i < nrows; ++i) {
                size_t si = static_cast<size_t>(i);
                if (si == prow) continue;
                const typename R::Elem f = a[si * cols + col];
                if (ring.is_zero(f)) continue;
                for (size_t j = col; j < cols; ++j)
                    a[si * cols + j] =
                        ring.sub(a[si * cols + j], ring.mul(f, a[prow * cols + j]));
            }
        } else {
            for (size_t i = 0; i < rows; ++i) {
                if (i == prow) continue;
                const typename R::Elem f = a[i * cols + col];
                if (ring.is_zero(f)) continue;
                for (size_t j = col; j < cols; ++j)
                    a[i * cols + j] =
                        ring.sub(a[i * cols + j], ring.mul(f, a[prow * cols + j]));
            }
        }
        pivots.push_back(col);
        ++prow;
    }
    return pivots;
}

}  // namespace

void matmul_serial(const FpRing& r, const uint32_t* a, const uint32_t* b, uint32_t* c,
                   size_t m, size_t k, size_t n) {
    matmul_impl_serial(r, a, b, c, m, k, n);
}
void matmul(const FpRing& r, const uint32_t* a, const uint32_t* b, uint32_t* c,
            size_t m, size_t k, size_t n) {
    matmul_impl_omp(r, a, b, c, m, k, n);
}
void matmul_serial(const RatRing& r, const mpq_class* a, const mpq_class* b, mpq_class* c,
                   size_t m, size_t k, size_t n) {
    matmul_impl_serial(r, a, b, c, m, k, n);
}
void matmul(const RatRing& r, const mpq_class* a, const mpq_class* b, mpq_class* c,
            size_t m, size_t k, size_t n) {
    matmul_impl_omp(r, a, b, c, m, k, n);
}

std::vector<size_t> rref_serial(const FpRing& r, std::vector<uint32_t>& a,
                                size_t rows, size_t cols) {
    return rref_impl(r, a, rows, cols, false);
}
std::vector<size_t> rref(const FpRing& r, std::vector<uint32_t>& a, size_t rows, size_t cols) {
    return rref_impl(r, a, rows, cols, parallel_enabled());
}
std::vector<size_t> rref_serial(const RatRing& r, std::vector<mpq_class>& a,
                                size_t rows, size_t cols) {
    return rref_impl(r, a, rows, cols, false);
}
std::vector<size_t> rref(const RatRing& r, std::vector<mpq_class>& a, size_t rows, size_t cols) {
    return rref_impl(r, a, rows, cols, parallel_enabled());
}

}  // namespace wbr::kernels
