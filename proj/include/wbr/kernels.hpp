#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include <gmpxx.h>

namespace wbr::kernels {

// Row-major dense kernels over F_p (uint32 residues) and Q (mpq_class).
// Each hot kernel ships in two variants: *_serial is the reference
// implementation used by tests and small inputs, the unsuffixed one
// parallelizes the data-parallel loop with OpenMP. bench/ compares them.

struct FpRing {
    uint32_t p;
    using Elem = uint32_t;
    Elem zero() const { return 0; }
    Elem one() const { return 1 % p; }
    Elem add(Elem a, Elem b) const { return (a + b) % p; }
    Elem sub(Elem a, Elem b) const { return (a + p - b) % p; }
    Elem mul(Elem a, Elem b) const {
        return static_cast<Elem>(static_cast<uint64_t>(a) * b % p);
    }
    Elem neg(Elem a) const { return a == 0 ? 0 : p - a; }
    Elem inv(Elem a) const;
    bool is_zero(Elem a) const { return a == 0; }
};

struct RatRing {
    using Elem = mpq_class;
    Elem zero() const { return Elem(0); }
    Elem one() const { return Elem(1); }
    Elem add(const Elem& a, const Elem& b) const { return a + b; }
    Elem sub(const Elem& a, const Elem& b) const { return a - b; }
    Elem mul(const Elem& a, const Elem& b) const { return a * b; }
    Elem neg(const Elem& a) const { return -a; }
    Elem inv(const Elem& a) const;
    bool is_zero(const Elem& a) const { return a == 0; }
};

// c = a (m x k) * b (k x n)
void matmul_serial(const FpRing&, const uint32_t* a, const uint32_t* b, uint32_t* c,
                   size_t m, size_t k, size_t n);
void matmul(const FpRing&, const uint32_t* a, const uint32_t* b, uint32_t* c,
            size_t m, size_t k, size_t n);
void matmul_serial(const RatRing&, const mpq_class* a, const mpq_class* b, mpq_class* c,
                   size_t m, size_t k, size_t n);
void matmul(const RatRing&, const mpq_class* a, const mpq_class* b, mpq_class* c,
            size_t m, size_t k, size_t n);

// In-place reduced row echelon form; returns pivot column list.
std::vector<size_t> rref_serial(const FpRing&, std::vector<uint32_t>& a,
                                size_t rows, size_t cols);
std::vector<size_t> rref(const FpRing&, std::vector<uint32_t>& a, size_t rows, size_t cols);
std::vector<size_t> rref_serial(const RatRing&, std::vector<mpq_class>& a,
                                size_t rows, size_t cols);
std::vector<size_t> rref(const RatRing&, std::vector<mpq_class>& a, size_t rows, size_t cols);

// Global switch consulted by the parallel entry points; tests flip it to
// force the serial path through the same API.
void set_parallel_enabled(bool on);
bool parallel_enabled();

}  // namespace wbr::kernels
