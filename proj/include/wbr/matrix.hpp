#pragma once

#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

#include "wbr/kernels.hpp"
#include "wbr/scalar.hpp"

namespace wbr {

// Dense exact matrix over a FieldSpec. Row-major; module vectors are rows
// and right actions multiply on the right: v -> v * A.
class Matrix {
public:
    Matrix() = default;
    Matrix(FieldSpec f, size_t rows, size_t cols);
    static Matrix identity(FieldSpec f, size_t n);
    static Matrix from_rows(FieldSpec f,
                            const std::vector<std::vector<long long>>& rows);

    FieldSpec field() const { return f_; }
    size_t rows() const { return r_; }
    size_t cols() const { return c_; }

    Scalar get(size_t i, size_t j) const;
    void set(size_t i, size_t j, const Scalar& v);
    void set_int(size_t i, size_t j, long long v);

    Matrix operator+(const Matrix& o) const;
    Matrix operator-(const Matrix& o) const;
    Matrix operator*(const Matrix& o) const;  // matmul (OpenMP kernel)
    Matrix scaled(const Scalar& c) const;
    Matrix operator-() const;
    Matrix transpose() const;
    Matrix pow(size_t e) const;

    bool operator==(const Matrix& o) const;
    bool operator!=(const Matrix& o) const { return !(*this == o); }
    bool is_zero() const;

    // Reduced row echelon form (copy) and its pivot columns.
    Matrix rref(std::vector<size_t>* pivots = nullptr) const;
    size_t rank() const;
    // Rows form a basis of {w : (*this) * w^T = 0} (right kernel).
    Matrix kernel() const;
    // Rows form a basis of {v : v * (*this) = 0} (left kernel / row relations).
    Matrix null_rows() const { return transpose().kernel(); }
    // RREF rows with zero rows dropped: canonical basis of the row space.
    Matrix row_space() const;
    // Solve C * U = *this for C, or nullopt if some row is outside span(U).
    std::optional<Matrix> solve_rowspan(const Matrix& u) const;
    bool invertible() const;
    Matrix inverse() const;

    Matrix hstack(const Matrix& o) const;
    Matrix vstack(const Matrix& o) const;
    Matrix submatrix(size_t i0, size_t j0, size_t nr, size_t nc) const;
    Matrix row(size_t i) const { return submatrix(i, 0, 1, c_); }
    static Matrix stack(FieldSpec f, size_t cols, const std::vector<Matrix>& rows);

    // Kronecker product (used by outer tensor modules).
    Matrix kron(const Matrix& o) const;

    uint64_t hash() const;
    std::string to_string() const;

    // Raw row-major storage, used by performance-sensitive internals.
    const std::vector<uint32_t>& fp_storage() const { return fp_; }
    const std::vector<mpq_class>& q_storage() const { return q_; }
    std::vector<uint32_t>& fp_storage_mut() { return fp_; }
    std::vector<mpq_class>& q_storage_mut() { return q_; }

private:
    FieldSpec f_;
    size_t r_ = 0, c_ = 0;
    std::vector<uint32_t> fp_;
    std::vector<mpq_class> q_;

    void check_same_field(const Matrix& o) const;
};

}  // namespace wbr
