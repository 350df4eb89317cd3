#include "wbr/matrix.hpp"

#include <algorithm>
#include <sstream>

#include "wbr/errors.hpp"

namespace wbr {

Matrix::Matrix(FieldSpec f, size_t rows, size_t cols) : f_(f), r_(rows), c_(cols) {
    if (f_.is_rationals()) q_.assign(r_ * c_, mpq_class(0));
    else fp_.assign(r_ * c_, 0);
}

Matrix Matrix::identity(FieldSpec f, size_t n) {
    Matrix m(f, n, n);
    for (size_t i = 0; i < n; ++i) m.set_int(i, i, 1);
    return m;
}

Matrix Matrix::from_rows(FieldSpec f, const std::vector<std::vector<long long>>& rows) {
    size_t nc = rows.empty() ? 0 : rows[0].size();
    Matrix m(f, rows.size(), nc);
    for (size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != nc) throw SizeMismatch("ragged row list");
        for (size_t j = 0; j < nc; ++j) m.set_int(i, j, rows[i][j]);
    }
    return m;
}

Scalar Matrix::get(size_t i, size_t j) const {
    if (i >= r_ || j >= c_) throw IndexOutOfRange("matrix get out of range");
    if (f_.is_rationals()) return Scalar::of_mpq(f_, q_[i * c_ + j]);
    Scalar s = Scalar::zero(f_);
    return s + Scalar::of(f_, fp_[i * c_ + j]);
}

void Matrix::set(size_t i, size_t j, const Scalar& v) {
    if (i >= r_ || j >= c_) throw IndexOutOfRange("matrix set out of range");
    if (!(v.field() == f_)) throw FieldMismatch("scalar field differs from matrix field");
    if (f_.is_rationals()) q_[i * c_ + j] = v.rational();
    else fp_[i * c_ + j] = v.residue();
}

void Matrix::set_int(size_t i, size_t j, long long v) { set(i, j, Scalar::of(f_, v)); }

void Matrix::check_same_field(const Matrix& o) const {
    if (!(f_ == o.f_)) throw FieldMismatch("matrix fields differ");
}

Matrix Matrix::operator+(const Matrix& o) const {
    check_same_field(o);
    if (r_ != o.r_ || c_ != o.c_) throw SizeMismatch("matrix add size mismatch");
    Matrix m = *this;
    if (f_.is_rationals())
        for (size_t i = 0; i < q_.size(); ++i) m.q_[i] += o.q_[i];
    else
        for (size_t i = 0; i < fp_.size(); ++i) m.fp_[i] = (fp_[i] + o.fp_[i]) % f_.characteristic;
    return m;
}

Matrix Matrix::operator-(const Matrix& o) const {
    check_same_field(o);
    if (r_ != o.r_ || c_ != o.c_) throw SizeMismatch("matrix sub size mismatch");
    Matrix m = *this;
    if (f_.is_rationals())
        for (size_t i = 0; i < q_.size(); ++i) m.q_[i] -= o.q_[i];
    else
        for (size_t i = 0; i < fp_.size(); ++i)
            m.fp_[i] = (fp_[i] + f_.characteristic - o.fp_[i]) % f_.characteristic;
    return m;
}

Matrix Matrix::operator*(const Matrix& o) const {
    check_same_field(o);
    if (c_ != o.r_) throw SizeMismatch("matmul inner dimension mismatch");
    Matrix m(f_, r_, o.c_);
    if (f_.is_rationals())
        kernels::matmul(kernels::RatRing{}, q_.data(), o.q_.data(), m.q_.data(), r_, c_, o.c_);
    else
        kernels::matmul(kernels::FpRing{f_.characteristic}, fp_.data(), o.fp_.data(),
                        m.fp_.data(), r_, c_, o.c_);
    return m;
}

Matrix Matrix::scaled(const Scalar& c) const {
    Matrix m = *this;
    if (f_.is_rationals())
        for (auto& x : m.q_) x *= c.rational();
    else {
        uint64_t cc = c.residue();
        for (auto& x : m.fp_) x = static_cast<uint32_t>(cc * x % f_.characteristic);
    }
    return m;
}

Matrix Matrix::operator-() const { return scaled(-Scalar::one(f_)); }

Matrix Matrix::transpose() const {
    Matrix m(f_, c_, r_);
    for (size_t i = 0; i < r_; ++i)
        for (size_t j = 0; j < c_; ++j) {
            if (f_.is_rationals()) m.q_[j * r_ + i] = q_[i * c_ + j];
            else m.fp_[j * r_ + i] = fp_[i * c_ + j];
        }
    return m;
}

Matrix Matrix::pow(size_t e) const {
    if (r_ != c_) throw SizeMismatch("pow requires a square matrix");
    Matrix r = identity(f_, r_), b = *this;
    while (e) {
        if (e & 1) r = r * b;
        b = b * b;
        e >>= 1;
    }
    return r;
}

bool Matrix::operator==(const Matrix& o) const {
    if (!(f_ == o.f_) || r_ != o.r_ || c_ != o.c_) return false;
    return f_.is_rationals() ? q_ == o.q_ : fp_ == o.fp_;
}

bool Matrix::is_zero() const {
    if (f_.is_rationals()) return std::all_of(q_.begin(), q_.end(), [](const mpq_class& x) { return x == 0; });
    return std::all_of(fp_.begin(), fp_.end(), [](uint32_t x) { return x == 0; });
}

Matrix Matrix::rref(std::vector<size_t>* pivots) const {
    Matrix m = *this;
    std::vector<size_t> piv;
    if (f_.is_rationals()) piv = kernels::rref(kernels::RatRing{}, m.q_, r_, c_);
    else piv = kernels::rref(kernels::FpRing{f_.characteristic}, m.fp_, r_, c_);
    if (pivots) *pivots = std::move(piv);
    return m;
}

size_t Matrix::rank() const {
    std::vector<size_t> piv;
    rref(&piv);
    return piv.size();
}

Matrix Matrix::kernel() const {
    std::vector<size_t> piv;
    Matrix r = rref(&piv);
    std::vector<bool> is_piv(c_, false);
    for (size_t p : piv) is_piv[p] = true;
    std::vector<size_t> free_cols;
    for (size_t j = 0; j < c_; ++j)
        if (!is_piv[j]) free_cols.push_back(j);
    Matrix k(f_, free_cols.size(), c_);
    for (size_t fi = 0; fi < free_cols.size(); ++fi) {
        size_t fc = free_cols[fi];
        k.set_int(fi, fc, 1);
        for (size_t pi = 0; pi < piv.size(); ++pi)
            k.set(fi, piv[pi], -r.get(pi, fc));
    }
    return k;
}

Matrix Matrix::row_space() const {
    std::vector<size_t> piv;
    Matrix r = rref(&piv);
    return r.submatrix(0, 0, piv.size(), c_);
}

std::optional<Matrix> Matrix::solve_rowspan(const Matrix& u) const {
    check_same_field(u);
    if (c_ != u.cols()) throw SizeMismatch("solve_rowspan column mismatch");
    // C * U = V  <=>  U^T C^T = V^T; eliminate on [U^T | V^T].
    Matrix ut = u.transpose();
    Matrix aug = ut.hstack(transpose());
    std::vector<size_t> piv;
    Matrix red = aug.rref(&piv);
    size_t k = u.rows();
    for (size_t p : piv)
        if (p >= k) return std::nullopt;  // inconsistent: some row outside span
    Matrix c(f_, r_, k);
    for (size_t pi = 0; pi < piv.size(); ++pi)
        for (size_t j = 0; j < r_; ++j) c.set(j, piv[pi], red.get(pi, k + j));
    return c;
}

bool Matrix::invertible() const { return r_ == c_ && rank() == r_; }

Matrix Matrix::inverse() const {
    if (r_ != c_) throw SizeMismatch("inverse requires a square matrix");
    Matrix aug = hstack(identity(f_, r_));
    std::vector<size_t> piv;
    Matrix red = aug.rref(&piv);
    if (piv.size() != r_ || piv.back() != r_ - 1)
        throw SizeMismatch("matrix is singular");
    return red.submatrix(0, r_, r_, r_);
}

Matrix Matrix::hstack(const Matrix& o) const {
    check_same_field(o);
    if (r_ != o.r_) throw SizeMismatch("hstack row mismatch");
    Matrix m(f_, r_, c_ + o.c_);
    for (size_t i = 0; i < r_; ++i) {
        for (size_t j = 0; j < c_; ++j) m.set(i, j, get(i, j));
        for (size_t j = 0; j < o.c_; ++j) m.set(i, c_ + j, o.get(i, j));
    }
    return m;
}

Matrix Matrix::vstack(const Matrix& o) const {
    check_same_field(o);
    if (c_ != o.c_ && r_ != 0 && o.r_ != 0) throw SizeMismatch("vstack column mismatch");
    if (r_ == 0) return o;
    if (o.r_ == 0) return *this;
    Matrix m(f_, r_ + o.r_, c_);
    for (size_t i = 0; i < r_; ++i)
        for (size_t j = 0; j < c_; ++j) m.set(i, j, get(i, j));
    for (size_t i = 0; i < o.r_; ++i)
        for (size_t j = 0; j < c_; ++j) m.set(r_ + i, j, o.get(i, j));
    return m;
}

Matrix Matrix::submatrix(size_t i0, size_t j0, size_t nr, size_t nc) const {
    if (i0 + nr > r_ || j0 + nc > c_) throw IndexOutOfRange("submatrix out of range");
    Matrix m(f_, nr, nc);
    for (size_t i = 0; i < nr; ++i)
        for (size_t j = 0; j < nc; ++j) m.set(i, j, get(i0 + i, j0 + j));
    return m;
}

Matrix Matrix::stack(FieldSpec f, size_t cols, const std::vector<Matrix>& rows) {
    size_t total = 0;
    for (const auto& m : rows) total += m.rows();
    Matrix out(f, total, cols);
    size_t at = 0;
    for (const auto& m : rows) {
        if (m.cols() != cols) throw SizeMismatch("stack column mismatch");
        for (size_t i = 0; i < m.rows(); ++i, ++at)
            for (size_t j = 0; j < cols; ++j) out.set(at, j, m.get(i, j));
    }
    return out;
}

Matrix Matrix::kron(const Matrix& o) const {
    check_same_field(o);
    Matrix m(f_, r_ * o.r_, c_ * o.c_);
    for (size_t i = 0; i < r_; ++i)
        for (size_t j = 0; j < c_; ++j) {
            Scalar a = get(i, j);
            if (a.is_zero()) continue;
            for (size_t k = 0; k < o.r_; ++k)
                for (size_t l = 0; l < o.c_; ++l) {
                    Scalar b = o.get(k, l);
                    if (!b.is_zero()) m.set(i * o.r_ + k, j * o.c_ + l, a * b);
                }
        }
    return m;
}

uint64_t Matrix::hash() const {
    std::string s = to_string();
    uint64_t h = 1469598103934665603ULL;
    for (unsigned char ch : s) {
        h ^= ch;
        h *= 1099511628211ULL;
    }
    return h;
}

std::string Matrix::to_string() const {
    std::ostringstream os;
    os << f_.to_string() << ':' << r_ << 'x' << c_ << '[';
    for (size_t i = 0; i < r_; ++i)
        for (size_t j = 0; j < c_; ++j) {
            if (i || j) os << ',';
            os << get(i, j).to_string();
        }
    os << ']';
    return os.str();
}

}  // namespace wbr
