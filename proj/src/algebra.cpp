#include "wbr/algebra.hpp"

#include <algorithm>
#include <mutex>
#include <sstream>

namespace wbr {

AlgebraElement::AlgebraElement(std::shared_ptr<const PresentedAlgebra> alg)
    : alg_(std::move(alg)) {}

AlgebraElement AlgebraElement::basis(std::shared_ptr<const PresentedAlgebra> alg, size_t index) {
    AlgebraElement e(alg);
    e.add_term(index, Scalar::one(alg->field()));
    return e;
}

void AlgebraElement::add_term(size_t index, const Scalar& c) {
    if (index >= alg_->dim()) throw IndexOutOfRange("basis index out of range");
    auto it = terms_.find(index);
    if (it == terms_.end()) {
        if (!c.is_zero()) terms_.emplace(index, c);
        return;
    }
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
}

namespace {
void check_algebras(const AlgebraElement& a, const AlgebraElement& b) {
    if (!a.algebra() || !b.algebra() || a.algebra()->key() != b.algebra()->key())
        throw AlgebraMismatch("elements of different algebras");
}
}  // namespace

AlgebraElement AlgebraElement::operator+(const AlgebraElement& o) const {
    check_algebras(*this, o);
    AlgebraElement r = *this;
    for (const auto& [i, c] : o.terms_) r.add_term(i, c);
    return r;
}

AlgebraElement AlgebraElement::operator-(const AlgebraElement& o) const {
    check_algebras(*this, o);
    AlgebraElement r = *this;
    for (const auto& [i, c] : o.terms_) r.add_term(i, -c);
    return r;
}

AlgebraElement AlgebraElement::scaled(const Scalar& c) const {
    AlgebraElement r(alg_);
    if (c.is_zero()) return r;
    for (const auto& [i, v] : terms_) r.terms_.emplace(i, v * c);
    return r;
}

AlgebraElement AlgebraElement::operator*(const AlgebraElement& o) const {
    check_algebras(*this, o);
    AlgebraElement r(alg_);
    for (const auto& [i, ci] : terms_)
        for (const auto& [j, cj] : o.terms_) {
            const AlgebraElement& p = alg_->multiply_basis(i, j);
            Scalar c = ci * cj;
            for (const auto& [k, ck] : p.terms_) r.add_term(k, ck * c);
        }
    return r;
}

AlgebraElement AlgebraElement::involution() const {
    AlgebraElement r(alg_);
    for (const auto& [i, c] : terms_) r.add_term(alg_->involution_basis(i), c);
    return r;
}

bool AlgebraElement::operator==(const AlgebraElement& o) const {
    if (!alg_ || !o.alg_ || alg_->key() != o.alg_->key()) return false;
    return terms_ == o.terms_;
}

std::string AlgebraElement::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [i, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << c.to_string() << " * " << alg_->basis_name(i);
    }
    return os.str();
}

AlgebraElement PresentedAlgebra::generator(size_t gi) const {
    if (gi >= gen_indices_.size()) throw IndexOutOfRange("generator index out of range");
    return AlgebraElement::basis(shared_from_this(), gen_indices_[gi]);
}

AlgebraElement PresentedAlgebra::one() const {
    return AlgebraElement::basis(shared_from_this(), one_index_);
}

AlgebraElement PresentedAlgebra::basis_element(size_t i) const {
    return AlgebraElement::basis(shared_from_this(), i);
}

const AlgebraElement& PresentedAlgebra::multiply_basis(size_t i, size_t j) const {
    uint64_t k = (static_cast<uint64_t>(i) << 32) | static_cast<uint64_t>(j);
    {
        std::shared_lock lock(memo_mutex_);
        auto it = memo_.find(k);
        if (it != memo_.end()) return it->second;
    }
    AlgebraElement p = compute_product(i, j);
    std::unique_lock lock(memo_mutex_);
    return memo_.emplace(k, std::move(p)).first->second;
}

Matrix PresentedAlgebra::right_multiplication_matrix(const AlgebraElement& x) const {
    Matrix m(field_, dim_, dim_);
    for (size_t i = 0; i < dim_; ++i)
        for (const auto& [j, cj] : x.terms()) {
            const AlgebraElement& p = multiply_basis(i, j);
            for (const auto& [k, ck] : p.terms()) m.set(i, k, m.get(i, k) + ck * cj);
        }
    return m;
}

Matrix PresentedAlgebra::left_multiplication_matrix(const AlgebraElement& x) const {
    Matrix m(field_, dim_, dim_);
    for (size_t i = 0; i < dim_; ++i)
        for (const auto& [j, cj] : x.terms()) {
            const AlgebraElement& p = multiply_basis(j, i);
            for (const auto& [k, ck] : p.terms()) m.set(i, k, m.get(i, k) + ck * cj);
        }
    return m;
}

WalledBrauerAlgebra::WalledBrauerAlgebra(int r, int t, const Scalar& delta)
    : PresentedAlgebra(delta.field(), 0), r_(r), t_(t), delta_(delta) {
    basis_ = enumerate_diagrams(r, t);  // sorted: edge count, then lex
    dim_ = basis_.size();
    for (size_t i = 0; i < basis_.size(); ++i) index_[basis_[i].edges()] = i;
    int s = std::min(r, t);
    ideal_start_.assign(s + 2, basis_.size());
    for (size_t i = basis_.size(); i-- > 0;) {
        int h = basis_[i].horizontal_edges();
        for (int l = 0; l <= h; ++l) ideal_start_[l] = i;
    }
    one_index_ = index_.at(WalledDiagram::identity(r, t).edges());
    for (int i = 1; i <= r + t - 1; ++i) {
        if (i == r) continue;
        gen_names_.push_back("s" + std::to_string(i));
        gen_indices_.push_back(index_.at(generator_s(r, t, i).edges()));
    }
    gen_names_.push_back("e");
    gen_indices_.push_back(index_.at(generator_e(r, t, r, r + 1).edges()));
}

std::shared_ptr<WalledBrauerAlgebra> WalledBrauerAlgebra::create(int r, int t,
                                                                 const Scalar& delta) {
    return std::shared_ptr<WalledBrauerAlgebra>(new WalledBrauerAlgebra(r, t, delta));
}

std::string WalledBrauerAlgebra::key() const {
    return "B[" + std::to_string(r_) + "," + std::to_string(t_) + ";" +
           field_.to_string() + ";d=" + delta_.to_string() + "]";
}

std::string WalledBrauerAlgebra::basis_name(size_t i) const { return basis_[i].to_string(); }

size_t WalledBrauerAlgebra::involution_basis(size_t i) const {
    return index_.at(basis_[i].flip().edges());
}

size_t WalledBrauerAlgebra::index_of(const WalledDiagram& d) const {
    auto it = index_.find(d.edges());
    if (it == index_.end()) throw ShapeMismatch("diagram not in this algebra");
    return it->second;
}

AlgebraElement WalledBrauerAlgebra::element_of(const WalledDiagram& d) const {
    return AlgebraElement::basis(shared_from_this(), index_of(d));
}

size_t WalledBrauerAlgebra::ideal_start(int l) const {
    if (l < 0 || l > s() + 1) throw LayerOutOfRange("ideal layer out of range");
    return ideal_start_[l];
}

AlgebraElement WalledBrauerAlgebra::idempotent(int l) const {
    IdempotentData data = idempotent_data(r_, t_, l, delta_.is_zero());
    AlgebraElement e = element_of(data.diagram);
    if (data.delta_exponent != 0) e = e.scaled(delta_.pow(data.delta_exponent));
    return e;
}

AlgebraElement WalledBrauerAlgebra::embedded(int l, const ProductPermutation& g) const {
    return element_of(embedded_permutation(r_, t_, l, g));
}

AlgebraElement WalledBrauerAlgebra::compute_product(size_t i, size_t j) const {
    auto [loops, z] = multiply_diagrams(basis_[i], basis_[j]);
    AlgebraElement e(shared_from_this());
    Scalar c = delta_.pow(loops);
    if (!c.is_zero()) e.add_term(index_of(z), c);
    return e;
}

ProductGroupAlgebra::ProductGroupAlgebra(int a, int b, FieldSpec f)
    : PresentedAlgebra(f, 0), a_(a), b_(b) {
    basis_ = enumerate_product_group(a, b);
    dim_ = basis_.size();
    for (size_t i = 0; i < basis_.size(); ++i) index_[basis_[i]] = i;
    ProductPermutation id{Permutation::identity(a), Permutation::identity(b)};
    one_index_ = index_.at(id);
    for (int i = 1; i < a; ++i) {
        gen_names_.push_back("sL" + std::to_string(i));
        gen_indices_.push_back(
            index_.at({Permutation::transposition(a, i, i + 1), Permutation::identity(b)}));
    }
    for (int i = 1; i < b; ++i) {
        gen_names_.push_back("sR" + std::to_string(i));
        gen_indices_.push_back(
            index_.at({Permutation::identity(a), Permutation::transposition(b, i, i + 1)}));
    }
}

std::shared_ptr<ProductGroupAlgebra> ProductGroupAlgebra::create(int a, int b, FieldSpec f) {
    return std::shared_ptr<ProductGroupAlgebra>(new ProductGroupAlgebra(a, b, f));
}

std::string ProductGroupAlgebra::key() const {
    return "SxS[" + std::to_string(a_) + "," + std::to_string(b_) + ";" + field_.to_string() + "]";
}

std::string ProductGroupAlgebra::basis_name(size_t i) const {
    return "(" + basis_[i].left.to_string() + "," + basis_[i].right.to_string() + ")";
}

size_t ProductGroupAlgebra::involution_basis(size_t i) const {
    return index_.at(basis_[i].inverse());
}

size_t ProductGroupAlgebra::index_of(const ProductPermutation& g) const {
    auto it = index_.find(g);
    if (it == index_.end()) throw DegreeMismatch("permutation not in this group algebra");
    return it->second;
}

AlgebraElement ProductGroupAlgebra::element_of(const ProductPermutation& g) const {
    return AlgebraElement::basis(shared_from_this(), index_of(g));
}

AlgebraElement ProductGroupAlgebra::compute_product(size_t i, size_t j) const {
    AlgebraElement e(shared_from_this());
    e.add_term(index_of(basis_[i].compose(basis_[j])), Scalar::one(field_));
    return e;
}

}  // namespace wbr
