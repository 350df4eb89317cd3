#include "wbr/modules.hpp"

#include <algorithm>
#include <functional>
#include <map>

namespace wbr {

void ModuleRep::check_compatible(const ModuleRep& o) const {
    if (algebra_key != o.algebra_key || gen_names != o.gen_names || !(field == o.field))
        throw AlgebraMismatch("modules over different algebras: " + algebra_key + " vs " +
                              o.algebra_key);
}

Matrix ModuleRep::action_word(const std::vector<size_t>& word) const {
    Matrix m = Matrix::identity(field, dim);
    for (size_t gi : word) {
        if (gi >= actions.size()) throw IndexOutOfRange("generator index out of range");
        m = m * actions[gi];
    }
    return m;
}

Matrix spin(const ModuleRep& m, const Matrix& seeds) {
    Matrix basis = seeds.row_space();
    while (true) {
        std::vector<Matrix> images{basis};
        for (const auto& a : m.actions) images.push_back(basis * a);
        Matrix next = Matrix::stack(m.field, m.dim, images).row_space();
        if (next.rows() == basis.rows()) return next;
        basis = next;
    }
}

SubmoduleWitness submodule(const ModuleRep& m, const Matrix& u) {
    Matrix basis = u.row_space();
    SubmoduleWitness w;
    w.basis = basis;
    w.rep.algebra_key = m.algebra_key;
    w.rep.gen_names = m.gen_names;
    w.rep.field = m.field;
    w.rep.dim = basis.rows();
    for (const auto& a : m.actions) {
        auto coords = (basis * a).solve_rowspan(basis);
        if (!coords) throw NotInvariant("row space is not closed under the action");
        w.rep.actions.push_back(*coords);
    }
    return w;
}

SubmoduleWitness submodule_generated(const ModuleRep& m, const Matrix& seeds) {
    return submodule(m, spin(m, seeds));
}

ModuleRep quotient(const ModuleRep& m, const Matrix& w) {
    std::vector<size_t> piv;
    Matrix wr = w.rref(&piv);
    wr = wr.submatrix(0, 0, piv.size(), m.dim);
    std::vector<bool> is_piv(m.dim, false);
    for (size_t p : piv) is_piv[p] = true;
    std::vector<size_t> comp;
    for (size_t j = 0; j < m.dim; ++j)
        if (!is_piv[j]) comp.push_back(j);

    // reduce rows mod W, then read coordinates at complement columns
    auto project = [&](const Matrix& rows) {
        Matrix red = rows;
        if (piv.size() > 0) {
            Matrix coeff(m.field, rows.rows(), piv.size());
            for (size_t i = 0; i < rows.rows(); ++i)
                for (size_t k = 0; k < piv.size(); ++k) coeff.set(i, k, rows.get(i, piv[k]));
            red = rows - coeff * wr;
        }
        Matrix out(m.field, rows.rows(), comp.size());
        for (size_t i = 0; i < rows.rows(); ++i)
            for (size_t k = 0; k < comp.size(); ++k) out.set(i, k, red.get(i, comp[k]));
        return out;
    };

    ModuleRep q;
    q.algebra_key = m.algebra_key;
    q.gen_names = m.gen_names;
    q.field = m.field;
    q.dim = comp.size();
    Matrix lift(m.field, comp.size(), m.dim);
    for (size_t k = 0; k < comp.size(); ++k) lift.set_int(k, comp[k], 1);
    for (const auto& a : m.actions) {
        // invariance check: W * a must stay inside W
        if (piv.size() > 0) {
            Matrix img = project(wr * a);
            if (!img.is_zero()) throw NotInvariant("quotient by a non-invariant subspace");
        }
        q.actions.push_back(project(lift * a));
    }
    return q;
}

ModuleRep direct_sum(const ModuleRep& a, const ModuleRep& b) {
    a.check_compatible(b);
    ModuleRep s;
    s.algebra_key = a.algebra_key;
    s.gen_names = a.gen_names;
    s.field = a.field;
    s.dim = a.dim + b.dim;
    for (size_t g = 0; g < a.actions.size(); ++g) {
        Matrix m(a.field, s.dim, s.dim);
        for (size_t i = 0; i < a.dim; ++i)
            for (size_t j = 0; j < a.dim; ++j) m.set(i, j, a.actions[g].get(i, j));
        for (size_t i = 0; i < b.dim; ++i)
            for (size_t j = 0; j < b.dim; ++j) m.set(a.dim + i, a.dim + j, b.actions[g].get(i, j));
        s.actions.push_back(std::move(m));
    }
    return s;
}

ModuleRep regular_representation(const std::shared_ptr<const PresentedAlgebra>& alg) {
    if (alg->dim() > 2000) throw DimensionTooLarge("regular representation guarded at dim 2000");
    ModuleRep m;
    m.algebra_key = alg->key();
    m.gen_names = alg->generator_names();
    m.field = alg->field();
    m.dim = alg->dim();
    for (size_t g = 0; g < alg->generator_names().size(); ++g)
        m.actions.push_back(alg->right_multiplication_matrix(alg->generator(g)));
    return m;
}

std::string product_group_key(int a, int b, FieldSpec f) {
    return "SxS[" + std::to_string(a) + "," + std::to_string(b) + ";" + f.to_string() + "]";
}

std::vector<std::string> product_group_gen_names(int a, int b) {
    std::vector<std::string> names;
    for (int i = 1; i < a; ++i) names.push_back("sL" + std::to_string(i));
    for (int i = 1; i < b; ++i) names.push_back("sR" + std::to_string(i));
    return names;
}

namespace {

// Tabloid action of a transposition: permutation matrix on the tabloid list.
Matrix tabloid_action(const std::vector<Tabloid>& tabs, const std::map<Tabloid, size_t>& index,
                      const Permutation& g, FieldSpec f) {
    Matrix m(f, tabs.size(), tabs.size());
    for (size_t i = 0; i < tabs.size(); ++i) {
        Tabloid moved;
        moved.rows.reserve(tabs[i].rows.size());
        for (const auto& row : tabs[i].rows) {
            std::vector<int> nr;
            nr.reserve(row.size());
            for (int e : row) nr.push_back(g(e));
            std::sort(nr.begin(), nr.end());
            moved.rows.push_back(std::move(nr));
        }
        m.set_int(i, index.at(moved), 1);
    }
    return m;
}

// Column stabilizer elements of a tableau, as permutations of {1..n}.
std::vector<Permutation> column_stabilizer(const Tableau& t, int n) {
    auto cols = t.columns();
    std::vector<Permutation> out{Permutation::identity(n)};
    for (const auto& col : cols) {
        std::vector<Permutation> next;
        std::vector<int> order(col.size());
        for (size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
        std::sort(order.begin(), order.end());
        do {
            std::vector<int> im(n);
            for (int i = 0; i < n; ++i) im[i] = i + 1;
            for (size_t i = 0; i < col.size(); ++i) im[col[i] - 1] = col[order[i]];
            Permutation p{std::vector<int>(im)};
            for (const auto& prev : out) next.push_back(prev.compose(p));
        } while (std::next_permutation(order.begin(), order.end()));
        out = std::move(next);
    }
    return out;
}

}  // namespace

ModuleRep perm_module_sym(const std::vector<int>& shape, FieldSpec f) {
    int n = 0;
    for (int p : shape) {
        if (p < 0) throw SizeMismatch("negative part in shape");
        n += p;
    }
    if (n > 8) throw DegreeTooLarge("perm_module_sym guarded at degree 8");
    auto tabs = tabloids(shape);
    std::map<Tabloid, size_t> index;
    for (size_t i = 0; i < tabs.size(); ++i) index[tabs[i]] = i;
    ModuleRep m;
    m.algebra_key = product_group_key(n, 0, f);
    m.gen_names = product_group_gen_names(n, 0);
    m.field = f;
    m.dim = tabs.size();
    for (int i = 1; i < n; ++i)
        m.actions.push_back(tabloid_action(tabs, index, Permutation::transposition(n, i, i + 1), f));
    return m;
}

Matrix polytabloid(const Tableau& t, FieldSpec f) {
    int n = t.shape.size();
    auto tabs = tabloids(std::vector<int>(t.shape.parts.begin(), t.shape.parts.end()));
    std::map<Tabloid, size_t> index;
    for (size_t i = 0; i < tabs.size(); ++i) index[tabs[i]] = i;
    Matrix v(f, 1, tabs.size());
    for (const auto& sigma : column_stabilizer(t, n)) {
        Tabloid moved;
        for (const auto& row : t.entries) {
            std::vector<int> nr;
            for (int e : row) nr.push_back(sigma(e));
            std::sort(nr.begin(), nr.end());
            moved.rows.push_back(std::move(nr));
        }
        size_t j = index.at(moved);
        Scalar c = Scalar::of(f, sigma.sign());
        v.set(0, j, v.get(0, j) + c);
    }
    return v;
}

SubmoduleWitness specht_module(const Partition& lambda, FieldSpec f) {
    if (lambda.size() > 8) throw DegreeTooLarge("specht_module guarded at degree 8");
    ModuleRep m = perm_module_sym(std::vector<int>(lambda.parts.begin(), lambda.parts.end()), f);
    auto stds = standard_tableaux(lambda);
    std::vector<Matrix> rows;
    rows.reserve(stds.size());
    for (const auto& t : stds) rows.push_back(polytabloid(t, f));
    Matrix u = Matrix::stack(f, m.dim, rows);
    if (u.rank() != stds.size())
        throw InternalError("standard polytabloids are not independent");
    SubmoduleWitness w = submodule(m, u);
    if (w.rep.dim != stds.size()) throw InternalError("Specht dimension mismatch");
    return w;
}

ModuleRep dual_specht(const Partition& lambda, FieldSpec f) {
    ModuleRep s = specht_module(lambda.conjugate(), f).rep;
    for (auto& a : s.actions) a = -a;  // sign twist: generators are transpositions
    return s;
}

ModuleRep outer_tensor(const ModuleRep& left, const ModuleRep& right) {
    // keys SxS[a,0] x SxS[b,0] -> SxS[a,b]
    auto parse_deg = [](const std::string& key) {
        size_t lb = key.find('['), comma = key.find(',');
        return std::stoi(key.substr(lb + 1, comma - lb - 1));
    };
    int a = parse_deg(left.algebra_key), b = parse_deg(right.algebra_key);
    if (!(left.field == right.field)) throw FieldMismatch("outer tensor field mismatch");
    ModuleRep m;
    m.algebra_key = product_group_key(a, b, left.field);
    m.gen_names = product_group_gen_names(a, b);
    m.field = left.field;
    m.dim = left.dim * right.dim;
    Matrix il = Matrix::identity(left.field, left.dim), ir = Matrix::identity(left.field, right.dim);
    for (const auto& act : left.actions) m.actions.push_back(act.kron(ir));
    for (const auto& act : right.actions) m.actions.push_back(il.kron(act));
    return m;
}

ModuleRep perm_module_prod(const std::vector<int>& shape_l, const std::vector<int>& shape_r,
                           FieldSpec f) {
    int a = 0, b = 0;
    for (int p : shape_l) a += p;
    for (int p : shape_r) b += p;
    if (a > 6 || b > 6) throw DegreeTooLarge("perm_module_prod guarded at degree 6");
    return outer_tensor(perm_module_sym(shape_l, f), perm_module_sym(shape_r, f));
}

SubmoduleWitness specht_prod(const Partition& lambda, const Partition& mu, FieldSpec f) {
    ModuleRep m = perm_module_prod(std::vector<int>(lambda.parts.begin(), lambda.parts.end()),
                                   std::vector<int>(mu.parts.begin(), mu.parts.end()), f);
    auto sl = standard_tableaux(lambda), sr = standard_tableaux(mu);
    std::vector<Matrix> rows;
    for (const auto& tl : sl)
        for (const auto& tr : sr) rows.push_back(polytabloid(tl, f).kron(polytabloid(tr, f)));
    Matrix u = Matrix::stack(f, m.dim, rows);
    SubmoduleWitness w = submodule(m, u);
    if (w.rep.dim != sl.size() * sr.size())
        throw InternalError("product Specht dimension mismatch");
    return w;
}

ModuleRep dual_specht_prod(const Partition& lambda, const Partition& mu, FieldSpec f) {
    return outer_tensor(dual_specht(lambda, f), dual_specht(mu, f));
}

ModuleRep simple_head_prod(const Partition& lambda, const Partition& mu, FieldSpec f) {
    if (f.is_rationals() || f.characteristic < 5)
        throw BadCharacteristic("simple heads implemented for F_p with p >= 5");
    if (!is_p_regular(lambda, f.characteristic) || !is_p_regular(mu, f.characteristic))
        throw NotPRegular("shape is not p-regular for p = " + std::to_string(f.characteristic));
    SubmoduleWitness s = specht_prod(lambda, mu, f);
    // Gram matrix of the tabloid-orthonormal form restricted to S
    Matrix gram = s.basis * s.basis.transpose();
    Matrix radical_coords = gram.kernel();
    if (radical_coords.rows() == 0) return s.rep;
    ModuleRep head = quotient(s.rep, radical_coords);
    if (head.dim == 0) throw InternalError("simple head is zero");
    return head;
}

Matrix action_of_product_permutation(const ModuleRep& m, int a, int b,
                                     const ProductPermutation& g) {
    if (m.algebra_key != product_group_key(a, b, m.field))
        throw AlgebraMismatch("module is not over K S_{a,b}");
    std::vector<size_t> word;
    for (int i : g.left.adjacent_word()) word.push_back(static_cast<size_t>(i) - 1);
    size_t offset = a > 1 ? static_cast<size_t>(a) - 1 : 0;
    for (int i : g.right.adjacent_word()) word.push_back(offset + static_cast<size_t>(i) - 1);
    return m.action_word(word);
}

Matrix alternating_column_sum_action(const ModuleRep& m, const Partition& lambda,
                                     const Partition& mu) {
    int a = lambda.size(), b = mu.size();
    Tableau tl = Tableau::initial(lambda), tr = Tableau::initial(mu);
    Matrix k(m.field, m.dim, m.dim);
    for (const auto& sigma : column_stabilizer(tl, a))
        for (const auto& tau : column_stabilizer(tr, b)) {
            Scalar c = Scalar::of(m.field, sigma.sign() * tau.sign());
            k = k + action_of_product_permutation(m, a, b, {sigma, tau}).scaled(c);
        }
    return k;
}

}  // namespace wbr
