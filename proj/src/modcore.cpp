#include "wbr/modcore.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

#include "wbr/kernels.hpp"

namespace wbr {

namespace {

struct Lcg {
    uint64_t state;
    explicit Lcg(uint64_t seed) : state(seed ^ 0x9e3779b97f4a7c15ULL) {
        next();
        next();
    }
    uint64_t next() {
        state = state * 6364136223846793005ULL + 1442695040888963407ULL;
        return state >> 11;
    }
    uint64_t below(uint64_t n) { return n ? next() % n : 0; }
};

// ---------------------------------------------------------------- hom_space

template <class R>
struct RawEchelon {
    // Rows kept fully reduced (RREF invariant); width fixed.
    const R ring;
    size_t width;
    std::vector<std::vector<typename R::Elem>> rows;
    std::vector<size_t> pivots;

    RawEchelon(const R& r, size_t w) : ring(r), width(w) {}

    // Reduce v in place against the rows; returns pivot position or width if zero.
    size_t reduce(std::vector<typename R::Elem>& v) const {
        for (size_t k = 0; k < rows.size(); ++k) {
            const auto& f = v[pivots[k]];
            if (ring.is_zero(f)) continue;
            auto c = f;
            for (size_t j = 0; j < width; ++j)
                v[j] = ring.sub(v[j], ring.mul(c, rows[k][j]));
        }
        for (size_t j = 0; j < width; ++j)
            if (!ring.is_zero(v[j])) return j;
        return width;
    }

    //

    bool insert(std::vector<typename R::Elem> v) {
        size_t p = reduce(v);
        if (p == width) return false;
        auto inv = ring.inv(v[p]);
        for (size_t j = 0; j < width; ++j) v[j] = ring.mul(v[j], inv);
        for (size_t k = 0; k < rows.size(); ++k) {
            auto c = rows[k][p];
            if (ring.is_zero(c)) continue;
            for (size_t j = 0; j < width; ++j)
                rows[k][j] = ring.sub(rows[k][j], ring.mul(c, v[j]));
        }
        size_t at = 0;
        while (at < pivots.size() && pivots[at] < p) ++at;
        rows.insert(rows.begin() + at, std::move(v));
        pivots.insert(pivots.begin() + at, p);
        return true;
    }
};

template <class R>
const std::vector<typename R::Elem>& raw_storage(const Matrix& m);
template <>
const std::vector<uint32_t>& raw_storage<kernels::FpRing>(const Matrix& m) {
    return m.fp_storage();
}
template <>
const std::vector<mpq_class>& raw_storage<kernels::RatRing>(const Matrix& m) {
    return m.q_storage();
}

template <class R>
Matrix from_raw(FieldSpec f, size_t rows, size_t cols,
                const std::vector<typename R::Elem>& data) {
    Matrix m(f, rows, cols);
    if constexpr (std::is_same_v<R, kernels::FpRing>) m.fp_storage_mut() = data;
    else m.q_storage_mut() = data;
    return m;
}

template <class R>
std::vector<Matrix> hom_impl(const R& ring, const ModuleRep& M, const ModuleRep& N) {
    using E = typename R::Elem;
    const size_t dM = M.dim, dN = N.dim, G = M.actions.size();
    const FieldSpec f = M.field;
    if (dM == 0 || dN == 0) return {};
    if (G == 0) {
        std::vector<Matrix> all;
        for (size_t i = 0; i < dM; ++i)
            for (size_t j = 0; j < dN; ++j) {
                Matrix m(f, dM, dN);
                m.set_int(i, j, 1);
                all.push_back(std::move(m));
            }
        return all;
    }

    std::vector<const std::vector<E>*> actM, actN;
    for (const auto& a : M.actions) actM.push_back(&raw_storage<R>(a));
    for (const auto& a : N.actions) actN.push_back(&raw_storage<R>(a));

    // Spun rows with derivation data.
    std::vector<std::vector<E>> P;      // vectors in M (length dM)
    std::vector<size_t> src;            // generating-unknown index per row
    std::vector<std::vector<E>> U;      // transfer matrices (dN x dN), row-major
    size_t unknowns = 0;

    // Augmented echelon: [reduced | coefficients over spun rows | spare],
    // the spare column carries the marker of a candidate once the span is
    // already full.
    const size_t AW = 2 * dM + 1;
    RawEchelon<R> ech(ring, AW);

    struct Dep {
        size_t j, g;
        std::vector<std::pair<size_t, E>> gamma;  // v = sum gamma_k P_k
    };
    std::vector<Dep> deps;

    auto try_insert = [&](std::vector<E> v, size_t source, std::vector<E> transfer,
                          bool record_dep, size_t from_row, size_t gen) {
        std::vector<E> aug(AW, ring.zero());
        std::copy(v.begin(), v.end(), aug.begin());
        size_t marker = dM + std::min(P.size(), dM);
        aug[marker] = ring.one();
        size_t piv = ech.reduce(aug);
        if (piv >= dM) {
            // dependent: v = -sum aug[dM+k] P_k over the accepted rows
            if (record_dep) {
                Dep d;
                d.j = from_row;
                d.g = gen;
                for (size_t k = 0; k < P.size(); ++k) {
                    E c = ring.neg(aug[dM + k]);
                    if (!ring.is_zero(c)) d.gamma.push_back({k, c});
                }
                deps.push_back(std::move(d));
            }
            return false;
        }
        // independent: accept
        std::vector<E> aug2(AW, ring.zero());
        std::copy(v.begin(), v.end(), aug2.begin());
        aug2[dM + P.size()] = ring.one();
        ech.insert(std::move(aug2));
        P.push_back(std::move(v));
        src.push_back(source);
        U.push_back(std::move(transfer));
        return true;
    };

    std::vector<E> idN(dN * dN, ring.zero());
    for (size_t i = 0; i < dN; ++i) idN[i * dN + i] = ring.one();

    size_t processed = 0;
    for (size_t seed_i = 0; seed_i < dM && P.size() < dM; ++seed_i) {
        std::vector<E> e(dM, ring.zero());
        e[seed_i] = ring.one();
        if (!try_insert(std::move(e), unknowns, idN, false, 0, 0)) continue;
        ++unknowns;
        // BFS closure from everything accepted so far
        while (processed < P.size()) {
            size_t j = processed++;
            for (size_t g = 0; g < G; ++g) {
                // v = P_j * actM[g]
                std::vector<E> v(dM, ring.zero());
                kernels::matmul(ring, P[j].data(), actM[g]->data(), v.data(), 1, dM, dM);
                std::vector<E> t(dN * dN, ring.zero());
                kernels::matmul(ring, U[j].data(), actN[g]->data(), t.data(), dN, dN, dN);
                try_insert(std::move(v), src[j], std::move(t), true, j, g);
            }
        }
    }
    if (P.size() != dM) throw InternalError("module spin did not fill the space");

    // Constraint rows over the unknown vector (unknowns * dN coordinates).
    const size_t nu = unknowns, W = nu * dN;
    RawEchelon<R> cons(ring, W);
    std::vector<E> block;  // scratch dN x dN
    for (const auto& d : deps) {
        // A_w = [w == src[j]] * (U_j * actN[g]) - sum_{k:src[k]=w} gamma_k U_k
        std::map<size_t, std::vector<E>> blocks;
        {
            std::vector<E> t(dN * dN, ring.zero());
            kernels::matmul(ring, U[d.j].data(), actN[d.g]->data(), t.data(), dN, dN, dN);
            blocks[src[d.j]] = std::move(t);
        }
        for (const auto& [k, c] : d.gamma) {
            auto& b = blocks[src[k]];
            if (b.empty()) b.assign(dN * dN, ring.zero());
            for (size_t x = 0; x < dN * dN; ++x) b[x] = ring.sub(b[x], ring.mul(c, U[k][x]));
        }
        for (size_t c = 0; c < dN; ++c) {
            std::vector<E> row(W, ring.zero());
            bool nonzero = false;
            for (const auto& [w, b] : blocks)
                for (size_t s = 0; s < dN; ++s) {
                    row[w * dN + s] = b[s * dN + c];
                    if (!ring.is_zero(row[w * dN + s])) nonzero = true;
                }
            if (nonzero) cons.insert(std::move(row));
        }
    }

    // Solutions: x with x . C^T = 0 where C rows are constraints.
    std::vector<E> cmat;
    cmat.reserve(cons.rows.size() * W);
    for (const auto& r : cons.rows) cmat.insert(cmat.end(), r.begin(), r.end());
    Matrix C = from_raw<R>(f, cons.rows.size(), W, cmat);
    Matrix sols = C.rows() == 0 ? Matrix::identity(f, W) : C.kernel();

    // Assemble Phi for each solution.
    Matrix Pm(f, dM, dM);
    {
        std::vector<E> pdata;
        pdata.reserve(dM * dM);
        for (const auto& row : P) pdata.insert(pdata.end(), row.begin(), row.end());
        Pm = from_raw<R>(f, dM, dM, pdata);
    }
    Matrix Pinv = Pm.inverse();
    std::vector<Matrix> out;
    const auto& sraw = raw_storage<R>(sols);
    for (size_t si = 0; si < sols.rows(); ++si) {
        std::vector<E> phiB(dM * dN, ring.zero());
        for (size_t j = 0; j < dM; ++j) {
            const E* x = &sraw[si * W + src[j] * dN];
            kernels::matmul(ring, x, U[j].data(), &phiB[j * dN], 1, dN, dN);
        }
        Matrix Phi = Pinv * from_raw<R>(f, dM, dN, phiB);
        out.push_back(std::move(Phi));
    }
    // Intertwining check.
    for (const auto& Phi : out)
        for (size_t g = 0; g < G; ++g)
            if (!(M.actions[g] * Phi == Phi * N.actions[g]))
                throw InternalError("hom_space produced a non-intertwiner");
    return out;
}

}  // namespace

std::vector<Matrix> hom_space(const ModuleRep& m, const ModuleRep& n) {
    m.check_compatible(n);
    if (m.field.is_rationals()) return hom_impl(kernels::RatRing{}, m, n);
    return hom_impl(kernels::FpRing{m.field.characteristic}, m, n);
}

// ------------------------------------------------------- End(M) structure

namespace {

// Structure constants on coordinate row vectors.
struct StructAlg {
    FieldSpec f;
    size_t d = 0;
    std::vector<Matrix> table;  // table[i] row j = coords of e_i * e_j
    Matrix one;                 // 1 x d

    Matrix mul(const Matrix& x, const Matrix& y) const {
        Matrix out(f, 1, d);
        for (size_t i = 0; i < d; ++i) {
            Scalar xi = x.get(0, i);
            if (xi.is_zero()) continue;
            out = out + (y * table[i]).scaled(xi);
        }
        return out;
    }
    // Right-regular representation rho(y): z -> z*y (a homomorphism).
    Matrix regular(const Matrix& y) const {
        Matrix rho(f, d, d);
        for (size_t i = 0; i < d; ++i) {
            Matrix ei(f, 1, d);
            ei.set_int(0, i, 1);
            Matrix row = mul(ei, y);
            for (size_t j = 0; j < d; ++j) rho.set(i, j, row.get(0, j));
        }
        return rho;
    }
    bool commutative() const {
        for (size_t i = 0; i < d; ++i)
            for (size_t j = i + 1; j < d; ++j) {
                Matrix ei(f, 1, d), ej(f, 1, d);
                ei.set_int(0, i, 1);
                ej.set_int(0, j, 1);
                if (!(mul(ei, ej) == mul(ej, ei))) return false;
            }
        return true;
    }
};

struct EndoData {
    FieldSpec f;
    std::vector<Matrix> basis;  // endomorphisms of M
    Matrix vecs;                // d x n^2, row k = vec(basis[k])
    StructAlg alg;
};

Matrix vec_of(const Matrix& m) {
    Matrix v(m.field(), 1, m.rows() * m.cols());
    for (size_t i = 0; i < m.rows(); ++i)
        for (size_t j = 0; j < m.cols(); ++j) v.set(0, i * m.cols() + j, m.get(i, j));
    return v;
}

EndoData build_endo(const ModuleRep& M, const std::vector<Matrix>& endos) {
    EndoData ed;
    ed.f = M.field;
    ed.basis = endos;
    size_t d = endos.size(), n = M.dim;
    std::vector<Matrix> rows;
    rows.reserve(d);
    for (const auto& e : endos) rows.push_back(vec_of(e));
    ed.vecs = Matrix::stack(ed.f, n * n, rows);
    ed.alg.f = ed.f;
    ed.alg.d = d;
    for (size_t i = 0; i < d; ++i) {
        std::vector<Matrix> prod_rows;
        prod_rows.reserve(d);
        for (size_t j = 0; j < d; ++j) prod_rows.push_back(vec_of(endos[i] * endos[j]));
        auto coords = Matrix::stack(ed.f, n * n, prod_rows).solve_rowspan(ed.vecs);
        if (!coords) throw InternalError("End(M) not closed under composition");
        ed.alg.table.push_back(*coords);
    }
    auto one = vec_of(Matrix::identity(ed.f, n)).solve_rowspan(ed.vecs);
    if (!one) throw InternalError("identity not in End basis span");
    ed.alg.one = *one;
    return ed;
}

// Radical of the coordinate algebra: Dickson trace form over Q, the
// Friedl-Ronyai p-power trace chain over F_p (evaluated on the regular
// representation). Returns rows of radical coordinates.
Matrix radical_coords(const StructAlg& A) {
    size_t d = A.d;
    FieldSpec f = A.f;
    std::vector<Matrix> reg;
    for (size_t i = 0; i < d; ++i) {
        Matrix ei(f, 1, d);
        ei.set_int(0, i, 1);
        reg.push_back(A.regular(ei));
    }
    if (f.is_rationals()) {
        Matrix T(f, d, d);
        for (size_t i = 0; i < d; ++i)
            for (size_t j = i; j < d; ++j) {
                Matrix p = reg[i] * reg[j];
                Scalar tr = Scalar::zero(f);
                for (size_t k = 0; k < d; ++k) tr += p.get(k, k);
                T.set(i, j, tr);
                T.set(j, i, tr);
            }
        return T.kernel();
    }
    uint32_t p = f.characteristic;
    // current subspace rows (in coordinates)
    Matrix cur = Matrix::identity(f, d);
    uint64_t pk = 1;
    int steps = 0;
    while (pk <= d) {
        pk *= p;
        ++steps;
    }
    uint64_t modulus = 1, exponent = 1;
    for (int i = 1; i <= steps; ++i) {
        modulus = 1;
        for (int q = 0; q < i; ++q) modulus *= p;        // p^i
        exponent = modulus / p;                           // p^{i-1}
        size_t k = cur.rows();
        if (k == 0) break;
        Matrix F(f, k, k);
        for (size_t a = 0; a < k; ++a)
            for (size_t b = 0; b < k; ++b) {
                Matrix z = A.mul(cur.row(a), cur.row(b));
                // canonical lift of rho(z) powered mod p^i
                std::vector<uint64_t> Z(d * d, 0);
                for (size_t ci = 0; ci < d; ++ci) {
                    uint32_t c = z.get(0, ci).residue();
                    if (c == 0) continue;
                    const auto& rm = reg[ci].fp_storage();
                    for (size_t x = 0; x < d * d; ++x) Z[x] = (Z[x] + static_cast<uint64_t>(c) * rm[x]) % p;
                }
                // now Z holds canonical residues; power mod p^i
                std::vector<uint64_t> acc(d * d, 0), base = Z, tmp(d * d, 0);
                for (size_t x = 0; x < d; ++x) acc[x * d + x] = 1 % modulus;
                uint64_t e = exponent;
                auto matmul64 = [&](const std::vector<uint64_t>& L, const std::vector<uint64_t>& Rm,
                                    std::vector<uint64_t>& out) {
                    for (size_t ii = 0; ii < d; ++ii)
                        for (size_t jj = 0; jj < d; ++jj) {
                            unsigned __int128 s = 0;
                            for (size_t kk = 0; kk < d; ++kk)
                                s += static_cast<unsigned __int128>(L[ii * d + kk]) * Rm[kk * d + jj];
                            out[ii * d + jj] = static_cast<uint64_t>(s % modulus);
                        }
                };
                while (e) {
                    if (e & 1) {
                        matmul64(acc, base, tmp);
                        acc.swap(tmp);
                    }
                    e >>= 1;
                    if (e) {
                        matmul64(base, base, tmp);
                        base.swap(tmp);
                    }
                }
                uint64_t tr = 0;
                for (size_t x = 0; x < d; ++x) tr = (tr + acc[x * d + x]) % modulus;
                if (tr % exponent != 0)
                    throw InternalError("Friedl-Ronyai trace not divisible as expected");
                F.set_int(a, b, static_cast<long long>(tr / exponent % p));
            }
        Matrix cnull = F.transpose().kernel();  // {c : c.F = 0}
        cur = (cnull * cur).row_space();
    }
    return cur;
}

// ------------------------------------------------ polynomials over Scalar

using Poly = std::vector<Scalar>;  // ascending, normalized (no leading zeros)

void poly_trim(Poly& p) {
    while (!p.empty() && p.back().is_zero()) p.pop_back();
}
size_t poly_deg(const Poly& p) { return p.empty() ? 0 : p.size() - 1; }
bool poly_is_zero(const Poly& p) { return p.empty(); }

Poly poly_monic(const Poly& p) {
    Poly q = p;
    poly_trim(q);
    if (q.empty()) return q;
    Scalar inv = q.back().inverse();
    for (auto& c : q) c = c * inv;
    return q;
}

Poly poly_mul(const Poly& a, const Poly& b, FieldSpec f) {
    if (a.empty() || b.empty()) return {};
    Poly c(a.size() + b.size() - 1, Scalar::zero(f));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
    poly_trim(c);
    return c;
}

// a = q*b + r
std::pair<Poly, Poly> poly_divmod(const Poly& a, const Poly& b, FieldSpec f) {
    Poly r = a;
    poly_trim(r);
    Poly bb = b;
    poly_trim(bb);
    if (bb.empty()) throw DivisionByZero("polynomial division by zero");
    if (r.size() < bb.size()) return {{}, r};
    Poly q(r.size() - bb.size() + 1, Scalar::zero(f));
    Scalar lead_inv = bb.back().inverse();
    for (size_t shift = q.size(); shift-- > 0;) {
        Scalar c = r[shift + bb.size() - 1] * lead_inv;
        if (!c.is_zero()) {
            q[shift] = c;
            for (size_t j = 0; j < bb.size(); ++j) r[shift + j] -= c * bb[j];
        }
        if (shift == 0) break;
    }
    poly_trim(q);
    poly_trim(r);
    return {q, r};
}

Poly poly_gcd(Poly a, Poly b, FieldSpec f) {
    poly_trim(a);
    poly_trim(b);
    while (!b.empty()) {
        auto [q, r] = poly_divmod(a, b, f);
        a = b;
        b = r;
    }
    return poly_monic(a);
}

// extended gcd: returns (g, u, v) with u*a + v*b = g (g monic)
std::tuple<Poly, Poly, Poly> poly_xgcd(Poly a, Poly b, FieldSpec f) {
    Poly r0 = a, r1 = b;
    Poly s0{Scalar::one(f)}, s1{}, t0{}, t1{Scalar::one(f)};
    poly_trim(r0);
    poly_trim(r1);
    while (!r1.empty()) {
        auto [q, r] = poly_divmod(r0, r1, f);
        Poly s2 = s0, t2 = t0;
        Poly qs = poly_mul(q, s1, f), qt = poly_mul(q, t1, f);
        // s2 = s0 - q*s1
        s2.resize(std::max(s2.size(), qs.size()), Scalar::zero(f));
        for (size_t i = 0; i < qs.size(); ++i) s2[i] -= qs[i];
        t2.resize(std::max(t2.size(), qt.size()), Scalar::zero(f));
        for (size_t i = 0; i < qt.size(); ++i) t2[i] -= qt[i];
        poly_trim(s2);
        poly_trim(t2);
        r0 = r1;
        r1 = r;
        s0 = s1;
        s1 = s2;
        t0 = t1;
        t1 = t2;
    }
    if (r0.empty()) throw InternalError("xgcd of zero polynomials");
    Scalar inv = r0.back().inverse();
    for (auto& c : r0) c = c * inv;
    for (auto& c : s0) c = c * inv;
    for (auto& c : t0) c = c * inv;
    return {r0, s0, t0};
}

Poly poly_derivative(const Poly& p, FieldSpec f) {
    Poly d;
    for (size_t i = 1; i < p.size(); ++i) d.push_back(p[i] * Scalar::of(f, static_cast<long long>(i)));
    poly_trim(d);
    return d;
}

// x^e mod f over F_p-style fields
Poly poly_powmod_x(uint64_t e, const Poly& f_, FieldSpec f) {
    Poly result{Scalar::one(f)};
    Poly base{Scalar::zero(f), Scalar::one(f)};
    base = poly_divmod(base, f_, f).second;
    while (e) {
        if (e & 1) result = poly_divmod(poly_mul(result, base, f), f_, f).second;
        base = poly_divmod(poly_mul(base, base, f), f_, f).second;
        e >>= 1;
    }
    return result;
}

// Squarefree product of the distinct irreducible factors (any characteristic).
Poly distinct_part(Poly f_, FieldSpec f) {
    f_ = poly_monic(f_);
    if (poly_deg(f_) <= 1) return f_;
    uint32_t p = f.characteristic;
    while (true) {
        Poly d = poly_derivative(f_, f);
        if (!poly_is_zero(d)) {
            Poly g = poly_gcd(f_, d, f);
            return poly_monic(poly_divmod(f_, g, f).first);
        }
        // char p and f(x) = g(x^p); over the prime field g has the same coeffs
        if (p == 0) throw InternalError("zero derivative in characteristic 0");
        Poly g;
        for (size_t i = 0; i < f_.size(); i += p) g.push_back(f_[i]);
        f_ = poly_monic(g);
        if (poly_deg(f_) <= 1) return f_;
    }
}

// Berlekamp: returns a nontrivial monic factor of a squarefree f over F_p,
// or nullopt if irreducible.
std::optional<Poly> berlekamp_factor(const Poly& sf, FieldSpec f) {
    size_t n = poly_deg(sf);
    if (n <= 1) return std::nullopt;
    uint32_t p = f.characteristic;
    // Q matrix: row i = x^{i p} mod sf
    Matrix Q(f, n, n);
    for (size_t i = 0; i < n; ++i) {
        Poly xi = poly_powmod_x(static_cast<uint64_t>(i) * p, sf, f);
        for (size_t j = 0; j < n && j < xi.size(); ++j) Q.set(i, j, xi[j]);
    }
    Matrix QmI = Q - Matrix::identity(f, n);
    Matrix null = QmI.null_rows();  // {v : v (Q - I) = 0}
    if (null.rows() <= 1) return std::nullopt;
    // pick a non-constant kernel vector
    for (size_t k = 0; k < null.rows(); ++k) {
        Poly v;
        for (size_t j = 0; j < n; ++j) v.push_back(null.get(k, j));
        poly_trim(v);
        if (poly_deg(v) == 0) continue;
        for (uint32_t c = 0; c < p; ++c) {
            Poly vc = v;
            if (vc.empty()) vc.push_back(Scalar::zero(f));
            vc[0] -= Scalar::of(f, c);
            Poly g = poly_gcd(sf, vc, f);
            if (!g.empty() && poly_deg(g) > 0 && poly_deg(g) < n) return g;
        }
    }
    return std::nullopt;
}

// Rational roots of a monic polynomial over Q via the integer-root theorem.
std::vector<Scalar> rational_roots(const Poly& f_, FieldSpec f) {
    std::vector<Scalar> roots;
    Poly g = poly_monic(f_);
    if (poly_deg(g) == 0) return roots;
    // substitute x = y / D with D = lcm of denominators: monic integer poly
    mpz_class D = 1;
    for (const auto& c : g) D = lcm(D, c.rational().get_den());
    size_t n = poly_deg(g);
    std::vector<mpz_class> ic(n + 1);
    for (size_t i = 0; i <= n; ++i) {
        mpq_class scaled = g[i].rational();
        for (size_t k = 0; k < n - i; ++k) scaled *= D;
        if (scaled.get_den() != 1) throw InternalError("integerization failed");
        ic[i] = scaled.get_num();
    }
    auto eval = [&](const mpz_class& y) {
        mpz_class acc = 0;
        for (size_t i = n + 1; i-- > 0;) {
            acc = acc * y + ic[i];
            if (i == 0) break;
        }
        return acc;
    };
    mpz_class c0 = ic[0];
    std::vector<mpz_class> candidates;
    if (c0 == 0) candidates.push_back(0);
    mpz_class a0 = abs(c0);
    if (a0 != 0 && a0 <= mpz_class("1000000000000")) {
        for (mpz_class dd = 1; dd * dd <= a0; ++dd) {
            if (a0 % dd == 0) {
                candidates.push_back(dd);
                candidates.push_back(-dd);
                mpz_class other = a0 / dd;
                candidates.push_back(other);
                candidates.push_back(-other);
            }
        }
    }
    for (const auto& y : candidates)
        if (eval(y) == 0) {
            mpq_class r(y, D);
            r.canonicalize();
            Scalar s = Scalar::of_mpq(f, r);
            bool dup = false;
            for (const auto& prev : roots) dup = dup || prev == s;
            if (!dup) roots.push_back(s);
        }
    return roots;
}

// Minimal polynomial of x in a structure-constant algebra (Krylov on coords).
Poly min_poly(const StructAlg& A, const Matrix& x) {
    FieldSpec f = A.f;
    size_t d = A.d;
    // powers of x as rows; augmented echelon over width d + (d+1)
    std::vector<Matrix> pows{A.one};
    Matrix cur = A.one;
    for (size_t k = 1; k <= d; ++k) {
        cur = A.mul(cur, x);
        pows.push_back(cur);
        Matrix stacked = Matrix::stack(f, d, pows);
        if (stacked.rank() < pows.size()) {
            // last power depends on earlier ones: solve coefficients
            Matrix prev = Matrix::stack(f, d, std::vector<Matrix>(pows.begin(), pows.end() - 1));
            auto coeffs = cur.solve_rowspan(prev);
            if (!coeffs) throw InternalError("min_poly dependency not solvable");
            Poly mp;
            for (size_t i = 0; i < k; ++i) mp.push_back(-coeffs->get(0, i));
            mp.push_back(Scalar::one(f));
            return mp;
        }
    }
    throw InternalError("min_poly did not terminate");
}

// Try to produce a proper idempotent of the semisimple algebra S from the
// element z: split min poly into coprime factors and apply CRT.
std::optional<Matrix> idempotent_from_element(const StructAlg& S, const Matrix& z) {
    FieldSpec f = S.f;
    Poly mp = min_poly(S, z);
    if (poly_deg(mp) <= 1) return std::nullopt;
    Poly sf = distinct_part(mp, f);
    Poly factor;  // nontrivial monic factor of sf
    if (f.is_rationals()) {
        auto roots = rational_roots(sf, f);
        if (roots.empty()) return std::nullopt;
        if (poly_deg(sf) == 1) return std::nullopt;
        factor = Poly{-roots[0], Scalar::one(f)};
    } else {
        auto g = berlekamp_factor(sf, f);
        if (!g) return std::nullopt;
        factor = *g;
    }
    // A = maximal power of `factor` dividing mp; B = mp / A
    Poly A{Scalar::one(f)};
    Poly rest = mp;
    while (true) {
        auto [q, r] = poly_divmod(rest, factor, f);
        if (!poly_is_zero(r)) break;
        A = poly_mul(A, factor, f);
        rest = q;
    }
    Poly B = rest;
    if (poly_deg(B) == 0 || poly_deg(A) == 0) return std::nullopt;
    auto [g, u, v] = poly_xgcd(A, B, f);
    if (poly_deg(g) != 0) throw InternalError("CRT factors not coprime");
    // e = u*A / g ≡ 0 mod A, ≡ 1 mod B
    Poly e = poly_divmod(poly_mul(u, A, f), mp, f).second;
    // evaluate e at z (Horner)
    Matrix acc(f, 1, S.d);
    for (size_t i = e.size(); i-- > 0;) {
        acc = S.mul(acc, z);
        acc = acc + S.one.scaled(e[i]);
        if (i == 0) break;
    }
    Matrix sq = S.mul(acc, acc);
    if (!(sq == acc)) throw InternalError("CRT element is not idempotent");
    bool is_zero = acc.is_zero();
    bool is_one = acc == S.one;
    if (is_zero || is_one) return std::nullopt;
    return acc;
}

struct SplitSearch {
    std::optional<Matrix> idempotent;  // coords in S
    bool division_certified = false;
};

SplitSearch find_split_idempotent(const StructAlg& S, uint64_t seed) {
    SplitSearch res;
    FieldSpec f = S.f;
    size_t d = S.d;
    if (d <= 1) {
        res.division_certified = true;
        return res;
    }
    std::vector<Matrix> candidates;
    for (size_t i = 0; i < d; ++i) {
        Matrix ei(f, 1, d);
        ei.set_int(0, i, 1);
        candidates.push_back(ei);
    }
    for (size_t i = 0; i < d; ++i)
        for (size_t j = i + 1; j < d; ++j) {
            Matrix v(f, 1, d);
            v.set_int(0, i, 1);
            v.set_int(0, j, 1);
            candidates.push_back(v);
        }
    Lcg rng(seed);
    size_t random_cap = f.is_rationals() ? 128 : 1024;
    for (size_t k = 0; k < random_cap; ++k) {
        Matrix v(f, 1, d);
        for (size_t i = 0; i < d; ++i) {
            long long c = f.is_rationals() ? static_cast<long long>(rng.below(9)) - 4
                                           : static_cast<long long>(rng.below(f.characteristic));
            v.set_int(0, i, c);
        }
        candidates.push_back(v);
    }
    bool saw_full_irreducible = false;
    for (const auto& z : candidates) {
        if (z.is_zero()) continue;
        auto e = idempotent_from_element(S, z);
        if (e) {
            res.idempotent = e;
            return res;
        }
        if (!f.is_rationals()) {
            Poly mp = min_poly(S, z);
            if (poly_deg(mp) == d) {
                Poly sf = distinct_part(mp, f);
                if (poly_deg(sf) == d && !berlekamp_factor(sf, f)) saw_full_irreducible = true;
            }
        }
    }
    if (S.commutative()) {
        if (saw_full_irreducible) {
            res.division_certified = true;  // S is a field
            return res;
        }
        throw NonSplitField("commutative semisimple End quotient did not split");
    }
    throw NonSplitField("noncommutative semisimple End quotient did not split");
}

// ------------------------------------------------------------ decompose

struct Indec {
    ModuleRep rep;
    Matrix embedding;        // rows in ambient coordinates
    bool non_split_end = false;
};

ModuleRep submodule_rep(const ModuleRep& M, const Matrix& rows, Matrix* basis_out) {
    SubmoduleWitness w = submodule(M, rows);
    if (basis_out) *basis_out = w.basis;
    return w.rep;
}

void split_recurse(const ModuleRep& M, const Matrix& embedding, uint64_t seed,
                   std::vector<Indec>& out) {
    size_t n = M.dim;
    if (n == 0) return;
    auto E = hom_space(M, M);
    if (E.size() == 1) {
        out.push_back({M, embedding, false});
        return;
    }
    auto descend = [&](const Matrix& rows_a, const Matrix& rows_b) {
        Matrix ba, bb;
        ModuleRep Ma = submodule_rep(M, rows_a, &ba);
        ModuleRep Mb = submodule_rep(M, rows_b, &bb);
        if (Ma.dim + Mb.dim != n) throw InternalError("split dimensions do not add up");
        split_recurse(Ma, ba * embedding, seed, out);
        split_recurse(Mb, bb * embedding, seed, out);
    };
    // Fitting sweep over the hom basis.
    size_t pw = 1;
    while (pw < n) pw <<= 1;
    for (const auto& phi : E) {
        Matrix B = phi.pow(pw);
        size_t r = B.rank();
        if (r == 0 || r == n) continue;
        descend(B.row_space(), B.null_rows());
        return;
    }
    // End-algebra route.
    EndoData ed = build_endo(M, E);
    Matrix J = radical_coords(ed.alg);
    size_t sdim = ed.alg.d - J.rows();
    if (sdim == 1) {
        out.push_back({M, embedding, false});
        return;
    }
    // semisimple quotient on complement coordinates
    std::vector<size_t> jpiv;
    Matrix jr = J.rref(&jpiv);
    jr = jr.submatrix(0, 0, jpiv.size(), ed.alg.d);
    std::vector<bool> is_piv(ed.alg.d, false);
    for (size_t p : jpiv) is_piv[p] = true;
    std::vector<size_t> comp;
    for (size_t i = 0; i < ed.alg.d; ++i)
        if (!is_piv[i]) comp.push_back(i);
    auto project = [&](const Matrix& x) {  // 1 x d -> 1 x sdim
        Matrix red = x;
        if (jpiv.size()) {
            Matrix coeff(M.field, 1, jpiv.size());
            for (size_t k = 0; k < jpiv.size(); ++k) coeff.set(0, k, x.get(0, jpiv[k]));
            red = x - coeff * jr;
        }
        Matrix o(M.field, 1, comp.size());
        for (size_t k = 0; k < comp.size(); ++k) o.set(0, k, red.get(0, comp[k]));
        return o;
    };
    auto lift = [&](const Matrix& s) {  // 1 x sdim -> 1 x d
        Matrix o(M.field, 1, ed.alg.d);
        for (size_t k = 0; k < comp.size(); ++k) o.set(0, comp[k], s.get(0, k));
        return o;
    };
    StructAlg S;
    S.f = M.field;
    S.d = sdim;
    for (size_t i = 0; i < sdim; ++i) {
        Matrix ti(M.field, sdim, sdim);
        Matrix ei(M.field, 1, sdim);
        ei.set_int(0, i, 1);
        for (size_t j = 0; j < sdim; ++j) {
            Matrix ej(M.field, 1, sdim);
            ej.set_int(0, j, 1);
            Matrix prod = project(ed.alg.mul(lift(ei), lift(ej)));
            for (size_t c = 0; c < sdim; ++c) ti.set(j, c, prod.get(0, c));
        }
        S.table.push_back(std::move(ti));
    }
    S.one = project(ed.alg.one);
    SplitSearch search = find_split_idempotent(S, seed);
    if (search.division_certified) {
        out.push_back({M, embedding, sdim > 1});
        return;
    }
    // lift the idempotent along the endomorphism matrices
    Matrix coords = lift(*search.idempotent);
    Matrix Phi(M.field, n, n);
    for (size_t k = 0; k < ed.alg.d; ++k) {
        Scalar c = coords.get(0, k);
        if (!c.is_zero()) Phi = Phi + ed.basis[k].scaled(c);
    }
    Matrix I = Matrix::identity(M.field, n);
    for (int iter = 0; iter < 64; ++iter) {
        Matrix sq = Phi * Phi;
        if (sq == Phi) break;
        // Newton: e <- 3e^2 - 2e^3
        Phi = sq.scaled(Scalar::of(M.field, 3)) - (sq * Phi).scaled(Scalar::of(M.field, 2));
        if (iter == 63) throw InternalError("idempotent lifting did not converge");
    }
    size_t r = Phi.rank();
    if (r == 0 || r == n) throw InternalError("lifted idempotent is trivial");
    descend(Phi.row_space(), Phi.null_rows());
}

bool indec_isomorphic(const ModuleRep& a, const ModuleRep& b) {
    if (a.dim != b.dim) return false;
    auto h1 = hom_space(a, b);
    if (h1.empty()) return false;
    auto h2 = hom_space(b, a);
    if (h2.empty()) return false;
    for (const auto& phi : h1)
        for (const auto& psi : h2)
            if ((phi * psi).rank() == a.dim) return true;
    return false;
}

}  // namespace

size_t DecompositionReport::total_summands() const {
    size_t n = 0;
    for (const auto& c : classes) n += c.multiplicity;
    return n;
}

DecompositionReport decompose(const ModuleRep& m, uint64_t seed) {
    if (m.dim > 600) throw DimensionTooLarge("decompose guarded at dim 600");
    std::vector<Indec> parts;
    split_recurse(m, Matrix::identity(m.field, m.dim), seed, parts);

    DecompositionReport rep;
    rep.field = m.field;
    rep.dim = m.dim;
    rep.seed = seed;
    std::vector<int> cls(parts.size(), -1);
    for (size_t i = 0; i < parts.size(); ++i) {
        if (cls[i] >= 0) continue;
        cls[i] = static_cast<int>(rep.classes.size());
        SummandClass c;
        c.rep = parts[i].rep;
        c.multiplicity = 1;
        c.embeddings.push_back(parts[i].embedding);
        for (size_t j = i + 1; j < parts.size(); ++j) {
            if (cls[j] >= 0) continue;
            if (indec_isomorphic(parts[i].rep, parts[j].rep)) {
                cls[j] = cls[i];
                ++c.multiplicity;
                c.embeddings.push_back(parts[j].embedding);
            }
        }
        rep.classes.push_back(std::move(c));
    }
    // certificate: stacked embeddings, verified block-diagonal
    std::vector<Matrix> rows;
    for (const auto& c : rep.classes)
        for (const auto& e : c.embeddings) rows.push_back(e);
    rep.certificate = rows.empty() ? Matrix(m.field, 0, m.dim)
                                   : Matrix::stack(m.field, m.dim, rows);
    if (rep.certificate.rows() == m.dim && m.dim > 0) {
        Matrix P = rep.certificate;
        Matrix Pinv = P.inverse();
        for (const auto& a : m.actions) {
            Matrix conj = P * a * Pinv;
            size_t at = 0;
            for (const auto& c : rep.classes)
                for (size_t k = 0; k < c.multiplicity; ++k) {
                    size_t dd = c.rep.dim;
                    for (size_t i = 0; i < dd; ++i)
                        for (size_t j = 0; j < m.dim; ++j)
                            if ((j < at || j >= at + dd) && !conj.get(at + i, j).is_zero())
                                throw InternalError("certificate is not block diagonal");
                    at += dd;
                }
        }
    } else if (m.dim > 0) {
        throw InternalError("summand dimensions do not fill the module");
    }
    rep.certificate_hash = rep.certificate.hash();
    return rep;
}

std::vector<Matrix> endo_radical(const ModuleRep& m) {
    auto E = hom_space(m, m);
    if (E.empty()) return {};
    EndoData ed = build_endo(m, E);
    Matrix J = radical_coords(ed.alg);
    std::vector<Matrix> out;
    for (size_t k = 0; k < J.rows(); ++k) {
        Matrix phi(m.field, m.dim, m.dim);
        for (size_t i = 0; i < ed.alg.d; ++i) {
            Scalar c = J.get(k, i);
            if (!c.is_zero()) phi = phi + ed.basis[i].scaled(c);
        }
        out.push_back(std::move(phi));
    }
    return out;
}

std::optional<Matrix> find_isomorphism(const ModuleRep& m, const ModuleRep& n, uint64_t seed) {
    m.check_compatible(n);
    if (m.dim != n.dim) return std::nullopt;
    if (m.dim == 0) return Matrix(m.field, 0, 0);
    auto h1 = hom_space(m, n);
    if (h1.empty()) return std::nullopt;
    auto h2 = hom_space(n, m);
    if (h2.empty()) return std::nullopt;

    auto combo = [&](const std::vector<long long>& coeffs) {
        Matrix phi(m.field, m.dim, n.dim);
        for (size_t i = 0; i < h1.size(); ++i)
            phi = phi + h1[i].scaled(Scalar::of(m.field, coeffs[i]));
        return phi;
    };

    Lcg rng(seed);
    size_t trials = 64;
    for (size_t t = 0; t < trials; ++t) {
        std::vector<long long> coeffs(h1.size());
        for (auto& c : coeffs)
            c = m.field.is_rationals() ? static_cast<long long>(rng.below(19)) - 9
                                       : static_cast<long long>(rng.below(m.field.characteristic));
        Matrix phi = combo(coeffs);
        if (phi.invertible()) return phi;
    }
    // exhaustive when the coefficient space is small
    if (!m.field.is_rationals()) {
        double total = 1;
        for (size_t i = 0; i < h1.size() && total <= 1e5; ++i)
            total *= m.field.characteristic;
        if (total <= 1e5) {
            std::vector<long long> coeffs(h1.size(), 0);
            while (true) {
                Matrix phi = combo(coeffs);
                if (!phi.is_zero() && phi.invertible()) return phi;
                size_t at = 0;
                while (at < coeffs.size()) {
                    if (++coeffs[at] < m.field.characteristic) break;
                    coeffs[at] = 0;
                    ++at;
                }
                if (at == coeffs.size()) break;
            }
        }
    }
    // composite-rank route (conclusive for indecomposables)
    for (const auto& phi : h1)
        for (const auto& psi : h2)
            if ((phi * psi).rank() == m.dim) return phi;
    return std::nullopt;
}

bool is_isomorphic(const ModuleRep& m, const ModuleRep& n, uint64_t seed) {
    if (find_isomorphism(m, n, seed)) return true;
    if (m.dim != n.dim) return false;
    // rigorous fallback: match indecomposable summands pairwise
    auto dm = decompose(m, seed);
    auto dn = decompose(n, seed + 1);
    if (dm.classes.size() != dn.classes.size()) return false;
    std::vector<bool> used(dn.classes.size(), false);
    for (const auto& cm : dm.classes) {
        bool matched = false;
        for (size_t j = 0; j < dn.classes.size(); ++j) {
            if (used[j] || dn.classes[j].multiplicity != cm.multiplicity) continue;
            if (indec_isomorphic(cm.rep, dn.classes[j].rep)) {
                used[j] = true;
                matched = true;
                break;
            }
        }
        if (!matched) return false;
    }
    return true;
}

// ------------------------------------------------------ tensor quotient

Matrix TensorQuotient::project(const Matrix& vectors) const {
    Matrix red = vectors;
    if (rel_pivots.size()) {
        Matrix coeff(field, vectors.rows(), rel_pivots.size());
        for (size_t i = 0; i < vectors.rows(); ++i)
            for (size_t k = 0; k < rel_pivots.size(); ++k)
                coeff.set(i, k, vectors.get(i, rel_pivots[k]));
        red = vectors - coeff * relations_rref;
    }
    Matrix out(field, vectors.rows(), complement.size());
    for (size_t i = 0; i < vectors.rows(); ++i)
        for (size_t k = 0; k < complement.size(); ++k) out.set(i, k, red.get(i, complement[k]));
    return out;
}

Matrix TensorQuotient::pure(size_t i, size_t j) const {
    Matrix v(field, 1, dim_m * dim_q);
    v.set_int(0, i * dim_q + j, 1);
    return project(v);
}

Matrix TensorQuotient::induce(const TensorFactorAction& action) const {
    const size_t D = dim_m * dim_q;
    // rows: images of the complement basis vectors under the ambient action
    Matrix rows(field, complement.size(), D);
    for (size_t k = 0; k < complement.size(); ++k) {
        size_t i = complement[k] / dim_q, j = complement[k] % dim_q;
        if (action.side == TensorFactorAction::Side::Q) {
            for (size_t c = 0; c < dim_q; ++c) rows.set(k, i * dim_q + c, action.matrix.get(j, c));
        } else {
            for (size_t c = 0; c < dim_m; ++c) rows.set(k, c * dim_q + j, action.matrix.get(i, c));
        }
    }
    // well-definedness: relation rows must stay inside the relation span
    if (relations_rref.rows()) {
        Matrix rel_img(field, relations_rref.rows(), D);
        for (size_t rr = 0; rr < relations_rref.rows(); ++rr) {
            // apply the one-sided action to the relation row, viewed as dM x dQ
            for (size_t i = 0; i < dim_m; ++i)
                for (size_t j = 0; j < dim_q; ++j) {
                    Scalar v = relations_rref.get(rr, i * dim_q + j);
                    if (v.is_zero()) continue;
                    if (action.side == TensorFactorAction::Side::Q) {
                        for (size_t c = 0; c < dim_q; ++c) {
                            Scalar add = v * action.matrix.get(j, c);
                            if (!add.is_zero())
                                rel_img.set(rr, i * dim_q + c, rel_img.get(rr, i * dim_q + c) + add);
                        }
                    } else {
                        for (size_t c = 0; c < dim_m; ++c) {
                            Scalar add = v * action.matrix.get(i, c);
                            if (!add.is_zero())
                                rel_img.set(rr, c * dim_q + j, rel_img.get(rr, c * dim_q + j) + add);
                        }
                    }
                }
        }
        if (!project(rel_img).is_zero())
            throw ActionsIncompatible("action does not preserve the tensor relations");
    }
    return project(rows);
}

TensorQuotient tensor_over_subalgebra(FieldSpec f, size_t dim_m, size_t dim_q,
                                      const std::vector<std::pair<Matrix, Matrix>>& relation_pairs) {
    TensorQuotient tq;
    tq.field = f;
    tq.dim_m = dim_m;
    tq.dim_q = dim_q;
    const size_t D = dim_m * dim_q;
    std::vector<Matrix> rel_blocks;
    Matrix im = Matrix::identity(f, dim_m), iq = Matrix::identity(f, dim_q);
    for (const auto& [am, aq] : relation_pairs) {
        if (am.rows() != dim_m || aq.rows() != dim_q)
            throw ActionsIncompatible("relation pair dimension mismatch");
        rel_blocks.push_back(am.kron(iq) - im.kron(aq));
    }
    Matrix rel = rel_blocks.empty() ? Matrix(f, 0, D) : Matrix::stack(f, D, rel_blocks);
    std::vector<size_t> piv;
    Matrix rr = rel.rref(&piv);
    tq.relations_rref = rr.submatrix(0, 0, piv.size(), D);
    tq.rel_pivots = piv;
    std::vector<bool> is_piv(D, false);
    for (size_t p : piv) is_piv[p] = true;
    for (size_t c = 0; c < D; ++c)
        if (!is_piv[c]) tq.complement.push_back(c);
    return tq;
}

ModuleRep tensor_module(const TensorQuotient& tq, const std::string& algebra_key,
                        const std::vector<std::string>& gen_names,
                        const std::vector<TensorFactorAction>& residual_actions) {
    ModuleRep m;
    m.algebra_key = algebra_key;
    m.gen_names = gen_names;
    m.field = tq.field;
    m.dim = tq.dim();
    for (const auto& act : residual_actions) m.actions.push_back(tq.induce(act));
    return m;
}

}  // namespace wbr
