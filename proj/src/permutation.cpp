#include "wbr/permutation.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace wbr {

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
    std::vector<bool> seen(images_.size(), false);
    for (int v : images_) {
        if (v < 1 || v > static_cast<int>(images_.size()) || seen[v - 1])
            throw DegreeMismatch("image list is not a bijection");
        seen[v - 1] = true;
    }
}

Permutation Permutation::identity(int n) {
    std::vector<int> im(n);
    std::iota(im.begin(), im.end(), 1);
    return Permutation(im);
}

Permutation Permutation::transposition(int n, int a, int b) {
    if (a < 1 || b < 1 || a > n || b > n || a == b)
        throw IndexOutOfRange("bad transposition indices");
    auto p = identity(n);
    std::swap(p.images_[a - 1], p.images_[b - 1]);
    return p;
}

int Permutation::operator()(int i) const {
    if (i < 1 || i > degree()) throw IndexOutOfRange("permutation applied out of range");
    return images_[i - 1];
}

Permutation Permutation::compose(const Permutation& o) const {
    if (degree() != o.degree()) throw DegreeMismatch("composing permutations of different degree");
    std::vector<int> im(images_.size());
    for (size_t i = 0; i < images_.size(); ++i) im[i] = o.images_[images_[i] - 1];
    Permutation p;
    p.images_ = std::move(im);
    return p;
}

Permutation Permutation::inverse() const {
    std::vector<int> im(images_.size());
    for (size_t i = 0; i < images_.size(); ++i) im[images_[i] - 1] = static_cast<int>(i) + 1;
    Permutation p;
    p.images_ = std::move(im);
    return p;
}

int Permutation::sign() const {
    std::vector<bool> seen(images_.size(), false);
    int sgn = 1;
    for (size_t i = 0; i < images_.size(); ++i) {
        if (seen[i]) continue;
        size_t j = i, len = 0;
        while (!seen[j]) {
            seen[j] = true;
            j = static_cast<size_t>(images_[j] - 1);
            ++len;
        }
        if (len % 2 == 0) sgn = -sgn;
    }
    return sgn;
}

bool Permutation::is_identity() const {
    for (size_t i = 0; i < images_.size(); ++i)
        if (images_[i] != static_cast<int>(i) + 1) return false;
    return true;
}

std::string Permutation::to_string() const {
    std::ostringstream os;
    os << '[';
    for (size_t i = 0; i < images_.size(); ++i) {
        if (i) os << ',';
        os << images_[i];
    }
    os << ']';
    return os.str();
}

Permutation Permutation::parse(const std::string& text, int degree) {
    std::string s = text;
    s.erase(std::remove_if(s.begin(), s.end(), [](char c) { return c == ' ' && false; }), s.end());
    if (s.empty()) throw ParseError("empty permutation literal");
    if (s[0] == '[') {
        if (s.back() != ']') throw ParseError("unterminated one-line permutation '" + text + "'");
        std::vector<int> im;
        std::istringstream is(s.substr(1, s.size() - 2));
        std::string tok;
        while (std::getline(is, tok, ',')) {
            try {
                im.push_back(std::stoi(tok));
            } catch (const std::exception&) {
                throw ParseError("bad entry '" + tok + "' in permutation");
            }
        }
        if (degree > 0 && static_cast<int>(im.size()) != degree)
            throw DegreeMismatch("one-line permutation has wrong degree");
        return Permutation(im);
    }
    if (s[0] == '(') {
        auto p = identity(degree);
        size_t i = 0;
        while (i < s.size()) {
            if (s[i] != '(') throw ParseError("expected '(' in cycle notation at offset " +
                                              std::to_string(i));
            size_t close = s.find(')', i);
            if (close == std::string::npos) throw ParseError("unterminated cycle");
            std::istringstream is(s.substr(i + 1, close - i - 1));
            std::vector<int> cyc;
            int v;
            while (is >> v) cyc.push_back(v);
            if (cyc.size() > 1) {
                auto c = identity(degree);
                for (size_t k = 0; k < cyc.size(); ++k) {
                    int from = cyc[k], to = cyc[(k + 1) % cyc.size()];
                    if (from < 1 || from > degree) throw ParseError("cycle entry out of range");
                    c.images_[from - 1] = to;
                }
                Permutation chk(c.images_);  // validates bijection
                p = p.compose(chk);
            }
            i = close + 1;
        }
        return p;
    }
    throw ParseError("permutation must be cycle or one-line notation, got '" + text + "'");
}

std::vector<int> Permutation::adjacent_word() const {
    // Bubble-sort the image list; recorded swaps multiply to the permutation.
    std::vector<int> im = images_;
    std::vector<int> word;
    for (size_t i = 0; i + 1 < im.size(); ++i)
        for (size_t j = 0; j + 1 < im.size() - i; ++j)
            if (im[j] > im[j + 1]) {
                std::swap(im[j], im[j + 1]);
                word.push_back(static_cast<int>(j) + 1);
            }
    // Position swaps pre-compose, so the recorded order is already the
    // left-to-right word: σ = s_{j1}·s_{j2}·...·s_{jm}.
    return word;
}

std::vector<Permutation> enumerate_symmetric_group(int a) {
    if (a < 0 || a > 8) throw DegreeTooLarge("enumerate_symmetric_group guarded at degree 8");
    std::vector<int> im(a);
    std::iota(im.begin(), im.end(), 1);
    std::vector<Permutation> out;
    do {
        out.push_back(Permutation(im));
    } while (std::next_permutation(im.begin(), im.end()));
    return out;
}

std::vector<ProductPermutation> enumerate_product_group(int a, int b) {
    auto ga = enumerate_symmetric_group(a);
    auto gb = enumerate_symmetric_group(b);
    std::vector<ProductPermutation> out;
    out.reserve(ga.size() * gb.size());
    for (const auto& x : ga)
        for (const auto& y : gb) out.push_back({x, y});
    return out;
}

std::vector<Permutation> young_subgroup_generators(int n, const std::vector<int>& shape) {
    std::vector<Permutation> gens;
    int at = 0;
    for (int part : shape) {
        for (int i = 1; i < part; ++i)
            gens.push_back(Permutation::transposition(n, at + i, at + i + 1));
        at += part;
    }
    if (at > n) throw SizeMismatch("shape exceeds degree");
    return gens;
}

std::vector<Permutation> generated_subgroup(int n, const std::vector<Permutation>& gens) {
    std::set<Permutation> seen;
    std::vector<Permutation> todo{Permutation::identity(n)};
    seen.insert(todo[0]);
    for (const auto& g : gens)
        if (g.degree() != n) throw DegreeMismatch("generator degree mismatch");
    while (!todo.empty()) {
        Permutation cur = todo.back();
        todo.pop_back();
        for (const auto& g : gens) {
            Permutation nxt = cur.compose(g);
            if (seen.insert(nxt).second) todo.push_back(nxt);
        }
    }
    return {seen.begin(), seen.end()};
}

std::vector<ProductPermutation> generated_product_subgroup(
    int a, int b, const std::vector<ProductPermutation>& gens) {
    std::set<ProductPermutation> seen;
    ProductPermutation id{Permutation::identity(a), Permutation::identity(b)};
    std::vector<ProductPermutation> todo{id};
    seen.insert(id);
    while (!todo.empty()) {
        auto cur = todo.back();
        todo.pop_back();
        for (const auto& g : gens) {
            auto nxt = cur.compose(g);
            if (seen.insert(nxt).second) todo.push_back(nxt);
        }
    }
    return {seen.begin(), seen.end()};
}

std::vector<Permutation> cosets(int n, const std::vector<Permutation>& subgroup_gens,
                                CosetSide side) {
    auto group = enumerate_symmetric_group(n);
    auto sub = generated_subgroup(n, subgroup_gens);
    std::set<Permutation> covered;
    std::vector<Permutation> reps;
    for (const auto& g : group) {  // lexicographic order => minimal reps first
        if (covered.count(g)) continue;
        reps.push_back(g);
        for (const auto& h : sub)
            covered.insert(side == CosetSide::Right ? h.compose(g) : g.compose(h));
    }
    return reps;
}

std::vector<ProductPermutation> product_cosets(
    int a, int b, const std::vector<ProductPermutation>& subgroup_elements) {
    auto group = enumerate_product_group(a, b);
    std::set<ProductPermutation> covered;
    std::vector<ProductPermutation> reps;
    for (const auto& g : group) {
        if (covered.count(g)) continue;
        reps.push_back(g);
        for (const auto& h : subgroup_elements) covered.insert(h.compose(g));
    }
    return reps;
}

namespace {

// Orbit sizes of a permutation group on the given letters, listed by
// minimal letter.
std::vector<int> orbit_sizes(const std::vector<int>& letters,
                             const std::vector<Permutation>& elements) {
    std::vector<int> sizes;
    std::set<int> remaining(letters.begin(), letters.end());
    while (!remaining.empty()) {
        int s = *remaining.begin();
        std::set<int> orbit{s};
        std::vector<int> todo{s};
        while (!todo.empty()) {
            int x = todo.back();
            todo.pop_back();
            for (const auto& g : elements) {
                int y = g(x);
                if (orbit.insert(y).second) todo.push_back(y);
            }
        }
        for (int x : orbit) remaining.erase(x);
        sizes.push_back(static_cast<int>(orbit.size()));
    }
    return sizes;
}

}  // namespace

std::vector<DoubleCoset> double_cosets(int a, int b,
                                       const std::vector<ProductPermutation>& h_elements,
                                       const std::vector<ProductPermutation>& l_elements,
                                       const std::vector<ProductPermutation>& stab_elements,
                                       const std::vector<int>& left_letters,
                                       const std::vector<int>& right_letters) {
    auto group = enumerate_product_group(a, b);
    std::set<ProductPermutation> gset(group.begin(), group.end());
    for (const auto& h : h_elements)
        if (!gset.count(h)) throw NotASubgroupElement("H element outside G");
    for (const auto& l : l_elements)
        if (!gset.count(l)) throw NotASubgroupElement("L element outside G");
    std::set<ProductPermutation> hset(h_elements.begin(), h_elements.end());

    std::set<ProductPermutation> covered;
    std::vector<DoubleCoset> out;
    for (const auto& g : group) {
        if (covered.count(g)) continue;
        std::set<ProductPermutation> dc;
        for (const auto& h : h_elements)
            for (const auto& l : l_elements) dc.insert(h.compose(g).compose(l));
        covered.insert(dc.begin(), dc.end());

        DoubleCoset d;
        d.representative = g;
        d.size = dc.size();
        // x ∈ stab ∩ g^{-1} H g  <=>  g·x·g^{-1} ∈ H.
        auto ginv = g.inverse();
        std::vector<Permutation> left_part, right_part;
        for (const auto& x : stab_elements) {
            if (hset.count(g.compose(x).compose(ginv))) {
                left_part.push_back(x.left);
                right_part.push_back(x.right);
            }
        }
        d.gamma.parts = orbit_sizes(left_letters, left_part);
        d.delta.parts = orbit_sizes(right_letters, right_part);
        out.push_back(std::move(d));
    }
    return out;
}

std::vector<DoubleCoset> double_cosets(int a, int b,
                                       const std::vector<ProductPermutation>& h_elements,
                                       const std::vector<ProductPermutation>& l_elements) {
    std::vector<int> la(a), rb(b);
    for (int i = 0; i < a; ++i) la[i] = i + 1;
    for (int i = 0; i < b; ++i) rb[i] = i + 1;
    return double_cosets(a, b, h_elements, l_elements, enumerate_product_group(a, b), la, rb);
}

std::vector<ProductPermutation> stabilizer_pairs(const Permutation& v_as_perm) {
    int l = v_as_perm.degree();
    std::vector<ProductPermutation> out;
    auto vinv = v_as_perm.inverse();
    for (const auto& sigma : enumerate_symmetric_group(l)) {
        Permutation tau = vinv.compose(sigma).compose(v_as_perm);
        out.push_back({sigma, tau});
    }
    return out;
}

}  // namespace wbr
