#include "wbr/combinat.hpp"

#include "wbr/scalar.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

namespace wbr {

Partition::Partition(std::vector<int> p) : parts(std::move(p)) {
    for (size_t i = 0; i < parts.size(); ++i) {
        if (parts[i] <= 0) throw SizeMismatch("partition parts must be positive");
        if (i + 1 < parts.size() && parts[i] < parts[i + 1])
            throw SizeMismatch("partition parts must be weakly decreasing");
    }
}

int Partition::size() const { return std::accumulate(parts.begin(), parts.end(), 0); }

Partition Partition::conjugate() const {
    std::vector<int> c;
    for (int j = 1; parts.empty() ? false : j <= parts[0]; ++j) {
        int cnt = 0;
        for (int p : parts)
            if (p >= j) ++cnt;
        c.push_back(cnt);
    }
    return Partition(c);
}

std::string Partition::to_string() const {
    std::ostringstream os;
    os << '(';
    for (size_t i = 0; i < parts.size(); ++i) {
        if (i) os << ',';
        os << parts[i];
    }
    os << ')';
    return os.str();
}

Partition Partition::parse(const std::string& text) {
    if (text.size() < 2 || text.front() != '(' || text.back() != ')')
        throw ParseError("partition must look like (p1,p2,...), got '" + text + "'");
    std::string inner = text.substr(1, text.size() - 2);
    std::vector<int> parts;
    if (!inner.empty()) {
        std::istringstream is(inner);
        std::string tok;
        while (std::getline(is, tok, ',')) {
            try {
                size_t pos = 0;
                int v = std::stoi(tok, &pos);
                if (pos != tok.size()) throw ParseError("");
                parts.push_back(v);
            } catch (const std::exception&) {
                throw ParseError("bad partition part '" + tok + "'");
            }
        }
    }
    try {
        return Partition(parts);
    } catch (const SizeMismatch& e) {
        throw ParseError(std::string("invalid partition: ") + e.what());
    }
}

int Composition::size() const { return std::accumulate(parts.begin(), parts.end(), 0); }

bool Bipartition::operator<(const Bipartition& o) const {
    if (left.parts != o.left.parts) return left.parts < o.left.parts;
    return right.parts < o.right.parts;
}

std::string Bipartition::to_string() const {
    return "(" + left.to_string() + "|" + right.to_string() + ")";
}

Bipartition Bipartition::parse(const std::string& text) {
    if (text.size() < 2 || text.front() != '(' || text.back() != ')')
        throw ParseError("bipartition must look like ((..)|(..)), got '" + text + "'");
    std::string inner = text.substr(1, text.size() - 2);
    size_t bar = inner.find('|');
    if (bar == std::string::npos) throw ParseError("bipartition needs '|' in '" + text + "'");
    return {Partition::parse(inner.substr(0, bar)), Partition::parse(inner.substr(bar + 1))};
}

std::vector<Partition> partitions_of(int n) {
    if (n < 0) throw SizeMismatch("partitions_of needs n >= 0");
    std::vector<Partition> out;
    std::vector<int> cur;
    std::function<void(int, int)> rec = [&](int rest, int maxpart) {
        if (rest == 0) {
            out.emplace_back(cur);
            return;
        }
        for (int p = std::min(rest, maxpart); p >= 1; --p) {
            cur.push_back(p);
            rec(rest - p, p);
            cur.pop_back();
        }
    };
    rec(n, n);
    return out;  // reverse-lexicographic: (n) first, (1^n) last
}

bool dominance_leq(const Partition& lo, const Partition& hi) { return dominates(hi, lo); }

bool dominates(const Partition& hi, const Partition& lo) {
    if (hi.size() != lo.size()) throw SizeMismatch("dominance needs equal sizes");
    int sh = 0, sl = 0;
    size_t k = std::max(hi.parts.size(), lo.parts.size());
    for (size_t i = 0; i < k; ++i) {
        sh += i < hi.parts.size() ? hi.parts[i] : 0;
        sl += i < lo.parts.size() ? lo.parts[i] : 0;
        if (sh < sl) return false;
    }
    return true;
}

bool bipartition_dominates(const Bipartition& hi, const Bipartition& lo) {
    return dominates(hi.left, lo.left) && dominates(hi.right, lo.right);
}

bool is_p_regular(const Partition& p, uint32_t prime) {
    if (!is_prime_u32(prime)) throw NonPrimeCharacteristic("p-regularity needs a prime");
    size_t run = 1;
    for (size_t i = 1; i < p.parts.size(); ++i) {
        if (p.parts[i] == p.parts[i - 1]) {
            if (++run >= prime) return false;
        } else {
            run = 1;
        }
    }
    return true;
}

std::vector<int> Tabloid::row_word(int n) const {
    std::vector<int> w(n, -1);
    for (size_t r = 0; r < rows.size(); ++r)
        for (int e : rows[r]) w[e - 1] = static_cast<int>(r);
    return w;
}

std::vector<Tabloid> tabloids(const std::vector<int>& shape) {
    int n = std::accumulate(shape.begin(), shape.end(), 0);
    std::vector<Tabloid> out;
    // Enumerate row words in lexicographic order directly.
    std::vector<int> word(n, -1);
    std::vector<int> remaining(shape.begin(), shape.end());
    std::function<void(int)> rec = [&](int e) {
        if (e == n) {
            Tabloid t;
            t.rows.assign(shape.size(), {});
            for (int i = 0; i < n; ++i) t.rows[word[i]].push_back(i + 1);
            out.push_back(std::move(t));
            return;
        }
        for (size_t r = 0; r < shape.size(); ++r) {
            if (remaining[r] == 0) continue;
            --remaining[r];
            word[e] = static_cast<int>(r);
            rec(e + 1);
            ++remaining[r];
        }
    };
    rec(0);
    return out;
}

Tableau Tableau::initial(const Partition& shape) {
    Tableau t;
    t.shape = shape;
    int e = 1;
    for (int p : shape.parts) {
        std::vector<int> row;
        for (int j = 0; j < p; ++j) row.push_back(e++);
        t.entries.push_back(std::move(row));
    }
    return t;
}

Tabloid Tableau::tabloid() const {
    Tabloid t;
    for (const auto& row : entries) {
        auto r = row;
        std::sort(r.begin(), r.end());
        t.rows.push_back(std::move(r));
    }
    return t;
}

std::vector<std::vector<int>> Tableau::columns() const {
    std::vector<std::vector<int>> cols;
    if (entries.empty()) return cols;
    size_t w = entries[0].size();
    cols.resize(w);
    for (const auto& row : entries)
        for (size_t j = 0; j < row.size(); ++j) cols[j].push_back(row[j]);
    return cols;
}

bool Tableau::is_standard() const {
    for (size_t i = 0; i < entries.size(); ++i)
        for (size_t j = 0; j < entries[i].size(); ++j) {
            if (j + 1 < entries[i].size() && entries[i][j] > entries[i][j + 1]) return false;
            if (i + 1 < entries.size() && j < entries[i + 1].size() &&
                entries[i][j] > entries[i + 1][j])
                return false;
        }
    return true;
}

std::vector<Tableau> standard_tableaux(const Partition& shape) {
    std::vector<Tableau> out;
    int n = shape.size();
    Tableau t;
    t.shape = shape;
    t.entries.resize(shape.parts.size());
    // Place 1..n one at a time at any addable cell keeping rows/columns increasing.
    std::function<void(int)> rec = [&](int e) {
        if (e > n) {
            out.push_back(t);
            return;
        }
        for (size_t r = 0; r < shape.parts.size(); ++r) {
            size_t c = t.entries[r].size();
            if (static_cast<int>(c) >= shape.parts[r]) continue;
            if (r > 0 && t.entries[r - 1].size() <= c) continue;
            t.entries[r].push_back(e);
            rec(e + 1);
            t.entries[r].pop_back();
        }
    };
    rec(1);
    return out;
}

long long standard_tableaux_count(const Partition& shape) {
    return static_cast<long long>(standard_tableaux(shape).size());
}

long long factorial(int n) {
    long long r = 1;
    for (int i = 2; i <= n; ++i) r *= i;
    return r;
}

long long binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    long long r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

}  // namespace wbr
