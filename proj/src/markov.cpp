// Markov chains on stacked posets and their order-preserving-map counts.
#include "tmc/markov.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>

#include "tmc/errors.hpp"

namespace tmc {

BasePoset make_base_poset(int m, std::vector<std::vector<bool>> covers) {
    if (m < 1) throw ParseError("poset needs at least one element per level");
    if (static_cast<int>(covers.size()) != m)
        throw ParseError("cover matrix must have m rows");
    for (int p = 0; p < m; ++p) {
        if (static_cast<int>(covers[p].size()) != m)
            throw ParseError("cover matrix must have m columns");
        if (!covers[p][p])
            throw ParseError("cover matrix needs a true diagonal: element " + std::to_string(p + 1) +
                             " must cover its level-1 copy");
    }
    return BasePoset{m, std::move(covers)};
}

BasePoset read_base_poset(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open poset file: " + path);
    int m = 0;
    if (!(in >> m)) throw ParseError("poset file must start with the element count");
    if (m < 1 || m > 64) throw ParseError("poset element count out of range: " + std::to_string(m));
    std::vector<std::vector<bool>> covers(m, std::vector<bool>(m, false));
    for (int p = 0; p < m; ++p)
        for (int q = 0; q < m; ++q) {
            int bit = 0;
            if (!(in >> bit)) throw ParseError("poset file ends inside the cover matrix");
            if (bit != 0 && bit != 1)
                throw ParseError("cover matrix entries must be 0 or 1, got " + std::to_string(bit));
            covers[p][q] = bit != 0;
        }
    return make_base_poset(m, std::move(covers));
}

namespace {

bool joint_initial_segment(const std::vector<int>& b, const std::vector<int>& a) {
    int mx = 0;
    for (int x : a) mx = std::max(mx, x);
    for (int x : b) mx = std::max(mx, x);
    std::vector<char> seen(mx + 1, 0);
    for (int x : a) seen[x] = 1;
    for (int x : b) seen[x] = 1;
    for (int v = 1; v <= mx; ++v)
        if (!seen[v]) return false;
    return true;
}

bool initial_segment(const std::vector<int>& b) {
    return joint_initial_segment(b, b);
}

}  // namespace

std::vector<std::vector<int>> enumerate_base_states(int m) {
    if (m < 1) throw GuardError("base states need m >= 1");
    std::vector<std::vector<int>> states;
    std::vector<int> b(m, 1);
    while (true) {
        if (initial_segment(b)) states.push_back(b);
        int pos = m - 1;
        while (pos >= 0 && b[pos] == m) b[pos--] = 1;
        if (pos < 0) break;
        ++b[pos];
    }
    return states;
}

int state_class_index(const std::vector<std::vector<int>>& states, const std::vector<int>& labels) {
    int t = labels[0];
    for (int x : labels) t = std::min(t, x);
    --t;
    std::vector<int> base(labels);
    for (int& x : base) x -= t;
    auto it = std::find(states.begin(), states.end(), base);
    if (it == states.end()) return -1;
    return static_cast<int>(it - states.begin());
}

TransitionMatrix build_transition_matrix(const BasePoset& p) {
    auto states = enumerate_base_states(p.m);
    int r = static_cast<int>(states.size());
    TransitionMatrix mtx{p.m, states, {}};
    mtx.entries.assign(r, std::vector<Entry>(r));
    std::vector<int> f(p.m, 0);
    for (int i = 0; i < r; ++i) {
        const auto& b = states[i];
        std::fill(f.begin(), f.end(), 0);
        while (true) {
            std::vector<int> a(p.m);
            for (int pos = 0; pos < p.m; ++pos) a[pos] = b[pos] + f[pos];
            bool ok = joint_initial_segment(b, a);
            if (ok)
                for (int pos = 0; pos < p.m && ok; ++pos)
                    for (int q = 0; q < p.m && ok; ++q)
                        if (p.covers[pos][q] && a[pos] < b[q]) ok = false;
            if (ok) {
                int j = state_class_index(states, a);
                if (j >= 0) mtx.entries[i][j][f] += 1;
            }
            int pos = p.m - 1;
            while (pos >= 0 && f[pos] == 2 * p.m - 1) f[pos--] = 0;
            if (pos < 0) break;
            ++f[pos];
        }
    }
    return mtx;
}

Entry structure_formula_entry(const BasePoset& p, int i, int j) {
    auto states = enumerate_base_states(p.m);
    int r = static_cast<int>(states.size());
    if (i < 0 || i >= r || j < 0 || j >= r) throw InternalError("state index out of range");
    const auto& b = states[i];
    const auto& a = states[j];
    int lambda = 0;
    for (int pos = 0; pos < p.m; ++pos)
        for (int q = 0; q < p.m; ++q)
            if (p.covers[pos][q]) lambda = std::max(lambda, b[q] - a[pos]);
    int max_b = *std::max_element(b.begin(), b.end());
    int mu_max = max_b - lambda;
    Entry entry;
    for (int mu = 0; mu <= mu_max; ++mu) {
        Monomial f(p.m);
        for (int pos = 0; pos < p.m; ++pos) f[pos] = a[pos] - b[pos] + lambda + mu;
        entry[f] += 1;
    }
    return entry;
}

namespace {

Int entry_total(const Entry& e) {
    Int total(0);
    for (const auto& [mono, mult] : e) total += mult;
    return total;
}

// multiset product: exponents add, multiplicities multiply; monomials whose
// largest exponent exceeds `bound` are dropped when bound >= 1
Entry entry_product(const Entry& x, const Entry& y, int bound) {
    Entry out;
    for (const auto& [mx, cx] : x)
        for (const auto& [my, cy] : y) {
            Monomial sum(mx.size());
            bool keep = true;
            for (size_t pos = 0; pos < mx.size(); ++pos) {
                sum[pos] = mx[pos] + my[pos];
                if (bound >= 1 && sum[pos] > bound) keep = false;
            }
            if (keep) out[sum] += cx * cy;
        }
    return out;
}

// rows of accumulated monomials pushed through the transition matrix n times,
// starting from x^(b_i) per state; bound prunes as exponents only grow
std::vector<Entry> propagate(const TransitionMatrix& mtx, int n, int bound) {
    int r = static_cast<int>(mtx.states.size());
    std::vector<Entry> v(r);
    for (int i = 0; i < r; ++i) {
        Monomial start(mtx.states[i].begin(), mtx.states[i].end());
        bool keep = true;
        for (int x : start)
            if (bound >= 1 && x > bound) keep = false;
        if (keep) v[i][start] = 1;
    }
    for (int step = 0; step < n; ++step) {
        std::vector<Entry> next(r);
        for (int i = 0; i < r; ++i) {
            if (v[i].empty()) continue;
            for (int j = 0; j < r; ++j) {
                if (mtx.entries[i][j].empty()) continue;
                Entry prod = entry_product(v[i], mtx.entries[i][j], bound);
                for (auto& [mono, mult] : prod) next[j][mono] += mult;
            }
        }
        v = std::move(next);
    }
    return v;
}

}  // namespace

Int count_chains(const TransitionMatrix& mtx, int n) {
    if (n < 0) throw GuardError("chain length exponent must be >= 0");
    int r = static_cast<int>(mtx.states.size());
    std::vector<std::vector<Int>> counts(r, std::vector<Int>(r, Int(0)));
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j) counts[i][j] = entry_total(mtx.entries[i][j]);
    std::vector<Int> v(r, Int(1));
    for (int step = 0; step < n; ++step) {
        std::vector<Int> next(r, Int(0));
        for (int i = 0; i < r; ++i)
            for (int j = 0; j < r; ++j) next[i] += counts[i][j] * v[j];
        v = std::move(next);
    }
    Int total(0);
    for (const auto& x : v) total += x;
    return total;
}

Int count_chains_bounded(const TransitionMatrix& mtx, int n, int k) {
    if (n < 0) throw GuardError("chain length exponent must be >= 0");
    if (k < 1) throw GuardError("label bound must be >= 1");
    auto rows = propagate(mtx, n, k);
    Int total(0);
    for (const auto& row : rows) total += entry_total(row);
    return total;
}

Int count_chains_direct(const BasePoset& p, int n, int bound) {
    if (n < 0) throw GuardError("chain length exponent must be >= 0");
    auto mtx = build_transition_matrix(p);
    int r = static_cast<int>(mtx.states.size());
    auto rec = [&](auto&& self, const std::vector<int>& labels, int i, int depth) -> Int {
        if (depth == n) return Int(1);
        Int total(0);
        for (int j = 0; j < r; ++j)
            for (const auto& [f, mult] : mtx.entries[i][j]) {
                std::vector<int> next(labels);
                bool keep = true;
                for (int pos = 0; pos < p.m; ++pos) {
                    next[pos] += f[pos];
                    if (bound >= 1 && next[pos] > bound) keep = false;
                }
                if (keep) total += mult * self(self, next, j, depth + 1);
            }
        return total;
    };
    Int total(0);
    for (int i = 0; i < r; ++i) {
        bool keep = true;
        for (int x : mtx.states[i])
            if (bound >= 1 && x > bound) keep = false;
        if (keep) total += rec(rec, mtx.states[i], i, 0);
    }
    return total;
}

Int count_surjective_order_preserving(const BasePoset& p, int n, int k) {
    if (n < 0) throw GuardError("chain length exponent must be >= 0");
    if (k < 1) throw GuardError("target size must be >= 1");
    auto mtx = build_transition_matrix(p);
    auto rows = propagate(mtx, n, k);
    Int total(0);
    for (const auto& row : rows)
        for (const auto& [mono, mult] : row) {
            int mx = 0;
            for (int x : mono) mx = std::max(mx, x);
            if (mx == k) total += mult;
        }
    return total;
}

Int brute_force_order_preserving(const BasePoset& p, int n, int k, bool surjective) {
    if (n < 0) throw GuardError("stack height must be >= 0");
    if (k < 1) throw GuardError("target size must be >= 1");
    long cells = static_cast<long>(p.m) * (n + 1);
    double candidates = std::pow(static_cast<double>(k), static_cast<double>(cells));
    if (candidates > 1e8)
        throw GuardError("brute force would enumerate more than 1e8 maps");
    // labels[level * m + pos], odometer enumeration
    std::vector<int> labels(cells, 1);
    Int total(0);
    while (true) {
        bool ok = true;
        for (int level = 0; level + 1 <= n && ok; ++level)
            for (int pos = 0; pos < p.m && ok; ++pos)
                for (int q = 0; q < p.m && ok; ++q)
                    if (p.covers[pos][q] &&
                        labels[(level + 1) * p.m + pos] < labels[level * p.m + q])
                        ok = false;
        if (ok && surjective) {
            std::vector<char> seen(k + 1, 0);
            for (int x : labels) seen[x] = 1;
            for (int v = 1; v <= k && ok; ++v)
                if (!seen[v]) ok = false;
        }
        if (ok) total += 1;
        long pos = cells - 1;
        while (pos >= 0 && labels[pos] == k) labels[pos--] = 1;
        if (pos < 0) break;
        ++labels[pos];
    }
    return total;
}

Int ehrhart_order_polytope(const BasePoset& p, int n, int k) {
    if (k < 0) throw GuardError("dilation factor must be >= 0");
    Int total(0);
    for (int i = 1; i <= k + 1; ++i)
        total += binomial(k + 1, i) * count_surjective_order_preserving(p, n, i);
    return total;
}

}  // namespace tmc
