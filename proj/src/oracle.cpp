// Naive reference implementations that arbitrate every fast formula.
#include "tmc/oracle.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "tmc/errors.hpp"

namespace tmc {

namespace {

// DFS over vertices in index order, counting proper completions
Int count_colorings_from(const Graph& g, std::vector<int>& color, int v, int k) {
    int n = g.num_vertices();
    if (v == n) return Int(1);
    Int total(0);
    for (int c = 1; c <= k; ++c) {
        bool ok = true;
        for (int u = 0; u < v; ++u)
            if (g.has_edge(u, v) && color[u] == c) {
                ok = false;
                break;
            }
        if (!ok) continue;
        color[v] = c;
        total += count_colorings_from(g, color, v + 1, k);
    }
    color[v] = 0;
    return total;
}

}  // namespace

std::vector<std::vector<int>> enumerate_proper_colorings(const Graph& g, int k) {
    if (k < 0) throw InternalError("negative color count");
    int n = g.num_vertices();
    std::vector<std::vector<int>> out;
    std::vector<int> color(n, 0);
    auto rec = [&](auto&& self, int v) -> void {
        if (v == n) {
            out.push_back(color);
            return;
        }
        for (int c = 1; c <= k; ++c) {
            bool ok = true;
            for (int u = 0; u < v; ++u)
                if (g.has_edge(u, v) && color[u] == c) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            color[v] = c;
            self(self, v + 1);
        }
        color[v] = 0;
    };
    rec(rec, 0);
    return out;
}

Int count_proper_colorings(const Graph& g, int k, bool parallel) {
    int n = g.num_vertices();
    if (n == 0) return Int(1);
    if (!parallel) {
        std::vector<int> color(n, 0);
        return count_colorings_from(g, color, 0, k);
    }
    Int total(0);
#ifdef _OPENMP
#pragma omp parallel
    {
        Int local(0);
#pragma omp for schedule(dynamic) nowait
        for (int c = 1; c <= k; ++c) {
            std::vector<int> color(n, 0);
            color[0] = c;
            local += count_colorings_from(g, color, 1, k);
        }
#pragma omp critical
        total += local;
    }
#else
    std::vector<int> color(n, 0);
    total = count_colorings_from(g, color, 0, k);
#endif
    return total;
}

namespace {

std::string graph_key(const Graph& g) {
    std::string key = std::to_string(g.num_vertices());
    for (const auto& [u, v] : g.edges())
        key += " " + std::to_string(u) + "," + std::to_string(v);
    return key;
}

IntPoly chromatic_rec(const Graph& g, std::map<std::string, IntPoly>& memo) {
    if (g.num_edges() == 0) return IntPoly::monomial(g.num_vertices(), Int(1));
    std::string key = graph_key(g);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    Edge e = g.edges().front();
    IntPoly r = chromatic_rec(delete_edge(g, e), memo) - chromatic_rec(contract_edge(g, e), memo);
    memo.emplace(std::move(key), r);
    return r;
}

}  // namespace

IntPoly chromatic_polynomial(const Graph& g) {
    std::map<std::string, IntPoly> memo;
    return chromatic_rec(g, memo);
}

namespace {

void check_partial_proper(const Graph& g, const PartialColoring& fixed) {
    for (const auto& [v, c] : fixed) {
        if (v < 0 || v >= g.num_vertices()) throw InternalError("fixed vertex out of range");
        if (c < 1) throw InternalError("fixed colors must be >= 1");
    }
    for (const auto& [u, v] : g.edges()) {
        auto iu = fixed.find(u), iv = fixed.find(v);
        if (iu != fixed.end() && iv != fixed.end() && iu->second == iv->second)
            throw InternalError("fixed coloring is not proper on its induced subgraph");
    }
}

Int count_restricted_completions(const Graph& g, const PartialColoring& fixed, int k) {
    int n = g.num_vertices();
    std::vector<int> color(n, 0);
    std::vector<int> free_vs;
    for (int v = 0; v < n; ++v) {
        auto it = fixed.find(v);
        if (it != fixed.end()) color[v] = it->second;
        else free_vs.push_back(v);
    }
    auto rec = [&](auto&& self, size_t idx) -> Int {
        if (idx == free_vs.size()) return Int(1);
        int v = free_vs[idx];
        Int total(0);
        for (int c = 1; c <= k; ++c) {
            bool ok = true;
            for (int u : g.neighbors(v))
                if (color[u] == c) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            color[v] = c;
            total += self(self, idx + 1);
            color[v] = 0;
        }
        return total;
    };
    return rec(rec, 0);
}

}  // namespace

IntPoly restricted_chromatic(const Graph& g, const PartialColoring& fixed) {
    check_partial_proper(g, fixed);
    int n = g.num_vertices();
    int s = n - static_cast<int>(fixed.size());
    int kp = 0;
    for (const auto& [v, c] : fixed) kp = std::max(kp, c);
    int start = std::max(n, kp);
    std::vector<std::pair<Int, Int>> pts;
    for (int k = start; k <= start + s; ++k)
        pts.push_back({Int(k), count_restricted_completions(g, fixed, k)});
    return interpolate(pts, s);
}

Int count_acyclic_orientations(const Graph& g) {
    int m = g.num_edges();
    if (m > 20) throw GuardError("orientation enumeration capped at 20 edges");
    const auto& edges = g.edges();
    int n = g.num_vertices();
    Int total(0);
    for (unsigned long bits = 0; bits < (1ul << m); ++bits) {
        std::vector<std::vector<int>> out(n);
        std::vector<int> indeg(n, 0);
        for (int t = 0; t < m; ++t) {
            auto [a, b] = edges[t];
            if (bits >> t & 1) std::swap(a, b);
            out[a].push_back(b);
            ++indeg[b];
        }
        // Kahn's algorithm
        std::vector<int> queue;
        for (int v = 0; v < n; ++v)
            if (indeg[v] == 0) queue.push_back(v);
        int seen = 0;
        while (!queue.empty()) {
            int v = queue.back();
            queue.pop_back();
            ++seen;
            for (int u : out[v])
                if (--indeg[u] == 0) queue.push_back(u);
        }
        if (seen == n) total += 1;
    }
    return total;
}

Int count_compatible_pairs_restricted(const Graph& g, const PartialColoring& fixed, int k) {
    check_partial_proper(g, fixed);
    for (const auto& [v, c] : fixed)
        if (c > k) throw InternalError("k below a fixed color");
    // identify equally colored fixed vertices: node = anchor(color) or free(v)
    int n = g.num_vertices();
    std::map<std::pair<int, int>, int> node_ids;  // (0, color) or (1, vertex) -> id
    auto node_of = [&](int v) {
        auto it = fixed.find(v);
        std::pair<int, int> key =
            it != fixed.end() ? std::make_pair(0, it->second) : std::make_pair(1, v);
        return node_ids.try_emplace(key, static_cast<int>(node_ids.size())).first->second;
    };
    for (int v = 0; v < n; ++v) node_of(v);
    std::set<std::pair<int, int>> edge_set;
    for (const auto& [u, v] : g.edges()) {
        int a = node_of(u), b = node_of(v);
        if (a == b) throw InternalError("improper fixed coloring under identification");
        edge_set.insert({std::min(a, b), std::max(a, b)});
    }
    int nn = static_cast<int>(node_ids.size());
    std::vector<std::pair<int, int>> cedges(edge_set.begin(), edge_set.end());
    int m = static_cast<int>(cedges.size());
    if (m > 20) throw GuardError("orientation enumeration capped at 20 edges");
    // fixed node values; -1 marks free nodes
    std::vector<int> value(nn, -1);
    std::vector<int> free_nodes;
    for (const auto& [key, id] : node_ids)
        if (key.first == 0) value[id] = key.second;
    for (const auto& [key, id] : node_ids)
        if (key.first == 1) free_nodes.push_back(id);
    std::sort(free_nodes.begin(), free_nodes.end());

    Int total(0);
    std::vector<std::pair<int, int>> arcs(m);
    for (unsigned long bits = 0; bits < (1ul << m); ++bits) {
        std::vector<std::vector<int>> out(nn);
        std::vector<int> indeg(nn, 0);
        for (int t = 0; t < m; ++t) {
            auto [a, b] = cedges[t];
            if (bits >> t & 1) std::swap(a, b);
            arcs[t] = {a, b};
            out[a].push_back(b);
            ++indeg[b];
        }
        std::vector<int> queue;
        for (int v = 0; v < nn; ++v)
            if (indeg[v] == 0) queue.push_back(v);
        int seen = 0;
        while (!queue.empty()) {
            int v = queue.back();
            queue.pop_back();
            ++seen;
            for (int u : out[v])
                if (--indeg[u] == 0) queue.push_back(u);
        }
        if (seen != nn) continue;
        // count weakly monotone value assignments on free nodes
        auto rec = [&](auto&& self, size_t idx) -> Int {
            if (idx == free_nodes.size()) {
                for (const auto& [a, b] : arcs)
                    if (value[a] > value[b]) return Int(0);
                return Int(1);
            }
            Int sub(0);
            int v = free_nodes[idx];
            for (int c = 1; c <= k; ++c) {
                value[v] = c;
                sub += self(self, idx + 1);
            }
            value[v] = -1;
            return sub;
        };
        total += rec(rec, 0);
    }
    return total;
}

FullTransferMatrix full_transfer_matrix(const Graph& g, int k) {
    IntPoly chi = chromatic_polynomial(g);
    Int size = chi.eval(Int(k));
    if (size > 20000) throw GuardError("full transfer matrix larger than 20000");
    FullTransferMatrix m;
    m.k = k;
    m.colorings = enumerate_proper_colorings(g, k);
    size_t d = m.colorings.size();
    m.adj.assign(d, std::vector<unsigned char>(d, 0));
    int n = g.num_vertices();
    for (size_t i = 0; i < d; ++i)
        for (size_t j = 0; j < d; ++j) {
            bool differ = true;
            for (int v = 0; v < n; ++v)
                if (m.colorings[i][v] == m.colorings[j][v]) {
                    differ = false;
                    break;
                }
            m.adj[i][j] = differ ? 1 : 0;
        }
    return m;
}

namespace {

std::vector<Int> apply_transfer(const FullTransferMatrix& m, const std::vector<Int>& v) {
    size_t d = m.adj.size();
    std::vector<Int> out(d, Int(0));
#ifdef _OPENMP
#pragma omp parallel for schedule(static)
#endif
    for (long long i = 0; i < static_cast<long long>(d); ++i) {
        Int acc(0);
        for (size_t j = 0; j < d; ++j)
            if (m.adj[i][j]) acc += v[j];
        out[i] = acc;
    }
    return out;
}

}  // namespace

Int count_colorings_path(const Graph& g, int n, int k) {
    if (n < 1) throw InternalError("path length must be >= 1");
    FullTransferMatrix m = full_transfer_matrix(g, k);
    std::vector<Int> v(m.colorings.size(), Int(1));
    for (int step = 1; step < n; ++step) v = apply_transfer(m, v);
    Int total(0);
    for (const auto& x : v) total += x;
    return total;
}

Int count_colorings_cycle(const Graph& g, int n, int k) {
    if (n < 3) throw InternalError("cycle length must be >= 3");
    FullTransferMatrix m = full_transfer_matrix(g, k);
    size_t d = m.adj.size();
    Int total(0);
    for (size_t i = 0; i < d; ++i) {
        std::vector<Int> v(d, Int(0));
        v[i] = 1;
        for (int step = 0; step < n; ++step) v = apply_transfer(m, v);
        total += v[i];
    }
    return total;
}

Int count_layered_colorings(const Graph& g, const std::vector<int>& layer1, int n, int k,
                            const std::vector<Rgs>& target_partitions) {
    if (n < 1) throw InternalError("layer count must be >= 1");
    FullTransferMatrix m = full_transfer_matrix(g, k);
    size_t d = m.colorings.size();
    std::vector<Int> v(d, Int(0));
    bool found = false;
    for (size_t i = 0; i < d; ++i)
        if (m.colorings[i] == layer1) {
            v[i] = 1;
            found = true;
            break;
        }
    if (!found) throw InternalError("layer-1 coloring is not proper for this graph");
    for (int step = 1; step < n; ++step) v = apply_transfer(m, v);
    std::set<Rgs> targets(target_partitions.begin(), target_partitions.end());
    Int total(0);
    for (size_t i = 0; i < d; ++i) {
        if (v[i] == 0) continue;
        if (!targets.empty() && !targets.count(canon_rgs(m.colorings[i]))) continue;
        total += v[i];
    }
    return total;
}

Int count_two_layer_by_partition(const Graph& g, int k, const std::vector<Rgs>& from,
                                 const std::vector<Rgs>& to) {
    FullTransferMatrix m = full_transfer_matrix(g, k);
    size_t d = m.colorings.size();
    std::set<Rgs> fs(from.begin(), from.end()), ts(to.begin(), to.end());
    std::vector<Int> v(d, Int(0));
    for (size_t i = 0; i < d; ++i)
        if (fs.count(canon_rgs(m.colorings[i]))) v[i] = 1;
    v = apply_transfer(m, v);
    Int total(0);
    for (size_t i = 0; i < d; ++i)
        if (ts.count(canon_rgs(m.colorings[i]))) total += v[i];
    return total;
}

}  // namespace tmc
