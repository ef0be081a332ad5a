// Independent-set partition enumeration, automorphism quotient, orbit counting.
#include "tmc/orbits.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "tmc/errors.hpp"

namespace tmc {

std::vector<std::vector<int>> rgs_blocks(const Rgs& rgs) {
    int nb = rgs_block_count(rgs);
    std::vector<std::vector<int>> blocks(nb);
    for (size_t v = 0; v < rgs.size(); ++v) blocks[rgs[v]].push_back(static_cast<int>(v));
    return blocks;
}

int rgs_block_count(const Rgs& rgs) {
    int mx = -1;
    for (int b : rgs) mx = std::max(mx, b);
    return mx + 1;
}

Rgs canon_rgs(const std::vector<int>& part_of_vertex) {
    std::map<int, int> remap;
    Rgs out;
    out.reserve(part_of_vertex.size());
    for (int b : part_of_vertex) {
        auto it = remap.try_emplace(b, static_cast<int>(remap.size())).first;
        out.push_back(it->second);
    }
    return out;
}

std::vector<Rgs> color_orbits(const Graph& g) {
    int n = g.num_vertices();
    std::vector<Rgs> results;
    Rgs rgs(n, 0);
    std::vector<std::vector<int>> blocks;
    auto independent_from = [&](int v, const std::vector<int>& block) {
        for (int u : block)
            if (g.has_edge(u, v)) return false;
        return true;
    };
    auto rec = [&](auto&& self, int v) -> void {
        if (v == n) {
            results.push_back(rgs);
            return;
        }
        for (size_t b = 0; b < blocks.size(); ++b) {
            if (!independent_from(v, blocks[b])) continue;
            rgs[v] = static_cast<int>(b);
            blocks[b].push_back(v);
            self(self, v + 1);
            blocks[b].pop_back();
        }
        rgs[v] = static_cast<int>(blocks.size());
        blocks.push_back({v});
        self(self, v + 1);
        blocks.pop_back();
    };
    if (n > 0) rec(rec, 0);
    else results.push_back({});
    std::sort(results.begin(), results.end());
    return results;
}

OrbitSet quotient_by_automorphisms(const Graph& g, const std::vector<Rgs>& partitions,
                                   const std::vector<Permutation>& group) {
    for (const auto& sigma : group)
        if (!is_automorphism(g, sigma))
            throw InternalError("quotient group contains a non-automorphism");
    OrbitSet out;
    out.sk_orbits = partitions;
    std::set<Rgs> assigned;
    int n = g.num_vertices();
    for (const auto& p : partitions) {
        if (assigned.count(p)) continue;
        std::set<Rgs> orbit;
        for (const auto& sigma : group) {
            std::vector<int> q(n);
            for (int v = 0; v < n; ++v) q[sigma[v]] = p[v];
            orbit.insert(canon_rgs(q));
        }
        OrbitClass cls;
        cls.members.assign(orbit.begin(), orbit.end());
        cls.rep = cls.members.front();
        cls.s = rgs_block_count(cls.rep);
        for (const auto& m : cls.members) assigned.insert(m);
        out.classes.push_back(std::move(cls));
    }
    return out;
}

IntPoly orbit_weight(const OrbitClass& o) {
    return IntPoly::falling_factorial(o.s) * Int(static_cast<long>(o.members.size()));
}

Int bell_number(int n) {
    if (n < 0) throw InternalError("Bell number of negative index");
    std::vector<Int> row = {Int(1)};
    for (int i = 1; i <= n; ++i) {
        std::vector<Int> next;
        next.reserve(i + 1);
        next.push_back(row.back());
        for (const Int& x : row) next.push_back(next.back() + x);
        row = std::move(next);
    }
    return row.front();
}

static std::string graph_key(const Graph& g) {
    std::ostringstream out;
    out << g.num_vertices();
    for (const auto& [u, v] : g.edges()) out << ' ' << u << ',' << v;
    return out.str();
}

static Int orbit_count_rec(const Graph& g, std::map<std::string, Int>& memo) {
    if (g.num_edges() == 0) return bell_number(g.num_vertices());
    std::string key = graph_key(g);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    Edge e = g.edges().front();
    Int r = orbit_count_rec(delete_edge(g, e), memo) - orbit_count_rec(contract_edge(g, e), memo);
    memo.emplace(std::move(key), r);
    return r;
}

Int orbit_count_f(const Graph& g) {
    std::map<std::string, Int> memo;
    return orbit_count_rec(g, memo);
}

}  // namespace tmc
