// Graph construction, Cartesian products, deletion/contraction, automorphisms.
#include "tmc/graph.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <set>
#include <sstream>

#include "tmc/errors.hpp"

namespace tmc {

Graph::Graph(int num_vertices, std::vector<Edge> edges) : n_(num_vertices) {
    if (n_ < 0) throw ParseError("negative vertex count");
    std::set<Edge> seen;
    for (auto& [u, v] : edges) {
        if (u > v) std::swap(u, v);
        if (u == v) throw ParseError("self-loop rejected");
        if (u < 0 || v >= n_) throw ParseError("edge endpoint out of range");
        if (!seen.insert({u, v}).second) throw ParseError("duplicate edge rejected");
    }
    edges_.assign(seen.begin(), seen.end());
    adj_.assign(n_, std::vector<bool>(n_, false));
    for (const auto& [u, v] : edges_) adj_[u][v] = adj_[v][u] = true;
}

bool Graph::has_edge(int u, int v) const {
    if (u < 0 || v < 0 || u >= n_ || v >= n_) return false;
    return adj_[u][v];
}

std::vector<int> Graph::neighbors(int v) const {
    std::vector<int> r;
    for (int u = 0; u < n_; ++u)
        if (adj_[v][u]) r.push_back(u);
    return r;
}

Graph path_graph(int n) {
    if (n < 1) throw ParseError("path graph needs n >= 1");
    std::vector<Edge> e;
    for (int i = 0; i + 1 < n; ++i) e.push_back({i, i + 1});
    return Graph(n, std::move(e));
}

Graph cycle_graph(int n) {
    if (n < 3) throw ParseError("cycle graph needs n >= 3");
    std::vector<Edge> e;
    for (int i = 0; i + 1 < n; ++i) e.push_back({i, i + 1});
    e.push_back({0, n - 1});
    return Graph(n, std::move(e));
}

Graph complete_graph(int n) {
    if (n < 1) throw ParseError("complete graph needs n >= 1");
    std::vector<Edge> e;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) e.push_back({i, j});
    return Graph(n, std::move(e));
}

Graph edgeless_graph(int n) {
    if (n < 0) throw ParseError("negative vertex count");
    return Graph(n, {});
}

Graph cartesian_product(const Graph& g1, const Graph& g2) {
    int n2 = g2.num_vertices();
    std::vector<Edge> e;
    for (int u = 0; u < g1.num_vertices(); ++u)
        for (const auto& [a, b] : g2.edges()) e.push_back({u * n2 + a, u * n2 + b});
    for (const auto& [a, b] : g1.edges())
        for (int v = 0; v < n2; ++v) e.push_back({a * n2 + v, b * n2 + v});
    return Graph(g1.num_vertices() * n2, std::move(e));
}

Graph delete_edge(const Graph& g, Edge e) {
    if (e.first > e.second) std::swap(e.first, e.second);
    if (!g.has_edge(e.first, e.second)) throw InternalError("edge to delete not present");
    std::vector<Edge> kept;
    for (const auto& ed : g.edges())
        if (ed != e) kept.push_back(ed);
    return Graph(g.num_vertices(), std::move(kept));
}

Graph contract_edge(const Graph& g, Edge e) {
    if (e.first > e.second) std::swap(e.first, e.second);
    if (!g.has_edge(e.first, e.second)) throw InternalError("edge to contract not present");
    int lo = e.first, hi = e.second, n = g.num_vertices();
    auto remap = [&](int v) {
        if (v == hi) return lo;
        return v > hi ? v - 1 : v;
    };
    std::set<Edge> out;
    for (const auto& [u, v] : g.edges()) {
        int a = remap(u), b = remap(v);
        if (a == b) continue;
        if (a > b) std::swap(a, b);
        out.insert({a, b});
    }
    return Graph(n - 1, std::vector<Edge>(out.begin(), out.end()));
}

bool is_automorphism(const Graph& g, const Permutation& p) {
    if (static_cast<int>(p.size()) != g.num_vertices()) return false;
    std::vector<bool> hit(p.size(), false);
    for (int x : p) {
        if (x < 0 || x >= static_cast<int>(p.size()) || hit[x]) return false;
        hit[x] = true;
    }
    for (const auto& [u, v] : g.edges())
        if (!g.has_edge(p[u], p[v])) return false;
    return true;
}

std::vector<Permutation> automorphism_group(const Graph& g) {
    int n = g.num_vertices();
    if (n > 9)
        throw GuardError("brute-force automorphism search capped at 9 vertices; "
                         "supply generators");
    Permutation p(n);
    std::iota(p.begin(), p.end(), 0);
    std::vector<Permutation> group;
    do {
        if (is_automorphism(g, p)) group.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    return group;
}

std::vector<Permutation> automorphism_group(const Graph& g,
                                            const std::vector<Permutation>& generators) {
    if (generators.empty()) return automorphism_group(g);
    int n = g.num_vertices();
    for (const auto& p : generators) {
        if (static_cast<int>(p.size()) != n)
            throw ParseError("generator has wrong length");
        std::vector<bool> hit(n, false);
        for (int x : p) {
            if (x < 0 || x >= n || hit[x]) throw ParseError("generator is not a permutation");
            hit[x] = true;
        }
        for (const auto& [u, v] : g.edges())
            if (!g.has_edge(p[u], p[v]))
                throw ParseError("generator maps edge {" + std::to_string(u) + "," +
                                 std::to_string(v) + "} to a non-edge");
    }
    std::set<Permutation> group;
    Permutation id(n);
    std::iota(id.begin(), id.end(), 0);
    group.insert(id);
    std::vector<Permutation> frontier = {id};
    while (!frontier.empty()) {
        std::vector<Permutation> next;
        for (const auto& a : frontier)
            for (const auto& gen : generators) {
                Permutation c(n);
                for (int i = 0; i < n; ++i) c[i] = gen[a[i]];
                if (group.insert(c).second) next.push_back(c);
            }
        frontier = std::move(next);
    }
    return {group.begin(), group.end()};
}

Graph read_edge_list(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open graph file: " + path);
    int n, m;
    if (!(in >> n >> m)) throw ParseError("graph file must start with 'N M'");
    std::vector<Edge> e(m);
    for (int i = 0; i < m; ++i)
        if (!(in >> e[i].first >> e[i].second))
            throw ParseError("graph file: expected " + std::to_string(m) + " edges");
    return Graph(n, std::move(e));
}

std::vector<Permutation> read_permutations(const std::string& path, int n) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open permutation file: " + path);
    std::vector<Permutation> out;
    std::string line;
    while (std::getline(in, line)) {
        std::istringstream ls(line);
        Permutation p;
        int x;
        while (ls >> x) p.push_back(x);
        if (p.empty()) continue;
        if (static_cast<int>(p.size()) != n)
            throw ParseError("permutation line has wrong length");
        out.push_back(std::move(p));
    }
    return out;
}

Graph parse_graph_spec(const std::string& spec) {
    auto parse_int = [&](const std::string& s) {
        try {
            size_t pos = 0;
            int v = std::stoi(s, &pos);
            if (pos != s.size()) throw ParseError("trailing characters in size: " + s);
            return v;
        } catch (const ParseError&) {
            throw;
        } catch (...) {
            throw ParseError("invalid size in graph spec: " + s);
        }
    };
    if (spec.rfind("path:", 0) == 0) return path_graph(parse_int(spec.substr(5)));
    if (spec.rfind("cycle:", 0) == 0) return cycle_graph(parse_int(spec.substr(6)));
    if (spec.rfind("complete:", 0) == 0) return complete_graph(parse_int(spec.substr(9)));
    if (spec.rfind("prod:", 0) == 0) {
        std::string rest = spec.substr(5);
        size_t split = rest.find('x');
        if (split == std::string::npos)
            throw ParseError("prod spec needs the form prod:<spec>x<spec>");
        return cartesian_product(parse_graph_spec(rest.substr(0, split)),
                                 parse_graph_spec(rest.substr(split + 1)));
    }
    return read_edge_list(spec);
}

}  // namespace tmc
