// Compactified transfer matrix construction and the quantities derived from it.
#include "tmc/transfer.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cmath>
#include <exception>
#include <string>

#include "tmc/errors.hpp"
#include "tmc/oracle.hpp"

namespace tmc {

namespace {

std::vector<int> sampling_grid(const Graph& g, const OrbitSet& orbits) {
    int s_max = 0;
    for (const auto& c : orbits.classes) s_max = std::max(s_max, c.s);
    std::vector<int> grid;
    for (int k = g.num_vertices(); k <= g.num_vertices() + s_max; ++k) grid.push_back(k);
    return grid;
}

// bit t of block b: layer-1 color t+1 appears on a vertex of b
std::vector<unsigned> forbidden_masks(const Rgs& layer1, const std::vector<std::vector<int>>& blocks) {
    std::vector<unsigned> forbid(blocks.size(), 0u);
    for (size_t b = 0; b < blocks.size(); ++b)
        for (int v : blocks[b]) forbid[b] |= 1u << layer1[v];
    return forbid;
}

// injective block colorings from 1..k with the low forbidden colors excluded
Int count_by_enumeration(long k, int c, const std::vector<unsigned>& forbid) {
    int s = static_cast<int>(forbid.size());
    std::vector<char> used(k + 1, 0);
    auto rec = [&](auto&& self, int b) -> Int {
        if (b == s) return Int(1);
        Int total(0);
        for (long a = 1; a <= k; ++a) {
            if (used[a]) continue;
            if (a <= c && (forbid[b] >> (a - 1) & 1u)) continue;
            used[a] = 1;
            total += self(self, b + 1);
            used[a] = 0;
        }
        return total;
    };
    return rec(rec, 0);
}

// tallies of injective partial assignments of blocks to the low colors 1..c;
// by_low_count[t] many use exactly t blocks, the rest take distinct high colors
struct MemberTally {
    int c = 0;
    int s = 0;
    std::vector<Int> by_low_count;

    Int eval(long k) const {
        Int total(0);
        for (int t = 0; t <= s; ++t) {
            if (by_low_count[t] == 0) continue;
            total += by_low_count[t] * factorial_falling(Int(k) - c, s - t);
        }
        return total;
    }
};

MemberTally low_color_tally(int c, const std::vector<unsigned>& forbid) {
    int s = static_cast<int>(forbid.size());
    std::vector<Int> dp(1u << s);
    dp[0] = 1;
    for (int color = 0; color < c; ++color)
        for (unsigned mask = (1u << s) - 1; mask > 0; --mask)
            for (int b = 0; b < s; ++b)
                if ((mask >> b & 1u) && !(forbid[b] >> color & 1u)) dp[mask] += dp[mask ^ (1u << b)];
    MemberTally tally{c, s, std::vector<Int>(s + 1, Int(0))};
    for (unsigned mask = 0; mask < (1u << s); ++mask)
        tally.by_low_count[std::popcount(mask)] += dp[mask];
    return tally;
}

// sums over member partitions of `to`, one count per grid value
std::vector<Int> entry_samples(const Rgs& layer1, int c, const OrbitClass& to,
                               const std::vector<int>& grid, LKernel kernel) {
    if (c > 31) throw GuardError("layer-1 coloring uses more than 31 colors");
    if (to.s > 20) throw GuardError("partition class with more than 20 blocks");
    std::vector<Int> vals(grid.size(), Int(0));
    for (const Rgs& member : to.members) {
        auto blocks = rgs_blocks(member);
        auto forbid = forbidden_masks(layer1, blocks);
        if (kernel == LKernel::low_color_dp) {
            MemberTally tally = low_color_tally(c, forbid);
            for (size_t t = 0; t < grid.size(); ++t) vals[t] += tally.eval(grid[t]);
        } else {
            for (size_t t = 0; t < grid.size(); ++t)
                vals[t] += count_by_enumeration(grid[t], c, forbid);
        }
    }
    return vals;
}

IntPoly interpolate_entry(const std::vector<int>& grid, const std::vector<Int>& vals, int bound,
                          int i, int j) {
    std::vector<std::pair<Int, Int>> points;
    points.reserve(grid.size());
    for (size_t t = 0; t < grid.size(); ++t) points.push_back({Int(grid[t]), vals[t]});
    try {
        return interpolate(points, bound);
    } catch (const std::exception& e) {
        throw InternalError("entry (" + std::to_string(i) + "," + std::to_string(j) +
                            "): " + e.what());
    }
}

}  // namespace

PolyMatrix build_l_entries(const Graph& g, const OrbitSet& orbits, LKernel kernel, bool parallel) {
    int p = static_cast<int>(orbits.classes.size());
    if (p == 0) throw InternalError("empty orbit set");
    std::vector<int> grid = sampling_grid(g, orbits);
    std::vector<std::vector<IntPoly>> rows(p, std::vector<IntPoly>(p));
    std::atomic<bool> failed{false};
    std::exception_ptr fail;
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) if (parallel)
#else
    (void)parallel;
#endif
    for (int idx = 0; idx < p * p; ++idx) {
        if (failed.load()) continue;
        try {
            int i = idx / p, j = idx % p;
            const OrbitClass& from = orbits.classes[i];
            const OrbitClass& to = orbits.classes[j];
            auto vals = entry_samples(from.rep, from.s, to, grid, kernel);
            rows[i][j] = interpolate_entry(grid, vals, to.s, i, j);
        } catch (...) {
#ifdef _OPENMP
#pragma omp critical
#endif
            if (!failed.exchange(true)) fail = std::current_exception();
        }
    }
    if (failed.load()) std::rethrow_exception(fail);
    return PolyMatrix(std::move(rows));
}

namespace {

CompactTransferMatrix assemble(const Graph& g, const std::vector<Permutation>& group,
                               LKernel kernel, bool parallel) {
    if (g.num_vertices() < 1) throw GuardError("transfer matrix needs at least one vertex");
    OrbitSet orbits = quotient_by_automorphisms(g, color_orbits(g), group);
    PolyMatrix l = build_l_entries(g, orbits, kernel, parallel);
    std::vector<IntPoly> weights;
    weights.reserve(orbits.classes.size());
    for (const auto& cls : orbits.classes) weights.push_back(orbit_weight(cls));
    std::vector<int> grid = sampling_grid(g, orbits);
    return CompactTransferMatrix{g, std::move(orbits), std::move(l), std::move(weights),
                                 std::move(grid)};
}

}  // namespace

CompactTransferMatrix build_l(const Graph& g, const std::vector<Permutation>& group) {
    CompactTransferMatrix ctm = assemble(g, group, LKernel::low_color_dp, true);
    verify_representative_independence(ctm);
    return ctm;
}

CompactTransferMatrix build_l_reference(const Graph& g, const std::vector<Permutation>& group) {
    return assemble(g, group, LKernel::enumeration, false);
}

std::vector<IntPoly> rebuild_row_with_member(const Graph& g, const OrbitSet& orbits, int i,
                                             const Rgs& member, LKernel kernel) {
    int p = static_cast<int>(orbits.classes.size());
    if (i < 0 || i >= p) throw InternalError("orbit index out of range");
    const OrbitClass& from = orbits.classes[i];
    if (std::find(from.members.begin(), from.members.end(), member) == from.members.end())
        throw InternalError("coloring is not a member of the requested class");
    std::vector<int> grid = sampling_grid(g, orbits);
    std::vector<IntPoly> row(p);
    for (int j = 0; j < p; ++j) {
        auto vals = entry_samples(member, from.s, orbits.classes[j], grid, kernel);
        row[j] = interpolate_entry(grid, vals, orbits.classes[j].s, i, j);
    }
    return row;
}

void verify_representative_independence(const CompactTransferMatrix& ctm, size_t exhaustive_limit) {
    bool exhaustive = ctm.orbit_set.sk_orbits.size() <= exhaustive_limit;
    int p = ctm.l.size();
    for (int i = 0; i < p; ++i) {
        const auto& members = ctm.orbit_set.classes[i].members;
        size_t last = exhaustive ? members.size() : std::min<size_t>(members.size(), 2);
        for (size_t m = 1; m < last; ++m) {
            auto row = rebuild_row_with_member(ctm.base_graph, ctm.orbit_set, i, members[m],
                                               LKernel::low_color_dp);
            for (int j = 0; j < p; ++j)
                if (row[j] != ctm.l.at(i, j))
                    throw InternalError("entry (" + std::to_string(i) + "," + std::to_string(j) +
                                        ") changes when class " + std::to_string(i) +
                                        " is represented by member " + std::to_string(m));
        }
    }
}

IntPoly chromatic_product_path(const CompactTransferMatrix& ctm, int n) {
    if (n < 1) throw GuardError("product with a path needs n >= 1");
    int p = ctm.l.size();
    std::vector<IntPoly> v = ctm.weights;
    for (int step = 1; step < n; ++step) {
        std::vector<IntPoly> next(p);
        for (int j = 0; j < p; ++j)
            for (int i = 0; i < p; ++i) next[j] = next[j] + v[i] * ctm.l.at(i, j);
        v = std::move(next);
    }
    IntPoly total;
    for (const auto& x : v) total = total + x;
    return total;
}

IntPoly chromatic_product_path(const Graph& g, const std::vector<Permutation>& group, int n) {
    return chromatic_product_path(build_l(g, group), n);
}

namespace {

std::vector<std::vector<Int>> int_identity(int p) {
    std::vector<std::vector<Int>> m(p, std::vector<Int>(p, Int(0)));
    for (int i = 0; i < p; ++i) m[i][i] = 1;
    return m;
}

std::vector<std::vector<Int>> int_mat_mul(const std::vector<std::vector<Int>>& a,
                                          const std::vector<std::vector<Int>>& b) {
    int p = static_cast<int>(a.size());
    std::vector<std::vector<Int>> out(p, std::vector<Int>(p, Int(0)));
    for (int i = 0; i < p; ++i)
        for (int t = 0; t < p; ++t) {
            if (a[i][t] == 0) continue;
            for (int j = 0; j < p; ++j) out[i][j] += a[i][t] * b[t][j];
        }
    return out;
}

std::vector<std::vector<Int>> int_mat_power(std::vector<std::vector<Int>> base, int n) {
    auto result = int_identity(static_cast<int>(base.size()));
    while (n > 0) {
        if (n & 1) result = int_mat_mul(result, base);
        base = int_mat_mul(base, base);
        n >>= 1;
    }
    return result;
}

}  // namespace

Int restricted_count_power(const CompactTransferMatrix& ctm, int i, int j, int n, int k) {
    int p = ctm.l.size();
    if (i < 0 || i >= p || j < 0 || j >= p) throw InternalError("orbit index out of range");
    if (n < 1) throw GuardError("matrix power needs n >= 1");
    if (k < ctm.orbit_set.classes[i].s)
        throw GuardError("k is below the " + std::to_string(ctm.orbit_set.classes[i].s) +
                         " colors used by the source orbit");
    auto power = int_mat_power(ctm.l.eval(Int(k)), n);
    return power[i][j];
}

std::pair<Int, Int> row_sum_reciprocity(const CompactTransferMatrix& ctm, int i, int n, int k) {
    int p = ctm.l.size();
    int nv = ctm.base_graph.num_vertices();
    if (i < 0 || i >= p) throw InternalError("orbit index out of range");
    if (n < 0) throw GuardError("nonnegative power required");
    if (k < nv) throw GuardError("reciprocity checks need k >= the vertex count");
    auto power = int_mat_power(ctm.l.eval(Int(-k)), n);
    Int lhs(0);
    for (int j = 0; j < p; ++j) lhs += power[i][j];
    Graph product = cartesian_product(ctm.base_graph, path_graph(n + 1));
    PartialColoring fixed;
    const Rgs& rep = ctm.orbit_set.classes[i].rep;
    for (int u = 0; u < nv; ++u) fixed[u * (n + 1)] = rep[u] + 1;
    Int rhs = count_compatible_pairs_restricted(product, fixed, k);
    return {lhs, rhs};
}

double dominant_eigenvalue(const std::vector<std::vector<double>>& a) {
    size_t d = a.size();
    if (d == 0) throw InternalError("eigenvalue of an empty matrix");
    std::vector<double> v(d, 1.0), w(d);
    double lam = -1.0;
    for (long it = 0; it < 1000000; ++it) {
        double norm = 0.0;
        for (size_t i = 0; i < d; ++i) {
            double acc = v[i];
            for (size_t j = 0; j < d; ++j) acc += a[i][j] * v[j];
            w[i] = acc;
            norm = std::max(norm, acc);
        }
        for (size_t i = 0; i < d; ++i) v[i] = w[i] / norm;
        double est = norm - 1.0;
        if (it > 0 && std::abs(est - lam) <= 1e-12 * std::max(1.0, std::abs(est))) return est;
        lam = est;
    }
    throw InternalError("power iteration did not converge within 1000000 steps; last estimate " +
                        std::to_string(lam));
}

EigenBounds eigen_bounds(const CompactTransferMatrix& ctm, const std::vector<long>& sample_ks) {
    int nv = ctm.base_graph.num_vertices();
    for (long k : sample_ks)
        if (k < nv) throw GuardError("eigenvalue samples must be at least the vertex count");
    auto sums = ctm.l.row_sums();
    int p = ctm.l.size();
    EigenBounds out;
    int lo = 0, hi = 0;
    for (int i = 1; i < p; ++i) {
        if (sums[i].less_at_infinity(sums[lo])) lo = i;
        if (sums[hi].less_at_infinity(sums[i])) hi = i;
    }
    out.delta = sums[lo];
    out.Delta = sums[hi];
    out.delta_row = lo;
    out.Delta_row = hi;
    for (long k : sample_ks) {
        Int mn = sums[0].eval(Int(k)), mx = mn;
        for (int i = 1; i < p; ++i) {
            Int val = sums[i].eval(Int(k));
            mn = std::min(mn, val);
            mx = std::max(mx, val);
        }
        if (out.delta.eval(Int(k)) != mn || out.Delta.eval(Int(k)) != mx)
            out.crossings.push_back(k);
        auto ints = ctm.l.eval(Int(k));
        std::vector<std::vector<double>> dm(p, std::vector<double>(p));
        for (int i = 0; i < p; ++i)
            for (int j = 0; j < p; ++j) dm[i][j] = ints[i][j].get_d();
        out.lambda_numeric[k] = dominant_eigenvalue(dm);
    }
    return out;
}

RationalGenFun generating_function(const CompactTransferMatrix& ctm) {
    int p = ctm.l.size();
    BivarMatrix a(p, std::vector<BivarPoly>(p));
    for (int i = 0; i < p; ++i)
        for (int j = 0; j < p; ++j) {
            IntPoly z0 = i == j ? IntPoly(1) : IntPoly();
            a[i][j] = BivarPoly({z0, -ctm.l.at(i, j)});
        }
    BivarPoly den = bivar_det_bareiss(a);
    BivarMatrix bordered(p + 1, std::vector<BivarPoly>(p + 1));
    for (int i = 0; i < p; ++i) {
        for (int j = 0; j < p; ++j) bordered[i][j] = a[i][j];
        bordered[i][p] = BivarPoly(IntPoly(1));
    }
    for (int j = 0; j < p; ++j) bordered[p][j] = BivarPoly(ctm.weights[j]);
    BivarPoly num = -bivar_det_bareiss(bordered);
    RationalGenFun reduced = reduce(RationalGenFun{num, den});
    auto series = series_coefficients(reduced, 6);
    for (int n = 0; n < 6; ++n)
        if (series[n] != chromatic_product_path(ctm, n + 1))
            throw InternalError("series coefficient " + std::to_string(n) +
                                " disagrees with the transfer product");
    return reduced;
}

HiddenSymmetry hidden_symmetry(const CompactTransferMatrix& ctm) {
    RationalGenFun gf = generating_function(ctm);
    HiddenSymmetry out;
    out.p = ctm.l.size();
    out.reduced_degree = gf.den.degree_z();
    out.hidden = out.reduced_degree < out.p;
    return out;
}

}  // namespace tmc
