// Compactified transfer matrix L: construction, product chromatic polynomials,
// reciprocity at negative arguments, eigenvalue bounds, generating functions,
// and hidden-symmetry detection. Orbit class indices are 0-based throughout.
#pragma once

#include <map>
#include <utility>
#include <vector>

#include "tmc/bivar.hpp"
#include "tmc/graph.hpp"
#include "tmc/intpoly.hpp"
#include "tmc/orbits.hpp"
#include "tmc/polymatrix.hpp"

namespace tmc {

struct CompactTransferMatrix {
    Graph base_graph;
    OrbitSet orbit_set;
    PolyMatrix l;                   // entry (i,j): degree s_j, counts layer i -> layer j
    std::vector<IntPoly> weights;   // w_i = m_i * k(k-1)...(k-s_i+1)
    std::vector<int> grid;          // sampled k values, N..N+s_max
};

// entry kernels: plain injective-assignment enumeration per k, or a bitmask DP
// over blocks that splits colors at c = s_i and reuses its tallies across k
enum class LKernel { enumeration, low_color_dp };

// sample every entry on the grid k = N..N+s_max and interpolate column j with
// degree bound s_j; `parallel` distributes (i,j) entries across OpenMP threads
PolyMatrix build_l_entries(const Graph& g, const OrbitSet& orbits, LKernel kernel, bool parallel);

// orbit quotient + DP kernel entries (parallel) + representative-independence check
CompactTransferMatrix build_l(const Graph& g, const std::vector<Permutation>& group);

// same contract via the serial enumeration kernel; kept as the reference
CompactTransferMatrix build_l_reference(const Graph& g, const std::vector<Permutation>& group);

// row i of L rebuilt with `member` (a partition of o_i) as the layer-1 coloring
std::vector<IntPoly> rebuild_row_with_member(const Graph& g, const OrbitSet& orbits, int i,
                                             const Rgs& member, LKernel kernel);

// rebuilds rows from alternate members of each class and compares against l;
// all members are tried when the partition count is at most `exhaustive_limit`,
// otherwise one alternate per class; mismatch is a hard error
void verify_representative_independence(const CompactTransferMatrix& ctm,
                                        size_t exhaustive_limit = 200);

// w . L^(n-1) . 1, the chromatic polynomial of base_graph x P_n (monic, degree N*n)
IntPoly chromatic_product_path(const CompactTransferMatrix& ctm, int n);
IntPoly chromatic_product_path(const Graph& g, const std::vector<Permutation>& group, int n);

// (L^n)_{ij} at k: proper k-colorings of G x P_{n+1} with layer 1 fixed to the
// representative coloring of o_i and the last layer's partition in o_j; k >= s_i
Int restricted_count_power(const CompactTransferMatrix& ctm, int i, int j, int n, int k);

// lhs = row sum of (L^n)_i at -k; rhs = oracle pair count on G x P_{n+1} with
// layer 1 fixed to the o_i representative; lhs == (-1)^(N*n) * rhs
std::pair<Int, Int> row_sum_reciprocity(const CompactTransferMatrix& ctm, int i, int n, int k);

struct EigenBounds {
    IntPoly delta;                        // row sum smallest as k -> infinity
    IntPoly Delta;                        // row sum largest as k -> infinity
    int delta_row = 0;
    int Delta_row = 0;
    std::map<long, double> lambda_numeric;
    std::vector<long> crossings;          // sampled k where another row is extremal
};

// row-sum bounds plus power-iteration lambda_max of L(k) at each sampled k
EigenBounds eigen_bounds(const CompactTransferMatrix& ctm, const std::vector<long>& sample_ks);

// dominant eigenvalue of a nonnegative matrix: power iteration on A + I,
// relative tolerance 1e-12, at most 10^6 iterations
double dominant_eigenvalue(const std::vector<std::vector<double>>& a);

// reduced w . (I - zL)^{-1} . 1 over the common denominator det(I - zL);
// the first six series coefficients are verified against chromatic_product_path
RationalGenFun generating_function(const CompactTransferMatrix& ctm);

struct HiddenSymmetry {
    bool hidden = false;    // reduced denominator z-degree strictly below p
    int reduced_degree = 0;
    int p = 0;
};

HiddenSymmetry hidden_symmetry(const CompactTransferMatrix& ctm);

}  // namespace tmc
