// Brute-force ground truth: coloring enumeration, chromatic polynomials,
// restricted colorings, compatible pairs, and the full fixed-k transfer matrix.
#pragma once

#include <map>
#include <vector>

#include "tmc/graph.hpp"
#include "tmc/intpoly.hpp"
#include "tmc/orbits.hpp"

namespace tmc {

// proper on the induced subgraph; colors in 1..k'
using PartialColoring = std::map<int, int>;

// all proper colorings as vectors over 1..k, lexicographic
std::vector<std::vector<int>> enumerate_proper_colorings(const Graph& g, int k);

// count without storing; parallel = OpenMP over the first vertex's colors
Int count_proper_colorings(const Graph& g, int k, bool parallel = false);

// exact chromatic polynomial via deletion-contraction (base: edgeless -> k^N)
IntPoly chromatic_polynomial(const Graph& g);

// completions of a fixed proper partial coloring, degree s = N - |V'|
IntPoly restricted_chromatic(const Graph& g, const PartialColoring& fixed);

// pairs (acyclic orientation, weakly compatible k-coloring extending `fixed`);
// same-colored fixed vertices are identified before orientation enumeration
Int count_compatible_pairs_restricted(const Graph& g, const PartialColoring& fixed, int k);

// all 2^|E| orientations filtered for acyclicity, guarded at |E| <= 20
Int count_acyclic_orientations(const Graph& g);

struct FullTransferMatrix {
    int k = 0;
    std::vector<std::vector<int>> colorings;      // lexicographic
    std::vector<std::vector<unsigned char>> adj;  // 1 iff colorings differ everywhere
};

// guard: more than 20000 proper colorings rejected
FullTransferMatrix full_transfer_matrix(const Graph& g, int k);

// 1^T A^(n-1) 1 and trace(A^n) over the full transfer matrix
Int count_colorings_path(const Graph& g, int n, int k);
Int count_colorings_cycle(const Graph& g, int n, int k);

// colorings of g x P_n with layer 1 fixed to `layer1`; if `target_partitions`
// is nonempty, the last layer's fiber partition must be one of them
Int count_layered_colorings(const Graph& g, const std::vector<int>& layer1, int n, int k,
                            const std::vector<Rgs>& target_partitions = {});

// colorings of g x P_2 whose layer-1 partition lies in `from` and layer-2 in `to`
Int count_two_layer_by_partition(const Graph& g, int k, const std::vector<Rgs>& from,
                                 const std::vector<Rgs>& to);

}  // namespace tmc
