// Coloring orbits: independent-set partitions, automorphism quotient, counting.
#pragma once

#include <vector>

#include "tmc/graph.hpp"
#include "tmc/intpoly.hpp"

namespace tmc {

// A partition of 0..N-1 into independent sets, as a restricted growth string:
// rgs[v] = block index of v, blocks numbered by first appearance.
using Rgs = std::vector<int>;

std::vector<std::vector<int>> rgs_blocks(const Rgs& rgs);
Rgs canon_rgs(const std::vector<int>& part_of_vertex);
int rgs_block_count(const Rgs& rgs);

// An automorphism-orbit class of partitions: multiplicity = members.size().
struct OrbitClass {
    Rgs rep;                     // lexicographically least member
    std::vector<Rgs> members;    // all partitions in the class, sorted
    int s = 0;                   // number of blocks (colors used)
};

struct OrbitSet {
    std::vector<Rgs> sk_orbits;          // all independent-set partitions
    std::vector<OrbitClass> classes;     // automorphism-orbit classes
};

// all partitions of V into nonempty independent sets, sorted RGS order
std::vector<Rgs> color_orbits(const Graph& g);

// classes under rgs -> canon(rgs . sigma^-1); group elements verified
OrbitSet quotient_by_automorphisms(const Graph& g, const std::vector<Rgs>& partitions,
                                   const std::vector<Permutation>& group);

// multiplicity * k(k-1)...(k-s+1)
IntPoly orbit_weight(const OrbitClass& o);

// F(G) via deletion-contraction with Bell-number base case
Int orbit_count_f(const Graph& g);

Int bell_number(int n);

}  // namespace tmc
