// Stacked-poset Markov chains: base states, monomial transition matrices,
// chain counts, surjective order-preserving maps, order-polytope counts.
#pragma once

#include <map>
#include <string>
#include <vector>

#include "tmc/intpoly.hpp"

namespace tmc {

// Two-level cover pattern repeated by the stack; covers[p][q] = true iff the
// level-2 element p covers the level-1 element q. The diagonal is required.
struct BasePoset {
    int m = 0;
    std::vector<std::vector<bool>> covers;
};

BasePoset make_base_poset(int m, std::vector<std::vector<bool>> covers);
// text format: first line m, then m rows of m space-separated 0/1 entries
BasePoset read_base_poset(const std::string& path);

// all vectors in {1..m}^m whose value set is {1..max}, lexicographic
std::vector<std::vector<int>> enumerate_base_states(int m);

// index into enumerate_base_states(m) of the class containing `labels`
// (labels = base + t*1 for some t >= 0), or -1 if labels lie in no class
int state_class_index(const std::vector<std::vector<int>>& states, const std::vector<int>& labels);

// monomial exponent vector in the per-position indeterminates x_1..x_m
using Monomial = std::vector<int>;
// finite multiset of monomials
using Entry = std::map<Monomial, Int>;

struct TransitionMatrix {
    int m = 0;
    std::vector<std::vector<int>> states;
    std::vector<std::vector<Entry>> entries;  // entries[i][j]: moves from state i to class j
};

// enumerate all move vectors f with 0 <= f_pos <= 2m-1 passing the three move
// conditions: joint initial-segment coverage, landing in a state class, and
// cover-respecting growth; entry (i,j) collects x^f per move
TransitionMatrix build_transition_matrix(const BasePoset& p);

// closed form for one entry: lambda = -min over covers[p][q] of (a_p - b_q),
// monomials x^(a-b) * (x_1...x_m)^(lambda+mu) for mu = 0..max(b)-lambda
Entry structure_formula_entry(const BasePoset& p, int i, int j);

// 1^T M^n 1 with every monomial evaluated at 1
Int count_chains(const TransitionMatrix& mtx, int n);

// chains of length n+1 whose accumulated labels (initial state plus moves)
// never exceed k in any position
Int count_chains_bounded(const TransitionMatrix& mtx, int n, int k);

// direct depth-first chain enumeration, bypassing matrix products; bound < 1
// disables the label cap
Int count_chains_direct(const BasePoset& p, int n, int bound);

// monomials of (x^b1,...,x^br) M^n 1 whose largest accumulated label equals k
Int count_surjective_order_preserving(const BasePoset& p, int n, int k);

// enumerate all maps from the (n+1)-level stacked poset into [k], keeping the
// order-preserving ones (and the surjective ones when flagged); the candidate
// count k^(m(n+1)) is guarded at 10^8
Int brute_force_order_preserving(const BasePoset& p, int n, int k, bool surjective);

// sum over i of C(k+1,i) * surjective count into [i]
Int ehrhart_order_polytope(const BasePoset& p, int n, int k);

}  // namespace tmc
