#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "qgraph/graph_state.hpp"

namespace qgraph::sym {

/// Vertex relabeling: image[i] is where vertex i goes.
struct Permutation {
    std::vector<int> image;

    static Permutation identity(int n);
    int size() const { return static_cast<int>(image.size()); }
    int operator()(int i) const { return image[i]; }
    bool is_valid() const;
    Permutation inverse() const;
    /// Composition (a then b is b.compose(a)): (π∘σ)(i) = π(σ(i)).
    Permutation compose(const Permutation& sigma) const;
    int sign() const;
    bool operator==(const Permutation&) const = default;
};

/// Multiset of cycle lengths (an integer partition of n).
struct CycleType {
    std::vector<int> parts;  // descending
    bool operator==(const CycleType&) const = default;
};

CycleType cycle_type(const Permutation& p);
Permutation permutation_with_cycle_type(const std::vector<int>& parts);

/// Relabel the state: edge {i,j} at level k iff {π(i),π(j)} at level k in the
/// result. Group action: apply(apply(G,σ),π) = apply(G,π∘σ).
GraphState apply_permutation(const GraphState& g, const Permutation& pi);

/// Automorphism-group orders up to n = 33 fit in 128 bits (33! < 2^128).
using AutCount = unsigned __int128;

std::string aut_to_string(AutCount v);
AutCount factorial(int n);

/// Order of { π : apply(G,π) = G }, computed on the level-1 graph by
/// individualization-refinement over equitable partitions with
/// orbit-stabilizer counting. Exact for n <= 32.
AutCount automorphism_count(const GraphState& g);

/// Same, acting on precomputed level-1 neighbour masks (MC hot path).
AutCount automorphism_count(std::span<const std::uint64_t> masks, int n);

/// Exhaustive count over all n! permutations; refused above n = 8.
AutCount automorphism_count_bruteforce(const GraphState& g);

/// Lexicographically least bit-word over all relabelings (pruned search).
GraphState canonical_form(const GraphState& g);

bool are_isomorphic(const GraphState& g, const GraphState& h);

/// n! / |Γ(G)| — the number of distinct labelings of the underlying
/// unlabeled state.
AutCount labelings_count(const GraphState& g);

}  // namespace qgraph::sym
