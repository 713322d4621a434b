#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qgraph/edge_slot.hpp"

namespace qgraph {

/// Basis state of a two-level quantum graph on n vertices: one bit per edge
/// slot of K_n, bit value = one-particle level of that edge (0 or 1).
///
/// The level-1 edges form the graph G1; the level-0 edges are its complement
/// G0. The all-zeros word is the state with every edge in level 0.
class GraphState {
public:
    explicit GraphState(int n);

    /// Build from a slot-ordered word of 0/1 levels (size must equal M).
    GraphState(int n, const std::vector<int>& levels);

    int n() const { return n_; }
    int slots() const { return slots_; }

    int level(int slot) const;
    void set_level(int slot, int value);
    void flip(int slot);

    /// Number of edges in G1 (popcount of the word).
    int edges_at_level(int level) const;

    GraphState complemented() const;

    /// Word as packed 64-bit little-endian chunks, slot 0 = bit 0 of word 0.
    const std::vector<std::uint64_t>& words() const { return words_; }
    void assign_words(const std::vector<std::uint64_t>& w);

    /// Lexicographic comparison of the slot-ordered bit words (slot 0 first).
    int compare_word(const GraphState& other) const;

    bool operator==(const GraphState& other) const {
        return n_ == other.n_ && words_ == other.words_;
    }

private:
    int n_;
    int slots_;
    std::vector<std::uint64_t> words_;

    void check_slot(int slot) const;
};

/// Degree of every vertex in the level-k graph.
std::vector<int> degrees(const GraphState& g, int level);

/// Number of 2-walks ("angles") in the level-k graph: sum_i C(d_i, 2).
long angle_count(const GraphState& g, int level);

/// Size of the largest connected component of G1 (isolated vertices count 1).
int largest_component_size(const GraphState& g);

/// Fraction of vertices in the largest connected component of G1.
double largest_component_fraction(const GraphState& g);

GraphState flip_edge(const GraphState& g, int slot);

/// Per-vertex bitmask of level-1 neighbours; requires n <= 64.
std::vector<std::uint64_t> level1_masks(const GraphState& g);
int largest_component_size(const std::vector<std::uint64_t>& masks, int n);

/// Text form "n=<int>;<M bits>", slot order.
std::string serialize(const GraphState& g);

/// Inverse of serialize. Malformed input throws std::invalid_argument with
/// the byte offset of the first offending character.
GraphState parse_graph(const std::string& text);

}  // namespace qgraph
