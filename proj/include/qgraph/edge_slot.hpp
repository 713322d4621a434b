#pragma once

#include <stdexcept>
#include <utility>

namespace qgraph {

/// Number of edge slots of the complete graph on n vertices.
constexpr int edge_slot_count(int n) { return n * (n - 1) / 2; }

/// Rank of the unordered pair {i,j}, i<j, in lexicographic pair order:
/// (0,1),(0,2),...,(0,n-1),(1,2),...
inline int edge_index(int i, int j, int n) {
    if (i < 0 || j < 0 || i >= n || j >= n || i == j)
        throw std::invalid_argument("edge_index: need 0 <= i < j < n, distinct");
    if (i > j) std::swap(i, j);
    return i * n - i * (i + 1) / 2 + (j - i - 1);
}

/// Inverse of edge_index: slot -> {i,j} with i<j.
inline std::pair<int, int> edge_pair(int slot, int n) {
    if (slot < 0 || slot >= edge_slot_count(n))
        throw std::invalid_argument("edge_pair: slot out of range");
    int i = 0;
    int row = n - 1;  // slots in row i
    while (slot >= row) {
        slot -= row;
        --row;
        ++i;
    }
    return {i, i + 1 + slot};
}

}  // namespace qgraph
