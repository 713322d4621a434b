#pragma once

#include <numeric>
#include <vector>

namespace qgraph {

/// Disjoint-set forest with union by size and path halving.
class UnionFind {
public:
    explicit UnionFind(int n) : parent_(n), size_(n, 1) {
        std::iota(parent_.begin(), parent_.end(), 0);
    }

    int find(int x) {
        while (parent_[x] != x) {
            parent_[x] = parent_[parent_[x]];
            x = parent_[x];
        }
        return x;
    }

    void unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return;
        if (size_[a] < size_[b]) std::swap(a, b);
        parent_[b] = a;
        size_[a] += size_[b];
    }

    int component_size(int x) { return size_[find(x)]; }

    int largest_component() const {
        int best = 0;
        for (std::size_t i = 0; i < parent_.size(); ++i)
            if (parent_[i] == static_cast<int>(i) && size_[i] > best) best = size_[i];
        return best;
    }

private:
    std::vector<int> parent_;
    std::vector<int> size_;
};

}  // namespace qgraph
