#include "qgraph/symmetry.hpp"

#include <algorithm>
#include <bit>
#include <cassert>
#include <numeric>
#include <stdexcept>

namespace qgraph::sym {

Permutation Permutation::identity(int n) {
    Permutation p;
    p.image.resize(n);
    std::iota(p.image.begin(), p.image.end(), 0);
    return p;
}

bool Permutation::is_valid() const {
    std::vector<bool> seen(image.size(), false);
    for (int v : image) {
        if (v < 0 || v >= static_cast<int>(image.size()) || seen[v]) return false;
        seen[v] = true;
    }
    return true;
}

Permutation Permutation::inverse() const {
    Permutation out;
    out.image.resize(image.size());
    for (int i = 0; i < size(); ++i) out.image[image[i]] = i;
    return out;
}

Permutation Permutation::compose(const Permutation& sigma) const {
    Permutation out;
    out.image.resize(image.size());
    for (int i = 0; i < size(); ++i) out.image[i] = image[sigma.image[i]];
    return out;
}

int Permutation::sign() const {
    std::vector<bool> seen(image.size(), false);
    int transpositions = 0;
    for (int i = 0; i < size(); ++i) {
        if (seen[i]) continue;
        int len = 0;
        for (int j = i; !seen[j]; j = image[j]) {
            seen[j] = true;
            ++len;
        }
        transpositions += len - 1;
    }
    return transpositions % 2 == 0 ? 1 : -1;
}

CycleType cycle_type(const Permutation& p) {
    std::vector<bool> seen(p.image.size(), false);
    CycleType ct;
    for (int i = 0; i < p.size(); ++i) {
        if (seen[i]) continue;
        int len = 0;
        for (int j = i; !seen[j]; j = p.image[j]) {
            seen[j] = true;
            ++len;
        }
        ct.parts.push_back(len);
    }
    std::sort(ct.parts.rbegin(), ct.parts.rend());
    return ct;
}

Permutation permutation_with_cycle_type(const std::vector<int>& parts) {
    int n = std::accumulate(parts.begin(), parts.end(), 0);
    Permutation p;
    p.image.resize(n);
    int base = 0;
    for (int len : parts) {
        if (len < 1) throw std::invalid_argument("cycle lengths must be >= 1");
        for (int k = 0; k < len; ++k) p.image[base + k] = base + (k + 1) % len;
        base += len;
    }
    return p;
}

GraphState apply_permutation(const GraphState& g, const Permutation& pi) {
    if (pi.size() != g.n())
        throw std::invalid_argument("apply_permutation: permutation size mismatch");
    GraphState out(g.n());
    for (int e = 0; e < g.slots(); ++e)
        if (g.level(e) == 1) {
            auto [i, j] = edge_pair(e, g.n());
            out.set_level(edge_index(pi(i), pi(j), g.n()), 1);
        }
    return out;
}

std::string aut_to_string(AutCount v) {
    if (v == 0) return "0";
    std::string s;
    while (v > 0) {
        s.push_back(static_cast<char>('0' + static_cast<int>(v % 10)));
        v /= 10;
    }
    std::reverse(s.begin(), s.end());
    return s;
}

AutCount factorial(int n) {
    AutCount f = 1;
    for (int k = 2; k <= n; ++k) f *= static_cast<unsigned>(k);
    return f;
}

namespace {

// Individualization-refinement machinery over per-vertex neighbour masks.
// Colors are ints normalized to 0..k-1; cells are groups of equal color.
struct RefineContext {
    int n;
    std::span<const std::uint64_t> masks;

    // One refinement round: recolor by (color, multiset of neighbour colors).
    // Signatures are ranked identically for both colorings so that two states
    // refined together stay comparable. Returns false if the color histograms
    // of the two sides diverge (no isomorphism possible).
    bool round_pair(std::vector<int>& ca, std::vector<int>& cb, bool& changed) const {
        auto signature = [&](const std::vector<int>& colors, int v) {
            std::vector<int> sig;
            sig.reserve(8);
            sig.push_back(colors[v]);
            std::uint64_t m = masks[v];
            while (m) {
                int u = std::countr_zero(m);
                m &= m - 1;
                sig.push_back(colors[u]);
            }
            std::sort(sig.begin() + 1, sig.end());
            return sig;
        };
        std::vector<std::vector<int>> sa(n), sb(n);
        for (int v = 0; v < n; ++v) {
            sa[v] = signature(ca, v);
            sb[v] = signature(cb, v);
        }
        std::vector<std::vector<int>> pool;
        pool.reserve(2 * n);
        pool.insert(pool.end(), sa.begin(), sa.end());
        pool.insert(pool.end(), sb.begin(), sb.end());
        std::sort(pool.begin(), pool.end());
        pool.erase(std::unique(pool.begin(), pool.end()), pool.end());
        auto rank = [&](const std::vector<int>& s) {
            return static_cast<int>(std::lower_bound(pool.begin(), pool.end(), s) - pool.begin());
        };
        std::vector<int> na(n), nb(n);
        std::vector<int> hist_a(pool.size(), 0), hist_b(pool.size(), 0);
        for (int v = 0; v < n; ++v) {
            na[v] = rank(sa[v]);
            nb[v] = rank(sb[v]);
            ++hist_a[na[v]];
            ++hist_b[nb[v]];
        }
        if (hist_a != hist_b) return false;
        changed = (na != ca) || (nb != cb);
        ca = std::move(na);
        cb = std::move(nb);
        return true;
    }

    bool refine_pair(std::vector<int>& ca, std::vector<int>& cb) const {
        bool changed = true;
        while (changed)
            if (!round_pair(ca, cb, changed)) return false;
        return true;
    }

    void refine(std::vector<int>& colors) const {
        std::vector<int> copy = colors;
        bool ok = refine_pair(colors, copy);
        (void)ok;
        assert(ok);
    }

    int color_count(const std::vector<int>& colors) const {
        return colors.empty() ? 0 : *std::max_element(colors.begin(), colors.end()) + 1;
    }

    // First smallest cell of size >= 2, by ascending color; -1 if discrete.
    int target_cell(const std::vector<int>& colors) const {
        int k = color_count(colors);
        std::vector<int> count(k, 0);
        for (int c : colors) ++count[c];
        int best = -1, best_size = n + 1;
        for (int c = 0; c < k; ++c)
            if (count[c] >= 2 && count[c] < best_size) {
                best = c;
                best_size = count[c];
            }
        return best;
    }

    void individualize(std::vector<int>& colors, int v) const {
        colors[v] = color_count(colors);
    }

    bool mapping_is_automorphism(const std::vector<int>& perm) const {
        for (int v = 0; v < n; ++v) {
            std::uint64_t mapped = 0;
            std::uint64_t m = masks[v];
            while (m) {
                int u = std::countr_zero(m);
                m &= m - 1;
                mapped |= std::uint64_t{1} << perm[u];
            }
            if (mapped != masks[perm[v]]) return false;
        }
        return true;
    }

    // Does some automorphism send the coloring ca onto cb (color-preserving)?
    bool exists_iso(std::vector<int> ca, std::vector<int> cb) const {
        if (!refine_pair(ca, cb)) return false;
        int cell = target_cell(ca);
        if (cell < 0) {
            // discrete: colors induce the only candidate mapping
            std::vector<int> perm(n, -1);
            std::vector<int> where(n, -1);
            for (int v = 0; v < n; ++v) where[cb[v]] = v;
            for (int v = 0; v < n; ++v) perm[v] = where[ca[v]];
            return mapping_is_automorphism(perm);
        }
        int a = -1;
        for (int v = 0; v < n; ++v)
            if (ca[v] == cell) {
                a = v;
                break;
            }
        for (int b = 0; b < n; ++b) {
            if (cb[b] != cell) continue;
            std::vector<int> ca2 = ca, cb2 = cb;
            individualize(ca2, a);
            individualize(cb2, b);
            if (exists_iso(std::move(ca2), std::move(cb2))) return true;
        }
        return false;
    }

    AutCount order(std::vector<int> colors) const {
        refine(colors);
        int cell = target_cell(colors);
        if (cell < 0) return 1;
        std::vector<int> members;
        for (int v = 0; v < n; ++v)
            if (colors[v] == cell) members.push_back(v);
        int v0 = members[0];
        std::vector<int> stab_colors = colors;
        individualize(stab_colors, v0);
        AutCount stabilizer = order(std::move(stab_colors));
        AutCount orbit = 1;
        for (std::size_t k = 1; k < members.size(); ++k) {
            std::vector<int> ca = colors, cb = colors;
            individualize(ca, v0);
            individualize(cb, members[k]);
            if (exists_iso(std::move(ca), std::move(cb))) ++orbit;
        }
        return orbit * stabilizer;
    }
};

}  // namespace

AutCount automorphism_count(std::span<const std::uint64_t> masks, int n) {
    if (n > 32) throw std::invalid_argument("automorphism_count: n must be <= 32");
    if (n <= 1) return 1;
    RefineContext ctx{n, masks};
    return ctx.order(std::vector<int>(n, 0));
}

AutCount automorphism_count(const GraphState& g) {
    auto masks = level1_masks(g);
    AutCount result = automorphism_count(masks, g.n());
#ifndef NDEBUG
    // a graph and its complement share the automorphism group
    auto cmasks = level1_masks(g.complemented());
    assert(automorphism_count(cmasks, g.n()) == result);
#endif
    return result;
}

AutCount automorphism_count_bruteforce(const GraphState& g) {
    if (g.n() > 8)
        throw std::invalid_argument("automorphism_count_bruteforce: refused for n > 8");
    const int n = g.n();
    std::vector<std::vector<bool>> adj(n, std::vector<bool>(n, false));
    for (int e = 0; e < g.slots(); ++e)
        if (g.level(e) == 1) {
            auto [i, j] = edge_pair(e, n);
            adj[i][j] = adj[j][i] = true;
        }
    Permutation p = Permutation::identity(n);
    AutCount count = 0;
    do {
        bool fixes = true;
        for (int i = 0; i < n && fixes; ++i)
            for (int j = i + 1; j < n; ++j)
                if (adj[i][j] != adj[p.image[i]][p.image[j]]) {
                    fixes = false;
                    break;
                }
        if (fixes) ++count;
    } while (std::next_permutation(p.image.begin(), p.image.end()));
    return count;
}

namespace {

// Branch-and-bound search for the relabeling minimizing the slot-ordered
// bit word. Assigning position p fixes word bits (i,p) for i < p; only the
// row-0 bits form a solid lexicographic prefix, so pruning compares those
// against a bound held fixed per subtree, and leaves settle the rest.
struct CanonicalSearch {
    int n;
    std::vector<std::vector<bool>> adj;
    std::vector<int> perm;  // perm[pos] = original vertex
    std::vector<bool> used;
    GraphState best_word;   // current best, updated at leaves
    GraphState bound_word;  // pruning reference, fixed during one subtree

    explicit CanonicalSearch(const GraphState& state)
        : n(state.n()), adj(n, std::vector<bool>(n, false)),
          perm(n, -1), used(n, false), best_word(state.n()), bound_word(state.n()) {
        for (int e = 0; e < state.slots(); ++e)
            if (state.level(e) == 1) {
                auto [i, j] = edge_pair(e, state.n());
                adj[i][j] = adj[j][i] = true;
            }
        best_word = word_for(Permutation::identity(n).image);
    }

    GraphState word_for(const std::vector<int>& p) const {
        GraphState out(n);
        for (int a = 0; a < n; ++a)
            for (int b = a + 1; b < n; ++b)
                if (adj[p[a]][p[b]]) out.set_level(edge_index(a, b, n), 1);
        return out;
    }

    void dfs(int pos, bool tight) {
        if (pos == n) {
            GraphState candidate = word_for(perm);
            if (candidate.compare_word(best_word) < 0) best_word = candidate;
            return;
        }
        for (int v = 0; v < n; ++v) {
            if (used[v]) continue;
            bool next_tight = tight;
            if (tight) {
                int bit = adj[perm[0]][v] ? 1 : 0;
                int bound_bit = bound_word.level(edge_index(0, pos, n));
                if (bit > bound_bit) continue;  // prefix already worse
                if (bit < bound_bit) next_tight = false;
            }
            used[v] = true;
            perm[pos] = v;
            dfs(pos + 1, next_tight);
            used[v] = false;
        }
    }

    GraphState run() {
        // the least word starts with the fewest row-0 ones, so position 0
        // can be restricted to minimum-degree vertices
        std::vector<int> deg(n, 0);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (adj[i][j]) ++deg[i];
        int min_deg = n;
        for (int d : deg) min_deg = std::min(min_deg, d);
        for (int v = 0; v < n; ++v) {
            if (deg[v] != min_deg) continue;
            bound_word = best_word;
            used[v] = true;
            perm[0] = v;
            dfs(1, true);
            used[v] = false;
        }
        return best_word;
    }
};

}  // namespace

GraphState canonical_form(const GraphState& g) {
    if (g.n() == 1) return g;
    CanonicalSearch search(g);
    return search.run();
}

bool are_isomorphic(const GraphState& g, const GraphState& h) {
    if (g.n() != h.n())
        throw std::invalid_argument("are_isomorphic: vertex counts differ");
    if (g.edges_at_level(1) != h.edges_at_level(1)) return false;
    auto dg = degrees(g, 1), dh = degrees(h, 1);
    std::sort(dg.begin(), dg.end());
    std::sort(dh.begin(), dh.end());
    if (dg != dh) return false;
    return canonical_form(g) == canonical_form(h);
}

AutCount labelings_count(const GraphState& g) {
    return factorial(g.n()) / automorphism_count(g);
}

}  // namespace qgraph::sym
