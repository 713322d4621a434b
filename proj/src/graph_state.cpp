#include "qgraph/graph_state.hpp"

#include <bit>
#include <stdexcept>

#include "qgraph/union_find.hpp"

namespace qgraph {

GraphState::GraphState(int n) : n_(n), slots_(edge_slot_count(n)) {
    if (n < 1) throw std::invalid_argument("GraphState: n must be >= 1");
    words_.assign((slots_ + 63) / 64, 0);
    if (words_.empty()) words_.push_back(0);  // n = 1 has no slots but keeps a word
}

GraphState::GraphState(int n, const std::vector<int>& levels) : GraphState(n) {
    if (static_cast<int>(levels.size()) != slots_)
        throw std::invalid_argument("GraphState: level list size must equal slot count");
    for (int e = 0; e < slots_; ++e) set_level(e, levels[e]);
}

void GraphState::check_slot(int slot) const {
    if (slot < 0 || slot >= slots_)
        throw std::invalid_argument("GraphState: edge slot out of range");
}

int GraphState::level(int slot) const {
    check_slot(slot);
    return static_cast<int>((words_[slot >> 6] >> (slot & 63)) & 1u);
}

void GraphState::set_level(int slot, int value) {
    check_slot(slot);
    if (value != 0 && value != 1)
        throw std::invalid_argument("GraphState: level must be 0 or 1");
    std::uint64_t mask = std::uint64_t{1} << (slot & 63);
    if (value)
        words_[slot >> 6] |= mask;
    else
        words_[slot >> 6] &= ~mask;
}

void GraphState::flip(int slot) {
    check_slot(slot);
    words_[slot >> 6] ^= std::uint64_t{1} << (slot & 63);
}

int GraphState::edges_at_level(int level) const {
    if (level != 0 && level != 1)
        throw std::invalid_argument("GraphState: level must be 0 or 1");
    int ones = 0;
    for (auto w : words_) ones += std::popcount(w);
    return level == 1 ? ones : slots_ - ones;
}

GraphState GraphState::complemented() const {
    GraphState out(n_);
    for (std::size_t k = 0; k < words_.size(); ++k) out.words_[k] = ~words_[k];
    // clear bits beyond the last slot
    int rem = slots_ & 63;
    if (slots_ == 0)
        out.words_.back() = 0;
    else if (rem != 0)
        out.words_.back() &= (std::uint64_t{1} << rem) - 1;
    return out;
}

void GraphState::assign_words(const std::vector<std::uint64_t>& w) {
    if (w.size() != words_.size())
        throw std::invalid_argument("GraphState: word count mismatch");
    words_ = w;
}

int GraphState::compare_word(const GraphState& other) const {
    if (n_ != other.n_)
        throw std::invalid_argument("GraphState: comparing states of different order");
    for (std::size_t k = 0; k < words_.size(); ++k) {
        std::uint64_t diff = words_[k] ^ other.words_[k];
        if (diff) {
            int bit = std::countr_zero(diff);
            // at the first differing slot, the state holding 0 is smaller
            return (words_[k] >> bit) & 1 ? 1 : -1;
        }
    }
    return 0;
}

std::vector<int> degrees(const GraphState& g, int level) {
    if (level != 0 && level != 1)
        throw std::invalid_argument("degrees: level must be 0 or 1");
    std::vector<int> d(g.n(), 0);
    for (int e = 0; e < g.slots(); ++e) {
        if (g.level(e) == level) {
            auto [i, j] = edge_pair(e, g.n());
            ++d[i];
            ++d[j];
        }
    }
    return d;
}

long angle_count(const GraphState& g, int level) {
    long total = 0;
    for (int d : degrees(g, level)) total += static_cast<long>(d) * (d - 1) / 2;
    return total;
}

int largest_component_size(const GraphState& g) {
    UnionFind uf(g.n());
    for (int e = 0; e < g.slots(); ++e)
        if (g.level(e) == 1) {
            auto [i, j] = edge_pair(e, g.n());
            uf.unite(i, j);
        }
    return uf.largest_component();
}

double largest_component_fraction(const GraphState& g) {
    return static_cast<double>(largest_component_size(g)) / g.n();
}

GraphState flip_edge(const GraphState& g, int slot) {
    GraphState out = g;
    out.flip(slot);
    return out;
}

std::vector<std::uint64_t> level1_masks(const GraphState& g) {
    if (g.n() > 64) throw std::invalid_argument("level1_masks: n must be <= 64");
    std::vector<std::uint64_t> masks(g.n(), 0);
    for (int e = 0; e < g.slots(); ++e)
        if (g.level(e) == 1) {
            auto [i, j] = edge_pair(e, g.n());
            masks[i] |= std::uint64_t{1} << j;
            masks[j] |= std::uint64_t{1} << i;
        }
    return masks;
}

int largest_component_size(const std::vector<std::uint64_t>& masks, int n) {
    UnionFind uf(n);
    for (int i = 0; i < n; ++i) {
        std::uint64_t m = masks[i] >> i;  // each edge once
        while (m) {
            int j = i + std::countr_zero(m);
            m &= m - 1;
            uf.unite(i, j);
        }
    }
    return uf.largest_component();
}

std::string serialize(const GraphState& g) {
    std::string out = "n=" + std::to_string(g.n()) + ";";
    out.reserve(out.size() + g.slots());
    for (int e = 0; e < g.slots(); ++e) out.push_back(g.level(e) ? '1' : '0');
    return out;
}

namespace {
[[noreturn]] void parse_fail(const std::string& what, std::size_t offset) {
    throw std::invalid_argument("parse_graph: " + what + " at byte " + std::to_string(offset));
}
}  // namespace

GraphState parse_graph(const std::string& text) {
    std::size_t pos = 0;
    if (text.size() < 2 || text[0] != 'n' || text[1] != '=') parse_fail("expected \"n=\"", 0);
    pos = 2;
    std::size_t digits_start = pos;
    while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') ++pos;
    if (pos == digits_start) parse_fail("expected vertex count", pos);
    if (pos - digits_start > 9) parse_fail("vertex count too large", digits_start);
    int n = std::stoi(text.substr(digits_start, pos - digits_start));
    if (n < 1) parse_fail("vertex count must be >= 1", digits_start);
    if (pos >= text.size() || text[pos] != ';') parse_fail("expected ';'", pos);
    ++pos;
    int slots = edge_slot_count(n);
    GraphState g(n);
    for (int e = 0; e < slots; ++e, ++pos) {
        if (pos >= text.size()) parse_fail("bit string shorter than slot count", pos);
        char c = text[pos];
        if (c != '0' && c != '1') parse_fail("expected '0' or '1'", pos);
        if (c == '1') g.set_level(e, 1);
    }
    if (pos != text.size()) parse_fail("trailing characters after bit string", pos);
    return g;
}

}  // namespace qgraph
