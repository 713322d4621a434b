#include "qgraph/hamiltonian.hpp"

#include <algorithm>
#include <stdexcept>

#include "qgraph/symmetry.hpp"

namespace qgraph::ham {

const char* to_string(Model m) { return m == Model::free_model ? "free" : "ising"; }
const char* to_string(Ensemble e) { return e == Ensemble::labeled ? "labeled" : "unlabeled"; }

double default_coupling(Model kind, int n) {
    if (kind == Model::free_model) {
        if (n < 2) throw std::invalid_argument("default_coupling: free model needs n >= 2");
        return 2.0 / (n - 1);
    }
    if (n < 3) throw std::invalid_argument("default_coupling: Ising model needs n >= 3");
    return 1.0 / (static_cast<double>(n - 1) * (n - 2) / 2.0);
}

ModelParams ModelParams::make(Model kind, int n, double e0, double e1,
                              std::optional<double> coupling) {
    ModelParams p;
    p.kind = kind;
    p.n = n;
    p.e0 = e0;
    p.e1 = e1;
    p.coupling = coupling ? *coupling : default_coupling(kind, n);
    if (!(p.coupling > 0)) throw std::invalid_argument("ModelParams: coupling must be > 0");
    return p;
}

std::pair<long, long> energy_stats(const GraphState& g, Model kind) {
    if (kind == Model::free_model) {
        long n1 = g.edges_at_level(1);
        return {g.slots() - n1, n1};
    }
    return {angle_count(g, 0), angle_count(g, 1)};
}

double energy(const GraphState& g, const ModelParams& p) {
    if (p.n != g.n()) throw std::invalid_argument("energy: params size mismatch");
    auto [a, b] = energy_stats(g, p.kind);
    return p.coupling * (p.e0 * a + p.e1 * b);
}

double energy_delta_from_degrees(int level_of_slot, int d1i, int d1j, const ModelParams& p) {
    if (p.kind == Model::free_model)
        return (level_of_slot == 0 ? 1.0 : -1.0) * p.coupling * (p.e1 - p.e0);
    // angle counts change only through the two endpoint degrees:
    // leaving level a removes (d^a - 1) angles per endpoint, entering the
    // other level adds d^other per endpoint
    int d0i = p.n - 1 - d1i;
    int d0j = p.n - 1 - d1j;
    long db0, db1;
    if (level_of_slot == 1) {
        db1 = -static_cast<long>(d1i - 1) - (d1j - 1);
        db0 = static_cast<long>(d0i) + d0j;
    } else {
        db0 = -static_cast<long>(d0i - 1) - (d0j - 1);
        db1 = static_cast<long>(d1i) + d1j;
    }
    return p.coupling * (p.e0 * db0 + p.e1 * db1);
}

double energy_delta(const GraphState& g, int slot, const ModelParams& p) {
    if (p.n != g.n()) throw std::invalid_argument("energy_delta: params size mismatch");
    auto [i, j] = edge_pair(slot, g.n());
    int d1i = 0, d1j = 0;
    for (int v = 0; v < g.n(); ++v) {
        if (v != i && g.level(edge_index(std::min(i, v), std::max(i, v), g.n())) == 1) ++d1i;
        if (v != j && g.level(edge_index(std::min(j, v), std::max(j, v), g.n())) == 1) ++d1j;
    }
    return energy_delta_from_degrees(g.level(slot), d1i, d1j, p);
}

ExactParams ExactParams::from(const ModelParams& p) {
    ExactParams e;
    e.kind = p.kind;
    e.n = p.n;
    e.e0 = rational_from_double(p.e0);
    e.e1 = rational_from_double(p.e1);
    e.coupling = rational_from_double(p.coupling);
    return e;
}

Rational energy_exact(const GraphState& g, const ExactParams& p) {
    if (p.n != g.n()) throw std::invalid_argument("energy_exact: params size mismatch");
    auto [a, b] = energy_stats(g, p.kind);
    return p.coupling * (p.e0 * a + p.e1 * b);
}

std::vector<GraphState> ground_states(const ExactParams& p) {
    if (p.n > 7) throw std::invalid_argument("ground_states: refused for n > 7");
    const int slots = edge_slot_count(p.n);
    GraphState g(p.n);
    bool have_min = false;
    Rational min_value;
    std::vector<std::uint64_t> argmin_words;
    for (std::uint64_t word = 0; word < (std::uint64_t{1} << slots); ++word) {
        g.assign_words({word});
        auto [a, b] = energy_stats(g, p.kind);
        Rational value = p.e0 * a + p.e1 * b;  // J > 0 does not change the argmin
        if (!have_min || value < min_value) {
            have_min = true;
            min_value = value;
            argmin_words.clear();
        }
        if (value == min_value) argmin_words.push_back(word);
    }
    std::vector<GraphState> classes;
    for (auto word : argmin_words) {
        g.assign_words({word});
        GraphState canon = sym::canonical_form(g);
        bool known = false;
        for (const auto& c : classes)
            if (c == canon) {
                known = true;
                break;
            }
        if (!known) classes.push_back(canon);
    }
    std::sort(classes.begin(), classes.end(),
              [](const GraphState& x, const GraphState& y) { return x.compare_word(y) < 0; });
    return classes;
}

}  // namespace qgraph::ham
