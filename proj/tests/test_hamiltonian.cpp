#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "qgraph/hamiltonian.hpp"
#include "qgraph/rng.hpp"
#include "qgraph/symmetry.hpp"

using namespace qgraph;
using namespace qgraph::ham;

namespace {

GraphState random_state(int n, RandomSource& rng) {
    GraphState g(n);
    for (int e = 0; e < g.slots(); ++e) g.set_level(e, static_cast<int>(rng.next_u64() & 1));
    return g;
}

// Ising energy through the line graph of K_n: (J/2) sum_k E_k sum_{e!=f}
// L_{ef} [level e = k][level f = k], with L_{ef} = 1 when slots share a vertex.
double ising_energy_line_graph(const GraphState& g, const ModelParams& p) {
    int n = g.n();
    double total = 0;
    for (int e = 0; e < g.slots(); ++e)
        for (int f = 0; f < g.slots(); ++f) {
            if (e == f) continue;
            auto [a, b] = edge_pair(e, n);
            auto [c, d] = edge_pair(f, n);
            bool adjacent = (a == c || a == d || b == c || b == d);
            if (!adjacent) continue;
            if (g.level(e) != g.level(f)) continue;
            total += (g.level(e) == 0 ? p.e0 : p.e1);
        }
    return p.coupling * total / 2.0;
}

// Ising energy by counting 2-walks directly over vertex triples.
double ising_energy_two_walks(const GraphState& g, const ModelParams& p) {
    int n = g.n();
    long b[2] = {0, 0};
    for (int j = 0; j < n; ++j)
        for (int i = 0; i < n; ++i)
            for (int k = i + 1; k < n; ++k) {
                if (j == i || j == k) continue;
                int lij = g.level(edge_index(std::min(i, j), std::max(i, j), n));
                int ljk = g.level(edge_index(std::min(j, k), std::max(j, k), n));
                if (lij == ljk) ++b[lij];
            }
    return p.coupling * (p.e0 * b[0] + p.e1 * b[1]);
}

}  // namespace

TEST_CASE("default couplings") {
    CHECK(default_coupling(Model::free_model, 5) == doctest::Approx(0.5));
    CHECK(default_coupling(Model::ising, 5) == doctest::Approx(1.0 / 6.0));
    CHECK(default_coupling(Model::free_model, 3) == doctest::Approx(1.0));
    CHECK_THROWS_AS(default_coupling(Model::free_model, 1), std::invalid_argument);
    CHECK_THROWS_AS(default_coupling(Model::ising, 2), std::invalid_argument);
}

TEST_CASE("free energy on reference states") {
    auto p = ModelParams::make(Model::free_model, 6, 0.0, 1.0);
    GraphState ground(6);
    CHECK(energy(ground, p) == doctest::Approx(0.0));

    GraphState excited(6);
    for (int e = 0; e < excited.slots(); ++e) excited.set_level(e, 1);
    CHECK(energy(excited, p) == doctest::Approx(6.0));  // u = E1 per vertex
}

TEST_CASE("ising energy on the all-level-0 triangle") {
    auto p = ModelParams::make(Model::ising, 3, -0.5, 1.0, 1.0);
    GraphState g(3);
    CHECK(energy(g, p) == doctest::Approx(-1.5));  // b0 = 3, b1 = 0
}

TEST_CASE("free energy delta is the constant edge quantum") {
    auto p = ModelParams::make(Model::free_model, 5, -0.25, 1.0);
    GraphState g(5);
    double quantum = p.coupling * (p.e1 - p.e0);
    CHECK(energy_delta(g, 3, p) == doctest::Approx(quantum));
    g.set_level(3, 1);
    CHECK(energy_delta(g, 3, p) == doctest::Approx(-quantum));
}

TEST_CASE("ising delta equals full recomputation on 1e5 random flips") {
    RandomSource rng(21);
    double worst = 0;
    for (int trial = 0; trial < 100000; ++trial) {
        int n = 3 + static_cast<int>(rng.next_below(10));  // 3..12
        auto p = ModelParams::make(Model::ising, n, -0.5, 1.0);
        GraphState g = random_state(n, rng);
        int slot = rng.next_below(g.slots());
        double delta = energy_delta(g, slot, p);
        double recomputed = energy(flip_edge(g, slot), p) - energy(g, p);
        worst = std::max(worst, std::fabs(delta - recomputed));
    }
    CHECK(worst <= 1e-12);
}

TEST_CASE("flip there and back sums to zero") {
    RandomSource rng(22);
    for (Model kind : {Model::free_model, Model::ising}) {
        auto p = ModelParams::make(kind, 6, 0.3, 1.0);
        GraphState g = random_state(6, rng);
        for (int e = 0; e < g.slots(); ++e) {
            double forward = energy_delta(g, e, p);
            double backward = energy_delta(flip_edge(g, e), e, p);
            CHECK(forward + backward == doctest::Approx(0.0).epsilon(1e-14));
        }
    }
}

TEST_CASE("energy is isomorphism invariant") {
    RandomSource rng(23);
    for (Model kind : {Model::free_model, Model::ising}) {
        auto p = ModelParams::make(kind, 6, -0.5, 1.0);
        for (int trial = 0; trial < 40; ++trial) {
            GraphState g = random_state(6, rng);
            sym::Permutation pi = sym::Permutation::identity(6);
            for (int i = 5; i > 0; --i) std::swap(pi.image[i], pi.image[rng.next_below(i + 1)]);
            CHECK(energy(sym::apply_permutation(g, pi), p) == doctest::Approx(energy(g, p)));
        }
    }
}

TEST_CASE("the three Ising energy forms agree on every state up to n=6") {
    for (int n = 3; n <= 6; ++n) {
        auto p = ModelParams::make(Model::ising, n, -0.5, 1.0);
        GraphState g(n);
        for (std::uint64_t word = 0; word < (std::uint64_t{1} << g.slots()); ++word) {
            g.assign_words({word});
            double by_degrees = energy(g, p);
            CHECK(by_degrees == doctest::Approx(ising_energy_two_walks(g, p)).epsilon(1e-12));
            CHECK(by_degrees == doctest::Approx(ising_energy_line_graph(g, p)).epsilon(1e-12));
        }
    }
}

TEST_CASE("E0 = -E1 Ising matches free-model energy differences") {
    int n = 6;
    auto ising = ModelParams::make(Model::ising, n, -1.0, 1.0, 1.0);
    auto free_ref = ModelParams::make(Model::free_model, n, 0.0, 2.0 * (n - 2), 1.0);
    // each edge moving to level 1 gains 2(n-2) angle terms of weight E1=1
    RandomSource rng(24);
    for (int trial = 0; trial < 50; ++trial) {
        GraphState a = random_state(n, rng);
        GraphState b = random_state(n, rng);
        double d_ising = energy(a, ising) - energy(b, ising);
        double d_free = energy(a, free_ref) - energy(b, free_ref);
        CHECK(d_ising == doctest::Approx(d_free).epsilon(1e-12));
    }
}

TEST_CASE("ground states of the free model") {
    auto p = ExactParams::from(ModelParams::make(Model::free_model, 5, 0.0, 1.0));
    auto classes = ground_states(p);
    REQUIRE(classes.size() == 1);
    CHECK(classes[0].edges_at_level(1) == 0);
}

TEST_CASE("ising ground states at n=7") {
    auto matchings = ground_states(ExactParams::from(ModelParams::make(Model::ising, 7, 0.0, 1.0)));
    CHECK(matchings.size() == 4);  // level-1 graphs of maximum degree 1
    for (const auto& g : matchings) {
        for (int d : degrees(g, 1)) CHECK(d <= 1);
    }

    auto ferro = ground_states(ExactParams::from(ModelParams::make(Model::ising, 7, -1.0, 1.0)));
    REQUIRE(ferro.size() == 1);
    CHECK(ferro[0].edges_at_level(1) == 0);

    GraphState too_big(8);
    CHECK_THROWS_AS(ground_states(ExactParams::from(ModelParams::make(Model::ising, 8, 0.0, 1.0))),
                    std::invalid_argument);
}
