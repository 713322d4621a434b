#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <set>

#include "qgraph/rng.hpp"
#include "qgraph/symmetry.hpp"

using namespace qgraph;
using namespace qgraph::sym;

namespace {

GraphState random_state(int n, RandomSource& rng) {
    GraphState g(n);
    for (int e = 0; e < g.slots(); ++e) g.set_level(e, static_cast<int>(rng.next_u64() & 1));
    return g;
}

Permutation random_permutation(int n, RandomSource& rng) {
    Permutation p = Permutation::identity(n);
    for (int i = n - 1; i > 0; --i) std::swap(p.image[i], p.image[rng.next_below(i + 1)]);
    return p;
}

}  // namespace

TEST_CASE("identity permutation fixes every state") {
    RandomSource rng(11);
    for (int n = 2; n <= 6; ++n) {
        GraphState g = random_state(n, rng);
        CHECK(apply_permutation(g, Permutation::identity(n)) == g);
    }
}

TEST_CASE("transposition relabels a single edge") {
    GraphState g(3);
    g.set_level(edge_index(0, 1, 3), 1);
    Permutation swap02{{2, 1, 0}};
    GraphState h = apply_permutation(g, swap02);
    CHECK(h.level(edge_index(1, 2, 3)) == 1);
    CHECK(h.edges_at_level(1) == 1);
}

TEST_CASE("permutation action preserves isomorphism invariants") {
    RandomSource rng(12);
    for (int trial = 0; trial < 50; ++trial) {
        int n = 3 + static_cast<int>(rng.next_below(5));
        GraphState g = random_state(n, rng);
        Permutation pi = random_permutation(n, rng);
        GraphState h = apply_permutation(g, pi);
        CHECK(h.edges_at_level(0) == g.edges_at_level(0));
        CHECK(h.edges_at_level(1) == g.edges_at_level(1));
        for (int level : {0, 1}) {
            auto dg = degrees(g, level), dh = degrees(h, level);
            std::sort(dg.begin(), dg.end());
            std::sort(dh.begin(), dh.end());
            CHECK(dg == dh);
            CHECK(angle_count(g, level) == angle_count(h, level));
        }
    }
}

TEST_CASE("permutation action composes") {
    RandomSource rng(13);
    for (int trial = 0; trial < 30; ++trial) {
        int n = 3 + static_cast<int>(rng.next_below(4));
        GraphState g = random_state(n, rng);
        Permutation sigma = random_permutation(n, rng);
        Permutation pi = random_permutation(n, rng);
        CHECK(apply_permutation(apply_permutation(g, sigma), pi) ==
              apply_permutation(g, pi.compose(sigma)));
    }
}

TEST_CASE("size mismatch is rejected") {
    GraphState g(4);
    CHECK_THROWS_AS(apply_permutation(g, Permutation::identity(3)), std::invalid_argument);
}

TEST_CASE("automorphism count of the all-zeros state is n!") {
    for (int n = 1; n <= 7; ++n) {
        GraphState g(n);
        CHECK(automorphism_count(g) == factorial(n));
    }
}

TEST_CASE("the 4-cycle has the dihedral group of order 8") {
    GraphState g(4);
    for (auto [i, j] : {std::pair{0, 1}, {1, 2}, {2, 3}, {0, 3}})
        g.set_level(edge_index(i, j, 4), 1);
    CHECK(automorphism_count(g) == 8);
    CHECK(automorphism_count_bruteforce(g) == 8);
}

TEST_CASE("brute-force count on named small graphs") {
    GraphState empty5(5);
    CHECK(automorphism_count_bruteforce(empty5) == 120);

    GraphState edge4(4);
    edge4.set_level(edge_index(0, 1, 4), 1);
    CHECK(automorphism_count_bruteforce(edge4) == 4);

    GraphState path3(3);
    path3.set_level(edge_index(0, 1, 3), 1);
    path3.set_level(edge_index(1, 2, 3), 1);
    CHECK(automorphism_count_bruteforce(path3) == 2);

    GraphState big(9);
    CHECK_THROWS_AS(automorphism_count_bruteforce(big), std::invalid_argument);
}

TEST_CASE("refined count equals brute force on every state for n<=5") {
    for (int n = 1; n <= 5; ++n) {
        GraphState g(n);
        int slots = g.slots();
        for (std::uint64_t word = 0; word < (std::uint64_t{1} << slots); ++word) {
            g.assign_words({word});
            CHECK(automorphism_count(g) == automorphism_count_bruteforce(g));
        }
    }
}

TEST_CASE("refined count equals brute force on a 10^4 random corpus, n in 6..7") {
    RandomSource rng(14);
    int failures = 0;
    for (int trial = 0; trial < 10000; ++trial) {
        int n = 6 + static_cast<int>(rng.next_below(2));
        GraphState g = random_state(n, rng);
        // bias part of the corpus toward sparse level-1 graphs, where the
        // automorphism groups are large
        if (trial % 3 == 0)
            for (int e = 0; e < g.slots(); ++e)
                if (rng.next_below(4) != 0) g.set_level(e, 0);
        if (automorphism_count(g) != automorphism_count_bruteforce(g)) ++failures;
    }
    CHECK(failures == 0);
}

TEST_CASE("automorphism count is invariant under complement and relabeling") {
    RandomSource rng(15);
    for (int trial = 0; trial < 60; ++trial) {
        int n = 3 + static_cast<int>(rng.next_below(5));
        GraphState g = random_state(n, rng);
        CHECK(automorphism_count(g) == automorphism_count(g.complemented()));
        Permutation pi = random_permutation(n, rng);
        CHECK(automorphism_count(apply_permutation(g, pi)) == automorphism_count(g));
    }
}

TEST_CASE("canonical form separates exactly the isomorphism classes at n=4") {
    std::set<std::string> classes;
    GraphState g(4);
    for (std::uint64_t word = 0; word < 64; ++word) {
        g.assign_words({word});
        classes.insert(serialize(canonical_form(g)));
    }
    CHECK(classes.size() == 11);
}

TEST_CASE("canonical form is constant on orbits and invariant under relabeling") {
    RandomSource rng(16);
    for (int trial = 0; trial < 40; ++trial) {
        int n = 3 + static_cast<int>(rng.next_below(4));
        GraphState g = random_state(n, rng);
        Permutation pi = random_permutation(n, rng);
        GraphState h = apply_permutation(g, pi);
        CHECK(canonical_form(g) == canonical_form(h));
        CHECK(are_isomorphic(g, h));
    }
}

TEST_CASE("path and triangle on three vertices are not isomorphic") {
    GraphState path(3), triangle(3);
    path.set_level(0, 1);
    path.set_level(2, 1);
    for (int e = 0; e < 3; ++e) triangle.set_level(e, 1);
    CHECK_FALSE(are_isomorphic(path, triangle));
}

TEST_CASE("labelings count") {
    GraphState empty4(4);
    CHECK(labelings_count(empty4) == 1);  // K_n at level 0

    GraphState path3(3);
    path3.set_level(edge_index(0, 1, 3), 1);
    path3.set_level(edge_index(1, 2, 3), 1);
    CHECK(labelings_count(path3) == 3);
}

TEST_CASE("labelings of all classes add up to the number of labeled states") {
    for (int n = 2; n <= 5; ++n) {
        std::map<std::string, AutCount> class_labelings;
        GraphState g(n);
        for (std::uint64_t word = 0; word < (std::uint64_t{1} << g.slots()); ++word) {
            g.assign_words({word});
            GraphState canon = canonical_form(g);
            class_labelings[serialize(canon)] = labelings_count(canon);
        }
        AutCount sum = 0;
        for (auto& [key, count] : class_labelings) sum += count;
        CHECK(sum == (AutCount{1} << g.slots()));
    }
}

TEST_CASE("cycle types and representative permutations") {
    Permutation p = permutation_with_cycle_type({3, 2, 1});
    CHECK(p.size() == 6);
    CycleType ct = cycle_type(p);
    CHECK(ct.parts == std::vector<int>{3, 2, 1});
    CHECK(p.sign() == 1 * -1);  // 3-cycle even, 2-cycle odd
}
