#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "qgraph/exact_number.hpp"
#include "qgraph/graph_state.hpp"

namespace qgraph::ham {

enum class Model { free_model, ising };
enum class Ensemble { labeled, unlabeled };

const char* to_string(Model m);
const char* to_string(Ensemble e);

/// One-particle energies, coupling and system size for either Hamiltonian.
struct ModelParams {
    Model kind = Model::free_model;
    int n = 0;
    double e0 = 0.0;
    double e1 = 1.0;
    double coupling = 1.0;  // J > 0

    static ModelParams make(Model kind, int n, double e0, double e1,
                            std::optional<double> coupling = std::nullopt);
};

/// Coupling that keeps the internal energy extensive: 2/(n-1) for the free
/// model, 1/C(n-1,2) for the Ising model.
double default_coupling(Model kind, int n);

/// The pair of integer statistics the energy is linear in:
/// free -> (n0, n1), Ising -> (b0, b1).
std::pair<long, long> energy_stats(const GraphState& g, Model kind);

/// H = J (E0*a + E1*b) with (a,b) = energy_stats.
double energy(const GraphState& g, const ModelParams& p);

/// energy(flip_edge(g,e)) - energy(g), O(1) given the endpoint level-1
/// degrees (d1i, d1j) before the flip.
double energy_delta_from_degrees(int level_of_slot, int d1i, int d1j, const ModelParams& p);
double energy_delta(const GraphState& g, int slot, const ModelParams& p);

/// Exact-rational twin of ModelParams for oracle-grade computations.
struct ExactParams {
    Model kind = Model::free_model;
    int n = 0;
    Rational e0, e1, coupling;

    static ExactParams from(const ModelParams& p);
};

Rational energy_exact(const GraphState& g, const ExactParams& p);

/// All minimal-energy isomorphism classes (canonical representatives, sorted
/// by bit word). Exhaustive over 2^M states; refused above n = 7.
std::vector<GraphState> ground_states(const ExactParams& p);

}  // namespace qgraph::ham
