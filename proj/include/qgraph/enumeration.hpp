#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "qgraph/exact_number.hpp"
#include "qgraph/hamiltonian.hpp"

namespace qgraph::enumeration {

/// Thermodynamic quantities per vertex at one inverse temperature.
struct ThermoPoint {
    double beta = 0, f = 0, u = 0, c = 0;
};

/// Full set of per-vertex observables; s1/chi_s1 are NaN where the method
/// cannot produce them (closed form, Polya).
struct ExactObservables {
    double beta = 0;
    double f = 0, u = 0, c = 0;
    double s1 = 0, chi_s1 = 0;
    double m = 0, chi_m = 0;
};

/// Closed-form labeled free-model thermodynamics, valid for any n.
ThermoPoint labeled_free_thermo(double beta, const ham::ModelParams& p);
ExactObservables labeled_free_observables(double beta, const ham::ModelParams& p);

/// Probability that an edge sits in level 0: 1/(1+e^{-beta J dE}).
double er_edge_probability(double beta, const ham::ModelParams& p);

/// Exact state sums grouped by the integer energy statistics (a,b).
/// Weights are exact integers: state counts (labeled) or summed |Gamma|
/// (unlabeled), so the sweep is reproducible bit-identically.
struct BucketTable {
    struct Bucket {
        long a = 0, b = 0;              // (n0,n1) or (b0,b1)
        std::uint64_t weight = 0;       // sum of 1 or |Gamma|
        std::uint64_t comp = 0;         // weighted largest-component size
        std::uint64_t comp_sq = 0;
        std::uint64_t n1 = 0;           // weighted level-1 edge count
        std::uint64_t n1_sq = 0;
    };
    int n = 0;
    ham::Model kind = ham::Model::free_model;
    ham::Ensemble ensemble = ham::Ensemble::labeled;
    std::vector<Bucket> buckets;  // sorted by (a,b)
};

/// Sweep all 2^M states (Gray order, sharded by bit prefix). Refused above
/// n = 7 unless allow_long, which unlocks n = 8..10.
BucketTable exhaustive_partition_table(int n, ham::Model kind, ham::Ensemble ens,
                                       int threads = 1, bool allow_long = false);

/// Boltzmann moments of a bucket table at one beta (max-shifted sums).
struct MomentSet {
    double log_z = 0;
    double e_mean = 0, e_var = 0;
    double s1_mean = 0, s1_var = 0;
    double m_mean = 0, m_var = 0;
};
MomentSet evaluate(const BucketTable& table, double beta, const ham::ModelParams& p);

ExactObservables exact_observables(const BucketTable& table, double beta,
                                   const ham::ModelParams& p);

/// Coefficients a_m = number of unlabeled graphs with m edges (D(n,m)).
struct EdgePolynomial {
    int n = 0;
    std::vector<BigInt> coeff;  // index m = 0..M
    BigInt total() const;
};

/// One conjugacy class of S_n with its induced cycle structure on pairs.
struct PairGroupTerm {
    std::vector<int> vertex_cycles;            // partition of n, descending
    BigInt class_size;                         // n! / prod k^{m_k} m_k!
    std::vector<std::pair<int, int>> pair_cycles;  // (length, count)
};
struct PairGroupCycleIndex {
    int n = 0;
    std::vector<PairGroupTerm> terms;
};

std::vector<std::vector<int>> integer_partitions(int n);
std::vector<std::pair<int, int>> induced_pair_cycle_type(const std::vector<int>& parts);

/// Cycle index of S_n acting on unordered pairs; refused above n = 40.
PairGroupCycleIndex pair_group_cycle_index(int n);

/// Substitute a_j -> (1 + x^j) to count unlabeled graphs by edges.
EdgePolynomial graph_count_polynomial(const PairGroupCycleIndex& index);
EdgePolynomial graph_count_polynomial(int n);

/// Unlabeled free-model observables from D(n,m); works at any n <= 40.
ExactObservables polya_free_observables(const EdgePolynomial& counts, double beta,
                                        const ham::ModelParams& p);
double polya_unlabeled_free_log_z(const EdgePolynomial& counts, double beta,
                                  const ham::ModelParams& p);

}  // namespace qgraph::enumeration
