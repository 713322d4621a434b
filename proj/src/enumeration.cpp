#include "qgraph/enumeration.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <thread>

#include "qgraph/symmetry.hpp"
#include "qgraph/union_find.hpp"

namespace qgraph::enumeration {

namespace {

double log_one_plus_exp(double x) {
    return x > 0 ? x + std::log1p(std::exp(-x)) : std::log1p(std::exp(x));
}

double sech_sq(double y) {
    y = std::fabs(y);
    if (y > 350.0) {
        double e = std::exp(-y);
        return 4.0 * e * e;  // (2e^-y / (1+e^-2y))^2 with the tail dropped
    }
    double c = std::cosh(y);
    return 1.0 / (c * c);
}

}  // namespace

ThermoPoint labeled_free_thermo(double beta, const ham::ModelParams& p) {
    if (p.kind != ham::Model::free_model)
        throw std::invalid_argument("labeled_free_thermo: free model only");
    const double m_slots = static_cast<double>(p.n) * (p.n - 1) / 2.0;
    const double de = p.e1 - p.e0;
    const double theta = beta * p.coupling * de;
    const double edge_p = 1.0 / (1.0 + std::exp(-theta));
    ThermoPoint t;
    t.beta = beta;
    // log Z = -beta J E1 M + M ln(1 + e^theta)
    if (beta > 0) {
        double log_z = -beta * p.coupling * p.e1 * m_slots + m_slots * log_one_plus_exp(theta);
        t.f = -log_z / (beta * p.n);
    } else {
        t.f = -std::numeric_limits<double>::infinity();
    }
    t.u = p.coupling * (p.n - 1) / 2.0 * (p.e1 - de * edge_p);
    t.c = (p.n - 1) / 2.0 * (theta / 2.0) * (theta / 2.0) * sech_sq(theta / 2.0);
    return t;
}

double er_edge_probability(double beta, const ham::ModelParams& p) {
    if (p.kind != ham::Model::free_model)
        throw std::invalid_argument("er_edge_probability: free model only");
    return 1.0 / (1.0 + std::exp(-beta * p.coupling * (p.e1 - p.e0)));
}

ExactObservables labeled_free_observables(double beta, const ham::ModelParams& p) {
    ThermoPoint t = labeled_free_thermo(beta, p);
    double edge_p = er_edge_probability(beta, p);
    ExactObservables o;
    o.beta = beta;
    o.f = t.f;
    o.u = t.u;
    o.c = t.c;
    o.m = 1.0 - edge_p;                       // mean level-1 density
    o.chi_m = beta * edge_p * (1.0 - edge_p);  // beta M Var(n1/M)
    o.s1 = std::numeric_limits<double>::quiet_NaN();
    o.chi_s1 = std::numeric_limits<double>::quiet_NaN();
    return o;
}

namespace {

// Incremental state statistics for the Gray-code sweep.
struct SweepState {
    int n;
    int slots;
    std::vector<std::uint64_t> masks;  // level-1 adjacency
    std::vector<int> d1;
    long n1 = 0, b0 = 0, b1 = 0;

    explicit SweepState(int n_) : n(n_), slots(edge_slot_count(n_)), masks(n_, 0), d1(n_, 0) {
        // all edges at level 0: n vertices of degree n-1, so n*C(n-1,2) angles
        b0 = static_cast<long>(n) * ((n - 1) * (n - 2) / 2);
    }

    void flip(int slot, const std::pair<int, int>& pair) {
        auto [i, j] = pair;
        bool was_level1 = (masks[i] >> j) & 1;
        int d0i = n - 1 - d1[i], d0j = n - 1 - d1[j];
        if (was_level1) {
            b1 -= (d1[i] - 1) + (d1[j] - 1);
            b0 += d0i + d0j;
            --d1[i];
            --d1[j];
            --n1;
            masks[i] &= ~(std::uint64_t{1} << j);
            masks[j] &= ~(std::uint64_t{1} << i);
        } else {
            b0 -= (d0i - 1) + (d0j - 1);
            b1 += d1[i] + d1[j];
            ++d1[i];
            ++d1[j];
            ++n1;
            masks[i] |= std::uint64_t{1} << j;
            masks[j] |= std::uint64_t{1} << i;
        }
        (void)slot;
    }
};

struct Accum {
    std::uint64_t weight = 0, comp = 0, comp_sq = 0, n1 = 0, n1_sq = 0;
};

using BucketMap = std::map<std::pair<long, long>, Accum>;

void record_state(BucketMap& acc, const SweepState& s, ham::Model kind, ham::Ensemble ens) {
    std::uint64_t w = 1;
    if (ens == ham::Ensemble::unlabeled)
        w = static_cast<std::uint64_t>(sym::automorphism_count(s.masks, s.n));
    auto comp = static_cast<std::uint64_t>(largest_component_size(s.masks, s.n));
    std::pair<long, long> key = kind == ham::Model::free_model
                                    ? std::pair<long, long>{s.slots - s.n1, s.n1}
                                    : std::pair<long, long>{s.b0, s.b1};
    Accum& a = acc[key];
    a.weight += w;
    a.comp += w * comp;
    a.comp_sq += w * comp * comp;
    a.n1 += w * static_cast<std::uint64_t>(s.n1);
    a.n1_sq += w * static_cast<std::uint64_t>(s.n1) * static_cast<std::uint64_t>(s.n1);
}

}  // namespace

BucketTable exhaustive_partition_table(int n, ham::Model kind, ham::Ensemble ens,
                                       int threads, bool allow_long) {
    if (n < 1) throw std::invalid_argument("exhaustive_partition_table: n must be >= 1");
    int cap = allow_long ? 10 : 7;
    if (n > cap)
        throw std::invalid_argument(
            "exhaustive_partition_table: refused for n > " + std::to_string(cap) +
            (allow_long ? "" : " (pass the long-run flag for n = 8..10)"));
    const int slots = edge_slot_count(n);
    // slot -> vertex pair, computed once
    std::vector<std::pair<int, int>> pairs(slots);
    for (int e = 0; e < slots; ++e) pairs[e] = edge_pair(e, n);

    int prefix_bits = 0;
    if (slots > 16) {
        int want = std::bit_width(static_cast<unsigned>(std::max(1, threads) * 4 - 1));
        prefix_bits = std::min(want, slots - 16);
    }
    const int suffix_bits = slots - prefix_bits;
    const std::uint64_t shards = std::uint64_t{1} << prefix_bits;

    std::vector<BucketMap> partial(shards);
    auto run_shard = [&](std::uint64_t shard) {
        SweepState s(n);
        std::uint64_t base = shard << suffix_bits;
        // set prefix bits of the initial word
        for (int e = 0; e < slots; ++e)
            if ((base >> e) & 1) s.flip(e, pairs[e]);
        BucketMap& acc = partial[shard];
        record_state(acc, s, kind, ens);
        for (std::uint64_t k = 1; k < (std::uint64_t{1} << suffix_bits); ++k) {
            int bit = std::countr_zero(k);  // Gray-code step flips this slot
            s.flip(bit, pairs[bit]);
            record_state(acc, s, kind, ens);
        }
    };

    int workers = std::max(1, threads);
    if (workers == 1 || shards == 1) {
        for (std::uint64_t shard = 0; shard < shards; ++shard) run_shard(shard);
    } else {
        std::vector<std::thread> pool;
        std::atomic<std::uint64_t> next{0};
        for (int t = 0; t < workers; ++t)
            pool.emplace_back([&] {
                for (std::uint64_t shard = next.fetch_add(1); shard < shards;
                     shard = next.fetch_add(1))
                    run_shard(shard);
            });
        for (auto& th : pool) th.join();
    }

    // deterministic merge in shard order (sums are exact integers)
    BucketMap merged;
    for (auto& shard_map : partial)
        for (auto& [key, a] : shard_map) {
            Accum& m = merged[key];
            m.weight += a.weight;
            m.comp += a.comp;
            m.comp_sq += a.comp_sq;
            m.n1 += a.n1;
            m.n1_sq += a.n1_sq;
        }

    BucketTable table;
    table.n = n;
    table.kind = kind;
    table.ensemble = ens;
    for (auto& [key, a] : merged)
        table.buckets.push_back({key.first, key.second, a.weight, a.comp, a.comp_sq,
                                 a.n1, a.n1_sq});
    return table;
}

MomentSet evaluate(const BucketTable& table, double beta, const ham::ModelParams& p) {
    if (p.n != table.n) throw std::invalid_argument("evaluate: params size mismatch");
    const double m_slots = static_cast<double>(table.n) * (table.n - 1) / 2.0;
    auto energy_of = [&](const BucketTable::Bucket& b) {
        return p.coupling * (p.e0 * b.a + p.e1 * b.b);
    };
    double e_min = std::numeric_limits<double>::infinity();
    for (const auto& b : table.buckets) e_min = std::min(e_min, energy_of(b));

    long double z = 0, se = 0, ss1 = 0, sm = 0;
    for (const auto& b : table.buckets) {
        long double w = static_cast<long double>(b.weight) *
                        std::exp(static_cast<long double>(-beta * (energy_of(b) - e_min)));
        z += w;
        se += w * energy_of(b);
        ss1 += w * (static_cast<long double>(b.comp) / b.weight);
        sm += w * (static_cast<long double>(b.n1) / b.weight);
    }
    MomentSet ms;
    ms.e_mean = static_cast<double>(se / z);
    ms.s1_mean = static_cast<double>(ss1 / z) / table.n;
    ms.m_mean = static_cast<double>(sm / z) / m_slots;

    // two-pass variances stay non-negative
    long double ve = 0, vs1 = 0, vm = 0;
    for (const auto& b : table.buckets) {
        long double w = static_cast<long double>(b.weight) *
                        std::exp(static_cast<long double>(-beta * (energy_of(b) - e_min)));
        long double de = energy_of(b) - ms.e_mean;
        ve += w * de * de;
        // within-bucket spread of s1 and m contributes through the second moment
        long double s1b = static_cast<long double>(b.comp) / b.weight / table.n;
        long double s1sqb = static_cast<long double>(b.comp_sq) / b.weight /
                            (static_cast<long double>(table.n) * table.n);
        vs1 += w * (s1sqb - 2 * ms.s1_mean * s1b + ms.s1_mean * ms.s1_mean);
        long double mb = static_cast<long double>(b.n1) / b.weight / m_slots;
        long double msqb = static_cast<long double>(b.n1_sq) / b.weight / (m_slots * m_slots);
        vm += w * (msqb - 2 * ms.m_mean * mb + ms.m_mean * ms.m_mean);
    }
    ms.e_var = std::max(0.0, static_cast<double>(ve / z));
    ms.s1_var = std::max(0.0, static_cast<double>(vs1 / z));
    ms.m_var = std::max(0.0, static_cast<double>(vm / z));

    ms.log_z = static_cast<double>(std::log(z)) - beta * e_min;
    if (table.ensemble == ham::Ensemble::unlabeled)
        ms.log_z -= std::lgamma(static_cast<double>(table.n) + 1.0);
    return ms;
}

ExactObservables exact_observables(const BucketTable& table, double beta,
                                   const ham::ModelParams& p) {
    MomentSet ms = evaluate(table, beta, p);
    const double m_slots = static_cast<double>(table.n) * (table.n - 1) / 2.0;
    ExactObservables o;
    o.beta = beta;
    o.f = beta > 0 ? -ms.log_z / (beta * table.n) : -std::numeric_limits<double>::infinity();
    o.u = ms.e_mean / table.n;
    o.c = beta * beta * ms.e_var / table.n;
    o.s1 = ms.s1_mean;
    o.chi_s1 = beta * table.n * ms.s1_var;
    o.m = ms.m_mean;
    o.chi_m = beta * m_slots * ms.m_var;
    return o;
}

BigInt EdgePolynomial::total() const {
    BigInt t = 0;
    for (const auto& c : coeff) t += c;
    return t;
}

std::vector<std::vector<int>> integer_partitions(int n) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int remaining, int max_part) -> void {
        if (remaining == 0) {
            out.push_back(cur);
            return;
        }
        for (int part = std::min(remaining, max_part); part >= 1; --part) {
            cur.push_back(part);
            self(self, remaining - part, part);
            cur.pop_back();
        }
    };
    rec(rec, n, n);
    return out;
}

std::vector<std::pair<int, int>> induced_pair_cycle_type(const std::vector<int>& parts) {
    std::map<int, long> cycles;
    // pairs inside one vertex cycle of length k
    for (int k : parts) {
        if (k < 2) continue;
        if (k % 2 == 1)
            cycles[k] += (k - 1) / 2;
        else {
            cycles[k / 2] += 1;  // antipodal pairs close after k/2 steps
            cycles[k] += (k - 2) / 2;
        }
    }
    // pairs across two distinct vertex cycles of lengths k and l
    for (std::size_t i = 0; i < parts.size(); ++i)
        for (std::size_t j = i + 1; j < parts.size(); ++j) {
            int g = std::gcd(parts[i], parts[j]);
            int l = parts[i] / g * parts[j];
            cycles[l] += g;
        }
    std::vector<std::pair<int, int>> out;
    for (auto [len, count] : cycles) out.emplace_back(len, static_cast<int>(count));
    return out;
}

PairGroupCycleIndex pair_group_cycle_index(int n) {
    if (n < 1 || n > 40)
        throw std::invalid_argument("pair_group_cycle_index: n must be in 1..40");
    BigInt n_fact = 1;
    for (int k = 2; k <= n; ++k) n_fact *= k;
    PairGroupCycleIndex index;
    index.n = n;
    for (const auto& parts : integer_partitions(n)) {
        PairGroupTerm term;
        term.vertex_cycles = parts;
        std::map<int, int> mult;
        for (int k : parts) ++mult[k];
        BigInt denom = 1;
        for (auto [k, m] : mult) {
            for (int i = 0; i < m; ++i) denom *= k;
            for (int i = 2; i <= m; ++i) denom *= i;
        }
        term.class_size = n_fact / denom;
        term.pair_cycles = induced_pair_cycle_type(parts);
        index.terms.push_back(std::move(term));
    }
    return index;
}

EdgePolynomial graph_count_polynomial(const PairGroupCycleIndex& index) {
    const int n = index.n;
    const int m_slots = edge_slot_count(n);
    BigInt n_fact = 1;
    for (int k = 2; k <= n; ++k) n_fact *= k;
    std::vector<BigInt> total(m_slots + 1, 0);
    for (const auto& term : index.terms) {
        std::vector<BigInt> poly{1};
        for (auto [len, count] : term.pair_cycles) {
            // multiply by (1 + x^len)^count
            std::vector<BigInt> binom(count + 1);
            binom[0] = 1;
            for (int i = 1; i <= count; ++i)
                binom[i] = binom[i - 1] * (count - i + 1) / i;
            std::vector<BigInt> next(poly.size() + static_cast<std::size_t>(len) * count, 0);
            for (std::size_t d = 0; d < poly.size(); ++d) {
                if (poly[d] == 0) continue;
                for (int i = 0; i <= count; ++i)
                    next[d + static_cast<std::size_t>(len) * i] += poly[d] * binom[i];
            }
            poly = std::move(next);
        }
        for (std::size_t d = 0; d < poly.size(); ++d) total[d] += term.class_size * poly[d];
    }
    EdgePolynomial out;
    out.n = n;
    out.coeff.resize(m_slots + 1);
    for (int m = 0; m <= m_slots; ++m) {
        BigInt q = total[m] / n_fact;
        if (q * n_fact != total[m])
            throw std::logic_error("graph_count_polynomial: class sum not divisible by n!");
        out.coeff[m] = q;
    }
    return out;
}

EdgePolynomial graph_count_polynomial(int n) {
    return graph_count_polynomial(pair_group_cycle_index(n));
}

double polya_unlabeled_free_log_z(const EdgePolynomial& counts, double beta,
                                  const ham::ModelParams& p) {
    if (p.kind != ham::Model::free_model)
        throw std::invalid_argument("polya log Z: free model only");
    const int m_slots = edge_slot_count(counts.n);
    double best = -std::numeric_limits<double>::infinity();
    std::vector<double> logw(m_slots + 1);
    for (int n1 = 0; n1 <= m_slots; ++n1) {
        // D(n,m) >= 1 for every 0 <= m <= M
        double log_d = static_cast<double>(std::log(counts.coeff[n1].convert_to<long double>()));
        double energy = p.coupling * (p.e0 * (m_slots - n1) + p.e1 * n1);
        logw[n1] = log_d - beta * energy;
        best = std::max(best, logw[n1]);
    }
    long double z = 0;
    for (int n1 = 0; n1 <= m_slots; ++n1)
        z += std::exp(static_cast<long double>(logw[n1] - best));
    return static_cast<double>(std::log(z)) + best;
}

ExactObservables polya_free_observables(const EdgePolynomial& counts, double beta,
                                        const ham::ModelParams& p) {
    if (p.kind != ham::Model::free_model)
        throw std::invalid_argument("polya observables: free model only");
    if (p.n != counts.n) throw std::invalid_argument("polya observables: size mismatch");
    const int m_slots = edge_slot_count(counts.n);
    const double m_d = static_cast<double>(m_slots);

    std::vector<double> log_d(m_slots + 1), energy(m_slots + 1);
    for (int n1 = 0; n1 <= m_slots; ++n1) {
        log_d[n1] = static_cast<double>(std::log(counts.coeff[n1].convert_to<long double>()));
        energy[n1] = p.coupling * (p.e0 * (m_slots - n1) + p.e1 * n1);
    }
    double best = -std::numeric_limits<double>::infinity();
    for (int n1 = 0; n1 <= m_slots; ++n1) best = std::max(best, log_d[n1] - beta * energy[n1]);

    long double z = 0, se = 0, sm = 0;
    for (int n1 = 0; n1 <= m_slots; ++n1) {
        long double w = std::exp(static_cast<long double>(log_d[n1] - beta * energy[n1] - best));
        z += w;
        se += w * energy[n1];
        sm += w * n1;
    }
    long double e_mean = se / z, m_mean = sm / z / m_d;
    long double ve = 0, vm = 0;
    for (int n1 = 0; n1 <= m_slots; ++n1) {
        long double w = std::exp(static_cast<long double>(log_d[n1] - beta * energy[n1] - best));
        ve += w * (energy[n1] - e_mean) * (energy[n1] - e_mean);
        vm += w * (n1 / m_d - m_mean) * (n1 / m_d - m_mean);
    }
    ExactObservables o;
    o.beta = beta;
    double log_z = static_cast<double>(std::log(z)) + best;
    o.f = beta > 0 ? -log_z / (beta * counts.n) : -std::numeric_limits<double>::infinity();
    o.u = static_cast<double>(e_mean) / counts.n;
    o.c = beta * beta * static_cast<double>(ve / z) / counts.n;
    o.m = static_cast<double>(m_mean);
    o.chi_m = beta * m_d * static_cast<double>(vm / z);
    o.s1 = std::numeric_limits<double>::quiet_NaN();
    o.chi_s1 = std::numeric_limits<double>::quiet_NaN();
    return o;
}

}  // namespace qgraph::enumeration
