#include "locdense/density.hpp"

#include <algorithm>
#include <bit>
#include <climits>
#include <cstdint>
#include <stdexcept>
#include <utility>

#include "locdense/errors.hpp"
#include "locdense/rng.hpp"
#include "subset_scan.hpp"

namespace locdense {

namespace {

Rational rational_of(long long v) { return Rational(Integer(static_cast<long>(v))); }

// Exact test 2*q*e < p*s^2 for d = p/q; a 128-bit fast path covers every d
// whose numerator and denominator fit a machine word.
struct ViolationTest {
    bool fast = true;
    long long p = 0;
    long long q = 1;
    Integer pz;
    Integer qz;

    explicit ViolationTest(const Rational& d) {
        pz = d.num();
        qz = d.den();
        if (mpz_fits_slong_p(pz.get_mpz_t()) && mpz_fits_slong_p(qz.get_mpz_t())) {
            p = mpz_get_si(pz.get_mpz_t());
            q = mpz_get_si(qz.get_mpz_t());
        } else {
            fast = false;
        }
    }

    bool operator()(long long edges, int size) const {
        if (fast) {
            return 2 * static_cast<__int128>(q) * edges <
                   static_cast<__int128>(p) * size * size;
        }
        return 2 * qz * Integer(static_cast<long>(edges)) <
               pz * Integer(static_cast<long>(size) * size);
    }
};

struct WitnessAcc {
    bool has = false;
    int size = 0;
    std::uint64_t mask = 0;
    long long checked = 0;
};

void offer_witness(WitnessAcc& acc, std::uint64_t mask, int size) {
    if (!acc.has || size < acc.size ||
        (size == acc.size && detail::mask_lex_less(mask, acc.mask))) {
        acc.has = true;
        acc.size = size;
        acc.mask = mask;
    }
}

} // namespace

DensityParams::DensityParams(Rational eps_in, Rational d_in)
    : eps(std::move(eps_in)), d(std::move(d_in)) {
    if (eps.sign() <= 0 || eps > Rational(1))
        throw InputError("eps must lie in (0, 1], got " + eps.str());
    if (d.sign() < 0 || d > Rational(1))
        throw InputError("d must lie in [0, 1], got " + d.str());
}

long long DensityParams::min_subset_size(long long n) const {
    Integer num = eps.num() * Integer(static_cast<long>(n));
    Integer size;
    mpz_cdiv_q(size.get_mpz_t(), num.get_mpz_t(), eps.den().get_mpz_t());
    return mpz_get_si(size.get_mpz_t()); // at most n since eps <= 1
}

std::string to_string(DensityStatus status) {
    switch (status) {
        case DensityStatus::certified_exhaustive: return "certified-exhaustive";
        case DensityStatus::refuted: return "refuted";
        case DensityStatus::unverified_heuristic: return "unverified-heuristic";
    }
    throw std::logic_error("unknown density status");
}

DensityCertificate check_density_exact(const Graph& g, const DensityParams& params, int limit,
                                       Exec exec) {
    const int n = g.vertex_count();
    if (n > limit)
        throw ResourceLimitError("exhaustive density check on " + std::to_string(n) +
                                 " vertices exceeds the limit of " + std::to_string(limit));
    const int min_size = static_cast<int>(params.min_subset_size(n));
    const ViolationTest violates(params.d);
    auto leaf = [&](WitnessAcc& acc, std::uint64_t mask, int size, long long edges) {
        ++acc.checked;
        if (violates(edges, size)) offer_witness(acc, mask, size);
    };
    auto merge = [](WitnessAcc& total, const WitnessAcc& part) {
        total.checked += part.checked;
        if (part.has) offer_witness(total, part.mask, part.size);
    };
    const WitnessAcc found =
        detail::subset_scan<WitnessAcc>(g, min_size, WitnessAcc{}, leaf, merge, exec);
    DensityCertificate cert;
    cert.checked_subsets = found.checked;
    if (found.has) {
        cert.status = DensityStatus::refuted;
        cert.witness = VertexSet::from_mask(n, found.mask);
    } else {
        cert.status = DensityStatus::certified_exhaustive;
    }
    return cert;
}

DensityCertificate check_density_heuristic(const Graph& g, const DensityParams& params,
                                           long long iters, unsigned long seed,
                                           const std::optional<VertexSet>& start) {
    if (iters < 1) throw InputError("iters must be at least 1");
    const int n = g.vertex_count();
    const long long min_size = params.min_subset_size(n);
    const ViolationTest violates(params.d);

    // Incremental state: membership flags, per-vertex neighbour counts inside
    // the current set, its size and induced edge count.
    std::vector<char> in(static_cast<size_t>(n), 0);
    std::vector<long long> deg_in(static_cast<size_t>(n), 0);
    long long size = 0;
    long long edges = 0;
    auto add = [&](int v) {
        edges += deg_in[static_cast<size_t>(v)];
        in[static_cast<size_t>(v)] = 1;
        ++size;
        g.neighbors(v).for_each([&](int u) { ++deg_in[static_cast<size_t>(u)]; });
    };
    auto remove = [&](int v) {
        edges -= deg_in[static_cast<size_t>(v)];
        in[static_cast<size_t>(v)] = 0;
        --size;
        g.neighbors(v).for_each([&](int u) { --deg_in[static_cast<size_t>(u)]; });
    };

    if (start) {
        if (start->universe() != n)
            throw InputError("start set is over " + std::to_string(start->universe()) +
                             " vertices, graph has " + std::to_string(n));
        start->for_each([&](int v) { add(v); });
    } else {
        for (int v = 0; v < static_cast<int>(min_size); ++v) add(v);
    }

    DensityCertificate cert;
    cert.status = DensityStatus::unverified_heuristic;
    auto refute_current = [&]() {
        VertexSet witness(n);
        for (int v = 0; v < n; ++v)
            if (in[static_cast<size_t>(v)]) witness.set(v);
        // Refute only on an independently recomputed edge count.
        const Integer exact = g.induced_edge_count(witness);
        if (exact != Integer(static_cast<long>(edges)))
            throw std::logic_error("heuristic edge bookkeeping diverged");
        if (!(2 * params.d.den() * exact <
              params.d.num() * Integer(static_cast<long>(size) * static_cast<long>(size))))
            throw std::logic_error("heuristic offered a non-violating witness");
        cert.status = DensityStatus::refuted;
        cert.witness = std::move(witness);
    };

    ++cert.checked_subsets;
    if (size >= min_size && violates(edges, static_cast<int>(size))) {
        refute_current();
        return cert;
    }

    // Hill-climbing on 2*q*e(X) - p*|X|^2 (any violating state makes this
    // negative relative to the admissibility threshold, so descending finds
    // witnesses); plateau moves are accepted to keep the walk from freezing.
    const Integer two_q = 2 * params.d.den();
    const Integer p_num = params.d.num();
    // Explicit return type: the deduced type would be a gmp expression
    // template referencing the two temporaries, dangling after return.
    auto score = [&](long long e, long long s) -> Integer {
        return two_q * Integer(static_cast<long>(e)) -
               p_num * Integer(static_cast<long>(s) * static_cast<long>(s));
    };
    Rng rng(seed);
    if (n == 0) return cert;
    Integer current = score(edges, size);
    for (long long it = 0; it < iters; ++it) {
        const unsigned long kind = rng.below(3);
        int u = -1;
        int v = -1;
        long long next_edges = edges;
        long long next_size = size;
        if (kind == 0) { // add
            v = rng.below_int(n);
            if (in[static_cast<size_t>(v)]) continue;
            next_edges += deg_in[static_cast<size_t>(v)];
            next_size += 1;
        } else if (kind == 1) { // remove
            v = rng.below_int(n);
            if (!in[static_cast<size_t>(v)] || size <= min_size) continue;
            next_edges -= deg_in[static_cast<size_t>(v)];
            next_size -= 1;
        } else { // swap
            u = rng.below_int(n);
            v = rng.below_int(n);
            if (!in[static_cast<size_t>(u)] || in[static_cast<size_t>(v)]) continue;
            next_edges -= deg_in[static_cast<size_t>(u)];
            next_edges += deg_in[static_cast<size_t>(v)] - (g.adjacent(u, v) ? 1 : 0);
        }
        ++cert.checked_subsets;
        const Integer candidate = score(next_edges, next_size);
        if (candidate <= current) {
            if (kind == 0) {
                add(v);
            } else if (kind == 1) {
                remove(v);
            } else {
                remove(u);
                add(v);
            }
            current = candidate;
            if (size >= min_size && violates(edges, static_cast<int>(size))) {
                refute_current();
                return cert;
            }
        }
    }
    return cert;
}

Rational WeightFunction::sum() const {
    Rational acc(0);
    for (const Rational& v : values) acc = acc + v;
    return acc;
}

Rational weighted_objective(const Graph& g, const DensityParams& params,
                            const WeightFunction& f) {
    const int n = g.vertex_count();
    if (static_cast<int>(f.values.size()) != n)
        throw InputError("weight function has " + std::to_string(f.values.size()) +
                         " entries, graph has " + std::to_string(n) + " vertices");
    for (const Rational& v : f.values)
        if (v.sign() < 0 || v > Rational(1))
            throw InputError("weights must lie in [0, 1], got " + v.str());
    Rational edge_term(0);
    for (const auto& [u, v] : g.edges())
        edge_term = edge_term + f.values[static_cast<size_t>(u)] * f.values[static_cast<size_t>(v)];
    const Rational total = f.sum();
    return edge_term - params.d / Rational(2) * total * total;
}

namespace {

struct SizeBest {
    bool has = false;
    long long edges = 0;
    std::uint64_t mask = 0;
};

void offer_size_best(SizeBest& best, long long edges, std::uint64_t mask) {
    if (!best.has || edges < best.edges ||
        (edges == best.edges && detail::mask_lex_less(mask, best.mask))) {
        best = {true, edges, mask};
    }
}

struct MinAcc {
    std::vector<SizeBest> per_size; // index: support size
    bool frac_has = false;
    Integer frac_key; // q_delta*e(S) + p_delta*|adj(z) cap S|
    std::uint64_t frac_mask = 0;
    int frac_z = -1;
    long long frac_edges = 0;
    int frac_adj = 0;
};

void offer_frac(MinAcc& acc, const Integer& key, std::uint64_t mask, int z, long long edges,
                int adj) {
    if (!acc.frac_has || key < acc.frac_key ||
        (key == acc.frac_key &&
         (detail::mask_lex_less(mask, acc.frac_mask) ||
          (mask == acc.frac_mask && z < acc.frac_z)))) {
        acc.frac_has = true;
        acc.frac_key = key;
        acc.frac_mask = mask;
        acc.frac_z = z;
        acc.frac_edges = edges;
        acc.frac_adj = adj;
    }
}

} // namespace

MinimizerResult weighted_min_exact(const Graph& g, const DensityParams& params, int limit,
                                   Exec exec) {
    const int n = g.vertex_count();
    if (n > limit)
        throw ResourceLimitError("exact minimizer on " + std::to_string(n) +
                                 " vertices exceeds the limit of " + std::to_string(limit));
    if (n == 0) {
        MinimizerResult trivial{Rational(0), WeightFunction{}, VertexSet(0), std::nullopt,
                                Rational(0)};
        return trivial;
    }
    const Rational eps_n = params.eps * rational_of(n);
    const long long s_int = params.min_subset_size(n); // ceil(eps*n)
    const bool has_frac = !eps_n.is_integer();
    const long long s_floor = has_frac ? s_int - 1 : s_int;
    const Rational delta = has_frac ? eps_n - rational_of(s_floor) : Rational(0);
    const Integer p_delta = delta.num();
    const Integer q_delta = delta.den();

    const auto adj = detail::adjacency_masks(g);
    const std::uint64_t full =
        n == 0 ? 0 : (~std::uint64_t{0} >> (64 - static_cast<unsigned>(n)));

    MinAcc init;
    init.per_size.resize(static_cast<size_t>(n) + 1);
    auto leaf = [&](MinAcc& acc, std::uint64_t mask, int size, long long edges) {
        if (size >= s_int) offer_size_best(acc.per_size[static_cast<size_t>(size)], edges, mask);
        if (has_frac && size == s_floor) {
            // Best top-up vertex: fewest neighbours inside, then smallest index.
            int best_adj = INT_MAX;
            int best_z = -1;
            for (std::uint64_t rest = full & ~mask; rest != 0; rest &= rest - 1) {
                const int z = std::countr_zero(rest);
                const int inside = std::popcount(adj[static_cast<size_t>(z)] & mask);
                if (inside < best_adj) {
                    best_adj = inside;
                    best_z = z;
                }
            }
            const Integer key =
                q_delta * Integer(static_cast<long>(edges)) + p_delta * Integer(best_adj);
            offer_frac(acc, key, mask, best_z, edges, best_adj);
        }
    };
    auto merge = [](MinAcc& total, const MinAcc& part) {
        for (size_t s = 0; s < part.per_size.size(); ++s) {
            const SizeBest& b = part.per_size[s];
            if (b.has) offer_size_best(total.per_size[s], b.edges, b.mask);
        }
        if (part.frac_has)
            offer_frac(total, part.frac_key, part.frac_mask, part.frac_z, part.frac_edges,
                       part.frac_adj);
    };
    const MinAcc found = detail::subset_scan<MinAcc>(
        g, static_cast<int>(has_frac ? s_floor : s_int), init, leaf, merge, exec);

    // Rank the surviving candidates by exact objective value, breaking ties
    // by support size, then lexicographic support, then top-up vertex.
    const Rational half_d = params.d / Rational(2);
    struct Candidate {
        Rational omega;
        std::uint64_t mask;
        int size;
        std::optional<int> z;
    };
    std::optional<Candidate> best;
    auto offer = [&](Candidate cand) {
        if (!best) {
            best = std::move(cand);
            return;
        }
        if (cand.omega < best->omega ||
            (cand.omega == best->omega &&
             (cand.size < best->size ||
              (cand.size == best->size &&
               (detail::mask_lex_less(cand.mask, best->mask) ||
                (cand.mask == best->mask && !cand.z.has_value() && best->z.has_value())))))) {
            best = std::move(cand);
        }
    };
    for (long long s = s_int; s <= n; ++s) {
        const SizeBest& b = found.per_size[static_cast<size_t>(s)];
        if (!b.has) continue;
        const Rational omega =
            rational_of(b.edges) - half_d * rational_of(s) * rational_of(s);
        offer({omega, b.mask, static_cast<int>(s), std::nullopt});
    }
    if (found.frac_has) {
        const Rational omega = rational_of(found.frac_edges) + delta * rational_of(found.frac_adj) -
                               half_d * eps_n * eps_n;
        offer({omega, found.frac_mask, static_cast<int>(s_floor), found.frac_z});
    }
    if (!best) throw std::logic_error("minimizer enumeration produced no candidate");

    MinimizerResult result;
    result.omega = best->omega;
    result.ones = VertexSet::from_mask(n, best->mask);
    result.fractional_vertex = best->z;
    result.delta = best->z ? delta : Rational(0);
    result.minimizer.values.assign(static_cast<size_t>(n), Rational(0));
    result.ones.for_each([&](int v) { result.minimizer.values[static_cast<size_t>(v)] = Rational(1); });
    if (best->z) result.minimizer.values[static_cast<size_t>(*best->z)] = delta;

    // Self-checks: the claimed minimum must equal the objective at the
    // reported function, and the function must be feasible; near-integrality
    // holds by construction (at most one coordinate is delta).
    if (weighted_objective(g, params, result.minimizer) != result.omega)
        throw std::logic_error("minimizer objective recomputation mismatch");
    if (result.minimizer.sum() < eps_n)
        throw std::logic_error("minimizer violates the weight-sum constraint");
    return result;
}

Rational weighted_min_grid_oracle(const Graph& g, const DensityParams& params,
                                  const Rational& step) {
    const int n = g.vertex_count();
    if (n > 8)
        throw ResourceLimitError("grid oracle on " + std::to_string(n) +
                                 " vertices exceeds its limit of 8");
    if (step != Rational(1, 2) && step != Rational(1, 4))
        throw InputError("step must be 1/2 or 1/4, got " + step.str());
    const int den = static_cast<int>(mpz_get_si(step.den().get_mpz_t()));

    // Work with weights scaled by den: integer levels 0..den per vertex, so
    // the edge term stays an integer and only the final per-bucket objective
    // needs rationals.
    const long long max_total = static_cast<long long>(n) * den;
    std::vector<long long> best_edges(static_cast<size_t>(max_total) + 1, -1);
    std::vector<int> levels(static_cast<size_t>(n), 0);
    auto dfs = [&](auto&& self, int v, long long total, long long edge_acc) -> void {
        if (v == n) {
            long long& slot = best_edges[static_cast<size_t>(total)];
            if (slot < 0 || edge_acc < slot) slot = edge_acc;
            return;
        }
        long long pair_sum = 0;
        for (int u = 0; u < v; ++u)
            if (g.adjacent(u, v)) pair_sum += levels[static_cast<size_t>(u)];
        for (int val = 0; val <= den; ++val) {
            levels[static_cast<size_t>(v)] = val;
            self(self, v + 1, total + val, edge_acc + val * pair_sum);
        }
        levels[static_cast<size_t>(v)] = 0;
    };
    dfs(dfs, 0, 0, 0);

    // Feasibility of a bucket: total/den >= eps*n, i.e. q_eps*total >= p_eps*n*den.
    const Integer feas_rhs = params.eps.num() * Integer(static_cast<long>(n)) * den;
    const Rational half_d = params.d / Rational(2);
    const Rational den_sq = rational_of(static_cast<long long>(den) * den);
    std::optional<Rational> minimum;
    for (long long total = 0; total <= max_total; ++total) {
        const long long e = best_edges[static_cast<size_t>(total)];
        if (e < 0) continue;
        if (params.eps.den() * Integer(static_cast<long>(total)) < feas_rhs) continue;
        const Rational omega =
            (rational_of(e) - half_d * rational_of(total) * rational_of(total)) / den_sq;
        if (!minimum || omega < *minimum) minimum = omega;
    }
    if (!minimum) throw std::logic_error("grid oracle found no feasible point");
    return *minimum;
}

WeightedDensityCheckReport spot_check_weighted_density(const Graph& g,
                                                       const DensityParams& params,
                                                       const DensityCertificate& cert,
                                                       long long trials, unsigned long seed,
                                                       int minimizer_limit) {
    if (cert.status != DensityStatus::certified_exhaustive)
        throw InputError("weighted density spot check requires an exhaustive certificate, got "
                         "status " +
                         to_string(cert.status));
    if (trials < 0) throw InputError("trials must be non-negative");
    const int n = g.vertex_count();
    constexpr int kGrid = 16;
    constexpr long long kMaxAttemptsPerTrial = 100000;

    WeightedDensityCheckReport report;
    report.trials = trials;
    Rng rng(seed);
    const auto edge_list = g.edges();
    // Feasibility in scaled integers: sum_v k_v/16 >= eps*n iff
    // q_eps * sum_k >= 16 * p_eps * n.
    const Integer feas_rhs = kGrid * params.eps.num() * Integer(static_cast<long>(n));
    const Rational half_d = params.d / Rational(2);
    std::vector<int> ks(static_cast<size_t>(n), 0);
    for (long long trial = 0; trial < trials; ++trial) {
        long long sum_k = 0;
        long long attempts = 0;
        do {
            if (++attempts > kMaxAttemptsPerTrial)
                throw ResourceLimitError(
                    "failed to sample a weight function with sum >= eps*n within " +
                    std::to_string(kMaxAttemptsPerTrial) + " attempts (eps " +
                    params.eps.str() + " leaves the grid almost never feasible)");
            sum_k = 0;
            for (int v = 0; v < n; ++v) {
                ks[static_cast<size_t>(v)] = rng.below_int(kGrid + 1);
                sum_k += ks[static_cast<size_t>(v)];
            }
        } while (params.eps.den() * Integer(static_cast<long>(sum_k)) < feas_rhs);
        long long edge_scaled = 0; // 256 * sum_{xy in E} f(x)f(y)
        for (const auto& [u, v] : edge_list)
            edge_scaled += static_cast<long long>(ks[static_cast<size_t>(u)]) *
                           ks[static_cast<size_t>(v)];
        // Inequality scaled by 256: edge_scaled >= (d/2)*sum_k^2 - 256*n.
        const Rational lhs_scaled = rational_of(edge_scaled);
        const Rational rhs_scaled = half_d * rational_of(sum_k) * rational_of(sum_k) -
                                    rational_of(256LL * n);
        if (lhs_scaled < rhs_scaled) {
            ++report.violations;
            if (!report.first_violation) {
                WeightFunction f;
                f.values.reserve(static_cast<size_t>(n));
                for (int v = 0; v < n; ++v)
                    f.values.emplace_back(Integer(static_cast<long>(ks[static_cast<size_t>(v)])),
                                          Integer(kGrid));
                report.first_violation = std::move(f);
                report.violation_lhs = lhs_scaled / rational_of(256);
                report.violation_rhs = rhs_scaled / rational_of(256);
            }
        }
    }
    if (n <= minimizer_limit) {
        const MinimizerResult min_result = weighted_min_exact(g, params, minimizer_limit);
        report.minimizer_checked = true;
        report.omega = min_result.omega;
        report.omega_ok = min_result.omega >= rational_of(-static_cast<long long>(n));
        report.omega_gap = min_result.omega + rational_of(n);
    }
    return report;
}

} // namespace locdense
