#pragma once

#include <optional>
#include <string>
#include <vector>

#include "locdense/exec.hpp"
#include "locdense/graph.hpp"
#include "locdense/rational.hpp"
#include "locdense/vertex_set.hpp"

namespace locdense {

// Hard ceilings for the exhaustive kernels. Exceeding a limit is an error,
// never a silent fallback, so a certificate's meaning stays unambiguous.
inline constexpr int kDefaultDensityLimit = 24;
inline constexpr int kDefaultMinimizerLimit = 20;

// Parameters of the local-density property: every X with |X| >= eps*n must
// span at least (d/2)|X|^2 edges.
struct DensityParams {
    Rational eps; // in (0, 1]
    Rational d;   // in [0, 1]

    DensityParams(Rational eps_in, Rational d_in);

    // Smallest admissible integer subset size: ceil(eps*n).
    long long min_subset_size(long long n) const;
};

enum class DensityStatus { certified_exhaustive, refuted, unverified_heuristic };

std::string to_string(DensityStatus status);

struct DensityCertificate {
    DensityStatus status = DensityStatus::unverified_heuristic;
    std::optional<VertexSet> witness; // violating subset when refuted
    long long checked_subsets = 0;    // candidate subsets examined
};

// Enumerates every X with |X| >= ceil(eps*n); returns the violating X of
// smallest size (lexicographically smallest among those) or certifies that
// none exists. The test e(X) >= (d/2)|X|^2 runs in integers as
// 2*q*e(X) >= p*|X|^2 where d = p/q.
DensityCertificate check_density_exact(const Graph& g, const DensityParams& params,
                                       int limit = kDefaultDensityLimit,
                                       Exec exec = Exec::parallel);

// Seeded local search (add/remove/swap moves) for a violating subset. Only
// refutes with an exactly re-verified witness; a clean run reports
// unverified_heuristic, never a certification. Deterministic for fixed
// arguments; `start` seeds the walk with a given subset.
DensityCertificate check_density_heuristic(const Graph& g, const DensityParams& params,
                                           long long iters, unsigned long seed,
                                           const std::optional<VertexSet>& start = std::nullopt);

struct WeightFunction {
    std::vector<Rational> values; // one weight in [0,1] per vertex

    Rational sum() const;
};

// Omega(f) = sum over edges xy of f(x)f(y) - (d/2)(sum_x f(x))^2, exact.
Rational weighted_objective(const Graph& g, const DensityParams& params,
                            const WeightFunction& f);

struct MinimizerResult {
    Rational omega;                       // minimum objective value
    WeightFunction minimizer;             // an attaining weight function
    VertexSet ones;                       // vertices with weight exactly 1
    std::optional<int> fractional_vertex; // the at-most-one non-integral vertex
    Rational delta;                       // its weight; 0 when absent
};

// Exact minimum of Omega over f in [0,1]^V with sum f >= eps*n. Some
// minimizer is {0,1}-valued except at most one vertex z, and for a fixed
// ({f=1} set, z) the objective is concave in f(z), so its minimum sits at an
// endpoint of the feasible interval. The candidates therefore reduce to
// 0/1-indicators of each admissible size plus, when eps*n is fractional,
// indicators of floor(eps*n) vertices topped up at one vertex z so the
// weight sum is exactly eps*n. Ties break by smallest support size, then
// lexicographic support, then smallest z.
MinimizerResult weighted_min_exact(const Graph& g, const DensityParams& params,
                                   int limit = kDefaultMinimizerLimit,
                                   Exec exec = Exec::parallel);

// Independent oracle: exhaustive minimum of Omega over the finite grid
// f in {0, step, 2*step, ..., 1}^V with sum f >= eps*n. Requires n <= 8 and
// step 1/2 or 1/4.
Rational weighted_min_grid_oracle(const Graph& g, const DensityParams& params,
                                  const Rational& step);

struct WeightedDensityCheckReport {
    long long trials = 0;
    long long violations = 0;
    std::optional<WeightFunction> first_violation;
    Rational violation_lhs;   // edge term at the first violation
    Rational violation_rhs;   // (d/2)(sum f)^2 - n at the first violation
    bool minimizer_checked = false;
    Rational omega;        // exact minimum, when checked
    bool omega_ok = false; // omega >= -n, when checked
    Rational omega_gap;    // omega + n: observed slack over the -n floor
};

// Samples `trials` weight functions on the 1/16 grid, resampling each until
// sum f >= eps*n, and checks sum_{xy in E} f(x)f(y) >= (d/2)(sum f)^2 - n
// exactly; when n is within minimizer_limit, also checks that the exact
// minimum is >= -n and reports the observed gap. Requires an exhaustive
// density certificate: on a certified graph any violation is a bug in this
// library, not data.
WeightedDensityCheckReport spot_check_weighted_density(const Graph& g,
                                                       const DensityParams& params,
                                                       const DensityCertificate& cert,
                                                       long long trials, unsigned long seed,
                                                       int minimizer_limit = kDefaultMinimizerLimit);

} // namespace locdense
