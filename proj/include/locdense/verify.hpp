#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "locdense/density.hpp"
#include "locdense/exec.hpp"
#include "locdense/graph.hpp"
#include "locdense/rational.hpp"
#include "locdense/vertex_set.hpp"

namespace locdense {

struct VerificationReport {
    long long n = 0;
    long long m = 0; // edge count
    int r = 0;
    Rational eps;
    Rational d;
    bool precondition_n_ok = false; // n*(eps - eps^2) >= 2, exactly
    DensityStatus density_status = DensityStatus::unverified_heuristic;
    Integer c_r;    // closed-walk count, cross-checked between both kernels
    Rational bound; // (d^r - eps) * n^r
    bool holds = false;
    Rational slack; // c_r - bound
};

// Checks c_r >= (d^r - eps)*n^r with exact arithmetic. The density hypothesis
// is certified exhaustively when n fits within density_limit; beyond it a
// caller-supplied status (typically from the heuristic) is recorded instead,
// marking the report conditional rather than silently claiming a certificate.
VerificationReport verify_main_theorem(const Graph& g, const DensityParams& params, int r,
                                       int density_limit = kDefaultDensityLimit,
                                       std::optional<DensityStatus> assumed_status = std::nullopt,
                                       Exec exec = Exec::parallel);

struct ChainStep {
    std::string name;
    Rational lhs;
    std::string relation; // ">=" or "<="
    Rational rhs;
    bool holds = false;
    std::string conditional_on; // "" when the step needs no hypothesis
};

// Term-by-term audit of the inequality chain behind the main bound, with
// every quantity exact. Steps 2 and 4 are guaranteed only under certified
// density; step 3 only under the vertex-count precondition. Step 1 merely
// drops nonnegative terms and must always hold.
struct ChainReport {
    long long n = 0;
    long long m_edges = 0;   // edge count of the graph
    int r = 0;               // odd cycle length, r = 2*walk_edges + 1
    int walk_edges = 0;      // the half-length m
    Rational eps;
    Rational d;
    bool precondition_n_ok = false;
    DensityStatus density_status = DensityStatus::unverified_heuristic;
    VertexSet z_set{0};      // vertices whose walk-table row sum reaches eps*n^m
    Integer c_r;
    std::array<ChainStep, 4> steps;
    bool all_hold = false;
};

ChainReport audit_proof_chain(const Graph& g, const DensityParams& params, int r,
                              int density_limit = kDefaultDensityLimit,
                              Exec exec = Exec::parallel);

struct DensityAuto {
    Rational d;                      // exact min of 2e(X)/|X|^2 over admissible X
    std::optional<VertexSet> argmin; // a set attaining it (size, then lex smallest)
    long long checked_subsets = 0;
};

// Derives the largest d for which the graph is exactly (eps,d)-dense: the
// minimum of 2e(X)/|X|^2 over all X with |X| >= ceil(eps*n). Returns d = 1
// when no admissible subset exists (n = 0).
DensityAuto derive_density_auto(const Graph& g, const Rational& eps,
                                int limit = kDefaultDensityLimit, Exec exec = Exec::parallel);

struct ScanSpec {
    std::string family;         // "complete", "clique-union", "multipartite", "random"
    std::vector<int> n_values;  // complete, random
    std::vector<int> k_values;  // clique-union: clique count; multipartite: part count
    std::vector<int> s_values;  // clique size / part size
    Rational p_edge{1, 2};      // random family edge probability
    unsigned long seed = 0;     // random family: instance i uses seed + i
    Rational eps{1, 2};
    std::optional<Rational> d;  // empty: auto-derive per instance
    std::vector<int> r_values;
    int density_limit = kDefaultDensityLimit;
};

struct ScanRow {
    std::string family;
    std::string params; // semicolon-separated key=value pairs (CSV-safe)
    bool graph_built = false;
    long long n = 0;
    long long m = 0;
    std::string eps_text; // requested eps
    std::string d_text;   // requested d, or "auto" until derived
    int r = 0;
    std::optional<VerificationReport> report; // absent on error
    std::string error;                        // non-empty on error
};

struct ScanResult {
    std::vector<ScanRow> rows;
    long long holds_count = 0;
    long long violation_count = 0;
    long long error_count = 0;

    // Header plus one line per row, LF endings, byte-identical across runs
    // and across serial/parallel execution.
    std::string csv() const;
};

inline constexpr char kScanCsvHeader[] =
    "family,params,n,m,eps,d,r,c_r,bound_num,bound_den,holds,slack_num,slack_den,"
    "density_status,precond_ok";

// Verifies the main bound on every instance of the family grid, one row per
// (instance, r) pair in deterministic order. Per-instance input or resource
// errors become row-level markers instead of aborting the scan.
ScanResult scan_family(const ScanSpec& spec, Exec exec = Exec::parallel);

} // namespace locdense
