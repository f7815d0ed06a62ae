#include "locdense/verify.hpp"

#include <exception>
#include <stdexcept>
#include <utility>

#include "locdense/errors.hpp"
#include "locdense/homcount.hpp"
#include "subset_scan.hpp"

namespace locdense {

namespace {

Rational rational_of(long long v) { return Rational(Integer(static_cast<long>(v))); }

Integer int_pow(long long base, int exp) {
    Integer r;
    mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(base),
                  static_cast<unsigned long>(exp));
    return r;
}

void require_odd_cycle_length(int r) {
    if (r < 3 || r % 2 == 0)
        throw InputError("cycle length must be odd and at least 3, got " + std::to_string(r));
}

bool vertex_count_precondition(long long n, const Rational& eps) {
    // n >= 2/(eps - eps^2), multiplied through so eps = 1 needs no division.
    return rational_of(n) * eps * (Rational(1) - eps) >= Rational(2);
}

} // namespace

VerificationReport verify_main_theorem(const Graph& g, const DensityParams& params, int r,
                                       int density_limit,
                                       std::optional<DensityStatus> assumed_status, Exec exec) {
    require_odd_cycle_length(r);
    VerificationReport rep;
    rep.n = g.vertex_count();
    rep.m = g.edge_count();
    rep.r = r;
    rep.eps = params.eps;
    rep.d = params.d;
    rep.precondition_n_ok = vertex_count_precondition(rep.n, params.eps);
    if (g.vertex_count() <= density_limit) {
        rep.density_status = check_density_exact(g, params, density_limit, exec).status;
    } else if (assumed_status) {
        rep.density_status = *assumed_status;
    } else {
        throw ResourceLimitError(
            "graph exceeds the exhaustive density limit of " + std::to_string(density_limit) +
            "; run the heuristic and pass its status to keep the report honest");
    }
    rep.c_r = count_cycle_homs(g, r, exec);
    if (cycle_homs_via_decomposition(g, r, exec) != rep.c_r)
        throw std::logic_error("cycle count kernels disagree");
    rep.bound = (params.d.pow(static_cast<unsigned long>(r)) - params.eps) *
                Rational(int_pow(rep.n, r));
    rep.holds = Rational(rep.c_r) >= rep.bound;
    rep.slack = Rational(rep.c_r) - rep.bound;
    return rep;
}

ChainReport audit_proof_chain(const Graph& g, const DensityParams& params, int r,
                              int density_limit, Exec exec) {
    require_odd_cycle_length(r);
    const int n = g.vertex_count();
    if (n < 1) throw InputError("chain audit requires at least one vertex");
    if (n > density_limit)
        throw ResourceLimitError("chain audit needs the exhaustive density check; " +
                                 std::to_string(n) + " vertices exceed the limit of " +
                                 std::to_string(density_limit));
    const int m = (r - 1) / 2;

    ChainReport rep;
    rep.n = n;
    rep.m_edges = g.edge_count();
    rep.r = r;
    rep.walk_edges = m;
    rep.eps = params.eps;
    rep.d = params.d;
    rep.precondition_n_ok = vertex_count_precondition(n, params.eps);
    rep.density_status = check_density_exact(g, params, density_limit, exec).status;

    const WalkTable q = walk_table(g, m, exec);
    const Integer n_m = int_pow(n, m);
    std::vector<Integer> row_sums(static_cast<size_t>(n));
    VertexSet heavy(n);
    for (int x = 0; x < n; ++x) {
        row_sums[static_cast<size_t>(x)] = q.row_sum(x);
        // heavy rows: sum_y q(x,y) >= eps*n^m, cleared of the denominator
        if (params.eps.den() * row_sums[static_cast<size_t>(x)] >= params.eps.num() * n_m)
            heavy.set(x);
    }
    rep.z_set = heavy;

    rep.c_r = count_cycle_homs(g, r, exec);
    if (cycle_homs_via_decomposition(g, r, exec) != rep.c_r)
        throw std::logic_error("cycle count kernels disagree");

    const auto edge_list = g.edges();
    Integer restricted = 0; // sum over heavy x and edges yz of q(x,y)q(x,z)
    heavy.for_each([&](int x) {
        Integer acc = 0;
        for (const auto& [u, v] : edge_list)
            mpz_addmul(acc.get_mpz_t(), q.at(x, u).get_mpz_t(), q.at(x, v).get_mpz_t());
        restricted += acc;
    });

    // Step 1: the split over the middle edge, restricted to heavy rows and
    // normalized by n^(m-1) per factor; the prefactor 2n^(2m-2) cancels the
    // normalization exactly, and dropping light rows only discards
    // nonnegative terms, so this step carries no hypothesis.
    const Integer n_m1_sq = int_pow(n, m - 1) * int_pow(n, m - 1);
    const Rational normalized_sum(restricted, n_m1_sq);
    const Rational rhs1 = Rational(2 * n_m1_sq) * normalized_sum;
    rep.steps[0] = {"heavy-rows-decomposition", Rational(rep.c_r), ">=", rhs1,
                    Rational(rep.c_r) >= rhs1, ""};

    // Step 2: apply the weighted density bound to each heavy row's
    // normalized walk counts; each application costs an additive n, hence
    // the |Z|-scaled term.
    Integer row_sq = 0;
    heavy.for_each([&](int x) {
        mpz_addmul(row_sq.get_mpz_t(), row_sums[static_cast<size_t>(x)].get_mpz_t(),
                   row_sums[static_cast<size_t>(x)].get_mpz_t());
    });
    const Rational rhs2 = params.d * Rational(row_sq) -
                          Rational(2 * Integer(heavy.count()) * int_pow(n, 2 * m - 1));
    rep.steps[1] = {"weighted-density-rows", rhs1, ">=", rhs2, rhs1 >= rhs2, "density"};

    // Step 3: d*eps^2*n + 2 <= eps*n, the arithmetic consequence of the
    // vertex-count precondition that absorbs the additive losses.
    const Rational lhs3 = params.d * params.eps * params.eps * rational_of(n) + Rational(2);
    const Rational rhs3 = params.eps * rational_of(n);
    rep.steps[2] = {"vertex-count-slack", lhs3, "<=", rhs3, lhs3 <= rhs3,
                    "vertex-count precondition"};

    // Step 4: the path-count lower bound turns the squared total walk count
    // into the final power; density enters through the edge count of the
    // whole vertex set.
    const Rational lhs4 =
        params.d / rational_of(n) * Rational(q.entry_sum()) * Rational(q.entry_sum());
    const Rational rhs4 = params.d.pow(static_cast<unsigned long>(r)) * Rational(int_pow(n, r));
    rep.steps[3] = {"path-count-lower-bound", lhs4, ">=", rhs4, lhs4 >= rhs4, "density"};

    rep.all_hold = true;
    for (const ChainStep& step : rep.steps)
        if (!step.holds) rep.all_hold = false;
    return rep;
}

namespace {

struct RatioAcc {
    bool has = false;
    long long edges = 0;
    int size = 0;
    std::uint64_t mask = 0;
    long long checked = 0;
};

// minimize 2e/s^2: exact cross-multiplied compare, then size, then lex mask
void offer_ratio(RatioAcc& acc, long long edges, int size, std::uint64_t mask) {
    if (!acc.has) {
        acc.has = true;
        acc.edges = edges;
        acc.size = size;
        acc.mask = mask;
        return;
    }
    const long long lhs = edges * acc.size * acc.size;
    const long long rhs = acc.edges * size * size;
    if (lhs < rhs ||
        (lhs == rhs && (size < acc.size || (size == acc.size &&
                                            detail::mask_lex_less(mask, acc.mask))))) {
        acc.edges = edges;
        acc.size = size;
        acc.mask = mask;
    }
}

} // namespace

DensityAuto derive_density_auto(const Graph& g, const Rational& eps, int limit, Exec exec) {
    if (eps.sign() <= 0 || eps > Rational(1))
        throw InputError("eps must lie in (0, 1], got " + eps.str());
    const int n = g.vertex_count();
    if (n > limit)
        throw ResourceLimitError("density derivation on " + std::to_string(n) +
                                 " vertices exceeds the limit of " + std::to_string(limit));
    DensityAuto result;
    if (n == 0) {
        result.d = Rational(1); // vacuously dense at any d; keep the largest
        return result;
    }
    const int min_size = static_cast<int>(DensityParams(eps, Rational(0)).min_subset_size(n));
    auto leaf = [&](RatioAcc& acc, std::uint64_t mask, int size, long long edges) {
        if (size == 0) return;
        ++acc.checked;
        offer_ratio(acc, edges, size, mask);
    };
    auto merge = [](RatioAcc& total, const RatioAcc& part) {
        total.checked += part.checked;
        if (part.has) offer_ratio(total, part.edges, part.size, part.mask);
    };
    const RatioAcc found =
        detail::subset_scan<RatioAcc>(g, min_size, RatioAcc{}, leaf, merge, exec);
    result.checked_subsets = found.checked;
    if (!found.has) throw std::logic_error("no admissible subset in a nonempty graph");
    result.d = Rational(Integer(static_cast<long>(2 * found.edges)),
                        Integer(static_cast<long>(found.size) * static_cast<long>(found.size)));
    result.argmin = VertexSet::from_mask(n, found.mask);
    return result;
}

namespace {

struct Instance {
    std::string params;
    bool random = false;
    FamilySpec fam;
    int n = 0;
    Rational p;
    unsigned long seed = 0;
};

Graph build_instance(const Instance& ins) {
    if (ins.random) return gen_random(ins.n, ins.p, ins.seed);
    return gen_family(ins.fam);
}

std::vector<Instance> enumerate_instances(const ScanSpec& spec) {
    std::vector<Instance> out;
    if (spec.family == "complete") {
        for (int n : spec.n_values) {
            Instance ins;
            ins.params = "n=" + std::to_string(n);
            ins.fam.kind = FamilySpec::Kind::complete;
            ins.fam.n = n;
            out.push_back(std::move(ins));
        }
    } else if (spec.family == "clique-union") {
        for (int k : spec.k_values) {
            for (int s : spec.s_values) {
                Instance ins;
                ins.params = "k=" + std::to_string(k) + ";s=" + std::to_string(s);
                ins.fam.kind = FamilySpec::Kind::clique_union;
                ins.fam.cliques = k;
                ins.fam.clique_size = s;
                out.push_back(std::move(ins));
            }
        }
    } else if (spec.family == "multipartite") {
        for (int k : spec.k_values) {
            for (int s : spec.s_values) {
                Instance ins;
                ins.params = "parts=" + std::to_string(k) + "x" + std::to_string(s);
                ins.fam.kind = FamilySpec::Kind::multipartite;
                ins.fam.parts.assign(static_cast<size_t>(k), s);
                out.push_back(std::move(ins));
            }
        }
    } else if (spec.family == "random") {
        unsigned long offset = 0;
        for (int n : spec.n_values) {
            Instance ins;
            ins.random = true;
            ins.n = n;
            ins.p = spec.p_edge;
            ins.seed = spec.seed + offset;
            ins.params = "n=" + std::to_string(n) + ";p=" + spec.p_edge.str() +
                         ";seed=" + std::to_string(ins.seed);
            out.push_back(std::move(ins));
            ++offset;
        }
    } else {
        throw InputError("unknown scan family '" + spec.family +
                         "' (use complete, clique-union, multipartite or random)");
    }
    return out;
}

ScanRow compute_row(const ScanSpec& spec, const Instance& ins, int r, Exec exec) {
    ScanRow row;
    row.family = spec.family;
    row.params = ins.params;
    row.eps_text = spec.eps.str();
    row.d_text = spec.d ? spec.d->str() : "auto";
    row.r = r;
    try {
        const Graph g = build_instance(ins);
        row.graph_built = true;
        row.n = g.vertex_count();
        row.m = g.edge_count();
        const Rational d_eff =
            spec.d ? *spec.d : derive_density_auto(g, spec.eps, spec.density_limit, exec).d;
        row.d_text = d_eff.str();
        const DensityParams params(spec.eps, d_eff);
        row.report = verify_main_theorem(g, params, r, spec.density_limit, std::nullopt, exec);
    } catch (const InputError& e) {
        row.error = e.what();
    } catch (const ResourceLimitError& e) {
        row.error = e.what();
    }
    return row;
}

std::string csv_sanitize(std::string text) {
    for (char& c : text)
        if (c == ',' || c == '\n' || c == '\r') c = ' ';
    return text;
}

} // namespace

ScanResult scan_family(const ScanSpec& spec, Exec exec) {
    const std::vector<Instance> instances = enumerate_instances(spec);
    ScanResult result;
    result.rows.resize(instances.size() * spec.r_values.size());
    const long long total = static_cast<long long>(result.rows.size());
    std::exception_ptr failure = nullptr;
    auto body = [&](long long i) {
        const Instance& ins = instances[static_cast<size_t>(i) / spec.r_values.size()];
        const int r = spec.r_values[static_cast<size_t>(i) % spec.r_values.size()];
        result.rows[static_cast<size_t>(i)] = compute_row(spec, ins, r, exec);
    };
    if (exec == Exec::parallel) {
#pragma omp parallel for schedule(dynamic)
        for (long long i = 0; i < total; ++i) {
            try {
                body(i);
            } catch (...) { // only internal bugs reach here; re-throw outside the loop
#pragma omp critical
                if (!failure) failure = std::current_exception();
            }
        }
    } else {
        for (long long i = 0; i < total; ++i) body(i);
    }
    if (failure) std::rethrow_exception(failure);
    for (const ScanRow& row : result.rows) {
        if (!row.error.empty()) {
            ++result.error_count;
        } else if (row.report->holds) {
            ++result.holds_count;
        } else {
            ++result.violation_count;
        }
    }
    return result;
}

std::string ScanResult::csv() const {
    std::string out = kScanCsvHeader;
    out += '\n';
    for (const ScanRow& row : rows) {
        out += row.family;
        out += ',';
        out += row.params;
        out += ',';
        if (!row.error.empty()) {
            // Row-level error marker: the holds column reads "error" and the
            // sanitized message lands in the density_status column.
            if (row.graph_built) {
                out += std::to_string(row.n);
                out += ',';
                out += std::to_string(row.m);
            } else {
                out += ',';
            }
            out += ',';
            out += row.eps_text;
            out += ',';
            out += row.d_text;
            out += ',';
            out += std::to_string(row.r);
            out += ",,,,error,,,";
            out += csv_sanitize(row.error);
            out += ",\n";
            continue;
        }
        const VerificationReport& rep = *row.report;
        out += std::to_string(rep.n);
        out += ',';
        out += std::to_string(rep.m);
        out += ',';
        out += rep.eps.str();
        out += ',';
        out += rep.d.str();
        out += ',';
        out += std::to_string(rep.r);
        out += ',';
        out += rep.c_r.get_str();
        out += ',';
        out += rep.bound.num().get_str();
        out += ',';
        out += rep.bound.den().get_str();
        out += ',';
        out += rep.holds ? "true" : "false";
        out += ',';
        out += rep.slack.num().get_str();
        out += ',';
        out += rep.slack.den().get_str();
        out += ',';
        out += to_string(rep.density_status);
        out += ',';
        out += rep.precondition_n_ok ? "true" : "false";
        out += '\n';
    }
    return out;
}

} // namespace locdense
