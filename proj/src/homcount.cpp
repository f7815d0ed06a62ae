#include "locdense/homcount.hpp"

#include <stdexcept>
#include <string>

#include "locdense/errors.hpp"

namespace locdense {

namespace {

WalkTable identity_table(int n) {
    WalkTable t;
    t.n = n;
    t.edges = 0;
    t.q.assign(static_cast<size_t>(n) * n, Integer(0));
    for (int x = 0; x < n; ++x) t.at(x, x) = 1;
    return t;
}

WalkTable adjacency_table(const Graph& g) {
    const int n = g.vertex_count();
    WalkTable t;
    t.n = n;
    t.edges = 1;
    t.q.assign(static_cast<size_t>(n) * n, Integer(0));
    for (const auto& [u, v] : g.edges()) {
        t.at(u, v) = 1;
        t.at(v, u) = 1;
    }
    return t;
}

void multiply_row(const WalkTable& a, const WalkTable& b, WalkTable& out, int x) {
    const int n = a.n;
    Integer* dst = &out.at(x, 0);
    for (int k = 0; k < n; ++k) {
        const Integer& axk = a.at(x, k);
        if (sgn(axk) == 0) continue; // walk tables are mostly sparse for small edge counts
        const Integer* brow = &b.at(k, 0);
        for (int y = 0; y < n; ++y) {
            if (sgn(brow[y]) == 0) continue;
            mpz_addmul(dst[y].get_mpz_t(), axk.get_mpz_t(), brow[y].get_mpz_t());
        }
    }
}

} // namespace

Integer WalkTable::trace() const {
    Integer acc = 0;
    for (int x = 0; x < n; ++x) acc += at(x, x);
    return acc;
}

Integer WalkTable::entry_sum() const {
    Integer acc = 0;
    for (const Integer& v : q) acc += v;
    return acc;
}

Integer WalkTable::row_sum(int x) const {
    Integer acc = 0;
    for (int y = 0; y < n; ++y) acc += at(x, y);
    return acc;
}

WalkTable multiply(const WalkTable& a, const WalkTable& b, Exec exec) {
    if (a.n != b.n) throw InputError("walk table size mismatch");
    const int n = a.n;
    WalkTable out;
    out.n = n;
    out.edges = a.edges + b.edges;
    out.q.assign(static_cast<size_t>(n) * n, Integer(0));
    if (exec == Exec::parallel) {
        // Rows are independent, so the schedule cannot affect the result.
#pragma omp parallel for schedule(static)
        for (int x = 0; x < n; ++x) multiply_row(a, b, out, x);
    } else {
        for (int x = 0; x < n; ++x) multiply_row(a, b, out, x);
    }
    return out;
}

WalkTable walk_table(const Graph& g, int edges, Exec exec) {
    if (edges < 0) throw InputError("walk length must be non-negative");
    const int n = g.vertex_count();
    if (edges == 0) return identity_table(n);
    WalkTable base = adjacency_table(g);
    WalkTable acc = base;
    for (int step = 1; step < edges; ++step) acc = multiply(acc, base, exec);
    return acc;
}

Integer count_cycle_homs(const Graph& g, int r, Exec exec) {
    if (r < 2) throw InputError("cycle length must be at least 2");
    return walk_table(g, r, exec).trace();
}

Integer cycle_homs_via_decomposition(const Graph& g, int r, Exec exec) {
    if (r < 3 || r % 2 == 0)
        throw InputError("the middle-edge split needs an odd cycle length of at least 3");
    const int m = (r - 1) / 2;
    const WalkTable q = walk_table(g, m, exec);
    const auto edge_list = g.edges();
    const int n = g.vertex_count();
    std::vector<Integer> per_vertex(static_cast<size_t>(n), Integer(0));
    auto body = [&](int x) {
        Integer acc = 0;
        for (const auto& [u, v] : edge_list)
            mpz_addmul(acc.get_mpz_t(), q.at(x, u).get_mpz_t(), q.at(x, v).get_mpz_t());
        per_vertex[static_cast<size_t>(x)] = std::move(acc);
    };
    if (exec == Exec::parallel) {
#pragma omp parallel for schedule(static)
        for (int x = 0; x < n; ++x) body(x);
    } else {
        for (int x = 0; x < n; ++x) body(x);
    }
    Integer total = 0;
    for (const Integer& v : per_vertex) total += v;
    return 2 * total; // each edge serves as (y,z) and (z,y)
}

Integer count_path_homs(const Graph& g, int k, Exec exec) {
    if (k < 0) throw InputError("path length must be non-negative");
    return walk_table(g, k, exec).entry_sum();
}

HomCountReport blakley_roy_check(const Graph& g, int k, Exec exec) {
    if (g.vertex_count() < 1) throw InputError("graph must have at least one vertex");
    if (k < 1) throw InputError("path length must be at least 1");
    const long long n = g.vertex_count();
    const Rational d(Integer(2) * Integer(static_cast<long>(g.edge_count())),
                     Integer(static_cast<long>(n)) * Integer(static_cast<long>(n)));
    Rational bound = d.pow(static_cast<unsigned long>(k));
    Integer n_pow;
    mpz_ui_pow_ui(n_pow.get_mpz_t(), static_cast<unsigned long>(n),
                  static_cast<unsigned long>(k) + 1);
    bound = bound * Rational(n_pow);
    HomCountReport report;
    report.count = count_path_homs(g, k, exec);
    report.bound = bound;
    report.holds = Rational(report.count) >= bound;
    return report;
}

Integer brute_force_cycle_homs(const Graph& g, int r, long long budget) {
    if (r < 2) throw InputError("cycle length must be at least 2");
    const int n = g.vertex_count();
    if (n == 0) return 0;
    long long work = 1;
    for (int i = 0; i < r; ++i) {
        if (work > budget / n) {
            throw ResourceLimitError("exhaustive cycle count needs " + std::to_string(n) + "^" +
                                     std::to_string(r) + " sequences, over the budget of " +
                                     std::to_string(budget));
        }
        work *= n;
    }
    std::vector<int> seq(static_cast<size_t>(r), 0);
    long long count = 0;
    // Depth-first over all vertex sequences; prune as soon as a consecutive
    // pair is not an edge, and check the wrap-around at full depth.
    auto extend = [&](auto&& self, int depth) -> void {
        if (depth == r) {
            if (g.adjacent(seq[static_cast<size_t>(r) - 1], seq[0])) ++count;
            return;
        }
        for (int v = 0; v < n; ++v) {
            if (depth > 0 && !g.adjacent(seq[static_cast<size_t>(depth) - 1], v)) continue;
            seq[static_cast<size_t>(depth)] = v;
            self(self, depth + 1);
        }
    };
    extend(extend, 0);
    return Integer(static_cast<long>(count));
}

} // namespace locdense
