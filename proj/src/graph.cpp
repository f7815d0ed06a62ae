#include "locdense/graph.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

#include "locdense/errors.hpp"

namespace locdense {

namespace {

// Dense bit-rows cost n^2/8 bytes; keep allocation failures out of reach.
constexpr int kMaxVertices = 65536;

void check_vertex_count(int n) {
    if (n < 0) throw InputError("vertex count must be nonnegative");
    if (n > kMaxVertices)
        throw InputError("vertex count " + std::to_string(n) + " exceeds the dense-graph cap of " +
                         std::to_string(kMaxVertices));
}

std::vector<std::string_view> split_ws(std::string_view line) {
    std::vector<std::string_view> out;
    size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
        size_t j = i;
        while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
        if (j > i) out.push_back(line.substr(i, j - i));
        i = j;
    }
    return out;
}

long long parse_ll(std::string_view tok, int line_no, const char* what) {
    long long value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc{} || ptr != tok.data() + tok.size())
        throw InputError("line " + std::to_string(line_no) + ": cannot parse " + what + " from '" +
                         std::string(tok) + "'");
    return value;
}

} // namespace

Graph Graph::empty(int n) {
    check_vertex_count(n);
    Graph g;
    g.n_ = n;
    g.adj_.assign(static_cast<size_t>(n), VertexSet(n));
    g.check_invariants();
    return g;
}

Graph Graph::from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
    Graph g = Graph::empty(n);
    for (auto [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw InputError("edge endpoint out of range [0," + std::to_string(n) + ")");
        if (u == v) throw InputError("loop edge " + std::to_string(u) + " " + std::to_string(v));
        if (g.adj_[static_cast<size_t>(u)].test(v))
            throw InputError("duplicate edge " + std::to_string(u) + " " + std::to_string(v));
        g.adj_[static_cast<size_t>(u)].set(v);
        g.adj_[static_cast<size_t>(v)].set(u);
        ++g.m_;
    }
    g.check_invariants();
    return g;
}

Graph Graph::from_edge_list(const std::string& text) {
    std::vector<std::string_view> lines;
    {
        std::string_view rest = text;
        while (!rest.empty()) {
            size_t nl = rest.find('\n');
            if (nl == std::string_view::npos) {
                lines.push_back(rest);
                break;
            }
            lines.push_back(rest.substr(0, nl));
            rest.remove_prefix(nl + 1);
        }
    }

    if (lines.empty() || split_ws(lines[0]).empty())
        throw InputError("line 1: expected header 'n m'");
    auto header = split_ws(lines[0]);
    if (header.size() != 2) throw InputError("line 1: expected header 'n m'");
    long long n_ll = parse_ll(header[0], 1, "vertex count");
    long long m_ll = parse_ll(header[1], 1, "edge count");
    if (n_ll < 0) throw InputError("line 1: vertex count must be nonnegative");
    if (m_ll < 0) throw InputError("line 1: edge count must be nonnegative");
    check_vertex_count(static_cast<int>(std::min<long long>(n_ll, kMaxVertices + 1LL)));
    int n = static_cast<int>(n_ll);

    Graph g = Graph::empty(n);
    long long seen = 0;
    size_t li = 1;
    for (; li < lines.size() && seen < m_ll; ++li) {
        int line_no = static_cast<int>(li) + 1;
        auto toks = split_ws(lines[li]);
        if (toks.empty()) throw InputError("line " + std::to_string(line_no) + ": expected edge 'u v'");
        if (toks.size() != 2)
            throw InputError("line " + std::to_string(line_no) + ": expected edge 'u v'");
        long long u = parse_ll(toks[0], line_no, "vertex");
        long long v = parse_ll(toks[1], line_no, "vertex");
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw InputError("line " + std::to_string(line_no) + ": vertex " +
                             std::to_string(u < 0 || u >= n ? u : v) + " out of range [0," +
                             std::to_string(n) + ")");
        if (u == v)
            throw InputError("line " + std::to_string(line_no) + ": loop edge " + std::to_string(u) +
                             " " + std::to_string(v));
        if (u > v)
            throw InputError("line " + std::to_string(line_no) + ": edges must be written 'u v' with u < v");
        int ui = static_cast<int>(u), vi = static_cast<int>(v);
        if (g.adj_[static_cast<size_t>(ui)].test(vi))
            throw InputError("line " + std::to_string(line_no) + ": duplicate edge " +
                             std::to_string(u) + " " + std::to_string(v));
        g.adj_[static_cast<size_t>(ui)].set(vi);
        g.adj_[static_cast<size_t>(vi)].set(ui);
        ++g.m_;
        ++seen;
    }
    if (seen < m_ll)
        throw InputError("unexpected end of input: header announced " + std::to_string(m_ll) +
                         " edges, found " + std::to_string(seen));
    for (; li < lines.size(); ++li) {
        if (!split_ws(lines[li]).empty())
            throw InputError("line " + std::to_string(li + 1) + ": unexpected extra line");
    }
    g.check_invariants();
    return g;
}

std::string Graph::to_edge_list() const {
    std::ostringstream out;
    out << n_ << ' ' << m_ << '\n';
    for (int u = 0; u < n_; ++u) {
        adj_[static_cast<size_t>(u)].for_each([&](int v) {
            if (v > u) out << u << ' ' << v << '\n';
        });
    }
    return out.str();
}

Integer Graph::induced_edge_count(const VertexSet& x) const {
    if (x.universe() != n_) throw InputError("vertex set universe does not match the graph");
    long long twice = 0;
    x.for_each([&](int v) { twice += adj_[static_cast<size_t>(v)].intersection_count(x); });
    return Integer(static_cast<long>(twice / 2));
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(static_cast<size_t>(m_));
    for (int u = 0; u < n_; ++u)
        adj_[static_cast<size_t>(u)].for_each([&](int v) {
            if (v > u) out.emplace_back(u, v);
        });
    return out;
}

void Graph::check_invariants() const {
    long long twice = 0;
    for (int u = 0; u < n_; ++u) {
        if (adj_[static_cast<size_t>(u)].test(u)) throw std::logic_error("graph invariant: loop present");
        twice += degree(u);
    }
    if (twice % 2 != 0 || twice / 2 != m_)
        throw std::logic_error("graph invariant: edge count mismatch");
    for (int u = 0; u < n_; ++u)
        adj_[static_cast<size_t>(u)].for_each([&](int v) {
            if (!adj_[static_cast<size_t>(v)].test(u))
                throw std::logic_error("graph invariant: adjacency not symmetric");
        });
}

Graph gen_random(int n, const Rational& p, unsigned long seed) {
    check_vertex_count(n);
    if (p.sign() < 0 || p > Rational(1)) throw InputError("edge probability must lie in [0,1]");
    gmp_randclass rng(gmp_randinit_mt);
    rng.seed(seed);
    Integer num = p.num(), den = p.den();
    Graph g = Graph::empty(n);
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            Integer draw = rng.get_z_range(den);
            if (draw < num) edges.emplace_back(u, v);
        }
    return Graph::from_edges(n, edges);
}

Graph gen_family(const FamilySpec& spec) {
    using Kind = FamilySpec::Kind;
    std::vector<std::pair<int, int>> edges;
    switch (spec.kind) {
    case Kind::complete: {
        check_vertex_count(spec.n);
        for (int u = 0; u < spec.n; ++u)
            for (int v = u + 1; v < spec.n; ++v) edges.emplace_back(u, v);
        return Graph::from_edges(spec.n, edges);
    }
    case Kind::multipartite: {
        if (spec.parts.empty()) throw InputError("multipartite family needs at least one part");
        long long n = 0;
        std::vector<int> part_of;
        for (size_t i = 0; i < spec.parts.size(); ++i) {
            if (spec.parts[i] <= 0) throw InputError("multipartite part sizes must be positive");
            n += spec.parts[i];
            part_of.insert(part_of.end(), static_cast<size_t>(spec.parts[i]), static_cast<int>(i));
        }
        check_vertex_count(static_cast<int>(std::min<long long>(n, kMaxVertices + 1LL)));
        int nn = static_cast<int>(n);
        for (int u = 0; u < nn; ++u)
            for (int v = u + 1; v < nn; ++v)
                if (part_of[static_cast<size_t>(u)] != part_of[static_cast<size_t>(v)])
                    edges.emplace_back(u, v);
        return Graph::from_edges(nn, edges);
    }
    case Kind::clique_union: {
        if (spec.cliques <= 0 || spec.clique_size <= 0)
            throw InputError("clique union needs positive clique count and size");
        long long n = static_cast<long long>(spec.cliques) * spec.clique_size;
        check_vertex_count(static_cast<int>(std::min<long long>(n, kMaxVertices + 1LL)));
        for (int c = 0; c < spec.cliques; ++c) {
            int base = c * spec.clique_size;
            for (int u = 0; u < spec.clique_size; ++u)
                for (int v = u + 1; v < spec.clique_size; ++v)
                    edges.emplace_back(base + u, base + v);
        }
        return Graph::from_edges(static_cast<int>(n), edges);
    }
    case Kind::blowup: {
        if (!spec.base) throw InputError("blow-up needs a base graph");
        if (spec.blowup_factor <= 0) throw InputError("blow-up factor must be positive");
        const Graph& base = *spec.base;
        int t = spec.blowup_factor;
        long long n = static_cast<long long>(base.vertex_count()) * t;
        check_vertex_count(static_cast<int>(std::min<long long>(n, kMaxVertices + 1LL)));
        // copies of base vertex v occupy the block [v*t, (v+1)*t); blocks of
        // adjacent base vertices are fully joined, blocks stay independent
        for (auto [u, v] : base.edges())
            for (int i = 0; i < t; ++i)
                for (int j = 0; j < t; ++j) edges.emplace_back(u * t + i, v * t + j);
        for (auto& e : edges)
            if (e.first > e.second) std::swap(e.first, e.second);
        std::sort(edges.begin(), edges.end());
        return Graph::from_edges(static_cast<int>(n), edges);
    }
    }
    throw InputError("unknown graph family");
}

} // namespace locdense
