#include "locdense/cli.hpp"

#include <algorithm>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <utility>

#include "CLI11.hpp"
#include "json.hpp"

#include "locdense/density.hpp"
#include "locdense/errors.hpp"
#include "locdense/graph.hpp"
#include "locdense/homcount.hpp"
#include "locdense/rational.hpp"
#include "locdense/verify.hpp"

namespace locdense::cli {

namespace {

enum class Format { text, csv, json };

Format parse_format(const std::string& name) {
    if (name == "text") return Format::text;
    if (name == "csv") return Format::csv;
    if (name == "json") return Format::json;
    throw InputError("unknown format '" + name + "'");
}

// Ordered key/value report emitted as "key: value" lines or a JSON object.
// Every value is already an exact decimal integer, "p/q" string, vertex list
// or status word; no number is ever reformatted.
struct Report {
    std::vector<std::pair<std::string, std::string>> fields;

    void add(std::string key, std::string value) {
        fields.emplace_back(std::move(key), std::move(value));
    }
    void add_bool(std::string key, bool value) { add(std::move(key), value ? "true" : "false"); }

    std::string text() const {
        std::string out;
        for (const auto& [key, value] : fields) {
            out += key;
            out += ": ";
            out += value;
            out += '\n';
        }
        return out;
    }
    std::string json() const {
        nlohmann::ordered_json j;
        for (const auto& [key, value] : fields) j[key] = value;
        return j.dump(2) + "\n";
    }
    std::string render(Format format) const {
        if (format == Format::csv)
            throw InputError("csv output is only available for the scan subcommand");
        return format == Format::text ? text() : json();
    }
};

Graph load_graph(const std::string& path) {
    std::ifstream file(path, std::ios::binary);
    if (!file) throw InputError("cannot open graph file '" + path + "'");
    std::ostringstream buffer;
    buffer << file.rdbuf();
    return Graph::from_edge_list(buffer.str());
}

void write_output(const std::string& content, const std::string& out_path, std::ostream& out) {
    if (out_path.empty()) {
        out << content;
        return;
    }
    std::ofstream file(out_path, std::ios::binary);
    if (!file) throw InputError("cannot open output file '" + out_path + "'");
    file << content;
    if (!file) throw InputError("failed to write '" + out_path + "'");
}

std::vector<int> parse_int_list(const std::string& text, const std::string& flag) {
    std::vector<int> values;
    if (text.empty()) return values;
    size_t pos = 0;
    while (pos <= text.size()) {
        const size_t comma = std::min(text.find(',', pos), text.size());
        const std::string item = text.substr(pos, comma - pos);
        try {
            size_t used = 0;
            const int v = std::stoi(item, &used);
            if (used != item.size()) throw std::invalid_argument(item);
            values.push_back(v);
        } catch (const std::exception&) {
            throw InputError("cannot parse '" + item + "' in " + flag +
                             " (expected comma-separated integers)");
        }
        pos = comma + 1;
    }
    return values;
}

// "auto" defers to the exact per-graph derivation; anything else must be an
// exact rational literal.
Rational resolve_d(const std::string& d_text, const Graph& g, const Rational& eps, int limit) {
    if (d_text == "auto") return derive_density_auto(g, eps, limit).d;
    return Rational::parse(d_text);
}

std::string optional_vertex(const std::optional<int>& v) {
    return v ? std::to_string(*v) : "none";
}

struct GenArgs {
    std::string family;
    int n = 0;
    std::string p = "1/2";
    int k = 0;
    int s = 0;
    std::string parts;
    int t = 0;
    std::string base_path;
    unsigned long seed = 0;
    std::string out_path;
};

int run_gen(const GenArgs& a, std::ostream& out) {
    Graph g;
    if (a.family == "random") {
        g = gen_random(a.n, Rational::parse(a.p), a.seed);
    } else if (a.family == "complete") {
        FamilySpec spec;
        spec.kind = FamilySpec::Kind::complete;
        spec.n = a.n;
        g = gen_family(spec);
    } else if (a.family == "clique-union") {
        FamilySpec spec;
        spec.kind = FamilySpec::Kind::clique_union;
        spec.cliques = a.k;
        spec.clique_size = a.s;
        g = gen_family(spec);
    } else if (a.family == "multipartite") {
        FamilySpec spec;
        spec.kind = FamilySpec::Kind::multipartite;
        if (!a.parts.empty()) {
            spec.parts = parse_int_list(a.parts, "--parts");
        } else {
            spec.parts.assign(static_cast<size_t>(std::max(a.k, 0)), a.s);
        }
        g = gen_family(spec);
    } else if (a.family == "blowup") {
        if (a.base_path.empty()) throw InputError("blowup needs a base graph via --graph");
        FamilySpec spec;
        spec.kind = FamilySpec::Kind::blowup;
        spec.base = load_graph(a.base_path);
        spec.blowup_factor = a.t;
        g = gen_family(spec);
    } else {
        throw InputError("unknown family '" + a.family +
                         "' (use complete, multipartite, clique-union, blowup or random)");
    }
    write_output(g.to_edge_list(), a.out_path, out);
    return 0;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact cycle counts, local-density certificates and bound checks for graphs"};
    app.require_subcommand(1);

    GenArgs gen_args;
    CLI::App* gen = app.add_subcommand("gen", "generate a graph and print its edge list");
    gen->add_option("--family", gen_args.family,
                    "complete | multipartite | clique-union | blowup | random")
        ->required();
    gen->add_option("--n", gen_args.n, "vertex count (complete, random)");
    gen->add_option("--p", gen_args.p, "edge probability p/q (random)");
    gen->add_option("--k", gen_args.k, "clique count (clique-union) or part count (multipartite)");
    gen->add_option("--s", gen_args.s, "clique size (clique-union) or part size (multipartite)");
    gen->add_option("--parts", gen_args.parts, "explicit part sizes, e.g. 3,3,4 (multipartite)");
    gen->add_option("--t", gen_args.t, "copies per base vertex (blowup)");
    gen->add_option("--graph", gen_args.base_path, "base graph file (blowup)");
    gen->add_option("--seed", gen_args.seed, "random seed");
    gen->add_option("--out", gen_args.out_path, "write to file instead of stdout");

    struct {
        std::string graph, out_path, format = "text";
        int r = 0;
    } count_args;
    CLI::App* count = app.add_subcommand("count", "count closed walks of a given length");
    count->add_option("--graph", count_args.graph, "edge-list file")->required();
    count->add_option("--r", count_args.r, "cycle length")->required();
    count->add_option("--format", count_args.format, "text | json");
    count->add_option("--out", count_args.out_path, "write to file instead of stdout");

    struct {
        std::string graph, out_path, format = "text";
        int k = 0;
    } paths_args;
    CLI::App* paths = app.add_subcommand("count-paths", "count walks of a given length");
    paths->add_option("--graph", paths_args.graph, "edge-list file")->required();
    paths->add_option("--k-path", paths_args.k, "path length in edges")->required();
    paths->add_option("--format", paths_args.format, "text | json");
    paths->add_option("--out", paths_args.out_path, "write to file instead of stdout");

    struct {
        std::string graph, eps, d, out_path, format = "text";
        int limit = kDefaultDensityLimit;
        long long iters = 2000;
        unsigned long seed = 0;
    } dens_args;
    CLI::App* dens = app.add_subcommand(
        "check-density", "certify or refute that every large subset spans enough edges");
    dens->add_option("--graph", dens_args.graph, "edge-list file")->required();
    dens->add_option("--eps", dens_args.eps, "subset threshold, rational in (0,1]")->required();
    dens->add_option("--d", dens_args.d, "density target, rational in [0,1], or 'auto'")
        ->required();
    dens->add_option("--limit-exhaustive", dens_args.limit,
                     "largest n checked exhaustively (beyond it: seeded local search)");
    dens->add_option("--iters", dens_args.iters, "local search iterations beyond the limit");
    dens->add_option("--seed", dens_args.seed, "local search seed");
    dens->add_option("--format", dens_args.format, "text | json");
    dens->add_option("--out", dens_args.out_path, "write to file instead of stdout");

    struct {
        std::string graph, eps, d, out_path, format = "text";
        int limit = kDefaultMinimizerLimit;
    } min_args;
    CLI::App* minw = app.add_subcommand(
        "min-weighted", "exactly minimize the weighted edge objective over admissible weights");
    minw->add_option("--graph", min_args.graph, "edge-list file")->required();
    minw->add_option("--eps", min_args.eps, "weight-sum threshold, rational in (0,1]")->required();
    minw->add_option("--d", min_args.d, "density parameter, rational in [0,1], or 'auto'")
        ->required();
    minw->add_option("--limit-exhaustive", min_args.limit, "largest n enumerated exactly");
    minw->add_option("--format", min_args.format, "text | json");
    minw->add_option("--out", min_args.out_path, "write to file instead of stdout");

    struct {
        std::string graph, eps, d, out_path, format = "text";
        long long trials = 100;
        unsigned long seed = 0;
        int limit = kDefaultDensityLimit;
    } lemf_args;
    CLI::App* lemf = app.add_subcommand(
        "lemma-f", "spot-check the weighted density inequality on random admissible weights");
    lemf->add_option("--graph", lemf_args.graph, "edge-list file")->required();
    lemf->add_option("--eps", lemf_args.eps, "weight-sum threshold, rational in (0,1]")
        ->required();
    lemf->add_option("--d", lemf_args.d, "density parameter, rational in [0,1], or 'auto'")
        ->required();
    lemf->add_option("--trials", lemf_args.trials, "number of sampled weight functions");
    lemf->add_option("--seed", lemf_args.seed, "sampling seed");
    lemf->add_option("--limit-exhaustive", lemf_args.limit,
                     "largest n for the required exhaustive density certificate");
    lemf->add_option("--format", lemf_args.format, "text | json");
    lemf->add_option("--out", lemf_args.out_path, "write to file instead of stdout");

    struct {
        std::string graph, eps, d, out_path, format = "text";
        int r = 0;
        int limit = kDefaultDensityLimit;
        long long iters = 2000;
        unsigned long seed = 0;
    } verify_args;
    CLI::App* verify = app.add_subcommand(
        "verify", "check the cycle-count lower bound with exact arithmetic");
    verify->add_option("--graph", verify_args.graph, "edge-list file")->required();
    verify->add_option("--eps", verify_args.eps, "subset threshold, rational in (0,1]")
        ->required();
    verify->add_option("--d", verify_args.d, "density target, rational in [0,1], or 'auto'")
        ->required();
    verify->add_option("--r", verify_args.r, "odd cycle length, at least 3")->required();
    verify->add_option("--limit-exhaustive", verify_args.limit,
                       "largest n certified exhaustively (beyond it: heuristic status)");
    verify->add_option("--iters", verify_args.iters, "local search iterations beyond the limit");
    verify->add_option("--seed", verify_args.seed, "local search seed");
    verify->add_option("--format", verify_args.format, "text | json");
    verify->add_option("--out", verify_args.out_path, "write to file instead of stdout");

    struct {
        std::string graph, eps, d, out_path, format = "text";
        int r = 0;
        int limit = kDefaultDensityLimit;
    } audit_args;
    CLI::App* audit = app.add_subcommand(
        "audit-chain", "evaluate each inequality behind the bound separately");
    audit->add_option("--graph", audit_args.graph, "edge-list file")->required();
    audit->add_option("--eps", audit_args.eps, "subset threshold, rational in (0,1]")->required();
    audit->add_option("--d", audit_args.d, "density target, rational in [0,1], or 'auto'")
        ->required();
    audit->add_option("--r", audit_args.r, "odd cycle length, at least 3")->required();
    audit->add_option("--limit-exhaustive", audit_args.limit,
                      "largest n audited (the audit always certifies exhaustively)");
    audit->add_option("--format", audit_args.format, "text | json");
    audit->add_option("--out", audit_args.out_path, "write to file instead of stdout");

    struct {
        std::string family, n_list, k_list, s_list, r_list;
        std::string p = "1/2", eps, d = "auto";
        unsigned long seed = 0;
        int limit = kDefaultDensityLimit;
        std::string out_path, format = "csv";
    } scan_args;
    CLI::App* scan = app.add_subcommand(
        "scan", "verify the bound across a family grid and emit one row per instance");
    scan->add_option("--family", scan_args.family,
                     "complete | clique-union | multipartite | random")
        ->required();
    scan->add_option("--n", scan_args.n_list, "vertex counts, e.g. 8,10,12 (complete, random)");
    scan->add_option("--k", scan_args.k_list, "clique/part counts, e.g. 2,3");
    scan->add_option("--s", scan_args.s_list, "clique/part sizes, e.g. 4,5");
    scan->add_option("--p", scan_args.p, "edge probability p/q (random)");
    scan->add_option("--eps", scan_args.eps, "subset threshold, rational in (0,1]")->required();
    scan->add_option("--d", scan_args.d, "density target, or 'auto' to derive per instance");
    scan->add_option("--r", scan_args.r_list, "odd cycle lengths, e.g. 3,5")->required();
    scan->add_option("--seed", scan_args.seed, "base seed for the random family");
    scan->add_option("--limit-exhaustive", scan_args.limit, "largest n certified exhaustively");
    scan->add_option("--format", scan_args.format, "csv | text | json");
    scan->add_option("--out", scan_args.out_path, "write to file instead of stdout");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    try {
        if (gen->parsed()) return run_gen(gen_args, out);

        if (count->parsed()) {
            const Format format = parse_format(count_args.format);
            const Graph g = load_graph(count_args.graph);
            const Integer c = count_cycle_homs(g, count_args.r);
            if (format == Format::text) {
                write_output(c.get_str() + "\n", count_args.out_path, out);
            } else {
                Report rep;
                rep.add("n", std::to_string(g.vertex_count()));
                rep.add("m", std::to_string(g.edge_count()));
                rep.add("r", std::to_string(count_args.r));
                rep.add("count", c.get_str());
                write_output(rep.render(format), count_args.out_path, out);
            }
            return 0;
        }

        if (paths->parsed()) {
            const Format format = parse_format(paths_args.format);
            const Graph g = load_graph(paths_args.graph);
            const Integer c = count_path_homs(g, paths_args.k);
            if (format == Format::text) {
                write_output(c.get_str() + "\n", paths_args.out_path, out);
            } else {
                Report rep;
                rep.add("n", std::to_string(g.vertex_count()));
                rep.add("m", std::to_string(g.edge_count()));
                rep.add("k", std::to_string(paths_args.k));
                rep.add("count", c.get_str());
                write_output(rep.render(format), paths_args.out_path, out);
            }
            return 0;
        }

        if (dens->parsed()) {
            const Format format = parse_format(dens_args.format);
            const Graph g = load_graph(dens_args.graph);
            const Rational eps = Rational::parse(dens_args.eps);
            const Rational d = resolve_d(dens_args.d, g, eps, dens_args.limit);
            const DensityParams params(eps, d);
            const DensityCertificate cert =
                g.vertex_count() <= dens_args.limit
                    ? check_density_exact(g, params, dens_args.limit)
                    : check_density_heuristic(g, params, dens_args.iters, dens_args.seed);
            Report rep;
            rep.add("n", std::to_string(g.vertex_count()));
            rep.add("m", std::to_string(g.edge_count()));
            rep.add("eps", eps.str());
            rep.add("d", d.str());
            rep.add("min_subset_size", std::to_string(params.min_subset_size(g.vertex_count())));
            rep.add("status", to_string(cert.status));
            rep.add("checked_subsets", std::to_string(cert.checked_subsets));
            if (cert.witness) {
                rep.add("witness", cert.witness->str());
                rep.add("witness_size", std::to_string(cert.witness->count()));
                rep.add("witness_edges", g.induced_edge_count(*cert.witness).get_str());
            }
            write_output(rep.render(format), dens_args.out_path, out);
            return cert.status == DensityStatus::refuted ? 1 : 0;
        }

        if (minw->parsed()) {
            const Format format = parse_format(min_args.format);
            const Graph g = load_graph(min_args.graph);
            const Rational eps = Rational::parse(min_args.eps);
            const Rational d = resolve_d(min_args.d, g, eps, min_args.limit);
            const DensityParams params(eps, d);
            const MinimizerResult res = weighted_min_exact(g, params, min_args.limit);
            Report rep;
            rep.add("n", std::to_string(g.vertex_count()));
            rep.add("m", std::to_string(g.edge_count()));
            rep.add("eps", eps.str());
            rep.add("d", d.str());
            rep.add("omega", res.omega.str());
            rep.add("ones", res.ones.str());
            rep.add("ones_size", std::to_string(res.ones.count()));
            rep.add("fractional_vertex", optional_vertex(res.fractional_vertex));
            rep.add("delta", res.delta.str());
            rep.add("weight_sum", res.minimizer.sum().str());
            std::string f_text;
            for (const Rational& v : res.minimizer.values) {
                if (!f_text.empty()) f_text += ' ';
                f_text += v.str();
            }
            rep.add("f", f_text);
            write_output(rep.render(format), min_args.out_path, out);
            return 0;
        }

        if (lemf->parsed()) {
            const Format format = parse_format(lemf_args.format);
            const Graph g = load_graph(lemf_args.graph);
            const Rational eps = Rational::parse(lemf_args.eps);
            const Rational d = resolve_d(lemf_args.d, g, eps, lemf_args.limit);
            const DensityParams params(eps, d);
            const DensityCertificate cert = check_density_exact(g, params, lemf_args.limit);
            Report rep;
            rep.add("n", std::to_string(g.vertex_count()));
            rep.add("m", std::to_string(g.edge_count()));
            rep.add("eps", eps.str());
            rep.add("d", d.str());
            rep.add("density_status", to_string(cert.status));
            if (cert.status != DensityStatus::certified_exhaustive) {
                if (cert.witness) rep.add("witness", cert.witness->str());
                rep.add("note", "inequality is only guaranteed on certified graphs");
                write_output(rep.render(format), lemf_args.out_path, out);
                return 1;
            }
            const WeightedDensityCheckReport check = spot_check_weighted_density(
                g, params, cert, lemf_args.trials, lemf_args.seed,
                lemf->count("--limit-exhaustive") ? lemf_args.limit : kDefaultMinimizerLimit);
            rep.add("trials", std::to_string(check.trials));
            rep.add("violations", std::to_string(check.violations));
            if (check.first_violation) {
                std::string f_text;
                for (const Rational& v : check.first_violation->values) {
                    if (!f_text.empty()) f_text += ' ';
                    f_text += v.str();
                }
                rep.add("violating_f", f_text);
                rep.add("violation_lhs", check.violation_lhs.str());
                rep.add("violation_rhs", check.violation_rhs.str());
            }
            rep.add_bool("minimizer_checked", check.minimizer_checked);
            if (check.minimizer_checked) {
                rep.add("omega", check.omega.str());
                rep.add_bool("omega_ok", check.omega_ok);
                rep.add("omega_gap", check.omega_gap.str());
            }
            write_output(rep.render(format), lemf_args.out_path, out);
            return check.violations > 0 ? 1 : 0;
        }

        if (verify->parsed()) {
            const Format format = parse_format(verify_args.format);
            const Graph g = load_graph(verify_args.graph);
            const Rational eps = Rational::parse(verify_args.eps);
            const Rational d = resolve_d(verify_args.d, g, eps, verify_args.limit);
            const DensityParams params(eps, d);
            std::optional<DensityStatus> assumed;
            if (g.vertex_count() > verify_args.limit)
                assumed = check_density_heuristic(g, params, verify_args.iters, verify_args.seed)
                              .status;
            const VerificationReport res =
                verify_main_theorem(g, params, verify_args.r, verify_args.limit, assumed);
            Report rep;
            rep.add("n", std::to_string(res.n));
            rep.add("m", std::to_string(res.m));
            rep.add("r", std::to_string(res.r));
            rep.add("eps", res.eps.str());
            rep.add("d", res.d.str());
            rep.add_bool("precondition_n_ok", res.precondition_n_ok);
            rep.add("density_status", to_string(res.density_status));
            rep.add("c_r", res.c_r.get_str());
            rep.add("bound", res.bound.str());
            rep.add_bool("holds", res.holds);
            rep.add("slack", res.slack.str());
            write_output(rep.render(format), verify_args.out_path, out);
            return res.holds ? 0 : 1;
        }

        if (audit->parsed()) {
            const Format format = parse_format(audit_args.format);
            const Graph g = load_graph(audit_args.graph);
            const Rational eps = Rational::parse(audit_args.eps);
            const Rational d = resolve_d(audit_args.d, g, eps, audit_args.limit);
            const DensityParams params(eps, d);
            const ChainReport res = audit_proof_chain(g, params, audit_args.r, audit_args.limit);
            Report rep;
            rep.add("n", std::to_string(res.n));
            rep.add("m", std::to_string(res.m_edges));
            rep.add("r", std::to_string(res.r));
            rep.add("walk_edges", std::to_string(res.walk_edges));
            rep.add("eps", res.eps.str());
            rep.add("d", res.d.str());
            rep.add_bool("precondition_n_ok", res.precondition_n_ok);
            rep.add("density_status", to_string(res.density_status));
            rep.add("z_set", res.z_set.str());
            rep.add("z_size", std::to_string(res.z_set.count()));
            rep.add("c_r", res.c_r.get_str());
            for (size_t i = 0; i < res.steps.size(); ++i) {
                const ChainStep& step = res.steps[i];
                const std::string prefix = "step" + std::to_string(i + 1);
                rep.add(prefix + "_name", step.name);
                rep.add(prefix + "_lhs", step.lhs.str());
                rep.add(prefix + "_relation", step.relation);
                rep.add(prefix + "_rhs", step.rhs.str());
                rep.add_bool(prefix + "_holds", step.holds);
                rep.add(prefix + "_condition",
                        step.conditional_on.empty() ? "none" : step.conditional_on);
            }
            rep.add_bool("all_steps_hold", res.all_hold);
            write_output(rep.render(format), audit_args.out_path, out);
            return res.all_hold ? 0 : 1;
        }

        if (scan->parsed()) {
            const Format format = parse_format(scan_args.format);
            ScanSpec spec;
            spec.family = scan_args.family;
            spec.n_values = parse_int_list(scan_args.n_list, "--n");
            spec.k_values = parse_int_list(scan_args.k_list, "--k");
            spec.s_values = parse_int_list(scan_args.s_list, "--s");
            spec.r_values = parse_int_list(scan_args.r_list, "--r");
            spec.p_edge = Rational::parse(scan_args.p);
            spec.eps = Rational::parse(scan_args.eps);
            if (scan_args.d != "auto") spec.d = Rational::parse(scan_args.d);
            spec.seed = scan_args.seed;
            spec.density_limit = scan_args.limit;
            const ScanResult result = scan_family(spec);
            std::string content;
            if (format == Format::csv) {
                content = result.csv();
            } else {
                Report rep;
                rep.add("rows", std::to_string(result.rows.size()));
                rep.add("holds", std::to_string(result.holds_count));
                rep.add("violations", std::to_string(result.violation_count));
                rep.add("errors", std::to_string(result.error_count));
                if (format == Format::json) {
                    nlohmann::ordered_json j;
                    for (const auto& [key, value] : rep.fields) j[key] = value;
                    j["csv"] = result.csv();
                    content = j.dump(2) + "\n";
                } else {
                    content = rep.text();
                }
            }
            write_output(content, scan_args.out_path, out);
            return result.violation_count > 0 ? 1 : 0;
        }

        throw InputError("no subcommand selected");
    } catch (const ResourceLimitError& e) {
        err << "resource limit: " << e.what() << "\n";
        return 3;
    } catch (const InputError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return 2;
    }
}

} // namespace locdense::cli
