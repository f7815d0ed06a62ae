// Compares the serial reference kernels against their parallel twins on the
// same inputs, asserting equal results and reporting wall-clock times.  Run
// with OMP_NUM_THREADS set to see the effect of the thread count.
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <string>

#include "locdense/density.hpp"
#include "locdense/exec.hpp"
#include "locdense/graph.hpp"
#include "locdense/homcount.hpp"
#include "locdense/verify.hpp"

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

template <typename Fn>
double timed(Fn&& fn) {
    const auto start = Clock::now();
    fn();
    return seconds_since(start);
}

void report(const char* name, double serial_s, double parallel_s) {
    std::printf("%-28s serial %8.3fs   parallel %8.3fs   speedup %.2fx\n", name, serial_s,
                parallel_s, parallel_s > 0 ? serial_s / parallel_s : 0.0);
}

} // namespace

int main(int argc, char** argv) {
    using namespace locdense;

    int n_walk = 120;
    int n_subset = 26;
    int repeats = 3;
    for (int i = 1; i + 1 < argc; i += 2) {
        const std::string flag = argv[i];
        const int value = std::atoi(argv[i + 1]);
        if (flag == "--n-walk") n_walk = value;
        else if (flag == "--n-subset") n_subset = value;
        else if (flag == "--repeats") repeats = value;
        else {
            std::fprintf(stderr, "unknown flag %s\n", flag.c_str());
            return 2;
        }
    }

    std::printf("walk-table graph: random n=%d, subset graphs: random n=%d, repeats=%d\n\n",
                n_walk, n_subset, repeats);

    const Graph walk_graph = gen_random(n_walk, Rational(1, 2), 7);
    const Graph subset_graph = gen_random(n_subset, Rational(1, 2), 11);
    const DensityParams params(Rational(1, 2), Rational(1, 4));

    {
        Integer serial_count, parallel_count;
        double serial_s = 0, parallel_s = 0;
        for (int rep = 0; rep < repeats; ++rep) {
            serial_s += timed([&] { serial_count = count_cycle_homs(walk_graph, 7, Exec::serial); });
            parallel_s +=
                timed([&] { parallel_count = count_cycle_homs(walk_graph, 7, Exec::parallel); });
        }
        if (serial_count != parallel_count) {
            std::fprintf(stderr, "cycle-count kernels disagree\n");
            return 1;
        }
        report("cycle count (r=7)", serial_s / repeats, parallel_s / repeats);
    }

    {
        DensityCertificate serial_cert, parallel_cert;
        double serial_s = 0, parallel_s = 0;
        for (int rep = 0; rep < repeats; ++rep) {
            serial_s += timed([&] {
                serial_cert = check_density_exact(subset_graph, params, n_subset, Exec::serial);
            });
            parallel_s += timed([&] {
                parallel_cert = check_density_exact(subset_graph, params, n_subset, Exec::parallel);
            });
        }
        if (serial_cert.status != parallel_cert.status ||
            serial_cert.witness != parallel_cert.witness) {
            std::fprintf(stderr, "density kernels disagree\n");
            return 1;
        }
        report("density certificate", serial_s / repeats, parallel_s / repeats);
    }

    {
        const int n_min = n_subset < 24 ? n_subset : 24;
        const Graph min_graph = gen_random(n_min, Rational(1, 2), 13);
        MinimizerResult serial_res, parallel_res;
        double serial_s = 0, parallel_s = 0;
        for (int rep = 0; rep < repeats; ++rep) {
            serial_s += timed(
                [&] { serial_res = weighted_min_exact(min_graph, params, n_min, Exec::serial); });
            parallel_s += timed([&] {
                parallel_res = weighted_min_exact(min_graph, params, n_min, Exec::parallel);
            });
        }
        if (serial_res.omega != parallel_res.omega || serial_res.ones != parallel_res.ones) {
            std::fprintf(stderr, "minimizer kernels disagree\n");
            return 1;
        }
        report("weighted minimizer", serial_s / repeats, parallel_s / repeats);
    }

    {
        ScanSpec spec;
        spec.family = "random";
        spec.n_values = {18, 20, 22};
        spec.r_values = {3, 5};
        spec.seed = 3;
        spec.eps = Rational(1, 2);
        std::string serial_csv, parallel_csv;
        double serial_s = 0, parallel_s = 0;
        for (int rep = 0; rep < repeats; ++rep) {
            serial_s += timed([&] { serial_csv = scan_family(spec, Exec::serial).csv(); });
            parallel_s += timed([&] { parallel_csv = scan_family(spec, Exec::parallel).csv(); });
        }
        if (serial_csv != parallel_csv) {
            std::fprintf(stderr, "scan outputs differ between kernels\n");
            return 1;
        }
        report("family scan", serial_s / repeats, parallel_s / repeats);
    }

    std::printf("\nall kernel pairs agree\n");
    return 0;
}
