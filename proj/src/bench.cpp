#include "reconf/bench.hpp"

#include <chrono>
#include <cmath>
#include <ostream>
#include <sstream>

#include "reconf/decompose.hpp"
#include "reconf/density.hpp"
#include "reconf/generate.hpp"
#include "reconf/oracle.hpp"
#include "reconf/recolor.hpp"

namespace reconf {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

Graph build_instance(const BenchConfig& cfg, int size, std::uint64_t instance_seed,
                     std::string& name) {
    std::ostringstream label;
    switch (cfg.family) {
    case BenchFamily::forest_union: {
        label << "forest_union" << cfg.t << "-n" << size;
        name = label.str();
        return make_forest_union(size, cfg.t, instance_seed);
    }
    case BenchFamily::cycle: {
        label << "cycle-n" << size;
        name = label.str();
        return make_cycle(size);
    }
    case BenchFamily::grid: {
        const int side = std::max(1, static_cast<int>(std::llround(std::sqrt(size))));
        label << "grid-" << side << "x" << side;
        name = label.str();
        return make_grid(side, side);
    }
    }
    throw ArgumentError("unknown bench family");
}

} // namespace

BenchResult run_bench(const BenchConfig& config) {
    if (config.k < 2)
        throw ArgumentError("k must be >= 2");
    if (config.seeds_per_n < 1)
        throw ArgumentError("seeds_per_n must be >= 1");

    BenchResult result;
    int index = 0;
    for (int size : config.sizes) {
        for (int rep = 0; rep < config.seeds_per_n; ++rep, ++index) {
            const std::uint64_t instance_seed =
                splitmix64(config.seed ^ splitmix64(static_cast<std::uint64_t>(index)));
            RunRecord rec;
            Graph g = build_instance(config, size, instance_seed, rec.instance);
            rec.instance += "-s" + std::to_string(rep);
            rec.n = g.num_vertices();
            rec.m = g.num_edges();
            rec.k = config.k;
            rec.mad_value = mad(g);

            if (config.d_override) {
                rec.d = *config.d_override;
                rec.epsilon = Rational(rec.d) - rec.mad_value;
                if (rec.epsilon.num() <= 0 || config.k < rec.d + 1)
                    throw InfeasibleError("override d=" + std::to_string(rec.d) +
                                          " infeasible for mad " + rec.mad_value.str() +
                                          ", k=" + std::to_string(config.k));
            } else {
                const auto params = derive_params(rec.mad_value, config.k);
                if (!params)
                    throw InfeasibleError("mad " + rec.mad_value.str() + " >= k-1 for " +
                                          rec.instance);
                rec.d = params->d;
                rec.epsilon = params->epsilon;
            }

            std::mt19937_64 rng(splitmix64(instance_seed ^ 0x5eedULL));
            const Coloring alpha = random_proper_coloring(g, config.k, rng);
            const Coloring beta = random_proper_coloring(g, config.k, rng);

            const Peeling peeling = peel(g, rec.d, rec.epsilon);
            const auto t0 = std::chrono::steady_clock::now();
            const RecolorSequence seq = recolor(g, alpha, beta, config.k, peeling);
            const auto t1 = std::chrono::steady_clock::now();
            rec.wall_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
            rec.length = static_cast<long long>(seq.length());
            rec.bound = length_bound(rec.n, rec.d, rec.epsilon).total_bound;

            const VerifyResult check = verify_sequence(g, alpha, beta, seq.steps);
            if (!check.ok)
                throw InvariantError("bench instance " + rec.instance +
                                     " produced an invalid sequence: " + check.message);
            if (peeling.all_size_bounds_met() && static_cast<u128>(rec.length) > rec.bound)
                throw InvariantError("bench instance " + rec.instance +
                                     " exceeded its length bound");

            if (config.with_oracle) {
                const auto dist = bfs_distance(g, config.k, alpha, beta);
                if (!dist)
                    throw InvariantError("bench instance " + rec.instance +
                                         " endpoints are disconnected in R_k");
                if (*dist > rec.length)
                    throw InvariantError("bench instance " + rec.instance +
                                         " sequence shorter than the BFS distance");
                rec.oracle_distance = dist;
            }
            result.rows.push_back(std::move(rec));
        }
    }

    // Least-squares slope of log(length) on log(n).
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    int count = 0;
    for (const RunRecord& rec : result.rows) {
        if (rec.length < 1)
            continue;
        const double x = std::log(static_cast<double>(rec.n));
        const double y = std::log(static_cast<double>(rec.length));
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
        ++count;
    }
    if (count >= 2) {
        const double var = sxx - sx * sx / count;
        if (var > 1e-12)
            result.slope = (sxy - sx * sy / count) / var;
    }
    return result;
}

void write_csv(const BenchResult& result, std::ostream& out) {
    out << "instance,n,m,mad,d,epsilon,k,length,bound,oracle_distance,wall_ms\n";
    for (const RunRecord& rec : result.rows) {
        out << rec.instance << "," << rec.n << "," << rec.m << "," << rec.mad_value.str() << ","
            << rec.d << "," << rec.epsilon.str() << "," << rec.k << "," << rec.length << ","
            << u128_str(rec.bound) << ",";
        if (rec.oracle_distance)
            out << *rec.oracle_distance;
        out << "," << rec.wall_ms << "\n";
    }
    if (result.slope)
        out << "slope," << *result.slope << "\n";
}

} // namespace reconf
