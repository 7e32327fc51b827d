#include "reconf/cli.hpp"

#include <filesystem>
#include <fstream>
#include <istream>
#include <optional>
#include <ostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "reconf/bench.hpp"
#include "reconf/decompose.hpp"
#include "reconf/density.hpp"
#include "reconf/dimacs.hpp"
#include "reconf/generate.hpp"
#include "reconf/oracle.hpp"
#include "reconf/recolor.hpp"

namespace reconf {

namespace {

using nlohmann::json;

struct Streams {
    std::istream& in;
    std::ostream& out;
    std::ostream& err;
};

// Paths equal to "-" read standard input.
Graph load_graph(const std::string& path, Streams& s) {
    if (path == "-")
        return parse_dimacs(s.in, &s.err);
    std::ifstream file(path);
    if (!file)
        throw ArgumentError("cannot open '" + path + "'");
    return parse_dimacs(file, &s.err);
}

Coloring load_coloring(const std::string& path, int n, int k, Streams& s) {
    if (path == "-")
        return parse_coloring(s.in, n, k);
    std::ifstream file(path);
    if (!file)
        throw ArgumentError("cannot open '" + path + "'");
    try {
        return parse_coloring(file, n, k);
    } catch (const ParseError& e) {
        throw ParseError(std::string(path) + ": " + e.what());
    }
}

std::vector<RecolorStep> load_sequence(const std::string& path, Streams& s) {
    if (path == "-")
        return parse_sequence(s.in);
    std::ifstream file(path);
    if (!file)
        throw ArgumentError("cannot open '" + path + "'");
    return parse_sequence(file);
}

std::string ones_based(const VertexSubset& vs) {
    std::string out;
    for (int v : vs) {
        if (!out.empty())
            out += " ";
        out += std::to_string(v + 1);
    }
    return out;
}

json ones_based_json(const VertexSubset& vs) {
    json arr = json::array();
    for (int v : vs)
        arr.push_back(v + 1);
    return arr;
}

// d/epsilon resolution shared by peel, recolor and oracle check: explicit
// overrides win, otherwise derive from the exact mad.
Params resolve_params(const Rational& mad_value, std::optional<int> k_opt,
                      std::optional<int> d_opt, std::optional<Rational> eps_opt,
                      std::ostream& err) {
    Params p;
    if (d_opt) {
        p.d = *d_opt;
        if (p.d < 1)
            throw ArgumentError("d must be >= 1");
        if (eps_opt && eps_opt->num() <= 0)
            throw ArgumentError("epsilon must be positive");
        p.epsilon = eps_opt ? *eps_opt : Rational(p.d) - mad_value;
        if (p.epsilon.num() <= 0)
            throw InfeasibleError("mad = " + mad_value.str() + " requires d > mad (got d = " +
                                  std::to_string(p.d) + ")");
        if (p.epsilon > Rational(p.d))
            throw ArgumentError("epsilon must be <= d");
        p.k = k_opt.value_or(p.d + 1);
        if (p.k < p.d + 1)
            throw InfeasibleError("k = " + std::to_string(p.k) + " is below d + 1 = " +
                                  std::to_string(p.d + 1));
        p.c = p.d >= 3 ? diameter_exponent(p.d, p.epsilon) : 0.0;
        if (mad_value > Rational(p.d) - p.epsilon)
            err << "warning: mad = " << mad_value.str() << " exceeds d - epsilon = "
                << (Rational(p.d) - p.epsilon).str() << "; length bound not guaranteed\n";
        return p;
    }
    if (!k_opt)
        throw ArgumentError("either --k or --d is required");
    const auto derived = derive_params(mad_value, *k_opt);
    if (!derived)
        throw InfeasibleError("mad = " + mad_value.str() + " needs k >= " +
                              std::to_string(mad_value.floor() + 2) + ", got k = " +
                              std::to_string(*k_opt));
    return *derived;
}

void append_oracle_csv(const std::string& path, int n, int k, long long colorings, int components,
                       long long diameter, const std::string& bound) {
    const bool fresh = !std::filesystem::exists(path) || std::filesystem::file_size(path) == 0;
    std::ofstream file(path, std::ios::app);
    if (!file)
        throw ArgumentError("cannot open '" + path + "' for writing");
    if (fresh)
        file << "n,k,colourings,components,diameter,bound\n";
    file << n << "," << k << "," << colorings << "," << components << "," << diameter << ","
         << bound << "\n";
}

} // namespace

int cli_main(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
             std::ostream& err) {
    Streams streams{in, out, err};
    int rc = 0;

    CLI::App app{"Explicit recolouring sequences between k-colourings of sparse graphs,\n"
                 "with exact maximum-average-degree computation and brute-force oracles."};
    app.require_subcommand(1);
    std::string format = "text";
    app.add_option("--format", format, "Output format")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();

    // gen ------------------------------------------------------------------
    auto* gen = app.add_subcommand("gen", "Generate a graph and print it in DIMACS edge format");
    std::string gen_kind;
    std::vector<long long> gen_args;
    std::uint64_t gen_seed = 0;
    std::string gen_out;
    gen->add_option("kind", gen_kind, "path | cycle | complete | star | grid | forest_union")
        ->required();
    gen->add_option("dims", gen_args, "n (path/cycle/complete/star), r c (grid), n t (forest_union)");
    gen->add_option("--seed", gen_seed, "Random seed (forest_union)");
    gen->add_option("-o,--output", gen_out, "Write to file instead of stdout");
    gen->callback([&] {
        auto want = [&](std::size_t count) {
            if (gen_args.size() != count)
                throw ArgumentError("'" + gen_kind + "' takes " + std::to_string(count) +
                                    " size argument(s)");
        };
        Graph g;
        if (gen_kind == "path") {
            want(1);
            g = make_path(static_cast<int>(gen_args[0]));
        } else if (gen_kind == "cycle") {
            want(1);
            g = make_cycle(static_cast<int>(gen_args[0]));
        } else if (gen_kind == "complete") {
            want(1);
            g = make_complete(static_cast<int>(gen_args[0]));
        } else if (gen_kind == "star") {
            want(1);
            g = make_star(static_cast<int>(gen_args[0]));
        } else if (gen_kind == "grid") {
            want(2);
            g = make_grid(static_cast<int>(gen_args[0]), static_cast<int>(gen_args[1]));
        } else if (gen_kind == "forest_union") {
            want(2);
            g = make_forest_union(static_cast<int>(gen_args[0]), static_cast<int>(gen_args[1]),
                                  gen_seed);
        } else {
            throw ArgumentError("unknown generator '" + gen_kind + "'");
        }
        if (gen_out.empty()) {
            write_dimacs(g, out);
        } else {
            std::ofstream file(gen_out);
            if (!file)
                throw ArgumentError("cannot open '" + gen_out + "' for writing");
            write_dimacs(g, file);
        }
    });

    // mad ------------------------------------------------------------------
    auto* madc = app.add_subcommand("mad", "Exact maximum average degree and a densest subset");
    std::string mad_graph;
    madc->add_option("graph", mad_graph, "DIMACS graph file ('-' for stdin)")->required();
    madc->callback([&] {
        const Graph g = load_graph(mad_graph, streams);
        const DensestResult res = densest_subgraph(g);
        long long inner = 0;
        for (auto [u, v] : g.edges())
            if (res.subset.contains(u) && res.subset.contains(v))
                ++inner;
        if (format == "json") {
            json j;
            j["mad"] = res.mad.str();
            j["density"] = res.density.str();
            j["subset"] = ones_based_json(res.subset);
            j["subset_vertices"] = res.subset.size();
            j["subset_edges"] = inner;
            out << j.dump() << "\n";
        } else {
            out << "mad = " << res.mad.str() << "\n";
            out << "densest subset (" << res.subset.size() << " vertices, " << inner
                << " edges, density " << res.density.str() << "): " << ones_based(res.subset)
                << "\n";
        }
    });

    // peel -----------------------------------------------------------------
    auto* peelc = app.add_subcommand("peel", "Peel into special independent sets");
    std::string peel_graph;
    std::optional<int> peel_k, peel_d;
    std::optional<std::string> peel_eps;
    peelc->add_option("graph", peel_graph)->required();
    peelc->add_option("--k", peel_k, "Palette size; d, epsilon derived from mad");
    peelc->add_option("--d", peel_d, "Override d");
    peelc->add_option("--eps", peel_eps, "Override epsilon, as 'p/q'");
    peelc->callback([&] {
        const Graph g = load_graph(peel_graph, streams);
        std::optional<Rational> eps;
        if (peel_eps)
            eps = Rational::parse(*peel_eps);
        const Params p = resolve_params(mad(g), peel_k, peel_d, eps, err);
        const Peeling peeling = peel(g, p.d, p.epsilon);
        if (format == "json") {
            json j;
            j["d"] = p.d;
            j["epsilon"] = p.epsilon.str();
            j["layers"] = json::array();
            for (const PeelLayer& layer : peeling.layers)
                j["layers"].push_back({{"host_size", layer.host_size},
                                       {"vertices", ones_based_json(layer.ind_set)},
                                       {"size_bound_met", layer.size_bound_met},
                                       {"mad_hypothesis_violated", layer.mad_hypothesis_violated}});
            j["all_size_bounds_met"] = peeling.all_size_bounds_met();
            out << j.dump() << "\n";
        } else {
            for (std::size_t i = 0; i < peeling.layers.size(); ++i) {
                const PeelLayer& layer = peeling.layers[i];
                out << "layer " << i << " (host " << layer.host_size
                    << "): " << ones_based(layer.ind_set);
                out << (layer.size_bound_met ? "  [size bound met]" : "  [size bound NOT met]");
                if (layer.mad_hypothesis_violated)
                    out << " [mad hypothesis violated]";
                out << "\n";
            }
            out << "layers = " << peeling.layers.size() << ", d = " << p.d << ", epsilon = "
                << p.epsilon.str() << ", all size bounds met = "
                << (peeling.all_size_bounds_met() ? "yes" : "no") << "\n";
        }
    });

    // recolor ----------------------------------------------------------------
    auto* rec = app.add_subcommand("recolor", "Build a recolouring sequence from alpha to beta");
    std::string rec_graph, rec_alpha, rec_beta, rec_out;
    std::optional<int> rec_k, rec_d;
    std::optional<std::string> rec_eps;
    rec->add_option("graph", rec_graph)->required();
    rec->add_option("alpha", rec_alpha)->required();
    rec->add_option("beta", rec_beta)->required();
    rec->add_option("--k", rec_k, "Palette size")->required();
    rec->add_option("--d", rec_d, "Override d (default: smallest feasible)");
    rec->add_option("--eps", rec_eps, "Override epsilon, as 'p/q'");
    rec->add_option("-o,--output", rec_out, "Write the sequence to a file");
    rec->callback([&] {
        const Graph g = load_graph(rec_graph, streams);
        std::optional<Rational> eps;
        if (rec_eps)
            eps = Rational::parse(*rec_eps);
        const Params p = resolve_params(mad(g), rec_k, rec_d, eps, err);
        const Coloring alpha = load_coloring(rec_alpha, g.num_vertices(), p.k, streams);
        const Coloring beta = load_coloring(rec_beta, g.num_vertices(), p.k, streams);
        const Peeling peeling =
            g.num_vertices() > 0 ? peel(g, p.d, p.epsilon) : Peeling{};
        const RecolorSequence seq = recolor(g, alpha, beta, p.k, peeling);
        const LengthBudget budget = length_bound(g.num_vertices(), p.d, p.epsilon);

        if (!rec_out.empty()) {
            std::ofstream file(rec_out);
            if (!file)
                throw ArgumentError("cannot open '" + rec_out + "' for writing");
            write_sequence(seq.steps, file);
        }
        if (format == "json") {
            json j;
            j["length"] = seq.length();
            j["bound"] = u128_str(budget.total_bound);
            j["levels"] = peeling.layers.size();
            j["d"] = p.d;
            j["epsilon"] = p.epsilon.str();
            j["steps"] = json::array();
            for (const RecolorStep& st : seq.steps)
                j["steps"].push_back({st.vertex + 1, st.color});
            out << j.dump() << "\n";
        } else if (rec_out.empty()) {
            write_sequence(seq.steps, out);
        }
        err << "length = " << seq.length() << ", bound = " << u128_str(budget.total_bound)
            << ", levels = " << peeling.layers.size() << ", d = " << p.d << ", epsilon = "
            << p.epsilon.str() << "\n";
    });

    // verify ---------------------------------------------------------------
    auto* ver = app.add_subcommand("verify", "Replay and check a recolouring sequence");
    std::string ver_graph, ver_alpha, ver_beta, ver_seq;
    int ver_k = 0;
    ver->add_option("graph", ver_graph)->required();
    ver->add_option("alpha", ver_alpha)->required();
    ver->add_option("beta", ver_beta)->required();
    ver->add_option("sequence", ver_seq)->required();
    ver->add_option("--k", ver_k, "Palette size")->required();
    ver->callback([&] {
        const Graph g = load_graph(ver_graph, streams);
        const Coloring alpha = load_coloring(ver_alpha, g.num_vertices(), ver_k, streams);
        const Coloring beta = load_coloring(ver_beta, g.num_vertices(), ver_k, streams);
        const std::vector<RecolorStep> steps = load_sequence(ver_seq, streams);
        const VerifyResult res = verify_sequence(g, alpha, beta, steps);
        if (format == "json") {
            json j;
            j["ok"] = res.ok;
            if (!res.ok) {
                j["step"] = res.step_index;
                j["message"] = res.message;
            }
            out << j.dump() << "\n";
        } else {
            out << (res.ok ? "ok" : "FAIL: " + res.message) << "\n";
        }
        if (!res.ok)
            rc = 3;
    });

    // oracle -----------------------------------------------------------------
    auto* oracle = app.add_subcommand("oracle", "Brute-force ground truth on R_k(G)");
    oracle->require_subcommand(1);

    auto* dist = oracle->add_subcommand("distance", "Shortest recolouring distance by BFS");
    std::string dist_graph, dist_alpha, dist_beta;
    int dist_k = 0;
    dist->add_option("graph", dist_graph)->required();
    dist->add_option("alpha", dist_alpha)->required();
    dist->add_option("beta", dist_beta)->required();
    dist->add_option("--k", dist_k)->required();
    dist->callback([&] {
        const Graph g = load_graph(dist_graph, streams);
        const Coloring alpha = load_coloring(dist_alpha, g.num_vertices(), dist_k, streams);
        const Coloring beta = load_coloring(dist_beta, g.num_vertices(), dist_k, streams);
        const auto d = bfs_distance(g, dist_k, alpha, beta);
        if (format == "json") {
            json j;
            j["unreachable"] = !d.has_value();
            if (d)
                j["distance"] = *d;
            out << j.dump() << "\n";
        } else {
            if (d)
                out << "distance = " << *d << "\n";
            else
                out << "unreachable\n";
        }
    });

    auto* summ = oracle->add_subcommand("summary", "Census of R_k(G)");
    std::string summ_graph, summ_csv;
    int summ_k = 0;
    summ->add_option("graph", summ_graph)->required();
    summ->add_option("--k", summ_k)->required();
    summ->add_option("--csv", summ_csv, "Append a CSV row (n,k,colourings,components,diameter,bound)");
    summ->callback([&] {
        const Graph g = load_graph(summ_graph, streams);
        const ReconfSummary s = summarize(g, summ_k);
        long long diameter = 0;
        for (long long d : s.component_diameters)
            diameter = std::max(diameter, d);
        if (format == "json") {
            json j;
            j["colourings"] = s.coloring_count;
            j["components"] = s.component_count;
            j["component_diameters"] = s.component_diameters;
            j["frozen"] = s.frozen_count;
            out << j.dump() << "\n";
        } else {
            out << "colourings = " << s.coloring_count << "\n";
            out << "components = " << s.component_count << "\n";
            out << "diameters =";
            for (long long d : s.component_diameters)
                out << " " << d;
            out << "\n";
            out << "frozen = " << s.frozen_count << "\n";
        }
        if (!summ_csv.empty())
            append_oracle_csv(summ_csv, g.num_vertices(), summ_k, s.coloring_count,
                              s.component_count, diameter, "");
    });

    auto* check = oracle->add_subcommand("check", "Connectivity and diameter against the bound");
    std::string check_graph, check_csv;
    std::optional<int> check_k, check_d;
    std::optional<std::string> check_eps;
    check->add_option("graph", check_graph)->required();
    check->add_option("--k", check_k, "Palette size");
    check->add_option("--d", check_d, "Override d");
    check->add_option("--eps", check_eps, "Override epsilon, as 'p/q'");
    check->add_option("--csv", check_csv, "Append a CSV row (n,k,colourings,components,diameter,bound)");
    check->callback([&] {
        const Graph g = load_graph(check_graph, streams);
        std::optional<Rational> eps;
        if (check_eps)
            eps = Rational::parse(*check_eps);
        const Params p = resolve_params(mad(g), check_k, check_d, eps, err);
        const DiameterReport report = diameter_check(g, p.k, p);
        if (format == "json") {
            json j;
            j["colourings"] = report.coloring_count;
            j["components"] = report.component_count;
            j["connected"] = report.connected;
            j["diameter"] = report.diameter;
            j["bound"] = u128_str(report.bound);
            j["within_bound"] = report.within_bound;
            j["ok"] = report.ok();
            out << j.dump() << "\n";
        } else {
            out << "colourings = " << report.coloring_count << "\n";
            out << "connected = " << (report.connected ? "yes" : "no") << "\n";
            out << "diameter = " << report.diameter << "\n";
            out << "bound = " << u128_str(report.bound) << "\n";
            out << "within bound = " << (report.within_bound ? "yes" : "no") << "\n";
        }
        if (!check_csv.empty())
            append_oracle_csv(check_csv, g.num_vertices(), p.k, report.coloring_count,
                              report.component_count, report.diameter, u128_str(report.bound));
        if (!report.ok())
            rc = 3;
    });

    // bench ------------------------------------------------------------------
    auto* bench = app.add_subcommand("bench", "Recolouring experiments over instance families");
    std::string bench_family = "forest_union", bench_csv;
    std::vector<int> bench_sizes;
    int bench_t = 1, bench_k = 3, bench_reps = 1;
    std::uint64_t bench_seed = 0;
    bool bench_oracle = false;
    std::optional<int> bench_d;
    bench->add_option("--family", bench_family, "forest_union | cycle | grid")
        ->check(CLI::IsMember({"forest_union", "cycle", "grid"}))
        ->capture_default_str();
    bench->add_option("--n", bench_sizes, "Instance sizes, ascending (empty gives a header-only CSV)")
        ->delimiter(',');
    bench->add_option("--t", bench_t, "Forest count (forest_union)")->capture_default_str();
    bench->add_option("--k", bench_k, "Palette size")->required();
    bench->add_option("--seed", bench_seed, "Master seed; all randomness flows from it");
    bench->add_option("--seeds-per-n", bench_reps, "Repetitions per size")->capture_default_str();
    bench->add_option("--d", bench_d, "Override d");
    bench->add_flag("--with-oracle", bench_oracle, "Record BFS distances (tiny instances only)");
    bench->add_option("--csv", bench_csv, "Write CSV here instead of stdout");
    bench->callback([&] {
        BenchConfig cfg;
        if (bench_family == "forest_union")
            cfg.family = BenchFamily::forest_union;
        else if (bench_family == "cycle")
            cfg.family = BenchFamily::cycle;
        else
            cfg.family = BenchFamily::grid;
        cfg.t = bench_t;
        cfg.sizes = bench_sizes;
        cfg.k = bench_k;
        cfg.seed = bench_seed;
        cfg.seeds_per_n = bench_reps;
        cfg.with_oracle = bench_oracle;
        cfg.d_override = bench_d;
        const BenchResult result = run_bench(cfg);
        if (bench_csv.empty()) {
            write_csv(result, out);
        } else {
            std::ofstream file(bench_csv);
            if (!file)
                throw ArgumentError("cannot open '" + bench_csv + "' for writing");
            write_csv(result, file);
        }
        err << "bench: " << result.rows.size() << " rows";
        if (result.slope)
            err << ", slope = " << *result.slope;
        err << "\n";
    });

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(std::move(reversed));
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp& e) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const InfeasibleError& e) {
        err << "infeasible: " << e.what() << "\n";
        return 2;
    } catch (const DegeneracyError& e) {
        err << "infeasible: " << e.what() << "\n";
        return 2;
    } catch (const InvariantError& e) {
        err << "invariant failure: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    return rc;
}

} // namespace reconf
