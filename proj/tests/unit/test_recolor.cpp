#include <doctest.h>

#include <sstream>

#include "helpers.hpp"
#include "reconf/decompose.hpp"
#include "reconf/density.hpp"
#include "reconf/oracle.hpp"
#include "reconf/recolor.hpp"

using namespace reconf;
using reconf::testing::col;
using reconf::testing::graph_of;
using reconf::testing::random_graph;

namespace {

Params params_for(const Graph& g, int k) {
    const auto p = derive_params(mad(g), k);
    REQUIRE(p.has_value());
    return *p;
}

long long hamming(const Coloring& a, const Coloring& b) {
    long long h = 0;
    for (int i = 0; i < a.size(); ++i)
        h += a.colors[i] != b.colors[i];
    return h;
}

} // namespace

TEST_CASE("free_color picks the smallest admissible colour") {
    // u = vertex 0 with one neighbour coloured 2
    const Graph edge = graph_of(2, {{0, 1}});
    CHECK(free_color(edge, col({1, 2}, 3), 0, 1) == 3);

    const Graph lonely = graph_of(1, {});
    CHECK(free_color(lonely, col({1}, 2), 0, 1) == 2);

    // u = vertex 0 with neighbours coloured 1 and 3
    const Graph p3 = graph_of(3, {{0, 1}, {0, 2}});
    CHECK(free_color(p3, col({2, 1, 3}, 4), 0, 2) == 4);

    // k=2, neighbour holds 2, extra forbids 1: nothing left
    CHECK_THROWS_AS(free_color(edge, col({1, 2}, 2), 0, 1), InvariantError);
}

TEST_CASE("length_bound traces") {
    const LengthBudget a = length_bound(4, 2, Rational(1, 2));
    CHECK(a.levels == 4);
    CHECK(a.per_vertex_max == 4);
    CHECK(a.total_bound == 16);

    const LengthBudget zero = length_bound(0, 3, Rational(1));
    CHECK(zero.levels == 0);
    CHECK(zero.per_vertex_max == 0);
    CHECK(zero.total_bound == 0);

    const LengthBudget b = length_bound(9, 3, Rational(1));
    CHECK(b.levels == 9);
    CHECK(b.per_vertex_max == 511);
    CHECK(b.total_bound == 4599);

    const LengthBudget p3 = length_bound(3, 2, Rational(1, 2));
    CHECK(p3.levels == 3);
    CHECK(p3.total_bound == 9);

    CHECK_THROWS_AS(length_bound(3, 2, Rational(0)), ArgumentError);
    CHECK_THROWS_AS(length_bound(3, 2, Rational(3)), ArgumentError);
    CHECK_THROWS_AS(length_bound(-1, 2, Rational(1)), ArgumentError);
}

TEST_CASE("length_bound saturates instead of wrapping") {
    // d=4, eps=1/100: decrements of ceil(h/1600) stay 1, so L = n and
    // T = (3^n - 1)/2 overflows any fixed width at n = 300
    const LengthBudget big = length_bound(300, 4, Rational(1, 100));
    CHECK(big.levels == 300);
    CHECK(big.per_vertex_max == kU128Max);
    CHECK(big.total_bound == kU128Max);
}

TEST_CASE("P3 produces the exact hand-traced sequence") {
    const Graph p3 = graph_of(3, {{0, 1}, {1, 2}});
    const Coloring alpha = col({1, 2, 1}, 3);
    const Coloring beta = col({2, 1, 2}, 3);
    const RecolorSequence seq = recolor(p3, alpha, beta, Params{2, Rational(1, 2), 3, 0.0});
    const std::vector<RecolorStep> expected = {{0, 3}, {2, 3}, {1, 1}, {0, 2}, {2, 2}};
    CHECK(seq.steps == expected);
    CHECK(verify_sequence(p3, alpha, beta, seq.steps).ok);
}

TEST_CASE("single vertex and identity cases") {
    const Graph lone = graph_of(1, {});
    const auto seq = recolor(lone, col({1}, 2), col({2}, 2), Params{1, Rational(1), 2, 0.0});
    CHECK(seq.steps == std::vector<RecolorStep>{{0, 2}});

    const Graph grid = make_grid(3, 3);
    const Params p = params_for(grid, 5);
    std::mt19937_64 rng(1);
    const Coloring a = random_proper_coloring(grid, 5, rng);
    CHECK(recolor(grid, a, a, p).steps.empty());
}

TEST_CASE("recolor validates its inputs") {
    const Graph p3 = graph_of(3, {{0, 1}, {1, 2}});
    const Params p{2, Rational(1, 2), 3, 0.0};
    CHECK_THROWS_AS(recolor(p3, col({1, 1, 1}, 3), col({2, 1, 2}, 3), p), ArgumentError);
    CHECK_THROWS_AS(recolor(p3, col({1, 2, 1}, 3), col({1, 1, 1}, 3), p), ArgumentError);
    CHECK_THROWS_AS(recolor(p3, col({1, 2, 1}, 3), col({2, 1, 2}, 3), Params{3, Rational(1), 3, 0.0}),
                    ArgumentError); // k < d+1
    CHECK_THROWS_AS(recolor(make_complete(4), col({1, 2, 3, 4}, 4), col({1, 2, 3, 4}, 4),
                            Params{3, Rational(1), 4, 0.0}),
                    DegeneracyError);
}

TEST_CASE("verify_sequence reports the first violation") {
    const Graph p3 = graph_of(3, {{0, 1}, {1, 2}});
    const Coloring alpha = col({1, 2, 1}, 3);
    const Coloring beta = col({2, 1, 2}, 3);

    const auto mono = verify_sequence(p3, alpha, alpha, {{0, 2}});
    CHECK(!mono.ok);
    CHECK(mono.fault == VerifyFault::monochromatic_edge);
    CHECK(mono.step_index == 0);

    const auto mismatch = verify_sequence(p3, alpha, beta, {});
    CHECK(!mismatch.ok);
    CHECK(mismatch.fault == VerifyFault::end_mismatch);
    CHECK(mismatch.step_index == 0);

    const auto noop = verify_sequence(p3, alpha, alpha, {{0, 1}});
    CHECK(!noop.ok);
    CHECK(noop.fault == VerifyFault::no_op_step);

    const auto range = verify_sequence(p3, alpha, alpha, {{0, 9}});
    CHECK(!range.ok);
    CHECK(range.fault == VerifyFault::color_out_of_range);

    const auto vert = verify_sequence(p3, alpha, alpha, {{7, 1}});
    CHECK(!vert.ok);
    CHECK(vert.fault == VerifyFault::vertex_out_of_range);

    CHECK(verify_sequence(p3, alpha, alpha, {}).ok);
}

TEST_CASE("sequences are sound across families") {
    std::mt19937_64 rng(31337);
    std::vector<std::pair<Graph, int>> cases;
    for (std::uint64_t s = 0; s < 8; ++s) {
        cases.emplace_back(make_forest_union(20 + 3 * static_cast<int>(s), 1, s), 3);
        cases.emplace_back(make_forest_union(18 + 2 * static_cast<int>(s), 2, s ^ 42), 5);
    }
    for (int n : {3, 4, 7, 12, 25})
        cases.emplace_back(make_cycle(n), 4);
    for (int r : {1, 2, 4})
        for (int c : {3, 5})
            cases.emplace_back(make_grid(r, c), 5);

    for (const auto& [g, k] : cases) {
        const Params p = params_for(g, k);
        const Peeling peeling = peel(g, p.d, p.epsilon);
        const Coloring alpha = random_proper_coloring(g, k, rng);
        const Coloring beta = random_proper_coloring(g, k, rng);
        const RecolorSequence seq = recolor(g, alpha, beta, k, peeling);

        const VerifyResult res = verify_sequence(g, alpha, beta, seq.steps);
        INFO(res.message);
        CHECK(res.ok);
        CHECK(seq.end == beta);

        // each differing vertex needs at least one step
        CHECK(static_cast<long long>(seq.length()) >= hamming(alpha, beta));

        if (peeling.all_size_bounds_met()) {
            const LengthBudget budget = length_bound(g.num_vertices(), p.d, p.epsilon);
            CHECK(static_cast<u128>(seq.length()) <= budget.total_bound);
            for (long long c : recolor_counts(g.num_vertices(), seq.steps))
                CHECK(static_cast<u128>(c) <= budget.per_vertex_max);
        }
    }
}

namespace {

// Literal recursion over induced subgraphs, as an independent reference for
// the iterative replay: I = special set of g, H = g - I, recurse, then
// extend. Labels map back through the ascending-order relabelling.
std::vector<RecolorStep> recursive_reference(const Graph& g, const Coloring& alpha,
                                             const Coloring& beta, int k, int d,
                                             const Rational& eps) {
    if (g.num_vertices() == 0)
        return {};
    const SpecialSetCertificate cert = special_independent_set(g, d, eps);
    std::vector<int> keep;
    for (int v = 0; v < g.num_vertices(); ++v)
        if (!cert.ind_set.contains(v))
            keep.push_back(v);
    const auto sub = induced_subgraph(g, VertexSubset(keep));
    std::vector<int> alpha_h, beta_h;
    for (int v : keep) {
        alpha_h.push_back(alpha.colors[v]);
        beta_h.push_back(beta.colors[v]);
    }
    const auto inner = recursive_reference(sub.graph, Coloring(alpha_h, k), Coloring(beta_h, k),
                                           k, d, eps);

    std::vector<int> work = alpha.colors;
    std::vector<RecolorStep> out;
    auto smallest_free = [&](int u, int avoid) {
        for (int c = 1; c <= k; ++c) {
            if (c == avoid)
                continue;
            bool used = false;
            for (int w : g.neighbors(u))
                if (work[w] == c)
                    used = true;
            if (!used)
                return c;
        }
        REQUIRE(false);
        return -1;
    };
    for (const RecolorStep& st : inner) {
        const int v = keep[st.vertex];
        for (int u : g.neighbors(v))
            if (cert.ind_set.contains(u) && work[u] == st.color) {
                const int c = smallest_free(u, st.color);
                out.push_back({u, c});
                work[u] = c;
            }
        out.push_back({v, st.color});
        work[v] = st.color;
    }
    for (int u : cert.ind_set)
        if (work[u] != beta.colors[u]) {
            out.push_back({u, beta.colors[u]});
            work[u] = beta.colors[u];
        }
    return out;
}

} // namespace

TEST_CASE("iterative replay matches the literal recursion step for step") {
    std::mt19937_64 rng(7777);
    std::vector<std::pair<Graph, int>> cases;
    for (std::uint64_t s = 0; s < 6; ++s)
        cases.emplace_back(make_forest_union(14, 1 + static_cast<int>(s % 2), s), 5);
    for (int n : {4, 9, 16})
        cases.emplace_back(make_cycle(n), 4);
    cases.emplace_back(make_grid(3, 4), 5);
    cases.emplace_back(make_star(7), 3);

    for (const auto& [g, k] : cases) {
        const Params p = params_for(g, k);
        for (int round = 0; round < 3; ++round) {
            const Coloring alpha = random_proper_coloring(g, k, rng);
            const Coloring beta = random_proper_coloring(g, k, rng);
            const auto iterative = recolor(g, alpha, beta, p).steps;
            const auto reference = recursive_reference(g, alpha, beta, k, p.d, p.epsilon);
            CHECK(iterative == reference);
        }
    }
}

TEST_CASE("mad hypothesis violation flags instead of failing") {
    // P10 with d=2, eps=2: S is just the two endpoints, far below eps*h/d,
    // but the path is 1-degenerate so peeling and recolouring still work
    const Graph p10 = make_path(10);
    const Peeling peeling = peel(p10, 2, Rational(2));
    CHECK(!peeling.layers.empty());
    CHECK(peeling.layers[0].mad_hypothesis_violated);
    CHECK(!peeling.layers[0].size_bound_met);
    CHECK(!peeling.all_size_bounds_met());

    std::mt19937_64 rng(3);
    const Coloring alpha = random_proper_coloring(p10, 3, rng);
    const Coloring beta = random_proper_coloring(p10, 3, rng);
    const RecolorSequence seq = recolor(p10, alpha, beta, 3, peeling);
    CHECK(verify_sequence(p10, alpha, beta, seq.steps).ok);
}

TEST_CASE("never shorter than the BFS oracle on tiny graphs") {
    std::mt19937_64 rng(4242);
    for (int round = 0; round < 40; ++round) {
        const int n = 2 + static_cast<int>(uniform_below(rng, 5));
        const Graph g = random_graph(n, 1 + static_cast<int>(uniform_below(rng, 7)), 10, rng);
        const Rational m = mad(g);
        const int k = static_cast<int>(m.floor()) + 2;
        const auto p = derive_params(m, k);
        REQUIRE(p.has_value());
        for (int pair = 0; pair < 4; ++pair) {
            const Coloring alpha = random_proper_coloring(g, k, rng);
            const Coloring beta = random_proper_coloring(g, k, rng);
            const RecolorSequence seq = recolor(g, alpha, beta, *p);
            CHECK(verify_sequence(g, alpha, beta, seq.steps).ok);
            const auto dist = bfs_distance(g, k, alpha, beta);
            REQUIRE(dist.has_value()); // same component, by the theorem
            CHECK(*dist <= static_cast<long long>(seq.length()));
        }
    }
}

TEST_CASE("sequence file round trip and parse errors") {
    const std::vector<RecolorStep> steps = {{0, 3}, {2, 3}, {1, 1}};
    std::ostringstream out;
    write_sequence(steps, out);
    CHECK(out.str() == "s 3\n1 3\n3 3\n2 1\n");
    std::istringstream in(out.str());
    CHECK(parse_sequence(in) == steps);

    std::istringstream empty("s 0\n");
    CHECK(parse_sequence(empty).empty());

    auto bad = [](const std::string& text) {
        std::istringstream is(text);
        CHECK_THROWS_AS(parse_sequence(is), ParseError);
    };
    bad("");
    bad("x 1\n");
    bad("s 2\n1 1\n");        // count mismatch
    bad("s 1\n1\n");          // malformed step
    bad("s 1\n0 1\n");        // vertices are 1-based
    bad("s 1\n1 2 3\n");      // trailing token
}
