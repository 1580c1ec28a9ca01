#include <doctest.h>

#include <algorithm>

#include "test_support.hpp"

using namespace pafp;
using testsup::fig1;

namespace {

// Output ids of the rewritten example: core keeps 1..6, fresh start 7,
// spine 8..18, detours 19..24.
NormalizedInstance norm_fig1() { return normalize(fig1()); }

}  // namespace

TEST_CASE("rewrite anatomy of the example instance") {
    NormalizedInstance norm = norm_fig1();

    CHECK(norm.q == 6);
    CHECK(norm.original == fig1());
    CHECK(norm.reverse_listing == std::vector<Vertex>{6, 5, 4, 3, 2, 1});
    CHECK(norm.reverse_listing.back() == fig1().source);

    CHECK(norm.instance.graph.vertex_count() == 24);  // 6 core + start + 11 spine + 6 detours
    CHECK(norm.instance.source == 7);
    CHECK(norm.instance.target == 6);
    CHECK(norm.spine == std::vector<Vertex>{8, 9, 10, 11, 12, 13, 14, 15, 16, 17, 18});
    CHECK(norm.detours == std::vector<Vertex>{19, 20, 21, 22, 23, 24});

    // identity renumbering on the fully reachable core
    for (Vertex v = 1; v <= 6; ++v) {
        CHECK(norm.core_new_id[v] == v);
        CHECK(norm.original_id[v] == v);
    }
    CHECK(norm.original_id[7] == 0);  // gadget vertices map to nothing

    CHECK(norm.instance.graph.arc_count() == 31);
    CHECK(norm.core_arcs.size() == 8);  // seven kept arcs + the oriented pair
    CHECK(std::find(norm.core_arcs.begin(), norm.core_arcs.end(), Arc{3, 6}) !=
          norm.core_arcs.end());
    for (auto [u, v] : norm.core_arcs) CHECK(norm.instance.graph.has_arc(u, v));

    // detour wiring: w_i leaves the spine at p_(2i-1) and enters r_i
    for (int i = 1; i <= 6; ++i) {
        Vertex w = norm.detours[i - 1];
        CHECK(norm.instance.graph.has_arc(norm.spine[2 * i - 2], w));
        CHECK(norm.instance.graph.has_arc(w, norm.reverse_listing[i - 1]));
    }

    // guard pairs on every detour except the one into the original source
    CHECK(norm.instance.pairs ==
          std::vector<VertexPair>{{3, 6}, {8, 19}, {10, 20}, {12, 21}, {14, 22}, {16, 23}});
}

TEST_CASE("rewrite levels of the example instance") {
    NormalizedInstance norm = norm_fig1();
    CHECK(norm.level[7] == 0);
    for (int j = 1; j <= 11; ++j) CHECK(norm.level[norm.spine[j - 1]] == j);
    for (int i = 1; i <= 6; ++i) {
        CHECK(norm.level[norm.detours[i - 1]] == 2 * i);
        CHECK(norm.level[norm.reverse_listing[i - 1]] == 2 * i + 1);
    }

    LevelCheck check = check_level_function(norm);
    CHECK(check.ok);
    CHECK(check.first_mismatch == 0);
}

TEST_CASE("rewrite output is a valid width-2 instance") {
    NormalizedInstance norm = norm_fig1();
    CHECK(is_dag(norm.instance.graph));
    CHECK(parse_instance(serialize_instance(norm.instance)) == norm.instance);

    // pair arcs are already embedded, so forming the union changes nothing
    CHECK(union_digraph(norm.instance) == norm.instance.graph);

    LayerProfile prof = layer_profile(norm.instance.graph, norm.instance.source);
    CHECK(prof.width == 2);
}

TEST_CASE("backward arcs of the rewrite are exactly the embedded core") {
    NormalizedInstance norm = norm_fig1();
    std::vector<Arc> backward = backward_arcs_of_normal_form(norm);
    CHECK(backward.size() == 8);
    CHECK(backward == norm.core_arcs);
}

TEST_CASE("two-vertex path rewrite") {
    PafpInstance inst = make_instance(2, {{1, 2}}, 1, 2, {});
    NormalizedInstance norm = normalize(inst);
    CHECK(norm.q == 2);
    CHECK(norm.reverse_listing == std::vector<Vertex>{2, 1});
    CHECK(norm.instance.graph.vertex_count() == 8);  // 2 + start + 3 spine + 2 detours
    CHECK(norm.instance.source == 3);
    CHECK(norm.spine == std::vector<Vertex>{4, 5, 6});
    CHECK(norm.detours == std::vector<Vertex>{7, 8});
    CHECK(norm.instance.pairs == std::vector<VertexPair>{{4, 7}});  // one guard pair

    std::vector<Arc> backward = backward_arcs_of_normal_form(norm);
    CHECK(backward == std::vector<Arc>{{1, 2}});  // size 1 = q - 1

    PathCertificate lifted = lift_path(norm, PathCertificate{{1, 2}});
    CHECK(lifted.vertices == std::vector<Vertex>{3, 4, 5, 6, 8, 1, 2});
    CHECK(check_path(norm.instance, lifted.vertices).verdict == Verdict::SafePath);
}

TEST_CASE("degenerate rewrite with only the source reachable") {
    PafpInstance inst = make_instance(2, {}, 1, 2, {});
    NormalizedInstance norm = normalize(inst);
    CHECK(norm.q == 1);
    CHECK(norm.reverse_listing == std::vector<Vertex>{1});
    CHECK(norm.instance.graph.vertex_count() == 5);  // core 1, target 2, start 3, p_1 4, w_1 5
    CHECK(norm.spine == std::vector<Vertex>{4});
    CHECK(norm.detours == std::vector<Vertex>{5});
    CHECK(norm.instance.pairs.empty());  // no guard pair for the source detour
    CHECK(norm.core_arcs.empty());
    CHECK(backward_arcs_of_normal_form(norm).empty());

    CHECK_FALSE(norm.level[2].has_value());  // target stays unreachable
    LevelCheck check = check_level_function(norm);
    CHECK(check.ok);

    CHECK(solve_exact(norm.instance).status == OracleStatus::No);
}

TEST_CASE("unreachable target keeps its own output id") {
    PafpInstance inst = make_instance(3, {{1, 2}}, 1, 3, {});
    NormalizedInstance norm = normalize(inst);
    CHECK(norm.q == 2);
    CHECK(norm.instance.graph.vertex_count() == 9);  // 2 core + target + start + 3 spine + 2 detours
    CHECK(norm.instance.target == 3);
    CHECK(norm.core_new_id[3] == 3);
    CHECK_FALSE(norm.level[3].has_value());
    CHECK(check_level_function(norm).ok);
    CHECK(solve_exact(norm.instance).status == OracleStatus::No);
}

TEST_CASE("level check flags a corrupted rewrite") {
    NormalizedInstance norm = norm_fig1();
    // rebuild the instance without the first spine chain arc
    std::vector<Arc> arcs;
    for (auto a : norm.instance.graph.arcs())
        if (a != Arc{8, 9}) arcs.push_back(a);
    norm.instance = make_instance(24, arcs, 7, 6, norm.instance.pairs);
    LevelCheck check = check_level_function(norm);
    CHECK_FALSE(check.ok);
    CHECK(check.first_mismatch != 0);
    CHECK(check.expected != check.actual);
}

TEST_CASE("lifting the safe example path") {
    NormalizedInstance norm = norm_fig1();
    PathCertificate lifted = lift_path(norm, PathCertificate{{1, 2, 5, 6}});
    CHECK(lifted.vertices.size() == 17);
    CHECK(lifted.vertices ==
          std::vector<Vertex>{7, 8, 9, 10, 11, 12, 13, 14, 15, 16, 17, 18, 24, 1, 2, 5, 6});
    CHECK(check_path(norm.instance, lifted.vertices).verdict == Verdict::SafePath);

    CHECK(project_path(norm, lifted).vertices == std::vector<Vertex>{1, 2, 5, 6});
}

TEST_CASE("lifting rejects unsafe input") {
    NormalizedInstance norm = norm_fig1();
    CHECK_THROWS_AS(lift_path(norm, PathCertificate{{1, 3, 5, 6}}), precondition_error);
    CHECK_THROWS_AS(lift_path(norm, PathCertificate{{1, 5, 6}}), precondition_error);
}

TEST_CASE("projection rejects unsafe input") {
    NormalizedInstance norm = norm_fig1();
    // the short-cut detour into the target trips its guard pair
    CHECK(check_path(norm.instance, {7, 8, 19, 6}).verdict == Verdict::Unsafe);
    CHECK_THROWS_AS(project_path(norm, PathCertificate{{7, 8, 19, 6}}), precondition_error);
}

TEST_CASE("every safe rewritten path projects onto a safe core path") {
    NormalizedInstance norm = norm_fig1();
    auto all = testsup::enumerate_simple_paths(norm.instance.graph, 7, 6);
    int safe_seen = 0;
    for (const auto& p : all) {
        if (check_path(norm.instance, p).verdict != Verdict::SafePath) continue;
        ++safe_seen;
        // the guarded instance forbids vertex 3 (it pairs with the target)
        CHECK(std::find(p.begin(), p.end(), 3) == p.end());
        PathCertificate core = project_path(norm, PathCertificate{p});
        CHECK(check_path(norm.original, core.vertices).verdict == Verdict::SafePath);
        CHECK(lift_path(norm, core).vertices == p);
    }
    CHECK(safe_seen == 2);  // routes through 2 and through 4
}

TEST_CASE("rewrite requires a DAG") {
    PafpInstance inst = make_instance(3, {{1, 2}, {2, 1}, {2, 3}}, 1, 3, {});
    CHECK_THROWS_AS(normalize(inst), precondition_error);
}

TEST_CASE("rewrite properties on random DAG instances") {
    Rng rng(60013);
    for (int iter = 0; iter < 250; ++iter) {
        PafpInstance inst = testsup::random_dag_instance(rng, 9, 0.3, 4);
        NormalizedInstance norm = normalize(inst);

        // size formula: core + unreachable target + start + spine + detours
        int expect_n = norm.q + (norm.level[norm.instance.target].has_value() ? 0 : 1) +
                       1 + (2 * norm.q - 1) + norm.q;
        CHECK(norm.instance.graph.vertex_count() == expect_n);

        CHECK(is_dag(norm.instance.graph));
        CHECK(union_digraph(norm.instance) == norm.instance.graph);
        LayerProfile prof = layer_profile(norm.instance.graph, norm.instance.source);
        CHECK(prof.width <= 2);
        CHECK(check_level_function(norm).ok);

        std::vector<Arc> backward = backward_arcs_of_normal_form(norm);
        CHECK(backward.size() >= static_cast<std::size_t>(norm.q - 1));

        // the rewrite preserves the answer
        bool before = solve_exact(inst).status == OracleStatus::Yes;
        bool after = solve_exact(norm.instance).status == OracleStatus::Yes;
        CHECK(before == after);
    }
}
