#include <doctest.h>

#include <algorithm>

#include "test_support.hpp"

using namespace pafp;
using testsup::fig1;

TEST_CASE("layer profile of the example core") {
    PafpInstance f = fig1();
    LayerProfile prof = layer_profile(f.graph, 1);
    CHECK(prof.root == 1);
    CHECK(prof.layers == std::vector<std::vector<Vertex>>{{1}, {2, 3, 4}, {5}, {6}});
    CHECK(prof.width == 3);
    CHECK(prof.backward.empty());
    CHECK(prof.dist[1] == 0);
    CHECK(prof.dist[3] == 1);
    CHECK(prof.dist[5] == 2);
    CHECK(prof.dist[6] == 3);
    CHECK(prof.reachable_count() == 6);
}

TEST_CASE("layer profile of a single vertex") {
    Digraph g(1);
    LayerProfile prof = layer_profile(g, 1);
    CHECK(prof.layers == std::vector<std::vector<Vertex>>{{1}});
    CHECK(prof.width == 1);
    CHECK(prof.backward.empty());
}

TEST_CASE("layer profile with unreachable vertices") {
    Digraph g(4);
    g.add_arc(1, 2);
    g.add_arc(3, 4);  // 3, 4 unreachable from 1
    LayerProfile prof = layer_profile(g, 1);
    CHECK(prof.layers == std::vector<std::vector<Vertex>>{{1}, {2}});
    CHECK_FALSE(prof.reachable(3));
    CHECK(prof.reachable_count() == 2);
    // arc between unreachable vertices is not backward
    CHECK(prof.backward.empty());
}

TEST_CASE("backward arcs need both endpoints reachable and a strict drop") {
    Digraph g(5);
    g.add_arc(1, 2);
    g.add_arc(2, 3);
    g.add_arc(3, 4);
    g.add_arc(4, 2);  // dist 2 = 1 < dist 4 = 3
    g.add_arc(4, 5);  // forward
    LayerProfile prof = layer_profile(g, 1);
    CHECK(prof.backward == std::vector<Arc>{{4, 2}});
    CHECK(backward_count(g, 1) == 1);
}

TEST_CASE("distances match independent relaxation on random digraphs") {
    Rng rng(31007);
    for (int iter = 0; iter < 200; ++iter) {
        PafpInstance inst = testsup::random_digraph_instance(rng, 10, 0.25, 0);
        const Digraph& g = inst.graph;
        Vertex root = inst.source;
        LayerProfile prof = layer_profile(g, root);
        auto want = testsup::brute_dist(g, root);
        for (Vertex v = 1; v <= g.vertex_count(); ++v) CHECK(prof.dist[v] == want[v]);

        // layers partition the reachable set and index by distance
        int seen = 0;
        for (std::size_t d = 0; d < prof.layers.size(); ++d)
            for (Vertex v : prof.layers[d]) {
                ++seen;
                CHECK(prof.dist[v] == static_cast<int>(d));
            }
        CHECK(seen == prof.reachable_count());

        // monotone layer property and the backward set definition
        for (auto [u, v] : g.arcs()) {
            if (!prof.dist[u]) continue;
            CHECK(*prof.dist[v] <= *prof.dist[u] + 1);
            bool is_backward = prof.dist[v] && *prof.dist[v] < *prof.dist[u];
            bool listed = std::find(prof.backward.begin(), prof.backward.end(),
                                    Arc{u, v}) != prof.backward.end();
            CHECK(is_backward == listed);
        }
    }
}

TEST_CASE("exact-length layers of the example core") {
    ExactLengthProfile prof = exact_length_profile(fig1().graph, 1);
    CHECK(prof.layers[0] == std::vector<Vertex>{1});
    CHECK(prof.layers[1] == std::vector<Vertex>{2, 3, 4});
    CHECK(prof.layers[2] == std::vector<Vertex>{5});
    CHECK(prof.layers[3] == std::vector<Vertex>{6});
    CHECK(prof.width == 3);
}

TEST_CASE("exact-length layers of a full ladder stay at two") {
    PafpInstance lad = gen_ladder(4, std::nullopt, 0);
    ExactLengthProfile prof = exact_length_profile(lad.graph, lad.source);
    CHECK(prof.width == 2);
    for (int d = 1; d <= 3; ++d) CHECK(prof.layers[d].size() == 2);
    CHECK(prof.layers[4] == std::vector<Vertex>{8});
}

TEST_CASE("exact-length layers of a path are singletons") {
    Digraph g(3);
    g.add_arc(1, 2);
    g.add_arc(2, 3);
    ExactLengthProfile prof = exact_length_profile(g, 1);
    CHECK(prof.width == 1);
    CHECK(prof.layers[2] == std::vector<Vertex>{3});
}

TEST_CASE("exact-length profile requires a DAG") {
    Digraph g(2);
    g.add_arc(1, 2);
    g.add_arc(2, 1);
    CHECK_THROWS_AS(exact_length_profile(g, 1), precondition_error);
}

TEST_CASE("breadth-first layers refine exact-length layers on DAGs") {
    Rng rng(31013);
    for (int iter = 0; iter < 150; ++iter) {
        PafpInstance inst = testsup::random_dag_instance(rng, 10, 0.3, 0);
        LayerProfile bfs = layer_profile(inst.graph, inst.source);
        ExactLengthProfile ex = exact_length_profile(inst.graph, inst.source);
        CHECK(bfs.width <= ex.width);
        for (std::size_t d = 0; d < bfs.layers.size(); ++d)
            for (Vertex v : bfs.layers[d])
                CHECK(std::find(ex.layers[d].begin(), ex.layers[d].end(), v) !=
                      ex.layers[d].end());
    }
}

TEST_CASE("reachability order of the example core") {
    TotalOrder order = reachability_order(fig1().graph);
    CHECK(order.by_rank == std::vector<Vertex>{1, 2, 3, 4, 5, 6});
    CHECK(order.rank_of[1] == 0);
    CHECK(order.rank_of[6] == 5);
    CHECK(order.less(1, 6));
}

TEST_CASE("reachability order breaks cycle ties by index") {
    Digraph g(3);
    g.add_arc(1, 2);
    g.add_arc(2, 1);  // strongly connected {1,2}
    g.add_arc(2, 3);
    TotalOrder order = reachability_order(g);
    CHECK(order.by_rank == std::vector<Vertex>{1, 2, 3});
}

TEST_CASE("reachability order of an edgeless graph is index order") {
    TotalOrder order = reachability_order(Digraph(4));
    CHECK(order.by_rank == std::vector<Vertex>{1, 2, 3, 4});
}

TEST_CASE("reachability order is reachability-compatible on random digraphs") {
    Rng rng(31019);
    for (int iter = 0; iter < 150; ++iter) {
        PafpInstance inst = testsup::random_digraph_instance(rng, 9, 0.3, 0);
        const Digraph& g = inst.graph;
        TotalOrder order = reachability_order(g);
        auto reach = testsup::reach_matrix(g);
        CHECK(order.size() == g.vertex_count());
        for (Vertex u = 1; u <= g.vertex_count(); ++u)
            for (Vertex v = 1; v <= g.vertex_count(); ++v)
                if (reach[u][v] && !reach[v][u]) CHECK(order.less(u, v));
    }
}

TEST_CASE("reachability order is topological on DAGs") {
    Rng rng(31021);
    for (int iter = 0; iter < 100; ++iter) {
        PafpInstance inst = testsup::random_dag_instance(rng, 10, 0.3, 0);
        TotalOrder order = reachability_order(inst.graph);
        for (auto [u, v] : inst.graph.arcs()) CHECK(order.less(u, v));
    }
}

TEST_CASE("induced reachability order respects the subset") {
    Digraph g(5);
    g.add_arc(1, 3);
    g.add_arc(3, 5);
    g.add_arc(2, 4);
    std::vector<char> in_set(6, 0);
    in_set[1] = in_set[3] = in_set[5] = 1;
    TotalOrder order = reachability_order_induced(g, in_set);
    CHECK(order.by_rank == std::vector<Vertex>{1, 3, 5});
    CHECK(order.rank_of[2] == -1);
    CHECK_FALSE(order.contains(4));
}

TEST_CASE("union digraph orients the pair along the order") {
    PafpInstance f = fig1();
    Digraph u = union_digraph(f);
    CHECK(u.arc_count() == 8);
    CHECK(u.has_arc(3, 6));  // 3 reaches 6, not conversely
    CHECK_FALSE(u.has_arc(6, 3));

    LayerProfile prof = layer_profile(u, 1);
    CHECK(prof.layers == std::vector<std::vector<Vertex>>{{1}, {2, 3, 4}, {5, 6}});
    CHECK(prof.width == 3);
    CHECK(prof.backward.empty());
}

TEST_CASE("union digraph with no pairs is the graph itself") {
    PafpInstance inst = make_instance(3, {{1, 2}, {2, 3}}, 1, 3, {});
    CHECK(union_digraph(inst) == inst.graph);
}

TEST_CASE("union digraph does not duplicate existing arcs") {
    PafpInstance inst = make_instance(3, {{1, 2}, {2, 3}}, 1, 3, {{1, 2}});
    CHECK(union_digraph(inst).arc_count() == 2);
}

TEST_CASE("an added dropping arc leaves every distance unchanged") {
    Rng rng(31027);
    int tested = 0;
    for (int iter = 0; iter < 300 && tested < 60; ++iter) {
        PafpInstance inst = testsup::random_digraph_instance(rng, 10, 0.25, 0);
        const Digraph& g = inst.graph;
        LayerProfile before = layer_profile(g, inst.source);
        // find any candidate (u, v) with dist(v) < dist(u), not already an arc
        for (Vertex u = 1; u <= g.vertex_count() && tested < 60; ++u)
            for (Vertex v = 1; v <= g.vertex_count(); ++v) {
                if (u == v || g.has_arc(u, v)) continue;
                if (!before.dist[u] || !before.dist[v]) continue;
                if (*before.dist[v] >= *before.dist[u]) continue;
                Digraph h = g;
                h.add_arc(u, v);
                LayerProfile after = layer_profile(h, inst.source);
                for (Vertex w = 1; w <= g.vertex_count(); ++w)
                    CHECK(before.dist[w] == after.dist[w]);
                ++tested;
                break;
            }
    }
    CHECK(tested >= 60);
}
