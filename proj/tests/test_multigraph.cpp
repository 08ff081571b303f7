#include "nplus/corpus.hpp"
#include "nplus/families.hpp"
#include "nplus/io.hpp"
#include "nplus/isomorphism.hpp"
#include "nplus/multigraph.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace nplus;

namespace {

Multigraph cycle(int n) {
    Multigraph g(n);
    for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
    return g;
}

Multigraph path(int n) {
    Multigraph g(n);
    for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
    return g;
}

Multigraph relabel(const Multigraph& g, const std::vector<int>& p) {
    Multigraph h(g.node_count());
    for (const Edge& e : g.edges()) h.add_edge(p[static_cast<std::size_t>(e.u)], p[static_cast<std::size_t>(e.v)]);
    return h;
}

} // namespace

TEST(Multigraph, RejectsLoopsAndUnknownNodes) {
    Multigraph g(3);
    EXPECT_THROW(g.add_edge(1, 1), InputError);
    EXPECT_THROW(g.add_edge(0, 3), InputError);
    EXPECT_THROW(g.add_edge_with_id(0, 0, 1); g.add_edge_with_id(0, 1, 2), InputError);
}

TEST(Multigraph, ParallelEdgesCountTowardsDegreeNotNeighbours) {
    Multigraph g = Multigraph::from_pairs(3, {{0, 1}, {0, 1}, {1, 2}});
    EXPECT_EQ(g.multiplicity(0, 1), 2);
    EXPECT_EQ(g.degree(1), 3);
    EXPECT_EQ(g.neighbors(1), (std::vector<NodeId>{0, 2}));
    EXPECT_FALSE(g.is_simple());
    EXPECT_EQ(g.parallel_edge_count(), 1);
}

TEST(InducedSubgraph, PathOfCycle) {
    const Multigraph sub = induced_subgraph(cycle(5), {0, 1, 2});
    EXPECT_EQ(sub.node_count(), 3);
    EXPECT_EQ(sub.edge_count(), 2);
    EXPECT_EQ(sub.labels(), (std::vector<NodeId>{0, 1, 2}));
}

TEST(InducedSubgraph, AllNodesIsIdentity) {
    const Multigraph g = odd_hole_plus(HolePlus::Chord, 2, 2);
    EXPECT_EQ(induced_subgraph(g, all_nodes_mask(g.node_count())), g);
}

TEST(InducedSubgraph, KeepsParallelCopiesAndIds) {
    const Multigraph g = odd_hole_plus(HolePlus::Double, 2);
    const Multigraph sub = induced_subgraph(g, {0, 1});
    EXPECT_EQ(sub.edge_count(), 2);
    EXPECT_EQ(sub.multiplicity(0, 1), 2);
    EXPECT_TRUE(sub.has_edge(0));
    EXPECT_TRUE(sub.has_edge(5));
}

TEST(InducedSubgraph, UnknownNodeIsInputError) {
    EXPECT_THROW(induced_subgraph(cycle(5), {0, 7}), InputError);
}

TEST(InducedSubgraph, LabelsComposeThroughNesting) {
    const Multigraph g = cycle(7);
    const Multigraph a = induced_subgraph(g, {2, 3, 4, 5});
    const Multigraph b = induced_subgraph(a, {1, 2});
    EXPECT_EQ(b.labels(), (std::vector<NodeId>{3, 4}));
}

TEST(InducedSubgraph, PropertyEdgeSetMatchesDefinition) {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<int> size(1, 8);
    for (int t = 0; t < 200; ++t) {
        const Multigraph g = random_multigraph(size(rng), 0.5, 2, rng);
        const NodeMask s = rng() & all_nodes_mask(g.node_count());
        const Multigraph sub = induced_subgraph(g, s);
        ASSERT_EQ(sub.node_count(), std::popcount(s));
        std::vector<EdgeId> expect, got;
        for (const Edge& e : g.edges())
            if (((s >> e.u) & 1U) && ((s >> e.v) & 1U)) expect.push_back(e.id);
        for (const Edge& e : sub.edges()) {
            got.push_back(e.id);
            EXPECT_TRUE(g.edge(e.id).joins(sub.label(e.u), sub.label(e.v)));
        }
        std::sort(got.begin(), got.end());
        EXPECT_EQ(got, expect);
    }
}

TEST(Connectivity, Basics) {
    EXPECT_TRUE(is_connected(cycle(9)));
    EXPECT_FALSE(is_connected(Multigraph::from_pairs(6, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}})));
    EXPECT_TRUE(is_connected(Multigraph(1)));
    EXPECT_TRUE(is_connected(Multigraph(0)));
}

TEST(Connectivity, TwoConnected) {
    EXPECT_TRUE(is_two_connected(cycle(5)));
    EXPECT_FALSE(is_two_connected(path(3)));
    EXPECT_FALSE(is_two_connected(Multigraph::from_pairs(4, {{0, 1}, {1, 2}, {2, 0}, {2, 3}})));
    EXPECT_EQ(find_cut_node(Multigraph::from_pairs(4, {{0, 1}, {1, 2}, {2, 0}, {2, 3}})), 2);
    EXPECT_TRUE(is_two_connected(Multigraph::from_pairs(2, {{0, 1}})));
    EXPECT_TRUE(is_two_connected(Multigraph::from_pairs(2, {{0, 1}, {0, 1}})));
    EXPECT_FALSE(is_two_connected(Multigraph(1)));
    EXPECT_FALSE(is_two_connected(Multigraph(2)));
}

TEST(Connectivity, TwoConnectedImpliesConnected) {
    std::mt19937_64 rng(11);
    for (int t = 0; t < 300; ++t) {
        const Multigraph g = random_multigraph(2 + static_cast<int>(rng() % 7), 0.45, 2, rng);
        if (is_two_connected(g)) {
            EXPECT_TRUE(is_connected(g));
        }
    }
}

TEST(Bipartite, Basics) {
    EXPECT_TRUE(is_bipartite(cycle(6)));
    EXPECT_FALSE(is_bipartite(cycle(5)));
    EXPECT_TRUE(is_bipartite(Multigraph::from_pairs(2, {{0, 1}, {0, 1}})));
}

TEST(Bipartite, AgreesWithOddCycleSearchAndColouring) {
    std::mt19937_64 rng(3);
    for (int t = 0; t < 400; ++t) {
        const Multigraph g = random_multigraph(1 + static_cast<int>(rng() % 8), 0.3, 2, rng);
        const bool b = is_bipartite(g);
        EXPECT_EQ(b, !oracle::has_odd_cycle(g));
        EXPECT_EQ(b, oracle::bipartite(g));
    }
}

TEST(Predicates, HolesCliquesStableSets) {
    EXPECT_TRUE(is_odd_hole(cycle(7)));
    EXPECT_FALSE(is_odd_hole(cycle(3)));
    EXPECT_FALSE(is_odd_hole(cycle(6)));
    EXPECT_FALSE(is_odd_hole(odd_hole_plus(HolePlus::Double, 2)));
    const Multigraph k4 = complement(Multigraph(4));
    const NodeId all[] = {0, 1, 2, 3};
    EXPECT_TRUE(is_clique(k4, all));
    const NodeId pair[] = {0, 2};
    EXPECT_TRUE(is_stable(cycle(5), pair));
    EXPECT_FALSE(is_clique(cycle(5), pair));
}

TEST(Isomorphism, C5IsSelfComplementaryAgainstBruteForce) {
    const Multigraph c5 = cycle(5);
    EXPECT_TRUE(are_isomorphic(c5, complement(c5)));
    EXPECT_TRUE(oracle::isomorphic(c5, complement(c5)));
}

TEST(Isomorphism, TriangleIsNotPath) { EXPECT_FALSE(are_isomorphic(cycle(3), path(3))); }

TEST(Isomorphism, MultiplicitiesMatter) {
    const Multigraph a = Multigraph::from_pairs(3, {{0, 1}, {0, 1}, {1, 2}, {1, 2}});
    const Multigraph b = Multigraph::from_pairs(3, {{0, 1}, {0, 1}, {0, 1}, {1, 2}});
    EXPECT_FALSE(are_isomorphic(a, b));
    EXPECT_EQ(oracle::isomorphic(a, b), false);
}

TEST(Isomorphism, RandomRelabellingAndMapIsValid) {
    std::mt19937_64 rng(5);
    for (int t = 0; t < 200; ++t) {
        const Multigraph g = random_multigraph(1 + static_cast<int>(rng() % 9), 0.5, 2, rng);
        std::vector<int> p(static_cast<std::size_t>(g.node_count()));
        std::iota(p.begin(), p.end(), 0);
        std::shuffle(p.begin(), p.end(), rng);
        const Multigraph h = relabel(g, p);
        auto iso = find_isomorphism(g, h);
        ASSERT_TRUE(iso);
        for (NodeId u = 0; u < g.node_count(); ++u)
            for (NodeId v = 0; v < g.node_count(); ++v)
                EXPECT_EQ(g.multiplicity(u, v), h.multiplicity((*iso)[static_cast<std::size_t>(u)], (*iso)[static_cast<std::size_t>(v)]));
        EXPECT_EQ(canonical_form(g), canonical_form(h));
    }
}

TEST(Isomorphism, AgreesWithBruteForceOnRandomPairs) {
    std::mt19937_64 rng(9);
    for (int t = 0; t < 300; ++t) {
        const int n = 1 + static_cast<int>(rng() % 7);
        const Multigraph a = random_multigraph(n, 0.4, 2, rng);
        const Multigraph b = random_multigraph(n, 0.4, 2, rng);
        EXPECT_EQ(are_isomorphic(a, b), oracle::isomorphic(a, b));
        EXPECT_EQ(canonical_form(a) == canonical_form(b), oracle::isomorphic(a, b));
    }
}

TEST(Isomorphism, RegularGraphsWithSameDegrees) {
    // C6 and two triangles are both 2-regular on 6 nodes.
    const Multigraph two_triangles = Multigraph::from_pairs(6, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}});
    EXPECT_FALSE(are_isomorphic(cycle(6), two_triangles));
    // Petersen graph against a relabelled copy.
    Multigraph p(10);
    for (int i = 0; i < 5; ++i) {
        p.add_edge(i, (i + 1) % 5);
        p.add_edge(i, i + 5);
        p.add_edge(5 + i, 5 + (i + 2) % 5);
    }
    std::vector<int> perm{3, 7, 1, 9, 0, 5, 8, 2, 6, 4};
    EXPECT_TRUE(are_isomorphic(p, relabel(p, perm)));
}

TEST(Isomorphism, EquivalenceOnCorpus) {
    std::mt19937_64 rng(13);
    std::vector<Multigraph> corpus;
    for (int t = 0; t < 30; ++t) corpus.push_back(random_multigraph(5, 0.5, 2, rng));
    for (const auto& a : corpus)
        for (const auto& b : corpus)
            for (const auto& c : corpus)
                if (are_isomorphic(a, b) && are_isomorphic(b, c)) {
                    EXPECT_TRUE(are_isomorphic(a, c));
                }
    for (const auto& a : corpus)
        for (const auto& b : corpus) EXPECT_EQ(are_isomorphic(a, b), are_isomorphic(b, a));
}

TEST(Isomorphism, LimitIsResourceError) {
    EXPECT_THROW(are_isomorphic(cycle(10), cycle(10), 8), ResourceError);
}

TEST(EdgeList, RoundTripWithParallelEdgesAndComments) {
    const std::string text = "# C5 plus a double edge\n5 6\n0 1\n1 2\n2 3\n3 4\n4 0\n\n# copy\n0 1\n";
    const Multigraph g = parse_edge_list(text);
    EXPECT_EQ(g.multiplicity(0, 1), 2);
    EXPECT_EQ(parse_edge_list(format_edge_list(g)), g);
    EXPECT_EQ(format_edge_list(g), "5 6\n0 1\n1 2\n2 3\n3 4\n4 0\n0 1\n");
}

TEST(EdgeList, Errors) {
    EXPECT_THROW(parse_edge_list(""), InputError);
    EXPECT_THROW(parse_edge_list("3 1\n0 0\n"), InputError);
    EXPECT_THROW(parse_edge_list("3 1\n0 5\n"), InputError);
    EXPECT_THROW(parse_edge_list("3 2\n0 1\n"), InputError);
    EXPECT_THROW(parse_edge_list("3 1\n0 1\n1 2\n"), InputError);
    EXPECT_THROW(parse_edge_list("x y\n"), InputError);
}
