#include "nplus/corpus.hpp"
#include "nplus/families.hpp"
#include "nplus/polytope.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace nplus;

namespace {

Multigraph complete(int n) { return complement(Multigraph(n)); }

std::vector<unsigned long> stable_masks(const Multigraph& g) {
    std::vector<unsigned long> out;
    for (NodeMask s : oracle::stable_sets(g)) out.push_back(static_cast<unsigned long>(s));
    std::sort(out.begin(), out.end());
    return out;
}

// The facet list describes STAB(g) exactly: solving every n-subset of the inequalities as
// equalities gives only the incidence vectors of stable sets, and all of them.
void expect_complete(const Multigraph& g) {
    const auto facets = stab_facets(g);
    const auto vertices = oracle::integral_vertices(facets, g.node_count());
    ASSERT_TRUE(vertices.has_value()) << "fractional vertex";
    EXPECT_EQ(*vertices, stable_masks(g));
    const auto sets = enumerate_stable_sets(g);
    for (const Inequality& f : facets) EXPECT_TRUE(is_facet(f, sets, g.node_count())) << f.str();
}

int count_kind(const Multigraph& g, FacetKind kind, const RootMap* root = nullptr) {
    StabOracle o(g);
    int c = 0;
    for (const Inequality& f : o.facets()) c += o.classify(f, root).kind == kind;
    return c;
}

Inequality weighted(std::vector<long long> a, long long b) {
    std::vector<Integer> coeffs(a.begin(), a.end());
    return Inequality(std::move(coeffs), b);
}

} // namespace

TEST(Inequality, NormalizesByGcdKeepingOrientation) {
    const Inequality f = weighted({2, 4, 0}, 6);
    EXPECT_EQ(f.a, (std::vector<Integer>{1, 2, 0}));
    EXPECT_EQ(f.b, 3);
    const Inequality nn = weighted({0, -3}, 0);
    EXPECT_EQ(nn, Inequality::nonnegative(2, 1));
    EXPECT_EQ(nn.str(), "-x1 <= 0");
    EXPECT_EQ(f.str(), "x0 + 2 x1 <= 3");
    EXPECT_EQ(f.slack(0b011), 0);
}

TEST(StableSets, Counts) {
    EXPECT_EQ(enumerate_stable_sets(complete(3)).size(), 4U);
    EXPECT_EQ(enumerate_stable_sets(Multigraph(2)).size(), 4U);
    EXPECT_EQ(enumerate_stable_sets(odd_hole(2)).size(), 11U);
    std::mt19937_64 rng(3);
    for (int t = 0; t < 50; ++t) {
        const Multigraph g = random_simple_graph(1 + static_cast<int>(rng() % 9), 0.4, rng);
        EXPECT_EQ(enumerate_stable_sets(g).size(), oracle::stable_sets(g).size());
        EXPECT_EQ(alpha(g), oracle::alpha(g));
    }
}

TEST(StableSets, Alpha) {
    EXPECT_EQ(alpha(odd_hole(4)), 4);
    EXPECT_EQ(alpha(complete(5)), 1);
    EXPECT_EQ(alpha(gemn()), 2);
    EXPECT_EQ(alpha(glt()), 2);
}

TEST(Facets, CompleteAgainstVertexEnumeration) {
    expect_complete(odd_hole(2));
    expect_complete(complete(3));
    expect_complete(odd_wheel(2));
    expect_complete(gemn());
    expect_complete(line_graph(complete(4)).graph);
    expect_complete(claw());
    expect_complete(Multigraph(3));
}

TEST(Facets, RandomGraphsAgainstVertexEnumeration) {
    std::mt19937_64 rng(5);
    for (int t = 0; t < 25; ++t) expect_complete(random_simple_graph(3 + static_cast<int>(rng() % 4), 0.5, rng));
}

TEST(Facets, PerfectGraphHasOnlyCliquesAndNonnegativity) {
    const Multigraph g = line_graph(complete(4)).graph;
    StabOracle o(g);
    for (const Inequality& f : o.facets()) {
        const FacetKind k = o.classify(f).kind;
        EXPECT_TRUE(k == FacetKind::Nonnegativity || k == FacetKind::Clique) << f.str();
    }
}

TEST(Classify, OddHoleRank) {
    const Multigraph c7 = odd_hole(3);
    StabOracle o(c7);
    const FacetClass fc = o.classify(Inequality::rank(7, nodes_of(all_nodes_mask(7)), 3));
    EXPECT_EQ(fc.kind, FacetKind::OddHoleRank);
    EXPECT_EQ(fc.rank, 3);
    ASSERT_EQ(fc.cycle.size(), 7U);
    for (std::size_t i = 0; i < 7; ++i) EXPECT_TRUE(c7.adjacent(fc.cycle[i], fc.cycle[(i + 1) % 7]));
    EXPECT_EQ(count_kind(c7, FacetKind::OddHoleRank), 1);
}

TEST(Classify, HypomatchableLineRankNeedsRoot) {
    const Multigraph h = odd_hole_plus(HolePlus::Double, 2);
    const RootMap rm = RootMap::of(h);
    const Multigraph g = line_graph(h).graph;
    const Inequality full = Inequality::rank(6, nodes_of(all_nodes_mask(6)), 2);
    StabOracle o(g);
    const FacetClass with_root = o.classify(full, &rm);
    EXPECT_EQ(with_root.kind, FacetKind::HypomatchableLineRank);
    EXPECT_EQ(with_root.root_nodes, (std::vector<NodeId>{0, 1, 2, 3, 4}));
    EXPECT_EQ(with_root.root_edges.size(), 6U);
    EXPECT_EQ(with_root.rank, 2);
    EXPECT_EQ(o.classify(full).kind, FacetKind::FullRank);
}

TEST(Classify, WheelFacetIsJoinedAntiweb) {
    const Multigraph w5 = odd_wheel(2);
    const Inequality f = weighted({1, 1, 1, 1, 1, 2}, 2);
    StabOracle o(w5);
    ASSERT_TRUE(o.is_facet(f));
    const FacetClass fc = o.classify(f);
    EXPECT_EQ(fc.kind, FacetKind::JoinedAntiweb);
    EXPECT_EQ(fc.clique_part, (std::vector<NodeId>{5}));
    ASSERT_EQ(fc.antiweb_parts.size(), 1U);
    EXPECT_EQ(fc.antiweb_parts[0].n, 5);
    EXPECT_EQ(fc.antiweb_parts[0].k, 2);
    EXPECT_EQ(fc.antiweb_parts[0].alpha, 2);
}

TEST(Classify, NonFacetIsContractError) {
    StabOracle o(odd_hole(2));
    try {
        o.classify(Inequality::rank(5, std::vector<NodeId>{0, 1, 2}, 2));
        FAIL() << "expected a contract error";
    } catch (const ContractError& e) {
        EXPECT_EQ(e.predicate(), "facet");
    }
    EXPECT_THROW(o.classify(Inequality::rank(5, std::vector<NodeId>{0, 2}, 1)), ContractError);
}

TEST(Classify, GemnHasNoOtherFacets) {
    const Multigraph h = odd_hole_plus(HolePlus::Chord, 2, 2);
    const RootMap rm = RootMap::of(h);
    EXPECT_EQ(count_kind(line_graph(h).graph, FacetKind::Other, &rm), 0);
    EXPECT_EQ(count_kind(line_graph(h).graph, FacetKind::HypomatchableLineRank, &rm), 1);
}

TEST(Edmonds, DescriptionHoldsOnFamilies) {
    for (const Multigraph& h : {odd_hole_plus(HolePlus::Double, 2), odd_hole_plus(HolePlus::Chord, 2, 2),
                                odd_hole_plus(HolePlus::Path, 2, 2, 3), complete(4), odd_hole(3)}) {
        const EdmondsReport r = verify_edmonds_description(h);
        EXPECT_TRUE(r.pass) << (r.first_failure ? r.first_failure->str() : "");
        EXPECT_FALSE(r.facets.empty());
        int total = 0;
        for (const auto& [name, count] : r.class_counts) total += count;
        EXPECT_EQ(total, static_cast<int>(r.facets.size()));
    }
}

TEST(Relaxations, EstabQstabRstab) {
    const Multigraph c5 = odd_hole(2);
    EXPECT_EQ(estab_constraints(c5).size(), 10U);
    EXPECT_EQ(qstab_constraints(c5).size(), 10U);
    EXPECT_EQ(maximal_cliques(complete(4)), (std::vector<std::vector<NodeId>>{{0, 1, 2, 3}}));
    EXPECT_EQ(maximal_cliques(claw()).size(), 3U);
    EXPECT_EQ(qstab_constraints(complete(4)).size(), 5U);
    // Every facet of STAB is among the rank constraints for an odd hole, not for the wheel.
    const auto holds = [](const std::vector<Inequality>& set, const Inequality& f) {
        return std::find(set.begin(), set.end(), f) != set.end();
    };
    const auto rank_c5 = rstab_constraints(c5);
    for (const Inequality& f : stab_facets(c5)) {
        if (f.b > 0) {
            EXPECT_TRUE(holds(rank_c5, f)) << f.str();
        }
    }
    const auto rank_w5 = rstab_constraints(odd_wheel(2));
    EXPECT_FALSE(holds(rank_w5, weighted({1, 1, 1, 1, 1, 2}, 2)));
    EXPECT_THROW(rstab_constraints(Multigraph(40)), ResourceError);
}

TEST(PerfectionNotions, HPerfectAndJoinedA) {
    EXPECT_TRUE(is_h_perfect_by_facets(odd_hole(2)));
    EXPECT_FALSE(is_h_perfect_by_facets(odd_wheel(2)));
    EXPECT_TRUE(is_joined_a_perfect(odd_hole(2)));
    EXPECT_TRUE(is_joined_a_perfect(odd_wheel(2)));
    EXPECT_FALSE(is_joined_a_perfect(gemn()));
    EXPECT_TRUE(is_joined_a_perfect(complete(4)));
}

TEST(Limits, TooLargeIsResourceError) {
    PolytopeLimits small;
    small.facet_nodes = 4;
    EXPECT_THROW(stab_facets(odd_hole(2), small), ResourceError);
}
