#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "paradox/metrics.hpp"
#include "karate_constants.hpp"
#include "test_util.hpp"

using namespace paradox;
using Catch::Matchers::WithinAbs;

TEST_CASE("fp gap on the star and cycle fixtures") {
  const auto star = testutil::star5();
  const auto [lhs, rhs] = fp_gap(star);
  CHECK_THAT(lhs, WithinAbs(0.9, 1e-12));
  CHECK_THAT(rhs, WithinAbs(0.9, 1e-12));
  CHECK_THAT(lhs - rhs, WithinAbs(0.0, 1e-12));

  const auto [clhs, crhs] = fp_gap(testutil::cycle5());
  CHECK(clhs == 0.0);
  CHECK(crhs == 0.0);
}

TEST_CASE("fp gap identity and positivity on random graphs") {
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    const auto g = testutil::random_graph(80, 0.06, seed);
    const auto [lhs, rhs] = fp_gap(g);
    CHECK_THAT(lhs - rhs, WithinAbs(0.0, 1e-9));
    CHECK(lhs >= -1e-12);
    CHECK_THAT(lhs, WithinAbs(testutil::oracle_fp_gap(g), 1e-9));
  }
}

TEST_CASE("fp gap on karate matches the frozen enumeration") {
  const auto g = testutil::load_karate();
  const auto [lhs, rhs] = fp_gap(g);
  CHECK_THAT(lhs, WithinAbs(karate::kFpGap, 1e-12));
  CHECK_THAT(lhs - rhs, WithinAbs(0.0, 1e-9));
  const auto s = paradox_summary(g);
  CHECK_THAT(s.mean_degree, WithinAbs(karate::kMeanDegree, 1e-12));
  CHECK_THAT(s.friend_mean_degree, WithinAbs(karate::kFriendMeanDegree, 1e-12));
}

TEST_CASE("fp indicator: star, karate flags, random-graph oracle") {
  const auto star = testutil::star5();
  CHECK_FALSE(fp_indicator(star, star.node_by_label("c")));
  for (const char* leaf : {"1", "2", "3", "4"})
    CHECK(fp_indicator(star, star.node_by_label(leaf)));

  const auto g = testutil::load_karate();
  int holders = 0;
  for (int label = 1; label <= karate::kNodes; ++label) {
    const bool flag = fp_indicator(g, g.node_by_label(std::to_string(label)));
    CHECK(flag == (karate::kFpFlags[label - 1] == '1'));
    holders += flag;
  }
  CHECK(holders == karate::kFpTrueCount);

  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    const auto r = testutil::random_graph(50, 0.1, seed);
    for (int v = 0; v < r.node_count(); ++v)
      CHECK(fp_indicator(r, v) == testutil::oracle_fp_flag(r, v));
  }
}

TEST_CASE("strong paradox on the fixtures") {
  const auto star = testutil::star5();
  CHECK(sfp_indicator(star, star.node_by_label("1"), SfpMode::weak));
  CHECK(sfp_indicator(star, star.node_by_label("1"), SfpMode::strict));
  CHECK_FALSE(sfp_indicator(star, star.node_by_label("c"), SfpMode::weak));
  CHECK(sfp_fraction(star, SfpMode::weak) == 0.8);

  const auto c5 = testutil::cycle5();
  CHECK(sfp_fraction(c5, SfpMode::weak) == 1.0);    // ties count under weak dominance
  CHECK(sfp_fraction(c5, SfpMode::strict) == 0.0);  // and never under strict
}

TEST_CASE("strong paradox on karate matches the frozen enumeration") {
  const auto g = testutil::load_karate();
  CHECK(sfp_fraction(g, SfpMode::weak) == karate::kSfpWeakFraction);
  CHECK(sfp_fraction(g, SfpMode::strict) == karate::kSfpWeakFraction);
  for (int label = 1; label <= karate::kNodes; ++label) {
    const int v = g.node_by_label(std::to_string(label));
    CHECK(sfp_indicator(g, v, SfpMode::weak) == (karate::kSfpWeakFlags[label - 1] == '1'));
    CHECK(sfp_indicator(g, v, SfpMode::strict) ==
          (karate::kSfpStrictFlags[label - 1] == '1'));
  }
  // the highest-degree node cannot experience the paradox
  CHECK_FALSE(sfp_indicator(g, g.node_by_label("34"), SfpMode::weak));
}

TEST_CASE("strict dominance implies weak dominance") {
  for (std::uint64_t seed = 1; seed <= 15; ++seed) {
    const auto g = testutil::random_graph(70, 0.07, seed);
    for (int v = 0; v < g.node_count(); ++v) {
      if (sfp_indicator(g, v, SfpMode::strict)) CHECK(sfp_indicator(g, v, SfpMode::weak));
      CHECK(sfp_indicator(g, v, SfpMode::weak) == testutil::oracle_sfp_flag(g, v, false));
      CHECK(sfp_indicator(g, v, SfpMode::strict) == testutil::oracle_sfp_flag(g, v, true));
    }
  }
}

TEST_CASE("sfp by degree: star table, karate table, weighted-average identity") {
  const auto star_table = sfp_by_degree(testutil::star5(), SfpMode::weak);
  REQUIRE(star_table.size() == 2);
  CHECK(star_table.at(1).fraction == 1.0);
  CHECK(star_table.at(1).count == 4);
  CHECK(star_table.at(4).fraction == 0.0);
  CHECK(star_table.at(4).count == 1);

  const auto g = testutil::load_karate();
  const auto table = sfp_by_degree(g, SfpMode::weak);
  REQUIRE(table.size() == karate::kSfpByDegree.size());
  for (const auto& [k, expect] : karate::kSfpByDegree) {
    REQUIRE(table.count(k) == 1);
    CHECK(table.at(k).count == expect.second);
    CHECK_THAT(table.at(k).fraction,
               WithinAbs(static_cast<double>(expect.first) / expect.second, 1e-12));
  }

  for (const auto* graph : {&g}) {
    double weighted = 0.0;
    for (const auto& [k, grp] : sfp_by_degree(*graph, SfpMode::weak))
      weighted += grp.fraction * grp.count;
    CHECK_THAT(weighted / graph->node_count(),
               WithinAbs(sfp_fraction(*graph, SfpMode::weak), 1e-12));
  }
}

TEST_CASE("generalized gap on the star fixture and karate") {
  const auto star = testutil::star5();
  const auto attrs = testutil::trait_on(star, {"c"});
  const auto [lhs, rhs] = gfp_gap(star, attrs);
  CHECK_THAT(lhs, WithinAbs(0.3, 1e-12));
  CHECK_THAT(rhs, WithinAbs(0.3, 1e-12));

  const auto g = testutil::load_karate();
  const auto top2 = testutil::trait_on(g, {"34", "1"});
  const auto [klhs, krhs] = gfp_gap(g, top2);
  CHECK_THAT(klhs, WithinAbs(karate::kGfpTop2, 1e-12));
  CHECK_THAT(krhs, WithinAbs(karate::kGfpTop2, 1e-12));
}

TEST_CASE("generalized gap: constant attributes, identity, oracle") {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const auto g = testutil::random_graph(60, 0.08, seed);
    const auto attrs = testutil::random_numeric_attrs(g.node_count(), seed * 13);
    const auto [lhs, rhs] = gfp_gap(g, attrs);
    CHECK_THAT(lhs - rhs, WithinAbs(0.0, 1e-9));
    CHECK_THAT(lhs, WithinAbs(testutil::oracle_gfp_gap(g, attrs), 1e-9));

    const auto constant = make_attributes(std::vector<double>(g.node_count(), 2.5));
    const auto [c1, c2] = gfp_gap(g, constant);
    CHECK_THAT(c1, WithinAbs(0.0, 1e-12));
    CHECK_THAT(c2, WithinAbs(0.0, 1e-12));
  }
}

TEST_CASE("generalized gap scales affinely with the attribute") {
  const auto g = testutil::random_graph(50, 0.1, 99);
  const auto attrs = testutil::random_numeric_attrs(g.node_count(), 7);
  const double base = gfp_gap(g, attrs).first;
  std::vector<double> scaled(attrs.values);
  for (double& x : scaled) x = 3.5 * x - 11.0;
  CHECK_THAT(gfp_gap(g, make_attributes(std::move(scaled))).first,
             WithinAbs(3.5 * base, 1e-9));
}

TEST_CASE("generalized strong paradox specializes to the degree version") {
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    const auto g = testutil::random_graph(60, 0.08, seed);
    std::vector<double> degs(g.node_count());
    for (int v = 0; v < g.node_count(); ++v) degs[v] = g.degree(v);
    const auto attrs = make_attributes(std::move(degs));
    for (int v = 0; v < g.node_count(); ++v) {
      CHECK(gsfp_indicator(g, attrs, v, SfpMode::weak) == sfp_indicator(g, v, SfpMode::weak));
      CHECK(gsfp_indicator(g, attrs, v, SfpMode::strict) ==
            sfp_indicator(g, v, SfpMode::strict));
    }
  }
}

TEST_CASE("generalized strong paradox with a constant attribute") {
  const auto g = testutil::random_graph(40, 0.1, 3);
  const auto constant = make_attributes(std::vector<double>(g.node_count(), 1.0));
  CHECK(gsfp_fraction(g, constant, SfpMode::weak) == 1.0);
  CHECK(gsfp_fraction(g, constant, SfpMode::strict) == 0.0);
}

TEST_CASE("gfp indicator against a direct recomputation") {
  const auto g = testutil::random_graph(50, 0.09, 21);
  const auto attrs = testutil::random_numeric_attrs(g.node_count(), 4);
  for (int v = 0; v < g.node_count(); ++v) {
    const auto& nb = g.neighbors(v);
    double mean = 0.0;
    for (int j : nb) mean += attrs[j];
    mean /= static_cast<double>(nb.size());
    CHECK(gfp_indicator(g, attrs, v) == (mean > attrs[v]));
  }
}

TEST_CASE("paradox summary is consistent with the individual metrics") {
  const auto g = testutil::load_karate();
  const auto s = paradox_summary(g);
  CHECK_THAT(s.fp_gap, WithinAbs(fp_gap(g).first, 1e-15));
  CHECK(s.fp_fraction == static_cast<double>(karate::kFpTrueCount) / karate::kNodes);
  CHECK(s.sfp_fraction_weak == karate::kSfpWeakFraction);
  CHECK(s.sfp_fraction_strict == karate::kSfpWeakFraction);
  REQUIRE(static_cast<int>(s.fp_node.size()) == g.node_count());
  for (int v = 0; v < g.node_count(); ++v) {
    CHECK(s.fp_node[v] == fp_indicator(g, v));
    CHECK(s.sfp_weak_node[v] == sfp_indicator(g, v, SfpMode::weak));
  }
}

TEST_CASE("errors on degenerate graphs") {
  const auto empty = Graph::from_edges(0, {});
  CHECK_THROWS_AS(fp_gap(empty), std::invalid_argument);
  const auto edgeless = Graph::from_edges(3, {});
  CHECK_THROWS_AS(fp_gap(edgeless), std::invalid_argument);
  CHECK_THROWS_AS(paradox_summary(edgeless), std::invalid_argument);
}

// ------------------------------------------------------------- directed

TEST_CASE("directed paradoxes on a two-follower graph") {
  const auto g = load_directed_edge_list(std::string("a c\nb c\n"));
  const auto s = directed_paradoxes(g);
  const int a = g.node_by_label("a"), b = g.node_by_label("b"), c = g.node_by_label("c");
  // a and b each follow c, who has two followers while they have none
  CHECK(s.node_friends_followers[a]);
  CHECK(s.node_friends_followers[b]);
  CHECK_FALSE(s.node_friends_followers[c]);  // follows nobody
  CHECK(s.gap_friends_followers > 0.0);
  // c's followers have more friends than c (1 > 0)
  CHECK(s.node_followers_friends[c]);
}

TEST_CASE("directed three-cycle has zero gaps and undefined correlation") {
  const auto g = load_directed_edge_list(std::string("a b\nb c\nc a\n"));
  const auto s = directed_paradoxes(g);
  CHECK(s.gap_friends_followers == 0.0);
  CHECK(s.gap_followers_friends == 0.0);
  CHECK(s.gap_friends_friends == 0.0);
  CHECK(s.gap_followers_followers == 0.0);
  CHECK_FALSE(s.friend_follower_correlation.has_value());
  for (int v = 0; v < 3; ++v) {
    CHECK_FALSE(s.node_friends_followers[v]);
    CHECK_FALSE(s.node_friends_friends[v]);
  }
}

TEST_CASE("directed gap identities on random digraphs") {
  for (std::uint64_t seed = 1; seed <= 15; ++seed) {
    const auto g = testutil::correlated_digraph(60, seed);
    const auto s = directed_paradoxes(g);
    const int n = g.node_count();
    std::vector<double> in(n), out(n);
    for (int v = 0; v < n; ++v) {
      in[v] = g.in_degree(v);
      out[v] = g.out_degree(v);
    }
    auto var_over_mean = [n](const std::vector<double>& xs) {
      double mean = 0.0;
      for (double x : xs) mean += x;
      mean /= n;
      double var = 0.0;
      for (double x : xs) var += (x - mean) * (x - mean);
      return var / n / mean;
    };
    CHECK_THAT(s.gap_friends_followers, WithinAbs(var_over_mean(in), 1e-9));
    CHECK_THAT(s.gap_followers_friends, WithinAbs(var_over_mean(out), 1e-9));
    CHECK(s.gap_friends_followers >= -1e-12);
    CHECK(s.gap_followers_friends >= -1e-12);
    // both cross gaps are the same covariance expression
    CHECK(s.gap_friends_friends == s.gap_followers_followers);
  }
}

TEST_CASE("cross-gap sign follows the friend-follower correlation") {
  int checked = 0;
  for (std::uint64_t seed = 1; seed <= 25; ++seed) {
    const auto g = testutil::correlated_digraph(80, seed);
    const auto s = directed_paradoxes(g);
    if (!s.friend_follower_correlation) continue;
    const double corr = *s.friend_follower_correlation;
    if (std::abs(corr) < 1e-3) continue;
    CHECK((s.gap_friends_friends > 0) == (corr > 0));
    ++checked;
  }
  CHECK(checked >= 10);  // the construction plants positive correlation
}

TEST_CASE("directed paradoxes reject arcless graphs") {
  CHECK_THROWS_AS(directed_paradoxes(DiGraph::from_arcs(3, {})), std::invalid_argument);
}
