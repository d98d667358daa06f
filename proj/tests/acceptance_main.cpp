// Acceptance checks for the friendship-paradox toolkit. Each criterion
// prints exactly one PASS/FAIL line; the process exits nonzero if any
// criterion fails. Tolerances and budgets are pinned here as constants.

#include <sys/wait.h>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "paradox/paradox.hpp"
#include "karate_constants.hpp"
#include "test_util.hpp"

using namespace paradox;

namespace {

// pinned tolerances and budgets
constexpr double kTolIdentity = 1e-9;        // criteria 1 and 2
constexpr double kTolFixture = 1e-12;        // criterion 3
constexpr double kTolFrozen = 1e-12;         // criterion 4
constexpr double kIllusionTarget = 24.0 / 26.0;  // criterion 5
constexpr long long kCascadeTarget = 32;         // criterion 5
constexpr int kShuffleTrials = 100;          // criterion 6
constexpr int kShuffleMinBelow = 95;         // criterion 6
constexpr double kShuffleRhoBound = 0.05;    // criterion 6
constexpr double kTolPredictor = 0.03;       // criterion 7
constexpr long long kCopulaSamples = 100000; // criterion 7
constexpr double kCopulaSigmas = 3.0;        // criterion 7
constexpr long long kPollSamples = 500;      // criterion 8
constexpr int kPollReplicates = 200;         // criterion 8
constexpr int kPollMinOvershoot = 190;       // criterion 8 (95%)
constexpr double kPollCorrectedTol = 0.02;   // criterion 8
constexpr int kMonotoneTriples = 1000;       // criterion 10
constexpr double kBatchTimeLimit = 10.0;     // criteria 1 and 5, seconds
constexpr double kPredictorTimeLimit = 60.0; // criterion 7, seconds

int failures = 0;

struct Check {
  bool ok = true;
  std::string why;
  std::string detail;

  void require(bool cond, const std::string& msg) {
    if (!cond && ok) {
      ok = false;
      why = msg;
    }
  }
};

void report(int num, const char* name, const Check& c) {
  if (c.ok) {
    std::printf("PASS  criterion %2d: %s%s%s\n", num, name,
                c.detail.empty() ? "" : " ", c.detail.c_str());
  } else {
    std::printf("FAIL  criterion %2d: %s [%s]\n", num, name, c.why.c_str());
    ++failures;
  }
  std::fflush(stdout);
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string fmt(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.3g", x);
  return buf;
}

// ------------------------------------------------------------ criterion 1

void criterion_1() {
  Check c;
  const auto t0 = std::chrono::steady_clock::now();
  double worst = 0.0;
  for (int i = 0; i < 50 && c.ok; ++i) {
    const auto degrees = testutil::power_law_degrees(1000, 2.2, 2, 30, 1000 + i);
    const auto g = configuration_model(degrees, 5000 + i);
    const auto [lhs, rhs] = fp_gap(g);
    const double err = std::abs(lhs - rhs);
    worst = std::max(worst, err);
    c.require(err <= kTolIdentity,
              "graph " + std::to_string(i) + ": |lhs-rhs| = " + fmt(err));
    const double oracle = testutil::oracle_fp_gap(g);
    c.require(std::abs(lhs - oracle) <= kTolIdentity,
              "graph " + std::to_string(i) + ": disagrees with the naive enumeration");
  }
  const double secs = seconds_since(t0);
  c.require(secs < kBatchTimeLimit, "took " + fmt(secs) + " s");
  c.detail = "(50 graphs, max |lhs-rhs| = " + fmt(worst) + ", " + fmt(secs) + " s)";
  report(1, "network gap equals var(d)/mean(d) on configuration graphs", c);
}

// ------------------------------------------------------------ criterion 2

void criterion_2() {
  Check c;
  double worst = 0.0;
  for (int i = 0; i < 50 && c.ok; ++i) {
    const auto degrees = testutil::power_law_degrees(1000, 2.2, 2, 30, 1000 + i);
    const auto g = configuration_model(degrees, 5000 + i);
    for (int a = 0; a < 10 && c.ok; ++a) {
      const auto attrs =
          testutil::random_binary_attrs(g.node_count(), 0.05 + 0.09 * a, 91 * i + a);
      const auto [lhs, rhs] = gfp_gap(g, attrs);
      const double err = std::abs(lhs - rhs);
      worst = std::max(worst, err);
      c.require(err <= kTolIdentity,
                "graph " + std::to_string(i) + ", trait " + std::to_string(a) +
                    ": |lhs-rhs| = " + fmt(err));
      c.require(std::abs(lhs - testutil::oracle_gfp_gap(g, attrs)) <= kTolIdentity,
                "graph " + std::to_string(i) + ": disagrees with the naive enumeration");
    }
  }
  c.detail = "(500 trait placements, max |lhs-rhs| = " + fmt(worst) + ")";
  report(2, "generalized gap equals cov(f,d)/mean(d) for binary traits", c);
}

// ------------------------------------------------------------ criterion 3

void criterion_3() {
  Check c;
  double worst = 0.0;
  auto near = [&](double got, double want, const char* what) {
    const double err = std::abs(got - want);
    worst = std::max(worst, err);
    c.require(err <= kTolFixture, std::string(what) + ": got " + fmt(got));
  };

  const auto star = testutil::star5();
  const auto [sl, sr] = fp_gap(star);
  near(sl, 0.9, "star fp gap lhs");
  near(sr, 0.9, "star fp gap rhs");
  const auto center = testutil::trait_on(star, {"c"});
  const auto [gl, gr] = gfp_gap(star, center);
  near(gl, 0.3, "star generalized gap lhs");
  near(gr, 0.3, "star generalized gap rhs");
  near(sfp_fraction(star, SfpMode::weak), 0.8, "star weak strong-paradox fraction");

  const auto c5 = testutil::cycle5();
  const auto [cl, cr] = fp_gap(c5);
  c.require(cl == 0.0 && cr == 0.0, "cycle gap must be exactly zero");
  near(sfp_fraction(c5, SfpMode::strict), 0.0, "cycle strict fraction");
  near(sfp_fraction(c5, SfpMode::weak), 1.0, "cycle weak fraction");

  near(*degree_assortativity(star), -1.0, "star assortativity");
  near(*degree_assortativity(testutil::path4()), -0.5, "path assortativity");
  near(*transsortativity(testutil::path4()), -1.0, "path transsortativity");

  // friend-poll expectations on the star by enumerating the draw distribution
  // (uniform edge, then uniform endpoint)
  double raw_sum = 0.0, draws = 0.0, num_w = 0.0, den_w = 0.0;
  for (const auto& [u, v] : star.edges()) {
    for (NodeId y : {u, v}) {
      raw_sum += center[y];
      draws += 1.0;
      num_w += center[y] / star.degree(y);
      den_w += 1.0 / star.degree(y);
    }
  }
  near(raw_sum / draws, 0.5, "star friend-poll expectation");
  near(num_w / den_w, 0.2, "star corrected friend-poll expectation");

  c.detail = "(max error = " + fmt(worst) + ")";
  report(3, "closed-form fixture values on the star, cycle and path", c);
}

// ------------------------------------------------------------ criterion 4

void criterion_4() {
  Check c;
  double worst = 0.0;
  auto near = [&](double got, double want, const char* what) {
    const double err = std::abs(got - want);
    worst = std::max(worst, err);
    c.require(err <= kTolFrozen, std::string(what) + ": got " + fmt(got));
  };

  const auto g = testutil::load_karate();
  c.require(g.node_count() == karate::kNodes && g.edge_count() == karate::kEdges,
            "karate shape mismatch");

  const auto s = paradox_summary(g);
  near(s.mean_degree, karate::kMeanDegree, "mean degree");
  near(s.friend_mean_degree, karate::kFriendMeanDegree, "friend mean degree");
  near(s.fp_gap, karate::kFpGap, "fp gap");
  near(s.fp_fraction, static_cast<double>(karate::kFpTrueCount) / karate::kNodes,
       "fp fraction");
  near(s.sfp_fraction_weak, karate::kSfpWeakFraction, "weak sfp fraction");
  near(s.sfp_fraction_strict, static_cast<double>(karate::kSfpWeakCount) / karate::kNodes,
       "strict sfp fraction");  // strict and weak coincide on this network

  for (int label = 1; label <= karate::kNodes && c.ok; ++label) {
    const NodeId v = g.node_by_label(std::to_string(label));
    c.require(s.fp_node[v] == (karate::kFpFlags[label - 1] == '1'),
              "fp flag differs at node " + std::to_string(label));
    c.require(s.sfp_weak_node[v] == (karate::kSfpWeakFlags[label - 1] == '1'),
              "weak sfp flag differs at node " + std::to_string(label));
    c.require(s.sfp_strict_node[v] == (karate::kSfpStrictFlags[label - 1] == '1'),
              "strict sfp flag differs at node " + std::to_string(label));
  }

  const auto table = sfp_by_degree(g, SfpMode::weak);
  c.require(table.size() == karate::kSfpByDegree.size(), "by-degree table size");
  for (const auto& [k, expect] : karate::kSfpByDegree) {
    const auto it = table.find(k);
    if (it == table.end()) {
      c.require(false, "missing degree class " + std::to_string(k));
      break;
    }
    c.require(it->second.count == expect.second,
              "node count differs at degree " + std::to_string(k));
    near(it->second.fraction, static_cast<double>(expect.first) / expect.second,
         "by-degree fraction");
  }

  near(*degree_assortativity(g), karate::kAssortativity, "assortativity");
  near(*transsortativity(g), karate::kTranssortativity, "transsortativity");
  near(gfp_gap(g, testutil::trait_on(g, {"34", "1"})).first, karate::kGfpTop2,
       "generalized gap, trait on the two hubs");

  c.detail = "(max error = " + fmt(worst) + ")";
  report(4, "karate club matches the frozen reference values", c);
}

// ------------------------------------------------------------ criterion 5

void criterion_5() {
  Check c;
  const auto t0 = std::chrono::steady_clock::now();
  const auto g = testutil::load_karate();
  const auto res = illusion_search(g, 8, 0.5, 20000, 1);
  c.require(res.fraction >= kIllusionTarget,
            "illusion fraction " + fmt(res.fraction) + " below target");
  const auto cascade = threshold_cascade(g, res.red, 0.5);
  c.require(cascade.final_size >= kCascadeTarget,
            "cascade reached only " + std::to_string(cascade.final_size) + " nodes");
  const double secs = seconds_since(t0);
  c.require(secs < kBatchTimeLimit, "took " + fmt(secs) + " s");
  c.detail = "(illusion " + fmt(res.fraction * 26.0) + "/26, cascade " +
             std::to_string(cascade.final_size) + "/34, " + fmt(secs) + " s)";
  report(5, "illusion search and cascade on the karate club", c);
}

// ------------------------------------------------------------ criterion 6

void criterion_6() {
  Check c;
  const auto degrees = testutil::power_law_degrees(1000, 2.2, 2, 30, 2024);
  const auto g = configuration_model(degrees, 77);
  const auto placed = place_attributes(g, 0.2, 0.6, 200000, 99);
  c.require(std::abs(placed.achieved - 0.6) <= 0.02,
            "placement reached rho = " + fmt(placed.achieved));

  const double planted_weak = gsfp_fraction(g, placed.attributes, SfpMode::weak);
  int below = 0, defined = 0;
  double sum_abs_rho = 0.0;
  for (int t = 0; t < kShuffleTrials; ++t) {
    const auto shuffled =
        shuffle_attributes(placed.attributes, splitmix64(424200 + t));
    below += gsfp_fraction(g, shuffled, SfpMode::weak) < planted_weak;
    if (const auto rho = degree_attribute_correlation(g, shuffled)) {
      sum_abs_rho += std::abs(*rho);
      ++defined;
    }
  }
  c.require(defined == kShuffleTrials, "shuffled correlation undefined");
  const double mean_abs_rho = sum_abs_rho / std::max(defined, 1);
  c.require(below >= kShuffleMinBelow,
            "only " + std::to_string(below) + "/" + std::to_string(kShuffleTrials) +
                " shuffles fell below the planted rate");
  c.require(mean_abs_rho < kShuffleRhoBound,
            "shuffled mean |rho| = " + fmt(mean_abs_rho));
  c.detail = "(below planted: " + std::to_string(below) + "/" +
             std::to_string(kShuffleTrials) + ", mean |rho| = " + fmt(mean_abs_rho) + ")";
  report(6, "planted high-degree traits beat attribute shuffles", c);
}

// ------------------------------------------------------------ criterion 7

void criterion_7() {
  Check c;
  const auto t0 = std::chrono::steady_clock::now();
  const auto degrees = testutil::power_law_degrees(10000, 2.4, 2, 150, 424);
  const auto g = configuration_model(degrees, 777);
  const auto model = build_degree_model(g);
  const double measured = sfp_fraction(g, SfpMode::weak);
  const auto independent = predict_independent(model, SfpMode::weak);
  const double gap = std::abs(independent.overall - measured);
  c.require(gap <= kTolPredictor,
            "independent " + fmt(independent.overall) + " vs measured " + fmt(measured));

  // at rho = 0 the copula must reproduce the independent answer up to
  // Monte Carlo noise: compare overall rates at 3 standard errors
  const auto copula = predict_correlated(model, 0.0, kCopulaSamples, 4242, SfpMode::weak);
  const double n = static_cast<double>(model.node_count());
  double var = 0.0;
  for (const auto& [k, cnt] : model.histogram) {
    const double w = static_cast<double>(cnt) / n;
    const double q = independent.per_degree.at(k);
    var += w * w * std::max(q * (1.0 - q), 1.0 / kCopulaSamples) / kCopulaSamples;
  }
  const double se = std::sqrt(var);
  const double diff = std::abs(copula.overall - independent.overall);
  c.require(diff <= kCopulaSigmas * se,
            "copula at rho=0 off by " + fmt(diff) + " (3 SE = " + fmt(3 * se) + ")");
  const double secs = seconds_since(t0);
  c.require(secs < kPredictorTimeLimit, "took " + fmt(secs) + " s");
  c.detail = "(measured " + fmt(measured) + ", independent " + fmt(independent.overall) +
             ", copula drift " + fmt(diff) + ", " + fmt(secs) + " s)";
  report(7, "degree-structure predictor tracks measured strong-paradox rates", c);
}

// ------------------------------------------------------------ criterion 8

void criterion_8() {
  Check c;
  const auto degrees = testutil::power_law_degrees(1000, 2.2, 2, 30, 2024);
  const auto g = configuration_model(degrees, 77);
  const auto placed = place_attributes(g, 0.2, 0.6, 200000, 99);
  double prevalence = 0.0;
  for (double x : placed.attributes.values) prevalence += x;
  prevalence /= g.node_count();

  const auto raw = friend_poll(g, placed.attributes, kPollSamples,
                               FriendCorrection::none, 31, kPollReplicates);
  int overshoot = 0;
  for (double est : raw.replicate_estimates) overshoot += est > prevalence;
  c.require(overshoot >= kPollMinOvershoot,
            "only " + std::to_string(overshoot) + "/" +
                std::to_string(kPollReplicates) + " replicates overshoot");

  const auto corrected = friend_poll(g, placed.attributes, kPollSamples,
                                     FriendCorrection::inverse_degree, 32,
                                     kPollReplicates);
  const double err = std::abs(corrected.estimate - prevalence);
  c.require(err <= kPollCorrectedTol,
            "corrected estimate " + fmt(corrected.estimate) + " vs prevalence " +
                fmt(prevalence));
  c.detail = "(overshoot " + std::to_string(overshoot) + "/" +
             std::to_string(kPollReplicates) + ", corrected off by " + fmt(err) + ")";
  report(8, "friend polls overshoot; the inverse-degree correction recovers prevalence",
         c);
}

// ------------------------------------------------------------ criterion 9

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void criterion_9() {
  Check c;
  std::string dir;
  {
    std::string tmpl =
        (std::filesystem::temp_directory_path() / "paradox_accept_XXXXXX").string();
    std::vector<char> buf(tmpl.begin(), tmpl.end());
    buf.push_back('\0');
    if (!mkdtemp(buf.data())) {
      c.require(false, "mkdtemp failed");
      report(9, "command line runs are byte-deterministic under fixed seeds", c);
      return;
    }
    dir = buf.data();
  }
  const std::string karate = std::string(PARADOX_DATA_DIR) + "/karate.edges";

  // attribute file: the trait on the three highest-degree members
  const auto g = testutil::load_karate();
  const std::string attrs = dir + "/attrs.csv";
  {
    std::ofstream out(attrs);
    out << "node,value\n";
    for (NodeId v = 0; v < g.node_count(); ++v) {
      const auto& l = g.label(v);
      out << l << ',' << ((l == "34" || l == "1" || l == "33") ? 1 : 0) << '\n';
    }
  }

  const std::vector<std::string> commands = {
      "analyze --graph " + karate + " --attrs " + attrs +
          " --predict --samples 200 --seed 11 --no-timestamp",
      "sfp-by-degree --graph " + karate,
      "predict --graph " + karate + " --mode correlated --samples 200 --seed 11" +
          " --no-timestamp",
      "rewire --graph " + karate + " --target 0.1 --max-iters 5000 --seed 11" +
          " --no-timestamp",
      "shuffle-test --graph " + karate + " --attrs " + attrs +
          " --trials 10 --seed 11 --no-timestamp",
      "illusion-search --graph " + karate + " --size 5 --budget 2000 --seed 11" +
          " --no-timestamp",
      "poll --graph " + karate + " --attrs " + attrs +
          " --method friend --correction inverse-degree --samples 300 --trials 4" +
          " --seed 11 --no-timestamp",
      "cascade --graph " + karate + " --seeds 1,34 --phi 0.4 --no-timestamp",
  };

  int run = 0, compared = 0;
  for (const auto& args : commands) {
    const std::string a = dir + "/a" + std::to_string(run) + ".json";
    const std::string b = dir + "/b" + std::to_string(run) + ".json";
    const std::string base = std::string(PARADOX_CLI_BIN) + " " + args;
    const int rc1 = std::system((base + " >" + a + " 2>/dev/null").c_str());
    const int rc2 = std::system((base + " >" + b + " 2>/dev/null").c_str());
    const bool ok1 = rc1 != -1 && WIFEXITED(rc1) && WEXITSTATUS(rc1) == 0;
    const bool ok2 = rc2 != -1 && WIFEXITED(rc2) && WEXITSTATUS(rc2) == 0;
    c.require(ok1 && ok2, "command failed: " + args);
    if (ok1 && ok2) {
      const auto sa = slurp(a);
      c.require(!sa.empty(), "empty output: " + args);
      c.require(sa == slurp(b), "outputs differ: " + args);
      ++compared;
    }
    ++run;
  }
  c.detail = "(" + std::to_string(compared) + " commands, two runs each)";
  report(9, "command line runs are byte-deterministic under fixed seeds", c);
}

// ----------------------------------------------------------- criterion 10

void criterion_10() {
  Check c;
  std::mt19937_64 rng(31337);
  int checked = 0;
  for (int gi = 0; gi < 100 && c.ok; ++gi) {
    const auto g = testutil::random_graph(40, 0.06 + 0.002 * (gi % 20), 9000 + gi);
    for (int t = 0; t < 10 && c.ok; ++t) {
      std::set<int> small, large;
      while (static_cast<int>(small.size()) < 2)
        small.insert(static_cast<int>(rng() % g.node_count()));
      large = small;
      const int extra = 1 + static_cast<int>(rng() % 5);
      while (static_cast<int>(large.size()) < 2 + extra)
        large.insert(static_cast<int>(rng() % g.node_count()));
      const double phi = 0.05 + 0.9 * (static_cast<double>(rng() % 1000) / 1000.0);
      const auto rs = threshold_cascade(g, {small.begin(), small.end()}, phi);
      const auto rl = threshold_cascade(g, {large.begin(), large.end()}, phi);
      for (int v = 0; v < g.node_count(); ++v) {
        if (rs.active[v] && !rl.active[v]) {
          c.require(false, "monotonicity violated at triple " + std::to_string(checked));
          break;
        }
      }
      ++checked;
    }
  }
  c.detail = "(" + std::to_string(checked) + " seed-set pairs)";
  report(10, "cascades are monotone in the seed set", c);
}

}  // namespace

int main() {
  unsetenv("PARADOX_SEED");
  criterion_1();
  criterion_2();
  criterion_3();
  criterion_4();
  criterion_5();
  criterion_6();
  criterion_7();
  criterion_8();
  criterion_9();
  criterion_10();
  if (failures > 0) {
    std::printf("%d of 10 criteria failed\n", failures);
    return 1;
  }
  std::printf("all 10 criteria passed\n");
  return 0;
}
