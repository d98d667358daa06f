// paradox -- command line front end for the friendship-paradox library.
//
// Subcommands: analyze, sfp-by-degree, predict, rewire, shuffle-test,
// illusion-search, poll, cascade. Outputs are JSON (reports) or CSV
// (per-degree and per-round tables), written to --out or stdout.
//
// Exit codes: 0 success, 2 bad input (missing/malformed files, bad flags,
// unknown labels), 1 internal failure.

#include <CLI11.hpp>

#include <charconv>
#include <cstdlib>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "paradox/paradox.hpp"

namespace {

using paradox::json;

std::ifstream open_input(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw paradox::parse_error("cannot open '" + path + "'");
  return in;
}

paradox::Graph load_graph_file(const std::string& path) {
  auto in = open_input(path);
  try {
    return paradox::load_edge_list(in);
  } catch (const paradox::parse_error& e) {
    throw paradox::parse_error(path + ": " + e.what());
  }
}

paradox::DiGraph load_digraph_file(const std::string& path) {
  auto in = open_input(path);
  try {
    return paradox::load_directed_edge_list(in);
  } catch (const paradox::parse_error& e) {
    throw paradox::parse_error(path + ": " + e.what());
  }
}

paradox::AttributeMap load_attrs_file(const std::string& path, const paradox::Graph& g) {
  auto in = open_input(path);
  try {
    return paradox::load_attributes(in, g);
  } catch (const paradox::parse_error& e) {
    throw paradox::parse_error(path + ": " + e.what());
  }
}

void write_text(const std::string& out_path, const std::string& text) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path);
  if (!out) throw paradox::parse_error("cannot open '" + out_path + "' for writing");
  out << text;
}

std::string fmt(double x) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, res.ptr);
}

std::string utc_timestamp() {
  const std::time_t now = std::time(nullptr);
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

std::string default_name(const std::string& path) {
  return std::filesystem::path(path).stem().string();
}

// Shared per-subcommand state. Every stochastic subcommand requires a seed,
// either --seed or the PARADOX_SEED environment variable.
struct CommonOpts {
  std::string graph_path;
  std::string out_path;
  std::string name;
  bool no_timestamp = false;
  std::optional<std::uint64_t> seed;

  std::uint64_t require_seed() const {
    if (seed) return *seed;
    if (const char* env = std::getenv("PARADOX_SEED")) {
      std::uint64_t s = 0;
      const std::string_view sv(env);
      const auto res = std::from_chars(sv.data(), sv.data() + sv.size(), s);
      if (res.ec != std::errc() || res.ptr != sv.data() + sv.size())
        throw paradox::parse_error("PARADOX_SEED is not an unsigned integer: '" +
                                   std::string(sv) + "'");
      return s;
    }
    throw paradox::parse_error("a seed is required: pass --seed or set PARADOX_SEED");
  }

  void stamp(json& j, std::optional<std::uint64_t> used_seed) const {
    j["tool_version"] = paradox::kToolVersion;
    if (used_seed) j["seed"] = *used_seed;
    if (!no_timestamp) j["timestamp"] = utc_timestamp();
  }

  std::string network_name() const {
    return name.empty() ? default_name(graph_path) : name;
  }
};

void add_common(CLI::App* cmd, CommonOpts& o, bool with_graph = true) {
  if (with_graph)
    cmd->add_option("--graph", o.graph_path, "edge list file")->required();
  cmd->add_option("-o,--out", o.out_path, "output file (default: stdout)");
  cmd->add_option("--name", o.name, "network name used in reports");
  cmd->add_flag("--no-timestamp", o.no_timestamp, "omit the timestamp field");
  cmd->add_option("--seed", o.seed, "RNG seed (fallback: PARADOX_SEED)");
}

json network_block(const std::string& name, int nodes, long long edges, bool directed) {
  return json{{"name", name}, {"nodes", nodes}, {"edges", edges}, {"directed", directed}};
}

// ---------------------------------------------------------------- analyze

struct AnalyzeOpts {
  CommonOpts common;
  std::string attrs_path;
  bool directed = false;
  double threshold = 0.5;
  bool count_all = false;
  bool predict = false;
  long long samples = 100000;
  std::string majority = "weak";
};

int run_analyze(const AnalyzeOpts& o) {
  paradox::ParadoxReport rep;
  rep.network_name = o.common.network_name();

  if (o.directed) {
    if (!o.attrs_path.empty())
      throw paradox::parse_error("attributes are not supported for directed graphs");
    if (o.predict)
      throw paradox::parse_error("--predict applies to undirected graphs only");
    const auto g = load_digraph_file(o.common.graph_path);
    rep.nodes = g.node_count();
    rep.edges = g.arc_count();
    rep.directed = true;
    rep.labels = g.labels();
    rep.directed_paradoxes = paradox::directed_paradoxes(g);
  } else {
    const auto g = load_graph_file(o.common.graph_path);
    rep.nodes = g.node_count();
    rep.edges = g.edge_count();
    rep.directed = false;
    rep.labels = g.labels();
    rep.paradox = paradox::paradox_summary(g);

    paradox::StructureStats st;
    st.assortativity = paradox::degree_assortativity(g);
    st.transsortativity = paradox::transsortativity(g);

    if (!o.attrs_path.empty()) {
      const auto attrs = load_attrs_file(o.attrs_path, g);
      st.has_attribute_correlation = true;
      st.degree_attribute_correlation = paradox::degree_attribute_correlation(g, attrs);

      paradox::GeneralizedStats gen;
      gen.attribute_kind = attrs.is_binary() ? "binary" : "numeric";
      const auto gap = paradox::gfp_gap(g, attrs);
      gen.gfp_lhs = gap.first;
      gen.gfp_rhs = gap.second;
      long long hits = 0;
      for (paradox::NodeId v = 0; v < g.node_count(); ++v)
        hits += paradox::gfp_indicator(g, attrs, v);
      gen.gfp_fraction = static_cast<double>(hits) / g.node_count();
      gen.gsfp_fraction_weak = paradox::gsfp_fraction(g, attrs, paradox::SfpMode::weak);
      gen.gsfp_fraction_strict = paradox::gsfp_fraction(g, attrs, paradox::SfpMode::strict);
      if (attrs.is_binary()) {
        double sf = 0.0;
        for (double x : attrs.values) sf += x;
        gen.prevalence = sf / g.node_count();
        rep.illusion = paradox::majority_illusion(g, attrs, o.threshold, o.count_all);
      }
      rep.generalized = std::move(gen);
    }
    rep.structure = std::move(st);

    if (o.predict) {
      const auto seed = o.common.require_seed();
      rep.seed = seed;
      rep.prediction = paradox::prediction_report(
          g, paradox::sfp_mode_from_string(o.majority), o.samples, seed);
    }
  }

  if (!o.common.no_timestamp) rep.timestamp = utc_timestamp();
  const json j = rep;
  write_text(o.common.out_path, j.dump(2) + "\n");
  return 0;
}

// ----------------------------------------------------------- sfp-by-degree

struct SfpByDegreeOpts {
  CommonOpts common;
  std::string mode = "weak";
};

int run_sfp_by_degree(const SfpByDegreeOpts& o) {
  const auto g = load_graph_file(o.common.graph_path);
  const auto table = paradox::sfp_by_degree(g, paradox::sfp_mode_from_string(o.mode));
  std::ostringstream out;
  out << "degree,fraction,count\n";
  for (const auto& [k, grp] : table)
    out << k << ',' << fmt(grp.fraction) << ',' << grp.count << '\n';
  write_text(o.common.out_path, out.str());
  return 0;
}

// ---------------------------------------------------------------- predict

struct PredictOpts {
  CommonOpts common;
  std::string model_path;
  std::string mode = "independent";
  std::string majority = "weak";
  long long samples = 100000;
  std::optional<double> rho;
};

int run_predict(const PredictOpts& o) {
  if (o.common.graph_path.empty() == o.model_path.empty())
    throw paradox::parse_error("predict needs exactly one of --graph or --model");

  paradox::DegreeModel model;
  json out;
  std::optional<paradox::Graph> g;
  if (!o.common.graph_path.empty()) {
    g = load_graph_file(o.common.graph_path);
    model = paradox::build_degree_model(*g);
    out["network"] = network_block(o.common.network_name(), g->node_count(),
                                   g->edge_count(), false);
  } else {
    auto in = open_input(o.model_path);
    model = json::parse(in).get<paradox::DegreeModel>();
    out["model_file"] = o.model_path;
  }

  const auto majority = paradox::sfp_mode_from_string(o.majority);
  out["majority"] = o.majority;
  if (g) {
    json measured = json::array();
    for (const auto& [k, grp] : paradox::sfp_by_degree(*g, majority))
      measured.push_back(json::array({k, grp.fraction, grp.count}));
    out["measured"] = {{"by_degree", std::move(measured)},
                       {"fraction", paradox::sfp_fraction(*g, majority)}};
  } else {
    out["measured"] = nullptr;
  }

  std::optional<std::uint64_t> used_seed;
  if (o.mode == "independent") {
    out["prediction"] = paradox::predict_independent(model, majority);
    out["rho_nn"] = nullptr;
  } else if (o.mode == "correlated") {
    std::optional<double> rho = o.rho ? o.rho : model.transsortativity;
    if (!rho) {
      out["prediction"] = nullptr;
      out["rho_nn"] = nullptr;
      out["notice"] = "transsortativity undefined; correlated mode skipped";
      std::cerr << "notice: transsortativity undefined; correlated mode skipped\n";
    } else {
      used_seed = o.common.require_seed();
      out["prediction"] =
          paradox::predict_correlated(model, *rho, o.samples, *used_seed, majority);
      out["rho_nn"] = *rho;
    }
  } else {
    throw paradox::parse_error("unknown prediction mode '" + o.mode +
                               "' (expected independent|correlated)");
  }

  o.common.stamp(out, used_seed);
  write_text(o.common.out_path, out.dump(2) + "\n");
  return 0;
}

// ----------------------------------------------------------------- rewire

struct RewireOpts {
  CommonOpts common;
  double target = 0.0;
  long long max_iters = 1000000;
  std::string graph_out;
};

int run_rewire(const RewireOpts& o) {
  const auto g = load_graph_file(o.common.graph_path);
  const auto seed = o.common.require_seed();
  const auto before = paradox::degree_assortativity(g);
  const auto res = paradox::rewire_to_assortativity(g, o.target, o.max_iters, seed);

  if (!o.graph_out.empty()) {
    std::ofstream out(o.graph_out);
    if (!out) throw paradox::parse_error("cannot open '" + o.graph_out + "' for writing");
    paradox::write_edge_list(out, res.graph);
  }

  json j{{"network", network_block(o.common.network_name(), g.node_count(),
                                   g.edge_count(), false)},
         {"target", res.target},
         {"assortativity_before", paradox::detail::opt_json(before)},
         {"achieved", paradox::detail::opt_json(res.achieved)},
         {"iterations_used", res.iterations_used},
         {"graph_out", o.graph_out.empty() ? json(nullptr) : json(o.graph_out)}};
  o.common.stamp(j, seed);
  write_text(o.common.out_path, j.dump(2) + "\n");
  return 0;
}

// ------------------------------------------------------------ shuffle-test

struct ShuffleTestOpts {
  CommonOpts common;
  std::string attrs_path;
  int trials = 100;
};

int run_shuffle_test(const ShuffleTestOpts& o) {
  if (o.trials < 1) throw paradox::parse_error("shuffle-test: trials must be >= 1");
  const auto g = load_graph_file(o.common.graph_path);
  const auto attrs = load_attrs_file(o.attrs_path, g);
  const auto seed = o.common.require_seed();

  auto stats_of = [&g](const paradox::AttributeMap& a) {
    struct {
      std::optional<double> rho;
      double gap, gfp_frac, weak, strict;
    } s{};
    s.rho = paradox::degree_attribute_correlation(g, a);
    s.gap = paradox::gfp_gap(g, a).first;
    long long hits = 0;
    for (paradox::NodeId v = 0; v < g.node_count(); ++v)
      hits += paradox::gfp_indicator(g, a, v);
    s.gfp_frac = static_cast<double>(hits) / g.node_count();
    s.weak = paradox::gsfp_fraction(g, a, paradox::SfpMode::weak);
    s.strict = paradox::gsfp_fraction(g, a, paradox::SfpMode::strict);
    return s;
  };

  const auto planted = stats_of(attrs);
  double sum_abs_rho = 0.0, sum_gap = 0.0, sum_gfp = 0.0, sum_weak = 0.0, sum_strict = 0.0;
  int rho_defined = 0, below_weak = 0, below_strict = 0;
  for (int t = 0; t < o.trials; ++t) {
    const std::uint64_t trial_seed =
        paradox::splitmix64(seed ^ paradox::splitmix64(static_cast<std::uint64_t>(t) + 1));
    const auto shuffled = paradox::shuffle_attributes(attrs, trial_seed);
    const auto s = stats_of(shuffled);
    if (s.rho) {
      sum_abs_rho += std::abs(*s.rho);
      ++rho_defined;
    }
    sum_gap += s.gap;
    sum_gfp += s.gfp_frac;
    sum_weak += s.weak;
    sum_strict += s.strict;
    below_weak += s.weak < planted.weak;
    below_strict += s.strict < planted.strict;
  }

  json j{{"network", network_block(o.common.network_name(), g.node_count(),
                                   g.edge_count(), false)},
         {"trials", o.trials},
         {"planted",
          {{"rho_kx", paradox::detail::opt_json(planted.rho)},
           {"gfp_gap", planted.gap},
           {"gfp_fraction", planted.gfp_frac},
           {"gsfp_fraction_weak", planted.weak},
           {"gsfp_fraction_strict", planted.strict}}},
         {"shuffled",
          {{"mean_abs_rho_kx",
            rho_defined > 0 ? json(sum_abs_rho / rho_defined) : json(nullptr)},
           {"mean_gfp_gap", sum_gap / o.trials},
           {"mean_gfp_fraction", sum_gfp / o.trials},
           {"mean_gsfp_fraction_weak", sum_weak / o.trials},
           {"mean_gsfp_fraction_strict", sum_strict / o.trials},
           {"trials_below_planted_weak", below_weak},
           {"trials_below_planted_strict", below_strict}}}};
  o.common.stamp(j, seed);
  write_text(o.common.out_path, j.dump(2) + "\n");
  return 0;
}

// -------------------------------------------------------- illusion-search

struct IllusionSearchOpts {
  CommonOpts common;
  int size = 0;
  double threshold = 0.5;
  long long budget = 20000;
  std::string attrs_out;
};

int run_illusion_search(const IllusionSearchOpts& o) {
  const auto g = load_graph_file(o.common.graph_path);
  const auto seed = o.common.require_seed();
  const auto res = paradox::illusion_search(g, o.size, o.threshold, o.budget, seed);

  if (!o.attrs_out.empty()) {
    std::ofstream out(o.attrs_out);
    if (!out) throw paradox::parse_error("cannot open '" + o.attrs_out + "' for writing");
    out << "node,value\n";
    std::vector<char> red(g.node_count(), 0);
    for (paradox::NodeId v : res.red) red[v] = 1;
    for (paradox::NodeId v = 0; v < g.node_count(); ++v)
      out << g.label(v) << ',' << (red[v] ? 1 : 0) << '\n';
  }

  json red_labels = json::array();
  for (paradox::NodeId v : res.red) red_labels.push_back(g.label(v));
  json j{{"network", network_block(o.common.network_name(), g.node_count(),
                                   g.edge_count(), false)},
         {"set_size", o.size},
         {"threshold", o.threshold},
         {"budget", o.budget},
         {"iterations_used", res.iterations_used},
         {"red", std::move(red_labels)},
         {"illusion_fraction", res.fraction},
         {"attrs_out", o.attrs_out.empty() ? json(nullptr) : json(o.attrs_out)}};
  o.common.stamp(j, seed);
  write_text(o.common.out_path, j.dump(2) + "\n");
  return 0;
}

// ------------------------------------------------------------------- poll

struct PollOpts {
  CommonOpts common;
  std::string attrs_path;
  std::string method;
  std::string correction = "none";
  long long samples = 0;
  int trials = 1;
};

int run_poll(const PollOpts& o) {
  const auto g = load_graph_file(o.common.graph_path);
  const auto attrs = load_attrs_file(o.attrs_path, g);
  const auto seed = o.common.require_seed();

  paradox::PollResult res;
  if (o.method == "node") {
    if (o.correction != "none")
      throw paradox::parse_error("--correction applies to friend polling only");
    res = paradox::node_poll(g, attrs, o.samples, seed, o.trials);
  } else if (o.method == "friend") {
    paradox::FriendCorrection corr;
    if (o.correction == "none")
      corr = paradox::FriendCorrection::none;
    else if (o.correction == "inverse-degree")
      corr = paradox::FriendCorrection::inverse_degree;
    else
      throw paradox::parse_error("unknown correction '" + o.correction +
                                 "' (expected none|inverse-degree)");
    res = paradox::friend_poll(g, attrs, o.samples, corr, seed, o.trials);
  } else {
    throw paradox::parse_error("unknown poll method '" + o.method +
                               "' (expected node|friend)");
  }

  double sf = 0.0;
  for (double x : attrs.values) sf += x;
  json j{{"network", network_block(o.common.network_name(), g.node_count(),
                                   g.edge_count(), false)},
         {"poll", res},
         {"true_prevalence", sf / g.node_count()}};
  o.common.stamp(j, seed);
  write_text(o.common.out_path, j.dump(2) + "\n");
  return 0;
}

// ---------------------------------------------------------------- cascade

struct CascadeOpts {
  CommonOpts common;
  std::string seeds_csv;
  std::string seeds_file;
  double phi = 0.5;
  std::string rounds_csv;
};

int run_cascade(const CascadeOpts& o) {
  const auto g = load_graph_file(o.common.graph_path);
  if (o.seeds_csv.empty() == o.seeds_file.empty())
    throw paradox::parse_error("cascade needs exactly one of --seeds or --seeds-file");

  std::vector<std::string> seed_labels;
  if (!o.seeds_csv.empty()) {
    std::string item;
    std::istringstream in(o.seeds_csv);
    while (std::getline(in, item, ',')) {
      if (!item.empty()) seed_labels.push_back(item);
    }
  } else {
    auto in = open_input(o.seeds_file);
    std::string line;
    while (std::getline(in, line)) {
      const auto body = paradox::detail::strip_comment(line);
      if (!body.empty()) seed_labels.emplace_back(body);
    }
  }
  if (seed_labels.empty()) throw paradox::parse_error("cascade: empty seed set");

  std::vector<paradox::NodeId> seeds;
  seeds.reserve(seed_labels.size());
  for (const auto& name : seed_labels) {
    if (!g.has_label(name))
      throw paradox::parse_error("cascade: unknown seed label '" + name + "'");
    seeds.push_back(g.node_by_label(name));
  }

  const auto res = paradox::threshold_cascade(g, seeds, o.phi);

  if (!o.rounds_csv.empty()) {
    std::ofstream out(o.rounds_csv);
    if (!out) throw paradox::parse_error("cannot open '" + o.rounds_csv + "' for writing");
    out << "round,active_count\n";
    for (std::size_t i = 0; i < res.round_sizes.size(); ++i)
      out << i << ',' << res.round_sizes[i] << '\n';
  }

  json active = json::array();
  for (paradox::NodeId v = 0; v < g.node_count(); ++v)
    if (res.active[v]) active.push_back(g.label(v));
  json j{{"network", network_block(o.common.network_name(), g.node_count(),
                                   g.edge_count(), false)},
         {"phi", o.phi},
         {"seeds", seed_labels},
         {"rounds", res.rounds},
         {"final_size", res.final_size},
         {"round_sizes", res.round_sizes},
         {"active", std::move(active)}};
  o.common.stamp(j, std::nullopt);
  write_text(o.common.out_path, j.dump(2) + "\n");
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"friendship-paradox analysis toolkit"};
  app.set_version_flag("--version", paradox::kToolVersion);
  app.require_subcommand(1);

  AnalyzeOpts analyze;
  auto* cmd_analyze = app.add_subcommand("analyze", "full paradox report for a network");
  add_common(cmd_analyze, analyze.common);
  cmd_analyze->add_option("--attrs", analyze.attrs_path, "node attribute CSV");
  cmd_analyze->add_flag("--directed", analyze.directed, "treat input as directed arcs");
  cmd_analyze->add_option("--threshold", analyze.threshold,
                          "majority-illusion threshold (default 0.5)");
  cmd_analyze->add_flag("--count-all", analyze.count_all,
                        "count trait holders in the illusion fraction");
  cmd_analyze->add_flag("--predict", analyze.predict, "include strong-paradox predictions");
  cmd_analyze->add_option("--samples", analyze.samples,
                          "Monte Carlo samples for the correlated predictor");
  cmd_analyze->add_option("--majority", analyze.majority,
                          "dominance mode for predictions: weak|strict");

  SfpByDegreeOpts sbd;
  auto* cmd_sbd = app.add_subcommand("sfp-by-degree",
                                     "strong-paradox rate per degree class (CSV)");
  add_common(cmd_sbd, sbd.common);
  cmd_sbd->add_option("--mode", sbd.mode, "dominance mode: weak|strict");

  PredictOpts predict;
  auto* cmd_predict = app.add_subcommand("predict",
                                         "predict strong-paradox rates from degree structure");
  cmd_predict->add_option("--graph", predict.common.graph_path, "edge list file");
  cmd_predict->add_option("--model", predict.model_path, "degree model JSON file");
  cmd_predict->add_option("-o,--out", predict.common.out_path, "output file");
  cmd_predict->add_option("--name", predict.common.name, "network name used in reports");
  cmd_predict->add_flag("--no-timestamp", predict.common.no_timestamp, "omit the timestamp");
  cmd_predict->add_option("--seed", predict.common.seed, "RNG seed (fallback: PARADOX_SEED)");
  cmd_predict->add_option("--mode", predict.mode, "independent|correlated");
  cmd_predict->add_option("--majority", predict.majority, "weak|strict");
  cmd_predict->add_option("--samples", predict.samples, "Monte Carlo samples");
  cmd_predict->add_option("--rho", predict.rho,
                          "override the neighbor-neighbor correlation");

  RewireOpts rewire;
  auto* cmd_rewire = app.add_subcommand("rewire",
                                        "degree-preserving rewiring toward a target assortativity");
  add_common(cmd_rewire, rewire.common);
  cmd_rewire->add_option("--target", rewire.target, "target assortativity")->required();
  cmd_rewire->add_option("--max-iters", rewire.max_iters, "proposal budget");
  cmd_rewire->add_option("--graph-out", rewire.graph_out, "write the rewired edge list here");

  ShuffleTestOpts shuffle;
  auto* cmd_shuffle = app.add_subcommand("shuffle-test",
                                         "compare paradox stats against attribute shuffles");
  add_common(cmd_shuffle, shuffle.common);
  cmd_shuffle->add_option("--attrs", shuffle.attrs_path, "node attribute CSV")->required();
  cmd_shuffle->add_option("--trials", shuffle.trials, "number of shuffles (default 100)");

  IllusionSearchOpts illusion;
  auto* cmd_illusion = app.add_subcommand("illusion-search",
                                          "search a trait placement maximizing the majority illusion");
  add_common(cmd_illusion, illusion.common);
  cmd_illusion->add_option("--size", illusion.size, "trait-set size")->required();
  cmd_illusion->add_option("--threshold", illusion.threshold, "perception threshold");
  cmd_illusion->add_option("--budget", illusion.budget, "swap proposals to try");
  cmd_illusion->add_option("--attrs-out", illusion.attrs_out,
                           "write the found placement as an attribute CSV");

  PollOpts poll;
  auto* cmd_poll = app.add_subcommand("poll", "estimate trait prevalence by polling");
  add_common(cmd_poll, poll.common);
  cmd_poll->add_option("--attrs", poll.attrs_path, "node attribute CSV")->required();
  cmd_poll->add_option("--method", poll.method, "node|friend")->required();
  cmd_poll->add_option("--correction", poll.correction, "none|inverse-degree");
  cmd_poll->add_option("--samples,--n", poll.samples, "draws per replicate")->required();
  cmd_poll->add_option("--trials", poll.trials, "independent replicates (default 1)");

  CascadeOpts cascade;
  auto* cmd_cascade = app.add_subcommand("cascade", "threshold cascade from a seed set");
  add_common(cmd_cascade, cascade.common);
  cmd_cascade->add_option("--seeds", cascade.seeds_csv, "comma-separated seed labels");
  cmd_cascade->add_option("--seeds-file", cascade.seeds_file, "file with one seed label per line");
  cmd_cascade->add_option("--phi", cascade.phi, "activation threshold in (0,1]")->required();
  cmd_cascade->add_option("--rounds-csv", cascade.rounds_csv, "write per-round sizes here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (cmd_analyze->parsed()) return run_analyze(analyze);
    if (cmd_sbd->parsed()) return run_sfp_by_degree(sbd);
    if (cmd_predict->parsed()) return run_predict(predict);
    if (cmd_rewire->parsed()) return run_rewire(rewire);
    if (cmd_shuffle->parsed()) return run_shuffle_test(shuffle);
    if (cmd_illusion->parsed()) return run_illusion_search(illusion);
    if (cmd_poll->parsed()) return run_poll(poll);
    if (cmd_cascade->parsed()) return run_cascade(cascade);
    std::cerr << "error: no subcommand\n";
    return 2;
  } catch (const paradox::parse_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const paradox::json::exception& e) {
    std::cerr << "error: invalid JSON input: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return 1;
  }
}
