#include "commands.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include <CLI11.hpp>

#include "report.hpp"
#include "unisets/basis.hpp"
#include "unisets/error.hpp"
#include "unisets/powers.hpp"
#include "unisets/rng.hpp"
#include "unisets/serialize.hpp"
#include "unisets/universal.hpp"

namespace unisets::cli {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Common {
  std::string format = "text";
  std::string output;
  std::uint64_t seed = 0;
  std::string verify = "auto";
  double budget = 1e8;
  std::uint64_t trials = 100'000;
};

void add_common(CLI::App* app, Common& c) {
  app->add_option("--format", c.format, "Output format")->check(CLI::IsMember({"text", "json"}));
  app->add_option("--output,-o", c.output, "Also write the JSON report to this file");
  app->add_option("--seed", c.seed, "Seed for every random choice in the run");
  app->add_option("--verify", c.verify, "Verification mode")->check(CLI::IsMember({"auto", "exact", "sampled"}));
  app->add_option("--budget", c.budget, "Elementary-step budget for exact verification");
  app->add_option("--trials", c.trials, "Trials for sampled verification");
}

VerifyOptions verify_options(const Common& c) {
  VerifyOptions v;
  v.mode = c.verify == "exact" ? VerifyMode::exact : c.verify == "sampled" ? VerifyMode::sampled : VerifyMode::automatic;
  v.exact_budget = c.budget;
  v.trials = c.trials;
  v.seed = splitmix64(c.seed ^ 0x7e51f1ed);
  return v;
}

Group parse_group(const std::string& text) {
  try {
    return Group::make(parse_group_spec(text));
  } catch (const Error& e) {
    if (e.code() == ErrorCode::parse_error || e.code() == ErrorCode::invalid_argument) throw UsageError(e.what());
    throw;
  }
}

std::vector<std::uint64_t> parse_list(const std::string& text) {
  std::vector<std::uint64_t> out;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, ',')) {
    if (item.empty()) continue;
    try {
      std::size_t used = 0;
      out.push_back(std::stoull(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw UsageError("not a nonnegative integer: '" + item + "'");
    }
  }
  return out;
}

std::vector<std::string> read_tokens(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read " + path);
  std::vector<std::string> out;
  for (std::string tok; in >> tok;) out.push_back(tok);
  return out;
}

Subset subset_from(const Group& g, const std::vector<std::uint64_t>& values, const char* what) {
  Subset s(g);
  for (auto v : values) {
    if (v >= g.order()) throw UsageError(std::string(what) + " element " + std::to_string(v) + " is not below |G|");
    s.insert(static_cast<Element>(v));
  }
  return s;
}

std::vector<std::uint64_t> file_integers(const std::string& path) {
  std::vector<std::uint64_t> out;
  for (const auto& tok : read_tokens(path)) {
    const auto v = parse_list(tok);
    out.insert(out.end(), v.begin(), v.end());
  }
  return out;
}

int emit(const RunReport& r, const Common& c, std::ostream& out) {
  const auto j = r.to_json();
  if (c.format == "json")
    out << j.dump(2) << "\n";
  else
    print_text(out, r);
  if (!c.output.empty()) {
    std::ofstream f(c.output);
    if (!f) throw UsageError("cannot write " + c.output);
    f << j.dump(2) << "\n";
  }
  return r.exit_status;
}

// ---------------------------------------------------------------------------

struct UniversalArgs {
  Common common;
  std::string group;
  unsigned k = 0;
  std::string method = "auto";
};

UniversalSetResult build_universal(const Group& g, const UniversalArgs& a, const ConstructionOptions& opts) {
  const bool cyclic = g.kind() == GroupSpec::Kind::cyclic;
  const bool abelian = g.is_abelian_cyclic_form();
  const bool symmetric = g.kind() == GroupSpec::Kind::symmetric;
  std::string method = a.method;
  if (method == "auto") {
    if (cyclic && g.order() > a.k)
      method = "singer";
    else if (abelian)
      method = "abelian";
    else if (symmetric)
      method = "symmetric";
    else
      method = "random";
  }
  if (method == "singer") {
    if (!cyclic) throw UsageError("--method singer needs a cyclic group");
    return cyclic_universal(g.order(), a.k, opts);
  }
  if (method == "random") return random_universal_for(Subset::full(g), a.k, a.common.seed, std::nullopt, opts);
  if (method == "tuple" || method == "abelian") {
    if (!abelian) throw UsageError("--method " + method + " needs a cyclic or abelian group");
    const auto targets = uniform_targets(g.order(), a.k);
    const auto route = method == "tuple" ? AbelianRoute::cartesian : AbelianRoute::automatic;
    auto res = tuple_to_universal_set(abelian_tuple(g, targets, opts, route), opts);
    res.method = method == "tuple" ? Method::tuple_union : Method::abelian;
    return res;
  }
  if (method == "symmetric") {
    if (!symmetric) throw UsageError("--method symmetric needs a symmetric group");
    return symmetric_universal(g.degree(), a.k, opts);
  }
  throw UsageError("unknown method " + method);
}

int cmd_universal(const UniversalArgs& a, std::ostream& out) {
  Stopwatch clock;
  const Group g = parse_group(a.group);
  if (a.k < 1) throw UsageError("--k must be at least 1");
  if (a.k > g.order()) throw UsageError("--k exceeds the group order");
  ConstructionOptions opts;
  opts.verify = verify_options(a.common);

  const auto res = build_universal(g, a, opts);
  RunReport r;
  r.command = "universal";
  r.group = encode(g.spec());
  r.parameters = {{"k", a.k}, {"method", a.method}, {"verify", a.common.verify}};
  r.seed = a.common.seed;
  r.verdict = res.verdict;
  r.body["result"] = encode(res);
  r.body["sizes"] = {{"set", res.set.size()}, {"group", g.order()}};
  r.bounds["lower"] = bound_comparison(res.lower_bound(), static_cast<double>(res.set.size()), true);
  r.bounds["upper"] = bound_comparison(res.size_bound, static_cast<double>(res.set.size()), res.bound_guaranteed);
  r.exit_status = exit_status_for(res.verdict);
  r.wall_time = clock.seconds();
  return emit(r, a.common, out);
}

// ---------------------------------------------------------------------------

struct BasisArgs {
  Common common;
  std::string group;
  std::string a_inline;
  std::string a_file;
  std::string x_inline;
  std::optional<unsigned> k;
};

int cmd_basis(const BasisArgs& a, std::ostream& out) {
  Stopwatch clock;
  const Group g = parse_group(a.group);
  const auto values = a.a_file.empty() ? parse_list(a.a_inline) : file_integers(a.a_file);
  const Subset target = subset_from(g, values, "A");
  BasisConfig cfg;
  cfg.seed = a.common.seed;
  cfg.k = a.k;
  if (cfg.k && *cfg.k == 0) throw UsageError("--k must be at least 1");
  if (!a.x_inline.empty()) cfg.x = subset_from(g, parse_list(a.x_inline), "X");
  cfg.construction.verify = verify_options(a.common);

  const auto res = en_basis(target, cfg);
  RunReport r;
  r.command = "basis";
  r.group = encode(g.spec());
  r.parameters = {{"a_size", target.size()}, {"k", a.k ? nlohmann::json(*a.k) : nlohmann::json("auto")},
                  {"x", a.x_inline.empty() ? "series" : "override"}};
  r.seed = a.common.seed;
  r.verdict = res.verdict;
  r.body["result"] = encode(res);
  r.body["sizes"] = {{"basis", res.basis.size()}, {"target", target.size()}, {"universal", res.universal.set.size()},
                     {"translators", res.translators.size()}, {"covering", res.covering.y.size()}};
  r.bounds["en_budget"] = bound_comparison(res.size_budget, static_cast<double>(res.basis.size()), false);
  r.bounds["en_budget"]["applicable"] = res.en_bound_applicable;
  r.bounds["translators"] = bound_comparison(res.translator_allowance(), static_cast<double>(res.translators.size()), true);
  // A inside BB is always exact; a sample-verified U is still worth flagging.
  r.exit_status = !res.verdict.pass ? kVerificationFailed : res.universal.verdict.exact_pass() ? kVerified : kSampledOnly;
  r.wall_time = clock.seconds();
  return emit(r, a.common, out);
}

// ---------------------------------------------------------------------------

struct PowersArgs {
  Common common;
  unsigned d = 0;
  std::uint64_t n = 0;
  std::string basis = "trivial";
  std::string basis_file;
  unsigned k = 2;
  unsigned samples = 5;
  std::uint64_t step_budget = 20'000'000;
};

int cmd_powers(const PowersArgs& a, std::ostream& out) {
  Stopwatch clock;
  if (a.d < 2) throw UsageError("--d must be at least 2");
  if (a.n < 1) throw UsageError("--n must be at least 1");
  if (a.k < 1) throw UsageError("--k must be at least 1");

  std::vector<BigInt> basis;
  if (!a.basis_file.empty()) {
    for (const auto& tok : read_tokens(a.basis_file)) {
      try {
        basis.emplace_back(tok);
      } catch (const std::exception&) {
        throw UsageError("not an integer in basis file: '" + tok + "'");
      }
      if (basis.back() < 0) throw UsageError("basis entries must be nonnegative");
    }
  } else if (a.basis == "trivial") {
    basis.push_back(0);
    for (const auto& p : power_set(a.d, a.n)) basis.push_back(p);
  } else {
    throw UsageError("--basis must be 'trivial' (or use --basis-file)");
  }

  const auto graph = build_basis_graph(basis, a.d, a.n);
  const auto m = graph.vertices.size();
  const Rational delta(static_cast<long long>(a.n), static_cast<long long>(std::max<std::size_t>(m, 1)));
  const double delta_d = static_cast<double>(a.n) / static_cast<double>(std::max<std::size_t>(m, 1));
  const auto core = min_degree_subgraph(graph, delta, PeelOrder::lowest_first);
  const auto core_alt = min_degree_subgraph(graph, delta, PeelOrder::highest_first);

  // Sampled walk counts from core vertices (or from the whole graph if the core is empty).
  const BasisGraph& walk_graph = core.vertices.empty() ? graph : core;
  Rng rng(a.common.seed);
  PathOptions popts;
  popts.step_budget = a.step_budget;
  nlohmann::json samples = nlohmann::json::array();
  bool bound_ok = true;
  std::uint64_t identities = 0;
  for (unsigned s = 0; s < a.samples && !walk_graph.vertices.empty(); ++s) {
    const auto from = static_cast<std::size_t>(rng.uniform(walk_graph.vertices.size()));
    const auto to = static_cast<std::size_t>(rng.uniform(walk_graph.vertices.size()));
    const auto walks = count_walks(walk_graph, from, a.k, popts);
    const auto paths = count_paths(walk_graph, from, to, a.k, popts);
    identities += walks.identities_checked + paths.identities_checked;
    nlohmann::json entry{{"from", encode(walk_graph.vertices[from])},
                         {"to", encode(walk_graph.vertices[to])},
                         {"walks_from", walks.count},
                         {"walks_budget_exceeded", walks.budget_exceeded},
                         {"paths_between", paths.count},
                         {"paths_budget_exceeded", paths.budget_exceeded}};
    if (!core.vertices.empty() && delta_d > a.k) {
      const double bound = walk_power_bound(delta_d, a.k);
      const bool holds = static_cast<double>(walks.count) > bound;
      entry["walk_lower_bound"] = bound;
      entry["walk_lower_bound_holds"] = holds;
      if (!walks.budget_exceeded) bound_ok = bound_ok && holds;
    }
    samples.push_back(entry);
  }

  RunReport r;
  r.command = "powers";
  r.parameters = {{"d", a.d}, {"n", a.n}, {"k", a.k}, {"basis", a.basis_file.empty() ? a.basis : "file"},
                  {"samples", a.samples}};
  r.seed = a.common.seed;
  r.body["graph"] = {{"vertices", m},
                     {"edges", graph.edges.size()},
                     {"missing", graph.missing.size()},
                     {"complete", graph.complete()}};
  if (!graph.complete()) r.body["graph"]["missing_powers"] = encode(graph).at("missing");
  r.body["core"] = {{"delta", delta.str()},
                    {"delta_value", delta_d},
                    {"vertices", core.vertices.size()},
                    {"edges", core.edges.size()},
                    {"empty", core.vertices.empty()},
                    {"order_independent", core.vertices == core_alt.vertices}};
  r.body["paths"] = {{"k", a.k}, {"samples", samples}, {"identities_checked", identities}};
  r.body["exponent"] = {{"d", a.d}, {"value", powers_exponent(a.d)},
                        {"formula", "3/4 - 1/(2 sqrt d) - 1/(2(d-1))"}};
  r.bounds["basis_size_lower_exponent"] = powers_exponent(a.d);
  r.exit_status = bound_ok && core.vertices == core_alt.vertices ? kVerified : kVerificationFailed;
  r.wall_time = clock.seconds();
  return emit(r, a.common, out);
}

// ---------------------------------------------------------------------------

struct CheckArgs {
  Common common;
  std::string report;
};

int cmd_check(const CheckArgs& a, std::ostream& out) {
  Stopwatch clock;
  std::ifstream in(a.report);
  if (!in) throw UsageError("cannot read " + a.report);
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw UsageError(std::string("report is not JSON: ") + e.what());
  }
  const auto command = j.value("command", std::string{});
  const auto opts = verify_options(a.common);
  RunReport r;
  r.command = "check";
  r.parameters = {{"report", a.report}, {"checked_command", command}};
  if (command == "universal") {
    const auto res = decode_universal(j.at("result"));
    const Group& g = res.set.group();
    r.group = encode(g.spec());
    const Subset scope = res.scope ? *res.scope : Subset::full(g);
    r.verdict = verify_universal_for(res.set, scope, std::min<unsigned>(res.k, static_cast<unsigned>(scope.size())), opts);
  } else if (command == "basis") {
    const auto res = decode_basis(j.at("result"));
    r.group = encode(res.target.group().spec());
    r.verdict = verify_basis(res.basis, res.target);
    const Group& g = res.target.group();
    bool translators_ok = true;
    for (const auto& t : res.translators) {
      translators_ok = translators_ok && res.basis.contains(t.g);
      for (Element e : t.block) translators_ok = translators_ok && res.universal.set.contains(g.mul(g.inv(t.g), e));
    }
    r.body["translators_ok"] = translators_ok;
    if (!translators_ok) r.verdict->pass = false;
  } else {
    throw UsageError("check supports universal and basis reports, got '" + command + "'");
  }
  r.exit_status = exit_status_for(*r.verdict);
  r.wall_time = clock.seconds();
  return emit(r, a.common, out);
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Universal sets, small bases and basis graphs for finite groups", "unisets"};
  app.require_subcommand(1);

  UniversalArgs ua;
  auto* universal = app.add_subcommand("universal", "Construct and verify a k-universal set");
  universal->add_option("--group,-g", ua.group, "cyclic:N, sym:N, abelian:N1,N2,... or product(A;B;...)")->required();
  universal->add_option("--k,-k", ua.k, "Universality order")->required();
  universal->add_option("--method,-m", ua.method, "Construction")
      ->check(CLI::IsMember({"auto", "random", "singer", "tuple", "abelian", "symmetric"}));
  add_common(universal, ua.common);

  BasisArgs ba;
  auto* basis = app.add_subcommand("basis", "Build a basis B with A inside BB");
  basis->add_option("--group,-g", ba.group, "Group spec")->required();
  auto* a_inline = basis->add_option("--a", ba.a_inline, "Comma-separated element indices of A");
  auto* a_file = basis->add_option("--a-file", ba.a_file, "File of whitespace-separated element indices");
  a_inline->excludes(a_file);
  basis->add_option("--k", ba.k, "Block size override");
  basis->add_option("--x", ba.x_inline, "Comma-separated override for the non-doubling set X");
  add_common(basis, ba.common);

  PowersArgs pa;
  auto* powers = app.add_subcommand("powers", "Basis graph statistics for the d-th powers up to n^d");
  powers->add_option("--d", pa.d, "Exponent (>= 2)")->required();
  powers->add_option("--n", pa.n, "Number of powers")->required();
  auto* trivial = powers->add_option("--basis", pa.basis, "'trivial' for {0} u P_d(n)");
  auto* bfile = powers->add_option("--basis-file", pa.basis_file, "File of whitespace-separated basis integers");
  trivial->excludes(bfile);
  powers->add_option("--k", pa.k, "Path length");
  powers->add_option("--samples", pa.samples, "Number of sampled start vertices");
  powers->add_option("--step-budget", pa.step_budget, "DFS step cap per count");
  add_common(powers, pa.common);

  CheckArgs ca;
  auto* check = app.add_subcommand("check", "Re-verify a JSON report written by universal or basis");
  check->add_option("report", ca.report, "Report file")->required();
  add_common(check, ca.common);

  try {
    std::vector<std::string> args;
    for (int i = argc - 1; i > 0; --i) args.emplace_back(argv[i]);
    app.parse(std::move(args));
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return 0;
    }
    err << "usage error: " << e.what() << "\n";
    return kUsage;
  }

  try {
    if (universal->parsed()) return cmd_universal(ua, out);
    if (basis->parsed()) return cmd_basis(ba, out);
    if (powers->parsed()) return cmd_powers(pa, out);
    return cmd_check(ca, out);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kConstructionError;
  }
}

}  // namespace unisets::cli
