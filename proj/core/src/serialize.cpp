#include "unisets/serialize.hpp"

#include "unisets/error.hpp"

namespace unisets {

namespace {

template <class F>
auto guarded(const char* what, F&& f) {
  try {
    return f();
  } catch (const json::exception& e) {
    throw Error(ErrorCode::parse_error, std::string(what) + ": " + e.what());
  }
}

std::string verdict_mode(Verdict::Mode m) { return m == Verdict::Mode::exact ? "exact" : "sampled"; }

}  // namespace

json encode(const GroupSpec& spec) {
  json j{{"kind", std::string(to_string(spec.kind))}};
  switch (spec.kind) {
    case GroupSpec::Kind::cyclic:
    case GroupSpec::Kind::symmetric:
      j["n"] = spec.n;
      break;
    case GroupSpec::Kind::product:
      j["factors"] = json::array();
      for (const auto& f : spec.factors) j["factors"].push_back(encode(f));
      break;
    case GroupSpec::Kind::table:
      j["n"] = spec.n;
      j["table"] = spec.table;
      break;
  }
  return j;
}

GroupSpec decode_group_spec(const json& j) {
  return guarded("group spec", [&] {
    if (j.is_string()) return parse_group_spec(j.get<std::string>());
    const auto kind = j.at("kind").get<std::string>();
    if (kind == "cyclic") return GroupSpec::cyclic(j.at("n").get<std::uint64_t>());
    if (kind == "symmetric") return GroupSpec::symmetric(j.at("n").get<std::uint64_t>());
    if (kind == "product") {
      std::vector<GroupSpec> fs;
      for (const auto& f : j.at("factors")) fs.push_back(decode_group_spec(f));
      return GroupSpec::product(std::move(fs));
    }
    if (kind == "table") return GroupSpec::from_table(j.at("table").get<std::vector<std::vector<Element>>>());
    throw Error(ErrorCode::parse_error, "unknown group kind " + kind);
  });
}

json encode(const Subset& s) { return s.elements(); }

Subset decode_subset(const Group& g, const json& j) {
  return guarded("subset", [&] {
    Subset s(g);
    for (const auto& e : j) {
      const auto v = e.get<std::uint64_t>();
      if (v >= g.order()) throw Error(ErrorCode::parse_error, "element " + std::to_string(v) + " out of range");
      s.insert(static_cast<Element>(v));
    }
    return s;
  });
}

json encode(const Verdict& v) {
  json j{{"mode", verdict_mode(v.mode)}, {"pass", v.pass}, {"witness", v.witness}};
  if (v.mode == Verdict::Mode::sampled) {
    j["trials"] = v.trials;
    j["failure_bound"] = v.failure_bound;
  }
  j["seed"] = v.seed ? json(*v.seed) : json(nullptr);
  if (v.characterizations_agree) j["characterizations_agree"] = *v.characterizations_agree;
  return j;
}

Verdict decode_verdict(const json& j) {
  return guarded("verdict", [&] {
    Verdict v;
    const auto mode = j.at("mode").get<std::string>();
    if (mode != "exact" && mode != "sampled") throw Error(ErrorCode::parse_error, "unknown verdict mode " + mode);
    v.mode = mode == "exact" ? Verdict::Mode::exact : Verdict::Mode::sampled;
    v.pass = j.at("pass").get<bool>();
    v.witness = j.value("witness", std::vector<Element>{});
    v.trials = j.value("trials", std::uint64_t{0});
    v.failure_bound = j.value("failure_bound", 0.0);
    if (j.contains("seed") && !j["seed"].is_null()) v.seed = j["seed"].get<std::uint64_t>();
    if (j.contains("characterizations_agree")) v.characterizations_agree = j["characterizations_agree"].get<bool>();
    return v;
  });
}

json encode(const UniversalSetResult& r) {
  json j{{"group", encode(r.set.group().spec())},
         {"k", r.k},
         {"method", std::string(to_string(r.method))},
         {"set", encode(r.set)},
         {"size", r.set.size()},
         {"size_bound", r.size_bound},
         {"bound_guaranteed", r.bound_guaranteed},
         {"lower_bound", r.lower_bound()},
         {"attempts", r.attempts},
         {"verdict", encode(r.verdict)},
         {"metrics", r.metrics},
         {"notes", r.notes}};
  j["scope"] = r.scope ? encode(*r.scope) : json(nullptr);
  j["seed"] = r.seed ? json(*r.seed) : json(nullptr);
  return j;
}

UniversalSetResult decode_universal(const json& j) {
  return guarded("universal set", [&] {
    const Group g = Group::make(decode_group_spec(j.at("group")));
    UniversalSetResult r{.set = decode_subset(g, j.at("set")), .k = j.at("k").get<unsigned>()};
    const auto m = method_from_string(j.at("method").get<std::string>());
    if (!m) throw Error(ErrorCode::parse_error, "unknown method");
    r.method = *m;
    if (j.contains("scope") && !j["scope"].is_null()) r.scope = decode_subset(g, j["scope"]);
    if (j.contains("seed") && !j["seed"].is_null()) r.seed = j["seed"].get<std::uint64_t>();
    r.size_bound = j.value("size_bound", 0.0);
    r.bound_guaranteed = j.value("bound_guaranteed", false);
    r.attempts = j.value("attempts", 0u);
    r.verdict = decode_verdict(j.at("verdict"));
    r.metrics = j.value("metrics", std::map<std::string, double>{});
    r.notes = j.value("notes", std::vector<std::string>{});
    return r;
  });
}

json encode(const UniversalTuple& t) {
  json sets = json::array();
  for (const auto& s : t.sets) sets.push_back(encode(s));
  json j{{"group", encode(t.group().spec())},
         {"k", t.k()},
         {"method", t.method},
         {"sets", sets},
         {"targets", t.targets},
         {"size_bounds", t.size_bounds},
         {"cost", t.cost()}};
  j["verdict"] = t.verdict ? encode(*t.verdict) : json(nullptr);
  if (t.binary) j["binary"] = {{"t", t.binary->t}, {"p", t.binary->p}, {"total_bits", t.binary->total_bits}};
  return j;
}

UniversalTuple decode_tuple(const json& j) {
  return guarded("tuple", [&] {
    const Group g = Group::make(decode_group_spec(j.at("group")));
    UniversalTuple t;
    for (const auto& s : j.at("sets")) t.sets.push_back(decode_subset(g, s));
    if (t.sets.empty()) throw Error(ErrorCode::parse_error, "tuple has no entries");
    t.method = j.value("method", std::string{});
    t.targets = j.at("targets").get<std::vector<double>>();
    t.size_bounds = j.value("size_bounds", std::vector<double>{});
    if (j.contains("verdict") && !j["verdict"].is_null()) t.verdict = decode_verdict(j["verdict"]);
    if (j.contains("binary")) {
      const auto& b = j["binary"];
      t.binary = BinaryTupleInfo{b.at("t").get<std::vector<double>>(), b.at("p").get<std::vector<unsigned>>(),
                                 b.at("total_bits").get<unsigned>()};
    }
    return t;
  });
}

json encode(const CoveringResult& c) {
  return {{"set", encode(c.y)},
          {"size", c.y.size()},
          {"strategy", c.strategy},
          {"regime_size", c.regime_size},
          {"expected_size", c.expected_size},
          {"in_regime", c.in_regime},
          {"attempts", c.attempts}};
}

json encode(const BasisResult& b) {
  json translators = json::array();
  for (const auto& t : b.translators)
    translators.push_back({{"i", t.i}, {"j", t.j}, {"block", t.block}, {"g", t.g}, {"y", t.y}});
  return {{"group", encode(b.target.group().spec())},
          {"target", encode(b.target)},
          {"basis", encode(b.basis)},
          {"basis_size", b.basis.size()},
          {"x", encode(b.x)},
          {"x_source", b.x_source},
          {"covering", encode(b.covering)},
          {"universal", encode(b.universal)},
          {"translators", translators},
          {"translator_allowance", b.translator_allowance()},
          {"k", b.k},
          {"k_formula", b.k_formula},
          {"size_budget", b.size_budget},
          {"en_bound_applicable", b.en_bound_applicable},
          {"target_oversized", b.target_oversized},
          {"seed", b.seed},
          {"verdict", encode(b.verdict)},
          {"notes", b.notes}};
}

BasisResult decode_basis(const json& j) {
  return guarded("basis", [&] {
    const Group g = Group::make(decode_group_spec(j.at("group")));
    const auto& cov = j.at("covering");
    BasisResult b{.basis = decode_subset(g, j.at("basis")),
                  .target = decode_subset(g, j.at("target")),
                  .x = decode_subset(g, j.at("x")),
                  .x_source = j.value("x_source", std::string{}),
                  .covering = {.y = decode_subset(g, cov.at("set")),
                               .strategy = cov.value("strategy", std::string{}),
                               .regime_size = cov.value("regime_size", 0.0),
                               .expected_size = cov.value("expected_size", 0.0),
                               .in_regime = cov.value("in_regime", false),
                               .attempts = cov.value("attempts", 0u)},
                  .universal = decode_universal(j.at("universal"))};
    for (const auto& t : j.at("translators"))
      b.translators.push_back({t.at("i").get<std::size_t>(), t.at("j").get<std::size_t>(),
                               t.at("block").get<std::vector<Element>>(), t.at("g").get<Element>(),
                               t.at("y").get<Element>()});
    b.k = j.at("k").get<unsigned>();
    b.k_formula = j.value("k_formula", 0.0);
    b.size_budget = j.value("size_budget", 0.0);
    b.en_bound_applicable = j.value("en_bound_applicable", false);
    b.target_oversized = j.value("target_oversized", false);
    b.seed = j.value("seed", std::uint64_t{0});
    b.verdict = decode_verdict(j.at("verdict"));
    b.notes = j.value("notes", std::vector<std::string>{});
    return b;
  });
}

json encode(const BigInt& x) {
  if (x >= 0 && x <= BigInt(std::numeric_limits<std::int64_t>::max())) return x.convert_to<std::int64_t>();
  if (x < 0 && x >= BigInt(std::numeric_limits<std::int64_t>::min())) return x.convert_to<std::int64_t>();
  return x.str();
}

BigInt decode_bigint(const json& j) {
  return guarded("integer", [&] {
    if (j.is_number_integer()) return j.is_number_unsigned() ? BigInt(j.get<std::uint64_t>()) : BigInt(j.get<std::int64_t>());
    try {
      return BigInt(j.get<std::string>());
    } catch (const std::runtime_error&) {
      throw Error(ErrorCode::parse_error, "not an integer");
    }
  });
}

json encode(const BasisGraph& g) {
  json vertices = json::array(), edges = json::array(), missing = json::array();
  for (const auto& v : g.vertices) vertices.push_back(encode(v));
  for (const auto& e : g.edges) edges.push_back({encode(g.vertices[e.u]), encode(g.vertices[e.v]), encode(e.label)});
  for (const auto& m : g.missing) missing.push_back(encode(m));
  return {{"d", g.d}, {"n", g.n}, {"vertices", vertices}, {"edges", edges}, {"missing", missing},
          {"complete", g.complete()}};
}

BasisGraph decode_graph(const json& j) {
  return guarded("basis graph", [&] {
    BasisGraph g;
    g.d = j.at("d").get<unsigned>();
    g.n = j.at("n").get<std::uint64_t>();
    for (const auto& v : j.at("vertices")) g.vertices.push_back(decode_bigint(v));
    if (!std::is_sorted(g.vertices.begin(), g.vertices.end()))
      throw Error(ErrorCode::parse_error, "vertices must be sorted");
    for (const auto& e : j.at("edges")) {
      const auto u = g.index_of(decode_bigint(e.at(0)));
      const auto v = g.index_of(decode_bigint(e.at(1)));
      if (!u || !v) throw Error(ErrorCode::parse_error, "edge endpoint is not a vertex");
      g.edges.push_back({*u, *v, decode_bigint(e.at(2))});
    }
    for (const auto& m : j.at("missing")) g.missing.push_back(decode_bigint(m));
    return g;
  });
}

}  // namespace unisets
