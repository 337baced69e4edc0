#include "report.hpp"

#include "unisets/serialize.hpp"

namespace unisets::cli {

int exit_status_for(const Verdict& v) {
  if (!v.pass) return kVerificationFailed;
  return v.mode == Verdict::Mode::exact ? kVerified : kSampledOnly;
}

nlohmann::json bound_comparison(double bound, double achieved, bool guaranteed) {
  nlohmann::json j{{"bound", bound}, {"achieved", achieved}, {"guaranteed", guaranteed}};
  j["ratio"] = bound > 0 ? nlohmann::json(achieved / bound) : nlohmann::json(nullptr);
  return j;
}

nlohmann::json RunReport::to_json() const {
  nlohmann::json j{{"schema_version", 1},
                   {"command", command},
                   {"group", group},
                   {"parameters", parameters},
                   {"bounds", bounds},
                   {"wall_time_s", wall_time},
                   {"exit_status", exit_status}};
  j["seed"] = seed ? nlohmann::json(*seed) : nlohmann::json(nullptr);
  j["verification"] = verdict ? encode(*verdict) : nlohmann::json(nullptr);
  j.update(body);
  return j;
}

namespace {

void flat(std::ostream& out, const std::string& prefix, const nlohmann::json& j) {
  if (j.is_object()) {
    for (const auto& [key, value] : j.items()) flat(out, prefix.empty() ? key : prefix + "." + key, value);
    return;
  }
  std::string text = j.dump();
  if (text.size() > 100) text = text.substr(0, 96) + " ...";
  out << prefix << ": " << text << "\n";
}

}  // namespace

void print_text(std::ostream& out, const RunReport& r) {
  out << "command: " << r.command << "\n";
  if (!r.group.is_null()) out << "group: " << decode_group_spec(r.group).to_string() << "\n";
  flat(out, "param", r.parameters);
  if (r.verdict) {
    out << "verification: " << (r.verdict->pass ? "pass" : "FAIL") << " ("
        << (r.verdict->mode == Verdict::Mode::exact ? "exact" : "sampled") << ")\n";
    if (!r.verdict->witness.empty()) out << "witness: " << nlohmann::json(r.verdict->witness).dump() << "\n";
  }
  flat(out, "bound", r.bounds);
  flat(out, "", r.body);
  if (r.seed) out << "seed: " << *r.seed << "\n";
  out << "wall_time_s: " << r.wall_time << "\n";
  out << "exit_status: " << r.exit_status << "\n";
}

}  // namespace unisets::cli
