#include "trn/cli_format.hpp"

#include <cstdio>

#include <nlohmann/json.hpp>

namespace trn {

namespace {

using json = nlohmann::ordered_json;

std::string decimal(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.15g", v);
  return buf;
}

}  // namespace

std::string format_count_json(int n, const BigCount& count) {
  json j;
  j["n"] = n;
  j["count"] = count.str();
  return j.dump();
}

std::string format_covers_json(const PathCoverProfile& profile) {
  json j;
  j["n"] = profile.m;
  json counts = json::array();
  for (const auto& c : profile.counts) counts.push_back(c.str());
  j["counts"] = counts;
  return j.dump();
}

std::string format_triangular_json(const TriangularResult& r) {
  json j;
  j["m1"] = r.m1;
  j["m2"] = r.m2;
  j["m3"] = r.m3;
  j["n"] = r.m1 + r.m2 + r.m3;
  j["mode"] = r.mode;
  if (r.seed)
    j["seed"] = *r.seed;
  else
    j["seed"] = nullptr;
  j["count"] = r.count.str();
  j["lower_bound"] = r.bound.str();
  j["difference"] = BigCount(r.count - r.bound).str();
  j["equal"] = (r.count == r.bound);
  j["brute_force_checked"] = r.brute_force_checked;
  if (r.brute_force_checked)
    j["brute_force_agrees"] = r.brute_force_agrees;
  else
    j["brute_force_agrees"] = nullptr;
  return j.dump();
}

std::string format_report_json(McKind kind, const ExperimentReport& report) {
  json j;
  j["kind"] = to_string(kind);
  j["n"] = report.n;
  j["samples"] = report.samples;
  j["seed"] = report.seed;
  j["mean"] = report.mean;
  j["variance"] = report.variance;
  j["std_error"] = report.std_error;
  j["theoretical"] = report.theoretical;
  j["z_score"] = report.z_score;
  return j.dump();
}

std::string format_convergence_csv(const std::vector<ConvergenceRow>& rows) {
  std::string out = "m,exact_log,asymptotic_log,ratio\n";
  for (const auto& r : rows) {
    out += std::to_string(r.m);
    out += ',';
    out += decimal(r.exact_log);
    out += ',';
    out += decimal(r.asymptotic_log);
    out += ',';
    out += decimal(r.ratio);
    out += '\n';
  }
  return out;
}

std::string format_convergence_json(const std::vector<ConvergenceRow>& rows) {
  json arr = json::array();
  for (const auto& r : rows) {
    json j;
    j["m"] = r.m;
    j["exact_log"] = r.exact_log;
    j["asymptotic_log"] = r.asymptotic_log;
    j["ratio"] = r.ratio;
    arr.push_back(j);
  }
  return arr.dump();
}

}  // namespace trn
