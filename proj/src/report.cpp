#include "gyro/report.hpp"

#include <cstdio>

namespace gyro {

namespace {

std::string formatDouble(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3e", v);
  return buf;
}

std::string formatWitness(const Json& w) {
  std::string s = "(";
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) s += ", ";
    s += std::to_string(w[i].get<std::uint32_t>());
  }
  return s + ")";
}

}  // namespace

Json toJson(const CheckResult& c) {
  Json j;
  j["check"] = c.name;
  j["status"] = to_string(c.status);
  j["violations"] = c.violations;
  j["witness"] = c.witnesses;
  if (!c.note.empty()) j["note"] = c.note;
  return j;
}

Json toJson(const ResidualCheck& c) {
  Json j;
  j["check"] = c.name;
  j["status"] = c.passed() ? "pass" : "fail";
  j["max_residual"] = c.maxResidual;
  j["tolerance"] = c.tolerance;
  j["samples"] = c.samples;
  return j;
}

Json toJson(const CancellationReport& r) {
  Json out = Json::array();
  for (std::size_t i = 0; i < r.laws.size(); ++i) {
    Json j = toJson(r.laws[i]);
    j["max_residual"] = r.maxResidual[i];
    out.push_back(std::move(j));
  }
  return out;
}

Json toJson(const CriterionReport& r) {
  Json out = Json::array();
  for (const CheckResult* c : {&r.gyrationInvariance, &r.cosetDisplacement}) {
    Json j = toJson(*c);
    j["mode"] = r.mode;
    if (r.mode == "sampled") {
      j["samples"] = r.samples;
      j["seed"] = r.seed;
    }
    out.push_back(std::move(j));
  }
  return out;
}

void Report::add(const CheckResult& c) {
  checks.push_back(toJson(c));
  if (c.status == Status::Fail) failed = true;
}

void Report::add(const ResidualCheck& c) {
  checks.push_back(toJson(c));
  if (!c.passed()) failed = true;
}

void Report::add(const CancellationReport& r) {
  for (auto& j : toJson(r)) checks.push_back(j);
  if (!r.allPassed()) failed = true;
}

void Report::add(const CriterionReport& r) {
  for (auto& j : toJson(r)) checks.push_back(j);
  if (!r.passed()) failed = true;
}

Json Report::json() const {
  Json j;
  j["command"] = command;
  j["status"] = failed ? "fail" : "pass";
  j["checks"] = checks;
  j["result"] = result;
  return j;
}

void Report::writeJson(std::ostream& out) const { out << json().dump(2) << '\n'; }

void Report::writeText(std::ostream& out) const {
  for (const auto& l : lines) out << l << '\n';
  for (const auto& c : checks) {
    out << "  [" << c["status"].get<std::string>() << "] " << c["check"].get<std::string>();
    if (c.contains("max_residual")) {
      out << "  max " << formatDouble(c["max_residual"].get<double>());
      if (c.contains("tolerance")) out << " (tol " << formatDouble(c["tolerance"].get<double>()) << ")";
    }
    if (c.contains("violations") && c["violations"].get<std::size_t>() > 0) {
      out << "  " << c["violations"].get<std::size_t>() << " violation(s)";
      if (!c["witness"].empty()) out << ", first witness " << formatWitness(c["witness"][0]);
    }
    if (c.contains("note")) out << "  " << c["note"].get<std::string>();
    out << '\n';
  }
}

}  // namespace gyro
