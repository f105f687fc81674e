// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "cohann/cli.hpp"
#include "cohann/suite.hpp"

using namespace cohann;
using nlohmann::json;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;

  void require(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      detail += (detail.empty() ? "" : "; ") + what;
    }
  }
};

const Scenario& scenario(const std::string& id) {
  for (const auto& s : bundled_scenarios())
    if (s.id == id) return s;
  throw std::runtime_error("no scenario " + id);
}

void run_scenario(Outcome& o, const std::string& id) {
  auto rep = scenario(id).run();
  std::size_t passed = 0;
  for (const auto& c : rep.checks) {
    passed += c.passed;
    if (!c.passed) o.require(false, c.name + (c.detail.empty() ? "" : " [" + c.detail + "]"));
  }
  o.require(!rep.checks.empty(), "scenario " + id + " verified nothing");
  if (o.ok) o.detail = std::to_string(passed) + " checks";
}

json command(const std::string& name, const std::string& sess, std::vector<std::string> modules = {},
             std::optional<unsigned> degree = {}) {
  CommandOptions o;
  o.command = name;
  o.session = std::string(COHANN_SESSIONS) + "/" + sess + ".toml";
  o.modules = std::move(modules);
  o.degree = degree;
  auto r = run_command(o);
  r.report["exit_code"] = r.exit_code;
  return r.report;
}

std::vector<std::string> basis(const json& ideal) { return ideal["basis"].get<std::vector<std::string>>(); }

Outcome c1() {
  Outcome o;
  run_scenario(o, "01");
  for (const std::string s : {"dual_numbers", "dual_numbers_f101"}) {
    for (unsigned n = 1; n <= 3; ++n)
      o.require(basis(command("ca-witness", s, {"M"}, n)["result"]["ideal"]) == std::vector<std::string>{"x"},
                s + " ca-witness n=" + std::to_string(n));
    o.require(basis(command("jacobian", s)["result"]["ideal"]) == std::vector<std::string>{"x"}, s + " jacobian");
    o.require(command("sandwich", s, {"M", "F"}, 3)["result"]["verdict"] == "VERIFIED", s + " sandwich");
  }
  return o;
}

Outcome c3() {
  Outcome o;
  run_scenario(o, "03");
  o.require(command("sandwich", "node", {"M", "N"}, 3)["result"]["verdict"] == "VERIFIED", "node sandwich");
  o.require(command("sandwich", "cusp", {"M", "N"}, 3)["result"]["verdict"] == "VERIFIED", "cusp sandwich");
  return o;
}

Outcome c11() {
  Outcome o;
  run_scenario(o, "11");
  CommandOptions v;
  v.command = "verify-paper";
  auto t0 = std::chrono::steady_clock::now();
  auto a = run_command(v);
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  auto b = run_command(v);
  o.require(a.exit_code == 0, "verify-paper exit " + std::to_string(a.exit_code));
  o.require(render_json(a.report) == render_json(b.report), "verify-paper payloads differ");
  o.require(secs < 60.0, "verify-paper took " + std::to_string(secs) + " s");
  return o;
}

Outcome scenario_only(const std::string& id) {
  Outcome o;
  run_scenario(o, id);
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    int number;
    double limit_seconds;
    std::function<Outcome()> run;
  };
  std::vector<Criterion> criteria{
      {1, 5, c1},
      {2, 60, [] { return scenario_only("02"); }},
      {3, 10, c3},
      {4, 60, [] { return scenario_only("04"); }},
      {5, 60, [] { return scenario_only("05"); }},
      {6, 10, [] { return scenario_only("06"); }},
      {7, 60, [] { return scenario_only("07"); }},
      {8, 60, [] { return scenario_only("08"); }},
      {9, 60, [] { return scenario_only("09"); }},
      {10, 60, [] { return scenario_only("10"); }},
      {11, 120, c11},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    Outcome o;
    auto t0 = std::chrono::steady_clock::now();
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.ok = false;
      o.detail = std::string("exception: ") + e.what();
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (secs > c.limit_seconds) o.require(false, "over the " + std::to_string(c.limit_seconds) + " s limit");
    std::printf("criterion %d: %s (%.3f s) %s\n", c.number, o.ok ? "PASS" : "FAIL", secs, o.detail.c_str());
    failures += !o.ok;
  }
  return failures == 0 ? 0 : 1;
}
