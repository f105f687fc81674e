#include "cohann/cli.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>

#include "cohann/artinian.hpp"
#include "cohann/different.hpp"
#include "cohann/error.hpp"
#include "cohann/ext_engine.hpp"
#include "cohann/fault.hpp"
#include "cohann/loci.hpp"
#include "cohann/parser.hpp"
#include "cohann/session.hpp"
#include "cohann/suite.hpp"

namespace cohann {

using nlohmann::json;

namespace {

/// Accumulates a command's payload and checks.
struct Context {
  explicit Context(const CommandOptions& o) : opts(o) {}

  const CommandOptions& opts;
  std::optional<Session> session;
  json result = json::object();
  VerificationReport checks;
  std::size_t printed_ideals = 0;
  std::vector<std::string> reparse_failures;

  const Session& s() const {
    if (!session) throw Error("command '" + opts.command + "' needs --session");
    return *session;
  }
  const QuotientRing& ring() const { return *s().ring; }

  unsigned degree(unsigned fallback) const { return opts.degree.value_or(fallback); }
  unsigned need_degree() const {
    if (!opts.degree) throw Error("command '" + opts.command + "' needs --degree");
    return *opts.degree;
  }

  /// An R-module by name.
  const FPModule& module(const std::string& name) const {
    const FPModule& m = s().module(name);
    const auto& base = s().module_base.at(name);
    if (!base.empty()) throw Error("module '" + name + "' is over subalgebra '" + base + "', not the ring");
    return m;
  }
  std::vector<FPModule> modules(const std::vector<std::string>& names) const {
    std::vector<FPModule> out;
    for (const auto& n : names) out.push_back(module(n));
    return out;
  }
  const FPModule& one_module() const {
    if (opts.modules.size() != 1) throw Error("command '" + opts.command + "' needs exactly one --module");
    return module(opts.modules.front());
  }
  std::vector<FPModule> some_modules() const {
    if (opts.modules.empty()) throw Error("command '" + opts.command + "' needs --modules");
    return modules(opts.modules);
  }
  const SubalgebraMap& subalgebra() const {
    if (!opts.subalgebra) throw Error("command '" + opts.command + "' needs --subalgebra");
    return s().subalgebra(*opts.subalgebra);
  }
  Polynomial element() const {
    if (!opts.element) throw Error("command '" + opts.command + "' needs --element");
    return parse_poly(*opts.element, s().ambient);
  }
  std::size_t codim() const { return opts.codim.value_or(ring().presentation().size()); }

  /// Reduced basis and generators modulo `base`; both reparse to the same ideal.
  json ideal(const Ideal& i, const Ideal& base) {
    json basis = to_strings(i.gb().elements);
    json gens = to_strings(generators_modulo(i, base));
    std::vector<Polynomial> back;
    for (const auto& str : basis) back.push_back(parse_poly(str.get<std::string>(), i.ring()));
    ++printed_ideals;
    if (!(Ideal(i.ring(), back) == i)) reparse_failures.push_back(basis.dump());
    return {{"basis", basis}, {"generators", gens}};
  }
  json ideal(const Ideal& i) { return ideal(i, ring().relations()); }

  void add_report(const VerificationReport& r, const std::string& prefix = {}) { checks.append(r, prefix); }
};

json matrix_json(const Matrix& m) { return m.to_strings(); }

json module_json(const FPModule& m) {
  return {{"rank", m.rank()}, {"relations", matrix_json(m.relations())}};
}

json optional_dim(const std::optional<std::size_t>& d) { return d ? json(*d) : json(nullptr); }

void cmd_gb(Context& c) {
  if (c.opts.ideals.empty()) {
    c.result["relations"] = c.ideal(c.ring().relations(), Ideal::zero(c.s().ambient));
    return;
  }
  for (const auto& name : c.opts.ideals) c.result["ideals"][name] = c.ideal(c.s().ideal(name));
}

void cmd_dim(Context& c) {
  if (!c.opts.modules.empty()) {
    for (const auto& name : c.opts.modules)
      c.result["modules"][name] = optional_dim(vector_dimension(c.module(name)));
    return;
  }
  c.result["krull_dimension"] = krull_dimension(c.ring());
  auto sm = standard_monomials(c.ring());
  c.result["vector_dimension"] = sm.finite ? json(sm.monomials.size()) : json(nullptr);
}

void cmd_resolve(Context& c) {
  const FPModule& m = c.one_module();
  unsigned len = c.opts.length.value_or(c.degree(4));
  auto res = resolve_default(m, len);
  json maps = json::array();
  for (const auto& d : res.maps) maps.push_back(matrix_json(d));
  c.result["betti"] = res.betti();
  c.result["minimal"] = res.minimal;
  c.result["complete"] = res.complete;
  c.result["maps"] = maps;
  bool ok = true;
  for (std::size_t k = 1; k < res.length(); ++k)
    ok = ok && reduce_entries(c.ring(), res.d(k) * res.d(k + 1)).is_zero();
  c.checks.add("d^2 = 0", ok, std::to_string(res.length()) + " maps");
}

void cmd_ext(Context& c) {
  const FPModule& m = c.one_module();
  if (c.opts.targets.empty()) throw Error("command 'ext' needs --targets");
  unsigned n = c.need_degree();
  for (const auto& name : c.opts.targets) {
    auto e = ext_module(m, c.module(name), n);
    c.result["ext"][name] = {{"dimension", optional_dim(e.dimension())},
                             {"zero", e.is_zero()},
                             {"annihilator", c.ideal(e.annihilator)},
                             {"presentation", module_json(e.model.module)}};
  }
}

void cmd_ca_witness(Context& c) {
  auto w = ca_witness(c.one_module(), c.need_degree());
  c.result["ideal"] = c.ideal(w.ideal);
  c.result["ext_dimension"] = optional_dim(w.ext.dimension());
}

void cmd_ca_bound(Context& c) {
  auto b = ca_upper_bound(c.some_modules(), c.need_degree());
  json ws = json::object();
  for (std::size_t i = 0; i < b.witnesses.size(); ++i) ws[c.opts.modules[i]] = c.ideal(b.witnesses[i]);
  c.result["witnesses"] = ws;
  c.result["bound"] = c.ideal(b.bound);
}

void cmd_ndiff(Context& c) {
  auto nd = noether_different(c.ring(), c.subalgebra());
  c.result["ideal"] = c.ideal(nd.ideal);
  c.result["images"] = to_strings(nd.images);
  c.result["certificates"] = to_strings(nd.certificates);
}

void cmd_cert34(Context& c) {
  const auto& a = c.subalgebra();
  auto cert = cert_prop34(c.ring(), a);
  c.result["ideal"] = c.ideal(cert.ideal);
  c.result["base_annihilator"] = c.ideal(cert.base_annihilator, a.base_ring->relations());
  c.result["d"] = cert.d;
  c.result["free_over_base"] = cert.free_over_base;
  c.result["different"] = c.ideal(cert.different.ideal);
}

void cmd_jacobian(Context& c) {
  std::size_t k = c.codim();
  c.result["codim"] = k;
  c.result["ideal"] = c.ideal(jacobian_ideal(c.ring(), k));
}

void cmd_singular_locus(Context& c) {
  std::size_t k = c.codim();
  auto l = singular_locus_ideal(c.ring(), k);
  c.result["codim"] = k;
  c.result["ideal"] = c.ideal(l.ideal);
  c.result["provenance"] = l.provenance;
}

void cmd_radical_compare(Context& c) {
  if (c.opts.ideals.size() != 2) throw Error("command 'radical-compare' needs --ideals J,K");
  const Ideal& l = c.s().ideal(c.opts.ideals[0]);
  const Ideal& r = c.s().ideal(c.opts.ideals[1]);
  auto v = radical_compare(l, r);
  auto side = [](const std::vector<std::pair<Polynomial, bool>>& xs) {
    json out = json::array();
    for (const auto& [p, in] : xs) out.push_back({{"element", p.to_string()}, {"inside", in}});
    return out;
  };
  c.result["verdict"] = to_string(v.verdict);
  c.result["left_in_right"] = side(v.left_in_right);
  c.result["right_in_left"] = side(v.right_in_left);
}

void cmd_sandwich(Context& c) {
  std::size_t k = c.codim();
  Ideal cert = jacobian_ideal(c.ring(), k);
  if (c.opts.subalgebra) cert = ideal_sum(cert_prop34(c.ring(), c.subalgebra()).ideal, cert);
  unsigned n = c.degree(2 * static_cast<unsigned>(krull_dimension(c.ring())) + 1);
  auto rep = sandwich_check(c.ring(), cert, c.some_modules(), n, k);
  c.result["certificate"] = c.ideal(cert);
  c.result["degree"] = n;
  c.result["verdict"] = rep.passed() ? "VERIFIED" : "NOT VERIFIED";
  c.add_report(rep);
}

void cmd_splitting(Context& c) {
  c.add_report(verify_splitting_sequence(c.one_module(), c.element()));
}

void cmd_descent(Context& c) {
  const auto& a = c.subalgebra();
  std::vector<FPModule> targets;
  for (const auto& name : c.opts.targets) {
    const FPModule& t = c.s().module(name);
    if (c.s().module_base.at(name) != *c.opts.subalgebra)
      throw Error("descent target '" + name + "' is not over subalgebra '" + *c.opts.subalgebra + "'");
    targets.push_back(t);
  }
  if (targets.empty()) {
    std::vector<Polynomial> vars;
    for (std::size_t i = 0; i < a.base->arity(); ++i) vars.push_back(Polynomial::variable(a.base, i));
    targets.push_back(FPModule::cyclic(a.base_ring, vars));
    c.result["targets"] = "residue field of the base";
  }
  c.add_report(descent_check(c.ring(), a, c.element(), c.need_degree(), c.some_modules(), targets));
}

void cmd_artinian(Context& c) {
  FinDimAlgebra alg(c.s().ring);
  const std::string& sub = c.opts.subcommand;
  auto fd = [&](const std::string& name) { return FinDimModule::from_fpmodule(alg, c.module(name)); };
  c.result["algebra_dimension"] = alg.dimension();
  if (sub == "loewy") {
    c.result["loewy_length"] = alg.loewy_length();
  } else if (sub == "socle") {
    auto ls = loewy_socle(alg);
    json basis = json::array();
    for (std::size_t j = 0; j < ls.socle.cols(); ++j) basis.push_back(alg.element(ls.socle.column(j)).to_string());
    std::vector<Polynomial> gens;
    for (std::size_t j = 0; j < ls.socle.cols(); ++j) gens.push_back(alg.element(ls.socle.column(j)));
    c.result["socle_basis"] = basis;
    c.result["socle"] = c.ideal(c.ring().ideal(gens));
  } else if (sub == "ext-oracle") {
    if (c.opts.targets.empty()) throw Error("artinian ext-oracle needs --targets");
    unsigned n = c.need_degree();
    const FPModule& m = c.one_module();
    auto fm = fd(c.opts.modules.front());
    auto res = oracle_resolution(alg, fm, n + 1);
    c.result["ranks"] = res.ranks;
    for (const auto& name : c.opts.targets) {
      auto o = ext_linear_algebra(alg, res, fd(name), n);
      auto g = ext_module(m, c.module(name), n).dimension();
      c.result["ext"][name] = {{"oracle", o.dimension}, {"groebner", optional_dim(g)}};
      c.checks.add("oracle agrees for " + name, g && *g == o.dimension,
                   "oracle " + std::to_string(o.dimension) + ", groebner " +
                       (g ? std::to_string(*g) : std::string("infinite")));
    }
  } else if (sub == "filtration" || sub == "lemma42") {
    const FPModule& m = c.one_module();
    auto fm = FinDimModule::from_fpmodule(alg, m);
    auto k = FinDimModule::residue_field(alg);
    auto w = radical_filtration(alg, fm);
    json dims = json::array();
    for (const auto& z : w.filtration) dims.push_back(rank(z));
    c.result["module_dimension"] = fm.dimension();
    c.result["length"] = w.length();
    c.result["filtration_dimensions"] = dims;
    if (sub == "filtration") {
      c.add_report(building_report(alg, w, k), "against k: ");
    } else {
      std::vector<FinDimModule> samples{k, FinDimModule::regular(alg)};
      for (const auto& name : c.opts.targets) samples.push_back(fd(name));
      c.add_report(lemma42_check(alg, k, fm, c.degree(static_cast<unsigned>(w.length())), w, samples));
    }
  } else {
    throw Error("unknown artinian subcommand '" + sub + "' (loewy, socle, ext-oracle, filtration, lemma42)");
  }
}

void cmd_verify_paper(Context& c) {
  auto results = run_suite(c.opts.filter);
  if (results.empty()) throw Error("no scenario carries tag '" + c.opts.filter.value_or("") + "'");
  json scen = json::array();
  for (const auto& r : results) {
    std::size_t passed = 0;
    json checks = json::array();
    for (const auto& ch : r.report.checks) {
      passed += ch.passed;
      checks.push_back({{"name", ch.name}, {"status", ch.passed ? "pass" : "fail"}, {"detail", ch.detail}});
    }
    scen.push_back({{"id", r.scenario->id},
                    {"name", r.scenario->name},
                    {"tags", r.scenario->tags},
                    {"status", r.report.passed() ? "pass" : "fail"},
                    {"checks", checks}});
    c.checks.add(r.scenario->id + " " + r.scenario->name, r.report.passed(),
                 std::to_string(passed) + "/" + std::to_string(r.report.checks.size()) + " checks");
  }
  c.result["scenarios"] = scen;
}

const std::map<std::string, std::function<void(Context&)>>& handlers() {
  static const std::map<std::string, std::function<void(Context&)>> h{
      {"gb", cmd_gb},
      {"dim", cmd_dim},
      {"resolve", cmd_resolve},
      {"ext", cmd_ext},
      {"ca-witness", cmd_ca_witness},
      {"ca-bound", cmd_ca_bound},
      {"ndiff", cmd_ndiff},
      {"cert34", cmd_cert34},
      {"jacobian", cmd_jacobian},
      {"singular-locus", cmd_singular_locus},
      {"radical-compare", cmd_radical_compare},
      {"sandwich", cmd_sandwich},
      {"splitting", cmd_splitting},
      {"descent", cmd_descent},
      {"artinian", cmd_artinian},
      {"verify-paper", cmd_verify_paper},
  };
  return h;
}

json inputs_json(const CommandOptions& o) {
  json in = json::object();
  if (!o.subcommand.empty()) in["subcommand"] = o.subcommand;
  if (!o.modules.empty()) in["modules"] = o.modules;
  if (!o.targets.empty()) in["targets"] = o.targets;
  if (!o.ideals.empty()) in["ideals"] = o.ideals;
  if (o.degree) in["degree"] = *o.degree;
  if (o.length) in["length"] = *o.length;
  if (o.subalgebra) in["subalgebra"] = *o.subalgebra;
  if (o.element) in["element"] = *o.element;
  if (o.codim) in["codim"] = *o.codim;
  if (o.max_pairs) in["max_pairs"] = *o.max_pairs;
  if (o.filter) in["filter"] = *o.filter;
  return in;
}

}  // namespace

const std::vector<std::string>& command_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [k, v] : handlers()) out.push_back(k);
    return out;
  }();
  return names;
}

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream in(s);
  std::string item;
  while (std::getline(in, item, ',')) {
    auto b = item.find_first_not_of(" \t");
    auto e = item.find_last_not_of(" \t");
    if (b != std::string::npos) out.push_back(item.substr(b, e - b + 1));
  }
  return out;
}

CommandResult run_command(const CommandOptions& opts) {
  json report = {{"command", opts.command}, {"inputs", inputs_json(opts)}};
  if (!opts.subcommand.empty()) report["command"] = opts.command + " " + opts.subcommand;
  report["session"] = nullptr;
  gb_stats() = {};
  Context c(opts);
  int code = 0;
  try {
    if (opts.fault) {
      if (*opts.fault != "jacobian-offset") throw Error("unknown fault '" + *opts.fault + "'");
      inject_fault(Fault::JacobianOffset);
    }
    auto h = handlers().find(opts.command);
    if (h == handlers().end()) throw Error("unknown command '" + opts.command + "'");
    if (opts.session) {
      c.session = load_session(*opts.session);
      report["session"] = {{"digest", c.session->digest}, {"path", *opts.session}};
    }
    std::optional<ScopedGbOptions> budget;
    if (opts.max_pairs) budget.emplace(GbOptions{*opts.max_pairs});
    h->second(c);
    if (c.printed_ideals > 0)
      c.checks.add("printed ideals reparse to the same basis", c.reparse_failures.empty(),
                   c.reparse_failures.empty() ? std::to_string(c.printed_ideals) + " ideals"
                                              : c.reparse_failures.front());
    code = c.checks.checks.empty() || c.checks.passed() ? 0 : 2;
    report["status"] = code == 0 ? "ok" : "check failed";
    report["error"] = nullptr;
  } catch (const std::exception& e) {
    code = 1;
    report["status"] = "error";
    report["error"] = e.what();
  }
  inject_fault(Fault::None);
  json checks = json::array();
  for (const auto& ch : c.checks.checks)
    checks.push_back({{"name", ch.name}, {"status", ch.passed ? "pass" : "fail"}, {"detail", ch.detail}});
  report["checks"] = checks;
  report["result"] = c.result;
  const auto& st = gb_stats();
  report["counters"] = {{"groebner_bases", st.bases}, {"s_pairs", st.pairs}, {"reductions", st.reductions}};
  return {report, code};
}

std::string render_json(const json& report) { return report.dump(2) + "\n"; }

std::string render_text(const json& report) {
  std::ostringstream out;
  out << "command: " << report["command"].get<std::string>() << "\n";
  if (!report["session"].is_null()) out << "session: " << report["session"]["digest"].get<std::string>() << "\n";
  out << "status: " << report["status"].get<std::string>() << "\n";
  if (!report["error"].is_null()) out << "error: " << report["error"].get<std::string>() << "\n";
  for (const auto& ch : report["checks"]) {
    out << (ch["status"] == "pass" ? "  PASS " : "  FAIL ") << ch["name"].get<std::string>();
    if (!ch["detail"].get<std::string>().empty()) out << " (" << ch["detail"].get<std::string>() << ")";
    out << "\n";
  }
  if (!report["result"].empty()) {
    json result = report["result"];
    result.erase("scenarios");
    if (!result.empty()) out << "result: " << result.dump(2) << "\n";
  }
  const auto& ct = report["counters"];
  out << "counters: " << ct["groebner_bases"] << " bases, " << ct["s_pairs"] << " pairs, "
      << ct["reductions"] << " reductions\n";
  return out.str();
}

}  // namespace cohann
