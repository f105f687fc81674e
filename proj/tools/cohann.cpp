#include <chrono>
#include <iostream>

#include "CLI11.hpp"
#include "cohann/cli.hpp"

int main(int argc, char** argv) {
  cohann::CommandOptions o;
  CLI::App app{"cohann: cohomology annihilators, noether differents and singular loci"};
  std::string modules, targets, ideals;
  app.add_option("command", o.command, "command to run")->required();
  app.add_option("subcommand", o.subcommand, "artinian: loewy|socle|ext-oracle|filtration|lemma42");
  app.add_option("--session,-s", o.session, "session file");
  app.add_option("--module,--modules,-m", modules, "module name(s), comma separated");
  app.add_option("--targets,-t", targets, "second module argument(s), comma separated");
  app.add_option("--ideal,--ideals", ideals, "ideal name(s), comma separated");
  app.add_option("--degree,-n", o.degree, "cohomological degree or level");
  app.add_option("--length", o.length, "resolution length");
  app.add_option("--subalgebra,-a", o.subalgebra, "subalgebra name");
  app.add_option("--element,-e", o.element, "ring element");
  app.add_option("--codim", o.codim, "codimension for the Jacobian criterion");
  app.add_option("--max-pairs", o.max_pairs, "S-pair budget per Groebner basis");
  app.add_option("--output,-o", o.output, "json or text")->check(CLI::IsMember({"json", "text"}));
  app.add_option("--filter", o.filter, "verify-paper: run scenarios with this tag");
  app.add_option("--inject-fault", o.fault)->group("");
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }
  o.modules = cohann::split_list(modules);
  o.targets = cohann::split_list(targets);
  o.ideals = cohann::split_list(ideals);

  auto start = std::chrono::steady_clock::now();
  auto res = cohann::run_command(o);
  auto ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  std::cout << (o.output == "text" ? cohann::render_text(res.report) : cohann::render_json(res.report));
  if (res.report["error"].is_string()) std::cerr << "error: " << res.report["error"].get<std::string>() << "\n";
  std::cerr << "elapsed: " << ms << " ms\n";
  return res.exit_code;
}
