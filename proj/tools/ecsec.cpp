#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "ecsec/cli/app.hpp"

int main(int argc, char** argv) {
  using namespace ecsec::cli;
  RunConfig cfg;
  std::string out;
  CLI::App app{"Rank of Miller sections on elliptic curves and their q-expansions"};
  app.set_config("--config", "", "plain key=value file; flags take precedence");
  app.fallthrough();
  app.require_subcommand(1);
  app.add_option("--n", cfg.n, "odd N");
  app.add_option("--p", cfg.p, "characteristic");
  app.add_option("--ext-cap", cfg.ext_cap, "largest extension degree of GF(p) to work in");
  app.add_option("--prec", cfg.prec, "q-expansion precision (qexp)");
  app.add_option("--seed", cfg.seed, "random seed");
  app.add_option("--scope", cfg.scope, "all | j=<list> | exceptional | closure (survey)");
  app.add_option("--out", out, "write the report to this path");
  app.add_option("--format", cfg.format, "json | text")->check(CLI::IsMember({"json", "text"}));
  app.add_option("--j", cfg.j, "j-invariant: 19, -25/2 or [c0,c1,...] (rank)");
  app.add_option("--curve", cfg.curve, "a1,a2,a3,a4,a6 (rank)");
  app.add_option("--gen", cfg.gen, "auto: every subgroup; first: the first order-N point found (rank)")
      ->check(CLI::IsMember({"auto", "first"}));
  app.add_option("--e", cfg.e, "n-gon width (ngon)");
  app.add_option("--r", cfg.r, "counts r_0..r_{e-1} (ngon)")->delimiter(',')->allow_extra_args();
  for (const char* name : {"rank", "survey", "qexp", "ngon"})
    app.add_subcommand(name)->callback([&cfg, name] { cfg.command = name; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    const Outcome o = run(cfg);
    const std::string body = render(o, cfg.format);
    if (out.empty()) {
      std::cout << body;
    } else {
      std::ofstream f(out);
      if (!f) throw UsageError("cannot write " + out);
      f << body;
      std::cerr << render(o, "text");
    }
    return o.code;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const ecsec::DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
}
