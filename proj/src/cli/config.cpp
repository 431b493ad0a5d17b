#include <omp.h>

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "pslab/cli.hpp"
#include "pslab/errors.hpp"
#include "pslab/params.hpp"
#include "pslab/rational.hpp"

namespace pslab::cli {

void validate(const RunConfig& cfg) {
  Rational c;
  try {
    c = Rational::parse(cfg.c);
  } catch (const std::exception& e) {
    throw ConfigError(std::string("--c: ") + e.what());
  }
  if (!exponent_in_window(c)) throw ConfigError("--c: exponent " + c.str() + " outside (1, 24/19)");
  try {
    parse_sigma_variant(cfg.sigma_variant);
  } catch (const std::exception& e) {
    throw ConfigError(std::string("--sigma-variant: ") + e.what());
  }
  if (cfg.threads < 1) throw ConfigError("--threads must be at least 1");
  if (!(cfg.eps > 0.0)) throw ConfigError("--eps must be positive");
  if (cfg.N < 64) throw ConfigError("--N must be at least 64");
  if (cfg.M < 0 || cfg.M > cfg.N) throw ConfigError("--M must satisfy 2 <= M <= N");
  if (cfg.M != 0 && cfg.M < 2) throw ConfigError("--M must satisfy 2 <= M <= N");
  if (cfg.samples < 1) throw ConfigError("--samples must be at least 1");
  if (cfg.n0 < 4 || cfg.n0 > cfg.N) throw ConfigError("--n0 must satisfy 4 <= n0 <= N");
}

Report run_command(const RunConfig& cfg) {
  validate(cfg);
  if (cfg.command == "exceptional") return cmd_exceptional(cfg);
  if (cfg.command == "majorarc") return cmd_majorarc(cfg);
  if (cfg.command == "moment4") return cmd_moment4(cfg);
  if (cfg.command == "bounds") return cmd_bounds(cfg);
  if (cfg.command == "bprocess") return cmd_bprocess(cfg);
  if (cfg.command == "hbident") return cmd_hbident(cfg);
  if (cfg.command == "expsum") return cmd_expsum(cfg);
  throw ConfigError("unknown command '" + cfg.command + "'");
}

void emit(std::ostream& os, const RunConfig& cfg, const Report& report) {
  if (cfg.format == Format::csv) {
    write_csv(os, report.tables);
    return;
  }
  nlohmann::ordered_json doc = {{"command", cfg.command}};
  for (const auto& [k, v] : report.extra.items()) doc[k] = v;
  doc["config"] = {{"c", cfg.c},         {"N", cfg.N},
                   {"M", cfg.M ? cfg.M : cfg.N}, {"eps", cfg.eps},
                   {"sigma_variant", cfg.sigma_variant}, {"seed", cfg.seed}};
  doc["tables"] = tables_json(report.tables);
  os << doc.dump(2) << '\n';
}

int main_entry(int argc, char** argv) {
  CLI::App app{"Piatetski-Shapiro binary problem laboratory"};
  app.set_config("--config", "", "key=value configuration file; flags override it");
  app.require_subcommand(1, 1);
  app.fallthrough();

  RunConfig cfg;
  std::string format = "csv";
  app.add_option("--c", cfg.c, "exponent as a/b");
  app.add_option("--N", cfg.N, "range bound N");
  app.add_option("--M", cfg.M, "dyadic block end M (default N)");
  app.add_option("--eps", cfg.eps, "epsilon");
  app.add_option("--sigma-variant", cfg.sigma_variant, "theorem | conservative");
  app.add_option("--threads", cfg.threads, "worker threads");
  app.add_option("--seed", cfg.seed, "seed for random corpora");
  app.add_option("--out", cfg.out_path, "output file (default stdout)");
  app.add_option("--format", format, "csv | json")->check(CLI::IsMember({"csv", "json"}));
  app.add_option("--n0", cfg.n0, "first n considered by exceptional");
  app.add_option("--n", cfg.n_list, "targets n for majorarc");
  app.add_option("--X", cfg.X_list, "sizes X for bounds, bprocess, hbident, expsum");
  app.add_option("--samples", cfg.samples, "random draws for expsum and hbident");

  for (const char* name : {"exceptional", "majorarc", "moment4", "bounds", "bprocess", "hbident", "expsum"}) {
    app.add_subcommand(name)->fallthrough();
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }
  cfg.command = app.get_subcommands().front()->get_name();
  cfg.format = format == "json" ? Format::json : Format::csv;

  try {
    validate(cfg);
    omp_set_num_threads(cfg.threads);
    const Report report = run_command(cfg);
    std::ostringstream buf;
    emit(buf, cfg, report);
    if (cfg.out_path.empty()) {
      std::cout << buf.str();
    } else {
      std::ofstream f(cfg.out_path, std::ios::binary);
      if (!f) throw ConfigError("cannot open " + cfg.out_path);
      f << buf.str();
    }
    return 0;
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return 2;
  } catch (const DomainError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return 2;
  } catch (const ConstraintViolation& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return 2;
  } catch (const CertificationError& e) {
    std::cerr << "certification failure: " << e.what() << '\n';
    return 3;
  } catch (const GridTooCoarse& e) {
    std::cerr << "certification failure: " << e.what() << '\n';
    return 3;
  } catch (const SelfTestFailure& e) {
    std::cerr << "certification failure: " << e.what() << '\n';
    return 3;
  } catch (const HypothesisViolation& e) {
    std::cerr << "certification failure: " << e.what() << '\n';
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}

}  // namespace pslab::cli
