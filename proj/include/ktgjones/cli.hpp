#pragma once

// Command-line front end. Exit codes: 0 success, 1 computation error, 2 usage error.

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "ktgjones/analysis.hpp"
#include "ktgjones/ktgcalc.hpp"
#include "ktgjones/serialize.hpp"

namespace ktg {

struct RunConfig {
  KnotParams knot;
  long n = 0;
  long nmax = 8;
  std::string mode = "closed";
  std::string program;
  std::string format;
  std::string out;
  unsigned threads = 1;
  std::size_t depth = 0;
  bool force = false;
  bool show_plan = false;
  bool emit_program = false;
};

namespace detail {

inline std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cli", "cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline MoveProgram program_for(const RunConfig& cfg) {
  if (!cfg.program.empty()) return parse_program(read_file(cfg.program));
  return montesinos_program(cfg.knot, cfg.force);
}

inline std::string run_jones(const RunConfig& cfg) {
  validate(cfg.knot, cfg.force);
  LaurentPoly j;
  if (cfg.mode == "compiled")
    j = evaluate_plan(reverse_compile(program_for(cfg)), cfg.n);
  else
    j = evaluate_closed(cfg.knot, cfg.n, cfg.threads);
  return cfg.format == "csv" ? polynomial_csv(j) : polynomial_json(cfg.knot, cfg.n, j);
}

inline std::string run_degrees(const RunConfig& cfg) {
  validate(cfg.knot, cfg.force);
  auto L = degree_landscape(cfg.knot, cfg.n);
  return cfg.format == "json" ? landscape_json(L) : landscape_csv(L);
}

inline std::string run_manx(const RunConfig& cfg) {
  validate(cfg.knot, cfg.force);
  auto rep = manx_check(cfg.knot, cfg.nmax, cfg.depth == 0 ? 3 : cfg.depth, cfg.threads);
  if (cfg.format == "csv") return "# verdict " + rep.verdict.to_string() + "\n" + coeff_table_csv(rep.table);
  return manx_json(rep);
}

inline std::string run_tail(const RunConfig& cfg) {
  validate(cfg.knot, cfg.force);
  auto rep = tail_probe(cfg.knot, cfg.depth == 0 ? 1 : cfg.depth, cfg.nmax, cfg.threads);
  return cfg.format == "csv" ? coeff_table_csv(rep.table) : tail_json(rep);
}

inline std::string run_compile(const RunConfig& cfg) {
  MoveProgram p = program_for(cfg);
  auto graphs = replay(p);
  std::ostringstream os;
  os << "moves: " << p.moves.size() << "\n";
  os << "final graph: " << (graphs.back().is_single_circle() ? "single circle" : graphs.back().summary()) << "\n";
  if (cfg.emit_program) os << to_text(p);
  if (cfg.show_plan) os << dump_plan(reverse_compile(p));
  return os.str();
}

}  // namespace detail

inline int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Colored Jones polynomials of the Montesinos knots C(r,s,t,u)", "ktgjones"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto add_knot = [&](CLI::App* sub) {
    sub->add_option("--r", cfg.knot.r, "half twists in the first region")->capture_default_str();
    sub->add_option("--s", cfg.knot.s, "half twists in the second region")->capture_default_str();
    sub->add_option("--t", cfg.knot.t, "half twists in the third region")->capture_default_str();
    sub->add_option("--u", cfg.knot.u, "half twists in the fourth region")->capture_default_str();
    sub->add_flag("--force", cfg.force, "skip the parameter range check");
  };
  auto add_output = [&](CLI::App* sub, const std::string& def) {
    sub->add_option("--format", cfg.format, "output format (default " + def + ")")
        ->check(CLI::IsMember({"json", "csv"}));
    sub->add_option("--out", cfg.out, "write output to PATH instead of stdout");
  };
  auto add_threads = [&](CLI::App* sub) {
    sub->add_option("--threads", cfg.threads, "worker threads")->check(CLI::Range(1u, 1024u))->capture_default_str();
  };

  auto* jones = app.add_subcommand("jones", "evaluate J_{K,n+1}");
  add_knot(jones);
  jones->add_option("--n", cfg.n, "color")->required()->check(CLI::NonNegativeNumber);
  jones->add_option("--mode", cfg.mode, "closed formula or compiled move program")
      ->check(CLI::IsMember({"closed", "compiled"}))
      ->capture_default_str();
  jones->add_option("--program", cfg.program, "move program (compiled mode)")->check(CLI::ExistingFile);
  add_threads(jones);

  auto* degrees = app.add_subcommand("degrees", "per-summand degree landscape");
  add_knot(degrees);
  degrees->add_option("--n", cfg.n, "color")->required()->check(CLI::NonNegativeNumber);

  auto* manx = app.add_subcommand("manx", "leading-coefficient growth verdict");
  add_knot(manx);
  manx->add_option("--nmax", cfg.nmax, "largest color")->check(CLI::Range(3L, 1000L))->capture_default_str();
  manx->add_option("--depth", cfg.depth, "coefficients per row")->check(CLI::Range(1ul, 1000ul));
  add_threads(manx);

  auto* tail = app.add_subcommand("tail", "top-coefficient agreement between consecutive colors");
  add_knot(tail);
  tail->add_option("--nmax", cfg.nmax, "largest color")->check(CLI::Range(2L, 1000L));
  tail->add_option("--depth", cfg.depth, "coefficients compared")->check(CLI::Range(1ul, 1000ul));
  add_threads(tail);

  auto* compile = app.add_subcommand("compile", "check a move program and show its state-sum plan");
  add_knot(compile);
  compile->add_option("--program", cfg.program, "move program; default is the C(r,s,t,u) program")
      ->check(CLI::ExistingFile);
  compile->add_flag("--show-plan", cfg.show_plan, "print the compiled plan");
  compile->add_flag("--emit-program", cfg.emit_program, "print the program text");

  add_output(jones, "json");
  add_output(degrees, "csv");
  add_output(manx, "json");
  add_output(tail, "json");

  std::reverse(args.begin(), args.end());
  try {
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }
  if (cfg.format.empty()) cfg.format = degrees->parsed() ? "csv" : "json";

  try {
    std::string text;
    if (jones->parsed())
      text = detail::run_jones(cfg);
    else if (degrees->parsed())
      text = detail::run_degrees(cfg);
    else if (manx->parsed())
      text = detail::run_manx(cfg);
    else if (tail->parsed())
      text = detail::run_tail(cfg);
    else
      text = detail::run_compile(cfg);

    if (cfg.out.empty()) {
      out << text;
    } else {
      std::ofstream f(cfg.out, std::ios::binary);
      if (!f) throw Error("cli", "cannot write '" + cfg.out + "'");
      f << text;
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}

}  // namespace ktg
