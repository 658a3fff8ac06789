#include "gbkit/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <functional>
#include <initializer_list>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "gbkit/division.hpp"
#include "gbkit/groebner.hpp"
#include "gbkit/ideal.hpp"
#include "gbkit/kinematics.hpp"
#include "gbkit/oscillator.hpp"
#include "gbkit/parse.hpp"
#include "gbkit/svg.hpp"

namespace gbkit::cli {

namespace {

using Json = nlohmann::ordered_json;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Everything after option parsing; returns the exit code.
using Job = std::function<int(std::ostream& out, std::ostream& err)>;

enum class Format { text, json, csv, svg };

struct Arguments {
  std::vector<std::string> head;  // before a standalone "--"
  std::vector<std::string> tail;  // after it
  bool has_separator = false;
};

Arguments split_arguments(std::span<const std::string> args) {
  Arguments a;
  for (const auto& s : args) {
    if (!a.has_separator && s == "--") {
      a.has_separator = true;
    } else if (a.has_separator) {
      a.tail.push_back(s);
    } else {
      a.head.push_back(s);
    }
  }
  return a;
}

std::string number(double v, int precision = 17) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", precision, v);
  return buf;
}

/// Parses options with CLI11 and returns the leftover positional words, in
/// order. Expressions such as "-x^2+1" look like short options to CLI11 and
/// come back as extras too; only unknown "--long" words are rejected.
std::vector<std::string> parse_options(CLI::App& app, std::vector<std::string> words) {
  app.set_help_flag();
  app.allow_extras();
  std::reverse(words.begin(), words.end());
  app.parse(words);
  std::vector<std::string> extras = app.remaining();
  for (const auto& e : extras) {
    if (e.size() > 2 && e.rfind("--", 0) == 0) throw UsageError("unknown option " + e);
  }
  return extras;
}

struct PolynomialOptions {
  std::string vars;
  std::string order = "grevlex";
  std::string format;
  std::string output;
};

void add_polynomial_options(CLI::App& app, PolynomialOptions& o, bool with_order = true) {
  app.add_option("--vars", o.vars, "comma-separated variables, most significant first")->required();
  if (with_order) app.add_option("--order", o.order, "lex, grlex or grevlex");
  app.add_option("--format", o.format, "output format");
  app.add_option("--output", o.output, "write to this file instead of standard output");
}

VariableContext make_context(const std::string& vars) {
  try {
    return VariableContext::parse_list(vars);
  } catch (const std::invalid_argument& e) {
    throw UsageError(std::string("--vars: ") + e.what());
  }
}

MonomialOrder make_order(const std::string& name) {
  const auto order = parse_order(name);
  if (!order) throw UsageError("unknown order '" + name + "' (expected lex, grlex or grevlex)");
  return *order;
}

Format make_format(const std::string& name, Format fallback, std::initializer_list<Format> allowed,
                   const std::string& command) {
  if (name.empty()) return fallback;
  std::optional<Format> f;
  if (name == "text") f = Format::text;
  if (name == "json") f = Format::json;
  if (name == "csv") f = Format::csv;
  if (name == "svg") f = Format::svg;
  if (!f) throw UsageError("unknown format '" + name + "'");
  if (std::find(allowed.begin(), allowed.end(), *f) == allowed.end()) {
    throw UsageError("format '" + name + "' is not available for " + command);
  }
  return *f;
}

std::vector<Polynomial> parse_expressions(const std::vector<std::string>& texts, const VariableContext& ctx) {
  std::vector<Polynomial> out;
  for (const auto& t : texts) {
    try {
      out.push_back(parse_polynomial(t, ctx));
    } catch (const ParseError& e) {
      throw UsageError("syntax error in \"" + t + "\" " + e.what());
    }
  }
  return out;
}

Json vars_json(const VariableContext& ctx) {
  Json a = Json::array();
  for (const auto& n : ctx.names()) a.push_back(n);
  return a;
}

Json polys_json(std::span<const Polynomial> polys, MonomialOrder order) {
  Json a = Json::array();
  for (const auto& p : polys) a.push_back(format_polynomial(p, order));
  return a;
}

std::string lines(std::span<const Polynomial> polys, MonomialOrder order) {
  std::string s;
  for (const auto& p : polys) s += format_polynomial(p, order) + "\n";
  return s;
}

int emit(const std::string& payload, const std::string& path, std::ostream& out) {
  if (path.empty()) {
    out << payload;
    return 0;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw std::runtime_error("cannot open '" + path + "' for writing");
  file << payload;
  if (!file) throw std::runtime_error("failed writing '" + path + "'");
  return 0;
}

Job groebner_command(const Arguments& args) {
  CLI::App app{"groebner"};
  PolynomialOptions o;
  bool no_reduce = false;
  bool no_criterion = false;
  add_polynomial_options(app, o);
  app.add_flag("--no-reduce", no_reduce, "print the unreduced basis");
  app.add_flag("--no-criterion", no_criterion, "process coprime pairs too");
  auto exprs = parse_options(app, args.head);
  exprs.insert(exprs.end(), args.tail.begin(), args.tail.end());
  if (exprs.empty()) throw UsageError("groebner needs at least one polynomial");
  const auto ctx = make_context(o.vars);
  const auto order = make_order(o.order);
  const auto format = make_format(o.format, Format::text, {Format::text, Format::json}, "groebner");
  const auto polys = parse_expressions(exprs, ctx);

  return [=](std::ostream& out, std::ostream&) {
    BuchbergerOptions options;
    options.coprime_criterion = !no_criterion;
    GroebnerBasis basis = buchberger(polys, order, options);
    if (!no_reduce) basis = reduce_basis(basis);
    if (format == Format::text) return emit(lines(basis.generators(), order), o.output, out);
    Json j;
    j["order"] = std::string(to_string(order));
    j["vars"] = vars_json(ctx);
    j["reduced"] = basis.is_reduced();
    j["basis"] = polys_json(basis.generators(), order);
    return emit(j.dump(2) + "\n", o.output, out);
  };
}

Job divide_command(const Arguments& args) {
  CLI::App app{"divide"};
  PolynomialOptions o;
  add_polynomial_options(app, o);
  const auto head = parse_options(app, args.head);
  if (!args.has_separator) throw UsageError("divide expects: F -- D1 D2 ...");
  if (head.size() != 1) throw UsageError("divide expects exactly one dividend before '--'");
  if (args.tail.empty()) throw UsageError("divide expects at least one divisor after '--'");
  const auto ctx = make_context(o.vars);
  const auto order = make_order(o.order);
  const auto format = make_format(o.format, Format::text, {Format::text, Format::json}, "divide");
  const Polynomial f = parse_expressions(head, ctx).front();
  const auto divisors = parse_expressions(args.tail, ctx);

  return [=](std::ostream& out, std::ostream&) {
    const DivisionResult r = divide(f, divisors, order);
    if (format == Format::text) {
      std::string s;
      for (std::size_t i = 0; i < r.quotients.size(); ++i) {
        s += "q" + std::to_string(i + 1) + " = " + format_polynomial(r.quotients[i], order) + "\n";
      }
      s += "r = " + format_polynomial(r.remainder, order) + "\n";
      return emit(s, o.output, out);
    }
    Json j;
    j["order"] = std::string(to_string(order));
    j["vars"] = vars_json(ctx);
    j["dividend"] = format_polynomial(f, order);
    j["divisors"] = polys_json(divisors, order);
    j["quotients"] = polys_json(r.quotients, order);
    j["remainder"] = format_polynomial(r.remainder, order);
    return emit(j.dump(2) + "\n", o.output, out);
  };
}

Job member_command(const Arguments& args) {
  CLI::App app{"member"};
  PolynomialOptions o;
  add_polynomial_options(app, o);
  const auto head = parse_options(app, args.head);
  if (!args.has_separator) throw UsageError("member expects: F -- G1 G2 ...");
  if (head.size() != 1) throw UsageError("member expects exactly one polynomial before '--'");
  if (args.tail.empty()) throw UsageError("member expects at least one generator after '--'");
  const auto ctx = make_context(o.vars);
  const auto order = make_order(o.order);
  const auto format = make_format(o.format, Format::text, {Format::text, Format::json}, "member");
  const Polynomial f = parse_expressions(head, ctx).front();
  const auto generators = parse_expressions(args.tail, ctx);

  return [=](std::ostream& out, std::ostream&) {
    const GroebnerBasis basis = reduced_groebner_basis(generators, order);
    const bool member = is_member(f, basis);
    if (format == Format::text) return emit(member ? "true\n" : "false\n", o.output, out);
    Json j;
    j["order"] = std::string(to_string(order));
    j["vars"] = vars_json(ctx);
    j["polynomial"] = format_polynomial(f, order);
    j["basis"] = polys_json(basis.generators(), order);
    j["member"] = member;
    return emit(j.dump(2) + "\n", o.output, out);
  };
}

Job eliminate_command(const Arguments& args) {
  CLI::App app{"eliminate"};
  PolynomialOptions o;
  o.order.clear();
  std::size_t keep = 0;
  add_polynomial_options(app, o);
  app.add_option("--keep", keep, "number of trailing variables to keep")->required();
  auto exprs = parse_options(app, args.head);
  exprs.insert(exprs.end(), args.tail.begin(), args.tail.end());
  if (exprs.empty()) throw UsageError("eliminate needs at least one polynomial");
  const auto ctx = make_context(o.vars);
  if (!o.order.empty()) make_order(o.order);
  if (keep < 1 || keep > ctx.size()) {
    throw UsageError("--keep must be between 1 and " + std::to_string(ctx.size()));
  }
  const auto format = make_format(o.format, Format::text, {Format::text, Format::json}, "eliminate");
  const auto polys = parse_expressions(exprs, ctx);
  const std::string requested = o.order;

  return [=](std::ostream& out, std::ostream& err) {
    if (requested.empty() || requested == "lex") {
      err << "eliminate: using lex order\n";
    } else {
      err << "eliminate: using lex order (ignoring --order " << requested << ")\n";
    }
    const GroebnerBasis basis = reduced_groebner_basis(polys, MonomialOrder::lex);
    const auto kept = eliminate(basis, keep);
    if (format == Format::text) return emit(lines(kept, MonomialOrder::lex), o.output, out);
    Json j;
    j["order"] = "lex";
    j["vars"] = vars_json(ctx);
    Json names = Json::array();
    for (std::size_t i = ctx.size() - keep; i < ctx.size(); ++i) names.push_back(ctx.name(i));
    j["keep"] = names;
    j["basis"] = polys_json(kept, MonomialOrder::lex);
    return emit(j.dump(2) + "\n", o.output, out);
  };
}

Job staircase_command(const Arguments& args) {
  CLI::App app{"staircase"};
  PolynomialOptions o;
  int cell = 40;
  add_polynomial_options(app, o);
  app.add_option("--cell", cell, "cell size in SVG units");
  auto exprs = parse_options(app, args.head);
  exprs.insert(exprs.end(), args.tail.begin(), args.tail.end());
  if (exprs.empty()) throw UsageError("staircase needs at least one polynomial");
  const auto ctx = make_context(o.vars);
  if (ctx.size() != 2) throw UsageError("staircase supports 2 variables");
  const auto order = make_order(o.order);
  const auto format =
      make_format(o.format, Format::svg, {Format::svg, Format::text, Format::json}, "staircase");
  if (cell <= 0) throw UsageError("--cell must be positive");
  const auto polys = parse_expressions(exprs, ctx);

  return [=](std::ostream& out, std::ostream&) {
    const GroebnerBasis basis = reduced_groebner_basis(polys, order);
    const StaircaseDiagram d = staircase(basis);
    if (format == Format::svg) return emit(svg::staircase(d, ctx, cell), o.output, out);
    if (format == Format::text) {
      std::string s;
      for (const auto& [a, b] : d.minimal_generators) {
        s += "(" + std::to_string(a) + "," + std::to_string(b) + ")\n";
      }
      return emit(s, o.output, out);
    }
    Json j;
    j["order"] = std::string(to_string(order));
    j["vars"] = vars_json(ctx);
    j["basis"] = polys_json(basis.generators(), order);
    Json gens = Json::array();
    for (const auto& [a, b] : d.minimal_generators) gens.push_back(Json::array({a, b}));
    j["generators"] = gens;
    j["width"] = d.width;
    j["height"] = d.height;
    return emit(j.dump(2) + "\n", o.output, out);
  };
}

std::vector<kinematics::Target> read_trajectory(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read trajectory file '" + path + "'");
  std::vector<kinematics::Target> targets;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.find_first_not_of(" \t") == std::string::npos || line.front() == '#') continue;
    const auto comma = line.find(',');
    if (comma == std::string::npos) throw UsageError(path + ":" + std::to_string(line_no) + ": expected x,y");
    try {
      std::size_t used_x = 0, used_y = 0;
      const std::string xs = line.substr(0, comma), ys = line.substr(comma + 1);
      const double x = std::stod(xs, &used_x);
      const double y = std::stod(ys, &used_y);
      if (xs.find_first_not_of(" \t", used_x) != std::string::npos ||
          ys.find_first_not_of(" \t", used_y) != std::string::npos) {
        throw std::invalid_argument("trailing characters");
      }
      targets.push_back({x, y});
    } catch (const std::exception&) {
      // A non-numeric first row is a header.
      if (targets.empty() && line_no == 1) continue;
      throw UsageError(path + ":" + std::to_string(line_no) + ": expected numeric x,y");
    }
  }
  return targets;
}

Job ik_command(const Arguments& args) {
  CLI::App app{"ik"};
  kinematics::ArmSpec arm;
  std::optional<double> x, y;
  std::string trajectory, format_name, output;
  double tol = 1e-9;
  app.add_option("--l1", arm.l1, "length of link 1")->required();
  app.add_option("--l2", arm.l2, "length of link 2")->required();
  app.add_option("--x", x, "target x");
  app.add_option("--y", y, "target y");
  app.add_option("--trajectory", trajectory, "CSV file of x,y waypoints");
  app.add_option("--tol", tol, "solver tolerance");
  app.add_option("--format", format_name, "text, csv or json");
  app.add_option("--output", output, "write to this file instead of standard output");
  const auto extra = parse_options(app, args.head);
  if (!extra.empty() || args.has_separator) throw UsageError("ik takes no positional arguments");
  if (!(arm.l1 > 0) || !(arm.l2 > 0)) throw UsageError("--l1 and --l2 must be positive");
  if (!(tol > 0)) throw UsageError("--tol must be positive");
  const auto format = make_format(format_name, Format::text, {Format::text, Format::csv, Format::json}, "ik");
  std::vector<kinematics::Target> targets;
  const bool single = trajectory.empty();
  if (single) {
    if (!x || !y) throw UsageError("ik needs --x and --y, or --trajectory");
    targets.push_back({*x, *y});
  } else {
    if (x || y) throw UsageError("--trajectory cannot be combined with --x/--y");
    targets = read_trajectory(trajectory);
  }

  return [=](std::ostream& out, std::ostream& err) {
    std::vector<kinematics::IkResult> results;
    if (single) {
      results.push_back(kinematics::ik_solve(arm, targets.front(), tol));
    } else {
      results = kinematics::ik_solve_trajectory(arm, targets, tol);
    }
    bool any_failed = false;
    for (std::size_t i = 0; i < results.size(); ++i) {
      if (results[i].solutions.empty()) {
        any_failed = true;
        err << "target (" << number(targets[i].x, 12) << ", " << number(targets[i].y, 12)
            << "): " << results[i].diagnostic << "\n";
      }
    }

    std::string payload;
    if (format == Format::json) {
      Json j;
      j["l1"] = arm.l1;
      j["l2"] = arm.l2;
      j["tol"] = tol;
      Json list = Json::array();
      for (std::size_t i = 0; i < results.size(); ++i) {
        Json t;
        t["x"] = targets[i].x;
        t["y"] = targets[i].y;
        t["unreachable"] = results[i].unreachable;
        t["diagnostic"] = results[i].diagnostic;
        Json sols = Json::array();
        for (const auto& s : results[i].solutions) {
          sols.push_back({{"theta1", s.theta1}, {"theta2", s.theta2}, {"residual", s.residual}});
        }
        t["solutions"] = sols;
        list.push_back(t);
      }
      j["targets"] = list;
      payload = j.dump(2) + "\n";
    } else {
      const bool csv = format == Format::csv;
      if (csv) payload = "x,y,theta1,theta2,residual\n";
      for (std::size_t i = 0; i < results.size(); ++i) {
        for (const auto& s : results[i].solutions) {
          if (csv) {
            payload += number(targets[i].x) + "," + number(targets[i].y) + "," + number(s.theta1) + "," +
                       number(s.theta2) + "," + number(s.residual) + "\n";
          } else {
            payload += "x=" + number(targets[i].x, 12) + " y=" + number(targets[i].y, 12) +
                       " theta1=" + number(s.theta1, 12) + " theta2=" + number(s.theta2, 12) +
                       " residual=" + number(s.residual, 3) + "\n";
          }
        }
      }
    }
    emit(payload, output, out);
    return (single && any_failed) ? 1 : 0;
  };
}

Job oscillator_command(const Arguments& args) {
  CLI::App app{"oscillator"};
  oscillator::OscillatorParams p;
  double t_end = 10.0;
  int n = 200;
  std::string format_name, output, svg_path;
  svg::PlotSize size;
  app.add_option("--m", p.m, "mass")->required();
  app.add_option("--k", p.k, "spring constant")->required();
  app.add_option("--b", p.b, "damping coefficient");
  app.add_option("--y0", p.y0, "initial displacement");
  app.add_option("--y1", p.y1, "initial velocity");
  app.add_option("--t-end", t_end, "end of the sampled interval");
  app.add_option("--n", n, "number of samples");
  app.add_option("--format", format_name, "csv, svg, text or json");
  app.add_option("--output", output, "write to this file instead of standard output");
  app.add_option("--svg", svg_path, "also write an SVG plot to this file");
  app.add_option("--width", size.width, "SVG width");
  app.add_option("--height", size.height, "SVG height");
  const auto extra = parse_options(app, args.head);
  if (!extra.empty() || args.has_separator) throw UsageError("oscillator takes no positional arguments");
  if (!(p.m > 0) || !(p.k > 0)) throw UsageError("--m and --k must be positive");
  if (!(p.b >= 0)) throw UsageError("--b must be nonnegative");
  if (!(t_end > 0)) throw UsageError("--t-end must be positive");
  if (n < 2) throw UsageError("--n must be at least 2");
  if (size.width <= 0 || size.height <= 0) throw UsageError("--width and --height must be positive");
  const auto format = make_format(format_name, Format::csv,
                                  {Format::csv, Format::svg, Format::text, Format::json}, "oscillator");

  return [=](std::ostream& out, std::ostream&) {
    const auto sol = oscillator::solve_ivp(p);
    const auto rows = oscillator::sample(sol, t_end, n);
    if (!svg_path.empty()) emit(svg::oscillator(rows, size), svg_path, out);

    std::string payload;
    switch (format) {
      case Format::csv:
        payload = "t,y,env_hi,env_lo\n";
        for (const auto& r : rows) {
          payload += number(r.t) + "," + number(r.y) + "," + number(r.env_hi) + "," + number(r.env_lo) + "\n";
        }
        break;
      case Format::svg:
        payload = svg::oscillator(rows, size);
        break;
      case Format::text:
        payload = "regime: underdamped\nomega: " + number(sol.omega, 12) + "\nbeta: " + number(sol.beta, 12) +
                  "\namplitude: " + number(sol.amplitude, 12) + "\nphase: " + number(sol.phase, 12) +
                  "\nc1: " + number(sol.c1, 12) + "\nc2: " + number(sol.c2, 12) + "\n";
        break;
      case Format::json: {
        Json j;
        j["regime"] = "underdamped";
        j["omega"] = sol.omega;
        j["beta"] = sol.beta;
        j["amplitude"] = sol.amplitude;
        j["phase"] = sol.phase;
        j["c1"] = sol.c1;
        j["c2"] = sol.c2;
        Json samples = Json::array();
        for (const auto& r : rows) samples.push_back({r.t, r.y, r.env_hi, r.env_lo});
        j["samples"] = samples;
        payload = j.dump(2) + "\n";
        break;
      }
    }
    return emit(payload, output, out);
  };
}

}  // namespace

std::string usage() {
  return "usage: gbkit <command> [options]\n"
         "\n"
         "commands:\n"
         "  groebner  --vars x,y [--order ORD] [--no-reduce] [--no-criterion] EXPR...\n"
         "  divide    --vars x,y [--order ORD] F -- D1 D2 ...\n"
         "  member    --vars x,y [--order ORD] F -- G1 G2 ...\n"
         "  eliminate --vars x,y --keep N EXPR...          (always lex)\n"
         "  staircase --vars x,y [--order ORD] [--cell PX] EXPR...\n"
         "  ik        --l1 L --l2 L (--x X --y Y | --trajectory FILE.csv) [--tol 1e-9]\n"
         "  oscillator --m M --k K [--b B] [--y0 Y0] [--y1 Y1] [--t-end T] [--n N]\n"
         "            [--svg FILE] [--width W] [--height H]\n"
         "\n"
         "common options: --format text|json|csv|svg, --output FILE\n"
         "orders: lex, grlex, grevlex (default grevlex)\n";
}

int run(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
  if (args.empty()) {
    err << usage();
    return 2;
  }
  const std::string& command = args.front();
  if (command == "--help" || command == "-h" || command == "help") {
    out << usage();
    return 0;
  }
  const Arguments rest = split_arguments(args.subspan(1));
  if (std::find(rest.head.begin(), rest.head.end(), "--help") != rest.head.end()) {
    out << usage();
    return 0;
  }

  Job job;
  try {
    if (command == "groebner") {
      job = groebner_command(rest);
    } else if (command == "divide") {
      job = divide_command(rest);
    } else if (command == "member") {
      job = member_command(rest);
    } else if (command == "eliminate") {
      job = eliminate_command(rest);
    } else if (command == "staircase") {
      job = staircase_command(rest);
    } else if (command == "ik") {
      job = ik_command(rest);
    } else if (command == "oscillator") {
      job = oscillator_command(rest);
    } else {
      throw UsageError("unknown command '" + command + "'");
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n" << usage();
    return 2;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << usage();
    return 2;
  }

  try {
    return job(out, err);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace gbkit::cli
