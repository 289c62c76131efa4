#include "hurwitz/cli.hpp"

#include <cmath>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <omp.h>

#include "hurwitz/errors.hpp"
#include "hurwitz/hodge.hpp"
#include "hurwitz/hurwitz_count.hpp"
#include "hurwitz/intersection.hpp"
#include "hurwitz/json_io.hpp"
#include "hurwitz/perimeter.hpp"
#include "hurwitz/toda.hpp"
#include "hurwitz/tree_stats.hpp"
#include "hurwitz/trivalent.hpp"

namespace hurwitz {

namespace {

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, ','))
    if (!item.empty()) out.push_back(item);
  return out;
}

std::vector<int> parse_ints(const std::string& text) {
  std::vector<int> out;
  for (const auto& s : split_list(text)) {
    std::size_t used = 0;
    const int v = std::stoi(s, &used);
    if (used != s.size()) throw std::invalid_argument("not an integer: '" + s + "'");
    out.push_back(v);
  }
  return out;
}

std::vector<Rat> parse_rats(const std::string& text) {
  std::vector<Rat> out;
  for (const auto& s : split_list(text)) out.push_back(Rat::parse(s));
  return out;
}

std::string fixed(double v, int digits = 6) {
  std::ostringstream os;
  os << std::setprecision(digits) << v;
  return os.str();
}

struct Context {
  std::ostream& out;
  bool json = false;
  Budget budget;
  Json config;
  Json result = Json::object();
  std::vector<std::string> lines;

  void line(std::string s) { lines.push_back(std::move(s)); }
  int finish(int code) {
    if (json) {
      Json doc{{"config", config}, {"result", result}, {"exit_code", code}};
      out << doc.dump(2) << "\n";
    } else {
      out << "# " << config.dump() << "\n";
      for (const auto& l : lines) out << l << "\n";
    }
    return code;
  }
};

HodgeTable elsv_table(int g, int l) { return (g == 0 && l <= 2) ? HodgeTable{} : inverted_hodge_table(g, l); }

Rat hurwitz_by(Method m, int g, const Partition& mu, const Budget& budget) {
  switch (m) {
    case Method::monodromy: return hurwitz_monodromy(g, mu, budget);
    case Method::degeneration: return hurwitz_degeneration(g, mu);
    case Method::elsv: return elsv_evaluate(g, mu, elsv_table(g, mu.length()));
    case Method::closed_form: break;
  }
  throw std::invalid_argument("unsupported method");
}

int cmd_hurwitz(Context& ctx, int g, const std::string& mu_text, const std::string& method) {
  const Partition mu = Partition::parse(mu_text);
  ram_count(g, mu);
  std::vector<Method> methods;
  if (method == "all") methods = {Method::monodromy, Method::degeneration, Method::elsv};
  else if (method == "monodromy") methods = {Method::monodromy};
  else if (method == "degeneration") methods = {Method::degeneration};
  else if (method == "elsv") methods = {Method::elsv};
  else throw std::invalid_argument("unknown method '" + method + "'");

  std::vector<Rat> values;
  Json list = Json::array();
  for (Method m : methods) {
    values.push_back(hurwitz_by(m, g, mu, ctx.budget));
    ctx.line("H[" + std::to_string(g) + "; " + mu.str() + "] " + to_string(m) + " = " + values.back().str());
    list.push_back(Json{{"method", to_string(m)}, {"value", values.back()}});
  }
  bool agree = true;
  for (const auto& v : values) agree = agree && v == values.front();
  ctx.result = Json{{"genus", g}, {"mu", mu}, {"values", list}, {"agree", agree}};
  if (!agree) ctx.line("methods disagree");
  return ctx.finish(agree ? exit_ok : exit_failed);
}

int cmd_intersect(Context& ctx, int g, const std::string& taus_text, int lambda) {
  const Correlator c(g, parse_ints(taus_text), lambda);
  for (int k : c.taus)
    if (k < 0) throw std::invalid_argument("tau indices must be nonnegative");
  if (lambda < 0 || lambda > g) throw std::invalid_argument("lambda index must lie in 0..genus");
  if (c.points() == 0) throw std::invalid_argument("at least one marked point is needed");
  if (!c.stable()) throw UnstableRange("outside the stable range 2g-2+n > 0");
  Rat v(0);
  if (c.dimension_ok()) v = lambda == 0 ? psi_correlator(g, c.taus) : inverted_hodge_table(g, c.points()).at(c);
  ctx.line(c.str() + " = " + v.str());
  ctx.result = Json{{"correlator", c}, {"value", v}};
  return ctx.finish(exit_ok);
}

int cmd_kontsevich(Context& ctx, int g, int cells, const std::string& eval_text) {
  const auto s = parse_rats(eval_text);
  if (static_cast<int>(s.size()) != cells) throw std::invalid_argument("--eval needs one value per cell");
  for (const auto& v : s)
    if (v.sign() <= 0) throw std::invalid_argument("evaluation point must be positive");
  const Rat maps = kontsevich_sum(g, s, ctx.budget);
  const Rat series = kontsevich_series_eval(g, s);
  ctx.line("trivalent map sum   = " + maps.str());
  ctx.line("intersection series = " + series.str());
  const bool agree = maps == series;
  ctx.result = Json{{"map_sum", maps}, {"series", series}, {"agree", agree}};
  return ctx.finish(agree ? exit_ok : exit_failed);
}

int cmd_maps(Context& ctx, int g, int cells) {
  const auto classes = enumerate_trivalent(g, cells, ctx.budget);
  Rat mass(0);
  for (const auto& c : classes) mass += Rat(1, c.aut_order);
  ctx.line("classes = " + std::to_string(classes.size()));
  ctx.line("sum 1/|Aut| = " + mass.str());
  for (std::size_t i = 0; i < classes.size(); ++i) {
    const auto& c = classes[i];
    std::ostringstream os;
    os << "#" << i << " aut=" << c.aut_order << " alpha=" << Json(c.rep.alpha).dump()
       << " cells=" << Json(c.rep.face_label).dump();
    ctx.line(os.str());
  }
  ctx.result = Json{{"classes", classes}, {"count", classes.size()}, {"mass", mass}};
  return ctx.finish(exit_ok);
}

int cmd_tree_stats(Context& ctx, const std::string& stat, int n, long samples, std::uint64_t seed) {
  const auto r = stat_test(parse_tree_statistic(stat), n, samples, seed);
  ctx.line(r.statistic + " " + r.test + " statistic = " + fixed(r.value) + " (threshold " + fixed(r.threshold) +
           (r.test == "chi-square" ? ", dof " + std::to_string(r.degrees_of_freedom) : std::string()) + ") " +
           (r.pass ? "pass" : "fail"));
  ctx.result = r;
  return ctx.finish(r.pass ? exit_ok : exit_failed);
}

int cmd_tree_laplace(Context& ctx, double y1, double y2, long big_n, long samples, std::uint64_t seed) {
  const auto e = perimeter_laplace(y1, y2, big_n, samples, seed);
  const bool ok = std::abs(e.relative_error) <= 0.03;
  ctx.line("estimate = " + fixed(e.estimate) + " +- " + fixed(e.standard_error));
  ctx.line("closed form = " + fixed(e.closed_form));
  ctx.line("relative error = " + fixed(e.relative_error) + (ok ? " (within 3%)" : " (outside 3%)"));
  ctx.result = e;
  return ctx.finish(ok ? exit_ok : exit_failed);
}

int cmd_toda(Context& ctx, int dmax, int lmax, bool htilde) {
  const auto h = build_H(dmax, lmax, ctx.budget);
  const auto r = htilde ? htilde_residual(h) : toda_residual(h);
  ctx.line(std::string(htilde ? "specialized" : "full") + " Toda residual = " + r.max_abs.str());
  ctx.line("window: degree <= " + std::to_string(r.window_degree) + ", lambda exponent <= " +
           std::to_string(r.window_lambda) + "; " + std::to_string(r.discarded_nonzero) +
           " nonzero coefficients outside the window discarded");
  ctx.result = r;
  return ctx.finish(r.max_abs.is_zero() ? exit_ok : exit_failed);
}

int cmd_tables(Context& ctx) {
  const auto& tables = appendix_b();
  int diffs = 0;
  Json hodge = Json::array(), hur = Json::array();
  ctx.line("Hodge integrals");
  for (const auto& f : tables.hodge) {
    Correlator c = f.correlator;
    // <lambda_1>_1 is evaluated on the one-pointed space.
    if (c.points() == 0) c = Correlator(c.genus, {0}, c.lambda);
    const Rat v = c.lambda == 0 ? psi_correlator(c.genus, c.taus) : inverted_hodge_table(c.genus, c.points()).at(c);
    const bool same = v == f.value;
    diffs += !same;
    ctx.line("  " + f.correlator.str() + " = " + v.str() + (same ? "" : "  DIFF expected " + f.value.str()));
    hodge.push_back(Json{{"correlator", f.correlator}, {"value", v}, {"expected", f.value}, {"match", same}});
  }
  ctx.line("Hurwitz numbers (monodromy, degeneration, elsv)");
  for (const auto& f : tables.hurwitz) {
    Json entry{{"genus", f.genus}, {"mu", f.mu}, {"expected", f.value}};
    std::string text = "  g=" + std::to_string(f.genus) + " mu=" + f.mu.str() + ":";
    bool same = true;
    for (Method m : {Method::monodromy, Method::degeneration, Method::elsv}) {
      const Rat v = hurwitz_by(m, f.genus, f.mu, ctx.budget);
      same = same && v == f.value;
      entry[to_string(m)] = v;
      text += " " + v.str();
    }
    diffs += !same;
    entry["match"] = same;
    ctx.line(text + (same ? "" : "  DIFF expected " + f.value.str()));
    hur.push_back(std::move(entry));
  }
  ctx.line("diffs: " + std::to_string(diffs));
  ctx.result = Json{{"hodge", hodge}, {"hurwitz", hur}, {"diffs", diffs}};
  return ctx.finish(diffs == 0 ? exit_ok : exit_failed);
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Hurwitz numbers, intersection numbers, ribbon maps and random edge trees"};
  app.require_subcommand(1);
  int threads = 0;
  std::string format = "text";
  std::string budget_text;
  app.add_option("--threads", threads, "OpenMP threads (0: runtime default)")->check(CLI::NonNegativeNumber);
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--budget", budget_text, "Budget overrides, key=value,...");

  int genus = 0, cells = 0, lambda = 0, n = 0, dmax = 0, lmax = 0;
  long samples = 0, big_n = 0;
  std::uint64_t seed = 1;
  double y1 = 1, y2 = 1;
  bool htilde = false;
  std::string mu, method = "all", taus, eval, stat;

  auto* hur = app.add_subcommand("hurwitz", "Hurwitz number H_{g,mu}");
  hur->add_option("--genus", genus)->required()->check(CLI::NonNegativeNumber);
  hur->add_option("--mu", mu, "Partition, e.g. 2,1")->required();
  hur->add_option("--method", method)->check(CLI::IsMember({"monodromy", "degeneration", "elsv", "all"}));

  auto* inter = app.add_subcommand("intersect", "Intersection number <tau_k1 ... tau_kn lambda_k>_g");
  inter->add_option("--genus", genus)->required()->check(CLI::NonNegativeNumber);
  inter->add_option("--taus", taus, "Indices, e.g. 3,2")->required();
  inter->add_option("--lambda", lambda)->check(CLI::NonNegativeNumber);

  auto* kont = app.add_subcommand("kontsevich", "Both sides of the trivalent map identity");
  kont->add_option("--genus", genus)->required()->check(CLI::NonNegativeNumber);
  kont->add_option("--cells", cells)->required()->check(CLI::PositiveNumber);
  kont->add_option("--eval", eval, "Positive rationals s1,...,sn")->required();

  auto* maps = app.add_subcommand("maps", "Ribbon maps");
  maps->require_subcommand(1);
  auto* maps_enum = maps->add_subcommand("enumerate", "Trivalent maps with labeled cells");
  maps_enum->add_option("--genus", genus)->required()->check(CLI::NonNegativeNumber);
  maps_enum->add_option("--cells", cells)->required()->check(CLI::PositiveNumber);

  auto* trees = app.add_subcommand("trees", "Random edge trees");
  trees->require_subcommand(1);
  auto* trees_stats = trees->add_subcommand("stats", "Limit-law test");
  trees_stats->add_option("--stat", stat)->required()->check(
      CLI::IsMember({"trunk", "rootcomp", "semiper", "valence"}));
  trees_stats->add_option("--n", n)->required();
  trees_stats->add_option("--samples", samples)->required();
  trees_stats->add_option("--seed", seed);
  auto* trees_laplace = trees->add_subcommand("laplace", "Perimeter Laplace transform estimate");
  trees_laplace->add_option("--y1", y1)->required();
  trees_laplace->add_option("--y2", y2)->required();
  trees_laplace->add_option("--bigN", big_n)->required();
  trees_laplace->add_option("--samples", samples, "Trees per size n")->required();
  trees_laplace->add_option("--seed", seed);

  auto* toda = app.add_subcommand("toda", "Toda equation");
  toda->require_subcommand(1);
  auto* toda_verify = toda->add_subcommand("verify", "Exact residual of the truncated Toda equation");
  toda_verify->add_option("--dmax", dmax)->required();
  toda_verify->add_option("--lmax", lmax)->required();
  toda_verify->add_flag("--htilde", htilde, "Specialized equation at p_1 = 1, p_i = 0");

  auto* tables = app.add_subcommand("tables", "Reference tables");
  tables->require_subcommand(1);
  auto* tables_b = tables->add_subcommand("appendix-b", "Recompute the Hodge and Hurwitz tables and diff");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return exit_usage;
  }

  Context ctx{out};
  ctx.json = format == "json";
  try {
    ctx.budget = budget_text.empty() ? Budget::from_env() : Budget::parse(budget_text, Budget::from_env());
    if (threads > 0) omp_set_num_threads(threads);
    ctx.config = Json{{"threads", threads > 0 ? threads : omp_get_max_threads()}, {"budget", ctx.budget.str()}};

    if (*hur) {
      ctx.config.update(Json{{"command", "hurwitz"}, {"genus", genus}, {"mu", mu}, {"method", method}});
      return cmd_hurwitz(ctx, genus, mu, method);
    }
    if (*inter) {
      ctx.config.update(Json{{"command", "intersect"}, {"genus", genus}, {"taus", taus}, {"lambda", lambda}});
      return cmd_intersect(ctx, genus, taus, lambda);
    }
    if (*kont) {
      ctx.config.update(Json{{"command", "kontsevich"}, {"genus", genus}, {"cells", cells}, {"eval", eval}});
      return cmd_kontsevich(ctx, genus, cells, eval);
    }
    if (*maps_enum) {
      ctx.config.update(Json{{"command", "maps enumerate"}, {"genus", genus}, {"cells", cells}});
      return cmd_maps(ctx, genus, cells);
    }
    if (*trees_stats) {
      ctx.config.update(
          Json{{"command", "trees stats"}, {"stat", stat}, {"n", n}, {"samples", samples}, {"seed", seed}});
      return cmd_tree_stats(ctx, stat, n, samples, seed);
    }
    if (*trees_laplace) {
      ctx.config.update(Json{{"command", "trees laplace"},
                             {"y1", y1},
                             {"y2", y2},
                             {"bigN", big_n},
                             {"samples", samples},
                             {"seed", seed}});
      return cmd_tree_laplace(ctx, y1, y2, big_n, samples, seed);
    }
    if (*toda_verify) {
      ctx.config.update(Json{{"command", "toda verify"}, {"dmax", dmax}, {"lmax", lmax}, {"htilde", htilde}});
      return cmd_toda(ctx, dmax, lmax, htilde);
    }
    if (*tables_b) {
      ctx.config.update(Json{{"command", "tables appendix-b"}});
      return cmd_tables(ctx);
    }
  } catch (const BudgetExceeded& e) {
    err << "budget exceeded: " << e.what() << "\n";
    return exit_budget;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return exit_usage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return exit_usage;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << "\n";
    return exit_usage;
  }
  err << app.help();
  return exit_usage;
}

}  // namespace hurwitz
