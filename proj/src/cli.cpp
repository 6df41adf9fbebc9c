#include "richgrass/cli.hpp"

#include <fstream>
#include <functional>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "richgrass/counting.hpp"
#include "richgrass/multiplicity.hpp"
#include "richgrass/plucker.hpp"
#include "richgrass/selftest.hpp"
#include "richgrass/straighten.hpp"
#include "richgrass/tangent.hpp"

namespace richgrass {

namespace {

using nlohmann::json;

constexpr std::uint64_t kDefaultSeed = 20120;

json int_to_json(const Int& value) {
  // Stay inside the double-safe range for JSON numbers.
  if (value.fits_slong_p()) {
    const long v = value.get_si();
    if (v < (1L << 53) && v > -(1L << 53)) return v;
  }
  return value.get_str();
}

json rat_to_json(const Rat& value) { return format_rational(value); }

struct CommonArgs {
  std::string grassmannian;
  std::string format = "json";
  std::uint64_t seed = kDefaultSeed;

  GrassContext context() const { return GrassContext::parse(grassmannian); }
  bool text() const { return format == "text"; }
};

void add_common(CLI::App* cmd, CommonArgs& args, bool context_required = true) {
  auto* g = cmd->add_option("--grassmannian", args.grassmannian,
                            "ambient parameters d,n (e.g. 2,4)");
  if (context_required) g->required();
  cmd->add_option("--format", args.format, "output format")
      ->check(CLI::IsMember({"json", "text"}));
  cmd->add_option("--seed", args.seed, "seed for the random-matrix oracles");
}

void emit(std::ostream& out, const CommonArgs& args, const json& query,
          const json& result, const std::string& method,
          const std::function<void(std::ostream&)>& text_writer) {
  if (args.text()) {
    text_writer(out);
    return;
  }
  const GrassContext ctx = args.context();
  json response{{"context", {{"d", ctx.d()}, {"n", ctx.n()}}},
                {"query", query},
                {"result", result},
                {"method", method}};
  out << response.dump(2) << "\n";
}

json index_list(const std::vector<PluckerIndex>& indices) {
  json list = json::array();
  for (const auto& i : indices) list.push_back(i.str());
  return list;
}

json combination_to_json(const Combination& c) {
  json list = json::array();
  for (const auto& [mono, coeff] : c.terms()) {
    json factors = json::array();
    for (const auto& f : mono.factors()) factors.push_back(f.str());
    list.push_back({{"coefficient", int_to_json(coeff)}, {"factors", factors}});
  }
  return list;
}

int selftest_command(const CommonArgs& args, bool deep, std::ostream& out) {
  std::vector<GrassContext> contexts;
  if (!args.grassmannian.empty()) {
    contexts.push_back(args.context());
  } else {
    contexts.emplace_back(2, 4);
    contexts.emplace_back(2, 5);
  }
  if (deep) contexts.emplace_back(3, 6);

  json context_reports = json::array();
  std::ostringstream text;
  int failed = 0;
  int passed = 0;
  for (const auto& ctx : contexts) {
    // Very big contexts sample the tangent-cone oracle; the other three
    // multiplicity methods stay exhaustive. Everything through (3,6) runs
    // the oracle on every triple.
    const bool sample = ctx.index_count() > 20;
    const SelftestReport report = run_selftest(ctx, args.seed, sample);
    failed += report.failed();
    passed += static_cast<int>(report.checks.size()) - report.failed();
    json checks = json::array();
    for (const auto& check : report.checks)
      checks.push_back(
          {{"name", check.name}, {"ok", check.ok}, {"detail", check.detail}});
    context_reports.push_back(
        {{"d", ctx.d()}, {"n", ctx.n()}, {"checks", checks}});
    text << "== grassmannian " << ctx.d() << "," << ctx.n() << " ==\n"
         << report.to_text();
  }

  if (args.format == "text") {
    out << text.str();
  } else {
    json context_list = json::array();
    for (const auto& ctx : contexts)
      context_list.push_back({{"d", ctx.d()}, {"n", ctx.n()}});
    json response{{"context", context_list},
                  {"query", {{"deep", deep}, {"seed", args.seed}}},
                  {"result",
                   {{"contexts", context_reports},
                    {"passed", passed},
                    {"failed", failed}}},
                  {"method", "selftest"}};
    out << response.dump(2) << "\n";
  }
  return failed == 0 ? 0 : 3;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"exact invariants of Richardson varieties in the Grassmannian"};
  app.require_subcommand(1);

  int exit_code = 0;
  std::function<void()> action;

  // ---- poset ----------------------------------------------------------
  CommonArgs poset_args;
  auto* poset = app.add_subcommand("poset", "index poset queries");
  poset->require_subcommand(1);

  struct {
    std::string a, b, w, v, tau, side = "plus";
  } poset_in;

  auto* p_enum = poset->add_subcommand("enumerate", "all indices");
  add_common(p_enum, poset_args);
  p_enum->callback([&] {
    action = [&, cmd = std::string("poset enumerate")] {
      const GrassContext ctx = poset_args.context();
      const auto indices = enumerate_indices(ctx);
      emit(out, poset_args, json::object(), index_list(indices), cmd,
           [&](std::ostream& o) {
             for (const auto& i : indices) o << i.str() << "\n";
           });
    };
  });

  auto* p_leq = poset->add_subcommand("leq", "componentwise comparison");
  add_common(p_leq, poset_args);
  p_leq->add_option("--a", poset_in.a)->required();
  p_leq->add_option("--b", poset_in.b)->required();
  p_leq->callback([&] {
    action = [&] {
      const GrassContext ctx = poset_args.context();
      const auto a = PluckerIndex::parse(poset_in.a);
      const auto b = PluckerIndex::parse(poset_in.b);
      ctx.validate(a);
      ctx.validate(b);
      const bool result = bruhat_leq(a, b);
      emit(out, poset_args, {{"a", a.str()}, {"b", b.str()}}, result, "poset leq",
           [&](std::ostream& o) { o << (result ? "true" : "false") << "\n"; });
    };
  });

  for (const bool is_meet : {true, false}) {
    auto* cmd = poset->add_subcommand(is_meet ? "meet" : "join",
                                      is_meet ? "componentwise min"
                                              : "componentwise max");
    add_common(cmd, poset_args);
    cmd->add_option("--a", poset_in.a)->required();
    cmd->add_option("--b", poset_in.b)->required();
    cmd->callback([&, is_meet] {
      action = [&, is_meet] {
        const GrassContext ctx = poset_args.context();
        const auto a = PluckerIndex::parse(poset_in.a);
        const auto b = PluckerIndex::parse(poset_in.b);
        ctx.validate(a);
        ctx.validate(b);
        const PluckerIndex result = is_meet ? meet(a, b) : join(a, b);
        emit(out, poset_args, {{"a", a.str()}, {"b", b.str()}}, result.str(),
             is_meet ? "poset meet" : "poset join",
             [&](std::ostream& o) { o << result.str() << "\n"; });
      };
    });
  }

  auto* p_interval = poset->add_subcommand("interval", "all tau in [v, w]");
  add_common(p_interval, poset_args);
  p_interval->add_option("--w", poset_in.w)->required();
  p_interval->add_option("--v", poset_in.v)->required();
  p_interval->callback([&] {
    action = [&] {
      const GrassContext ctx = poset_args.context();
      const RichardsonId x(PluckerIndex::parse(poset_in.w),
                           PluckerIndex::parse(poset_in.v));
      const auto result = interval(ctx, x);
      emit(out, poset_args, {{"w", x.w().str()}, {"v", x.v().str()}},
           index_list(result), "poset interval", [&](std::ostream& o) {
             for (const auto& i : result) o << i.str() << "\n";
           });
    };
  });

  auto* p_boundary = poset->add_subcommand("boundary", "cover-level boundary");
  add_common(p_boundary, poset_args);
  p_boundary->add_option("--w", poset_in.w)->required();
  p_boundary->add_option("--v", poset_in.v)->required();
  p_boundary->add_option("--tau", poset_in.tau)->required();
  p_boundary->add_option("--side", poset_in.side)
      ->check(CLI::IsMember({"plus", "minus"}));
  p_boundary->callback([&] {
    action = [&] {
      const GrassContext ctx = poset_args.context();
      const RichardsonId x(PluckerIndex::parse(poset_in.w),
                           PluckerIndex::parse(poset_in.v));
      const auto tau = PluckerIndex::parse(poset_in.tau);
      const auto side =
          poset_in.side == "plus" ? BoundarySide::plus : BoundarySide::minus;
      const auto result = boundary(ctx, x, tau, side);
      emit(out, poset_args,
           {{"w", x.w().str()},
            {"v", x.v().str()},
            {"tau", tau.str()},
            {"side", poset_in.side}},
           index_list(result), "poset boundary", [&](std::ostream& o) {
             for (const auto& i : result) o << i.str() << "\n";
           });
    };
  });

  // ---- eval ------------------------------------------------------------
  CommonArgs eval_args;
  std::string eval_matrix;
  std::vector<std::string> eval_thetas;
  auto* eval_cmd =
      app.add_subcommand("eval", "evaluate Plucker coordinates on a matrix");
  add_common(eval_cmd, eval_args);
  eval_cmd->add_option("--matrix", eval_matrix, "file of n rows x d rationals")
      ->required();
  eval_cmd->add_option("--theta", eval_thetas,
                       "coordinate index (repeatable; default: all)");
  eval_cmd->callback([&] {
    action = [&] {
      const GrassContext ctx = eval_args.context();
      std::ifstream in(eval_matrix);
      if (!in) throw std::invalid_argument("cannot open matrix file: " + eval_matrix);
      const MatrixPoint m = MatrixPoint::read(in, ctx.n(), ctx.d());
      std::vector<PluckerIndex> thetas;
      if (eval_thetas.empty()) {
        thetas = enumerate_indices(ctx);
      } else {
        for (const auto& text : eval_thetas) {
          thetas.push_back(PluckerIndex::parse(text));
          ctx.validate(thetas.back());
        }
      }
      json coords = json::array();
      for (const auto& theta : thetas)
        coords.push_back(
            {{"theta", theta.str()}, {"value", rat_to_json(plucker(m, theta))}});
      emit(out, eval_args, {{"matrix", eval_matrix}}, {{"coordinates", coords}},
           "eval", [&](std::ostream& o) {
             for (const auto& theta : thetas)
               o << theta.str() << ": " << format_rational(plucker(m, theta)) << "\n";
           });
    };
  });

  // ---- straighten --------------------------------------------------------
  CommonArgs str_args;
  std::string str_monomial;
  auto* str_cmd = app.add_subcommand(
      "straighten", "rewrite a monomial as a standard combination");
  add_common(str_cmd, str_args);
  str_cmd
      ->add_option("--monomial", str_monomial,
                   "semicolon-separated indices, e.g. 1,4;2,3")
      ->required();
  str_cmd->callback([&] {
    action = [&] {
      const GrassContext ctx = str_args.context();
      const Monomial m = Monomial::parse(str_monomial);
      const Combination result = straighten(ctx, m);
      emit(out, str_args, {{"monomial", m.str()}}, combination_to_json(result),
           "straighten", [&](std::ostream& o) {
             for (const auto& [mono, coeff] : result.terms())
               o << (coeff >= 0 ? "+" : "") << coeff.get_str() << " * " << mono.str()
                 << "\n";
           });
    };
  });

  // ---- smt ---------------------------------------------------------------
  CommonArgs smt_args;
  struct {
    std::string w, v;
    int m = 0;
  } smt_in;
  auto* smt = app.add_subcommand("smt", "standard monomials on X_w^v");
  smt->require_subcommand(1);
  for (const bool counting : {true, false}) {
    auto* cmd = smt->add_subcommand(counting ? "count" : "enum",
                                    counting ? "count standard monomials"
                                             : "list standard monomials");
    add_common(cmd, smt_args);
    cmd->add_option("--w", smt_in.w)->required();
    cmd->add_option("--v", smt_in.v)->required();
    cmd->add_option("--m", smt_in.m, "degree")->required();
    cmd->callback([&, counting] {
      action = [&, counting] {
        const GrassContext ctx = smt_args.context();
        const RichardsonId x(PluckerIndex::parse(smt_in.w),
                             PluckerIndex::parse(smt_in.v));
        const json query{
            {"w", x.w().str()}, {"v", x.v().str()}, {"m", smt_in.m}};
        if (counting) {
          const Int count = count_standard(ctx, x, smt_in.m);
          emit(out, smt_args, query,
               {{"m", smt_in.m}, {"count", int_to_json(count)}}, "smt count",
               [&](std::ostream& o) { o << count.get_str() << "\n"; });
        } else {
          const auto chains = enumerate_standard(ctx, x, smt_in.m);
          json rows = json::array();
          for (const auto& chain : chains) rows.push_back(index_list(chain));
          emit(out, smt_args, query, {{"m", smt_in.m}, {"chains", rows}},
               "smt enum", [&](std::ostream& o) {
                 for (const auto& chain : chains) {
                   for (size_t i = 0; i < chain.size(); ++i)
                     o << (i ? ";" : "") << chain[i].str();
                   o << "\n";
                 }
               });
        }
      };
    });
  }

  // ---- hilbert -------------------------------------------------------------
  CommonArgs hil_args;
  struct {
    std::string w, v;
  } hil_in;
  auto* hil_cmd = app.add_subcommand("hilbert", "Hilbert polynomial of X_w^v");
  add_common(hil_cmd, hil_args);
  hil_cmd->add_option("--w", hil_in.w)->required();
  hil_cmd->add_option("--v", hil_in.v)->required();
  hil_cmd->callback([&] {
    action = [&] {
      const GrassContext ctx = hil_args.context();
      const RichardsonId x(PluckerIndex::parse(hil_in.w),
                           PluckerIndex::parse(hil_in.v));
      const HilbertPoly poly = hilbert_polynomial(ctx, x);
      const Int variety_degree = degree_of_variety(ctx, x);
      json coeffs = json::array();
      for (const auto& c : poly.coefficients) coeffs.push_back(rat_to_json(c));
      emit(out, hil_args, {{"w", x.w().str()}, {"v", x.v().str()}},
           {{"coefficients", coeffs},
            {"degree", poly.degree()},
            {"variety_degree", int_to_json(variety_degree)}},
           "hilbert", [&](std::ostream& o) {
             o << "degree " << poly.degree() << ", variety degree "
               << variety_degree.get_str() << "\ncoefficients:";
             for (const auto& c : poly.coefficients)
               o << " " << format_rational(c);
             o << "\n";
           });
    };
  });

  // ---- tangent / smooth ------------------------------------------------------
  CommonArgs tan_args;
  struct {
    std::string w, v, tau;
  } tan_in;
  auto* tan_cmd = app.add_subcommand("tangent", "tangent basis at e_tau");
  add_common(tan_cmd, tan_args);
  tan_cmd->add_option("--w", tan_in.w)->required();
  tan_cmd->add_option("--v", tan_in.v)->required();
  tan_cmd->add_option("--tau", tan_in.tau)->required();
  tan_cmd->callback([&] {
    action = [&] {
      const GrassContext ctx = tan_args.context();
      const RichardsonId x(PluckerIndex::parse(tan_in.w),
                           PluckerIndex::parse(tan_in.v));
      const auto tau = PluckerIndex::parse(tan_in.tau);
      const TangentBasis basis = tangent_basis(ctx, x, tau);
      json roots = json::array();
      for (const auto& r : basis.roots)
        roots.push_back({{"removed", r.removed},
                         {"added", r.added},
                         {"reflected", reflect(tau, r).str()}});
      emit(out, tan_args,
           {{"w", x.w().str()}, {"v", x.v().str()}, {"tau", tau.str()}}, roots,
           "tangent", [&](std::ostream& o) {
             for (const auto& r : basis.roots)
               o << "-" << r.removed << " +" << r.added << " -> "
                 << reflect(tau, r).str() << "\n";
           });
    };
  });

  CommonArgs smooth_args;
  struct {
    std::string w, v, tau;
  } smooth_in;
  auto* smooth_cmd = app.add_subcommand("smooth", "smoothness at e_tau");
  add_common(smooth_cmd, smooth_args);
  smooth_cmd->add_option("--w", smooth_in.w)->required();
  smooth_cmd->add_option("--v", smooth_in.v)->required();
  smooth_cmd->add_option("--tau", smooth_in.tau)->required();
  smooth_cmd->callback([&] {
    action = [&] {
      const GrassContext ctx = smooth_args.context();
      const RichardsonId x(PluckerIndex::parse(smooth_in.w),
                           PluckerIndex::parse(smooth_in.v));
      const auto tau = PluckerIndex::parse(smooth_in.tau);
      const SmoothTriple triple = smooth_product_check(ctx, x, tau);
      const int tangent_dim = tangent_basis(ctx, x, tau).dimension();
      emit(out, smooth_args,
           {{"w", x.w().str()}, {"v", x.v().str()}, {"tau", tau.str()}},
           {{"smooth", triple.richardson},
            {"schubert_smooth", triple.schubert},
            {"opposite_smooth", triple.opposite},
            {"dimension", dim_richardson(x)},
            {"tangent_dimension", tangent_dim}},
           "smooth", [&](std::ostream& o) {
             o << "smooth: " << (triple.richardson ? "yes" : "no")
               << " (tangent " << tangent_dim << ", dimension "
               << dim_richardson(x) << "); schubert "
               << (triple.schubert ? "smooth" : "singular") << ", opposite "
               << (triple.opposite ? "smooth" : "singular") << "\n";
           });
    };
  });

  // ---- mult -------------------------------------------------------------------
  CommonArgs mult_args;
  struct {
    std::string w, v, tau, method = "all";
  } mult_in;
  auto* mult_cmd = app.add_subcommand("mult", "multiplicity at e_tau");
  add_common(mult_cmd, mult_args);
  mult_cmd->add_option("--w", mult_in.w)->required();
  mult_cmd->add_option("--v", mult_in.v)->required();
  mult_cmd->add_option("--tau", mult_in.tau)->required();
  mult_cmd->add_option("--method", mult_in.method)
      ->check(CLI::IsMember({"recursive", "product", "determinant", "oracle", "all"}));
  mult_cmd->callback([&] {
    action = [&] {
      const GrassContext ctx = mult_args.context();
      const RichardsonId x(PluckerIndex::parse(mult_in.w),
                           PluckerIndex::parse(mult_in.v));
      const auto tau = PluckerIndex::parse(mult_in.tau);
      const json query{{"w", x.w().str()},
                       {"v", x.v().str()},
                       {"tau", tau.str()},
                       {"method", mult_in.method}};
      if (mult_in.method == "all") {
        const MultiplicityReport report = mult_all(ctx, x, tau);
        emit(out, mult_args, query,
             {{"recursive", int_to_json(report.recursive)},
              {"product", int_to_json(report.product)},
              {"determinantal", int_to_json(report.determinantal)},
              {"oracle", int_to_json(report.oracle)},
              {"agree", report.agree}},
             "mult all", [&](std::ostream& o) {
               o << "recursive=" << report.recursive.get_str()
                 << " product=" << report.product.get_str()
                 << " determinantal=" << report.determinantal.get_str()
                 << " oracle=" << report.oracle.get_str()
                 << " agree=" << (report.agree ? "yes" : "no") << "\n";
             });
      } else {
        Int value;
        if (mult_in.method == "recursive") value = mult_recursive(ctx, x, tau);
        else if (mult_in.method == "product") value = mult_product(ctx, x, tau);
        else if (mult_in.method == "determinant") value = mult_richardson_det(ctx, x, tau);
        else value = mult_oracle(ctx, x, tau);
        emit(out, mult_args, query, {{"value", int_to_json(value)}},
             "mult " + mult_in.method,
             [&](std::ostream& o) { o << value.get_str() << "\n"; });
      }
    };
  });

  // ---- selftest ------------------------------------------------------------------
  CommonArgs self_args;
  bool self_deep = false;
  auto* self_cmd = app.add_subcommand("selftest", "exhaustive verification");
  add_common(self_cmd, self_args, /*context_required=*/false);
  self_cmd->add_flag("--deep", self_deep, "also run d=3, n=6");
  self_cmd->callback([&] {
    action = [&] { exit_code = selftest_command(self_args, self_deep, out); };
  });

  std::vector<std::string> argv = args;
  try {
    app.parse(argv.empty() ? std::vector<std::string>{}
                           : std::vector<std::string>(argv.rbegin(), argv.rend()));
  } catch (const CLI::CallForHelp& help) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& parse_error) {
    err << parse_error.what() << "\n";
    return 2;
  }

  try {
    if (action) action();
    return exit_code;
  } catch (const std::invalid_argument& bad_argument) {
    json error{{"error", bad_argument.what()}, {"code", 2}};
    out << error.dump(2) << "\n";
    return 2;
  } catch (const std::exception& failure) {
    json error{{"error", failure.what()}, {"code", 1}};
    out << error.dump(2) << "\n";
    return 1;
  }
}

}  // namespace richgrass
