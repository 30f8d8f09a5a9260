#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <string>

#include "credal/cantor.hpp"
#include "credal/error.hpp"
#include "credal/finite_oracle.hpp"
#include "credal/integrator.hpp"
#include "credal/json_io.hpp"
#include "credal/liminal.hpp"
#include "credal/selftest.hpp"
#include "credal/stone.hpp"

namespace {

using namespace credal;

constexpr int kExitOk = 0;
constexpr int kExitVerificationFailure = 1;
constexpr int kExitInputError = 2;

void emit(const Json& j, const std::string& path) {
  if (path.empty()) {
    std::cout << j.dump() << "\n";
  } else {
    std::ofstream out(path);
    if (!out) fail(ErrorCode::InvalidArgument, "cannot write '" + path + "'");
    out << j.dump(2) << "\n";
  }
}

struct AlgebraArgs {
  std::string op;
  std::string lhs;
  std::string rhs;
  std::string ambient_json;
};

int run_algebra(const AlgebraArgs& args) {
  std::optional<Ambient> ambient;
  if (!args.ambient_json.empty()) ambient = ambient_from_json(load_json_arg(args.ambient_json));
  ElementarySet a = set_from_json(load_json_arg(args.lhs), ambient);
  auto need_rhs = [&]() {
    if (args.rhs.empty()) fail(ErrorCode::InvalidArgument, "'" + args.op + "' needs two sets");
    return set_from_json(load_json_arg(args.rhs), a.ambient());
  };
  if (args.op == "join") {
    emit(set_to_json(join(a, need_rhs())), "");
  } else if (args.op == "meet") {
    emit(set_to_json(meet(a, need_rhs())), "");
  } else if (args.op == "neg") {
    emit(set_to_json(neg(a)), "");
  } else if (args.op == "regularize") {
    emit(set_to_json(a), "");  // parsing already regularizes raw intervals
  } else if (args.op == "extend") {
    emit(set_to_json(extend(a)), "");
  } else if (args.op == "boundary") {
    Json points = Json::array();
    for (const Rational& x : boundary(a)) points.push_back(format_rational(x));
    emit(points, "");
  } else {
    fail(ErrorCode::InvalidArgument, "unknown algebra op '" + args.op + "'");
  }
  return kExitOk;
}

struct IntegrateArgs {
  std::string credence, fn, set, eps = "1/100";
  int decimals = 6;
  std::string trace;  // "csv" for convergence rows
  bool exact = false;
  bool expectation = false;
};

int run_integrate(const IntegrateArgs& args) {
  Credence mu = credence_from_json(load_json_arg(args.credence));
  PiecewiseAffine g = piecewise_from_json(load_json_arg(args.fn), mu.ambient());
  ElementarySet b = args.set.empty() ? ElementarySet::full(mu.ambient())
                                     : set_from_json(load_json_arg(args.set), mu.ambient());
  Rational eps = parse_rational(args.eps);

  if (args.trace == "csv") {
    long n_final = ceil_reciprocal(eps);
    std::cout << "N,minorant_value\n";
    for (long n = 1; n < n_final; n *= 2)
      std::cout << n << "," << format_rational(simple_integral(level_minorant(g, n), mu, b)) << "\n";
    std::cout << n_final << ","
              << format_rational(simple_integral(level_minorant(g, n_final), mu, b)) << "\n";
  }

  Rational value = args.expectation ? conditional_expectation(g, mu, b, eps) : integrate(g, mu, b, eps);
  Json out;
  out["value"] = format_rational(value);
  out["decimal"] = decimal_string(value, args.decimals);
  if (args.exact) {
    Rational exact =
        args.expectation ? conditional_expectation_exact(g, mu, b) : integrate_exact(g, mu, b);
    out["exact"] = format_rational(exact);
    out["exact_decimal"] = decimal_string(exact, args.decimals);
  }
  emit(out, "");
  return kExitOk;
}

int run_pushforward(const std::string& map_arg, const std::string& credence_arg) {
  Credence mu = credence_from_json(load_json_arg(credence_arg));
  MonotoneAffineMap phi = map_from_json(load_json_arg(map_arg), mu.ambient());
  emit(credence_to_json(pushforward(phi, mu)), "");
  return kExitOk;
}

int run_liminal(const std::string& credence_arg, bool do_compactify) {
  Credence mu = credence_from_json(load_json_arg(credence_arg));
  if (do_compactify || mu.ambient().kind() != AmbientKind::ClosedInterval) mu = compactify(mu);
  emit(decomposition_to_json(decompose(mu)), "");
  return kExitOk;
}

int run_stone(const std::string& generators_arg, const std::string& credence_arg) {
  Credence mu = credence_from_json(load_json_arg(credence_arg));
  Json gens_json = load_json_arg(generators_arg);
  if (gens_json.is_object() && gens_json.contains("generators")) gens_json = gens_json["generators"];
  std::vector<ElementarySet> generators;
  for (const Json& g : gens_json) generators.push_back(set_from_json(g, mu.ambient()));
  auto algebra = std::make_shared<FiniteAlgebra>(FiniteAlgebra::generate(generators, mu.ambient()));
  std::vector<Rational> weights = star_measure(mu, *algebra);

  Json out;
  Json atoms = Json::array(), weight_list = Json::array();
  for (const ElementarySet& atom : algebra->atoms()) atoms.push_back(set_to_json(atom));
  for (const Rational& w : weights) weight_list.push_back(format_rational(w));
  out["atoms"] = atoms;
  out["weights"] = weight_list;

  // Verification: total mass one; the star measure reproduces the mass of
  // every element of the algebra.
  Rational total = 0;
  for (const Rational& w : weights) total += w;
  bool consistent = true;
  for (AtomMask mask = 0; mask < algebra->element_count(); ++mask) {
    Rational sum = 0;
    for (std::size_t i = 0; i < weights.size(); ++i) {
      if (mask & (AtomMask(1) << i)) sum += weights[i];
    }
    if (sum != eval(mu, algebra->element(mask))) {
      consistent = false;
      break;
    }
  }
  out["verification"] = Json{{"total_mass_one", total == 1}, {"element_masses_match", consistent}};
  emit(out, "");
  return (total == 1 && consistent) ? kExitOk : kExitVerificationFailure;
}

int run_oracle(int max_points, const std::string& checks_csv, const std::string& emit_path) {
  bool check_algebra = checks_csv.find("algebra") != std::string::npos;
  bool check_baire = checks_csv.find("baire") != std::string::npos;
  bool check_integral = checks_csv.find("integral") != std::string::npos;
  bool check_stone = checks_csv.find("stone") != std::string::npos;

  Json failures = Json::array();
  bool all_ok = true;
  for (int n = 1; n <= max_points; ++n) {
    auto by_subsets = enumerate_topologies(n, TopologyEnumeration::SubsetScan);
    auto by_preorders = enumerate_topologies(n, TopologyEnumeration::PreorderScan);
    bool counts_ok = by_subsets.size() == by_preorders.size();
    for (std::size_t i = 0; counts_ok && i < by_subsets.size(); ++i)
      counts_ok = by_subsets[i].opens == by_preorders[i].opens;

    long algebra_fail = 0, baire_fail = 0, integral_fail = 0, stone_fail = 0;
    for (const FiniteSpace& space : by_subsets) {
      RegularAlgebra ra = regular_algebra(space);
      if (check_algebra && !check_boolean_axioms(ra)) {
        ++algebra_fail;
        failures.push_back(Json{{"n", n}, {"check", "algebra"}, {"opens", space.opens}});
      }
      if (check_baire && !baire_bijection_check(space)) {
        ++baire_fail;
        failures.push_back(Json{{"n", n}, {"check", "baire"}, {"opens", space.opens}});
      }
      if (check_integral) {
        std::vector<PointSet> atoms = ra.atoms();
        std::vector<Rational> weights(atoms.size());
        long total = static_cast<long>(atoms.size()) * (static_cast<long>(atoms.size()) + 1) / 2;
        for (std::size_t i = 0; i < atoms.size(); ++i)
          weights[i] = make_rational(static_cast<long>(i) + 1, total);
        std::vector<Rational> values;
        for (std::size_t i = 0; i < atoms.size(); ++i)
          values.push_back(make_rational(static_cast<long>(2 * i) - 1, 3));
        if (!baire_integral_check(space, weights, atoms, values, space.full(), make_rational(71, 7))) {
          ++integral_fail;
          failures.push_back(Json{{"n", n}, {"check", "integral"}, {"opens", space.opens}});
        }
      }
      if (check_stone && static_cast<int>(space.opens.size()) == (1 << n)) {
        // Discrete space: the Stone space of its regular algebra is the
        // space itself, atoms are the singletons.
        std::vector<PointSet> atoms = ra.atoms();
        bool canonical = atoms.size() == static_cast<std::size_t>(n);
        for (std::size_t i = 0; canonical && i < atoms.size(); ++i)
          canonical = atoms[i] == (PointSet(1) << i);
        canonical = canonical && ra.elements.size() == (std::size_t(1) << n);
        if (!canonical) {
          ++stone_fail;
          failures.push_back(Json{{"n", n}, {"check", "stone"}, {"opens", space.opens}});
        }
      }
    }
    all_ok = all_ok && counts_ok && algebra_fail == 0 && baire_fail == 0 && integral_fail == 0 &&
             stone_fail == 0;
    std::cout << "n=" << n << " topologies=" << by_subsets.size()
              << " recount=" << (counts_ok ? "match" : "MISMATCH");
    if (check_algebra) std::cout << " algebra_failures=" << algebra_fail;
    if (check_baire) std::cout << " baire_failures=" << baire_fail;
    if (check_integral) std::cout << " integral_failures=" << integral_fail;
    if (check_stone) std::cout << " stone_failures=" << stone_fail;
    std::cout << "\n";
  }
  if (!emit_path.empty()) emit(failures, emit_path);
  return all_ok ? kExitOk : kExitVerificationFailure;
}

int run_cantor(int depth, const std::string& ratios_arg, const std::string& emit_path, bool trace_csv) {
  std::vector<Rational> ratios;
  if (ratios_arg == "quarter") {
    ratios = quarter_ratios(depth);
  } else if (ratios_arg == "third") {
    ratios.assign(static_cast<std::size_t>(depth), make_rational(1, 3));
  } else {
    std::string item;
    for (std::size_t i = 0; i <= ratios_arg.size(); ++i) {
      if (i == ratios_arg.size() || ratios_arg[i] == ',') {
        if (!item.empty()) ratios.push_back(parse_rational(item));
        item.clear();
      } else {
        item += ratios_arg[i];
      }
    }
  }
  if (trace_csv) std::cout << "n,removed_measure,block_width,max_gap\n";
  Json report;
  for (int n = trace_csv ? 1 : depth; n <= depth; ++n) {
    CantorStage stage = fat_cantor(n, ratios);
    if (trace_csv)
      std::cout << n << "," << format_rational(stage.removed_measure) << ","
                << format_rational(stage.block_width) << "," << format_rational(stage.max_gap) << "\n";
    if (n == depth) {
      report["depth"] = depth;
      report["measure"] = format_rational(stage.removed_measure);
      report["gap"] = format_rational(stage.max_gap);
      // L and R take one half of every removed interval each.
      report["L_plus_R"] = format_rational(stage.removed_measure);
      report["blocks"] = stage.block_count;
      if (stage.removed) {
        auto [left, right] = left_right_halves(*stage.removed);
        report["L_plus_R"] =
            format_rational(Rational(left.length().value() + right.length().value()));
      }
    }
  }
  emit(report, emit_path);
  return kExitOk;
}

int run_nocredence(const std::string& cdf_arg, int depth, const std::string& points_arg,
                   const std::string& emit_path) {
  PiecewiseAffine cdf = cdf_arg.empty()
                            ? PiecewiseAffine::make({Rational(0), Rational(1)}, {Rational(0), Rational(1)},
                                                    Ambient::closed(0, 1))
                            : piecewise_from_json(load_json_arg(cdf_arg), Ambient::closed(0, 1));
  std::vector<Rational> points;
  if (points_arg.empty()) {
    for (int level = 1; static_cast<int>(points.size()) < 4 * depth + 8; ++level) {
      for (long odd = 1; odd < (1L << level); odd += 2) points.push_back(make_rational(odd, 1L << level));
    }
  } else {
    for (const Json& p : load_json_arg(points_arg)) points.push_back(parse_rational(p.get<std::string>()));
  }
  DenseOpenResult result = dense_open_below_one(cdf, points, depth);
  Json report;
  report["depth"] = depth;
  report["mass"] = format_rational(result.mass);
  report["mass_bound"] = format_rational(result.mass_bound);
  report["below_one"] = result.mass < 1;
  report["coverage_radius"] = format_rational(result.coverage_radius);
  report["pieces"] = result.set.piece_count();
  emit(report, emit_path);
  return result.mass < 1 ? kExitOk : kExitVerificationFailure;
}

int run_selftest_cmd(unsigned long seed, long scale) {
  bool ok = true;
  for (const SuiteResult& suite : run_selftest(seed, scale)) {
    std::cout << (suite.passed() ? "[PASS] " : "[FAIL] ") << suite.name << " cases=" << suite.cases
              << " failures=" << suite.failures;
    if (!suite.passed()) std::cout << " witness=" << suite.witness;
    std::cout << "\n";
    ok = ok && suite.passed();
  }
  return ok ? kExitOk : kExitVerificationFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact credences on regular open interval algebras"};
  app.require_subcommand(1);

  AlgebraArgs algebra_args;
  CLI::App* algebra = app.add_subcommand("algebra", "regular-open set operations");
  algebra->add_option("op", algebra_args.op, "join|meet|neg|boundary|extend|regularize")->required();
  algebra->add_option("lhs", algebra_args.lhs, "set JSON or file")->required();
  algebra->add_option("rhs", algebra_args.rhs, "second set for join/meet");
  algebra->add_option("--ambient", algebra_args.ambient_json, "ambient JSON");

  IntegrateArgs integrate_args;
  CLI::App* integrate_cmd = app.add_subcommand("integrate", "lower integral of a piecewise-affine g");
  integrate_cmd->add_option("--credence", integrate_args.credence, "credence JSON or file")->required();
  integrate_cmd->add_option("--fn", integrate_args.fn, "integrand JSON or file")->required();
  integrate_cmd->add_option("--set", integrate_args.set, "set JSON or file (default: whole space)");
  integrate_cmd->add_option("--eps", integrate_args.eps, "tolerance (default 1/100)");
  integrate_cmd->add_option("--decimals", integrate_args.decimals, "decimal digits (default 6)");
  integrate_cmd->add_option("--trace", integrate_args.trace, "csv: emit (N, minorant value) rows");
  integrate_cmd->add_flag("--exact", integrate_args.exact, "also report the closed-form value");

  IntegrateArgs expect_args;
  expect_args.expectation = true;
  CLI::App* expect_cmd = app.add_subcommand("expect", "conditional expectation given a set");
  expect_cmd->add_option("--credence", expect_args.credence)->required();
  expect_cmd->add_option("--fn", expect_args.fn)->required();
  expect_cmd->add_option("--set", expect_args.set);
  expect_cmd->add_option("--eps", expect_args.eps);
  expect_cmd->add_option("--decimals", expect_args.decimals);
  expect_cmd->add_flag("--exact", expect_args.exact);

  std::string map_arg, credence_arg;
  CLI::App* push_cmd = app.add_subcommand("pushforward", "image credence under a monotone map");
  push_cmd->add_option("--map", map_arg)->required();
  push_cmd->add_option("--credence", credence_arg)->required();

  std::string liminal_credence;
  bool liminal_compactify = false;
  CLI::App* liminal_cmd = app.add_subcommand("liminal", "liminal decomposition of a mixture");
  CLI::App* decompose_cmd = liminal_cmd->add_subcommand("decompose", "emit Borel part and side shares");
  decompose_cmd->add_option("--credence", liminal_credence)->required();
  decompose_cmd->add_flag("--compactify", liminal_compactify, "compactify an open ambient first");
  liminal_cmd->require_subcommand(1);

  std::string stone_generators, stone_credence;
  CLI::App* stone_cmd = app.add_subcommand("stone", "finite Stone representation");
  stone_cmd->add_option("--generators", stone_generators)->required();
  stone_cmd->add_option("--credence", stone_credence)->required();

  int oracle_points = 4;
  std::string oracle_checks = "algebra,baire,integral,stone";
  std::string oracle_emit;
  CLI::App* oracle_cmd = app.add_subcommand("oracle", "brute-force checks on finite topologies");
  oracle_cmd->add_option("--max-points", oracle_points, "largest point count (<= 4)");
  oracle_cmd->add_option("--checks", oracle_checks, "comma list: algebra,baire,integral,stone");
  oracle_cmd->add_option("--emit", oracle_emit, "write failure witnesses to a file");

  int cantor_depth = 10;
  std::string cantor_ratios = "quarter";
  std::string cantor_emit;
  bool cantor_trace = false;
  CLI::App* cantor_cmd = app.add_subcommand("cantor", "fat-Cantor removal stages");
  cantor_cmd->add_option("--depth", cantor_depth);
  cantor_cmd->add_option("--ratios", cantor_ratios, "quarter|third|comma list of fractions");
  cantor_cmd->add_option("--emit", cantor_emit);
  cantor_cmd->add_flag("--trace", cantor_trace, "per-stage CSV rows");

  std::string nocredence_cdf, nocredence_points, nocredence_emit;
  int nocredence_depth = 10;
  CLI::App* nocredence_cmd = app.add_subcommand("nocredence", "dense open set of mass below one");
  nocredence_cmd->add_option("--cdf", nocredence_cdf, "strictly increasing cdf (default uniform)");
  nocredence_cmd->add_option("--depth", nocredence_depth);
  nocredence_cmd->add_option("--points", nocredence_points, "JSON array of enumeration points");
  nocredence_cmd->add_option("--emit", nocredence_emit);

  unsigned long selftest_seed = 20260809;
  long selftest_scale = 25;
  CLI::App* selftest_cmd = app.add_subcommand("selftest", "run the randomized invariant suites");
  selftest_cmd->add_option("--seed", selftest_seed);
  selftest_cmd->add_option("--scale", selftest_scale, "case multiplier (default 25)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*algebra) return run_algebra(algebra_args);
    if (*integrate_cmd) return run_integrate(integrate_args);
    if (*expect_cmd) return run_integrate(expect_args);
    if (*push_cmd) return run_pushforward(map_arg, credence_arg);
    if (*liminal_cmd) return run_liminal(liminal_credence, liminal_compactify);
    if (*stone_cmd) return run_stone(stone_generators, stone_credence);
    if (*oracle_cmd) return run_oracle(oracle_points, oracle_checks, oracle_emit);
    if (*cantor_cmd) return run_cantor(cantor_depth, cantor_ratios, cantor_emit, cantor_trace);
    if (*nocredence_cmd)
      return run_nocredence(nocredence_cdf, nocredence_depth, nocredence_points, nocredence_emit);
    if (*selftest_cmd) return run_selftest_cmd(selftest_seed, selftest_scale);
  } catch (const credal::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  }
  return kExitInputError;
}
