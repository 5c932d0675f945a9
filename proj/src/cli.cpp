#include "mint/cli.hpp"

#include <cmath>
#include <cstdint>
#include <iostream>
#include <optional>

#include "CLI11.hpp"
#include "mint/io.hpp"
#include "mint/lorentz.hpp"

namespace mint {

namespace {

struct CliState {
  int threads = 1;
  std::string out;
  bool verified = true;
  std::optional<Json> result;

  void deliver(Json j) { result = std::move(j); }
};

Exponent parse_exponent(const std::string& text) {
  if (text == "inf") return Exponent::inf();
  try {
    std::size_t used = 0;
    const double value = std::stod(text, &used);
    if (used != text.size()) raise(ErrorCode::InvalidInput, "bad exponent: " + text);
    return Exponent(value);
  } catch (const std::invalid_argument&) {
    raise(ErrorCode::InvalidInput, "bad exponent: " + text);
  } catch (const std::out_of_range&) {
    raise(ErrorCode::InvalidInput, "bad exponent: " + text);
  }
}

Eigen::Index support_size(const SimpleFunction& f) {
  Eigen::Index count = 0;
  for (Eigen::Index i = 0; i < f.values.size(); ++i)
    if (f.values[i] != Complex(0.0, 0.0)) ++count;
  return count;
}

std::vector<EstimateClaim> resolve_claims(const Kernel& kernel,
                                          const std::vector<ClaimSpec>& specs, int threads) {
  if (specs.empty()) raise(ErrorCode::InvalidInput, "the claims file is empty");
  std::vector<EstimateClaim> claims;
  claims.reserve(specs.size());
  for (const auto& spec : specs) {
    const ExponentTuple tuple = validate_tuple(spec.alpha);
    if (spec.bound)
      claims.push_back(EstimateClaim{tuple, *spec.bound, Provenance::UserSupplied, std::nullopt});
    else
      claims.push_back(restricted_weak_constant_exhaustive(kernel, tuple, threads));
  }
  return claims;
}

CombinationWeights resolve_thetas(const ExponentTuple& alpha,
                                  const std::vector<EstimateClaim>& claims,
                                  const std::vector<double>& thetas_flag) {
  if (!thetas_flag.empty()) {
    Eigen::VectorXd thetas(Eigen::Index(thetas_flag.size()));
    for (std::size_t i = 0; i < thetas_flag.size(); ++i)
      thetas[Eigen::Index(i)] = thetas_flag[i];
    return CombinationWeights(std::move(thetas));
  }
  std::vector<ExponentTuple> tuples;
  tuples.reserve(claims.size());
  for (const auto& c : claims) tuples.push_back(c.tuple);
  auto solved = solve_combination(alpha, tuples);
  if (!solved)
    raise(ErrorCode::CombinationMismatch, "the target tuple lies outside the claims' hull");
  return *solved;
}

void add_norm(CLI::App& app, CliState& state) {
  auto* cmd = app.add_subcommand("norm", "Lorentz functionals of a function file");
  cmd->fallthrough();
  auto function_path = std::make_shared<std::string>();
  auto p_text = std::make_shared<std::string>("2");
  cmd->add_option("--function", *function_path, "function JSON")->required();
  cmd->add_option("--p", *p_text, "exponent, a positive number or 'inf'");
  cmd->callback([&state, function_path, p_text] {
    const SimpleFunction f = function_from_json(read_json_file(*function_path));
    const Exponent p = parse_exponent(*p_text);
    Json out{{"p", p.is_inf() ? Json("inf") : Json(p.value())},
             {"lp", lp_norm(f, p)},
             {"weak", weak_norm(f, p)},
             {"lorentz1", nullptr},
             {"dual", nullptr}};
    if (!p.is_inf() && p.value() >= 1.0) out["lorentz1"] = lorentz1_rearrangement(f, p);
    if (!p.is_inf() && p.value() > 1.0 && support_size(f) <= 20) out["dual"] = lorentz1_dual(f, p);
    state.deliver(std::move(out));
  });
}

void add_tuple(CLI::App& app, CliState& state) {
  auto* tuple = app.add_subcommand("tuple", "exponent tuple utilities");
  tuple->fallthrough();
  tuple->require_subcommand(1);
  auto* cmd = tuple->add_subcommand("classify", "good/bad classification");
  cmd->fallthrough();
  auto alpha = std::make_shared<std::vector<double>>();
  cmd->add_option("--alpha", *alpha, "tuple entries")->required()->delimiter(',');
  cmd->callback([&state, alpha] {
    const ExponentTuple t = validate_tuple(*alpha);
    const Classification cls = classify(t);
    state.deliver(Json{{"alpha", *alpha},
                       {"class", cls.good ? "good" : "bad"},
                       {"bad_index", cls.good ? Json(nullptr) : Json(cls.bad_index)}});
  });
}

void add_region(CLI::App& app, CliState& state) {
  auto* region = app.add_subcommand("region", "exponent region geometry");
  region->fallthrough();
  region->require_subcommand(1);
  auto* cmd = region->add_subcommand("deduce", "deduce the good-tuple region of a claim family");
  cmd->fallthrough();
  auto claims_path = std::make_shared<std::string>();
  auto csv_path = std::make_shared<std::string>();
  auto resolution = std::make_shared<int>(16);
  auto delta = std::make_shared<double>(1e-6);
  cmd->add_option("--claims", *claims_path, "claims JSON")->required();
  cmd->add_option("--resolution", *resolution, "grid subdivisions per edge");
  cmd->add_option("--delta", *delta, "interiority probe radius");
  cmd->add_option("--csv", *csv_path, "also write the grid as CSV");
  cmd->callback([&state, claims_path, csv_path, resolution, delta] {
    std::vector<ExponentTuple> claims;
    for (const auto& spec : claims_from_json(read_json_file(*claims_path)))
      claims.push_back(validate_tuple(spec.alpha));
    const RegionDescription region =
        deduce_strong_region(claims, *resolution, *delta, state.threads);
    if (!csv_path->empty()) write_text_file(*csv_path, region_csv(region));
    state.deliver(region_json(region));
  });
}

void add_const(CLI::App& app, CliState& state) {
  auto* group = app.add_subcommand("const", "constants of a concrete form");
  group->fallthrough();
  group->require_subcommand(1);

  auto* rwt = group->add_subcommand("rwt", "restricted weak-type constant");
  rwt->fallthrough();
  {
    auto kernel_path = std::make_shared<std::string>();
    auto alpha = std::make_shared<std::vector<double>>();
    auto mode = std::make_shared<std::string>("exhaustive");
    auto seed = std::make_shared<std::uint64_t>(0);
    auto restarts = std::make_shared<int>(32);
    auto passes = std::make_shared<int>(64);
    rwt->add_option("--kernel", *kernel_path, "kernel JSON")->required();
    rwt->add_option("--alpha", *alpha, "tuple entries")->required()->delimiter(',');
    rwt->add_option("--mode", *mode, "exhaustive or search")
        ->check(CLI::IsMember({"exhaustive", "search"}));
    rwt->add_option("--seed", *seed, "search seed");
    rwt->add_option("--restarts", *restarts, "search restarts");
    rwt->add_option("--passes", *passes, "hill-climbing passes per restart");
    rwt->callback([&state, kernel_path, alpha, mode, seed, restarts, passes] {
      const Kernel kernel = kernel_from_json(read_json_file(*kernel_path));
      const ExponentTuple t = validate_tuple(*alpha);
      const EstimateClaim claim =
          *mode == "exhaustive"
              ? restricted_weak_constant_exhaustive(kernel, t, state.threads)
              : restricted_weak_constant_search(
                    kernel, t, RwtOptions{*seed, *restarts, *passes, state.threads});
      state.deliver(claim_json(claim));
    });
  }

  auto* strong = group->add_subcommand("strong", "strong-type lower bound by ascent");
  strong->fallthrough();
  {
    auto kernel_path = std::make_shared<std::string>();
    auto alpha = std::make_shared<std::vector<double>>();
    auto seed = std::make_shared<std::uint64_t>(0);
    auto starts = std::make_shared<int>(8);
    auto cycles = std::make_shared<int>(200);
    auto tol = std::make_shared<double>(1e-10);
    strong->add_option("--kernel", *kernel_path, "kernel JSON")->required();
    strong->add_option("--alpha", *alpha, "tuple entries")->required()->delimiter(',');
    strong->add_option("--seed", *seed, "initialisation seed");
    strong->add_option("--starts", *starts, "random starts");
    strong->add_option("--cycles", *cycles, "maximum ascent cycles");
    strong->add_option("--tol", *tol, "relative-gain stopping tolerance");
    strong->callback([&state, kernel_path, alpha, seed, starts, cycles, tol] {
      const Kernel kernel = kernel_from_json(read_json_file(*kernel_path));
      const ExponentTuple t = validate_tuple(*alpha);
      AscentOptions options;
      options.seed = *seed;
      options.starts = *starts;
      options.max_cycles = *cycles;
      options.tolerance = *tol;
      state.deliver(claim_json(strong_type_lower(kernel, t, options)));
    });
  }
}

void add_interp(CLI::App& app, CliState& state) {
  auto* group = app.add_subcommand("interp", "interpolation of claimed bounds");
  group->fallthrough();
  group->require_subcommand(1);

  struct InterpFlags {
    std::string kernel_path;
    std::string claims_path;
    std::vector<double> alpha;
    std::vector<double> thetas;
  };
  auto add_common = [](CLI::App* cmd, const std::shared_ptr<InterpFlags>& flags) {
    cmd->add_option("--kernel", flags->kernel_path, "kernel JSON")->required();
    cmd->add_option("--claims", flags->claims_path, "claims JSON")->required();
    cmd->add_option("--alpha", flags->alpha, "target tuple")->required()->delimiter(',');
    cmd->add_option("--thetas", flags->thetas, "barycentric weights; solved for when absent")
        ->delimiter(',');
  };

  auto* verify = group->add_subcommand("verify", "check A against C times the bound product");
  verify->fallthrough();
  {
    auto flags = std::make_shared<InterpFlags>();
    add_common(verify, flags);
    verify->callback([&state, flags] {
      const Kernel kernel = kernel_from_json(read_json_file(flags->kernel_path));
      const auto claims =
          resolve_claims(kernel, claims_from_json(read_json_file(flags->claims_path)),
                         state.threads);
      const ExponentTuple alpha = validate_tuple(flags->alpha);
      const CombinationWeights thetas = resolve_thetas(alpha, claims, flags->thetas);
      const TheoremReport report = verify_theorem(kernel, claims, thetas, alpha, state.threads);
      state.verified = report.pass;
      state.deliver(report_json(report));
    });
  }

  auto* trace = group->add_subcommand("trace", "verify and replay the splitting argument");
  trace->fallthrough();
  {
    auto flags = std::make_shared<InterpFlags>();
    auto epsilon = std::make_shared<double>(0.0);
    auto epsilon_frac = std::make_shared<double>(0.01);
    add_common(trace, flags);
    trace->add_option("--epsilon", *epsilon, "absolute epsilon; overrides --epsilon-frac");
    trace->add_option("--epsilon-frac", *epsilon_frac,
                      "epsilon as a fraction of the normalised constant");
    trace->callback([&state, flags, epsilon, epsilon_frac] {
      const Kernel kernel = kernel_from_json(read_json_file(flags->kernel_path));
      const auto claims =
          resolve_claims(kernel, claims_from_json(read_json_file(flags->claims_path)),
                         state.threads);
      const ExponentTuple alpha = validate_tuple(flags->alpha);
      const CombinationWeights thetas = resolve_thetas(alpha, claims, flags->thetas);
      const TheoremReport report = verify_theorem(kernel, claims, thetas, alpha, state.threads);
      const double eps = *epsilon > 0.0
                             ? *epsilon
                             : *epsilon_frac * (report.A / report.product_of_bounds);
      const ProofTrace proof = trace_proof(kernel, claims, thetas, alpha, eps, state.threads);
      state.verified = report.pass && proof.all_ok();
      state.deliver(report_json(report, &proof));
    });
  }
}

void add_app(CLI::App& app, CliState& state) {
  auto* group = app.add_subcommand("app", "application kernels and their checks");
  group->fallthrough();
  group->require_subcommand(1);

  auto* wolff = group->add_subcommand("wolff", "truncated Hilbert-type pair");
  wolff->fallthrough();
  {
    auto n = std::make_shared<Eigen::Index>(8);
    wolff->add_option("--n", *n, "grid points");
    wolff->callback([&state, n] { state.deliver(kernel_json(make_wolff_pair(*n))); });
  }

  auto cz_flags = std::make_shared<CZConfig>();
  auto add_cz_options = [cz_flags](CLI::App* cmd) {
    cmd->add_option("--m", cz_flags->m, "arity");
    cmd->add_option("--grid", cz_flags->grid, "periodic grid side");
    cmd->add_option("--c-size", cz_flags->c_size, "size constant");
    cmd->add_option("--c-grad", cz_flags->c_grad, "gradient constant");
    cmd->add_option("--eps-trunc", cz_flags->eps_trunc, "truncation radius");
  };

  auto* cz_gen = group->add_subcommand("cz-gen", "random kernel satisfying the stated bounds");
  cz_gen->fallthrough();
  {
    auto seed = std::make_shared<std::uint64_t>(0);
    add_cz_options(cz_gen);
    cz_gen->add_option("--seed", *seed, "generator seed");
    cz_gen->callback(
        [&state, cz_flags, seed] { state.deliver(kernel_json(make_cz_kernel(*cz_flags, *seed))); });
  }

  auto* cz_check = group->add_subcommand("cz-check", "verify the stated bounds on a kernel");
  cz_check->fallthrough();
  {
    auto kernel_path = std::make_shared<std::string>();
    add_cz_options(cz_check);
    cz_check->add_option("--kernel", *kernel_path, "kernel JSON")->required();
    cz_check->callback([&state, cz_flags, kernel_path] {
      const CzCheckResult result =
          check_cz_bounds(kernel_from_json(read_json_file(*kernel_path)), *cz_flags);
      state.verified = result.ok;
      state.deliver(cz_result_json(result));
    });
  }

  auto* bht = group->add_subcommand("bht-adjoint", "adjoint identity residual on a cyclic group");
  bht->fallthrough();
  {
    auto config = std::make_shared<BHTConfig>();
    bht->add_option("--n", config->n, "group size");
    bht->add_option("--alpha", config->alpha, "first dilation");
    bht->add_option("--beta", config->beta, "second dilation");
    bht->add_option("--eps", config->eps, "inner truncation");
    bht->add_option("--t", config->tmax, "outer truncation");
    bht->callback([&state, config] {
      const double residual = bht_adjoint_identity_residual(*config);
      state.verified = residual <= 1e-12;
      state.deliver(Json{{"residual", residual}, {"pass", state.verified}});
    });
  }
}

int finish(const CliState& state) {
  if (state.result) {
    const std::string text = render(*state.result);
    if (!state.out.empty())
      write_text_file(state.out, text);
    else
      std::cout << text;
  }
  return state.verified ? 0 : 1;
}

int fail(const CliState& state, ErrorCode code, const std::string& message) {
  const Json error{{"error", Json{{"code", to_string(code)}, {"message", message}}}};
  const std::string text = render(error);
  if (!state.out.empty()) {
    try {
      write_text_file(state.out, text);
    } catch (...) {
    }
  }
  std::cout << text;
  return 2;
}

}  // namespace

int run_cli(int argc, const char* const* argv) {
  CLI::App app{"verification workbench for multilinear interpolation"};
  app.require_subcommand(1);

  CliState state;
  app.add_option("--threads", state.threads, "worker cap; output is identical for any value")
      ->check(CLI::PositiveNumber);
  app.add_option("--out", state.out, "write the report here instead of stdout");

  add_norm(app, state);
  add_tuple(app, state);
  add_region(app, state);
  add_const(app, state);
  add_interp(app, state);
  add_app(app, state);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const Error& e) {
    return fail(state, e.code(), e.what());
  } catch (const std::exception& e) {
    return fail(state, ErrorCode::InvalidInput, e.what());
  }
  return finish(state);
}

int run_cli(const std::vector<std::string>& args) {
  std::vector<const char*> argv;
  argv.reserve(args.size() + 1);
  argv.push_back("mint");
  for (const auto& a : args) argv.push_back(a.c_str());
  return run_cli(int(argv.size()), argv.data());
}

}  // namespace mint
