#include "cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <ostream>
#include <sstream>

#include "toric/error.hpp"
#include "toric/io.hpp"
#include "toric/resolution.hpp"
#include "toric/support_analysis.hpp"

namespace toric::cli {

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string var_list(const std::vector<std::size_t>& v) {
  std::string s;
  for (auto i : v) s += (s.empty() ? "" : " ") + std::to_string(i + 1);
  return s;
}

struct Flags {
  std::uint64_t seed = 0;
  std::string bound;
  unsigned retries = 0;
  std::size_t precision = 0;
  std::size_t ell = 0;
  std::string lambda, mu, b, xi;
  std::string format = "text";
  CLI::Option *seed_opt, *bound_opt, *retries_opt, *precision_opt, *ell_opt;
  CLI::Option *lambda_opt, *mu_opt, *b_opt, *xi_opt;
};

// Precedence: flag or environment, then the system file header, then
// the library defaults.
ProjectionProblem build_problem(const SystemFile& sf, const Flags& f) {
  ProjectionProblem p = sf.problem();
  PipelineOptions& o = p.options;
  if (f.seed_opt->count()) o.seed = f.seed;
  if (f.bound_opt->count()) {
    o.bound = Integer(f.bound);
    if (sgn(o.bound) <= 0) throw InputError("--bound must be positive");
  }
  if (f.retries_opt->count()) o.retry_limit = f.retries;
  if (f.precision_opt->count()) o.precision = f.precision;
  if (f.ell_opt->count()) p.ell = f.ell;
  if (f.lambda_opt->count()) o.lambda = parse_int_list(f.lambda);
  if (f.mu_opt->count()) o.mu = parse_int_list(f.mu);
  if (f.b_opt->count()) o.b = parse_int_list(f.b);
  if (f.xi_opt->count()) o.xi = parse_rat_list(f.xi);
  return p;
}

int run_mv(const SystemFile& sf, std::ostream& out) {
  if (sf.r > sf.n) throw InputError("more equations than variables");
  out << mixed_volume(supports_of(sf.system).with_simplices(sf.n - sf.r)).get_str() << "\n";
  return 0;
}

int run_transbasis(const SystemFile& sf, std::ostream& out) {
  out << var_list(trans_basis(supports_of(sf.system)).indices) << "\n";
  return 0;
}

int run_gamma(const SystemFile& sf, std::ostream& out) {
  for (const auto& c : gamma_decomposition(supports_of(sf.system))) {
    out << "I={" << var_list(c.I) << "} J={" << var_list(c.J) << "}\n";
  }
  return 0;
}

int run_solve0d(const SystemFile& sf, const Flags& f, std::ostream& out) {
  if (sf.r != sf.n) throw InputError("solve0d needs a square system");
  const ProjectionProblem p = build_problem(sf, f);
  Sampler sampler(p.options.seed);
  std::vector<Integer> lambda = p.options.lambda ? *p.options.lambda : sampler.nonzero_vector(sf.n, p.options.bound);
  if (lambda.size() != sf.n) throw InputError("--lambda needs " + std::to_string(sf.n) + " entries");
  for (unsigned attempt = 0;; ++attempt) {
    try {
      const GeometricResolution res = solve_toric_0d(sf.system, lambda);
      out << (f.format == "structured" ? emit_zero_dim(res, p.options.seed) : render_text(res));
      return 0;
    } catch (const GenericityError& e) {
      if (e.issue() != GenericityIssue::kLambdaNotSeparating || p.options.lambda ||
          attempt >= p.options.retry_limit) {
        throw GenericityFailure(e.what());
      }
      lambda = sampler.nonzero_vector(sf.n, p.options.bound);
    }
  }
}

int run_project(const SystemFile& sf, const Flags& f, std::ostream& out) {
  const ProjectionResult r = q_projection(build_problem(sf, f));
  out << (f.format == "structured" ? emit_resolution(r) : render_text(r));
  return 0;
}

int run_verify(const SystemFile& sf, const ProjectionResult& r, std::ostream& out) {
  std::vector<IdentityCheck> checks;
  auto add = [&](const VerificationReport& rep) { checks.insert(checks.end(), rep.checks.begin(), rep.checks.end()); };
  if (r.ambient != sf.n) throw InputError("resolution and system have different numbers of variables");
  if (r.dense_image) {
    const auto tb = trans_basis(supports_of(sf.system)).indices;
    std::size_t below = 0;
    for (auto i : tb) below += i < r.ell;
    checks.push_back({"trans-basis matches", tb == r.provenance.trans_basis});
    checks.push_back({"image is dense", below == r.ell});
  } else if (r.ell == 0) {
    add(verify_resolution(r.resolution, sf.system));
  } else {
    std::map<std::size_t, Rat> bind;
    if (r.provenance.b.size() != r.specialized_vars.size()) throw InputError("b does not match specialized");
    for (std::size_t i = 0; i < r.specialized_vars.size(); ++i) bind[r.specialized_vars[i]] = Rat(r.provenance.b[i]);
    std::vector<SparsePoly> specialized_sys;
    for (const auto& g : sf.system) specialized_sys.push_back(g.eval_partial(bind));
    add(verify_resolution(r.parametric, specialized_sys));
    add(verify_projection(r.resolution, r.parametric));
    const Integer mv = mixed_volume(supports_of(sf.system).with_simplices(sf.n - sf.r));
    checks.push_back({"degree within mixed volume bound", Integer(static_cast<unsigned long>(r.resolution.degree())) <= mv});
  }
  bool ok = true;
  for (const auto& c : checks) {
    out << (c.passed ? "ok " : "FAILED ") << c.name << "\n";
    ok = ok && c.passed;
  }
  return ok ? 0 : 1;
}

}  // namespace

int cli_dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Sparse elimination by toric projection", "toricproj"};
  app.require_subcommand(1);
  app.fallthrough();

  Flags f;
  f.seed_opt = app.add_option("--seed", f.seed, "random seed")->envname("TORICPROJ_SEED");
  f.bound_opt = app.add_option("--bound", f.bound, "sampling bound: b and xi from 1..B, lambda and mu from -B..B without 0")->envname("TORICPROJ_BOUND");
  f.retries_opt = app.add_option("--retries", f.retries, "redraws allowed per random vector")->envname("TORICPROJ_RETRIES");
  f.precision_opt =
      app.add_option("--precision", f.precision, "fixed lifting precision instead of 2*MV")->envname("TORICPROJ_PRECISION");
  f.ell_opt = app.add_option("--ell", f.ell, "project onto X1..Xell")->envname("TORICPROJ_ELL");
  f.lambda_opt = app.add_option("--lambda", f.lambda, "separating form over the dependent variables, e.g. 0,1")
                     ->envname("TORICPROJ_LAMBDA");
  f.mu_opt = app.add_option("--mu", f.mu, "projection form over the projected variables")->envname("TORICPROJ_MU");
  f.b_opt = app.add_option("--b", f.b, "values of the specialized variables")->envname("TORICPROJ_B");
  f.xi_opt = app.add_option("--xi", f.xi, "lifting point for the free variables")->envname("TORICPROJ_XI");
  app.add_option("--format", f.format, "output format")
      ->check(CLI::IsMember({"text", "structured"}))
      ->envname("TORICPROJ_FORMAT");

  std::string system_path, resolution_path;
  std::vector<CLI::App*> subs;
  for (const char* name : {"mv", "transbasis", "gamma", "solve0d", "project", "verify"}) {
    CLI::App* s = app.add_subcommand(name);
    s->add_option("system", system_path, "system file")->required();
    subs.push_back(s);
  }
  subs[0]->description("mixed volume of the supports with n - r simplices appended");
  subs[1]->description("transcendence basis of the toric variety");
  subs[2]->description("coordinate subspaces contributing to the variety");
  subs[3]->description("geometric resolution of a square system");
  subs[4]->description("projection onto the first ell coordinates");
  subs[5]->description("check a resolution file against a system file");
  subs[5]->add_option("resolution", resolution_path, "resolution file")->required();

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    const SystemFile sf = parse_system(read_file(system_path));
    const std::string cmd = app.get_subcommands().front()->get_name();
    if (cmd == "mv") return run_mv(sf, out);
    if (cmd == "transbasis") return run_transbasis(sf, out);
    if (cmd == "gamma") return run_gamma(sf, out);
    if (cmd == "solve0d") return run_solve0d(sf, f, out);
    if (cmd == "project") return run_project(sf, f, out);
    return run_verify(sf, parse_resolution(read_file(resolution_path)), out);
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::invalid_argument& e) {
    err << "error: malformed number\n";
    return 2;
  }
}

}  // namespace toric::cli
