// rlr: exact computations with restricted Lie-Rinehart algebras over F_p --
// axiom verification, PBW normal forms in the (restricted) enveloping
// algebra, dimension certificates, and localization checks.

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "rlr/envelope.hpp"
#include "rlr/envelope_checks.hpp"
#include "rlr/exprparse.hpp"
#include "rlr/localization.hpp"
#include "rlr/lr_checks.hpp"
#include "rlr/specfile.hpp"

namespace {

struct CommonOpts {
  std::string spec_path;
  std::uint64_t seed = 42;
  int trials = 25;
  std::string localize;
  std::string mode = "u";
  bool timings = false;
  bool unchecked = false;
};

rlr::SpecFile load_spec(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error(path + ": cannot open");
  std::stringstream buffer;
  buffer << in.rdbuf();
  try {
    return rlr::parse_spec(buffer.str());
  } catch (const rlr::SpecError& e) {
    throw std::runtime_error(path + ":" + e.what());
  }
}

// presentations are admitted to the compute commands only after passing the
// axiom suite, unless --unchecked asks otherwise
rlr::SpecFile load_admitted_spec(const CommonOpts& opt) {
  rlr::SpecFile spec = load_spec(opt.spec_path);
  if (!opt.unchecked) {
    rlr::Report rep = rlr::verify_axioms(spec.presentation, 25, 42);
    if (!rep.all_passed())
      throw std::runtime_error(opt.spec_path +
                               ": presentation fails the axiom suite (run the verify "
                               "command for the report, or pass --unchecked)");
  }
  return spec;
}

// --localize overrides the spec file's generator list
std::vector<rlr::RingElement> localize_generators(const rlr::SpecFile& spec,
                                                  const std::string& flag) {
  if (flag.empty()) return spec.localize_gens;
  std::vector<rlr::RingElement> gens;
  std::size_t pos = 0;
  while (pos <= flag.size()) {
    std::size_t comma = flag.find(',', pos);
    if (comma == std::string::npos) comma = flag.size();
    gens.push_back(
        rlr::parse_ring_element(spec.presentation.ring, flag.substr(pos, comma - pos)));
    if (comma == flag.size()) break;
    pos = comma + 1;
  }
  return gens;
}

rlr::EnvMode parse_mode(const std::string& mode) {
  if (mode == "U") return rlr::EnvMode::full;
  if (mode == "u") return rlr::EnvMode::restricted;
  throw std::runtime_error("--mode must be U or u");
}

rlr::PolyEnvelope::Element eval_expr(const rlr::PolyEnvelope& env,
                                     const rlr::LRPresentation& pres,
                                     const std::string& text) {
  auto terms = rlr::parse_env_expr(pres.ring, pres.rank, text);
  rlr::PolyEnvelope::Element out = env.zero();
  for (const rlr::ExprTerm& term : terms) {
    rlr::PolyEnvelope::Word word;
    for (const rlr::ExprAtom& atom : term) {
      if (std::holds_alternative<int>(atom))
        word.push_back(rlr::PolyEnvelope::letter_atom(std::get<int>(atom)));
      else
        word.push_back(rlr::PolyEnvelope::scalar_atom(std::get<rlr::RingElement>(atom)));
    }
    out = env.add(out, env.straighten(word));
  }
  return out;
}

class Stopwatch {
 public:
  explicit Stopwatch(bool enabled) : enabled_(enabled) {}
  ~Stopwatch() {
    if (enabled_) {
      auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                    std::chrono::steady_clock::now() - start_)
                    .count();
      // stderr so timings never perturb the deterministic report on stdout
      std::cerr << "time_ms: " << ms << "\n";
    }
  }

 private:
  bool enabled_;
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

int run_verify(const CommonOpts& opt) {
  Stopwatch watch(opt.timings);
  rlr::SpecFile spec = load_spec(opt.spec_path);
  rlr::Report rep = rlr::verify_axioms(spec.presentation, opt.trials, opt.seed);
  std::cout << rep.render();
  return rep.all_passed() ? 0 : 1;
}

int run_verify_loc(const CommonOpts& opt) {
  Stopwatch watch(opt.timings);
  rlr::SpecFile spec = load_spec(opt.spec_path);
  rlr::MultSet S(spec.presentation.ring, localize_generators(spec, opt.localize));
  rlr::Report rep = rlr::verify_loc_well_defined(spec.presentation, S, opt.trials, opt.seed);
  rlr::Report axioms = rlr::verify_loc_axioms(spec.presentation, S, opt.trials, opt.seed);
  rep.suite = "verify-loc";
  rep.absorb(axioms);
  std::cout << rep.render();
  return rep.all_passed() ? 0 : 1;
}

int run_mul(const CommonOpts& opt, const std::string& lhs, const std::string& rhs) {
  Stopwatch watch(opt.timings);
  rlr::SpecFile spec = load_admitted_spec(opt);
  rlr::PolyEnvelope env = rlr::make_envelope(spec.presentation, parse_mode(opt.mode));
  auto a = eval_expr(env, spec.presentation, lhs);
  auto b = eval_expr(env, spec.presentation, rhs);
  std::cout << "input.a: " << lhs << "\n";
  std::cout << "input.b: " << rhs << "\n";
  std::cout << "mode: " << opt.mode << "\n";
  std::cout << "result: " << env.to_string(env.multiply(a, b)) << "\n";
  return 0;
}

int run_normal_form(const CommonOpts& opt, const std::string& expr) {
  Stopwatch watch(opt.timings);
  rlr::SpecFile spec = load_admitted_spec(opt);
  rlr::PolyEnvelope env = rlr::make_envelope(spec.presentation, parse_mode(opt.mode));
  std::cout << "input: " << expr << "\n";
  std::cout << "mode: " << opt.mode << "\n";
  std::cout << "result: " << env.to_string(eval_expr(env, spec.presentation, expr)) << "\n";
  return 0;
}

int run_dim(const CommonOpts& opt) {
  Stopwatch watch(opt.timings);
  rlr::SpecFile spec = load_admitted_spec(opt);
  const rlr::LRPresentation& pres = spec.presentation;
  long long rank = 1;
  for (int i = 0; i < pres.rank; ++i) rank *= pres.ring.p;
  std::cout << "basis-rank: " << rank << "\n";
  if (pres.ring.truncated) {
    rlr::ClosureCertificate cert = rlr::closure_certificate(pres);
    std::cout << "fp-dimension: " << cert.fp_dimension << "\n";
    std::cout << "closure: " << (cert.closed ? "pass" : "fail") << "\n";
    return cert.closed ? 0 : 1;
  }
  std::cout << "fp-dimension: infinite\n";
  return 0;
}

int run_z_basis(const CommonOpts& opt, const std::string& expr) {
  Stopwatch watch(opt.timings);
  rlr::SpecFile spec = load_admitted_spec(opt);
  rlr::PolyEnvelope env = rlr::make_envelope(spec.presentation, rlr::EnvMode::full);
  auto a = eval_expr(env, spec.presentation, expr);
  auto z = rlr::to_z_basis(env, a);
  std::cout << "input: " << expr << "\n";
  std::cout << "z-form: " << rlr::z_to_string(env, z) << "\n";
  std::cout << "round-trip: " << (env.equal(rlr::from_z_basis(env, z), a) ? "pass" : "fail")
            << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact symbolic computations with restricted Lie-Rinehart algebras"};
  app.require_subcommand(1);

  CommonOpts opt;
  std::string expr_a, expr_b;

  auto add_common = [&](CLI::App* sub, bool with_mode = false) {
    sub->add_option("--spec", opt.spec_path, "algebra spec file")->required();
    sub->add_option("--seed", opt.seed, "seed for randomized trials");
    sub->add_option("--trials", opt.trials, "random trials per check")
        ->check(CLI::PositiveNumber);
    sub->add_flag("--timings", opt.timings, "report elapsed time on stderr");
    sub->add_flag("--unchecked", opt.unchecked, "skip the admission axiom check");
    if (with_mode)
      sub->add_option("--mode", opt.mode, "U (full envelope) or u (restricted)");
  };

  CLI::App* verify = app.add_subcommand("verify", "run the axiom suite");
  add_common(verify);

  CLI::App* verify_loc =
      app.add_subcommand("verify-loc", "run the localization suites");
  add_common(verify_loc);
  verify_loc->add_option("--localize", opt.localize,
                         "comma-separated multiplicative-set generators");

  CLI::App* mul = app.add_subcommand("mul", "multiply two envelope elements");
  add_common(mul, true);
  mul->add_option("a", expr_a, "left factor")->required();
  mul->add_option("b", expr_b, "right factor")->required();

  CLI::App* nf = app.add_subcommand("normal-form", "straighten a word");
  add_common(nf, true);
  nf->add_option("expr", expr_a, "element expression")->required();

  CLI::App* dim = app.add_subcommand("dim", "restricted envelope rank and dimension");
  add_common(dim);

  CLI::App* zb = app.add_subcommand("z-basis", "rewrite in the central z-basis");
  add_common(zb);
  zb->add_option("expr", expr_a, "element expression")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (verify->parsed()) return run_verify(opt);
    if (verify_loc->parsed()) return run_verify_loc(opt);
    if (mul->parsed()) return run_mul(opt, expr_a, expr_b);
    if (nf->parsed()) return run_normal_form(opt, expr_a);
    if (dim->parsed()) return run_dim(opt);
    if (zb->parsed()) return run_z_basis(opt, expr_a);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
