#include <iostream>
#include <regex>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "commands.hpp"

namespace {

int run_duo(const cli::SessionConfig& cfg, const std::string& ring, const std::string& a, const std::string& b) {
  using namespace ore;
  if (ring == "m2q") {
    Context<MatrixRing<Rationals>> ctx{MatrixRing<Rationals>(Rationals{}, 2)};
    return cli::cmd_duo(ctx, cfg, ring, a, b, std::cout);
  }
  if (ring == "m2f2") {
    Context<MatrixRing<IntegersMod>> ctx{MatrixRing<IntegersMod>(IntegersMod(2), 2)};
    return cli::cmd_duo(ctx, cfg, ring, a, b, std::cout);
  }
  if (ring == "tri") {
    Context<TriangularRing> ctx{TriangularRing{}};
    return cli::cmd_duo(ctx, cfg, ring, a, b, std::cout);
  }
  static const std::regex zmod(R"(zmod(\d+))");
  std::smatch m;
  if (std::regex_match(ring, m, zmod)) {
    Context<IntegersMod> ctx{IntegersMod(std::stoull(m[1]))};
    return cli::cmd_duo(ctx, cfg, ring, a, b, std::cout);
  }
  throw InvalidInput("unknown ring '" + ring + "' (expected m2q, m2f2, tri or zmod<n>)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact arithmetic in skew polynomial rings K[t;S,D]"};
  app.fallthrough();
  app.require_subcommand(1);
  cli::SessionConfig cfg;
  app.add_option("--field", cfg.field, "f4, f8, f9, f16 or custom(p,modulus in w)");
  app.add_option("--twist", cfg.twist, "identity, frobenius[:k], inner:<q> or subst:<h>");
  app.add_option("--derivation", cfg.derivation, "zero, inner:<elt> or ddx");
  app.add_flag("--quaternion", cfg.quaternion, "rational quaternions");
  app.add_flag("--ratfunc", cfg.ratfunc, "rational functions Q(x)");
  app.add_flag("--json", cfg.json, "JSON output");
  app.add_option("--seed", cfg.seed, "seed for random checks");
  app.add_option("--jobs", cfg.jobs, "worker threads for factorization enumeration")->check(CLI::PositiveNumber);
  app.add_flag("--strict", cfg.strict, "exit 1 on a negative verdict");
  app.add_option("--candidates", cfg.candidates, "candidate roots outside finite fields")->delimiter(';');

  std::vector<std::string> points;
  std::string poly;
  auto* llcm = app.add_subcommand("llcm", "left LLCM of t - x_i with the symmetric-function table");
  llcm->add_option("points", points)->required();
  auto* factor = app.add_subcommand("factor", "W-verdict and all linear factorizations");
  factor->add_option("polynomial", poly)->required();
  auto* pindep = app.add_subcommand("pindep", "P-independence via the U-matrix");
  pindep->add_option("points", points)->required();
  auto* vdm = app.add_subcommand("vdm", "Vandermonde matrix, its inverse and LU factors");
  vdm->add_option("points", points)->required();
  std::string ring, a, b;
  auto* duo = app.add_subcommand("duo", "monic degree-2 common left multiple of t - a and t - b");
  duo->add_option("ring", ring)->required();
  duo->add_option("a", a)->required();
  duo->add_option("b", b)->required();
  std::size_t samples = 200;
  auto* check = app.add_subcommand("check", "randomized checks of the twist and evaluation laws");
  check->add_option("--samples", samples);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (duo->parsed()) return run_duo(cfg, ring, a, b);
    auto context = cli::make_context(cfg);
    return std::visit(
        [&](const auto& ctx) {
          if (llcm->parsed()) return cli::cmd_llcm(ctx, cfg, points, std::cout);
          if (factor->parsed()) return cli::cmd_factor(ctx, cfg, poly, std::cout);
          if (pindep->parsed()) return cli::cmd_pindep(ctx, cfg, points, std::cout);
          if (vdm->parsed()) return cli::cmd_vdm(ctx, cfg, points, std::cout);
          return cli::cmd_check(ctx, cfg, samples, std::cout);
        },
        context);
  } catch (const ore::OreError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
