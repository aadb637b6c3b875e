// fellkit — command-line verification workbench for Fell bundles over
// finite groups and the dual coactions on their section algebras.
//
// Subcommands:
//   check-bundle  axioms of a bundle (builtin name or JSON file)
//   verify        one named suite against one fixture
//   demo          a worked example: λ, a random section, ρ(ξ), E_t values
//   all           every suite × every corpus fixture, with JSON reports
//
// Exit codes: 0 everything passed, 1 a verification failed, 2 the input
// was malformed (unknown name, unreadable file, schema violation).

#include <cstdio>
#include <filesystem>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "fellkit/certificate.hpp"
#include "fellkit/coaction.hpp"
#include "fellkit/complex_matrix.hpp"
#include "fellkit/error.hpp"
#include "fellkit/fell_bundle.hpp"
#include "fellkit/fixtures.hpp"
#include "fellkit/group.hpp"
#include "fellkit/harmonic.hpp"
#include "fellkit/json_io.hpp"
#include "fellkit/rng.hpp"
#include "fellkit/section.hpp"
#include "fellkit/suites.hpp"

namespace fk = fellkit;

namespace {

bool looks_like_path(const std::string& target) {
  return target.find('/') != std::string::npos ||
         (target.size() > 5 &&
          target.compare(target.size() - 5, 5, ".json") == 0) ||
         std::filesystem::exists(target);
}

fk::FellBundle load_bundle_target(const std::string& target) {
  if (!looks_like_path(target)) {
    return fk::builtin_bundle_by_name(target);
  }
  const std::string text = fk::read_text_file(target);
  const std::string kind = fk::json_kind(text);
  if (kind != "bundle") {
    fk::raise(fk::ErrorCode::SchemaViolation,
              "$: expected a bundle document, found \"" + kind + "\"");
  }
  return fk::bundle_from_json(text);
}

fk::Fixture fixture_from_target(const std::string& target, double tol) {
  if (!looks_like_path(target)) {
    std::string kind = "group";
    std::string group = target;
    const auto pos = target.find(':');
    if (pos != std::string::npos) {
      kind = target.substr(0, pos);
      group = target.substr(pos + 1);
    }
    return fk::make_fixture(group, kind, tol);
  }
  fk::Fixture f;
  f.bundle = std::make_shared<const fk::FellBundle>(load_bundle_target(target));
  f.name = f.bundle->label.empty() ? target : f.bundle->label;
  f.group_name = f.bundle->group.name();
  f.kind = "custom";
  f.algebra = fk::build_algebra(f.bundle, tol);
  f.coaction = fk::dual_coaction(f.algebra);
  return f;
}

void print_entry(const fk::CheckEntry& e) {
  std::printf("  [%s] %-44s residual %.3e",
              e.gated ? (e.pass ? "PASS" : "FAIL") : "info", e.anchor.c_str(),
              e.residual);
  if (e.gated) std::printf(" (tol %.1e)", e.tolerance);
  if (!e.note.empty()) std::printf("  %s", e.note.c_str());
  std::printf("\n");
}

void print_certificate(const fk::Certificate& cert, bool with_entries) {
  std::printf("%s\n", cert.summary_line().c_str());
  if (with_entries) {
    for (const fk::CheckEntry& e : cert.checks) print_entry(e);
  }
}

void print_matrix(const fk::CMatrix& m) {
  if (m.rows() > 16) {
    std::printf("  [%zu x %zu matrix, frobenius norm %.6g]\n", m.rows(),
                m.cols(), m.frobenius_norm());
    return;
  }
  for (std::size_t i = 0; i < m.rows(); ++i) {
    std::printf("  ");
    for (std::size_t j = 0; j < m.cols(); ++j) {
      const fk::Complex z = m.at(i, j);
      std::printf("%+6.3f%+6.3fi  ", z.real(), z.imag());
    }
    std::printf("\n");
  }
}

std::string report_filename(const fk::Certificate& cert) {
  std::string name = cert.suite + "--" + cert.fixture;
  for (char& ch : name) {
    if (ch == ':' || ch == '/') ch = '-';
  }
  return name + ".json";
}

void write_report(const std::string& dir, const fk::Certificate& cert) {
  std::filesystem::create_directories(dir);
  const std::filesystem::path path =
      std::filesystem::path(dir) / report_filename(cert);
  fk::write_text_file(path.string(), fk::certificate_to_json(cert));
}

int cmd_check_bundle(const std::string& target, double tol, bool json_out) {
  const fk::FellBundle bundle = load_bundle_target(target);
  fk::Certificate cert = fk::check_bundle_axioms(bundle, tol);
  cert.suite = "check-bundle";
  cert.fixture = bundle.label.empty() ? target : bundle.label;
  cert.tolerance = tol;
  cert.input_digest = fk::digest("check-bundle|" + cert.fixture);
  if (json_out) {
    std::printf("%s\n", fk::certificate_to_json(cert).c_str());
  } else {
    print_certificate(cert, true);
  }
  return cert.pass() ? 0 : 1;
}

int cmd_verify(const std::string& suite, const std::string& target,
               const fk::SuiteOptions& opts, const std::string& report,
               bool json_out) {
  if (!fk::suite_known(suite)) {
    std::string known;
    for (const std::string& s : fk::suite_names()) {
      known += known.empty() ? s : ", " + s;
    }
    fk::raise(fk::ErrorCode::BadParameter,
              "unknown suite \"" + suite + "\"; expected one of: " + known);
  }
  const fk::Fixture fixture = fixture_from_target(target, opts.tol);
  const fk::Certificate cert = fk::run_suite(suite, fixture, opts);
  if (json_out) {
    std::printf("%s\n", fk::certificate_to_json(cert).c_str());
  } else {
    print_certificate(cert, true);
  }
  if (!report.empty()) write_report(report, cert);
  return cert.pass() ? 0 : 1;
}

int cmd_demo(const std::string& target, double tol, std::uint64_t seed) {
  const fk::Fixture f = fixture_from_target(target, tol);
  const fk::FiniteGroup& g = f.bundle->group;
  const int order = static_cast<int>(g.order());

  std::printf("fixture %s: group %s of order %d (%s), fibers in M_%zu\n",
              f.name.c_str(), g.name().c_str(), order,
              g.is_abelian() ? "abelian" : "nonabelian",
              f.bundle->ambient_dim);
  std::printf("fiber dimensions:");
  for (int t = 0; t < order; ++t) {
    std::printf(" dim B_%d = %zu", t, f.bundle->fiber(t).dim());
  }
  std::printf("\nsection algebra: dim A = %zu inside M_%zu\n\n",
              f.algebra.algebra.dim(), f.algebra.rep_dim);

  std::printf("left regular representation:\n");
  const std::vector<fk::CMatrix> lambdas = fk::left_regular(g);
  for (int t = 0; t < order; ++t) {
    std::printf("lambda_%d =\n", t);
    print_matrix(lambdas[static_cast<std::size_t>(t)]);
  }

  fk::Rng rng(seed);
  const fk::Section xi = fk::random_section(rng, f.bundle);
  std::printf("\nrandom section xi (seed %llu):\n",
              static_cast<unsigned long long>(seed));
  for (int t = 0; t < order; ++t) {
    std::printf("xi(%d) =\n", t);
    print_matrix(xi.value(t));
  }

  const fk::CMatrix rho = fk::coaction_embedding(xi);
  std::printf("\nrho(xi) = sum_t xi(t) (x) lambda_t =\n");
  print_matrix(rho);

  std::printf("\nspectral elements of rho(xi) under the dual coaction:\n");
  double worst = 0.0;
  for (int t = 0; t < order; ++t) {
    const fk::CMatrix et = fk::fourier_coeff(f.coaction, rho, t);
    const fk::CMatrix expected =
        fk::kron(xi.value(t), lambdas[static_cast<std::size_t>(t)]);
    const double resid = (et - expected).frobenius_norm() /
                         (1.0 + expected.frobenius_norm());
    worst = std::max(worst, resid);
    std::printf("E_%d(rho(xi)) =\n", t);
    print_matrix(et);
    std::printf("  |E_%d(rho(xi)) - xi(%d) (x) lambda_%d| = %.3e\n", t, t, t,
                resid);
  }

  const fk::CMatrix av = fk::average(f.coaction, rho);
  const fk::CMatrix expected_av =
      fk::kron(xi.value(fk::FiniteGroup::identity()), lambdas[0]);
  std::printf("\nAv(rho(xi)) =\n");
  print_matrix(av);
  std::printf("  |Av(rho(xi)) - xi(e) (x) 1| = %.3e\n",
              (av - expected_av).frobenius_norm() /
                  (1.0 + expected_av.frobenius_norm()));

  const double n1 = fk::op_norm(rho);
  const double n2 = fk::op_norm(fk::regular_representation(xi));
  std::printf("\noperator norms: |rho(xi)| = %.12f, |lambda_B(xi)| = %.12f, "
              "difference %.3e\n",
              n1, n2, std::abs(n1 - n2));
  std::printf("worst spectral-element residual: %.3e (tol %.1e)\n", worst,
              tol);
  return worst <= tol ? 0 : 1;
}

int cmd_all(const fk::SuiteOptions& opts, const std::string& report,
            bool json_out) {
  const std::vector<fk::Fixture> fixtures = fk::corpus_fixtures(opts.tol);
  std::size_t passed = 0;
  std::size_t total = 0;
  for (const std::string& suite : fk::suite_names()) {
    for (const fk::Fixture& f : fixtures) {
      const fk::Certificate cert = fk::run_suite(suite, f, opts);
      ++total;
      if (cert.pass()) ++passed;
      if (json_out) {
        std::printf("%s\n", fk::certificate_to_json(cert).c_str());
      } else {
        print_certificate(cert, false);
      }
      if (!report.empty()) write_report(report, cert);
    }
  }
  std::printf("\n%zu/%zu suite runs passed\n", passed, total);
  return passed == total ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "fellkit: exact finite-model checks for Fell bundles, section "
      "algebras, and dual coactions"};
  app.require_subcommand(1);

  std::string target;
  std::string suite;
  std::string report;
  fk::SuiteOptions opts;
  bool json_out = false;

  CLI::App* sc_check = app.add_subcommand(
      "check-bundle", "Check the Fell bundle axioms and print a certificate");
  sc_check->add_option("target", target,
                       "builtin bundle name (c2, semidirect:s3, "
                       "counterexample:involution, ...) or JSON file")
      ->required();
  sc_check->add_option("--tol", opts.tol, "gating tolerance");
  sc_check->add_flag("--json", json_out, "print the certificate as JSON");

  CLI::App* sc_verify = app.add_subcommand(
      "verify", "Run one verification suite against one fixture");
  sc_verify->add_option("suite", suite, "suite name (see `all`)")->required();
  sc_verify->add_option("target", target,
                        "fixture name (kind:group) or bundle JSON file")
      ->required();
  sc_verify->add_option("--tol", opts.tol, "gating tolerance");
  sc_verify->add_option("--seed", opts.seed, "RNG seed");
  sc_verify->add_option("--samples", opts.samples, "random samples per check");
  sc_verify->add_option("--report", report, "directory for JSON certificates");
  sc_verify->add_flag("--json", json_out, "print the certificate as JSON");

  CLI::App* sc_demo = app.add_subcommand(
      "demo", "Print a worked example: lambda matrices, a random section, "
              "rho(xi), spectral elements");
  sc_demo->add_option("target", target, "fixture name (kind:group) or group")
      ->required();
  sc_demo->add_option("--tol", opts.tol, "gating tolerance");
  sc_demo->add_option("--seed", opts.seed, "RNG seed");

  CLI::App* sc_all = app.add_subcommand(
      "all", "Run every suite against every corpus fixture");
  sc_all->add_option("--tol", opts.tol, "gating tolerance");
  sc_all->add_option("--seed", opts.seed, "RNG seed");
  sc_all->add_option("--samples", opts.samples, "random samples per check");
  sc_all->add_option("--report", report, "directory for JSON certificates");
  sc_all->add_flag("--json", json_out, "print certificates as JSON lines");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (app.got_subcommand(sc_check)) {
      return cmd_check_bundle(target, opts.tol, json_out);
    }
    if (app.got_subcommand(sc_verify)) {
      return cmd_verify(suite, target, opts, report, json_out);
    }
    if (app.got_subcommand(sc_demo)) {
      return cmd_demo(target, opts.tol, opts.seed);
    }
    return cmd_all(opts, report, json_out);
  } catch (const fk::Error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  }
}
