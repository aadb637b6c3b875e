// Acceptance gate for the workbench: twelve shipped guarantees, one printed
// pass/fail line each, exit 0 only when every guarantee holds. Guarantees
// 1–11 run in-process against the fixture corpus; guarantee 12 drives the
// installed command-line binary as a subprocess.

#include <sys/wait.h>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <string>
#include <utility>
#include <vector>

#include "fellkit/coaction.hpp"
#include "fellkit/dual_action.hpp"
#include "fellkit/error.hpp"
#include "fellkit/fixtures.hpp"
#include "fellkit/rng.hpp"
#include "fellkit/section.hpp"
#include "fellkit/suites.hpp"

#ifndef FELLKIT_CLI_PATH
#define FELLKIT_CLI_PATH "fellkit"
#endif

namespace {

using namespace fellkit;
using Clock = std::chrono::steady_clock;

struct Gate {
  int number;
  std::string title;
  bool pass;
  std::string detail;
};

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

// All gated entries whose anchor starts with `prefix` pass, and at least one
// such entry exists.
bool entries_pass(const Certificate& cert, const std::string& prefix) {
  bool found = false;
  for (const CheckEntry& e : cert.checks) {
    if (e.anchor.rfind(prefix, 0) != 0) continue;
    found = true;
    if (e.gated && !e.pass) return false;
  }
  return found;
}

// Residual of the entry with this exact anchor; -1 when absent.
double entry_residual(const Certificate& cert, const std::string& anchor) {
  for (const CheckEntry& e : cert.checks) {
    if (e.anchor == anchor) return e.residual;
  }
  return -1.0;
}

std::string fmt(double v) {
  char buf[48];
  std::snprintf(buf, sizeof(buf), "%.3g", v);
  return buf;
}

struct CommandResult {
  bool ran = false;
  int exit_code = -1;
  std::string output;
  double seconds = 0.0;
};

CommandResult run_command(const std::string& command) {
  CommandResult r;
  const auto start = Clock::now();
  FILE* pipe = popen((command + " 2>&1").c_str(), "r");
  if (pipe == nullptr) return r;
  char buf[4096];
  std::size_t got = 0;
  while ((got = std::fread(buf, 1, sizeof(buf), pipe)) > 0) {
    r.output.append(buf, got);
  }
  const int status = pclose(pipe);
  r.seconds = seconds_since(start);
  if (WIFEXITED(status)) {
    r.ran = true;
    r.exit_code = WEXITSTATUS(status);
  }
  return r;
}

}  // namespace

int main() {
  std::vector<Gate> gates;
  try {
    const std::vector<Fixture> corpus = corpus_fixtures();

    // ---- 1 & 2: averaging and Fourier coefficients on seeded sections,
    //             with the sweep itself under a wall-clock budget.
    const int kSections = 50;
    double worst_av = 0.0;
    double worst_coeff = 0.0;
    const auto sweep_start = Clock::now();
    for (std::size_t i = 0; i < corpus.size(); ++i) {
      const Fixture& f = corpus[i];
      const std::vector<CMatrix> lam = left_regular(f.bundle->group);
      Rng rng(2026 + i);
      for (int k = 0; k < kSections; ++k) {
        const Section xi = random_section(rng, f.bundle);
        const CMatrix rho = coaction_embedding(xi);
        worst_av = std::max(
            worst_av,
            (average(f.coaction, rho) - kron(xi.value(0), lam[0]))
                .frobenius_norm());
        for (int t = 0; t < f.bundle->group.order(); ++t) {
          worst_coeff = std::max(
              worst_coeff,
              (fourier_coeff(f.coaction, rho, t) -
               kron(xi.value(t), lam[static_cast<std::size_t>(t)]))
                  .frobenius_norm());
        }
      }
    }
    const double sweep_seconds = seconds_since(sweep_start);
    gates.push_back({1,
                     "averaging projects every section onto its identity slot",
                     worst_av <= 1e-9 && sweep_seconds < 5.0,
                     "worst " + fmt(worst_av) + ", sweep " +
                         fmt(sweep_seconds) + " s"});
    gates.push_back({2, "Fourier coefficients recover every section slot",
                     worst_coeff <= 1e-9, "worst " + fmt(worst_coeff)});

    // ---- shared suite runs reused by several gates
    SuiteOptions dual_opts;
    dual_opts.seed = 2026;
    dual_opts.samples = 50;
    std::vector<Certificate> dual_certs;
    for (const Fixture& f : corpus) {
      dual_certs.push_back(run_suite("dual-coaction", f, dual_opts));
    }

    // ---- 3: inversion, elementwise over every fixture algebra basis
    {
      SuiteOptions opts;
      opts.seed = 2026;
      opts.samples = 20;
      bool ok = true;
      double worst = 0.0;
      for (const Fixture& f : corpus) {
        const Certificate cert = run_suite("inversion", f, opts);
        ok = ok && cert.pass() && entries_pass(cert, "Thm.FourierInversion");
        worst = std::max(worst, cert.worst_residual());
      }
      gates.push_back({3, "inversion rebuilds elements from coefficients",
                       ok, "worst " + fmt(worst)});
    }

    // ---- 4: the four coefficient interaction identities on 100 tuples
    {
      SuiteOptions opts;
      opts.seed = 2026;
      bool ok = true;
      double worst = 0.0;
      for (const Fixture& f : corpus) {
        const Certificate cert = run_suite("prop020", f, opts);
        ok = ok && cert.pass() && entries_pass(cert, "Prop020.");
        worst = std::max(worst, cert.worst_residual());
      }
      gates.push_back({4,
                       "coefficient interaction identities on sampled tuples",
                       ok, "worst " + fmt(worst)});
    }

    // ---- 5: positivity verdicts, exact agreement plus square-root splits
    {
      SuiteOptions opts;
      opts.seed = 2026;
      bool ok = true;
      for (const Fixture& f : corpus) {
        const Certificate cert = run_suite("positive-definite", f, opts);
        ok = ok && cert.pass() &&
             entry_residual(cert, "PosDef.agreement") == 0.0 &&
             entries_pass(cert, "Prop349.");
      }
      gates.push_back({5,
                       "positivity verdicts agree exactly on 200 functions "
                       "per fixture",
                       ok, ok ? "0 disagreements" : "disagreements found"});
    }

    // ---- 6: spectral subspace dimensions and direct-sum structure
    {
      bool ok = true;
      for (std::size_t i = 0; i < corpus.size(); ++i) {
        const Certificate& cert = dual_certs[i];
        ok = ok && entries_pass(cert, "Spectral.dims") &&
             entries_pass(cert, "Spectral.direct-sum");
      }
      gates.push_back({6,
                       "spectral subspaces match fiber dimensions and sum "
                       "directly",
                       ok, ok ? "all fixtures" : "mismatch found"});
    }

    // ---- 7: the abelian dictionary, both round trips and both bridges
    {
      bool ok = true;
      int covered = 0;
      for (const Fixture& f : corpus) {
        if (!f.bundle->group.is_abelian()) continue;
        ++covered;
        const Certificate cert =
            run_suite("abelian-dictionary", f, SuiteOptions{});
        ok = ok && cert.pass() && entries_pass(cert, "Dict.roundtrip") &&
             entries_pass(cert, "Eq(1)") && entries_pass(cert, "Eq(2)") &&
             entries_pass(cert, "Eq(3)");
      }
      ok = ok && covered == 7;
      gates.push_back({7, "abelian dictionary round trips on both sides", ok,
                       std::to_string(covered) + " abelian fixtures"});
    }

    // ---- 8: reconstruction from dual actions, plus the sign-conjugation
    //         example on full M_2
    {
      bool ok = true;
      for (const Fixture& f : corpus) {
        if (!f.bundle->group.is_abelian()) continue;
        const Certificate cert = run_suite("reconstruct", f, SuiteOptions{});
        ok = ok && cert.pass();
      }
      try {
        const auto [bundle, cert] = reconstruct_bundle(ad_sign_action());
        ok = ok && cert.pass() && entries_pass(cert, "Theta.") &&
             check_bundle_axioms(bundle).pass() &&
             bundle.fiber(0).dim() == 2 && bundle.fiber(1).dim() == 2;
      } catch (const Error&) {
        ok = false;
      }
      gates.push_back({8, "bundles rebuild from their dual actions", ok,
                       ok ? "incl. sign conjugation on M_2" : "failed"});
    }

    // ---- 9: the two crossed-product realizations coincide
    {
      bool ok = true;
      const Fixture semi = make_fixture("c2", "semidirect");
      const Fixture part = make_fixture("c2", "partial");
      const Certificate cs = run_suite("crossed-product", semi, SuiteOptions{});
      const Certificate cp = run_suite("crossed-product", part, SuiteOptions{});
      ok = cs.pass() && cp.pass() && entries_pass(cs, "CrossedProduct.") &&
           entries_pass(cp, "CrossedProduct.") &&
           semi.bundle->total_dim() == 4 && part.bundle->total_dim() == 1;
      gates.push_back({9, "crossed-product realizations agree", ok,
                       "dims 4 and 1"});
    }

    // ---- 10: Plancherel weight identities at the tight tolerance
    {
      bool ok = true;
      double worst = 0.0;
      int covered = 0;
      for (const Fixture& f : corpus) {
        if (f.kind != "group") continue;
        ++covered;
        const Certificate cert = run_suite("plancherel", f, SuiteOptions{});
        ok = ok && cert.pass() &&
             entry_residual(cert, "Plancherel.basis") == 0.0;
        worst = std::max(worst, cert.worst_residual());
      }
      ok = ok && covered == 7;
      gates.push_back({10, "Plancherel weight identities hold at 1e-12", ok,
                       "worst " + fmt(worst)});
    }

    // ---- 11: operator norms agree between the two regular pictures
    {
      bool ok = true;
      for (std::size_t i = 0; i < corpus.size(); ++i) {
        ok = ok && dual_certs[i].pass() &&
             entries_pass(dual_certs[i], "NormAgreement");
      }
      gates.push_back({11,
                       "operator norms agree across both regular pictures",
                       ok, ok ? "all fixtures at 1e-8" : "disagreement"});
    }

    // ---- 12: the command-line contract, end to end
    {
      std::string cli = FELLKIT_CLI_PATH;
      if (const char* env = std::getenv("FELLKIT_CLI")) cli = env;
      const CommandResult all = run_command(cli + " all");
      const bool all_ok = all.ran && all.exit_code == 0 && all.seconds < 60.0;
      const CommandResult bad =
          run_command(cli + " check-bundle counterexample:involution");
      const bool bad_ok = bad.ran && bad.exit_code == 1 &&
                          bad.output.find("Axiom.i.involution") !=
                              std::string::npos;
      gates.push_back({12, "command-line end-to-end contract", all_ok && bad_ok,
                       "full run " + fmt(all.seconds) + " s exit " +
                           std::to_string(all.exit_code) +
                           "; counterexample exit " +
                           std::to_string(bad.exit_code)});
    }
  } catch (const Error& e) {
    std::fprintf(stderr, "acceptance aborted: %s\n", e.what());
    return 1;
  }

  bool all_pass = true;
  for (const Gate& g : gates) {
    all_pass = all_pass && g.pass;
    std::printf("criterion %2d: %s  %s (%s)\n", g.number,
                g.pass ? "PASS" : "FAIL", g.title.c_str(), g.detail.c_str());
  }
  std::printf("acceptance: %d/12 criteria passed\n",
              static_cast<int>(std::count_if(
                  gates.begin(), gates.end(),
                  [](const Gate& g) { return g.pass; })));
  return all_pass ? 0 : 1;
}
