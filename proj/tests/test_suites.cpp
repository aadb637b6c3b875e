#include <set>
#include <string>
#include <vector>

#include "doctest.h"
#include "fellkit/error.hpp"
#include "fellkit/json_io.hpp"
#include "fellkit/suites.hpp"

using namespace fellkit;

namespace {

// The serialized form with the wall-clock stamp blanked, for determinism
// comparisons.
std::string stable_text(Certificate c) {
  c.wall_ms = 0.0;
  return certificate_to_json(c);
}

}  // namespace

TEST_CASE("the suite registry lists eleven suites and knows its own names") {
  const std::vector<std::string>& names = suite_names();
  CHECK(names.size() == 11);
  const std::set<std::string> unique(names.begin(), names.end());
  CHECK(unique.size() == names.size());
  for (const std::string& n : names) CHECK(suite_known(n));
  CHECK_FALSE(suite_known("spectral-theory"));
  for (const char* expected :
       {"plancherel", "fourier-scalar", "positive-definite", "dual-coaction",
        "prop020", "inversion", "fs-action", "w-unitary",
        "abelian-dictionary", "reconstruct", "crossed-product"}) {
    CHECK(unique.count(expected) == 1);
  }
}

TEST_CASE("corpus fixtures carry coherent derived objects") {
  const std::vector<Fixture> fixtures = corpus_fixtures();
  CHECK(fixtures.size() == 12);
  for (const Fixture& f : fixtures) {
    CAPTURE(f.name);
    CHECK(f.name == f.kind + ":" + f.group_name);
    CHECK(f.bundle != nullptr);
    CHECK(f.algebra.algebra.dim() == f.bundle->total_dim());
    CHECK(f.coaction.dim() == f.algebra.algebra.dim());
    CHECK(f.coaction.group.same_table(f.bundle->group));
  }
}

TEST_CASE("running an unknown suite is a parameter error") {
  const Fixture f = make_fixture("c2", "group");
  CHECK_THROWS_AS((void)run_suite("nope", f, SuiteOptions{}), Error);
  try {
    (void)run_suite("nope", f, SuiteOptions{});
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::BadParameter);
  }
}

TEST_CASE("certificates are stamped with their run parameters") {
  SuiteOptions opts;
  opts.tol = 1e-8;
  opts.seed = 42;
  opts.samples = 7;
  const Fixture f = make_fixture("v4", "group");
  const Certificate cert = run_suite("inversion", f, opts);
  CHECK(cert.suite == "inversion");
  CHECK(cert.fixture == "group:v4");
  CHECK(cert.tolerance == 1e-8);
  CHECK(cert.seed == 42);
  CHECK(cert.samples == 7);
  CHECK_FALSE(cert.input_digest.empty());
  CHECK(cert.wall_ms >= 0.0);
  CHECK_FALSE(cert.checks.empty());
}

TEST_CASE("equal inputs produce identical certificates apart from wall time") {
  const Fixture f = make_fixture("s3", "group");
  SuiteOptions opts;
  opts.seed = 9;
  opts.samples = 11;
  const Certificate a = run_suite("dual-coaction", f, opts);
  const Certificate b = run_suite("dual-coaction", f, opts);
  CHECK(stable_text(a) == stable_text(b));

  // A different seed changes the digest (and so the document).
  SuiteOptions other = opts;
  other.seed = 10;
  const Certificate c = run_suite("dual-coaction", f, other);
  CHECK(c.input_digest != a.input_digest);
}

TEST_CASE("abelian-only suites report inapplicability without failing") {
  const Fixture nonabelian = make_fixture("s3", "group");
  for (const char* suite : {"abelian-dictionary", "reconstruct"}) {
    CAPTURE(suite);
    const Certificate cert = run_suite(suite, nonabelian, SuiteOptions{});
    CHECK(cert.pass());
    REQUIRE(cert.checks.size() == 1);
    CHECK(cert.checks[0].anchor == "Applicability");
    CHECK_FALSE(cert.checks[0].gated);
  }
  // On an abelian fixture the same suites do real work.
  const Fixture abelian = make_fixture("c2", "group");
  const Certificate real =
      run_suite("abelian-dictionary", abelian, SuiteOptions{});
  CHECK(real.pass());
  CHECK(real.checks.size() > 1);
}

TEST_CASE("every suite passes on a quick pass over two contrasting fixtures") {
  SuiteOptions opts;
  opts.samples = 6;
  for (const char* spec : {"c2", "s3"}) {
    const Fixture f = make_fixture(spec, "group");
    for (const std::string& suite : suite_names()) {
      CAPTURE(spec);
      CAPTURE(suite);
      const Certificate cert = run_suite(suite, f, opts);
      CHECK(cert.pass());
    }
  }
}
