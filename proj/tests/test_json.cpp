#include <memory>
#include <string>
#include <vector>

#include "doctest.h"
#include "fellkit/error.hpp"
#include "fellkit/fixtures.hpp"
#include "fellkit/json_io.hpp"
#include "fellkit/rng.hpp"
#include "fellkit/suites.hpp"

using namespace fellkit;

namespace {

std::string expect_schema_violation(const std::string& text,
                                    const std::string& kind) {
  try {
    if (kind == "bundle") (void)bundle_from_json(text);
    if (kind == "group") (void)group_from_json(text);
    if (kind == "section") (void)section_from_json(text);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::SchemaViolation);
    return e.what();
  }
  FAIL(("expected a schema violation for a malformed " + kind + " document"));
  return "";
}

}  // namespace

TEST_CASE("group serialization round trips byte-identically") {
  for (const std::string& name : builtin_group_names()) {
    const FiniteGroup g = builtin_group(name);
    const std::string text = group_to_json(g);
    const FiniteGroup back = group_from_json(text);
    CHECK(back.same_table(g));
    CHECK(back.name() == g.name());
    CHECK(group_to_json(back) == text);
  }
}

TEST_CASE("bundle serialization preserves every fiber as a subspace") {
  for (const char* spec :
       {"group:c2", "group:q8", "semidirect:s3", "partial:c2"}) {
    const FellBundle b = builtin_bundle_by_name(spec);
    CAPTURE(spec);
    const FellBundle back = bundle_from_json(bundle_to_json(b));
    CHECK(back.label == b.label);
    CHECK(back.ambient_dim == b.ambient_dim);
    CHECK(back.group.same_table(b.group));
    REQUIRE(back.fibers.size() == b.fibers.size());
    for (std::size_t t = 0; t < b.fibers.size(); ++t) {
      CHECK(back.fibers[t].dim() == b.fibers[t].dim());
      CHECK(back.fibers[t].equals(b.fibers[t], 1e-10));
    }
  }
}

TEST_CASE("sections and operator functions round trip value-exactly") {
  const BundlePtr b =
      std::make_shared<FellBundle>(builtin_bundle("c4", "group"));
  Rng rng(89);

  const Section s = random_section(rng, b);
  const Section s2 = section_from_json(section_to_json(s));
  for (int t = 0; t < b->group.order(); ++t) {
    CHECK((s2.value(t) - s.value(t)).max_abs() == 0.0);
  }
  CHECK(s2.bundle->group.same_table(b->group));

  const OperatorFunction f = random_operator_function(rng, b->group, 3);
  const OperatorFunction f2 =
      operator_function_from_json(operator_function_to_json(f));
  CHECK(f2.coeff_dim == f.coeff_dim);
  for (int t = 0; t < b->group.order(); ++t) {
    CHECK((f2.value(t) - f.value(t)).max_abs() == 0.0);
  }
  CHECK(operator_function_to_json(f2) == operator_function_to_json(f));
}

TEST_CASE("coactions survive serialization coefficient-for-coefficient") {
  const BundlePtr b =
      std::make_shared<FellBundle>(builtin_bundle("c2", "semidirect"));
  const Coaction c = dual_coaction(build_algebra(b));
  const Coaction c2 = coaction_from_json(coaction_to_json(c));
  CHECK(c2.label == c.label);
  CHECK(c2.coeff_dim == c.coeff_dim);
  REQUIRE(c2.kappa.size() == c.kappa.size());
  for (std::size_t j = 0; j < c.kappa.size(); ++j) {
    CHECK((c2.kappa[j] - c.kappa[j]).max_abs() < 1e-12);
  }
  CHECK(c2.span_defect < 1e-10);
  CHECK(check_coaction(c2).pass());
}

TEST_CASE("dual actions round trip byte-identically") {
  const DualAction act = ad_sign_action();
  const DualAction act2 = action_from_json(action_to_json(act));
  CHECK(act2.label == act.label);
  REQUIRE(act2.maps.size() == act.maps.size());
  for (std::size_t x = 0; x < act.maps.size(); ++x) {
    CHECK((act2.maps[x] - act.maps[x]).max_abs() == 0.0);
  }
  CHECK(action_to_json(act2) == action_to_json(act));
}

TEST_CASE("certificates round trip byte-identically with their entries") {
  const Certificate cert =
      run_suite("plancherel", make_fixture("c3", "group"), SuiteOptions{});
  const Certificate back = certificate_from_json(certificate_to_json(cert));
  CHECK(back.suite == cert.suite);
  CHECK(back.fixture == cert.fixture);
  CHECK(back.seed == cert.seed);
  CHECK(back.samples == cert.samples);
  CHECK(back.input_digest == cert.input_digest);
  CHECK(back.pass() == cert.pass());
  REQUIRE(back.checks.size() == cert.checks.size());
  for (std::size_t i = 0; i < cert.checks.size(); ++i) {
    CHECK(back.checks[i].anchor == cert.checks[i].anchor);
    CHECK(back.checks[i].residual == cert.checks[i].residual);
    CHECK(back.checks[i].gated == cert.checks[i].gated);
    CHECK(back.checks[i].note == cert.checks[i].note);
  }
  CHECK(certificate_to_json(back) == certificate_to_json(cert));
}

TEST_CASE("schema violations name the offending JSON path") {
  const std::string missing_fibers = R"({"group": "c2", "ambient_dim": 2})";
  CHECK(expect_schema_violation(missing_fibers, "bundle").find("fibers") !=
        std::string::npos);

  const std::string bad_matrix =
      R"({"group": "c2", "ambient_dim": 2, "label": "x",
          "fibers": {"0": [[[1.0, 0.0]]], "1": []}})";
  CHECK(expect_schema_violation(bad_matrix, "bundle").find("$.fibers.0[0]") !=
        std::string::npos);

  const std::string odd_entries =
      R"({"group": "c2", "ambient_dim": 2, "label": "x",
          "fibers": {"0": [[[1,0],[0,0],[0,0]]], "1": []}})";
  CHECK(expect_schema_violation(odd_entries, "bundle")
            .find("not a perfect square") != std::string::npos);

  (void)expect_schema_violation("{ nope", "group");

  const std::string wrong_kind = R"({"widget": []})";
  CHECK(json_kind(wrong_kind) == "unknown");
  (void)expect_schema_violation(wrong_kind, "section");
}

TEST_CASE("json_kind classifies every writer output") {
  const BundlePtr b =
      std::make_shared<FellBundle>(builtin_bundle("c2", "group"));
  Rng rng(97);
  CHECK(json_kind(group_to_json(b->group)) == "group");
  CHECK(json_kind(bundle_to_json(*b)) == "bundle");
  CHECK(json_kind(section_to_json(random_section(rng, b))) == "section");
  CHECK(json_kind(operator_function_to_json(
            random_operator_function(rng, b->group, 2))) ==
        "operator-function");
  CHECK(json_kind(action_to_json(ad_sign_action())) == "action");
  CHECK(json_kind(coaction_to_json(dual_coaction(build_algebra(b)))) ==
        "coaction");
  const Certificate cert =
      run_suite("w-unitary", make_fixture("c2", "group"), SuiteOptions{});
  CHECK(json_kind(certificate_to_json(cert)) == "certificate");
}

TEST_CASE("a group document may be just a builtin name") {
  const FiniteGroup g = group_from_json(R"("q8")");
  CHECK(g.order() == 8);
  CHECK(g.same_table(builtin_group("q8")));
  CHECK_THROWS_AS((void)group_from_json(R"("c17")"), Error);
}
