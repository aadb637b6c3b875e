#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "fellkit/certificate.hpp"
#include "fellkit/coaction.hpp"
#include "fellkit/section.hpp"

namespace fellkit {

struct SuiteOptions {
  double tol = 1e-9;
  std::uint64_t seed = 0;
  int samples = 50;
};

// A corpus fixture with its derived objects, built once and reused across
// suites: the bundle, its section algebra, and the dual coaction on it.
struct Fixture {
  std::string name;        // "kind:group"
  std::string group_name;  // c2 .. q8
  std::string kind;        // group | semidirect | partial
  BundlePtr bundle;
  BundleAlgebra algebra;
  Coaction coaction;
};

Fixture make_fixture(const std::string& group, const std::string& kind,
                     double tol = 1e-9);
// One Fixture per default_corpus() entry.
std::vector<Fixture> corpus_fixtures(double tol = 1e-9);

// The verification suites, in their canonical order.
const std::vector<std::string>& suite_names();
bool suite_known(const std::string& suite);

// Runs one named suite on one fixture and stamps the certificate metadata
// (suite, fixture, tolerance, seed, samples, input digest, wall time).
// Suites that do not apply to a fixture (the abelian ones on a nonabelian
// group) return a passing certificate with an informational entry saying
// so. Throws BadParameter for an unknown suite name.
Certificate run_suite(const std::string& suite, const Fixture& f,
                      const SuiteOptions& opts);

}  // namespace fellkit
