#include "fellkit/fixtures.hpp"

#include <algorithm>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "fellkit/error.hpp"

namespace fellkit {
namespace {

Subspace diagonal_algebra(std::size_t k) {
  std::vector<CMatrix> units;
  units.reserve(k);
  for (std::size_t i = 0; i < k; ++i) {
    CMatrix e(k, k);
    e.at(i, i) = Complex(1.0, 0.0);
    units.push_back(std::move(e));
  }
  return Subspace::from_orthonormal(k, std::move(units));
}

std::vector<int> subgroup_choice(const std::string& group) {
  // Keeps every coset module at desk scale: trivial H where |G| ≤ 4, an
  // order-2 subgroup for the order-6/8 groups.
  if (group == "c2" || group == "c3" || group == "c4" || group == "v4") {
    return {0};
  }
  if (group == "s3") return {0, 3};  // {id, the swap (01)}
  if (group == "d4") return {0, 4};  // {id, the base reflection}
  if (group == "q8") return {0, 1};  // the center {+1, −1}
  raise(ErrorCode::BadParameter, "no builtin action for group " + group);
}

}  // namespace

FiniteGroup builtin_group(const std::string& name) {
  if (name == "c2") return cyclic_group(2);
  if (name == "c3") return cyclic_group(3);
  if (name == "c4") return cyclic_group(4);
  if (name == "v4") {
    const FiniteGroup p = product_group(cyclic_group(2), cyclic_group(2));
    return FiniteGroup::from_cayley(p.cayley(), "v4");
  }
  if (name == "s3") return symmetric3_group();
  if (name == "d4") return dihedral_group(4);
  if (name == "q8") return quaternion8_group();
  raise(ErrorCode::BadParameter, "unknown builtin group " + name);
}

const std::vector<std::string>& builtin_group_names() {
  static const std::vector<std::string> names = {"c2", "c3", "c4", "v4",
                                                 "s3", "d4", "q8"};
  return names;
}

GlobalAction coset_translation_action(const FiniteGroup& g,
                                      const std::vector<int>& subgroup) {
  const int order = static_cast<int>(g.order());
  std::set<int> h(subgroup.begin(), subgroup.end());
  h.insert(FiniteGroup::identity());
  for (int a : h) {
    if (a < 0 || a >= order) {
      raise(ErrorCode::BadParameter,
            "coset_translation_action: element " + std::to_string(a) +
                " out of range");
    }
    for (int b : h) {
      if (h.count(g.mul(a, b)) == 0) {
        raise(ErrorCode::BadParameter,
              "coset_translation_action: the given set is not closed under "
              "the group product");
      }
    }
  }

  // Left cosets tH, enumerated by smallest member; coset_of[t] = index.
  std::vector<int> coset_of(static_cast<std::size_t>(order), -1);
  int count = 0;
  for (int t = 0; t < order; ++t) {
    if (coset_of[static_cast<std::size_t>(t)] >= 0) continue;
    for (int a : h) {
      coset_of[static_cast<std::size_t>(g.mul(t, a))] = count;
    }
    ++count;
  }
  const std::size_t k = static_cast<std::size_t>(count);
  std::vector<int> rep(k, -1);
  for (int t = order - 1; t >= 0; --t) {
    rep[static_cast<std::size_t>(coset_of[static_cast<std::size_t>(t)])] = t;
  }

  std::vector<CMatrix> unitaries;
  unitaries.reserve(static_cast<std::size_t>(order));
  for (int t = 0; t < order; ++t) {
    CMatrix u(k, k);
    for (std::size_t i = 0; i < k; ++i) {
      const int moved = coset_of[static_cast<std::size_t>(g.mul(t, rep[i]))];
      u.at(static_cast<std::size_t>(moved), i) = Complex(1.0, 0.0);
    }
    unitaries.push_back(std::move(u));
  }
  return action_from_unitaries(g, diagonal_algebra(k), unitaries);
}

GlobalAction builtin_action(const std::string& group) {
  const FiniteGroup g = builtin_group(group);
  return coset_translation_action(g, subgroup_choice(group));
}

PartialActionData builtin_partial(const std::string& group) {
  PartialActionData p;
  p.action = builtin_action(group);
  const std::size_t k = p.action.module_dim();
  const std::size_t keep = (k + 1) / 2;
  std::vector<CMatrix> units;
  units.reserve(keep);
  for (std::size_t i = 0; i < keep; ++i) {
    CMatrix e(k, k);
    e.at(i, i) = Complex(1.0, 0.0);
    units.push_back(std::move(e));
  }
  p.ideal = Subspace::from_orthonormal(k, std::move(units));
  validate_ideal(p.action, p.ideal);
  return p;
}

FellBundle builtin_bundle(const std::string& group, const std::string& kind) {
  FellBundle b;
  if (kind == "group") {
    b = group_bundle(builtin_group(group));
  } else if (kind == "semidirect") {
    b = semidirect_bundle(builtin_action(group));
  } else if (kind == "partial") {
    b = partial_action_bundle(builtin_partial(group));
  } else {
    raise(ErrorCode::BadParameter,
          "unknown fixture kind " + kind +
              " (expected group, semidirect, or partial)");
  }
  b.label = kind + ":" + group;
  return b;
}

FellBundle builtin_bundle_by_name(const std::string& spec) {
  if (spec == "counterexample:involution") return involution_counterexample();
  const std::size_t colon = spec.find(':');
  if (colon == std::string::npos) return builtin_bundle(spec, "group");
  return builtin_bundle(spec.substr(colon + 1), spec.substr(0, colon));
}

const std::vector<std::pair<std::string, std::string>>& default_corpus() {
  static const std::vector<std::pair<std::string, std::string>> corpus = {
      {"c2", "group"},      {"c3", "group"},         {"c4", "group"},
      {"v4", "group"},      {"s3", "group"},         {"d4", "group"},
      {"q8", "group"},      {"c2", "semidirect"},    {"v4", "semidirect"},
      {"s3", "semidirect"}, {"c2", "partial"},       {"s3", "partial"}};
  return corpus;
}

DualAction ad_sign_action() {
  std::vector<CMatrix> units;
  for (std::size_t i = 0; i < 2; ++i) {
    for (std::size_t j = 0; j < 2; ++j) {
      CMatrix e(2, 2);
      e.at(i, j) = Complex(1.0, 0.0);
      units.push_back(std::move(e));
    }
  }
  const Subspace m2 = Subspace::from_orthonormal(2, std::move(units));
  CMatrix sign = CMatrix::identity(2);
  sign.at(1, 1) = Complex(-1.0, 0.0);
  return inner_dual_action(dual_group(cyclic_group(2)), m2,
                           {CMatrix::identity(2), sign}, "ad-sign");
}

FellBundle involution_counterexample() {
  FellBundle b;
  b.group = cyclic_group(2);
  b.ambient_dim = 2;
  b.label = "counterexample:involution";
  CMatrix upper(2, 2);
  upper.at(0, 1) = Complex(1.0, 0.0);
  b.fibers.push_back(Subspace::span(2, {CMatrix::identity(2)}));
  b.fibers.push_back(Subspace::span(2, {upper}));
  return b;
}

FellBundle unit_fiber_subbundle(const FellBundle& b) {
  FellBundle out;
  out.group = b.group;
  out.ambient_dim = b.ambient_dim;
  out.label = b.label + ":unit-fiber";
  out.fibers.reserve(b.fibers.size());
  for (std::size_t t = 0; t < b.fibers.size(); ++t) {
    if (t == 0) {
      out.fibers.push_back(b.fibers[t]);
    } else {
      out.fibers.push_back(Subspace::span(b.ambient_dim, {}));
    }
  }
  return out;
}

}  // namespace fellkit
