#include "fellkit/certificate.hpp"

#include <algorithm>
#include <cstdio>

namespace fellkit {

CheckEntry& Certificate::add(const std::string& anchor, double residual,
                             double tolerance, const std::string& note) {
  CheckEntry e;
  e.anchor = anchor;
  e.residual = residual;
  e.tolerance = tolerance;
  e.gated = true;
  e.pass = residual <= tolerance;
  e.note = note;
  checks.push_back(std::move(e));
  return checks.back();
}

CheckEntry& Certificate::add_info(const std::string& anchor, double residual,
                                  const std::string& note) {
  CheckEntry e;
  e.anchor = anchor;
  e.residual = residual;
  e.tolerance = 0.0;
  e.gated = false;
  e.pass = true;
  e.note = note;
  checks.push_back(std::move(e));
  return checks.back();
}

void Certificate::absorb(const Certificate& other, const std::string& prefix) {
  for (const CheckEntry& e : other.checks) {
    CheckEntry copy = e;
    copy.anchor = prefix.empty() ? e.anchor : prefix + e.anchor;
    checks.push_back(std::move(copy));
  }
}

bool Certificate::pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckEntry& e) {
    return !e.gated || e.pass;
  });
}

double Certificate::worst_residual() const {
  double w = 0.0;
  for (const CheckEntry& e : checks)
    if (e.gated) w = std::max(w, e.residual);
  return w;
}

std::string Certificate::summary_line() const {
  char buf[256];
  std::snprintf(buf, sizeof(buf), "%-18s %-16s %-4s worst residual %.3e (%zu checks)",
                suite.c_str(), fixture.c_str(), pass() ? "ok" : "FAIL",
                worst_residual(), checks.size());
  return std::string(buf);
}

std::string digest(const std::string& payload) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : payload) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx",
                static_cast<unsigned long long>(h));
  return std::string(buf);
}

}  // namespace fellkit
