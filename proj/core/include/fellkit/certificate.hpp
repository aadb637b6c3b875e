#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace fellkit {

// One verified identity. `anchor` is the stable rule id shown to users and
// written to JSON; residuals are relative (already divided by 1+scale), so
// `pass` is simply residual ≤ tolerance. Ungated entries are informational:
// they never affect the verdict.
struct CheckEntry {
  std::string anchor;
  double residual = 0.0;
  double tolerance = 0.0;
  bool gated = true;
  bool pass = true;
  std::string note;
};

struct Certificate {
  static constexpr int kSchemaVersion = 1;

  std::string suite;
  std::string fixture;
  std::vector<CheckEntry> checks;
  double tolerance = 1e-9;
  std::uint64_t seed = 0;
  int samples = 0;
  std::string input_digest;
  double wall_ms = 0.0;  // excluded from the determinism contract

  // Add a gated check; pass iff residual ≤ tolerance.
  CheckEntry& add(const std::string& anchor, double residual, double tolerance,
                  const std::string& note = "");
  // Add an ungated (informational) entry.
  CheckEntry& add_info(const std::string& anchor, double residual,
                       const std::string& note = "");
  // Merge another certificate's entries, prefixing anchors.
  void absorb(const Certificate& other, const std::string& prefix = "");

  bool pass() const;
  double worst_residual() const;  // over gated entries
  std::string summary_line() const;
};

// FNV-1a digest of a canonical input description, rendered as hex.
std::string digest(const std::string& payload);

}  // namespace fellkit
