#include "fellkit/json_io.hpp"

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <memory>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "fellkit/error.hpp"
#include "fellkit/fixtures.hpp"

namespace fellkit {
namespace {

using nlohmann::json;

// ---------------------------------------------------------------- writers

std::string esc(const std::string& s) {
  std::string out;
  out.reserve(s.size() + 2);
  for (char c : s) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\t': out += "\\t"; break;
      case '\r': out += "\\r"; break;
      default:
        if (static_cast<unsigned char>(c) < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof(buf), "\\u%04x",
                        static_cast<unsigned>(static_cast<unsigned char>(c)));
          out += buf;
        } else {
          out += c;
        }
    }
  }
  return out;
}

std::string str(const std::string& s) { return "\"" + esc(s) + "\""; }

std::string num(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::string matrix_json(const CMatrix& m) {
  std::string out = "[";
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (i != 0 || j != 0) out += ",";
      const Complex v = m.at(i, j);
      out += "[" + num(v.real()) + "," + num(v.imag()) + "]";
    }
  }
  out += "]";
  return out;
}

std::string group_json(const FiniteGroup& g) {
  std::string out = "{\"name\": " + str(g.name()) +
                    ", \"order\": " + std::to_string(g.order()) +
                    ", \"cayley\": [";
  for (int i = 0; i < g.order(); ++i) {
    if (i != 0) out += ",";
    out += "[";
    for (int j = 0; j < g.order(); ++j) {
      if (j != 0) out += ",";
      out += std::to_string(g.mul(i, j));
    }
    out += "]";
  }
  out += "]}";
  return out;
}

std::string matrix_list_json(const std::vector<CMatrix>& mats) {
  std::string out = "[";
  for (std::size_t i = 0; i < mats.size(); ++i) {
    if (i != 0) out += ",\n    ";
    out += matrix_json(mats[i]);
  }
  out += "]";
  return out;
}

std::string indexed_matrices_json(const std::vector<CMatrix>& mats) {
  std::string out = "{";
  for (std::size_t i = 0; i < mats.size(); ++i) {
    if (i != 0) out += ",\n    ";
    out += "\"" + std::to_string(i) + "\": " + matrix_json(mats[i]);
  }
  out += "}";
  return out;
}

// ---------------------------------------------------------------- readers

[[noreturn]] void schema_fail(const std::string& path, const std::string& why) {
  raise(ErrorCode::SchemaViolation, path + ": " + why);
}

json parse_root(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    schema_fail("$", std::string("not valid JSON (") + e.what() + ")");
  }
}

const json& field(const json& j, const char* key, const std::string& path) {
  if (!j.is_object()) schema_fail(path, "expected an object");
  if (!j.contains(key)) {
    schema_fail(path, std::string("missing field \"") + key + "\"");
  }
  return j.at(key);
}

double as_double(const json& j, const std::string& path) {
  if (!j.is_number()) schema_fail(path, "expected a number");
  return j.get<double>();
}

std::int64_t as_int(const json& j, const std::string& path) {
  if (!j.is_number_integer()) schema_fail(path, "expected an integer");
  return j.get<std::int64_t>();
}

std::uint64_t as_uint(const json& j, const std::string& path) {
  if (!j.is_number_integer() ||
      (!j.is_number_unsigned() && j.get<std::int64_t>() < 0)) {
    schema_fail(path, "expected a nonnegative integer");
  }
  return j.get<std::uint64_t>();
}

std::string as_string(const json& j, const std::string& path) {
  if (!j.is_string()) schema_fail(path, "expected a string");
  return j.get<std::string>();
}

bool as_bool(const json& j, const std::string& path) {
  if (!j.is_boolean()) schema_fail(path, "expected a boolean");
  return j.get<bool>();
}

CMatrix matrix_from(const json& j, const std::string& path) {
  if (!j.is_array()) schema_fail(path, "expected a matrix (array of pairs)");
  const std::size_t n = j.size();
  std::size_t side = 0;
  while (side * side < n) ++side;
  if (side * side != n) {
    schema_fail(path, "matrix has " + std::to_string(n) +
                          " entries, not a perfect square");
  }
  CMatrix m(side, side);
  for (std::size_t idx = 0; idx < n; ++idx) {
    const json& pair = j.at(idx);
    const std::string p = path + "[" + std::to_string(idx) + "]";
    if (!pair.is_array() || pair.size() != 2) {
      schema_fail(p, "expected a [re, im] pair");
    }
    m[idx] = Complex(as_double(pair.at(0), p + "[0]"),
                     as_double(pair.at(1), p + "[1]"));
  }
  return m;
}

FiniteGroup group_from(const json& j, const std::string& path) {
  if (j.is_string()) {
    const std::string name = j.get<std::string>();
    try {
      return builtin_group(name);
    } catch (const Error&) {
      schema_fail(path, "unknown builtin group \"" + name + "\"");
    }
  }
  if (!j.is_object()) schema_fail(path, "expected a group object or name");
  std::string name;
  if (j.contains("name")) name = as_string(j.at("name"), path + ".name");
  const json& cay = field(j, "cayley", path);
  if (!cay.is_array()) schema_fail(path + ".cayley", "expected an array");
  const std::size_t n = cay.size();
  if (j.contains("order") &&
      as_uint(j.at("order"), path + ".order") != n) {
    schema_fail(path + ".order", "does not match the Cayley table size");
  }
  std::vector<std::vector<int>> table(n);
  for (std::size_t i = 0; i < n; ++i) {
    const std::string p = path + ".cayley[" + std::to_string(i) + "]";
    const json& row = cay.at(i);
    if (!row.is_array() || row.size() != n) {
      schema_fail(p, "expected a row of " + std::to_string(n) + " integers");
    }
    table[i].reserve(n);
    for (std::size_t k = 0; k < n; ++k) {
      table[i].push_back(static_cast<int>(
          as_int(row.at(k), p + "[" + std::to_string(k) + "]")));
    }
  }
  return FiniteGroup::from_cayley(table, name);
}

std::vector<CMatrix> matrix_list_from(const json& j, const std::string& path,
                                      std::size_t expected_dim) {
  if (!j.is_array()) schema_fail(path, "expected an array of matrices");
  std::vector<CMatrix> out;
  out.reserve(j.size());
  for (std::size_t i = 0; i < j.size(); ++i) {
    const std::string p = path + "[" + std::to_string(i) + "]";
    CMatrix m = matrix_from(j.at(i), p);
    if (expected_dim != 0 && m.rows() != expected_dim) {
      schema_fail(p, "matrix is " + std::to_string(m.rows()) + "x" +
                         std::to_string(m.cols()) + ", expected " +
                         std::to_string(expected_dim));
    }
    out.push_back(std::move(m));
  }
  return out;
}

// Values keyed "0".."n-1"; every key must be present.
std::vector<CMatrix> indexed_matrices_from(const json& j,
                                           const std::string& path,
                                           std::size_t n) {
  if (!j.is_object()) schema_fail(path, "expected an object keyed by index");
  std::vector<CMatrix> out;
  out.reserve(n);
  for (std::size_t t = 0; t < n; ++t) {
    const std::string key = std::to_string(t);
    if (!j.contains(key)) {
      schema_fail(path, "missing entry \"" + key + "\"");
    }
    out.push_back(matrix_from(j.at(key), path + "." + key));
  }
  return out;
}

Subspace orthonormal_from(const json& j, const std::string& path) {
  if (!j.is_array() || j.empty()) {
    schema_fail(path, "expected a nonempty array of basis matrices");
  }
  std::vector<CMatrix> basis = matrix_list_from(j, path, 0);
  const std::size_t d = basis.front().rows();
  for (std::size_t i = 1; i < basis.size(); ++i) {
    if (basis[i].rows() != d) {
      schema_fail(path + "[" + std::to_string(i) + "]",
                  "ambient dimension differs from the first basis element");
    }
  }
  try {
    return Subspace::from_orthonormal(d, std::move(basis));
  } catch (const Error&) {
    schema_fail(path, "basis matrices must be orthonormal for the "
                      "Hilbert–Schmidt inner product");
  }
}

}  // namespace

std::string group_to_json(const FiniteGroup& g) {
  return group_json(g) + "\n";
}

std::string bundle_to_json(const FellBundle& b) {
  std::string out = "{\n  \"group\": " + group_json(b.group) +
                    ",\n  \"ambient_dim\": " + std::to_string(b.ambient_dim) +
                    ",\n  \"fibers\": {";
  for (std::size_t t = 0; t < b.fibers.size(); ++t) {
    if (t != 0) out += ",";
    out += "\n    \"" + std::to_string(t) + "\": [";
    const auto& basis = b.fibers[t].basis();
    for (std::size_t k = 0; k < basis.size(); ++k) {
      if (k != 0) out += ",";
      out += matrix_json(basis[k]);
    }
    out += "]";
  }
  out += "\n  },\n  \"label\": " + str(b.label) + "\n}\n";
  return out;
}

std::string section_to_json(const Section& s) {
  std::string bundle = bundle_to_json(*s.bundle);
  while (!bundle.empty() && bundle.back() == '\n') bundle.pop_back();
  std::string out = "{\n  \"bundle\": " + bundle + ",\n  \"values\": {";
  for (std::size_t t = 0; t < s.values.size(); ++t) {
    if (t != 0) out += ",";
    out += "\n    \"" + std::to_string(t) + "\": " + matrix_json(s.values[t]);
  }
  out += "\n  }\n}\n";
  return out;
}

std::string operator_function_to_json(const OperatorFunction& f) {
  std::string out = "{\n  \"group\": " + group_json(f.group) +
                    ",\n  \"dim\": " + std::to_string(f.coeff_dim) +
                    ",\n  \"values\": {";
  for (std::size_t t = 0; t < f.values.size(); ++t) {
    if (t != 0) out += ",";
    out += "\n    \"" + std::to_string(t) + "\": " + matrix_json(f.values[t]);
  }
  out += "\n  }\n}\n";
  return out;
}

std::string coaction_to_json(const Coaction& c) {
  const std::vector<CMatrix> lambdas = left_regular(c.group);
  const std::size_t order = c.group.order();
  std::vector<CMatrix> images;
  images.reserve(c.dim());
  for (std::size_t j = 0; j < c.dim(); ++j) {
    CMatrix img(c.coeff_dim * order, c.coeff_dim * order);
    for (std::size_t p = 0; p < c.dim(); ++p) {
      for (std::size_t t = 0; t < order; ++t) {
        const Complex w = c.kappa[j].at(p, t);
        if (std::norm(w) == 0.0) continue;
        img += w * kron(c.algebra.basis()[p], lambdas[t]);
      }
    }
    images.push_back(std::move(img));
  }
  std::string out = "{\n  \"algebra\": " + matrix_list_json(c.algebra.basis()) +
                    ",\n  \"group\": " + group_json(c.group) +
                    ",\n  \"map\": " + indexed_matrices_json(images) +
                    ",\n  \"label\": " + str(c.label) + "\n}\n";
  return out;
}

std::string action_to_json(const DualAction& a) {
  std::string out =
      "{\n  \"group_dual_of\": " + group_json(a.dual.base) +
      ",\n  \"algebra\": " + matrix_list_json(a.algebra.basis()) +
      ",\n  \"maps\": " + indexed_matrices_json(a.maps) +
      ",\n  \"label\": " + str(a.label) + "\n}\n";
  return out;
}

std::string certificate_to_json(const Certificate& c) {
  std::string out = "{\n";
  out += "  \"schema_version\": " + std::to_string(Certificate::kSchemaVersion) +
         ",\n";
  out += "  \"suite\": " + str(c.suite) + ",\n";
  out += "  \"fixture\": " + str(c.fixture) + ",\n";
  out += "  \"tolerance\": " + num(c.tolerance) + ",\n";
  out += "  \"seed\": " + std::to_string(c.seed) + ",\n";
  out += "  \"samples\": " + std::to_string(c.samples) + ",\n";
  out += "  \"input_digest\": " + str(c.input_digest) + ",\n";
  out += "  \"wall_ms\": " + num(c.wall_ms) + ",\n";
  out += "  \"pass\": " + std::string(c.pass() ? "true" : "false") + ",\n";
  out += "  \"worst_residual\": " + num(c.worst_residual()) + ",\n";
  out += "  \"checks\": [";
  for (std::size_t i = 0; i < c.checks.size(); ++i) {
    const CheckEntry& e = c.checks[i];
    if (i != 0) out += ",";
    out += "\n    {\"anchor\": " + str(e.anchor) +
           ", \"residual\": " + num(e.residual) +
           ", \"tolerance\": " + num(e.tolerance) +
           ", \"gated\": " + (e.gated ? "true" : "false") +
           ", \"pass\": " + (e.pass ? "true" : "false") +
           ", \"note\": " + str(e.note) + "}";
  }
  out += "\n  ]\n}\n";
  return out;
}

FiniteGroup group_from_json(const std::string& text) {
  return group_from(parse_root(text), "$");
}

FellBundle bundle_from_json(const std::string& text) {
  const json root = parse_root(text);
  FellBundle b;
  b.group = group_from(field(root, "group", "$"), "$.group");
  b.ambient_dim = static_cast<std::size_t>(
      as_uint(field(root, "ambient_dim", "$"), "$.ambient_dim"));
  if (b.ambient_dim == 0) schema_fail("$.ambient_dim", "must be positive");
  const json& fibers = field(root, "fibers", "$");
  if (!fibers.is_object()) schema_fail("$.fibers", "expected an object");
  for (int t = 0; t < b.group.order(); ++t) {
    const std::string key = std::to_string(t);
    if (!fibers.contains(key)) {
      schema_fail("$.fibers", "missing fiber \"" + key + "\"");
    }
    std::vector<CMatrix> mats = matrix_list_from(
        fibers.at(key), "$.fibers." + key, b.ambient_dim);
    b.fibers.push_back(Subspace::span(b.ambient_dim, std::move(mats)));
  }
  if (root.contains("label")) {
    b.label = as_string(root.at("label"), "$.label");
  }
  return b;
}

Section section_from_json(const std::string& text) {
  const json root = parse_root(text);
  FellBundle b = bundle_from_json(field(root, "bundle", "$").dump());
  const BundlePtr bp = std::make_shared<const FellBundle>(std::move(b));
  std::vector<CMatrix> values = indexed_matrices_from(
      field(root, "values", "$"), "$.values", bp->group.order());
  for (std::size_t t = 0; t < values.size(); ++t) {
    if (values[t].rows() != bp->ambient_dim) {
      schema_fail("$.values." + std::to_string(t),
                  "matrix dimension does not match the bundle ambient");
    }
  }
  return make_section(bp, std::move(values));
}

OperatorFunction operator_function_from_json(const std::string& text) {
  const json root = parse_root(text);
  const FiniteGroup g = group_from(field(root, "group", "$"), "$.group");
  const std::size_t dim =
      static_cast<std::size_t>(as_uint(field(root, "dim", "$"), "$.dim"));
  if (dim == 0) schema_fail("$.dim", "must be positive");
  std::vector<CMatrix> values = indexed_matrices_from(
      field(root, "values", "$"), "$.values", g.order());
  for (std::size_t t = 0; t < values.size(); ++t) {
    if (values[t].rows() != dim) {
      schema_fail("$.values." + std::to_string(t),
                  "matrix dimension does not match \"dim\"");
    }
  }
  return make_operator_function(g, std::move(values));
}

Coaction coaction_from_json(const std::string& text, double tol) {
  const json root = parse_root(text);
  const FiniteGroup g = group_from(field(root, "group", "$"), "$.group");
  const Subspace algebra =
      orthonormal_from(field(root, "algebra", "$"), "$.algebra");
  std::vector<CMatrix> images = indexed_matrices_from(
      field(root, "map", "$"), "$.map", algebra.dim());
  const std::size_t expected = algebra.ambient_dim() * g.order();
  for (std::size_t j = 0; j < images.size(); ++j) {
    if (images[j].rows() != expected) {
      schema_fail("$.map." + std::to_string(j),
                  "tensor image is " + std::to_string(images[j].rows()) +
                      "x" + std::to_string(images[j].cols()) + ", expected " +
                      std::to_string(expected));
    }
  }
  std::string label = "coaction";
  if (root.contains("label")) label = as_string(root.at("label"), "$.label");
  return make_coaction(g, algebra, images, label, tol);
}

DualAction action_from_json(const std::string& text) {
  const json root = parse_root(text);
  const FiniteGroup g =
      group_from(field(root, "group_dual_of", "$"), "$.group_dual_of");
  DualAction a;
  a.dual = dual_group(g);
  a.algebra = orthonormal_from(field(root, "algebra", "$"), "$.algebra");
  a.maps = indexed_matrices_from(field(root, "maps", "$"), "$.maps",
                                 a.dual.order());
  for (std::size_t x = 0; x < a.maps.size(); ++x) {
    if (a.maps[x].rows() != a.algebra.dim()) {
      schema_fail("$.maps." + std::to_string(x),
                  "map is " + std::to_string(a.maps[x].rows()) + "x" +
                      std::to_string(a.maps[x].cols()) +
                      ", expected the algebra dimension " +
                      std::to_string(a.algebra.dim()));
    }
  }
  a.label = "action";
  if (root.contains("label")) a.label = as_string(root.at("label"), "$.label");
  return a;
}

Certificate certificate_from_json(const std::string& text) {
  const json root = parse_root(text);
  const std::int64_t version =
      as_int(field(root, "schema_version", "$"), "$.schema_version");
  if (version != Certificate::kSchemaVersion) {
    schema_fail("$.schema_version",
                "unsupported version " + std::to_string(version));
  }
  Certificate c;
  c.suite = as_string(field(root, "suite", "$"), "$.suite");
  c.fixture = as_string(field(root, "fixture", "$"), "$.fixture");
  c.tolerance = as_double(field(root, "tolerance", "$"), "$.tolerance");
  c.seed = as_uint(field(root, "seed", "$"), "$.seed");
  c.samples =
      static_cast<int>(as_int(field(root, "samples", "$"), "$.samples"));
  c.input_digest =
      as_string(field(root, "input_digest", "$"), "$.input_digest");
  c.wall_ms = as_double(field(root, "wall_ms", "$"), "$.wall_ms");
  const json& checks = field(root, "checks", "$");
  if (!checks.is_array()) schema_fail("$.checks", "expected an array");
  for (std::size_t i = 0; i < checks.size(); ++i) {
    const std::string p = "$.checks[" + std::to_string(i) + "]";
    const json& e = checks.at(i);
    CheckEntry entry;
    entry.anchor = as_string(field(e, "anchor", p), p + ".anchor");
    entry.residual = as_double(field(e, "residual", p), p + ".residual");
    entry.tolerance = as_double(field(e, "tolerance", p), p + ".tolerance");
    entry.gated = as_bool(field(e, "gated", p), p + ".gated");
    entry.pass = as_bool(field(e, "pass", p), p + ".pass");
    entry.note = as_string(field(e, "note", p), p + ".note");
    c.checks.push_back(std::move(entry));
  }
  return c;
}

std::string json_kind(const std::string& text) {
  json root;
  try {
    root = json::parse(text);
  } catch (const json::parse_error&) {
    return "unknown";
  }
  if (!root.is_object()) return "unknown";
  if (root.contains("cayley")) return "group";
  if (root.contains("fibers")) return "bundle";
  if (root.contains("map")) return "coaction";
  if (root.contains("group_dual_of")) return "action";
  if (root.contains("checks")) return "certificate";
  if (root.contains("bundle") && root.contains("values")) return "section";
  if (root.contains("dim") && root.contains("values")) return "operator-function";
  return "unknown";
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) raise(ErrorCode::BadParameter, "cannot open file " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) raise(ErrorCode::BadParameter, "cannot open file " + path);
  out << content;
  if (!out) raise(ErrorCode::BadParameter, "failed writing file " + path);
}

}  // namespace fellkit
