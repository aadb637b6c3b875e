#pragma once

#include <string>

#include "fellkit/certificate.hpp"
#include "fellkit/coaction.hpp"
#include "fellkit/dual_action.hpp"
#include "fellkit/fell_bundle.hpp"
#include "fellkit/harmonic.hpp"
#include "fellkit/section.hpp"

namespace fellkit {

// Writers. Field order is fixed and reals carry 17 significant digits, so
// equal inputs produce byte-identical text. Matrices serialize as flat
// row-major arrays of [re, im] pairs.
std::string group_to_json(const FiniteGroup& g);
std::string bundle_to_json(const FellBundle& b);
std::string section_to_json(const Section& s);
std::string operator_function_to_json(const OperatorFunction& f);
// Serializes the graded part of the coaction (the full tensor image of each
// basis element); exact whenever the images lie in A ⊗ C*(G), i.e. the
// span defect is zero. Quadratic in the tensor dimension — meant for
// desk-scale inputs.
std::string coaction_to_json(const Coaction& c);
std::string action_to_json(const DualAction& a);
std::string certificate_to_json(const Certificate& c);

// Readers. They accept everything the writers emit; group references may
// also be builtin names ("c2", ..., "q8"). Schema violations raise
// SchemaViolation naming the JSON path of the offending field.
FiniteGroup group_from_json(const std::string& text);
FellBundle bundle_from_json(const std::string& text);
Section section_from_json(const std::string& text);
OperatorFunction operator_function_from_json(const std::string& text);
Coaction coaction_from_json(const std::string& text, double tol = 1e-9);
DualAction action_from_json(const std::string& text);
Certificate certificate_from_json(const std::string& text);

// Best-effort classification of a JSON document by its top-level keys:
// "group", "bundle", "section", "operator-function", "coaction", "action",
// "certificate", or "unknown".
std::string json_kind(const std::string& text);

// File helpers; raise BadParameter on I/O failure.
std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);

}  // namespace fellkit
