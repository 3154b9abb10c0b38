#pragma once

#include <string>
#include <vector>

#include "avsa/algebra_io.hpp"
#include "avsa/catalog.hpp"
#include "avsa/loopmodules.hpp"

namespace avsa {

/// A command result: human-readable text, its JSON twin, and whether the
/// check passed (the CLI maps a failure to exit code 1).
struct Report {
  std::string text;
  json data;
  bool ok = true;
};

Report validation_report(const SuperalgebraSpec& g, const std::vector<Violation>& violations);
Report h2_report(const SuperalgebraSpec& g, const DimensionTable& dims);
/// Central labels and every nonzero value of the data defining each one.
json extension_to_json(const ExtensionData& ext);
Report jacobi_report(const TruncatedAlgebra& t, const JacobiReport& r);
Report oracle_report(const OracleReport& r, std::size_t theorem_total);

Report module_check_report(const LoopWindow& l, const ModuleCheckReport& r, bool central_trivial);
Report module_violation_report(const std::vector<Violation>& violations);
Report simplicity_report(const GddModule& v, const SimplicityReport& r);
Report omega_report(const LoopWindow& l, int m, OmegaMode mode, const OmegaReport& r);
Report f_components_report(const LoopWindow& l, const std::vector<ComponentInfo>& comps);

struct ExampleCheck {
  ExampleId id;
  ExpectedTable expected;
  DimensionTable computed;
};
Report example_verify_report(const std::vector<ExampleCheck>& rows);

/// Text of a module vector, e.g. "3/2*v1t^1 + v2t^-1/2".
std::string render_module_vector(const LoopWindow& l, const ModuleVector& x);
/// Text of an algebra element over the labels of t.
std::string render_element(const TruncatedAlgebra& t, const AlgElement& x);

}  // namespace avsa
