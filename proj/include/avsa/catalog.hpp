#pragma once

#include <string>
#include <vector>

#include "avsa/centralext.hpp"
#include "avsa/superalgebra.hpp"

namespace avsa {

struct ExampleParams {
  mpq_class beta = 0;
  int n = 1;
  int i = 0;
  int p = 2;
  int m = 2;
};

/// One member of a parameterized example family. Names: onedim, gap_p,
/// fermion, bms_family, simple_lie, galilean, jordan.
struct ExampleId {
  std::string name;
  ExampleParams params;

  /// Short human-readable label listing only the parameters the family uses.
  std::string label() const;
};

/// Thrown for unknown families, parameters outside a family's constraints,
/// and parameters the expected tables do not cover.
class CatalogError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct ExpectedTable {
  DimensionTable dims;
  std::size_t total = 0;
  std::string note;
};

const std::vector<std::string>& example_names();

/// Throws CatalogError if the parameters violate the family's constraints.
void check_params(const ExampleId& id);

/// Validated spec for the example; field order n (p for gap_p).
SuperalgebraSpec make_example(const ExampleId& id);

/// Expected dimension table assembled from the per-summand tables.
ExpectedTable expected_h2(const ExampleId& id);

/// Parameter grid covering every branch of every table.
std::vector<ExampleId> regression_grid();

/// Grid for a single family, as used by the acceptance suite.
std::vector<ExampleId> family_grid(const std::string& name);

}  // namespace avsa
