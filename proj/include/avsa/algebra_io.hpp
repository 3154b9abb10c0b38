#pragma once

#include <json.hpp>
#include <string>

#include "avsa/superalgebra.hpp"

namespace avsa {

using json = nlohmann::json;

/// Reads the algebra document into a spec without checking the algebraic
/// invariants. Throws InputError for missing fields, bad shapes, out-of-range
/// indices, and ScalarSyntaxError for malformed scalars.
///
/// Each bracket record sets c(i,j,*). Unless the reversed pair is also listed,
/// c(j,i,*) is filled in by super-skew symmetry.
SuperalgebraSpec parse_algebra(const json& doc);

/// parse_algebra followed by validate_all.
SuperalgebraSpec build_algebra(const json& doc);

/// Inverse of parse_algebra: lists each unordered pair once (i < j, or i == j
/// for odd-odd pairs), skipping zero brackets.
json algebra_to_json(const SuperalgebraSpec& g);

/// Reads a whole file and parses it as JSON; throws InputError on IO or
/// syntax problems.
json read_json_file(const std::string& path);

/// Writes to a temporary sibling then renames, so a failure leaves no
/// partial file behind.
void write_text_file(const std::string& path, const std::string& text);

/// Helpers shared with the module reader.
FieldElem scalar_from_json(const json& v, const CyclotomicField& field, const std::string& where);
Matrix matrix_from_json(const json& v, std::size_t rows, std::size_t cols, const CyclotomicField& field,
                        const std::string& where);
json matrix_to_json(const Matrix& m);
std::vector<Parity> parity_from_json(const json& v, std::size_t dim, const std::string& where);

}  // namespace avsa
