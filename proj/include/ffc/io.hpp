#pragma once

#include <stdexcept>
#include <string>

#include "json.hpp"

#include "ffc/matrix.hpp"
#include "ffc/polynomial.hpp"
#include "ffc/transforms.hpp"

namespace ffc {

// Raised for malformed input files; the CLI maps it to its parse exit code.
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Polynomial files are JSON objects carrying either
//   {"coeffs": ["num/den", ...]}   ascending in the power of x (exact), or
//   {"roots":  [3, "5/2", ...]}    building the monic product of (x - r),
// with an optional "degree" used for validation. The "coeffs" form
// round-trips exactly.
Polynomial polynomial_from_json(const nlohmann::json& j);
nlohmann::ordered_json polynomial_to_json(const Polynomial& p);

Polynomial read_polynomial_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);

// Matrices serialize as arrays of rows with "num/den" entries, so fixtures
// reproduce exactly.
nlohmann::ordered_json rational_matrix_to_json(const RationalMatrix& m);
RationalMatrix rational_matrix_from_json(const nlohmann::json& j);

nlohmann::ordered_json bound_report_to_json(const BoundReport& r);

// One CSV row of the fixed (context,param1,param2,lhs,rhs,margin,satisfied)
// schema; empty strings stand for inapplicable parameters.
std::string csv_row(const BoundReport& r, const std::string& param1,
                    const std::string& param2);
extern const char* kCsvHeader;

// 17 significant digits, the precision doubles are printed with.
std::string format_double(double v);

}  // namespace ffc
