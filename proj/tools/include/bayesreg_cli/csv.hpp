#pragma once

#include <bayesreg/model_core.hpp>

#include <filesystem>
#include <string>
#include <vector>

namespace bayesreg::cli {

struct CsvTable {
  std::vector<std::string> header;
  Eigen::MatrixXd x;  ///< every column but the last
  Eigen::VectorXd y;  ///< last column
};

/// Reads a numeric CSV whose first non-comment row is a header and whose last
/// column is the response. Lines starting with '#' and blank lines are
/// skipped. Throws IoError, ParseError, RaggedRows, NonNumericCell, or
/// ValidationError when fewer than two data rows are present.
CsvTable load_csv(const std::filesystem::path& path);

/// Shortest round-trip text for a double; "inf", "-inf" and "nan" for
/// non-finite values.
std::string format_number(double v);

}  // namespace bayesreg::cli
