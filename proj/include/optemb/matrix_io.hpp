#pragma once

#include <istream>
#include <string>
#include <vector>

#include "optemb/mat3.hpp"

namespace optemb {

/// Text format:
///   p f N
///   h c0 c1 ... c{f-1}        (optional modulus line)
///   three rows of three entries per matrix
/// Each entry is f comma-separated integers (coefficients on 1, x, x^2).
/// Blank lines and lines starting with '#' are ignored.
struct MatrixFile {
  RingPtr ring;
  std::vector<Mat3L> matrices;
};

/// Throws ParseError (and ring construction errors).
MatrixFile parse_matrix_file(std::istream& in);
MatrixFile read_matrix_file(const std::string& path);
std::string format_matrix_file(const RingPtr& ring, const std::vector<Mat3L>& matrices);

}  // namespace optemb
