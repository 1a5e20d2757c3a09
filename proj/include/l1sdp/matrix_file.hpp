#pragma once

#include <iosfwd>
#include <string>

#include "l1sdp/linalg.hpp"

namespace l1sdp {

/// Plain-text matrix format: lines whose first non-blank character is '#'
/// and blank lines are ignored; the first remaining line holds n, followed by
/// n rows of n whitespace-separated reals. The matrix is symmetrized on load.
SymMat parse_matrix(std::istream& in, const std::string& source = "<input>");
SymMat read_matrix_file(const std::string& path);
void write_matrix(std::ostream& out, const SymMat& m, const std::string& comment = {});

/// The 6x6 instance used in the worked examples (all entries negative,
/// lambda_max ~ 7.0857).
SymMat example1_matrix();

}  // namespace l1sdp
