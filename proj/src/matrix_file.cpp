#include "l1sdp/matrix_file.hpp"

#include <cmath>
#include <fstream>
#include <iomanip>
#include <istream>
#include <ostream>
#include <sstream>
#include <vector>

#include "l1sdp/errors.hpp"

namespace l1sdp {

namespace {

bool is_skippable(const std::string& line) {
  const auto pos = line.find_first_not_of(" \t\r");
  return pos == std::string::npos || line[pos] == '#';
}

}  // namespace

SymMat parse_matrix(std::istream& in, const std::string& source) {
  std::string line;
  int line_no = 0;
  auto fail = [&](const std::string& what) {
    throw InputError(source + ":" + std::to_string(line_no) + ": " + what);
  };

  long n = -1;
  while (std::getline(in, line)) {
    ++line_no;
    if (is_skippable(line)) continue;
    std::istringstream ls(line);
    std::string extra;
    if (!(ls >> n) || (ls >> extra)) fail("expected the matrix order n on its own line");
    break;
  }
  if (n < 0) throw InputError(source + ": missing matrix order n");
  if (n < 1) fail("matrix order n must be at least 1");

  std::vector<std::vector<double>> rows;
  while (std::getline(in, line)) {
    ++line_no;
    if (is_skippable(line)) continue;
    if (static_cast<long>(rows.size()) == n) fail("unexpected data after " + std::to_string(n) + " rows");
    std::istringstream ls(line);
    std::vector<double> row;
    std::string tok;
    while (ls >> tok) {
      std::size_t used = 0;
      double v = 0.0;
      try {
        v = std::stod(tok, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used != tok.size()) fail("entry '" + tok + "' is not a number");
      if (!std::isfinite(v)) fail("entry '" + tok + "' is not finite");
      row.push_back(v);
    }
    if (static_cast<long>(row.size()) != n) {
      fail("row " + std::to_string(rows.size() + 1) + " has " + std::to_string(row.size()) +
           " entries, expected " + std::to_string(n));
    }
    rows.push_back(std::move(row));
  }
  if (static_cast<long>(rows.size()) != n) {
    throw InputError(source + ": expected " + std::to_string(n) + " rows, found " +
                     std::to_string(rows.size()));
  }
  return SymMat::from_rows(rows);
}

SymMat read_matrix_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open matrix file '" + path + "'");
  return parse_matrix(in, path);
}

void write_matrix(std::ostream& out, const SymMat& m, const std::string& comment) {
  if (!comment.empty()) out << "# " << comment << '\n';
  out << m.order() << '\n' << std::setprecision(17);
  for (int i = 0; i < m.order(); ++i) {
    for (int j = 0; j < m.order(); ++j) out << (j ? " " : "") << m(i, j);
    out << '\n';
  }
}

SymMat example1_matrix() {
  return SymMat::from_rows({
      {-11, -11, -7, -10, -8, -2},
      {-11, -5, -10, -9, -10, -7},
      {-7, -10, -10, -3, -6, -8},
      {-10, -9, -3, -8, -9, -10},
      {-8, -10, -6, -9, -8, -7},
      {-2, -7, -8, -10, -7, -6},
  });
}

}  // namespace l1sdp
