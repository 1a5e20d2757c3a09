#include "l1sdp/commands.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <regex>
#include <sstream>

#include <gtest/gtest.h>

#include "json.hpp"

#include "l1sdp/errors.hpp"
#include "l1sdp/matrix_file.hpp"

namespace l1sdp::cli {
namespace {

const std::string kExample = std::string(L1SDP_DATA_DIR) + "/example1.txt";

std::string temp_path(const std::string& name) {
  return (std::filesystem::temp_directory_path() / ("l1sdp_test_" + name)).string();
}

std::string write_temp(const std::string& name, const std::string& body) {
  const std::string path = temp_path(name);
  std::ofstream(path) << body;
  return path;
}

TEST(MatrixFile, ParsesCommentsAndSymmetrizes) {
  std::istringstream in("# comment\n\n  # indented comment\n2\n1 2\n# mid\n4 3\n");
  const SymMat m = parse_matrix(in);
  EXPECT_EQ(m.order(), 2);
  EXPECT_DOUBLE_EQ(m(0, 1), 3.0);
  EXPECT_DOUBLE_EQ(m(1, 1), 3.0);
}

TEST(MatrixFile, ReportsOffendingLine) {
  auto parse = [](const std::string& text) {
    std::istringstream in(text);
    return parse_matrix(in, "m.txt");
  };
  EXPECT_THROW(parse(""), InputError);
  EXPECT_THROW(parse("2\n1 2\n"), InputError);
  EXPECT_THROW(parse("2\n1 2\n3\n"), InputError);
  EXPECT_THROW(parse("2\n1 2\n3 4\n5 6\n"), InputError);
  EXPECT_THROW(parse("2\n1 x\n3 4\n"), InputError);
  EXPECT_THROW(parse("2\n1 inf\n3 4\n"), InputError);
  EXPECT_THROW(parse("0\n"), InputError);
  EXPECT_THROW(parse("two\n"), InputError);
  try {
    parse("2\n1 2\n3 4 5\n");
    FAIL();
  } catch (const InputError& e) {
    EXPECT_NE(std::string(e.what()).find("m.txt:3"), std::string::npos) << e.what();
  }
}

TEST(MatrixFile, WriteReadRoundTrip) {
  const SymMat q = example1_matrix();
  std::stringstream buf;
  write_matrix(buf, q, "round trip");
  EXPECT_EQ((parse_matrix(buf) - q).frobenius_norm(), 0.0);
}

TEST(MatrixFile, EmbeddedExampleMatchesDataFile) {
  const SymMat from_file = read_matrix_file(kExample);
  const SymMat embedded = example1_matrix();
  ASSERT_EQ(from_file.order(), 6);
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j) EXPECT_EQ(from_file(i, j), embedded(i, j));
  // Spot checks of individual entries.
  EXPECT_EQ(embedded(0, 0), -11.0);
  EXPECT_EQ(embedded(0, 5), -2.0);
  EXPECT_EQ(embedded(3, 2), -3.0);
  EXPECT_EQ(embedded(5, 5), -6.0);
  const double diag[] = {-11, -5, -10, -8, -8, -6};
  for (int i = 0; i < 6; ++i) EXPECT_EQ(embedded(i, i), diag[i]);
}

TEST(CmdBound, DnnL1OnExample) {
  BoundCommand cmd;
  cmd.matrix_path = kExample;
  cmd.relaxation = "dnn-l1";
  cmd.format = Format::Json;
  std::ostringstream out, err;
  ASSERT_EQ(cmd_bound(cmd, out, err), kExitOk) << err.str();
  const auto j = nlohmann::json::parse(out.str());
  EXPECT_NEAR(j["value"].get<double>(), 2.0487, 1e-2);
  EXPECT_EQ(j["status"], "optimal");
}

TEST(CmdBound, NewEqWithK) {
  BoundCommand cmd;
  cmd.matrix_path = kExample;
  cmd.relaxation = "dnn-l2l1-new-eq";
  cmd.k = 5.0;
  std::ostringstream out, err;
  ASSERT_EQ(cmd_bound(cmd, out, err), kExitOk) << err.str();
  std::smatch m;
  const std::string text = out.str();
  ASSERT_TRUE(std::regex_search(text, m, std::regex("= ([-0-9.e+]+)")));
  EXPECT_NEAR(std::stod(m[1]), 7.048, 1e-2);
}

TEST(CmdBound, InputErrorsExitOne) {
  auto run = [](BoundCommand cmd, const std::string& needle) {
    std::ostringstream out, err;
    EXPECT_EQ(cmd_bound(cmd, out, err), kExitInputError);
    EXPECT_NE(err.str().find(needle), std::string::npos) << err.str();
  };
  BoundCommand base;
  base.matrix_path = kExample;

  BoundCommand missing_p = base;
  missing_p.relaxation = "dnn-lp";
  run(missing_p, "p");

  BoundCommand unknown = base;
  unknown.relaxation = "dnn-l7";
  run(unknown, "relaxation");

  BoundCommand bad_k = base;
  bad_k.relaxation = "sdp-x";
  bad_k.k = 0.5;
  run(bad_k, "k");

  BoundCommand missing_file = base;
  missing_file.relaxation = "dnn-l1";
  missing_file.matrix_path = temp_path("does_not_exist.txt");
  run(missing_file, "matrix file");

  BoundCommand malformed = base;
  malformed.relaxation = "dnn-l1";
  malformed.matrix_path = write_temp("malformed.txt", "2\n1 2\n3\n");
  run(malformed, "row 2");
}

TEST(CmdBound, IterationLimitExitsTwo) {
  BoundCommand cmd;
  cmd.matrix_path = kExample;
  cmd.relaxation = "dnn-l1";
  cmd.settings.max_iter = 5;
  std::ostringstream out, err;
  EXPECT_EQ(cmd_bound(cmd, out, err), kExitIterLimit);
  EXPECT_NE(out.str().find("iteration_limit"), std::string::npos);
}

TEST(Compare, ExampleKThree) {
  CompareOptions opts;
  opts.k = 3.0;
  const BoundReport r = compare_bounds(example1_matrix(), "example1", opts);
  EXPECT_NEAR(r.find("sdp-x")->value, 6.3104, 1e-2);
  EXPECT_NEAR(r.find("dnn-l2l1")->value, 6.0964, 1e-2);
  EXPECT_NEAR(r.find("dnn-l2l1-new-le")->value, 5.9962, 1e-2);
  EXPECT_TRUE(r.all_optimal());
  EXPECT_TRUE(r.all_asserted_hold());
  bool saw = false;
  for (const auto& o : r.orderings) {
    if (o.relation == "sdp-x >= dnn-l2l1") {
      saw = true;
      EXPECT_TRUE(o.holds);
      EXPECT_GT(o.lhs - o.rhs, 0.05);
    }
  }
  EXPECT_TRUE(saw);
}

TEST(Compare, ExampleKFiveNotCertified) {
  CompareOptions opts;
  opts.k = 5.0;
  const BoundReport r = compare_bounds(example1_matrix(), "example1", opts);
  EXPECT_NEAR(r.find("dnn-l2l1-new-eq")->value, 7.048, 1e-2);
  ASSERT_TRUE(r.new_eq_certificate);
  EXPECT_FALSE(r.new_eq_certificate->certified);
  EXPECT_LT(r.find("dnn-l2l1-new-eq")->value, r.lambda_max);
}

TEST(Compare, RejectsKOutOfRange) {
  CompareCommand cmd;
  cmd.matrix_path = kExample;
  cmd.options.k = 0.5;
  std::ostringstream out, err;
  EXPECT_EQ(cmd_compare(cmd, out, err), kExitInputError);
  EXPECT_NE(err.str().find("k ="), std::string::npos);
}

TEST(Compare, TextAndJsonCarryIdenticalValues) {
  CompareOptions opts;
  opts.k = 3.0;
  opts.p = 1.5;
  const BoundReport r = compare_bounds(example1_matrix(), "example1", opts);
  std::ostringstream text, js;
  write_report(text, r, Format::Text);
  write_report(js, r, Format::Json);
  const auto j = nlohmann::json::parse(js.str());
  const std::string t = text.str();
  for (const auto& b : j["bounds"]) {
    const std::regex line("\\n  " + b["name"].get<std::string>() + " +([^ ]+)  \\[");
    std::smatch m;
    ASSERT_TRUE(std::regex_search(t, m, line)) << b["name"];
    EXPECT_EQ(std::stod(m[1]), b["value"].get<double>()) << b["name"];
  }
  std::smatch m;
  ASSERT_TRUE(std::regex_search(t, m, std::regex("lambda_max: ([^\\n]+)")));
  EXPECT_EQ(std::stod(m[1]), j["lambda_max"].get<double>());
  for (const auto& lb : j["lower_bounds"]) {
    const std::regex line("\\n  " + lb["problem"].get<std::string>() + " +([^ ]+)  \\[");
    ASSERT_TRUE(std::regex_search(t, m, line));
    EXPECT_EQ(std::stod(m[1]), lb["value"].get<double>());
  }

  // A second run is deterministic, so separate invocations agree too.
  CompareCommand cmd;
  cmd.matrix_path = kExample;
  cmd.options = opts;
  cmd.format = Format::Json;
  std::ostringstream out2, err2;
  ASSERT_EQ(cmd_compare(cmd, out2, err2), kExitOk);
  const auto j2 = nlohmann::json::parse(out2.str());
  for (std::size_t i = 0; i < j["bounds"].size(); ++i) {
    EXPECT_EQ(j["bounds"][i]["value"], j2["bounds"][i]["value"]);
  }
}

TEST(Compare, CsvHasHeaderAndAllBounds) {
  CompareOptions opts;
  const BoundReport r = compare_bounds(example1_matrix(), "example1", opts);
  std::ostringstream csv;
  write_report(csv, r, Format::Csv);
  const std::string s = csv.str();
  EXPECT_EQ(s.rfind("name,value,status", 0), 0u);
  EXPECT_NE(s.find("\ndnn-l1,"), std::string::npos);
  EXPECT_NE(s.find("\ndnn-l1-new,"), std::string::npos);
  EXPECT_NE(s.find("\nlower_qpl1,"), std::string::npos);
}

TEST(Examples, DefaultToleranceAllPass) {
  const auto rows = run_examples(1e-2, {});
  ASSERT_EQ(rows.size(), 7u);
  for (const auto& row : rows) EXPECT_TRUE(row.pass) << row.label << " " << row.computed;
}

TEST(Examples, TinyToleranceFails) {
  ExamplesCommand cmd;
  cmd.tol = 1e-9;
  std::ostringstream out, err;
  EXPECT_EQ(cmd_examples(cmd, out, err), kExitCheckFailed);
  EXPECT_NE(out.str().find("FAIL"), std::string::npos);
}

TEST(Grid, Parsing) {
  const auto g = parse_grid("1.05:0.05:1.95");
  ASSERT_EQ(g.size(), 19u);
  EXPECT_NEAR(g.front(), 1.05, 1e-15);
  EXPECT_NEAR(g.back(), 1.95, 1e-12);
  EXPECT_THROW(parse_grid("0.5:0.1:1.5"), InputError);
  EXPECT_THROW(parse_grid("1.5:0.1:2.0"), InputError);
  EXPECT_THROW(parse_grid("1.1:0:1.5"), InputError);
  EXPECT_THROW(parse_grid("1.1:0.1"), InputError);
  EXPECT_THROW(parse_grid("a:0.1:1.5"), InputError);
}

TEST(Sweep, WritesSandwichedRows) {
  SweepCommand cmd;
  cmd.n = 10;
  cmd.seed = 0;
  cmd.grid = "1.05:0.05:1.95";
  cmd.out_path = temp_path("sweep.csv");
  std::ostringstream out, err;
  ASSERT_EQ(cmd_sweep_p(cmd, out, err), kExitOk) << err.str();

  std::ifstream in(cmd.out_path);
  std::string header;
  std::getline(in, header);
  EXPECT_EQ(header, "p,lower,dnn_lp,b1,b2");
  std::vector<std::array<double, 5>> rows;
  std::string line;
  while (std::getline(in, line)) {
    std::array<double, 5> r{};
    ASSERT_EQ(std::sscanf(line.c_str(), "%lf,%lf,%lf,%lf,%lf", &r[0], &r[1], &r[2], &r[3], &r[4]), 5);
    rows.push_back(r);
  }
  ASSERT_EQ(rows.size(), 19u);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const auto& r = rows[i];
    EXPECT_LE(r[1], r[2] + 1e-5);
    EXPECT_LE(r[2], std::min(r[3], r[4]) + 1e-5);
    EXPECT_EQ(r[4], rows[0][4]);
    if (i > 0) {
      EXPECT_GE(r[3], rows[i - 1][3]);
    }
  }
}

TEST(Sweep, RejectsBadArguments) {
  SweepCommand cmd;
  cmd.out_path = temp_path("bad.csv");
  cmd.grid = "0.9:0.1:1.5";
  std::ostringstream out, err;
  EXPECT_EQ(cmd_sweep_p(cmd, out, err), kExitInputError);
  cmd.grid = "1.1:0.1:1.5";
  cmd.n = 21;
  EXPECT_EQ(cmd_sweep_p(cmd, out, err), kExitInputError);
}

TEST(FormatDouble, RoundTrips) {
  for (double v : {0.1, 2.0487, -7.085718500228045, 1e-300, 123456789.0}) {
    EXPECT_EQ(std::stod(format_double(v)), v);
  }
  EXPECT_THROW(parse_format("xml"), InputError);
}

}  // namespace
}  // namespace l1sdp::cli
