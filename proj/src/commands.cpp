#include "l1sdp/commands.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "json.hpp"

#include "l1sdp/errors.hpp"
#include "l1sdp/matrix_file.hpp"
#include "l1sdp/oracle.hpp"
#include "l1sdp/random.hpp"

namespace l1sdp::cli {

using relax::RelaxationKind;
using relax::RelaxationTag;
using json = nlohmann::json;

namespace {

constexpr double kCheckFloor = 1e-5;

BoundEntry make_entry(const std::string& name, const relax::RelaxationResult& r) {
  BoundEntry e;
  e.name = name;
  e.value = r.value;
  e.status = conic::to_string(r.solution.status);
  e.residual_primal = r.solution.residual_primal;
  e.residual_dual = r.solution.residual_dual;
  e.residual_gap = r.solution.residual_gap;
  e.iterations = r.solution.iterations;
  e.seconds = r.seconds;
  return e;
}

BoundEntry closed_form_entry(const std::string& name, double value) {
  BoundEntry e;
  e.name = name;
  e.value = value;
  e.status = "closed_form";
  return e;
}

LowerBound make_lower(const std::string& problem, const oracle::OracleResult& r) {
  return {problem, r.value,
          std::vector<double>(r.maximizer.data(), r.maximizer.data() + r.maximizer.size()),
          oracle::to_string(r.method)};
}

json entry_json(const BoundEntry& e) {
  return {{"name", e.name},
          {"value", e.value},
          {"status", e.status},
          {"residual_primal", e.residual_primal},
          {"residual_dual", e.residual_dual},
          {"residual_gap", e.residual_gap},
          {"iterations", e.iterations},
          {"seconds", e.seconds}};
}

json report_json(const BoundReport& r) {
  json j;
  j["instance"] = r.instance;
  j["n"] = r.n;
  j["k"] = r.k ? json(*r.k) : json(nullptr);
  j["p"] = r.p ? json(*r.p) : json(nullptr);
  j["lambda_max"] = r.lambda_max;
  j["check_tol"] = r.check_tol;
  j["bounds"] = json::array();
  for (const auto& e : r.bounds) j["bounds"].push_back(entry_json(e));
  j["lower_bounds"] = json::array();
  for (const auto& lb : r.lower_bounds) {
    j["lower_bounds"].push_back(
        {{"problem", lb.problem}, {"value", lb.value}, {"witness", lb.witness}, {"method", lb.method}});
  }
  j["orderings"] = json::array();
  for (const auto& o : r.orderings) {
    j["orderings"].push_back({{"relation", o.relation},
                              {"lhs", o.lhs},
                              {"rhs", o.rhs},
                              {"holds", o.holds},
                              {"asserted", o.asserted}});
  }
  if (r.new_eq_certificate) {
    const auto& c = *r.new_eq_certificate;
    j["new_eq_certificate"] = {{"certified", c.certified},
                               {"simple_top_eigenvalue", c.simple_top_eigenvalue},
                               {"top_eigvec_l1", c.top_eigvec_l1},
                               {"eigvec_condition", c.eigvec_condition},
                               {"dnn_condition", c.dnn_condition ? json(*c.dnn_condition) : json(nullptr)}};
  }
  return j;
}

void write_text(std::ostream& out, const BoundReport& r) {
  out << "instance: " << r.instance << "\n";
  out << "n: " << r.n;
  if (r.k) out << "  k: " << format_double(*r.k);
  if (r.p) out << "  p: " << format_double(*r.p);
  out << "\n";
  out << "lambda_max: " << format_double(r.lambda_max) << "\n";
  out << "check_tol: " << format_double(r.check_tol) << "\n";
  out << "bounds:\n";
  for (const auto& e : r.bounds) {
    out << "  " << std::left << std::setw(18) << e.name << " " << format_double(e.value) << "  ["
        << e.status;
    if (e.status != "closed_form") {
      out << " it=" << e.iterations << " rp=" << format_double(e.residual_primal)
          << " rd=" << format_double(e.residual_dual) << " gap=" << format_double(e.residual_gap)
          << " t=" << format_double(e.seconds) << "s";
    }
    out << "]\n";
  }
  out << "lower bounds:\n";
  for (const auto& lb : r.lower_bounds) {
    out << "  " << std::left << std::setw(18) << lb.problem << " " << format_double(lb.value)
        << "  [" << lb.method << "] x =";
    for (double v : lb.witness) out << " " << format_double(v);
    out << "\n";
  }
  out << "orderings:\n";
  for (const auto& o : r.orderings) {
    out << "  " << (o.asserted ? (o.holds ? "PASS " : "FAIL ") : (o.holds ? "seen " : "not  "))
        << o.relation << "  (" << format_double(o.lhs) << " vs " << format_double(o.rhs) << ")\n";
  }
  if (r.new_eq_certificate) {
    const auto& c = *r.new_eq_certificate;
    out << "dnn-l2l1-new-eq upper-bound certificate: " << (c.certified ? "CERTIFIED" : "NOT certified")
        << "  (eigvec l1 = " << format_double(c.top_eigvec_l1)
        << (c.simple_top_eigenvalue ? "" : ", top eigenvalue not simple")
        << ", eigvec condition " << (c.eigvec_condition ? "holds" : "fails");
    if (c.dnn_condition) out << ", dnn-l2l1 < lambda_max " << (*c.dnn_condition ? "holds" : "fails");
    out << ")\n";
  }
}

void write_csv(std::ostream& out, const BoundReport& r) {
  out << "name,value,status,residual_primal,residual_dual,residual_gap,iterations,seconds\n";
  out << "lambda_max," << format_double(r.lambda_max) << ",closed_form,0,0,0,0,0\n";
  for (const auto& e : r.bounds) {
    out << e.name << "," << format_double(e.value) << "," << e.status << ","
        << format_double(e.residual_primal) << "," << format_double(e.residual_dual) << ","
        << format_double(e.residual_gap) << "," << e.iterations << "," << format_double(e.seconds)
        << "\n";
  }
  for (const auto& lb : r.lower_bounds) {
    out << "lower_" << lb.problem << "," << format_double(lb.value) << "," << lb.method
        << ",0,0,0,0,0\n";
  }
}

double property_tolerance(const BoundReport& r) {
  double res = 0.0;
  double scale = 1.0 + std::abs(r.lambda_max);
  for (const auto& e : r.bounds) {
    res = std::max({res, e.residual_primal, e.residual_dual, e.residual_gap});
    scale = std::max(scale, 1.0 + std::abs(e.value));
  }
  return std::max(kCheckFloor, 2.0 * res * scale);
}

void add_ge(BoundReport& r, const std::string& lhs_name, double lhs, const std::string& rhs_name,
            double rhs, bool asserted = true) {
  r.orderings.push_back(
      {lhs_name + " >= " + rhs_name, lhs, rhs, lhs >= rhs - r.check_tol, asserted});
}

void add_eq(BoundReport& r, const std::string& lhs_name, double lhs, const std::string& rhs_name,
            double rhs) {
  r.orderings.push_back(
      {lhs_name + " == " + rhs_name, lhs, rhs, std::abs(lhs - rhs) <= r.check_tol, true});
}

int report_exit_code(const BoundReport& r) {
  if (!r.all_optimal()) return kExitIterLimit;
  if (!r.all_asserted_hold()) return kExitCheckFailed;
  return kExitOk;
}

void write_examples(std::ostream& out, const std::vector<ExampleRow>& rows, Format format) {
  if (format == Format::Json) {
    json j = json::array();
    for (const auto& row : rows) {
      j.push_back({{"label", row.label},
                   {"computed", row.computed},
                   {"expected", row.expected},
                   {"tolerance", row.tolerance},
                   {"pass", row.pass},
                   {"note", row.note}});
    }
    out << j.dump(2) << "\n";
    return;
  }
  if (format == Format::Csv) {
    out << "label,computed,expected,tolerance,pass\n";
    for (const auto& row : rows) {
      out << '"' << row.label << "\"," << format_double(row.computed) << ","
          << format_double(row.expected) << "," << format_double(row.tolerance) << ","
          << (row.pass ? "pass" : "fail") << "\n";
    }
    return;
  }
  for (const auto& row : rows) {
    out << (row.pass ? "PASS  " : "FAIL  ") << std::left << std::setw(44) << row.label
        << " computed " << std::setw(12) << std::fixed << std::setprecision(6) << row.computed
        << " expected " << std::setw(8) << std::defaultfloat << row.expected << " tol "
        << row.tolerance;
    if (!row.note.empty()) out << "  " << row.note;
    out << "\n";
  }
}

}  // namespace

std::string format_double(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

Format parse_format(const std::string& text) {
  if (text == "text") return Format::Text;
  if (text == "json") return Format::Json;
  if (text == "csv") return Format::Csv;
  throw InputError("format: unknown value '" + text + "' (expected text, json or csv)");
}

const BoundEntry* BoundReport::find(const std::string& name) const {
  for (const auto& e : bounds)
    if (e.name == name) return &e;
  return nullptr;
}

bool BoundReport::all_optimal() const {
  return std::all_of(bounds.begin(), bounds.end(), [](const BoundEntry& e) {
    return e.status == "optimal" || e.status == "closed_form";
  });
}

bool BoundReport::all_asserted_hold() const {
  return std::all_of(orderings.begin(), orderings.end(),
                     [](const OrderingCheck& o) { return !o.asserted || o.holds; });
}

BoundReport compare_bounds(const SymMat& q, const std::string& instance,
                           const CompareOptions& opts) {
  const int n = q.order();
  if (opts.k) RelaxationKind{RelaxationTag::DnnL2L1, opts.k, std::nullopt}.validate(n);
  if (opts.p) RelaxationKind{RelaxationTag::DnnLp, std::nullopt, opts.p}.validate(n);

  BoundReport r;
  r.instance = instance;
  r.n = n;
  r.k = opts.k;
  r.p = opts.p;
  r.lambda_max = lambda_max(q);

  auto run = [&](RelaxationTag tag) {
    const RelaxationKind kind{tag, relax::needs_k(tag) ? opts.k : std::nullopt,
                              relax::needs_p(tag) ? opts.p : std::nullopt};
    relax::RelaxationResult res = relax::solve(kind, q, opts.settings);
    r.bounds.push_back(make_entry(std::string(relax::name(tag)), res));
    return res;
  };

  const auto dnn_l1 = run(RelaxationTag::DnnL1);
  const auto dnn_l1_new = run(RelaxationTag::DnnL1New);
  const oracle::OracleResult qpl1 = n <= oracle::kMaxExactOrder
                                        ? oracle::qpl1_exact_small(q)
                                        : oracle::qpl1_rounding(q, dnn_l1_new.matrix);
  r.lower_bounds.push_back(make_lower("qpl1", qpl1));

  std::optional<relax::RelaxationResult> sdp_x, dnn_l2l1, new_le, new_eq, dnn_lp;
  std::optional<oracle::OracleResult> qpl2l1, qplp;
  double b1 = 0.0;
  double b2 = 0.0;
  if (opts.k) {
    sdp_x = run(RelaxationTag::SdpX);
    dnn_l2l1 = run(RelaxationTag::DnnL2L1);
    new_le = run(RelaxationTag::DnnL2L1NewLe);
    new_eq = run(RelaxationTag::DnnL2L1NewEq);
    qpl2l1 = oracle::qpl2l1_heuristic(q, *opts.k, opts.restarts, opts.seed);
    r.lower_bounds.push_back(make_lower("qpl2l1", *qpl2l1));
  }
  if (opts.p) {
    b2 = relax::bound_b2(q);
    b1 = relax::holder_factor(n, *opts.p) * dnn_l1.value;
    r.bounds.push_back(closed_form_entry("b2", b2));
    BoundEntry b1_entry = make_entry("b1", dnn_l1);
    b1_entry.value = b1;
    r.bounds.push_back(b1_entry);
    dnn_lp = run(RelaxationTag::DnnLp);
    qplp = oracle::qplp_lower_bound(q, *opts.p, dnn_lp->matrix);
    r.lower_bounds.push_back(make_lower("qplp", *qplp));
  }

  r.check_tol = property_tolerance(r);

  add_ge(r, "dnn-l1", dnn_l1.value, "dnn-l1-new", dnn_l1_new.value);
  add_ge(r, "dnn-l1-new", dnn_l1_new.value, "qpl1 lower", qpl1.value);
  add_ge(r, "dnn-l1-new", dnn_l1_new.value, "0", 0.0);
  bool diag_nonneg = true;
  for (int i = 0; i < n; ++i) diag_nonneg = diag_nonneg && q(i, i) >= 0.0;
  if (diag_nonneg) add_eq(r, "dnn-l1", dnn_l1.value, "dnn-l1-new", dnn_l1_new.value);
  if (r.lambda_max <= 0.0) {
    add_eq(r, "dnn-l1", dnn_l1.value, "0", 0.0);
    add_eq(r, "dnn-l1-new", dnn_l1_new.value, "0", 0.0);
  }

  if (opts.k) {
    add_ge(r, "sdp-x", sdp_x->value, "dnn-l2l1", dnn_l2l1->value);
    add_ge(r, "lambda_max", r.lambda_max, "dnn-l2l1", dnn_l2l1->value);
    add_ge(r, "lambda_max", r.lambda_max, "dnn-l2l1-new-le", new_le->value);
    add_ge(r, "dnn-l2l1", dnn_l2l1->value, "dnn-l2l1-new-eq", new_eq->value);
    add_ge(r, "sdp-x", sdp_x->value, "qpl2l1 lower", qpl2l1->value);
    add_ge(r, "dnn-l2l1", dnn_l2l1->value, "qpl2l1 lower", qpl2l1->value);
    add_ge(r, "dnn-l2l1-new-le", new_le->value, "qpl2l1 lower", qpl2l1->value);
    add_ge(r, "dnn-l2l1", dnn_l2l1->value, "dnn-l2l1-new-le", new_le->value, false);
    r.new_eq_certificate = relax::certify_new_eq(q, *opts.k, dnn_l2l1->value, opts.settings.tol);
    if (r.new_eq_certificate->certified) {
      add_ge(r, "dnn-l2l1-new-eq", new_eq->value, "qpl2l1 lower", qpl2l1->value);
    }
  }
  if (opts.p) {
    add_ge(r, "b2", b2, "dnn-lp", dnn_lp->value);
    add_ge(r, "b1", b1, "dnn-lp", dnn_lp->value);
    add_ge(r, "dnn-lp", dnn_lp->value, "qplp lower", qplp->value);
  }
  return r;
}

void write_report(std::ostream& out, const BoundReport& report, Format format) {
  switch (format) {
    case Format::Text: write_text(out, report); break;
    case Format::Json: out << report_json(report).dump(2) << "\n"; break;
    case Format::Csv: write_csv(out, report); break;
  }
}

int cmd_bound(const BoundCommand& cmd, std::ostream& out, std::ostream& err) {
  try {
    const auto tag = relax::parse_tag(cmd.relaxation);
    if (!tag) {
      throw InputError("relaxation: unknown name '" + cmd.relaxation +
                       "' (expected dnn-l1, dnn-l1-new, sdp-x, dnn-l2l1, dnn-l2l1-new-le, "
                       "dnn-l2l1-new-eq or dnn-lp)");
    }
    if (cmd.format == Format::Csv) throw InputError("format: bound supports text or json");
    const SymMat q = read_matrix_file(cmd.matrix_path);
    const RelaxationKind kind{*tag, cmd.k, cmd.p};
    try {
      kind.validate(q.order());
    } catch (const InputError& e) {
      throw InputError(std::string(relax::needs_p(*tag) ? "p" : "k") + ": " + e.what());
    }
    const relax::RelaxationResult res = relax::solve(kind, q, cmd.settings);
    const BoundEntry e = make_entry(cmd.relaxation, res);
    if (cmd.format == Format::Json) {
      json j = entry_json(e);
      j["matrix"] = cmd.matrix_path;
      j["n"] = q.order();
      j["k"] = cmd.k ? json(*cmd.k) : json(nullptr);
      j["p"] = cmd.p ? json(*cmd.p) : json(nullptr);
      j["tol"] = cmd.settings.tol;
      out << j.dump(2) << "\n";
    } else {
      out << e.name << " = " << format_double(e.value) << "\n"
          << "status: " << e.status << "  iterations: " << e.iterations << "\n"
          << "residuals: primal " << format_double(e.residual_primal) << "  dual "
          << format_double(e.residual_dual) << "  gap " << format_double(e.residual_gap) << "\n"
          << "time: " << format_double(e.seconds) << " s\n";
    }
    if (res.solution.status == conic::SolveStatus::IterLimit) {
      err << "warning: iteration limit reached before tol " << format_double(cmd.settings.tol)
          << "\n";
      return kExitIterLimit;
    }
    return kExitOk;
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const NumericalError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  }
}

int cmd_compare(const CompareCommand& cmd, std::ostream& out, std::ostream& err) {
  try {
    const SymMat q = read_matrix_file(cmd.matrix_path);
    const BoundReport report = compare_bounds(q, cmd.matrix_path, cmd.options);
    write_report(out, report, cmd.format);
    return report_exit_code(report);
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const NumericalError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  }
}

std::vector<ExampleRow> run_examples(double tol, const conic::SolverSettings& settings) {
  const SymMat q = example1_matrix();
  std::vector<ExampleRow> rows;

  auto value_row = [&](const std::string& label, RelaxationTag tag, std::optional<double> k,
                       double expected) {
    ExampleRow row;
    row.label = label;
    row.expected = expected;
    row.tolerance = tol;
    const relax::RelaxationResult res = relax::solve({tag, k, std::nullopt}, q, settings);
    row.computed = res.value;
    const bool optimal = res.solution.status == conic::SolveStatus::Optimal;
    row.pass = optimal && std::abs(res.value - expected) <= tol;
    if (!optimal) {
      row.note = conic::to_string(res.solution.status) + " rp=" +
                 format_double(res.solution.residual_primal) +
                 " rd=" + format_double(res.solution.residual_dual) +
                 " gap=" + format_double(res.solution.residual_gap);
    }
    rows.push_back(row);
    return rows.size() - 1;
  };

  value_row("l1: dnn-l1", RelaxationTag::DnnL1, std::nullopt, 2.0487);
  value_row("l1: dnn-l1-new", RelaxationTag::DnnL1New, std::nullopt, 2.0186);
  value_row("k=3: sdp-x", RelaxationTag::SdpX, 3.0, 6.3104);
  value_row("k=3: dnn-l2l1", RelaxationTag::DnnL2L1, 3.0, 6.0964);
  value_row("k=3: dnn-l2l1-new-le", RelaxationTag::DnnL2L1NewLe, 3.0, 5.9962);
  const std::size_t eq_row =
      value_row("k=5: dnn-l2l1-new-eq", RelaxationTag::DnnL2L1NewEq, 5.0, 7.048);

  ExampleRow lmax;
  lmax.label = "lambda_max(Q)";
  lmax.expected = 7.0857;
  lmax.tolerance = std::min(tol, 1e-3);
  lmax.computed = lambda_max(q);
  lmax.pass = std::abs(lmax.computed - lmax.expected) <= lmax.tolerance;
  rows.push_back(lmax);

  ExampleRow& eq = rows[eq_row];
  if (!(eq.computed < lmax.computed)) {
    eq.pass = false;
    eq.note += (eq.note.empty() ? "" : "; ") + std::string("not strictly below lambda_max");
  } else {
    eq.note += (eq.note.empty() ? "" : "; ") + std::string("below lambda_max by ") +
               format_double(lmax.computed - eq.computed);
  }
  return rows;
}

int cmd_examples(const ExamplesCommand& cmd, std::ostream& out, std::ostream& err) {
  try {
    if (!(cmd.tol > 0.0)) throw InputError("tol: must be positive");
    const auto rows = run_examples(cmd.tol, cmd.settings);
    write_examples(out, rows, cmd.format);
    const bool ok = std::all_of(rows.begin(), rows.end(), [](const ExampleRow& r) { return r.pass; });
    return ok ? kExitOk : kExitCheckFailed;
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const NumericalError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  }
}

std::vector<double> parse_grid(const std::string& spec) {
  std::array<double, 3> parts{};
  std::size_t start = 0;
  for (int i = 0; i < 3; ++i) {
    const std::size_t colon = spec.find(':', start);
    const bool last = i == 2;
    if (last != (colon == std::string::npos)) {
      throw InputError("grid: expected START:STEP:END, got '" + spec + "'");
    }
    const std::string tok = spec.substr(start, last ? std::string::npos : colon - start);
    std::size_t used = 0;
    try {
      parts[static_cast<std::size_t>(i)] = std::stod(tok, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (tok.empty() || used != tok.size()) {
      throw InputError("grid: '" + tok + "' is not a number");
    }
    start = colon + 1;
  }
  const auto [first, step, last] = parts;
  if (!(step > 0.0)) throw InputError("grid: STEP must be positive");
  if (last < first) throw InputError("grid: END must not be below START");
  const auto count = static_cast<long>(std::floor((last - first) / step + 1e-9)) + 1;
  if (count > 100000) throw InputError("grid: too many points");
  std::vector<double> grid;
  for (long i = 0; i < count; ++i) {
    const double p = first + static_cast<double>(i) * step;
    if (!(p > 1.0 && p < 2.0)) {
      throw InputError("grid: p = " + format_double(p) + " is outside (1, 2)");
    }
    grid.push_back(p);
  }
  return grid;
}

std::vector<SweepRow> sweep_p(const SymMat& q, const std::vector<double>& grid,
                              const conic::SolverSettings& settings) {
  const int n = q.order();
  const double b2 = relax::bound_b2(q);
  const relax::RelaxationResult dnn_l1 =
      relax::solve({RelaxationTag::DnnL1, std::nullopt, std::nullopt}, q, settings);
  std::vector<SweepRow> rows;
  for (double p : grid) {
    SweepRow row;
    row.p = p;
    row.b2 = b2;
    row.b1 = relax::holder_factor(n, p) * dnn_l1.value;
    const relax::RelaxationResult lp =
        relax::solve({RelaxationTag::DnnLp, std::nullopt, p}, q, settings);
    row.dnn_lp = lp.value;
    row.lower = oracle::qplp_lower_bound(q, p, lp.matrix).value;
    row.optimal = dnn_l1.solution.status == conic::SolveStatus::Optimal &&
                  lp.solution.status == conic::SolveStatus::Optimal;
    const double tol = std::max(kCheckFloor, 2.0 * settings.tol * (1.0 + std::abs(row.b2)));
    row.sandwich = row.lower <= row.dnn_lp + tol && row.dnn_lp <= std::min(row.b1, row.b2) + tol;
    rows.push_back(row);
  }
  return rows;
}

void write_sweep_csv(std::ostream& out, const std::vector<SweepRow>& rows) {
  out << "p,lower,dnn_lp,b1,b2\n";
  out << std::setprecision(12);
  for (const auto& r : rows) {
    out << r.p << "," << r.lower << "," << r.dnn_lp << "," << r.b1 << "," << r.b2 << "\n";
  }
}

SymMat sweep_instance(int n, std::uint64_t seed) {
  SplitMix64 rng(seed);
  return random_symmetrized(n, 0.0, 1.0, rng);
}

int cmd_sweep_p(const SweepCommand& cmd, std::ostream& out, std::ostream& err) {
  try {
    if (cmd.n < 1 || cmd.n > 20) throw InputError("n: must be in [1, 20]");
    if (cmd.out_path.empty()) throw InputError("out: output path required");
    const auto grid = parse_grid(cmd.grid);
    const SymMat q = sweep_instance(cmd.n, cmd.seed);
    const auto rows = sweep_p(q, grid, cmd.settings);

    std::ofstream file(cmd.out_path);
    if (!file) throw InputError("out: cannot write '" + cmd.out_path + "'");
    write_sweep_csv(file, rows);
    file.close();

    int code = kExitOk;
    for (const auto& r : rows) {
      if (!r.optimal) code = std::max<int>(code, kExitIterLimit);
      if (!r.sandwich) {
        err << "sandwich violated at p = " << format_double(r.p) << "\n";
        code = kExitCheckFailed;
      }
    }
    out << "wrote " << rows.size() << " rows to " << cmd.out_path << " (n = " << cmd.n
        << ", seed = " << cmd.seed << ")\n";
    return code;
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const NumericalError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  }
}

}  // namespace l1sdp::cli
