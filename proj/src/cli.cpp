#include "stovar/cli.hpp"

#include <fstream>
#include <iomanip>
#include <map>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "stovar/analysis.hpp"
#include "stovar/core.hpp"
#include "stovar/io.hpp"
#include "stovar/nonneg.hpp"

namespace stovar::cli {

namespace {

using json = nlohmann::json;

template <Scalar T>
json scalar_json(const T& x) {
  return format_scalar(x);
}

template <Scalar T>
json valued_json(const T& x) {
  return json{{"value", format_scalar(x)}, {"decimal", to_double(x)}};
}

template <Scalar T>
json vector_json(const Vector<T>& v) {
  json out = json::array();
  for (const auto& x : v.entries()) out.push_back(format_scalar(x));
  return out;
}

template <Scalar T>
json matrix_json(const Matrix<T>& m) {
  json out = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(format_scalar(m(i, j)));
    out.push_back(std::move(row));
  }
  return out;
}

template <Scalar T>
json type_json(const TypeReport<T>& t) {
  return json{{"has_type", t.has_type},
              {"value", format_scalar(t.type_value)},
              {"max_deviation", format_scalar(t.max_deviation)}};
}

// Column pairs are reported 1-based.
template <Scalar T>
json variation_json(const VariationReport<T>& v) {
  json out = valued_json(v.value);
  out["columns"] = json::array({v.arg_j + 1, v.arg_k + 1});
  return out;
}

json input_json(const AnyMatrix& any) {
  return std::visit(
      [&](const auto& m) { return json{{"rows", m.rows()}, {"cols", m.cols()}, {"domain", domain_name(any)}}; },
      any);
}

template <Scalar T>
std::string verdict_string(const ConvergenceAnalysis<T>& a) {
  if (a.verdict == Verdict::ConvergesTo) return "ConvergesTo";
  return "NoContractionFoundUpTo(" + std::to_string(a.p_max) + ")";
}

template <Scalar T>
json analysis_json(const AnyMatrix& any, const ConvergenceAnalysis<T>& a) {
  json out{{"schema", kSchema}, {"command", "analyze"}, {"input", input_json(any)}};
  out["type"] = type_json(a.type);
  out["variation"] = variation_json(a.variation_of_m);
  json per_power = json::array();
  for (const auto& v : a.variation_per_power) per_power.push_back(scalar_json(v));
  out["variation_per_power"] = per_power;
  out["contraction_power"] = a.contraction_power ? json(*a.contraction_power) : json(nullptr);
  out["variation_at_p"] = a.variation_at_p ? valued_json(*a.variation_at_p) : json(nullptr);
  out["stationary"] = a.stationary ? vector_json(*a.stationary) : json(nullptr);
  if (a.stationary) {
    json decimals = json::array();
    for (const auto& x : a.stationary->entries()) decimals.push_back(to_double(x));
    out["stationary_decimal"] = decimals;
  } else {
    out["stationary_decimal"] = nullptr;
  }
  out["projection"] = a.projection ? matrix_json(*a.projection) : json(nullptr);
  json table = json::array();
  for (const auto& row : a.decay_table) {
    table.push_back(json{{"k", row.k},
                         {"bound", format_scalar(row.bound)},
                         {"bound_decimal", to_double(row.bound)},
                         {"variation", format_scalar(row.actual)},
                         {"variation_decimal", to_double(row.actual)}});
  }
  out["decay_table"] = table;
  out["verdict"] = verdict_string(a);
  return out;
}

std::string decimal(double x) {
  std::ostringstream s;
  s << std::setprecision(6) << x;
  return s.str();
}

// Exact strings longer than this are shown as decimals in the summary.
constexpr std::size_t kMaxInlineExact = 24;

template <Scalar T>
std::string show(const T& x) {
  std::string exact = format_scalar(x);
  if constexpr (is_exact_v<T>) {
    if (exact.size() > kMaxInlineExact) return "~" + decimal(to_double(x));
  }
  return exact;
}

template <Scalar T>
std::string show(const Vector<T>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + show(v[i]);
  return s + ")";
}

template <Scalar T>
void print_summary(std::ostream& out, const Matrix<T>& m, const char* domain, const ConvergenceAnalysis<T>& a) {
  out << "matrix: " << m.rows() << "x" << m.cols() << " (" << domain << ")\n";
  out << "type: " << (a.type.has_type ? show(a.type.type_value) : std::string("none")) << "\n";
  out << "variation: " << show(a.variation_of_m.value) << " (columns " << a.variation_of_m.arg_j + 1 << ", "
      << a.variation_of_m.arg_k + 1 << ")\n";
  out << "variation of powers:";
  for (std::size_t k = 0; k < a.variation_per_power.size(); ++k)
    out << (k ? ", " : " ") << "k=" << k + 1 << ": " << show(a.variation_per_power[k]);
  out << "\n";
  if (a.verdict != Verdict::ConvergesTo) {
    out << "verdict: inconclusive, no power up to " << a.p_max << " has variation below 1\n";
    return;
  }
  out << "contraction power: " << *a.contraction_power << " (variation " << show(*a.variation_at_p) << ")\n";
  out << "stationary vector: " << show(*a.stationary) << "\n";
  out << "limit projection:\n";
  for (std::size_t i = 0; i < a.projection->rows(); ++i) {
    out << " ";
    for (std::size_t j = 0; j < a.projection->cols(); ++j) out << " " << show((*a.projection)(i, j));
    out << "\n";
  }
  out << "decay bound (k, bound, var(M^k)):\n";
  for (const auto& row : a.decay_table)
    out << "  " << row.k << "  " << decimal(to_double(row.bound)) << "  " << decimal(to_double(row.actual)) << "\n";
  out << "verdict: powers converge to the limit projection\n";
}

struct MatrixInput {
  std::string path;
  std::string format = "auto";
  std::string domain = "auto";
};

void add_matrix_options(CLI::App* sub, MatrixInput& input) {
  sub->add_option("path", input.path, "Matrix file (.csv or .json)")->required();
  sub->add_option("--format", input.format, "Input format")
      ->check(CLI::IsMember({"auto", "csv", "json"}))
      ->capture_default_str();
  sub->add_option("--domain", input.domain, "Scalar domain")
      ->check(CLI::IsMember({"auto", "exact", "float"}))
      ->capture_default_str();
}

AnyMatrix load(const MatrixInput& input) {
  std::optional<Format> format;
  if (input.format == "csv") format = Format::Csv;
  if (input.format == "json") format = Format::Json;
  Domain domain = Domain::Auto;
  if (input.domain == "exact") domain = Domain::Exact;
  if (input.domain == "float") domain = Domain::Float;
  return read_matrix(input.path, format, domain);
}

int cmd_analyze(const MatrixInput& input, const AnalysisOptions& options, bool as_json, std::ostream& out) {
  const AnyMatrix any = load(input);
  return std::visit(
      [&](const auto& m) {
        const auto result = analyze(m, options);
        if (as_json) {
          out << analysis_json(any, result).dump(2) << "\n";
        } else {
          print_summary(out, m, domain_name(any), result);
        }
        return result.verdict == Verdict::ConvergesTo ? kOk : kInconclusive;
      },
      any);
}

int cmd_variation(const MatrixInput& input, double tol, bool as_json, std::ostream& out) {
  const AnyMatrix any = load(input);
  return std::visit(
      [&](const auto& m) {
        const auto var = variation(m);
        const auto type = type_of(m, Tolerance{tol});
        if (as_json) {
          json doc{{"schema", kSchema}, {"command", "variation"}, {"input", input_json(any)}};
          doc["variation"] = variation_json(var);
          doc["type"] = type_json(type);
          out << doc.dump(2) << "\n";
        } else {
          out << "variation: " << show(var.value) << " (columns " << var.arg_j + 1 << ", " << var.arg_k + 1
              << ")\n";
          out << "type: " << (type.has_type ? show(type.type_value) : std::string("none")) << "\n";
        }
        return kOk;
      },
      any);
}

SignPattern read_pattern(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::ParseError, "cannot open '" + path + "'");
  std::vector<std::string> rows;
  std::string line;
  while (std::getline(in, line)) {
    std::string row;
    for (char ch : line)
      if (ch != ',' && ch != ' ' && ch != '\t' && ch != '\r') row += ch;
    if (!row.empty()) rows.push_back(row);
  }
  return SignPattern::parse(rows);
}

int cmd_pattern(const std::string& path, unsigned k_max, bool as_json, std::ostream& out) {
  const SignPattern p = read_pattern(path);
  const auto first = first_positive_power(p, k_max);
  const bool overlap = pairwise_positive_overlap(p);
  const unsigned shown = first ? *first : k_max;

  std::vector<SignPattern> powers{p};
  for (unsigned k = 2; k <= shown; ++k) powers.push_back(pattern_product(powers.back(), p));

  if (as_json) {
    json doc{{"schema", kSchema}, {"command", "pattern"}};
    doc["powers"] = json::array();
    for (const auto& q : powers) doc["powers"].push_back(q.to_strings());
    doc["first_positive_power"] = first ? json(*first) : json(nullptr);
    doc["k_max"] = k_max;
    doc["pairwise_overlap"] = overlap;
    out << doc.dump(2) << "\n";
    return kOk;
  }
  for (std::size_t k = 0; k < powers.size(); ++k) {
    out << "power " << k + 1 << ":\n";
    for (const auto& row : powers[k].to_strings()) out << "  " << row << "\n";
  }
  out << "first positive power: " << (first ? std::to_string(*first) : "none up to " + std::to_string(k_max))
      << "\n";
  out << "pairwise overlap: " << (overlap ? "true" : "false") << "\n";
  return kOk;
}

template <Scalar T>
int print_classification(const T& a, const T& b, bool as_json, std::ostream& out) {
  const auto cls = classify_2x2(a, b);
  if (as_json) {
    json doc{{"schema", kSchema}, {"command", "classify2x2"}};
    doc["case"] = to_string(cls.kind);
    doc["a"] = format_scalar(a);
    doc["b"] = format_scalar(b);
    doc["c"] = format_scalar(cls.c);
    doc["eigenvalues"] = json::array({format_scalar(cls.eigenvalues.first), format_scalar(cls.eigenvalues.second)});
    doc["variation"] = valued_json(cls.variation);
    doc["stationary"] = cls.stationary ? vector_json(*cls.stationary) : json(nullptr);
    out << doc.dump(2) << "\n";
    return kOk;
  }
  out << to_string(cls.kind) << "\n";
  out << "c: " << show(cls.c) << "\n";
  out << "eigenvalues: " << show(cls.eigenvalues.first) << ", " << show(cls.eigenvalues.second) << "\n";
  out << "variation: " << show(cls.variation) << "\n";
  if (cls.stationary) out << "stationary vector: " << show(*cls.stationary) << "\n";
  return kOk;
}

int cmd_classify(const std::string& a, const std::string& b, const std::string& domain, bool as_json,
                 std::ostream& out) {
  if (domain == "float") {
    auto to_float = [](const std::string& s) {
      return looks_like_fraction(s) ? parse_rational(s).convert_to<double>() : parse_double(s);
    };
    return print_classification(to_float(a), to_float(b), as_json, out);
  }
  return print_classification(parse_rational(a), parse_rational(b), as_json, out);
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Convergence of powers of constant-column-sum matrices via the column variation"};
  app.require_subcommand(1);

  MatrixInput analyze_input;
  AnalysisOptions options;
  double analyze_tol = kDefaultTolerance;
  bool analyze_json = false;
  auto* analyze_cmd = app.add_subcommand("analyze", "Search for a contraction power, E, P and decay bounds");
  add_matrix_options(analyze_cmd, analyze_input);
  analyze_cmd->add_option("--pmax", options.p_max, "Largest power searched")->capture_default_str();
  analyze_cmd->add_option("--tol", analyze_tol, "Float-domain relative tolerance")->capture_default_str();
  analyze_cmd->add_option("--k-report", options.k_report, "Largest k in the decay table")->capture_default_str();
  analyze_cmd->add_flag("--json", analyze_json, "Emit only the JSON report");

  MatrixInput variation_input;
  double variation_tol = kDefaultTolerance;
  bool variation_json_flag = false;
  auto* variation_cmd = app.add_subcommand("variation", "Column variation and type of a matrix");
  add_matrix_options(variation_cmd, variation_input);
  variation_cmd->add_option("--tol", variation_tol, "Float-domain relative tolerance")->capture_default_str();
  variation_cmd->add_flag("--json", variation_json_flag, "Emit JSON");

  std::string pattern_path;
  unsigned k_max = 32;
  bool pattern_json = false;
  auto* pattern_cmd = app.add_subcommand("pattern", "Powers of a 0/+ sign pattern");
  pattern_cmd->add_option("path", pattern_path, "Pattern file, entries 0 or +")->required();
  pattern_cmd->add_option("--kmax", k_max, "Largest power searched")->capture_default_str();
  pattern_cmd->add_flag("--json", pattern_json, "Emit JSON");

  std::string a_text;
  std::string b_text;
  std::string classify_domain = "exact";
  bool classify_json = false;
  auto* classify_cmd = app.add_subcommand("classify2x2", "Classify [[1-a, b], [a, 1-b]]");
  classify_cmd->add_option("a", a_text)->required();
  classify_cmd->add_option("b", b_text)->required();
  classify_cmd->add_option("--domain", classify_domain)
      ->check(CLI::IsMember({"exact", "float"}))
      ->capture_default_str();
  classify_cmd->add_flag("--json", classify_json, "Emit JSON");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInputError;
  }

  try {
    if (*analyze_cmd) {
      options.tol = Tolerance{analyze_tol};
      return cmd_analyze(analyze_input, options, analyze_json, out);
    }
    if (*variation_cmd) return cmd_variation(variation_input, variation_tol, variation_json_flag, out);
    if (*pattern_cmd) return cmd_pattern(pattern_path, k_max, pattern_json, out);
    if (*classify_cmd) return cmd_classify(a_text, b_text, classify_domain, classify_json, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    switch (e.code()) {
      case ErrorCode::ParseError:
      case ErrorCode::EmptyMatrix:
        return kInputError;
      default:
        return kPreconditionFailed;
    }
  }
  return kInputError;
}

}  // namespace stovar::cli
