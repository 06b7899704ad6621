#include "stovar/io.hpp"

#include <fstream>
#include <sstream>
#include <vector>

#include <json.hpp>

namespace stovar {

namespace {

using json = nlohmann::json;

[[noreturn]] void parse_error(const std::string& what) { throw Error(ErrorCode::ParseError, what); }

struct Cells {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<std::string> text;  // row-major literals
};

AnyMatrix build(const Cells& cells, Domain domain) {
  if (cells.rows == 0 || cells.cols == 0) parse_error("empty matrix");
  bool exact = domain == Domain::Exact;
  if (domain == Domain::Auto)
    for (const auto& t : cells.text) exact = exact || looks_like_fraction(t);

  if (exact) {
    std::vector<Rational> data;
    data.reserve(cells.text.size());
    for (const auto& t : cells.text) data.push_back(parse_rational(t));
    return Matrix<Rational>(cells.rows, cells.cols, std::move(data));
  }
  std::vector<double> data;
  data.reserve(cells.text.size());
  for (const auto& t : cells.text) {
    data.push_back(looks_like_fraction(t) ? parse_rational(t).convert_to<double>() : parse_double(t));
  }
  return Matrix<double>(cells.rows, cells.cols, std::move(data));
}

Cells split_csv(std::string_view text) {
  Cells cells;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    std::vector<std::string> row;
    std::istringstream fields(line);
    std::string field;
    while (std::getline(fields, field, ',')) row.push_back(field);
    if (!line.empty() && line.back() == ',') row.emplace_back();
    if (cells.rows == 0) {
      cells.cols = row.size();
    } else if (row.size() != cells.cols) {
      parse_error("ragged CSV: row " + std::to_string(cells.rows + 1) + " has " + std::to_string(row.size()) +
                  " entries, expected " + std::to_string(cells.cols));
    }
    for (auto& f : row) cells.text.push_back(std::move(f));
    ++cells.rows;
  }
  return cells;
}

// DOM builder that keeps floating-point literals as their source text so
// they can be converted to rationals without rounding.
class LiteralDomParser : public nlohmann::detail::json_sax_dom_parser<json> {
 public:
  using json_sax_dom_parser::json_sax_dom_parser;

  bool number_float(number_float_t /*unused*/, const string_t& literal) {
    string_t copy = literal;
    return json_sax_dom_parser::string(copy);
  }
};

std::size_t read_dimension(const json& doc, const char* key) {
  if (!doc.contains(key) || !doc[key].is_number_integer() || doc[key].get<long long>() <= 0)
    parse_error(std::string("JSON field '") + key + "' must be a positive integer");
  return doc[key].get<std::size_t>();
}

Cells split_json(std::string_view text) {
  json doc;
  LiteralDomParser handler(doc, false);
  if (!json::sax_parse(text, &handler) || doc.is_discarded()) parse_error("malformed JSON");
  if (!doc.is_object()) parse_error("JSON matrix must be an object");

  Cells cells;
  cells.rows = read_dimension(doc, "rows");
  cells.cols = read_dimension(doc, "cols");
  if (!doc.contains("data") || !doc["data"].is_array()) parse_error("JSON field 'data' must be an array");
  const json& data = doc["data"];
  if (data.size() != cells.rows) parse_error("'data' has " + std::to_string(data.size()) + " rows, expected " +
                                             std::to_string(cells.rows));
  for (const auto& row : data) {
    if (!row.is_array() || row.size() != cells.cols) parse_error("ragged JSON data");
    for (const auto& v : row) {
      if (v.is_string()) {
        cells.text.push_back(v.get<std::string>());
      } else if (v.is_number_integer()) {
        cells.text.push_back(v.dump());
      } else {
        parse_error("JSON entries must be numbers or strings, got " + v.dump());
      }
    }
  }
  return cells;
}

std::string cell_text(const Rational& x) {
  return numerator(x).str() + "/" + denominator(x).str();
}

std::string cell_text(double x) { return format_scalar(x); }

}  // namespace

const char* domain_name(const AnyMatrix& m) {
  return std::holds_alternative<Matrix<Rational>>(m) ? "exact" : "float";
}

Format format_from_path(const std::filesystem::path& path) {
  return path.extension() == ".json" ? Format::Json : Format::Csv;
}

AnyMatrix parse_matrix(std::string_view text, Format format, Domain domain) {
  return build(format == Format::Json ? split_json(text) : split_csv(text), domain);
}

AnyMatrix read_matrix(const std::filesystem::path& path, std::optional<Format> format, Domain domain) {
  std::ifstream in(path);
  if (!in) parse_error("cannot open '" + path.string() + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_matrix(buffer.str(), format.value_or(format_from_path(path)), domain);
}

std::string write_matrix(const AnyMatrix& any, Format format) {
  return std::visit(
      [format](const auto& m) {
        std::ostringstream out;
        if (format == Format::Csv) {
          for (std::size_t i = 0; i < m.rows(); ++i) {
            for (std::size_t j = 0; j < m.cols(); ++j) out << (j ? "," : "") << cell_text(m(i, j));
            out << '\n';
          }
          return out.str();
        }
        json doc;
        doc["rows"] = m.rows();
        doc["cols"] = m.cols();
        doc["data"] = json::array();
        for (std::size_t i = 0; i < m.rows(); ++i) {
          json row = json::array();
          for (std::size_t j = 0; j < m.cols(); ++j) {
            if constexpr (std::is_same_v<std::decay_t<decltype(m(i, j))>, Rational>) {
              row.push_back(cell_text(m(i, j)));
            } else {
              row.push_back(m(i, j));
            }
          }
          doc["data"].push_back(std::move(row));
        }
        return doc.dump() + "\n";
      },
      any);
}

}  // namespace stovar
