#include "cli/matrix_io.hpp"

#include <sstream>
#include <vector>

#include <json.hpp>

namespace jcf::io {

namespace {

std::string located(const std::string& what, std::size_t line, std::size_t column) {
  if (line == 0) return what;
  return "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what;
}

bool is_blank(char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\v' || c == '\f'; }

Mat assemble(const std::vector<std::vector<Rational>>& rows) {
  if (rows.empty() || rows.front().empty()) throw EmptyInput("matrix has no entries");
  const std::size_t cols = rows.front().size();
  std::vector<Rational> entries;
  entries.reserve(rows.size() * cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) {
      throw RaggedRows("row " + std::to_string(r + 1) + " has " + std::to_string(rows[r].size()) +
                       " entries, expected " + std::to_string(cols));
    }
    entries.insert(entries.end(), rows[r].begin(), rows[r].end());
  }
  return Mat(rows.size(), cols, std::move(entries));
}

}  // namespace

ParseError::ParseError(const std::string& what, std::size_t line, std::size_t column)
    : Error(located(what, line, column)), line_(line), column_(column) {}

MatrixDocument parse_matrix_text(std::string_view input, std::string source) {
  std::vector<std::vector<Rational>> rows;
  std::size_t line_no = 0;
  while (!input.empty()) {
    ++line_no;
    const auto nl = input.find('\n');
    const std::string_view line = input.substr(0, nl);
    input.remove_prefix(nl == std::string_view::npos ? input.size() : nl + 1);

    std::vector<Rational> row;
    std::size_t i = 0;
    while (i < line.size()) {
      while (i < line.size() && is_blank(line[i])) ++i;
      if (i == line.size()) break;
      if (row.empty() && line[i] == '#') break;
      const std::size_t start = i;
      while (i < line.size() && !is_blank(line[i])) ++i;
      const std::string_view token = line.substr(start, i - start);
      try {
        row.push_back(Rational::parse(token));
      } catch (const InvalidRational&) {
        throw ParseError("invalid rational '" + std::string(token) + "'", line_no, start + 1);
      }
    }
    if (!row.empty()) rows.push_back(std::move(row));
  }
  return {assemble(rows), std::move(source)};
}

MatrixDocument parse_matrix_json(std::string_view input, std::string source) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(input);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("matrix")) throw ParseError("expected an object with key \"matrix\"");
  const auto& m = doc["matrix"];
  if (!m.is_array()) throw ParseError("\"matrix\" must be an array of rows");

  std::vector<std::vector<Rational>> rows;
  for (std::size_t r = 0; r < m.size(); ++r) {
    const auto& row = m[r];
    if (!row.is_array()) throw ParseError("row " + std::to_string(r + 1) + " is not an array");
    std::vector<Rational> out;
    for (std::size_t c = 0; c < row.size(); ++c) {
      const auto& v = row[c];
      const std::string where = "entry (" + std::to_string(r + 1) + ", " + std::to_string(c + 1) + ")";
      if (v.is_number_integer()) {
        out.push_back(Rational::parse(v.dump()));
      } else if (v.is_string()) {
        try {
          out.push_back(Rational::parse(v.get<std::string>()));
        } catch (const InvalidRational& e) {
          throw ParseError(where + ": " + e.what());
        }
      } else {
        throw ParseError(where + ": expected an integer or a rational string");
      }
    }
    rows.push_back(std::move(out));
  }
  return {assemble(rows), std::move(source)};
}

std::string format_matrix_json(const Mat& m) {
  nlohmann::json rows = nlohmann::json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    nlohmann::json row = nlohmann::json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m(r, c).str());
    rows.push_back(std::move(row));
  }
  return nlohmann::json{{"matrix", rows}}.dump();
}

std::string format_matrix_text(const Mat& m) {
  std::ostringstream os;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) os << (c ? " " : "") << m(r, c);
    os << '\n';
  }
  return os.str();
}

}  // namespace jcf::io
