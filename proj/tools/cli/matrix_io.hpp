#pragma once

#include <cstddef>
#include <string>
#include <string_view>

#include "jcf/errors.hpp"
#include "jcf/matrix.hpp"

namespace jcf::io {

/// Malformed input; line and column are 1-based, 0 when not applicable.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line = 0, std::size_t column = 0);
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

class RaggedRows : public Error {
 public:
  using Error::Error;
};

class EmptyInput : public Error {
 public:
  using Error::Error;
};

struct MatrixDocument {
  Mat matrix;
  /// File path, or "-" for standard input.
  std::string source;
  friend bool operator==(const MatrixDocument&, const MatrixDocument&) = default;
};

/// One row per nonempty line, whitespace-separated rationals; lines whose
/// first non-blank character is `#` are comments.
MatrixDocument parse_matrix_text(std::string_view input, std::string source = "-");

/// `{"matrix": [[...], ...]}` with integer or rational-string entries.
MatrixDocument parse_matrix_json(std::string_view input, std::string source = "-");

/// `{"matrix": [["1/2", "0"], ...]}`, entries as rational strings.
std::string format_matrix_json(const Mat& m);

std::string format_matrix_text(const Mat& m);

}  // namespace jcf::io
