#pragma once

#include <cstddef>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "lcdc/code.hpp"
#include "lcdc/error.hpp"
#include "lcdc/field.hpp"
#include "lcdc/matrix.hpp"

namespace lcdc {

enum class CodeCategory { linear, subfield_linear };

inline const char* category_name(CodeCategory c) {
  return c == CodeCategory::linear ? "linear" : "subfield-linear";
}

/// Plain-text code description:
///
///   # optional comments
///   GF(9) mod 2,2,1
///   linear            (or: subfield-linear)
///   rows 2 cols 4
///   1 0 w 1+w
///   0 1 w^2 2
///
/// Blank lines and lines starting with # are skipped. Each matrix row has
/// exactly `cols` whitespace-separated element tokens.
struct CodeFile {
  const FieldSpec* field = nullptr;
  CodeCategory category = CodeCategory::linear;
  Matrix generator;

  CodeFile(const FieldSpec& f, CodeCategory cat, Matrix g)
      : field(&f), category(cat), generator(std::move(g)) {}

  LinearCode as_linear() const {
    if (category != CodeCategory::linear)
      fail(errc::category_mismatch, "code file declares a subfield-linear code");
    return LinearCode(generator);
  }

  SubfieldLinearCode as_subfield_linear() const {
    if (category != CodeCategory::subfield_linear)
      fail(errc::category_mismatch, "code file declares a linear code");
    return SubfieldLinearCode(generator);
  }

  /// Interpret under the trace-Hermitian form regardless of declared
  /// category: linear codes are widened via rows + w rows.
  SubfieldLinearCode as_subfield_linear_widened() const {
    if (category == CodeCategory::subfield_linear) return SubfieldLinearCode(generator);
    return to_subfield_linear(LinearCode(generator));
  }
};

namespace detail {

inline bool content_line(const std::string& line, std::string& out) {
  size_t a = line.find_first_not_of(" \t\r");
  if (a == std::string::npos) return false;
  size_t b = line.find_last_not_of(" \t\r");
  out = line.substr(a, b - a + 1);
  return out[0] != '#';
}

inline std::vector<std::string> split_ws(const std::string& s) {
  std::istringstream in(s);
  std::vector<std::string> parts;
  std::string tok;
  while (in >> tok) parts.push_back(tok);
  return parts;
}

}  // namespace detail

inline CodeFile parse_code_file(std::istream& in) {
  std::vector<std::string> lines;
  std::string raw, kept;
  while (std::getline(in, raw))
    if (detail::content_line(raw, kept)) lines.push_back(kept);

  size_t at = 0;
  auto next = [&](const char* what) -> const std::string& {
    if (at >= lines.size())
      fail(errc::parse_error, std::string("unexpected end of file, expected ") + what);
    return lines[at++];
  };

  const FieldSpec& f = parse_field(next("field line"));

  const std::string& cat_line = next("category line");
  CodeCategory cat;
  if (cat_line == "linear")
    cat = CodeCategory::linear;
  else if (cat_line == "subfield-linear")
    cat = CodeCategory::subfield_linear;
  else
    fail(errc::parse_error, "expected 'linear' or 'subfield-linear', got: " + cat_line);

  std::vector<std::string> dims = detail::split_ws(next("dimensions line"));
  if (dims.size() != 4 || dims[0] != "rows" || dims[2] != "cols")
    fail(errc::parse_error, "expected 'rows R cols N'");
  size_t rows = 0, cols = 0;
  try {
    rows = std::stoull(dims[1]);
    cols = std::stoull(dims[3]);
  } catch (const std::exception&) {
    fail(errc::parse_error, "rows and cols must be non-negative integers");
  }
  // rows 0 is legal: the zero code of length cols.
  if (cols == 0) fail(errc::parse_error, "cols must be positive");

  Matrix g(f, rows, cols);
  for (size_t i = 0; i < rows; ++i) {
    std::vector<std::string> toks = detail::split_ws(next("matrix row"));
    if (toks.size() != cols) {
      std::ostringstream msg;
      msg << "row " << i + 1 << " has " << toks.size() << " entries, expected " << cols;
      fail(errc::parse_error, msg.str());
    }
    for (size_t j = 0; j < cols; ++j) g.at(i, j) = parse_element(f, toks[j]);
  }
  if (at != lines.size())
    fail(errc::parse_error, "trailing content after matrix rows: " + lines[at]);
  return CodeFile(f, cat, std::move(g));
}

inline CodeFile parse_code_file(const std::string& text) {
  std::istringstream in(text);
  return parse_code_file(in);
}

inline void write_code_file(std::ostream& out, const CodeFile& cf) {
  out << format_field(*cf.field) << "\n";
  out << category_name(cf.category) << "\n";
  out << "rows " << cf.generator.rows() << " cols " << cf.generator.cols() << "\n";
  for (size_t i = 0; i < cf.generator.rows(); ++i) {
    for (size_t j = 0; j < cf.generator.cols(); ++j) {
      if (j) out << " ";
      out << format_element(cf.generator.at(i, j));
    }
    out << "\n";
  }
}

inline std::string write_code_file(const CodeFile& cf) {
  std::ostringstream out;
  write_code_file(out, cf);
  return out.str();
}

}  // namespace lcdc
