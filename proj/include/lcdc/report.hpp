#pragma once

#include <cstdint>
#include <sstream>
#include <string>
#include <type_traits>
#include <vector>

#include <json.hpp>

#include "lcdc/code.hpp"
#include "lcdc/field.hpp"
#include "lcdc/matrix.hpp"

namespace lcdc {

/// Key-value result document. Both renderings are derived from the same
/// ordered tree, so they agree on every field, and the structured form
/// round-trips losslessly through its own parser.
class Report {
 public:
  using json = nlohmann::ordered_json;

  void set(const std::string& key, const char* value) { root_[key] = value; }
  void set(const std::string& key, const std::string& value) { root_[key] = value; }
  void set(const std::string& key, bool value) { root_[key] = value; }

  template <typename T>
    requires std::is_integral_v<T> && (!std::is_same_v<T, bool>)
  void set(const std::string& key, T value) {
    root_[key] = static_cast<uint64_t>(value);
  }

  void set_element(const std::string& key, const Elem& e) {
    root_[key] = format_element(e);
  }

  void set_vector(const std::string& key, const Vec& v) {
    json arr = json::array();
    for (const Elem& e : v) arr.push_back(format_element(e));
    root_[key] = std::move(arr);
  }

  void set_matrix(const std::string& key, const Matrix& m) {
    json rows = json::array();
    for (size_t i = 0; i < m.rows(); ++i) {
      json row = json::array();
      for (size_t j = 0; j < m.cols(); ++j) row.push_back(format_element(m.at(i, j)));
      rows.push_back(std::move(row));
    }
    root_[key] = std::move(rows);
  }

  void set_parameters(const std::string& key, const std::vector<uint64_t>& params) {
    root_[key] = params;
  }

  void set_subtree(const std::string& key, const Report& sub) {
    root_[key] = sub.root_;
  }

  const json& tree() const { return root_; }

  std::string to_json() const { return root_.dump(2) + "\n"; }

  std::string to_text() const {
    std::ostringstream out;
    for (const auto& [key, value] : root_.items()) render(out, key, value);
    return out.str();
  }

 private:
  static bool is_matrix(const json& v) {
    return v.is_array() && !v.empty() && v.front().is_array();
  }

  static void render(std::ostringstream& out, const std::string& key, const json& v) {
    if (is_matrix(v)) {
      out << key << ":\n";
      std::vector<size_t> widths;
      for (const auto& row : v)
        for (size_t j = 0; j < row.size(); ++j) {
          if (widths.size() <= j) widths.resize(j + 1, 0);
          widths[j] = std::max(widths[j], row[j].template get<std::string>().size());
        }
      for (const auto& row : v) {
        out << "  [";
        for (size_t j = 0; j < row.size(); ++j) {
          std::string cell = row[j].template get<std::string>();
          out << (j ? " " : "") << std::string(widths[j] - cell.size(), ' ') << cell;
        }
        out << "]\n";
      }
    } else if (v.is_array()) {
      out << key << ": [";
      for (size_t j = 0; j < v.size(); ++j) {
        if (j) out << ", ";
        if (v[j].is_string())
          out << v[j].template get<std::string>();
        else
          out << v[j].dump();
      }
      out << "]\n";
    } else if (v.is_object()) {
      out << key << ":\n";
      std::ostringstream inner;
      for (const auto& [k2, v2] : v.items()) render(inner, k2, v2);
      std::istringstream lines(inner.str());
      std::string line;
      while (std::getline(lines, line)) out << "  " << line << "\n";
    } else if (v.is_string()) {
      std::string s = v.template get<std::string>();
      if (s.find('\n') == std::string::npos) {
        out << key << ": " << s << "\n";
      } else {
        out << key << ":\n";
        std::istringstream lines(s);
        std::string line;
        while (std::getline(lines, line)) out << "  " << line << "\n";
      }
    } else {
      out << key << ": " << v.dump() << "\n";
    }
  }

  json root_;
};

}  // namespace lcdc
