// SPDX-License-Identifier: Apache-2.0
#include "dupread/render.hpp"

namespace dupread {

std::string render_entry(const std::vector<int>& entry) {
  std::string positive, negative;
  auto term = [](int magnitude, std::size_t index) {
    std::string t;
    if (magnitude != 1) t += std::to_string(magnitude);
    t += "z";
    t += std::to_string(index);
    return t;
  };
  for (std::size_t a = 0; a < entry.size(); ++a) {
    const int c = entry[a];
    if (c == 0) continue;
    if (c > 0) {
      if (!positive.empty()) positive += "+";
      positive += term(c, a);
    } else {
      negative += "-";
      negative += term(-c, a);
    }
  }
  if (positive.empty() && negative.empty()) return "0";
  return positive + negative;
}

std::string render_entry_vector(const std::vector<std::vector<int>>& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ", ";
    out += render_entry(v[i]);
  }
  out += ")";
  return out;
}

std::string render_int_vector(const std::vector<int>& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ", ";
    out += std::to_string(v[i]);
  }
  out += ")";
  return out;
}

std::string csv_emit(const std::vector<std::vector<std::string>>& rows) {
  std::string out;
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) out += ",";
      out += row[i];
    }
    out += "\n";
  }
  return out;
}

std::vector<std::vector<std::string>> csv_parse(const std::string& text) {
  std::vector<std::vector<std::string>> rows;
  std::vector<std::string> row;
  std::string field;
  for (char c : text) {
    if (c == '\n') {
      row.push_back(field);
      field.clear();
      rows.push_back(std::move(row));
      row.clear();
    } else if (c == ',') {
      row.push_back(field);
      field.clear();
    } else {
      field += c;
    }
  }
  if (!field.empty() || !row.empty()) {
    row.push_back(field);
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace dupread
