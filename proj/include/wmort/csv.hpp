#pragma once

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

namespace wmort::csv {

struct Row {
  const std::vector<std::string>* header;
  std::vector<std::string> fields;
  long line = 0;

  const std::string& get(const std::string& col) const {
    for (std::size_t i = 0; i < header->size(); ++i)
      if ((*header)[i] == col) {
        if (i >= fields.size())
          throw std::runtime_error("line " + std::to_string(line) + ": missing field '" + col + "'");
        return fields[i];
      }
    throw std::runtime_error("missing column '" + col + "'");
  }
  double num(const std::string& col) const {
    const std::string& s = get(col);
    try {
      std::size_t pos = 0;
      double v = std::stod(s, &pos);
      if (pos != s.size()) throw std::invalid_argument(s);
      return v;
    } catch (const std::exception&) {
      throw std::runtime_error("line " + std::to_string(line) + ": '" + s + "' is not a number in column '" + col + "'");
    }
  }
};

// Streams a comma-separated file with a header row through fn(row).
// Quoting is not supported; the schemas here never need it.
template <class Fn>
void for_each_row(const std::string& path, const std::vector<std::string>& required_cols, Fn&& fn) {
  std::ifstream is(path);
  if (!is) throw std::runtime_error("cannot open " + path);
  std::string line;
  if (!std::getline(is, line)) throw std::runtime_error(path + ": empty file");
  if (!line.empty() && line.back() == '\r') line.pop_back();
  std::vector<std::string> header;
  {
    std::stringstream ss(line);
    std::string f;
    while (std::getline(ss, f, ',')) header.push_back(f);
  }
  for (const auto& c : required_cols) {
    bool found = false;
    for (const auto& h : header) found |= h == c;
    if (!found) throw std::runtime_error(path + ": missing required column '" + c + "'");
  }
  Row row;
  row.header = &header;
  long ln = 1;
  while (std::getline(is, line)) {
    ++ln;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    row.fields.clear();
    std::stringstream ss(line);
    std::string f;
    while (std::getline(ss, f, ',')) row.fields.push_back(f);
    if (!line.empty() && line.back() == ',') row.fields.push_back("");
    row.line = ln;
    try {
      fn(row);
    } catch (const std::runtime_error&) {
      throw;
    } catch (const std::exception& e) {
      throw std::runtime_error(path + " line " + std::to_string(ln) + ": " + e.what());
    }
  }
}

}  // namespace wmort::csv
