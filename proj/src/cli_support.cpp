#include "bergman/cli_support.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace bergman {

namespace {

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, sep)) {
    const auto b = item.find_first_not_of(" \t");
    const auto e = item.find_last_not_of(" \t");
    out.push_back(b == std::string::npos ? "" : item.substr(b, e - b + 1));
  }
  if (!text.empty() && text.back() == sep) out.push_back("");
  return out;
}

double to_real(const std::string& s) {
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(s, &used);
  } catch (const std::exception&) {
    throw std::invalid_argument("not a number: '" + s + "'");
  }
  if (used != s.size() || !std::isfinite(v)) throw std::invalid_argument("not a finite number: '" + s + "'");
  return v;
}

}  // namespace

std::vector<double> parse_real_list(const std::string& text) {
  std::vector<double> out;
  if (text.find_first_not_of(" \t") == std::string::npos) return out;
  for (const std::string& s : split(text, ',')) out.push_back(to_real(s));
  return out;
}

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  for (double v : parse_real_list(text)) {
    if (v != std::floor(v) || std::abs(v) > 1e9) throw std::invalid_argument("not an integer list: '" + text + "'");
    out.push_back(static_cast<int>(v));
  }
  return out;
}

std::vector<std::vector<double>> parse_rows(const std::string& text) {
  std::vector<std::vector<double>> rows;
  for (const std::string& r : split(text, ';')) {
    std::vector<double> row = parse_real_list(r);
    if (row.empty()) throw std::invalid_argument("empty row in '" + text + "'");
    if (!rows.empty() && row.size() != rows.front().size()) {
      throw std::invalid_argument("rows of different lengths in '" + text + "'");
    }
    rows.push_back(std::move(row));
  }
  if (rows.empty()) throw std::invalid_argument("no rows given");
  return rows;
}

CVector parse_point(const std::string& text) {
  const auto rows = parse_rows(text);
  if (rows.front().size() != 2) throw std::invalid_argument("point coordinates are re,im pairs: '" + text + "'");
  if (static_cast<int>(rows.size()) > kMaxDim) throw DimensionError("point has too many coordinates");
  CVector z(static_cast<Eigen::Index>(rows.size()));
  for (std::size_t j = 0; j < rows.size(); ++j) z[j] = cplx(rows[j][0], rows[j][1]);
  return z;
}

}  // namespace bergman
