#include "bergman/profiles.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace bergman {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t");
  return s.substr(b, e - b + 1);
}

double parse_number(const std::string& s) {
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

double scalar(const ProfileParams& params, const std::string& key, double fallback) {
  const auto it = params.find(key);
  if (it == params.end()) return fallback;
  if (it->second.size() != 1) throw std::invalid_argument("profile parameter '" + key + "' takes one value");
  return it->second[0];
}

}  // namespace

ProfileParams parse_profile_params(const std::string& text) {
  ProfileParams out;
  std::stringstream items(text);
  std::string item;
  while (std::getline(items, item, ';')) {
    item = trim(item);
    if (item.empty()) continue;
    const auto eq = item.find('=');
    if (eq == std::string::npos) throw std::invalid_argument("profile parameter needs key=value: '" + item + "'");
    const std::string key = trim(item.substr(0, eq));
    if (key.empty()) throw std::invalid_argument("empty profile parameter name");
    if (out.count(key)) throw std::invalid_argument("duplicate profile parameter '" + key + "'");
    std::stringstream values(item.substr(eq + 1));
    std::string v;
    std::vector<double> parsed;
    while (std::getline(values, v, ',')) parsed.push_back(parse_number(trim(v)));
    if (parsed.empty()) throw std::invalid_argument("profile parameter '" + key + "' has no value");
    out[key] = parsed;
  }
  return out;
}

const std::vector<std::string>& profile_names() {
  static const std::vector<std::string> names{"const", "ratio", "reciprocal", "gaussian", "sigmoid"};
  return names;
}

NamedProfile make_profile(const std::string& name, const ProfileParams& params, int m) {
  const auto& names = profile_names();
  if (std::find(names.begin(), names.end(), name) == names.end()) {
    throw std::invalid_argument("unknown profile '" + name + "'");
  }
  if (m < 1) throw std::invalid_argument("profile argument count must be positive");
  std::vector<std::string> allowed{"w", "b"};
  if (name == "const") allowed = {"value"};
  if (name == "sigmoid") allowed.push_back("sharpness");
  for (const auto& [key, values] : params) {
    if (std::find(allowed.begin(), allowed.end(), key) == allowed.end()) {
      throw std::invalid_argument("profile '" + name + "' has no parameter '" + key + "'");
    }
  }
  NamedProfile out{name, params, {}};
  if (name == "const") {
    const double value = scalar(params, "value", 1.0);
    out.fn = [value](const RVector&) { return cplx(value); };
    return out;
  }
  RVector w = RVector::Ones(m);
  if (auto it = params.find("w"); it != params.end()) {
    if (static_cast<int>(it->second.size()) != m) {
      throw DimensionError("profile weights must have one entry per argument");
    }
    for (int j = 0; j < m; ++j) w[j] = it->second[j];
  }
  const double b = scalar(params, "b", 0.0);
  auto t_of = [w, b](const RVector& a) {
    if (a.size() != w.size()) throw DimensionError("profile argument has the wrong length");
    return w.dot(a) + b;
  };
  if (name == "ratio") {
    out.fn = [t_of](const RVector& a) {
      const double t = t_of(a);
      return cplx(t / (1.0 + t));
    };
  } else if (name == "reciprocal") {
    out.fn = [t_of](const RVector& a) { return cplx(1.0 / (1.0 + t_of(a))); };
  } else if (name == "gaussian") {
    out.fn = [t_of](const RVector& a) {
      const double t = t_of(a);
      return cplx(std::exp(-t * t));
    };
  } else {
    const double s = scalar(params, "sharpness", 4.0);
    out.fn = [t_of, s](const RVector& a) { return cplx(1.0 / (1.0 + std::exp(-s * t_of(a)))); };
  }
  return out;
}

}  // namespace bergman
