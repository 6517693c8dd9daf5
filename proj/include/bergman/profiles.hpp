#pragma once

#include <map>
#include <string>
#include <vector>

#include "bergman/moment.hpp"

namespace bergman {

// Parameters in the form "key=v1,v2;key=v".
using ProfileParams = std::map<std::string, std::vector<double>>;

ProfileParams parse_profile_params(const std::string& text);

// Registry profiles act on t = <w, a> + b, where a is the argument vector of
// length m, w defaults to all ones and b to zero:
//   const       value (default 1)
//   ratio       t / (1 + t)
//   reciprocal  1 / (1 + t)
//   gaussian    exp(-t^2)
//   sigmoid     1 / (1 + exp(-sharpness t)), sharpness defaults to 4
// ratio and reciprocal are bounded for t >= 0.
struct NamedProfile {
  std::string name;
  ProfileParams params;
  Profile fn;
};

const std::vector<std::string>& profile_names();
NamedProfile make_profile(const std::string& name, const ProfileParams& params, int m);

}  // namespace bergman
