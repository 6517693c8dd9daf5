#pragma once

#include <string>
#include <vector>

#include "bergman/moment.hpp"

namespace bergman {

// "1,2.5,-3" -> {1, 2.5, -3}. Empty text gives an empty list.
std::vector<double> parse_real_list(const std::string& text);
std::vector<int> parse_int_list(const std::string& text);

// "v1;v2;..." with comma-separated rows of equal length.
std::vector<std::vector<double>> parse_rows(const std::string& text);

// "re,im;re,im;..." -> complex coordinates.
CVector parse_point(const std::string& text);

}  // namespace bergman
