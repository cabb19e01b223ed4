#pragma once

#include <optional>
#include <string>
#include <utility>

#include <boost/multiprecision/cpp_int.hpp>

namespace hsk::models {

/// Arbitrary-precision natural number; pairing nests quickly.
using Natural = boost::multiprecision::cpp_int;

/// J(j, k) = (j+k)(j+k+1) + k + 1.
Natural pairing_J(const Natural& j, const Natural& k);

/// Partial inverse of pairing_J.
std::optional<std::pair<Natural, Natural>> unpair(const Natural& n);

std::string to_string(const Natural& n);

}  // namespace hsk::models
