#include "hsk/models/natural.hpp"

namespace hsk::models {

Natural pairing_J(const Natural& j, const Natural& k) {
  Natural t = j + k;
  return t * (t + 1) + k + 1;
}

std::optional<std::pair<Natural, Natural>> unpair(const Natural& n) {
  if (n <= 0) return std::nullopt;
  Natural m = n - 1;  // = t(t+1) + k with t = j + k and k <= t
  Natural t = (boost::multiprecision::sqrt(Natural(4 * m + 1)) - 1) / 2;
  while (t * (t + 1) > m) --t;
  while ((t + 1) * (t + 2) <= m) ++t;
  Natural k = m - t * (t + 1);
  if (k > t) return std::nullopt;
  return std::make_pair(Natural(t - k), k);
}

std::string to_string(const Natural& n) { return n.str(); }

}  // namespace hsk::models
