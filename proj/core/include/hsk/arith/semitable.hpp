#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "hsk/syntax/term.hpp"

namespace hsk::arith {

/// (S^p1(x), S^q1(y)) , ... , (S^pr(x), S^qr(y)) , z with pairing nested to
/// the right; only the exponent pairs are stored.
struct Semitable {
  std::vector<std::pair<std::size_t, std::size_t>> rows;

  std::size_t length() const noexcept { return rows.size(); }
  Term instantiate(const Term& x, const Term& y, const Term& z) const;
  /// Rows (p-1, m*(p-1)), ..., (1, m), (0, 0): each step prepends
  /// (S^p(x), S^(m*p)(y)) to an (m,p)-semitable.
  bool is_mp(std::size_t m, std::size_t p) const;

  static Semitable mp(std::size_t m, std::size_t p);
  /// The semitable a with t = a(x, y, z), if any; x, y, z must be constants.
  static std::optional<Semitable> match(const Term& t, const Term& x, const Term& y, const Term& z);

  friend bool operator==(const Semitable&, const Semitable&) = default;
};

/// Size of the (m,p)-table over (z, z, k): 4p + (1+m)p(p-1)/2 + 1.
std::size_t mp_table_size(std::size_t m, std::size_t p);

}  // namespace hsk::arith
