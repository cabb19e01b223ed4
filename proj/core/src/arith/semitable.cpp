#include "hsk/arith/semitable.hpp"

namespace hsk::arith {

Term Semitable::instantiate(const Term& x, const Term& y, const Term& z) const {
  Term out = z;
  for (auto it = rows.rbegin(); it != rows.rend(); ++it) {
    out = pair(pair(numeral(it->first, x), numeral(it->second, y)), out);
  }
  return out;
}

bool Semitable::is_mp(std::size_t m, std::size_t p) const { return *this == mp(m, p); }

Semitable Semitable::mp(std::size_t m, std::size_t p) {
  Semitable t;
  for (std::size_t j = p; j >= 1; --j) t.rows.emplace_back(j - 1, m * (j - 1));
  return t;
}

std::optional<Semitable> Semitable::match(const Term& t, const Term& x, const Term& y, const Term& z) {
  Semitable out;
  const Term* cur = &t;
  while (!(*cur == z)) {
    if (!cur->is_application() || !cur->symbol().is_pairing()) return std::nullopt;
    const Term& row = cur->arg(0);
    if (!row.is_application() || !row.symbol().is_pairing()) return std::nullopt;
    auto p = numeral_of(row.arg(0), x);
    auto q = numeral_of(row.arg(1), y);
    if (!p || !q) return std::nullopt;
    out.rows.emplace_back(*p, *q);
    cur = &cur->arg(1);
  }
  return out;
}

std::size_t mp_table_size(std::size_t m, std::size_t p) { return p == 0 ? 1 : 4 * p + (1 + m) * p * (p - 1) / 2 + 1; }

}  // namespace hsk::arith
