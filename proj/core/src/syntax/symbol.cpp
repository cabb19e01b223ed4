#include "hsk/syntax/symbol.hpp"

#include <charconv>

#include "hsk/error.hpp"

namespace hsk {

namespace {

constexpr std::string_view kSuccessorName = "s";
constexpr std::string_view kPairingName = "pair";

}  // namespace

std::string_view special_base_name(SpecialBase base) {
  switch (base) {
    case SpecialBase::zero: return "z";
    case SpecialBase::zero_hat: return "zh";
    case SpecialBase::zero_tilde: return "zt";
    case SpecialBase::k: return "k";
    case SpecialBase::k_tilde: return "kt";
  }
  return "?";
}

std::optional<SpecialTag> parse_special_name(std::string_view name) {
  std::string_view stem = name;
  unsigned language = 0;
  if (auto underscore = name.find('_'); underscore != std::string_view::npos) {
    stem = name.substr(0, underscore);
    std::string_view digits = name.substr(underscore + 1);
    if (digits.empty() || digits.front() == '0') return std::nullopt;
    auto [end, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), language);
    if (ec != std::errc{} || end != digits.data() + digits.size()) return std::nullopt;
  }
  for (SpecialBase base : kSpecialBases) {
    if (special_base_name(base) == stem) return SpecialTag{base, language};
  }
  return std::nullopt;
}

std::string special_name(SpecialTag tag) {
  std::string name(special_base_name(tag.base));
  if (tag.language != 0) name += "_" + std::to_string(tag.language);
  return name;
}

FunctionSymbol::FunctionSymbol(std::string name, unsigned arity)
    : name_(std::move(name)), arity_(arity), tag_(parse_special_name(name_)) {
  if (tag_ && arity_ != 0) {
    throw ContractError("special constant '" + name_ + "' must have arity 0");
  }
  if (name_ == kSuccessorName && arity_ != 1) {
    throw ContractError("reserved symbol 's' must have arity 1");
  }
  if (name_ == kPairingName && arity_ != 2) {
    throw ContractError("reserved symbol 'pair' must have arity 2");
  }
}

FunctionSymbol FunctionSymbol::special(SpecialBase base, unsigned language) {
  return FunctionSymbol(special_name({base, language}), 0);
}

FunctionSymbol FunctionSymbol::successor() { return FunctionSymbol(std::string(kSuccessorName), 1); }

FunctionSymbol FunctionSymbol::pairing() { return FunctionSymbol(std::string(kPairingName), 2); }

bool FunctionSymbol::is_successor() const noexcept { return arity_ == 1 && name_ == kSuccessorName; }

bool FunctionSymbol::is_pairing() const noexcept { return arity_ == 2 && name_ == kPairingName; }

std::strong_ordering operator<=>(const FunctionSymbol& a, const FunctionSymbol& b) {
  if (auto c = a.name_.compare(b.name_); c != 0) return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
  if (auto c = a.arity_ <=> b.arity_; c != 0) return c;
  return a.tag_ <=> b.tag_;
}

std::strong_ordering operator<=>(const PredicateSymbol& a, const PredicateSymbol& b) {
  if (auto c = a.name_.compare(b.name_); c != 0) return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
  return a.arity_ <=> b.arity_;
}

bool is_keyword(std::string_view name) { return name == "exists" || name == "forall"; }

}  // namespace hsk
