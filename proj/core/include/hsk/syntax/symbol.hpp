#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>

namespace hsk {

/// The five special constants 0, 0^, 0~, k, k~ (spelled z, zh, zt, k, kt).
enum class SpecialBase : std::uint8_t { zero, zero_hat, zero_tilde, k, k_tilde };

inline constexpr std::array<SpecialBase, 5> kSpecialBases = {
    SpecialBase::zero, SpecialBase::zero_hat, SpecialBase::zero_tilde, SpecialBase::k,
    SpecialBase::k_tilde};

std::string_view special_base_name(SpecialBase base);

/// Marks a special constant: its base and the index of its language
/// (0 is the unindexed language, i >= 1 the variant language P_i).
struct SpecialTag {
  SpecialBase base = SpecialBase::zero;
  unsigned language = 0;

  friend auto operator<=>(const SpecialTag&, const SpecialTag&) = default;
};

/// Decodes reserved constant names: "zt" -> {zero_tilde, 0}, "k_3" -> {k, 3}.
std::optional<SpecialTag> parse_special_name(std::string_view name);

/// Spelling of a special constant: {zero_hat, 2} -> "zh_2".
std::string special_name(SpecialTag tag);

class FunctionSymbol {
 public:
  /// Reserved special names get their tag automatically and must have arity 0;
  /// `s` must be unary and `pair` binary. Throws ContractError otherwise.
  FunctionSymbol(std::string name, unsigned arity);

  static FunctionSymbol special(SpecialBase base, unsigned language = 0);
  static FunctionSymbol successor();
  static FunctionSymbol pairing();

  const std::string& name() const noexcept { return name_; }
  unsigned arity() const noexcept { return arity_; }
  const std::optional<SpecialTag>& special_tag() const noexcept { return tag_; }
  bool is_special() const noexcept { return tag_.has_value(); }
  bool is_constant() const noexcept { return arity_ == 0; }
  bool is_successor() const noexcept;
  bool is_pairing() const noexcept;

  friend bool operator==(const FunctionSymbol& a, const FunctionSymbol& b) {
    return a.arity_ == b.arity_ && a.name_ == b.name_ && a.tag_ == b.tag_;
  }
  friend std::strong_ordering operator<=>(const FunctionSymbol& a, const FunctionSymbol& b);

 private:
  std::string name_;
  unsigned arity_;
  std::optional<SpecialTag> tag_;
};

class PredicateSymbol {
 public:
  PredicateSymbol(std::string name, unsigned arity) : name_(std::move(name)), arity_(arity) {}

  const std::string& name() const noexcept { return name_; }
  unsigned arity() const noexcept { return arity_; }
  bool is_propositional() const noexcept { return arity_ == 0; }

  friend bool operator==(const PredicateSymbol&, const PredicateSymbol&) = default;
  friend std::strong_ordering operator<=>(const PredicateSymbol& a, const PredicateSymbol& b);

 private:
  std::string name_;
  unsigned arity_;
};

/// Names that the parser treats as keywords and never as symbols.
bool is_keyword(std::string_view name);

}  // namespace hsk

template <>
struct std::hash<hsk::FunctionSymbol> {
  std::size_t operator()(const hsk::FunctionSymbol& f) const noexcept {
    return std::hash<std::string>{}(f.name()) * 31u + f.arity();
  }
};

template <>
struct std::hash<hsk::PredicateSymbol> {
  std::size_t operator()(const hsk::PredicateSymbol& p) const noexcept {
    return std::hash<std::string>{}(p.name()) * 37u + p.arity();
  }
};
