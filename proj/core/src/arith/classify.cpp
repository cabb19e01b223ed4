#include "hsk/arith/classify.hpp"

#include "hsk/arith/builders.hpp"
#include "hsk/error.hpp"
#include "hsk/qcheck/quasitautology.hpp"
#include "hsk/syntax/text.hpp"

namespace hsk::arith {

namespace {

constexpr Primitive kPrimitives[] = {Primitive::num, Primitive::num_tilde, Primitive::sim, Primitive::plus,
                                     Primitive::tab, Primitive::tab_tilde, Primitive::sim_tilde, Primitive::tim};

Formula build(Primitive p, const std::vector<Term>& a, unsigned lang) {
  switch (p) {
    case Primitive::num: return num(a[0], lang);
    case Primitive::num_tilde: return num_tilde(a[0], lang);
    case Primitive::sim: return sim(a[0], a[1], lang);
    case Primitive::plus: return plus(a[0], a[1], a[2], lang);
    case Primitive::tab: return tab(a[0], lang);
    case Primitive::tab_tilde: return tab_tilde(a[0], lang);
    case Primitive::sim_tilde: return sim_tilde(a[0], a[1], lang);
    case Primitive::tim: return tim(a[0], a[1], a[2], a[3], a[4], lang);
  }
  throw ContractError("unknown primitive");
}

// Candidate arguments read off the positions where the primitive keeps them.
std::optional<std::vector<Term>> extract(Primitive p, const std::vector<Formula>& hyps, const Formula& concl) {
  const Term& l = concl.lhs();
  const Term& r = concl.rhs();
  switch (p) {
    case Primitive::num:
    case Primitive::num_tilde:
    case Primitive::tab:
    case Primitive::tab_tilde:
      return std::vector<Term>{r};
    case Primitive::sim:
    case Primitive::sim_tilde:
      return std::vector<Term>{l, r};
    case Primitive::plus:
      return std::vector<Term>{hyps[0].rhs(), r, l};
    case Primitive::tim: {
      if (hyps.size() < 2 || !r.is_application() || !r.symbol().is_pairing()) return std::nullopt;
      const Term& yz = r.arg(0);
      if (!yz.is_application() || !yz.symbol().is_pairing()) return std::nullopt;
      return std::vector<Term>{hyps[1].rhs(), yz.arg(0), yz.arg(1), r.arg(1), l};
    }
  }
  return std::nullopt;
}

int case_of(Primitive p) {
  switch (p) {
    case Primitive::num:
    case Primitive::tab: return 0;
    case Primitive::num_tilde:
    case Primitive::tab_tilde: return 1;
    case Primitive::sim:
    case Primitive::sim_tilde: return 2;
    case Primitive::plus:
    case Primitive::tim: return 3;
  }
  return 3;
}

}  // namespace

std::string_view primitive_name(Primitive p) {
  static constexpr std::string_view names[] = {"Num", "Num~", "Sim", "Plus", "Tab", "Tab~", "Sim~", "Tim"};
  return names[static_cast<int>(p)];
}

std::optional<RecognizedConjunct> recognize(const Formula& f) {
  if (f.kind() != Formula::Kind::implication || f.right().kind() != Formula::Kind::equality) return std::nullopt;
  std::vector<Formula> hyps = flatten_conjunction(f.left());
  for (const Formula& h : hyps) {
    if (h.kind() != Formula::Kind::equality) return std::nullopt;
  }
  const Term& first = hyps.front().lhs();
  if (!first.is_application() || !first.symbol().is_special()) return std::nullopt;
  const unsigned lang = first.symbol().special_tag()->language;
  for (Primitive p : kPrimitives) {
    auto args = extract(p, hyps, f.right());
    if (args && build(p, *args, lang) == f) return RecognizedConjunct{p, lang, std::move(*args)};
  }
  return std::nullopt;
}

models::Diagnosis classify_failures(const Formula& instance, const Oracle& oracle) {
  const Oracle valid = oracle ? oracle : Oracle(qcheck::is_quasitautology);
  std::vector<std::pair<RecognizedConjunct, Formula>> parts;
  for (const Formula& c : flatten_conjunction(instance)) {
    auto r = recognize(c);
    if (!r) throw ContractError("not a primitive conjunct: " + to_string(c));
    if (!parts.empty() && parts.front().first.language != r->language) {
      throw ContractError("instance mixes languages");
    }
    parts.emplace_back(std::move(*r), c);
  }
  for (int stage = 0; stage < 4; ++stage) {
    for (const auto& [r, c] : parts) {
      if (case_of(r.kind) != stage || valid(c)) continue;
      models::Diagnosis d;
      d.language = r.language;
      d.failure = static_cast<models::FailureCase>(stage);
      d.conjunct = to_string(c);
      if (stage == 3) {
        d.m = numeral_of(r.args[0], special(SpecialBase::zero, r.language));
        if (!d.m) throw ContractError("arithmetic conjunct without a numeral first argument: " + d.conjunct);
      }
      return d;
    }
  }
  throw ContractError("every conjunct of the instance is valid");
}

}  // namespace hsk::arith
