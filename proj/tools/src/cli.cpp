#include "hsk_cli/cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <sstream>

#include "hsk/arith/classify.hpp"
#include "hsk/arith/diophantine.hpp"
#include "hsk/arith/pc_formula.hpp"
#include "hsk/error.hpp"
#include "hsk/models/structure.hpp"
#include "hsk/qcheck/quasitautology.hpp"
#include "hsk/skeleton/skeleton.hpp"
#include "hsk/sreu/sreu.hpp"
#include "hsk/syntax/signature.hpp"
#include "hsk/syntax/text.hpp"

namespace hsk::cli {

namespace {

using Fields = std::vector<std::pair<std::string, std::string>>;

// Collects output in either the human-readable or the record form.
class Output {
 public:
  explicit Output(Format format) : format_(format) {}

  void text(const std::string& line) {
    if (format_ == Format::text) out_ << line << '\n';
  }
  void record(const Fields& fields) {
    if (format_ != Format::records) return;
    for (std::size_t i = 0; i < fields.size(); ++i) {
      if (i) out_ << '\t';
      out_ << fields[i].first << '=' << fields[i].second;
    }
    out_ << '\n';
  }
  std::string str() const { return out_.str(); }

 private:
  Format format_;
  std::ostringstream out_;
};

std::string diagnostic(bool color, const std::string& message) {
  return (color ? "\x1b[1;31merror\x1b[0m: " : "error: ") + message + "\n";
}

std::string witness(const Substitution& sol, const std::vector<Term>& unknowns, const char* sep) {
  std::string out;
  for (std::size_t i = 0; i < unknowns.size(); ++i) {
    if (i) out += sep;
    out += to_string(unknowns[i]) + " := " + to_string(*sol.lookup(unknowns[i]));
  }
  return out;
}

std::string j_form(const models::Natural& v) {
  if (auto jk = models::unpair(v)) return "J(" + models::to_string(jk->first) + "," + models::to_string(jk->second) + ")";
  return models::to_string(v);
}

// NAT or J(e,e) with nested J allowed.
class AlphaValueParser {
 public:
  explicit AlphaValueParser(std::string_view s) : s_(s) {}
  models::Natural parse() {
    models::Natural v = value();
    if (pos_ != s_.size()) throw ContractError("bad alpha value: " + std::string(s_));
    return v;
  }

 private:
  models::Natural value() {
    if (pos_ < s_.size() && s_[pos_] == 'J') {
      ++pos_;
      expect('(');
      models::Natural j = value();
      expect(',');
      models::Natural k = value();
      expect(')');
      return models::pairing_J(j, k);
    }
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) throw ContractError("bad alpha value: " + std::string(s_));
    return models::Natural(std::string(s_.substr(start, pos_ - start)));
  }
  void expect(char c) {
    while (pos_ < s_.size() && s_[pos_] == ' ') ++pos_;
    if (pos_ >= s_.size() || s_[pos_] != c) throw ContractError("bad alpha value: " + std::string(s_));
    ++pos_;
    while (pos_ < s_.size() && s_[pos_] == ' ') ++pos_;
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

models::AlphaAssignment parse_alpha(const std::vector<std::string>& bindings) {
  models::AlphaAssignment alpha;
  for (const std::string& b : bindings) {
    auto eq = b.find('=');
    if (eq == std::string::npos) throw ContractError("alpha binding needs name=value: " + b);
    alpha.set(FunctionSymbol(b.substr(0, eq), 0), AlphaValueParser(std::string_view(b).substr(eq + 1)).parse());
  }
  return alpha;
}

skeleton::Skeleton skeleton_of(const RunConfig& config, std::string_view input) {
  return skeleton::make_skeleton(skeleton::ExistentialFormula::from_formula(parse_formula(input)), config.n);
}

int cmd_check(const RunConfig&, std::string_view input, Output& out) {
  const bool ok = qcheck::is_quasitautology(parse_formula(input));
  out.text(ok ? "QUASITAUTOLOGY" : "NOT A QUASITAUTOLOGY");
  out.record({{"verdict", ok ? "quasitautology" : "not-quasitautology"}});
  return ok ? 0 : 1;
}

int cmd_skeleton(const RunConfig& config, std::string_view input, Output& out) {
  const std::string text = to_string(skeleton_of(config, input).formula);
  out.text(text);
  out.record({{"formula", text}});
  return 0;
}

int cmd_solve(const RunConfig& config, std::string_view input, Output& out) {
  const auto sk = skeleton_of(config, input);
  const auto sol = skeleton::solve_bounded(sk, config.max_size, {config.threads});
  const std::string bound = std::to_string(config.max_size);
  if (!sol) {
    out.text("NO SOLUTION WITHIN BOUND " + bound);
    out.record({{"verdict", "no-solution"}, {"bound", bound}});
    return 1;
  }
  out.text("SOLUTION");
  out.text(witness(*sol, sk.unknowns(), "\n"));
  out.record({{"verdict", "solved"}, {"witness", witness(*sol, sk.unknowns(), "; ")}});
  return 0;
}

int cmd_sreu(const RunConfig& config, std::string_view input, Output& out) {
  Formula f = parse_formula(input);
  if (f.kind() == Formula::Kind::exists) f = skeleton_of(config, input).formula;
  const auto problems = sreu::convert_to_sreu(f);
  if (problems.empty()) {
    out.text("NO SREU PROBLEMS");
    out.record({{"verdict", "no-problems"}});
    return 1;
  }
  std::string listing = sreu::format_problems(problems);
  if (!listing.empty() && listing.back() == '\n') listing.pop_back();
  out.text(listing);
  for (std::size_t i = 0; i < problems.size(); ++i) {
    const auto& cs = problems[i].constraints;
    for (std::size_t j = 0; j < cs.size(); ++j) {
      out.record({{"problem_index", std::to_string(i + 1)},
                  {"constraint", std::to_string(j + 1)},
                  {"text", to_string(cs[j].to_formula())}});
    }
  }
  if (!config.solve) return 0;

  bool any = false;
  const std::string bound = std::to_string(config.max_size);
  for (std::size_t i = 0; i < problems.size(); ++i) {
    Signature sig = signature_of(f);
    sig.merge(signature_of(problems[i].to_formula()));
    const auto sol = sreu::solve_sreu_bounded(problems[i], sig, config.max_size, {config.threads});
    const std::string index = std::to_string(i + 1);
    if (sol) {
      any = true;
      const auto unknowns = problems[i].unknowns();
      out.text("problem " + index + ": SOLVED " + witness(*sol, unknowns, "; "));
      out.record({{"problem_index", index}, {"verdict", "solved"}, {"witness", witness(*sol, unknowns, "; ")}});
    } else {
      out.text("problem " + index + ": NO SOLUTION WITHIN BOUND " + bound);
      out.record({{"problem_index", index}, {"verdict", "no-solution"}, {"bound", bound}});
    }
  }
  return any ? 0 : 1;
}

int cmd_encode(const RunConfig& config, std::string_view input, Output& out) {
  const auto psi = arith::parse_diophantine(input);
  const auto vars = psi.variables();
  std::optional<Term> x;
  if (config.var) {
    x = Term::variable(*config.var, VariableKind::numeric);
    if (std::find(vars.begin(), vars.end(), *x) == vars.end()) {
      throw ContractError("?" + *config.var + " does not occur in the diophantine formula");
    }
  } else if (!vars.empty()) {
    x = vars.front();
  }
  Formula result = [&] {
    if (x) return arith::reduction_f(psi, *x, config.m.value_or(0), config.n).to_formula();
    const auto phi = arith::associate(psi);
    if (config.n == 1) return skeleton::ExistentialFormula(phi.table_vars(), phi.formula()).to_formula();
    const auto assigned = arith::assign_n(phi, config.n);
    return skeleton::ExistentialFormula(assigned.variables(), assigned.formula()).to_formula();
  }();
  const std::string text = to_string(result);
  out.text(text);
  out.record({{"formula", text}});
  return 0;
}

int cmd_eval(const RunConfig& config, std::string_view input, Output& out) {
  const Formula f = parse_formula(input);
  if (config.structure != "m-alpha" && !config.alpha.empty()) {
    throw ContractError("--alpha only applies to --structure m-alpha");
  }
  const models::Structure m = config.structure == "table"     ? models::table_structure()
                              : config.structure == "m-alpha" ? models::m_alpha(parse_alpha(config.alpha))
                                                              : models::two_point_structure();
  const bool ok = models::holds(m, f);
  out.text(ok ? "TRUE" : "FALSE");
  out.record({{"verdict", ok ? "true" : "false"}, {"structure", config.structure}});
  return ok ? 0 : 1;
}

int cmd_countermodel(const RunConfig&, std::string_view input, Output& out) {
  const Formula f = parse_formula(input);
  const auto disjuncts = flatten_disjunction(f);
  std::vector<models::Diagnosis> diagnoses;
  for (std::size_t i = 0; i < disjuncts.size(); ++i) {
    const std::string index = std::to_string(i + 1);
    if (qcheck::is_quasitautology(disjuncts[i])) {
      out.text("disjunct " + index + ": VALID");
      out.text("NO COUNTERMODEL");
      out.record({{"disjunct", index}, {"verdict", "valid"}});
      return 1;
    }
    auto d = arith::classify_failures(disjuncts[i]);
    std::string line = "disjunct " + index + ": language " + std::to_string(d.language) + ", case (" +
                       std::string(models::failure_case_name(d.failure)) + ")";
    if (d.m) line += ", m = " + std::to_string(*d.m);
    out.text(line + ", failing " + d.conjunct);
    Fields rec{{"disjunct", index},
               {"language", std::to_string(d.language)},
               {"case", std::string(models::failure_case_name(d.failure))}};
    if (d.m) rec.emplace_back("m", std::to_string(*d.m));
    rec.emplace_back("conjunct", d.conjunct);
    out.record(rec);
    diagnoses.push_back(std::move(d));
  }
  const auto alpha = models::construct_alpha(diagnoses);
  out.text("alpha:");
  for (const auto& [sym, v] : alpha.entries()) {
    out.text("  " + sym.name() + " = " + j_form(v));
    out.record({{"alpha", sym.name() + "=" + j_form(v)}});
  }
  const auto m = models::m_alpha(alpha);
  const bool falsified =
      std::none_of(disjuncts.begin(), disjuncts.end(), [&](const Formula& d) { return models::holds(m, d); });
  out.text(falsified ? "FALSIFIED" : "NOT FALSIFIED");
  out.record({{"verdict", falsified ? "falsified" : "not-falsified"}});
  return falsified ? 0 : 1;
}

}  // namespace

ParsedArgs parse_args(int argc, const char* const* argv) {
  RunConfig config;
  if (const char* c = std::getenv("HSK_COLOR")) config.color = std::string(c) == "1";

  CLI::App app{"Herbrand skeleton toolkit", "hsk"};
  app.require_subcommand(1);
  std::map<std::string, Format> formats{{"text", Format::text}, {"records", Format::records}};
  std::string dioph;

  auto common = [&](CLI::App* sub) {
    sub->add_option("file", config.input, "input file, - for standard input");
    sub->add_option("--format", config.format, "text or records")
        ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case))
        ->option_text("text|records");
  };
  auto copies = [&](CLI::App* sub) {
    sub->add_option("-n", config.n, "skeleton size")->check(CLI::PositiveNumber);
  };
  auto search = [&](CLI::App* sub) {
    sub->add_option("--max-size", config.max_size, "largest term size tried");
    sub->add_option("--threads", config.threads, "search threads")->check(CLI::PositiveNumber);
  };

  auto* check = app.add_subcommand("check", "decide whether a ground formula is a quasitautology");
  common(check);
  auto* skel = app.add_subcommand("skeleton", "print the n-skeleton of an existential formula");
  common(skel);
  copies(skel);
  auto* solve = app.add_subcommand("solve", "search for a solution of the n-skeleton");
  common(solve);
  copies(solve);
  search(solve);
  auto* sreu = app.add_subcommand("sreu", "convert to simultaneous rigid E-unification problems");
  common(sreu);
  copies(sreu);
  search(sreu);
  sreu->add_flag("--solve", config.solve, "also search each problem");
  auto* encode = app.add_subcommand("encode", "encode a diophantine system as an existential formula");
  common(encode);
  copies(encode);
  encode->add_option("--dioph", dioph, "diophantine input file");
  encode->add_option("-m", config.m, "numeral substituted for the distinguished variable");
  encode->add_option("--var", config.var, "distinguished variable (default: first one)");
  auto* eval = app.add_subcommand("eval", "evaluate a ground formula in a structure");
  common(eval);
  eval->add_option("--structure", config.structure, "two-point, table or m-alpha")
      ->check(CLI::IsMember({"two-point", "table", "m-alpha"}));
  eval->add_option("--alpha", config.alpha, "special constant binding name=NAT or name=J(j,k); repeatable")
      ->allow_extra_args(false);
  auto* counter = app.add_subcommand("countermodel", "falsify a disjunction of failing variant instances");
  common(counter);

  ParsedArgs result;
  std::ostringstream out, err;
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    result.early = {code == 0 ? 0 : 2, out.str(), err.str()};
    return result;
  }
  config.command = app.get_subcommands().front()->get_name();
  if (!dioph.empty()) config.input = dioph;
  result.config = config;
  return result;
}

RunResult run(const RunConfig& config, std::string_view input) {
  Output out(config.format);
  RunResult result;
  try {
    if (config.command == "check") result.status = cmd_check(config, input, out);
    else if (config.command == "skeleton") result.status = cmd_skeleton(config, input, out);
    else if (config.command == "solve") result.status = cmd_solve(config, input, out);
    else if (config.command == "sreu") result.status = cmd_sreu(config, input, out);
    else if (config.command == "encode") result.status = cmd_encode(config, input, out);
    else if (config.command == "eval") result.status = cmd_eval(config, input, out);
    else if (config.command == "countermodel") result.status = cmd_countermodel(config, input, out);
    else throw ContractError("unknown command " + config.command);
  } catch (const ParseError& e) {
    return {2, "", diagnostic(config.color, std::string("parse error at ") + e.what())};
  } catch (const Error& e) {
    return {2, "", diagnostic(config.color, e.what())};
  }
  result.out = out.str();
  return result;
}

}  // namespace hsk::cli
