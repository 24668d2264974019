#include "argex/io/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <variant>

#include "argex/aspic/formula.hpp"
#include "argex/contrastive.hpp"
#include "argex/errors.hpp"
#include "argex/explanations.hpp"
#include "argex/io/apx.hpp"
#include "argex/io/envelope.hpp"
#include "argex/io/theory_format.hpp"

namespace argex::io {

namespace {

using aspic::Literal;
using aspic::LiteralSet;
using aspic::PresentedSet;
using aspic::StructuredEvaluation;
using aspic::StructuredFramework;

struct Options {
  std::string input;
  std::string kind;
  std::string semantics = "preferred";
  std::string strategy = "skeptical";
  std::optional<std::string> fact;
  std::vector<std::string> foils;
  bool auto_foil = false;
  std::optional<std::string> direction;
  std::string presentation = "id";
  std::string format = "text";
};

std::string braces(const NameList& names) {
  std::string out = "{";
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (i > 0) out += ",";
    out += names[i];
  }
  return out + "}";
}

NameList names_of(const Framework& af, const ArgSet& s) { return af.names_of(s); }

NameList names_of(const PresentedSet& s) { return s.items(); }

NameList names_of(const LiteralSet& s) {
  NameList out;
  for (const auto& l : s) out.push_back(l.to_string());
  return out;
}

StatusEntry entry(std::string subject, const AcceptanceStatus& st) {
  return {std::move(subject), true, st.skeptically_accepted, st.credulously_accepted,
          st.skeptically_non_accepted, st.credulously_non_accepted};
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::string detect_kind(const Options& o) {
  if (!o.kind.empty()) return o.kind;
  const auto ext = std::filesystem::path(o.input).extension().string();
  if (ext == ".apx") return "af";
  if (ext == ".thy") return "theory";
  throw InputError("cannot tell the kind of '" + o.input + "' from its extension; use --kind");
}

class Query {
 public:
  Query(std::string command, Options o, std::ostream& out, std::ostream& err)
      : command_(std::move(command)), o_(std::move(o)), out_(out), err_(err) {
    env_.query = {command_, o_.input, "", o_.fact, o_.foils, o_.auto_foil, o_.direction,
                  std::nullopt};
  }

  int run() {
    env_.query.kind = detect_kind(o_);
    const std::string text = read_file(o_.input);
    sem_ = *parse_semantics(o_.semantics);
    strategy_ = *parse_strategy(o_.strategy);
    if (env_.query.kind == "af") {
      af_ = parse_af(text);
    } else {
      theory_ = StructuredFramework::derive(parse_theory(text));
      if (command_ == "explain" || command_ == "contrast") env_.query.presentation = o_.presentation;
    }
    if (command_ != "foil" && command_ != "arguments") {
      env_.semantics = o_.semantics;
      env_.strategy = o_.strategy;
    }
    try {
      dispatch();
    } catch (const ApplicabilityError& e) {
      record(e.report());
      env_.error = e.what();
      emit_failure(e.report());
      return kExitPreconditionError;
    } catch (const PreconditionError& e) {
      env_.error = e.what();
      emit_failure(std::nullopt);
      return kExitPreconditionError;
    }
    emit();
    return kExitOk;
  }

 private:
  void dispatch() {
    if (command_ == "extensions") return extensions();
    if (command_ == "status") return status();
    if (command_ == "explain") return explain();
    if (command_ == "contrast") return contrast();
    if (command_ == "foil") return foil();
    return arguments();
  }

  const Framework& framework() const { return af_ ? *af_ : theory_->framework(); }

  const Evaluation& evaluation() {
    if (af_) {
      if (!eval_) eval_.emplace(*af_, sem_);
      return *eval_;
    }
    return structured().evaluation();
  }

  const StructuredEvaluation& structured() {
    if (!seval_) seval_.emplace(*theory_, sem_);
    return *seval_;
  }

  std::string require_fact() const {
    if (!o_.fact) throw InputError(command_ + " requires --fact");
    return *o_.fact;
  }

  Literal literal(const std::string& text) const {
    try {
      return parse_literal(text);
    } catch (const ParseError& e) {
      throw InputError("invalid literal '" + text + "': " + e.what());
    }
  }

  aspic::Presentation presentation() const { return *aspic::parse_presentation(o_.presentation); }

  void extensions() {
    ExtensionsResult r;
    for (const auto& e : evaluation().extensions()) r.extensions.push_back(names_of(framework(), e));
    env_.result = std::move(r);
  }

  void status() {
    StatusResult r;
    if (af_) {
      const Evaluation& eval = evaluation();
      if (o_.fact) {
        r.statuses.push_back(entry(*o_.fact, eval.status(af_->index(*o_.fact))));
      } else {
        for (ArgIndex a = 0; a < af_->size(); ++a) r.statuses.push_back(entry(af_->name(a), eval.status(a)));
      }
    } else {
      std::vector<Literal> subjects;
      if (o_.fact) {
        subjects.push_back(literal(*o_.fact));
      } else {
        subjects = theory_->conclusions().items();
      }
      for (const auto& l : subjects) {
        if (auto st = aspic::formula_status(structured(), l)) {
          r.statuses.push_back(entry(l.to_string(), *st));
        } else {
          r.statuses.push_back({l.to_string(), false, false, false, false, false});
        }
      }
    }
    env_.result = std::move(r);
  }

  template <class Accepted>
  Direction explain_direction(Accepted accepted) {
    if (o_.direction) return *o_.direction == "acc" ? Direction::Acceptance : Direction::NonAcceptance;
    const Direction d = accepted() ? Direction::Acceptance : Direction::NonAcceptance;
    env_.query.direction = std::string(to_string(d));
    return d;
  }

  void explain() {
    const std::string fact = require_fact();
    ExplanationResult r;
    if (af_) {
      const ArgIndex a = af_->index(fact);
      const Evaluation& eval = evaluation();
      const Direction d = explain_direction([&] { return eval.status(a).accepted(strategy_); });
      r.direction = std::string(to_string(d));
      if (d == Direction::Acceptance) {
        const auto e = acc_explanation(eval, strategy_, a);
        r.explanation = names_of(*af_, chosen(e));
        if (strategy_ == Strategy::Credulous) {
          for (const auto& alt : alternatives(e)) r.candidates.push_back(names_of(*af_, alt));
          r.candidates.erase(std::unique(r.candidates.begin(), r.candidates.end()), r.candidates.end());
        }
      } else {
        r.explanation = names_of(*af_, nonacc_explanation(eval, strategy_, a));
      }
    } else {
      const Literal phi = literal(fact);
      const auto& se = structured();
      const Direction d = explain_direction([&] {
        const auto st = aspic::formula_status(se, phi);
        if (!st) throw PreconditionError("no argument concludes '" + phi.to_string() + "'");
        return st->accepted(strategy_);
      });
      r.direction = std::string(to_string(d));
      if (d == Direction::Acceptance) {
        const auto e = aspic::formula_acc_explanation(se, strategy_, phi, presentation());
        r.explanation = names_of(aspic::chosen(e));
        if (strategy_ == Strategy::Credulous) {
          for (const auto& alt : aspic::alternatives(e)) r.candidates.push_back(names_of(alt));
        }
      } else {
        r.explanation = names_of(aspic::formula_nonacc_explanation(se, strategy_, phi, presentation()));
      }
    }
    env_.result = std::move(r);
  }

  void contrast() {
    const std::string fact = require_fact();
    if (o_.auto_foil == !o_.foils.empty()) {
      throw InputError("contrast requires either --foil or --auto-foil");
    }
    const Direction d = o_.direction && *o_.direction == "nonacc" ? Direction::NonAcceptance
                                                                 : Direction::Acceptance;
    env_.query.direction = std::string(to_string(d));
    ContrastResult r;
    r.direction = std::string(to_string(d));
    if (af_) {
      const ArgIndex a = af_->index(fact);
      ArgSet foils;
      if (o_.auto_foil) {
        foils = derive_foil(*af_, a);
        if (foils.empty()) throw PreconditionError("'" + fact + "' has no attackers, so no foil can be derived");
      } else {
        foils = af_->set_of(o_.foils);
      }
      r.foils = names_of(*af_, foils);
      const Evaluation& eval = evaluation();
      const auto c = d == Direction::Acceptance ? cont_acc(eval, strategy_, a, foils)
                                                : cont_nonacc(eval, strategy_, a, foils);
      fill(r, c.kind, names_of(*af_, c.common), names_of(*af_, c.fact_side), names_of(*af_, c.foil_side));
    } else {
      const Literal phi = literal(fact);
      LiteralSet foils;
      if (o_.auto_foil) {
        foils = aspic::formula_foil(*theory_, phi);
        if (foils.empty()) {
          throw PreconditionError("no argument concludes the negation of '" + phi.to_string() +
                                  "', so no foil can be derived");
        }
      } else {
        for (const auto& f : o_.foils) foils.insert(literal(f));
      }
      r.foils = names_of(foils);
      const auto c = aspic::formula_contrastive(structured(), strategy_, phi, foils, d, presentation());
      fill(r, c.kind, names_of(c.common), names_of(c.fact_side), names_of(c.foil_side));
    }
    env_.applicability = std::vector<ViolationRecord>{};
    env_.result = std::move(r);
  }

  static void fill(ContrastResult& r, ContrastKind kind, NameList common, NameList fact_side,
                   NameList foil_side) {
    r.pair = kind == ContrastKind::Pair;
    if (r.pair) {
      r.fact_side = std::move(fact_side);
      r.foil_side = std::move(foil_side);
    } else {
      r.common = std::move(common);
    }
  }

  void foil() {
    const std::string fact = require_fact();
    FoilResult r;
    if (af_) {
      r.foil = names_of(*af_, derive_foil(*af_, af_->index(fact)));
    } else {
      r.foil = names_of(aspic::formula_foil(*theory_, literal(fact)));
    }
    env_.result = std::move(r);
  }

  void arguments() {
    if (!theory_) throw InputError("arguments requires a theory input");
    const auto& args = theory_->arguments();
    ArgumentsResult r;
    for (const auto& a : args) {
      ArgumentRecord rec{a.id, a.conclusion.to_string(), std::nullopt, {}, names_of(a.premises)};
      if (a.top_rule) rec.rule = theory_->theory().rules[*a.top_rule].name;
      for (std::size_t s : a.direct_subs) rec.subarguments.push_back(args[s].id);
      r.arguments.push_back(std::move(rec));
    }
    for (const auto& at : theory_->attacks()) {
      r.attacks.push_back({args[at.attacker].id, args[at.target].id, std::string(aspic::to_string(at.kind)),
                           at.on_argument ? args[*at.on_argument].id : at.on_premise->to_string()});
    }
    env_.result = std::move(r);
  }

  void record(const ApplicabilityReport& report) {
    std::vector<ViolationRecord> v;
    for (const auto& x : report.violations) v.push_back({std::string(to_string(x.condition)), x.detail});
    env_.applicability = std::move(v);
  }

  void emit_failure(const std::optional<ApplicabilityReport>& report) {
    env_.result = std::monostate{};
    err_ << "error: " << *env_.error << "\n";
    if (o_.format == "json") {
      out_ << serialize(env_);
      return;
    }
    if (report) {
      out_ << "not applicable:\n";
      for (const auto& v : report->violations) {
        out_ << "  " << to_string(v.condition) << ": " << v.detail << "\n";
      }
    }
  }

  void emit() {
    if (o_.format == "json") {
      out_ << serialize(env_);
      return;
    }
    std::visit([this](const auto& r) { text(r); }, env_.result);
  }

  void text(const std::monostate&) {}

  void text(const ExtensionsResult& r) {
    if (r.extensions.empty()) out_ << "no extensions\n";
    for (const auto& e : r.extensions) out_ << braces(e) << "\n";
  }

  void text(const StatusResult& r) {
    for (const auto& s : r.statuses) {
      out_ << s.subject << ": ";
      if (!s.concludable) {
        out_ << "not concluded\n";
        continue;
      }
      out_ << "skeptically " << (s.skeptically_accepted ? "accepted" : "non-accepted")
           << ", credulously " << (s.credulously_accepted ? "accepted" : "non-accepted") << "\n";
    }
  }

  void text(const ExplanationResult& r) {
    out_ << braces(r.explanation) << "\n";
    if (r.candidates.size() > 1) {
      out_ << "candidates:";
      for (const auto& c : r.candidates) out_ << " " << braces(c);
      out_ << "\n";
    }
  }

  void text(const ContrastResult& r) {
    if (r.pair) {
      out_ << "<" << braces(r.fact_side) << ", " << braces(r.foil_side) << ">\n";
    } else {
      out_ << braces(r.common) << "\n";
    }
  }

  void text(const FoilResult& r) { out_ << braces(r.foil) << "\n"; }

  void text(const ArgumentsResult& r) {
    for (const auto& a : r.arguments) {
      out_ << a.id << ": ";
      if (!a.rule) {
        out_ << a.conclusion << "\n";
        continue;
      }
      const auto* rule = theory_->theory().find_rule(*a.rule);
      for (std::size_t i = 0; i < a.subarguments.size(); ++i) {
        out_ << (i > 0 ? ", " : "") << a.subarguments[i];
      }
      out_ << (rule->defeasible() ? " => " : " -> ") << a.conclusion << "  [" << *a.rule << "]\n";
    }
    out_ << "attacks:\n";
    for (const auto& at : r.attacks) {
      out_ << "  " << at.attacker << " " << at.kind << " " << at.target << " on " << at.on << "\n";
    }
  }

  std::string command_;
  Options o_;
  std::ostream& out_;
  std::ostream& err_;
  QueryResultEnvelope env_;
  Semantics sem_ = Semantics::Preferred;
  Strategy strategy_ = Strategy::Skeptical;
  std::optional<Framework> af_;
  std::optional<StructuredFramework> theory_;
  std::optional<Evaluation> eval_;
  std::optional<StructuredEvaluation> seval_;
};

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Extensions and explanations for abstract and structured argumentation", "argex"};
  app.require_subcommand(1);
  Options o;

  const std::vector<std::string> semantics{"admissible", "complete", "grounded",
                                           "preferred",  "semi-stable", "stable"};
  auto input = [&](CLI::App* sub) {
    sub->add_option("--input", o.input, "AF (.apx) or theory (.thy) file")->required();
    sub->add_option("--kind", o.kind, "Override the input kind")->check(CLI::IsMember({"af", "theory"}));
    sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "json"}));
  };
  auto evaluated = [&](CLI::App* sub) {
    sub->add_option("--semantics", o.semantics, "Semantics (default preferred)")->check(CLI::IsMember(semantics));
    sub->add_option("--strategy", o.strategy, "Acceptance strategy (default skeptical)")
        ->check(CLI::IsMember({"skeptical", "credulous"}));
  };
  auto fact = [&](CLI::App* sub, bool required) {
    auto* opt = sub->add_option("--fact", o.fact, "Argument id, or literal for theories");
    if (required) opt->required();
  };
  auto direction = [&](CLI::App* sub) {
    sub->add_option("--direction", o.direction, "acc or nonacc")->check(CLI::IsMember({"acc", "nonacc"}));
  };
  auto presentation = [&](CLI::App* sub) {
    sub->add_option("--presentation", o.presentation, "Theories: id or prem (default id)")
        ->check(CLI::IsMember({"id", "prem"}));
  };

  auto* ext = app.add_subcommand("extensions", "List the extensions");
  input(ext);
  evaluated(ext);
  auto* status = app.add_subcommand("status", "Acceptance status of one or all items");
  input(status);
  evaluated(status);
  fact(status, false);
  auto* explain = app.add_subcommand("explain", "Why an item is (not) accepted");
  input(explain);
  evaluated(explain);
  fact(explain, true);
  direction(explain);
  presentation(explain);
  auto* contrast = app.add_subcommand("contrast", "Why the fact rather than the foils");
  input(contrast);
  evaluated(contrast);
  fact(contrast, true);
  contrast->add_option("--foil", o.foils, "Foil (repeatable)");
  contrast->add_flag("--auto-foil", o.auto_foil, "Derive the foil from the attack relation");
  direction(contrast);
  presentation(contrast);
  auto* foil = app.add_subcommand("foil", "The foil derived for an item");
  input(foil);
  fact(foil, true);
  auto* arguments = app.add_subcommand("arguments", "Arguments and attacks of a theory");
  input(arguments);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    if (code == 0) return kExitOk;
    err << app.help();
    return kExitInputError;
  }

  const std::string command = app.get_subcommands().front()->get_name();
  try {
    return Query(command, o, out, err).run();
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const PreconditionError& e) {
    err << "error: " << e.what() << "\n";
    return kExitPreconditionError;
  }
}

}  // namespace argex::io
