#include "argex/io/envelope.hpp"

#include <json.hpp>

#include "argex/errors.hpp"

namespace argex::io {

using nlohmann::json;

namespace {

template <class T>
json optional_to_json(const std::optional<T>& v) {
  return v ? json(*v) : json(nullptr);
}

template <class T>
std::optional<T> optional_from_json(const json& j, const char* key) {
  const json& v = j.at(key);
  if (v.is_null()) return std::nullopt;
  return v.get<T>();
}

}  // namespace

void to_json(json& j, const QueryEcho& q) {
  j = json{{"command", q.command},
           {"input", q.input},
           {"kind", q.kind},
           {"fact", optional_to_json(q.fact)},
           {"foils", q.foils},
           {"auto_foil", q.auto_foil},
           {"direction", optional_to_json(q.direction)},
           {"presentation", optional_to_json(q.presentation)}};
}

void from_json(const json& j, QueryEcho& q) {
  j.at("command").get_to(q.command);
  j.at("input").get_to(q.input);
  j.at("kind").get_to(q.kind);
  q.fact = optional_from_json<std::string>(j, "fact");
  j.at("foils").get_to(q.foils);
  j.at("auto_foil").get_to(q.auto_foil);
  q.direction = optional_from_json<std::string>(j, "direction");
  q.presentation = optional_from_json<std::string>(j, "presentation");
}

void to_json(json& j, const StatusEntry& s) {
  j = json{{"subject", s.subject},
           {"concludable", s.concludable},
           {"skeptically_accepted", s.skeptically_accepted},
           {"credulously_accepted", s.credulously_accepted},
           {"skeptically_non_accepted", s.skeptically_non_accepted},
           {"credulously_non_accepted", s.credulously_non_accepted}};
}

void from_json(const json& j, StatusEntry& s) {
  j.at("subject").get_to(s.subject);
  j.at("concludable").get_to(s.concludable);
  j.at("skeptically_accepted").get_to(s.skeptically_accepted);
  j.at("credulously_accepted").get_to(s.credulously_accepted);
  j.at("skeptically_non_accepted").get_to(s.skeptically_non_accepted);
  j.at("credulously_non_accepted").get_to(s.credulously_non_accepted);
}

void to_json(json& j, const ArgumentRecord& a) {
  j = json{{"id", a.id},
           {"conclusion", a.conclusion},
           {"rule", optional_to_json(a.rule)},
           {"subarguments", a.subarguments},
           {"premises", a.premises}};
}

void from_json(const json& j, ArgumentRecord& a) {
  j.at("id").get_to(a.id);
  j.at("conclusion").get_to(a.conclusion);
  a.rule = optional_from_json<std::string>(j, "rule");
  j.at("subarguments").get_to(a.subarguments);
  j.at("premises").get_to(a.premises);
}

void to_json(json& j, const AttackRecord& a) {
  j = json{{"attacker", a.attacker}, {"target", a.target}, {"kind", a.kind}, {"on", a.on}};
}

void from_json(const json& j, AttackRecord& a) {
  j.at("attacker").get_to(a.attacker);
  j.at("target").get_to(a.target);
  j.at("kind").get_to(a.kind);
  j.at("on").get_to(a.on);
}

void to_json(json& j, const ViolationRecord& v) {
  j = json{{"condition", v.condition}, {"detail", v.detail}};
}

void from_json(const json& j, ViolationRecord& v) {
  j.at("condition").get_to(v.condition);
  j.at("detail").get_to(v.detail);
}

namespace {

struct PayloadWriter {
  json operator()(const std::monostate&) const { return nullptr; }
  json operator()(const ExtensionsResult& r) const {
    return {{"type", "extensions"}, {"extensions", r.extensions}};
  }
  json operator()(const StatusResult& r) const {
    return {{"type", "status"}, {"statuses", r.statuses}};
  }
  json operator()(const ExplanationResult& r) const {
    return {{"type", "explanation"},
            {"direction", r.direction},
            {"explanation", r.explanation},
            {"candidates", r.candidates}};
  }
  json operator()(const ContrastResult& r) const {
    json expl = r.pair ? json{{"fact_side", r.fact_side}, {"foil_side", r.foil_side}}
                       : json(r.common);
    return {{"type", "contrast"},
            {"direction", r.direction},
            {"foils", r.foils},
            {"form", r.pair ? "pair" : "common"},
            {"explanation", expl}};
  }
  json operator()(const FoilResult& r) const { return {{"type", "foil"}, {"foil", r.foil}}; }
  json operator()(const ArgumentsResult& r) const {
    return {{"type", "arguments"}, {"arguments", r.arguments}, {"attacks", r.attacks}};
  }
};

ResultPayload read_payload(const json& j) {
  if (j.is_null()) return std::monostate{};
  const auto type = j.at("type").get<std::string>();
  if (type == "extensions") return ExtensionsResult{j.at("extensions").get<std::vector<NameList>>()};
  if (type == "status") return StatusResult{j.at("statuses").get<std::vector<StatusEntry>>()};
  if (type == "explanation") {
    return ExplanationResult{j.at("direction").get<std::string>(),
                             j.at("explanation").get<NameList>(),
                             j.at("candidates").get<std::vector<NameList>>()};
  }
  if (type == "contrast") {
    ContrastResult r;
    j.at("direction").get_to(r.direction);
    j.at("foils").get_to(r.foils);
    const auto form = j.at("form").get<std::string>();
    if (form != "pair" && form != "common") throw InputError("unknown contrast form '" + form + "'");
    r.pair = form == "pair";
    const json& expl = j.at("explanation");
    if (r.pair) {
      expl.at("fact_side").get_to(r.fact_side);
      expl.at("foil_side").get_to(r.foil_side);
    } else {
      expl.get_to(r.common);
    }
    return r;
  }
  if (type == "foil") return FoilResult{j.at("foil").get<NameList>()};
  if (type == "arguments") {
    return ArgumentsResult{j.at("arguments").get<std::vector<ArgumentRecord>>(),
                           j.at("attacks").get<std::vector<AttackRecord>>()};
  }
  throw InputError("unknown result type '" + type + "'");
}

}  // namespace

std::string serialize(const QueryResultEnvelope& env) {
  json j{{"query", env.query},
         {"semantics", optional_to_json(env.semantics)},
         {"strategy", optional_to_json(env.strategy)},
         {"result", std::visit(PayloadWriter{}, env.result)},
         {"applicability", optional_to_json(env.applicability)},
         {"error", optional_to_json(env.error)}};
  return j.dump(2) + "\n";
}

QueryResultEnvelope deserialize(std::string_view text) {
  try {
    const json j = json::parse(text);
    QueryResultEnvelope env;
    j.at("query").get_to(env.query);
    env.semantics = optional_from_json<std::string>(j, "semantics");
    env.strategy = optional_from_json<std::string>(j, "strategy");
    env.result = read_payload(j.at("result"));
    env.applicability = optional_from_json<std::vector<ViolationRecord>>(j, "applicability");
    env.error = optional_from_json<std::string>(j, "error");
    return env;
  } catch (const json::exception& e) {
    throw InputError(std::string("malformed result document: ") + e.what());
  }
}

}  // namespace argex::io
