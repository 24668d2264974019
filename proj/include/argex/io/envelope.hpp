#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace argex::io {

using NameList = std::vector<std::string>;

/// The request as the CLI understood it.
struct QueryEcho {
  std::string command;
  std::string input;
  std::string kind;
  std::optional<std::string> fact;
  NameList foils;
  bool auto_foil = false;
  std::optional<std::string> direction;
  std::optional<std::string> presentation;

  friend bool operator==(const QueryEcho&, const QueryEcho&) = default;
};

struct ExtensionsResult {
  std::vector<NameList> extensions;

  friend bool operator==(const ExtensionsResult&, const ExtensionsResult&) = default;
};

struct StatusEntry {
  std::string subject;
  bool concludable = true;
  bool skeptically_accepted = false;
  bool credulously_accepted = false;
  bool skeptically_non_accepted = false;
  bool credulously_non_accepted = false;

  friend bool operator==(const StatusEntry&, const StatusEntry&) = default;
};

struct StatusResult {
  std::vector<StatusEntry> statuses;

  friend bool operator==(const StatusResult&, const StatusResult&) = default;
};

struct ExplanationResult {
  std::string direction;
  NameList explanation;
  /// Every credulous acceptance explanation in canonical order; empty when
  /// the explanation is unique.
  std::vector<NameList> candidates;

  friend bool operator==(const ExplanationResult&, const ExplanationResult&) = default;
};

struct ContrastResult {
  std::string direction;
  NameList foils;
  bool pair = false;
  NameList common;
  NameList fact_side;
  NameList foil_side;

  friend bool operator==(const ContrastResult&, const ContrastResult&) = default;
};

struct FoilResult {
  NameList foil;

  friend bool operator==(const FoilResult&, const FoilResult&) = default;
};

struct ArgumentRecord {
  std::string id;
  std::string conclusion;
  std::optional<std::string> rule;
  NameList subarguments;
  NameList premises;

  friend bool operator==(const ArgumentRecord&, const ArgumentRecord&) = default;
};

struct AttackRecord {
  std::string attacker;
  std::string target;
  std::string kind;
  std::string on;

  friend bool operator==(const AttackRecord&, const AttackRecord&) = default;
};

struct ArgumentsResult {
  std::vector<ArgumentRecord> arguments;
  std::vector<AttackRecord> attacks;

  friend bool operator==(const ArgumentsResult&, const ArgumentsResult&) = default;
};

using ResultPayload = std::variant<std::monostate, ExtensionsResult, StatusResult,
                                   ExplanationResult, ContrastResult, FoilResult, ArgumentsResult>;

struct ViolationRecord {
  std::string condition;
  std::string detail;

  friend bool operator==(const ViolationRecord&, const ViolationRecord&) = default;
};

/// Machine-readable answer to one query. `applicability` is present for
/// contrastive queries only; `error` is set when the query failed its
/// precondition.
struct QueryResultEnvelope {
  QueryEcho query;
  std::optional<std::string> semantics;
  std::optional<std::string> strategy;
  ResultPayload result;
  std::optional<std::vector<ViolationRecord>> applicability;
  std::optional<std::string> error;

  friend bool operator==(const QueryResultEnvelope&, const QueryResultEnvelope&) = default;
};

/// JSON with sorted keys and a trailing newline. Identical envelopes give
/// identical text.
[[nodiscard]] std::string serialize(const QueryResultEnvelope& env);

/// Inverse of serialize. Throws InputError on malformed documents.
[[nodiscard]] QueryResultEnvelope deserialize(std::string_view text);

}  // namespace argex::io
