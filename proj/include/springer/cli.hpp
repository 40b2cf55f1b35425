#pragma once

// Command dispatch and report rendering for the command-line front end.

#include "springer/rootsys.hpp"

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

namespace springer::cli {

inline constexpr const char* kSchemaVersion = "1.0";

enum class Status { ok, input_error, invariant_violation };

std::string status_name(Status s);
int exit_code(Status s);

struct CommandRequest {
  std::string command;
  /// "A3", or for conformance a range such as "A1-A6,E6" or "all".
  std::string type_rank;
  std::optional<std::string> J;
  std::optional<std::string> weight;
  std::optional<long> bound;
  std::optional<long> d;
  bool fundamental = false;
  unsigned threads = 1;
  /// Classical families above this rank are refused; exceptional types are always allowed.
  int max_classical_rank = 8;

  nlohmann::json echo() const;
};

struct ReportDocument {
  std::string schema_version = kSchemaVersion;
  nlohmann::json request;
  nlohmann::json payload;
  Status status = Status::ok;
  std::string message;

  nlohmann::json to_json() const;
};

const std::vector<std::string>& command_names();

/// Never throws for bad input: errors become input-error or
/// invariant-violation documents.
ReportDocument run(const CommandRequest& request);

/// "A1-A6,B2-B5" style ranges; "all" is A1-A6,B2-B5,C2-C5,D4-D7,E6,E7.
std::vector<RootSystemId> parse_type_range(const std::string& text);

ReportDocument conformance_sweep(const std::vector<RootSystemId>& ids, unsigned threads = 1);

std::string render_json(const ReportDocument& doc);
std::string render_text(const ReportDocument& doc);

} // namespace springer::cli
