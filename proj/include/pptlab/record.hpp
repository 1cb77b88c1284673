#ifndef PPTLAB_RECORD_HPP
#define PPTLAB_RECORD_HPP

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "pptlab/context.hpp"

namespace pptlab {

using json = nlohmann::json;

inline constexpr const char* kToolName = "pptlab";
inline constexpr int kSchemaVersion = 1;
inline constexpr unsigned kDefaultDepth = 8;
inline constexpr unsigned kMaxDepth = 24;
inline constexpr unsigned kDefaultEmax = 5;

const char* version();

enum class Command { Sequence, Ppt, Classify, QfsHeight, Fpt, Criteria, Corpus };

std::optional<Command> parse_command(const std::string& name);
const char* to_string(Command c);

struct Request {
  Command command = Command::Sequence;
  unsigned p = 0;
  std::string vars;  // "x,y" or "x1..x5"
  std::string f;
  unsigned depth = kDefaultDepth;
  unsigned emax = kDefaultEmax;
  bool json = false;
  bool trace = false;
  bool strict_r1 = false;
  Limits limits;
  std::string filter;                    // corpus only
  std::optional<std::string> cache_dir;  // falls back to $PPTLAB_CACHE
  bool no_cache = false;
};

Request request_from_json(const json& j);
json request_to_json(const Request& r);

// Exit codes of the CLI.
enum ExitCode : int {
  kExitOk = 0,
  kExitCorpusMismatch = 1,
  kExitInvalidInput = 2,
  kExitResourceLimit = 3,
  kExitInternal = 4,
};

struct Response {
  int exit_code = kExitOk;
  json record;       // ResultRecord, corpus table, or {"error": ...}
  std::string text;  // human-readable rendering of `record`
  std::vector<std::string> warnings;
};

// Validates, computes (or serves from cache) and renders one request.
Response run(const Request& req);

class Error;

// Response for a request that failed before or during computation.
Response error_response(const std::string& command, const Error& e);

// Builds the ResultRecord for a single-input command without touching the
// cache.  Throws pptlab::Error.
json compute_record(const Request& req);

// Canonical cache key: SHA-256 over the version, p, variables, rendered f,
// depth, command and result-affecting flags.
std::string content_hash(const Request& req, const std::string& canonical_f);

std::string render_text(const json& record);

// Record without its "timings" block (the non-deterministic part).
json without_timings(json record);

}  // namespace pptlab

#endif
