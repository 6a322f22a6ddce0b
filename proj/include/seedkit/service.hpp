#pragma once

#include <string>
#include <string_view>

#include "seedkit/error.hpp"
#include "seedkit/json_io.hpp"

namespace seedkit {

// Default and maximum search depths accepted by evaluate().
struct Limits {
  static constexpr int cm3_depth = 4, cm3_max = 8;
  static constexpr int glue_depth = 6, glue_max = 10;
  static constexpr int total_depth = 5, total_max = 10;
  static constexpr std::size_t classify_cap = 10000, classify_cap_max = 100000;
};

// Request: {"seed": seed, "seq": [ids], "action": {name: argument}}.
// Response: {"format", "replay": seed after seq, "result", "diagnostics"}.
// Throws Error for domain failures.
json evaluate(const json& request);

json error_to_json(const Error& e);

struct HttpReply {
  int status = 200;
  std::string body;
};

// Shared entry point for the HTTP handler: 400 on unparsable JSON, 422 on
// domain errors.
HttpReply handle_eval(std::string_view body);

}  // namespace seedkit
