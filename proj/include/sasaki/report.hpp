#pragma once

// Request/report layer behind the sasaki command-line tool.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "sasaki/exactpoly.hpp"

namespace sasaki::cli {

using Json = nlohmann::json;

inline constexpr const char* kSchemaVersion = "1";

enum class Subcommand { kInvariants, kCsc, kClassify, kSweep };
enum class Format { kJson, kTable, kCsv };

/// (l1, l2, w1, w2) at p = 2, as written "(5,21,1,1)".
struct Tuple {
  std::int64_t l1, l2, w1, w2;
};

struct L2Range {
  std::int64_t lo, hi;
  std::int64_t stride = 1;
  std::vector<std::int64_t> values() const;
};

struct CliRequest {
  Subcommand subcommand = Subcommand::kInvariants;
  std::string mode;  // classify: homotopy|homeo|diffeo; sweep: csc|diffeo
  std::optional<std::int64_t> p, l1, l2, l2p, w1, w2;
  std::vector<Tuple> tuples;
  std::optional<L2Range> range;
  Format format = Format::kJson;
  unsigned precision = poly::kDefaultDigits;
  std::int64_t bound = 100;
  unsigned jobs = 1;  // not echoed: output must not depend on it
  bool quote_caveat = false;

  Json echo() const;
};

struct CliReport {
  std::string schema_version = kSchemaVersion;
  Json request;
  Json payload;
  std::vector<std::string> warnings;

  Json to_json() const;
  static CliReport from_json(const Json& j);
};

extern const char* const kCaveat;

CliReport run_invariants(const CliRequest& req);
CliReport run_csc(const CliRequest& req);
CliReport run_classify(const CliRequest& req);
CliReport run_sweep(const CliRequest& req);
CliReport run(const CliRequest& req);

/// Text for stdout in the requested format. CSV exists for sweeps only.
std::string render(const CliReport& report, const CliRequest& req);

L2Range parse_range(const std::string& text);  // "1..30", "1..9:odd", "2..20:even"
std::pair<std::int64_t, std::int64_t> parse_weights(const std::string& text);  // "3,2"
Tuple parse_tuple(const std::string& text);  // "(5,21,1,1)"
Rational parse_rational(const std::string& text);  // "7/3", "-2"

/// Integer as a JSON number when it fits in 64 bits, else a decimal string.
Json integer_json(const Integer& v);
Integer integer_from_json(const Json& j);

/// 0 for success, 1 for InvalidInput, 2 for InvariantViolation.
int exit_code_for(const std::exception& e);

}  // namespace sasaki::cli
