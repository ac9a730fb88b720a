#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "json.hpp"

namespace eta {

inline constexpr const char* kToolkitVersion = "0.1.0";
inline constexpr const char* kEnvelopeSchema = "eta-odlro.result/1";

enum class OutputFormat { csv, json };

// Everything a command needs, as given on the command line. Unset fields
// fall back to per-command defaults at dispatch time.
struct RunConfig {
  std::string command;
  std::optional<std::int64_t> L;
  std::optional<std::int64_t> N;
  std::optional<std::string> M;  // value, list "1,2,3" or range "lo:hi[:step]"
  std::optional<double> n;
  std::optional<std::string> n_grid;  // list or "lo:hi:step"
  std::optional<std::int64_t> M_min;
  std::optional<std::int64_t> M_max;
  std::optional<std::int64_t> M_ref;
  std::optional<double> U;
  std::optional<std::string> lattice;
  std::optional<std::string> phase;
  std::optional<std::string> window;  // "lo:hi"
  std::optional<std::string> checks;  // comma list for the oracle command
  std::optional<int> figure;
  OutputFormat format = OutputFormat::csv;
  std::optional<std::string> out;

  bool operator==(const RunConfig&) const = default;
};

nlohmann::json to_json(const RunConfig& cfg);
RunConfig config_from_json(const nlohmann::json& j);

// Where an emitted number came from.
enum class Source { closed_form, oracle, fit, comparator };
const char* to_string(Source s);

struct Scalar {
  std::string name;
  // Reals are stored already rounded to their printed form.
  std::variant<double, std::int64_t, bool, std::string> value;
  Source source = Source::closed_form;
};

struct Table {
  std::string name;
  Source source = Source::closed_form;
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;
  // First column holds integers (M, pair count) and prints without decimals.
  bool integer_key = false;
};

struct CheckResult {
  std::string name;
  enum class Status { pass, fail, capacity, skipped } status = Status::pass;
  std::string detail;
};
const char* to_string(CheckResult::Status s);

struct ResultEnvelope {
  RunConfig config;
  std::vector<Scalar> scalars;
  std::vector<Table> tables;
  std::vector<CheckResult> checks;

  void add_real(std::string name, double v, Source src);
  void add_text(std::string name, std::string v, Source src);
  void add_int(std::string name, std::int64_t v, Source src);
  void add_flag(std::string name, bool v, Source src);

  bool any_failed() const;
  bool any_capacity() const;
};

std::string render_json(const ResultEnvelope& env);
std::string render_csv(const ResultEnvelope& env);
std::string render(const ResultEnvelope& env);

ResultEnvelope envelope_from_json(const std::string& text);

/// Writes to `path` via a temporary file in the same directory and a rename.
void write_atomically(const std::string& path, const std::string& content);

}  // namespace eta
