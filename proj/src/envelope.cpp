#include "eta/envelope.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "eta/errors.hpp"
#include "eta/format.hpp"

namespace eta {

using nlohmann::json;

namespace {

template <typename T>
void put(json& j, const char* key, const std::optional<T>& v) {
  if (v) j[key] = *v;
}

template <typename T>
void get(const json& j, const char* key, std::optional<T>& v) {
  if (j.contains(key)) v = j.at(key).get<T>();
}

// Round-trips through the printed form so JSON and CSV carry the same digits.
double rounded(double v) {
  if (!std::isfinite(v)) return v;
  return parse_real(format_real(v));
}

json real_json(double v) {
  if (!std::isfinite(v)) return format_real(v);
  return rounded(v);
}

}  // namespace

json to_json(const RunConfig& cfg) {
  json j = json::object();
  j["command"] = cfg.command;
  put(j, "L", cfg.L);
  put(j, "N", cfg.N);
  put(j, "M", cfg.M);
  put(j, "n", cfg.n);
  put(j, "n_grid", cfg.n_grid);
  put(j, "M_min", cfg.M_min);
  put(j, "M_max", cfg.M_max);
  put(j, "M_ref", cfg.M_ref);
  put(j, "U", cfg.U);
  put(j, "lattice", cfg.lattice);
  put(j, "phase", cfg.phase);
  put(j, "window", cfg.window);
  put(j, "checks", cfg.checks);
  put(j, "figure", cfg.figure);
  j["format"] = cfg.format == OutputFormat::json ? "json" : "csv";
  put(j, "out", cfg.out);
  return j;
}

RunConfig config_from_json(const json& j) {
  RunConfig cfg;
  cfg.command = j.at("command").get<std::string>();
  get(j, "L", cfg.L);
  get(j, "N", cfg.N);
  get(j, "M", cfg.M);
  get(j, "n", cfg.n);
  get(j, "n_grid", cfg.n_grid);
  get(j, "M_min", cfg.M_min);
  get(j, "M_max", cfg.M_max);
  get(j, "M_ref", cfg.M_ref);
  get(j, "U", cfg.U);
  get(j, "lattice", cfg.lattice);
  get(j, "phase", cfg.phase);
  get(j, "window", cfg.window);
  get(j, "checks", cfg.checks);
  get(j, "figure", cfg.figure);
  const std::string fmt = j.value("format", "csv");
  if (fmt != "csv" && fmt != "json") {
    throw ValidationError("unknown format '" + fmt + "'");
  }
  cfg.format = fmt == "json" ? OutputFormat::json : OutputFormat::csv;
  get(j, "out", cfg.out);
  return cfg;
}

const char* to_string(Source s) {
  switch (s) {
    case Source::closed_form: return "closed-form";
    case Source::oracle: return "oracle";
    case Source::fit: return "fit";
    case Source::comparator: return "gaussian-comparator";
  }
  return "unknown";
}

namespace {

Source source_from_string(const std::string& s) {
  if (s == "closed-form") return Source::closed_form;
  if (s == "oracle") return Source::oracle;
  if (s == "fit") return Source::fit;
  if (s == "gaussian-comparator") return Source::comparator;
  throw ValidationError("unknown source '" + s + "'");
}

CheckResult::Status status_from_string(const std::string& s) {
  if (s == "pass") return CheckResult::Status::pass;
  if (s == "fail") return CheckResult::Status::fail;
  if (s == "capacity") return CheckResult::Status::capacity;
  if (s == "skipped") return CheckResult::Status::skipped;
  throw ValidationError("unknown check status '" + s + "'");
}

}  // namespace

const char* to_string(CheckResult::Status s) {
  switch (s) {
    case CheckResult::Status::pass: return "pass";
    case CheckResult::Status::fail: return "fail";
    case CheckResult::Status::capacity: return "capacity";
    case CheckResult::Status::skipped: return "skipped";
  }
  return "unknown";
}

void ResultEnvelope::add_real(std::string name, double v, Source src) {
  scalars.push_back({std::move(name), rounded(v), src});
}

void ResultEnvelope::add_text(std::string name, std::string v, Source src) {
  scalars.push_back({std::move(name), std::move(v), src});
}

void ResultEnvelope::add_int(std::string name, std::int64_t v, Source src) {
  scalars.push_back({std::move(name), v, src});
}

void ResultEnvelope::add_flag(std::string name, bool v, Source src) {
  scalars.push_back({std::move(name), v, src});
}

bool ResultEnvelope::any_failed() const {
  for (const auto& c : checks) {
    if (c.status == CheckResult::Status::fail) return true;
  }
  return false;
}

bool ResultEnvelope::any_capacity() const {
  for (const auto& c : checks) {
    if (c.status == CheckResult::Status::capacity) return true;
  }
  return false;
}

std::string render_json(const ResultEnvelope& env) {
  json j;
  j["schema"] = kEnvelopeSchema;
  j["version"] = kToolkitVersion;
  j["config"] = to_json(env.config);
  j["scalars"] = json::array();
  for (const auto& s : env.scalars) {
    json e{{"name", s.name}, {"source", to_string(s.source)}};
    std::visit(
        [&e](const auto& v) {
          using V = std::decay_t<decltype(v)>;
          if constexpr (std::is_same_v<V, double>) {
            e["value"] = real_json(v);
          } else {
            e["value"] = v;
          }
        },
        s.value);
    j["scalars"].push_back(std::move(e));
  }
  j["tables"] = json::array();
  for (const auto& t : env.tables) {
    json rows = json::array();
    for (const auto& r : t.rows) {
      json row = json::array();
      for (std::size_t c = 0; c < r.size(); ++c) {
        if (c == 0 && t.integer_key) {
          row.push_back(static_cast<std::int64_t>(r[c]));
        } else {
          row.push_back(real_json(r[c]));
        }
      }
      rows.push_back(std::move(row));
    }
    j["tables"].push_back({{"name", t.name},
                           {"source", to_string(t.source)},
                           {"columns", t.columns},
                           {"integer_key", t.integer_key},
                           {"rows", std::move(rows)}});
  }
  j["checks"] = json::array();
  for (const auto& c : env.checks) {
    j["checks"].push_back(
        {{"name", c.name}, {"status", to_string(c.status)}, {"detail", c.detail}});
  }
  return j.dump(2) + "\n";
}

namespace {

std::string scalar_text(const Scalar& s) {
  return std::visit(
      [](const auto& v) -> std::string {
        using V = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<V, double>) {
          return format_real(v);
        } else if constexpr (std::is_same_v<V, bool>) {
          return v ? "true" : "false";
        } else if constexpr (std::is_same_v<V, std::int64_t>) {
          return std::to_string(v);
        } else {
          return v;
        }
      },
      s.value);
}

void write_table(std::ostringstream& os, const Table& t) {
  for (std::size_t c = 0; c < t.columns.size(); ++c) {
    if (c) os << ',';
    os << t.columns[c];
  }
  os << '\n';
  for (const auto& r : t.rows) {
    for (std::size_t c = 0; c < r.size(); ++c) {
      if (c) os << ',';
      if (c == 0 && t.integer_key) {
        os << static_cast<std::int64_t>(r[c]);
      } else {
        os << format_real(r[c]);
      }
    }
    os << '\n';
  }
}

}  // namespace

std::string render_csv(const ResultEnvelope& env) {
  std::ostringstream os;
  // Single-table results print the bare table so the file is a plain CSV.
  if (env.tables.size() == 1 && env.scalars.empty() && env.checks.empty()) {
    write_table(os, env.tables.front());
    return os.str();
  }
  bool first = true;
  auto section = [&](const std::string& name) {
    if (!first) os << '\n';
    first = false;
    os << "# " << name << '\n';
  };
  if (!env.scalars.empty()) {
    section("scalars");
    os << "quantity,value,source\n";
    for (const auto& s : env.scalars) {
      os << s.name << ',' << scalar_text(s) << ',' << to_string(s.source)
         << '\n';
    }
  }
  for (const auto& t : env.tables) {
    section(t.name + " (" + to_string(t.source) + ")");
    write_table(os, t);
  }
  if (!env.checks.empty()) {
    section("checks");
    os << "check,status,detail\n";
    for (const auto& c : env.checks) {
      os << c.name << ',' << to_string(c.status) << ',' << c.detail << '\n';
    }
  }
  return os.str();
}

std::string render(const ResultEnvelope& env) {
  return env.config.format == OutputFormat::json ? render_json(env)
                                                 : render_csv(env);
}

ResultEnvelope envelope_from_json(const std::string& text) {
  const json j = json::parse(text);
  if (j.at("schema").get<std::string>() != kEnvelopeSchema) {
    throw ValidationError("unsupported envelope schema");
  }
  ResultEnvelope env;
  env.config = config_from_json(j.at("config"));
  for (const auto& e : j.at("scalars")) {
    Scalar s;
    s.name = e.at("name").get<std::string>();
    s.source = source_from_string(e.at("source").get<std::string>());
    const json& v = e.at("value");
    if (v.is_boolean()) {
      s.value = v.get<bool>();
    } else if (v.is_number_integer()) {
      s.value = v.get<std::int64_t>();
    } else if (v.is_number()) {
      s.value = v.get<double>();
    } else {
      s.value = v.get<std::string>();
    }
    env.scalars.push_back(std::move(s));
  }
  for (const auto& e : j.at("tables")) {
    Table t;
    t.name = e.at("name").get<std::string>();
    t.source = source_from_string(e.at("source").get<std::string>());
    t.columns = e.at("columns").get<std::vector<std::string>>();
    t.integer_key = e.value("integer_key", false);
    for (const auto& r : e.at("rows")) {
      std::vector<double> row;
      for (const auto& v : r) {
        row.push_back(v.is_string() ? parse_real(v.get<std::string>())
                                    : v.get<double>());
      }
      t.rows.push_back(std::move(row));
    }
    env.tables.push_back(std::move(t));
  }
  for (const auto& e : j.at("checks")) {
    env.checks.push_back({e.at("name").get<std::string>(),
                          status_from_string(e.at("status").get<std::string>()),
                          e.at("detail").get<std::string>()});
  }
  return env;
}

void write_atomically(const std::string& path, const std::string& content) {
  namespace fs = std::filesystem;
  const fs::path target(path);
  fs::path tmp = target;
  tmp += ".tmp";
  {
    std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
    if (!f) throw std::runtime_error("cannot open " + tmp.string());
    f << content;
    f.flush();
    if (!f) throw std::runtime_error("write failed for " + tmp.string());
  }
  fs::rename(tmp, target);
}

}  // namespace eta
