#include "svb/config.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

namespace svb {

namespace {

std::string trim(const std::string& s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string::npos) return "";
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::string unquote(std::string v) {
  if (v.size() >= 2 && ((v.front() == '"' && v.back() == '"') ||
                        (v.front() == '\'' && v.back() == '\'')))
    return v.substr(1, v.size() - 2);
  return v;
}

double parse_double(const std::string& v, int line) {
  try {
    size_t used = 0;
    const double x = std::stod(v, &used);
    if (used != v.size()) throw std::invalid_argument("");
    return x;
  } catch (const std::exception&) {
    throw ConfigError("expected a number, got '" + v + "'", line);
  }
}

long parse_long(const std::string& v, int line) {
  try {
    size_t used = 0;
    const long x = std::stol(v, &used);
    if (used != v.size()) throw std::invalid_argument("");
    return x;
  } catch (const std::exception&) {
    throw ConfigError("expected an integer, got '" + v + "'", line);
  }
}

std::uint64_t parse_u64(const std::string& v, int line) {
  try {
    size_t used = 0;
    const unsigned long long x = std::stoull(v, &used);
    if (used != v.size()) throw std::invalid_argument("");
    return x;
  } catch (const std::exception&) {
    throw ConfigError("expected an unsigned integer, got '" + v + "'", line);
  }
}

InputKind parse_input_kind(const std::string& v, int line) {
  if (v == "bpsk") return InputKind::Bpsk;
  if (v == "butterworth_colored") return InputKind::ButterworthColored;
  throw ConfigError("unknown input kind '" + v +
                        "' (expected bpsk or butterworth_colored)",
                    line);
}

void set_top_level(ExperimentConfig& c, const std::string& key,
                   const std::string& value, int line) {
  if (key == "n_taps") c.n_taps = static_cast<int>(parse_long(value, line));
  else if (key == "sparsity") c.sparsity = static_cast<int>(parse_long(value, line));
  else if (key == "doppler") c.doppler = parse_double(value, line);
  else if (key == "lambda") c.lambda = parse_double(value, line);
  else if (key == "packet_len") c.packet_len = static_cast<int>(parse_long(value, line));
  else if (key == "realizations") c.realizations = static_cast<int>(parse_long(value, line));
  else if (key == "snr_db") c.snr_db = parse_double(value, line);
  else if (key == "input") c.input = parse_input_kind(value, line);
  else if (key == "tracking_event") c.tracking_event = static_cast<int>(parse_long(value, line));
  else if (key == "seed") c.seed = parse_u64(value, line);
  else throw ConfigError("unknown key '" + key + "'", line);
}

void set_estimator(EstimatorSpec& e, const std::string& key,
                   const std::string& value, int line) {
  if (key == "kind") {
    const auto kind = parse_estimator_kind(value);
    if (!kind) throw ConfigError("unknown estimator kind '" + value + "'", line);
    e.kind = *kind;
  } else if (key == "label") {
    e.label = value;
  } else if (key == "lambda") {
    e.lambda = parse_double(value, line);
  } else if (key == "tau") {
    if (value == "cv") e.tau.reset();
    else e.tau = parse_double(value, line);
  } else {
    throw ConfigError("unknown estimator key '" + key + "'", line);
  }
}

}  // namespace

ExperimentConfig parse_config_text(const std::string& text) {
  ExperimentConfig config;
  config.estimators.clear();
  bool in_estimator = false;

  std::istringstream in(text);
  std::string raw;
  int line = 0;
  while (std::getline(in, raw)) {
    ++line;
    const auto hash = raw.find('#');
    if (hash != std::string::npos) raw.erase(hash);
    const std::string s = trim(raw);
    if (s.empty()) continue;

    if (s == "[[estimator]]" || s == "[estimator]") {
      config.estimators.emplace_back();
      in_estimator = true;
      continue;
    }
    if (s.front() == '[') throw ConfigError("unknown section '" + s + "'", line);

    const auto eq = s.find('=');
    if (eq == std::string::npos)
      throw ConfigError("expected 'key = value', got '" + s + "'", line);
    const std::string key = trim(s.substr(0, eq));
    const std::string value = unquote(trim(s.substr(eq + 1)));
    if (key.empty() || value.empty())
      throw ConfigError("expected 'key = value', got '" + s + "'", line);

    if (in_estimator) set_estimator(config.estimators.back(), key, value, line);
    else set_top_level(config, key, value, line);
  }

  try {
    config.validate();
  } catch (const std::invalid_argument& err) {
    throw ConfigError(err.what());
  }
  return config;
}

ExperimentConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_config_text(buf.str());
}

void apply_override(ExperimentConfig& config, const std::string& assignment) {
  const auto eq = assignment.find('=');
  if (eq == std::string::npos)
    throw ConfigError("override must be KEY=VALUE, got '" + assignment + "'");
  const std::string key = trim(assignment.substr(0, eq));
  const std::string value = unquote(trim(assignment.substr(eq + 1)));
  set_top_level(config, key, value, 0);
  try {
    config.validate();
  } catch (const std::invalid_argument& err) {
    throw ConfigError(err.what());
  }
}

std::string canonical_config_string(const ExperimentConfig& c) {
  std::ostringstream out;
  out.imbue(std::locale::classic());
  out.precision(17);
  out << "n_taps=" << c.n_taps << '\n'
      << "sparsity=" << c.sparsity << '\n'
      << "doppler=" << c.doppler << '\n'
      << "lambda=" << c.lambda << '\n'
      << "packet_len=" << c.packet_len << '\n'
      << "realizations=" << c.realizations << '\n'
      << "snr_db=" << c.snr_db << '\n'
      << "input=" << (c.input == InputKind::Bpsk ? "bpsk" : "butterworth_colored")
      << '\n';
  if (c.tracking_event) out << "tracking_event=" << *c.tracking_event << '\n';
  out << "seed=" << c.seed << '\n';
  for (const auto& e : c.estimators) {
    out << "estimator kind=" << estimator_kind_name(e.kind)
        << " label=" << e.effective_label();
    if (e.lambda) out << " lambda=" << *e.lambda;
    if (e.tau) out << " tau=" << *e.tau;
    out << '\n';
  }
  return out.str();
}

std::uint64_t config_digest(const ExperimentConfig& config) {
  const std::string s = canonical_config_string(config);
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char ch : s) {
    h ^= ch;
    h *= 0x100000001b3ULL;
  }
  return h;
}

}  // namespace svb
