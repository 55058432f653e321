#include "fdrelay/config.hpp"

#include <charconv>
#include <fstream>
#include <functional>
#include <iomanip>
#include <map>
#include <sstream>

#include "fdrelay/errors.hpp"

namespace fdrelay {

namespace {

void require_positive(double v, const char* field) {
  if (!(v > 0.0) || !std::isfinite(v)) {
    throw ConfigError(std::string(field) + " must be a finite positive number");
  }
}

void require_range(const Interval& r, const char* field) {
  if (!(r.lo > 0.0) || !(r.lo <= r.hi) || !std::isfinite(r.hi)) {
    throw ConfigError(std::string(field) + " must satisfy 0 < lo <= hi");
  }
}

std::string trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return std::string(s.substr(first, last - first + 1));
}

double parse_number(const std::string& text, const std::string& where) {
  double value = 0.0;
  const char* begin = text.data();
  const char* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(begin, end, value);
  if (ec != std::errc{} || ptr != end) {
    throw ConfigError(where + ": expected a number, got '" + text + "'");
  }
  return value;
}

Interval parse_range(const std::string& text, const std::string& where) {
  const auto comma = text.find(',');
  if (comma == std::string::npos) {
    throw ConfigError(where + ": expected 'lo, hi', got '" + text + "'");
  }
  return {parse_number(trim(text.substr(0, comma)), where),
          parse_number(trim(text.substr(comma + 1)), where)};
}

}  // namespace

void NetworkConfig::validate() const {
  if (num_relays < 1) throw ConfigError("num_relays must be >= 1");
  if (!(zeta >= 0.0) || !std::isfinite(zeta)) throw ConfigError("zeta must be >= 0");
  require_positive(sigma2_relay, "sigma2_relay");
  require_positive(sigma2_dest, "sigma2_dest");
  require_positive(sigma2_pu, "sigma2_pu");
  require_positive(var_sr, "var_sr");
  require_positive(var_rd, "var_rd");
  require_positive(var_sd, "var_sd");
  require_positive(var_rr, "var_rr");
  require_range(var_sp_range, "var_sp_range");
  require_range(var_rp_range, "var_rp_range");
  require_positive(p_s_max, "p_s_max");
  require_positive(p_r_max, "p_r_max");
  if (!(i_bar_p >= 0.0) || !std::isfinite(i_bar_p)) throw ConfigError("i_bar_p must be >= 0");
  require_positive(sampling_freq, "sampling_freq");
}

NetworkConfig parse_config(std::istream& in, const std::string& source) {
  NetworkConfig cfg;

  using Setter = std::function<void(double)>;
  const std::map<std::string, Setter> scalars = {
      {"zeta", [&](double v) { cfg.zeta = v; }},
      {"sigma2_relay", [&](double v) { cfg.sigma2_relay = v; }},
      {"sigma2_dest", [&](double v) { cfg.sigma2_dest = v; }},
      {"sigma2_pu", [&](double v) { cfg.sigma2_pu = v; }},
      {"var_sr", [&](double v) { cfg.var_sr = v; }},
      {"var_rd", [&](double v) { cfg.var_rd = v; }},
      {"var_sd", [&](double v) { cfg.var_sd = v; }},
      {"var_rr", [&](double v) { cfg.var_rr = v; }},
      {"p_s_max", [&](double v) { cfg.p_s_max = v; }},
      {"p_r_max", [&](double v) { cfg.p_r_max = v; }},
      {"p_max", [&](double v) { cfg.set_p_max(v); }},
      {"i_bar_p", [&](double v) { cfg.i_bar_p = v; }},
      {"sampling_freq", [&](double v) { cfg.sampling_freq = v; }},
  };
  // Keys that may be given in dB with a `_db` suffix.
  const std::map<std::string, bool> db_capable = {
      {"sigma2_relay", true}, {"sigma2_dest", true}, {"sigma2_pu", true},
      {"p_s_max", true},      {"p_r_max", true},     {"p_max", true},
      {"i_bar_p", true},
  };

  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const std::string where = source + ":" + std::to_string(lineno);
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    const std::string body = trim(line);
    if (body.empty()) continue;

    const auto eq = body.find('=');
    if (eq == std::string::npos) throw ConfigError(where + ": expected 'key = value'");
    std::string key = trim(body.substr(0, eq));
    const std::string value = trim(body.substr(eq + 1));
    if (value.empty()) throw ConfigError(where + ": missing value for '" + key + "'");

    if (key == "num_relays") {
      const double v = parse_number(value, where);
      if (v < 1 || v != std::floor(v)) throw ConfigError(where + ": num_relays must be a positive integer");
      cfg.num_relays = static_cast<std::size_t>(v);
      continue;
    }
    if (key == "var_sp_range") {
      cfg.var_sp_range = parse_range(value, where);
      continue;
    }
    if (key == "var_rp_range") {
      cfg.var_rp_range = parse_range(value, where);
      continue;
    }

    bool in_db = false;
    if (key.size() > 3 && key.ends_with("_db")) {
      key.resize(key.size() - 3);
      if (!db_capable.contains(key)) throw ConfigError(where + ": '" + key + "' has no dB form");
      in_db = true;
    }
    const auto it = scalars.find(key);
    if (it == scalars.end()) throw ConfigError(where + ": unknown key '" + key + "'");
    const double v = parse_number(value, where);
    it->second(in_db ? db_to_linear(v) : v);
  }

  try {
    cfg.validate();
  } catch (const ConfigError& e) {
    throw ConfigError(source + ": " + e.what());
  }
  return cfg;
}

NetworkConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open config file " + path.string());
  return parse_config(in, path.string());
}

std::string to_config_text(const NetworkConfig& cfg) {
  std::ostringstream out;
  out << std::setprecision(17);
  out << "num_relays = " << cfg.num_relays << '\n'
      << "zeta = " << cfg.zeta << '\n'
      << "sigma2_relay = " << cfg.sigma2_relay << '\n'
      << "sigma2_dest = " << cfg.sigma2_dest << '\n'
      << "sigma2_pu = " << cfg.sigma2_pu << '\n'
      << "var_sr = " << cfg.var_sr << '\n'
      << "var_rd = " << cfg.var_rd << '\n'
      << "var_sd = " << cfg.var_sd << '\n'
      << "var_rr = " << cfg.var_rr << '\n'
      << "var_sp_range = " << cfg.var_sp_range.lo << ", " << cfg.var_sp_range.hi << '\n'
      << "var_rp_range = " << cfg.var_rp_range.lo << ", " << cfg.var_rp_range.hi << '\n'
      << "p_s_max = " << cfg.p_s_max << '\n'
      << "p_r_max = " << cfg.p_r_max << '\n'
      << "i_bar_p = " << cfg.i_bar_p << '\n'
      << "sampling_freq = " << cfg.sampling_freq << '\n';
  return out.str();
}

}  // namespace fdrelay
