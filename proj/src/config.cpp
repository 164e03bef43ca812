#include "magnomech/config.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <sstream>

#include "magnomech/errors.hpp"

namespace magnomech {

ValidationError::ValidationError(const std::string& message, int line, int column)
    : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ", column " +
                                        std::to_string(column) + ": " + message
                                  : message),
      line_(line),
      column_(column) {}

namespace {

struct Entry {
  std::string value;
  int line{0};
  int key_column{0};
  int value_column{0};
};

// Rate-like fields: scaled by omega_b in SI mode.
constexpr std::string_view kRateKeys[] = {"delta_a", "delta_m", "omega_b",  "g_am",
                                          "g_mb_eff", "gamma_a", "gamma_m", "gamma_b"};

bool is_rate(std::string_view key) {
  return std::find(std::begin(kRateKeys), std::end(kRateKeys), key) != std::end(kRateKeys);
}

const std::vector<std::string_view>& known_keys() {
  static const std::vector<std::string_view> keys = [] {
    std::vector<std::string_view> k(parameter_names().begin(), parameter_names().end());
    for (std::string_view extra :
         {"drift_convention", "units", "output", "sweep.axis1.param", "sweep.axis1.start",
          "sweep.axis1.stop", "sweep.axis1.count", "sweep.axis2.param", "sweep.axis2.start",
          "sweep.axis2.stop", "sweep.axis2.count", "sweep.curve.param", "sweep.curve.values"}) {
      k.push_back(extra);
    }
    return k;
  }();
  return keys;
}

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

double parse_number(std::string_view text, int line, int column) {
  double out = 0.0;
  const char* begin = text.data();
  const char* end = text.data() + text.size();
  if (!text.empty() && *begin == '+') ++begin;
  const auto [ptr, ec] = std::from_chars(begin, end, out);
  if (ec != std::errc() || ptr != end || !std::isfinite(out) || text.empty()) {
    throw ValidationError("malformed number '" + std::string(text) + "'", line, column);
  }
  return out;
}

std::size_t parse_count(std::string_view text, int line, int column) {
  std::size_t out = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), out);
  if (ec != std::errc() || ptr != text.data() + text.size() || text.empty()) {
    throw ValidationError("malformed count '" + std::string(text) + "'", line, column);
  }
  return out;
}

class Parser {
public:
  explicit Parser(std::string_view text) { tokenize(text); }

  Config build();

private:
  void tokenize(std::string_view text);
  bool has(std::string_view key) const { return entries_.count(std::string(key)) != 0; }
  const Entry& at(std::string_view key) const { return entries_.at(std::string(key)); }
  const Entry& require(std::string_view key) const;
  double number(std::string_view key) const;
  double to_internal(std::string_view param, double value) const {
    return units_ == Units::SI && is_rate(param) ? value / omega_b_hz_ : value;
  }
  SweepAxis axis(std::string_view prefix) const;
  void check_grid_value(const SystemParams& base, std::string_view param, double value,
                        const Entry& where) const;

  std::map<std::string, Entry> entries_;
  Units units_{Units::Dimensionless};
  double omega_b_hz_{1.0};
};

void Parser::tokenize(std::string_view text) {
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t nl = text.find('\n', pos);
    std::string_view raw = text.substr(pos, nl == std::string_view::npos ? text.size() - pos : nl - pos);
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    ++line_no;

    if (const auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
    if (trim(raw).empty()) continue;

    const auto eq = raw.find('=');
    const int first_col = static_cast<int>(raw.find_first_not_of(" \t")) + 1;
    if (eq == std::string_view::npos) {
      throw ValidationError("expected 'key = value'", line_no, first_col);
    }
    const std::string_view key = trim(raw.substr(0, eq));
    const std::string_view value = trim(raw.substr(eq + 1));
    if (key.empty()) throw ValidationError("missing key before '='", line_no, first_col);

    Entry e;
    e.line = line_no;
    e.key_column = first_col;
    e.value_column = value.empty() ? static_cast<int>(eq) + 2
                                   : static_cast<int>(value.data() - raw.data()) + 1;
    e.value = std::string(value);

    const auto& keys = known_keys();
    if (std::find(keys.begin(), keys.end(), key) == keys.end()) {
      throw ValidationError("unknown key '" + std::string(key) + "'", line_no, e.key_column);
    }
    if (value.empty()) {
      throw ValidationError("missing value for '" + std::string(key) + "'", line_no, e.value_column);
    }
    if (has(key)) {
      throw ValidationError("duplicate key '" + std::string(key) + "' (first set on line " +
                                std::to_string(at(key).line) + ")",
                            line_no, e.key_column);
    }
    entries_.emplace(std::string(key), std::move(e));
  }
}

const Entry& Parser::require(std::string_view key) const {
  if (!has(key)) throw ValidationError("missing required key '" + std::string(key) + "'");
  return at(key);
}

double Parser::number(std::string_view key) const {
  const Entry& e = at(key);
  return parse_number(e.value, e.line, e.value_column);
}

SweepAxis Parser::axis(std::string_view prefix) const {
  const std::string p(prefix);
  SweepAxis ax;
  const Entry& param = require(p + ".param");
  if (!is_parameter(param.value)) {
    throw ValidationError("unknown sweep parameter '" + param.value + "'", param.line,
                          param.value_column);
  }
  if (units_ == Units::SI && param.value == "omega_b") {
    throw ValidationError("omega_b is the unit anchor in si mode and cannot be swept", param.line,
                          param.value_column);
  }
  ax.param = param.value;
  const Entry& start = require(p + ".start");
  const Entry& stop = require(p + ".stop");
  const Entry& count = require(p + ".count");
  ax.start = to_internal(ax.param, parse_number(start.value, start.line, start.value_column));
  ax.stop = to_internal(ax.param, parse_number(stop.value, stop.line, stop.value_column));
  ax.count = parse_count(count.value, count.line, count.value_column);
  if (ax.count == 0) throw ValidationError("count must be at least 1", count.line, count.value_column);
  if (ax.count == 1 && ax.start != ax.stop) {
    throw ValidationError("a single-point axis needs start == stop", count.line, count.value_column);
  }
  if (ax.count >= 2 && !(ax.start < ax.stop)) {
    throw ValidationError("axis start must be below stop", start.line, start.value_column);
  }
  return ax;
}

void Parser::check_grid_value(const SystemParams& base, std::string_view param, double value,
                              const Entry& where) const {
  SystemParams probe = base;
  set_parameter(probe, param, value);
  try {
    probe.validate();
  } catch (const DomainError& e) {
    throw ValidationError(std::string("sweep value out of range: ") + e.what(), where.line,
                          where.value_column);
  }
}

Config Parser::build() {
  if (has("units")) {
    const Entry& u = at("units");
    if (u.value == "dimensionless") {
      units_ = Units::Dimensionless;
    } else if (u.value == "si") {
      units_ = Units::SI;
    } else {
      throw ValidationError("units must be 'dimensionless' or 'si', got '" + u.value + "'", u.line,
                            u.value_column);
    }
  }
  if (units_ == Units::SI) {
    require("omega_b");
    omega_b_hz_ = number("omega_b");
    if (!(omega_b_hz_ > 0.0)) {
      const Entry& e = at("omega_b");
      throw ValidationError("omega_b must be > 0", e.line, e.value_column);
    }
  }

  const bool sweep = std::any_of(entries_.begin(), entries_.end(),
                                 [](const auto& kv) { return kv.first.rfind("sweep.", 0) == 0; });
  if (!sweep && has("output")) {
    const Entry& e = at("output");
    throw ValidationError("'output' is only meaningful for sweep configurations", e.line,
                          e.key_column);
  }

  std::vector<std::string> swept;
  if (sweep) {
    for (const char* k : {"sweep.axis1.param", "sweep.axis2.param", "sweep.curve.param"}) {
      if (has(k)) swept.push_back(at(k).value);
    }
  }
  auto is_swept = [&](std::string_view k) {
    return std::find(swept.begin(), swept.end(), k) != swept.end();
  };

  SystemParams params;
  for (std::string_view key : {"delta_m", "g_am", "g_mb_eff", "gamma_a", "gamma_m", "gamma_b", "n_b"}) {
    if (!is_swept(key)) require(key);
  }
  for (std::string_view key : parameter_names()) {
    if (!has(key)) continue;
    double v = number(key);
    if (units_ == Units::SI && key == "omega_b") v = omega_b_hz_;
    set_parameter(params, key, to_internal(key, v));
  }
  if (has("drift_convention")) {
    const Entry& e = at("drift_convention");
    try {
      params.drift_convention = parse_drift_convention(e.value);
    } catch (const DomainError& err) {
      throw ValidationError(err.what(), e.line, e.value_column);
    }
  }

  // Field constraints, reported at the offending value.
  for (std::string_view key : parameter_names()) {
    if (!has(key)) continue;
    SystemParams probe;
    set_parameter(probe, key, get_parameter(params, key));
    try {
      probe.validate();
    } catch (const DomainError& err) {
      const Entry& e = at(key);
      throw ValidationError(err.what(), e.line, e.value_column);
    }
  }

  if (!sweep) {
    try {
      params.validate();
    } catch (const DomainError& err) {
      throw ValidationError(err.what());
    }
    return params;
  }

  SweepSpec spec;
  spec.base = params;
  spec.axis1 = axis("sweep.axis1");
  check_grid_value(params, spec.axis1.param, spec.axis1.start, at("sweep.axis1.start"));
  check_grid_value(params, spec.axis1.param, spec.axis1.stop, at("sweep.axis1.stop"));
  if (has("sweep.axis2.param") || has("sweep.axis2.start") || has("sweep.axis2.stop") ||
      has("sweep.axis2.count")) {
    spec.axis2 = axis("sweep.axis2");
    check_grid_value(params, spec.axis2->param, spec.axis2->start, at("sweep.axis2.start"));
    check_grid_value(params, spec.axis2->param, spec.axis2->stop, at("sweep.axis2.stop"));
  }
  if (has("sweep.curve.param") || has("sweep.curve.values")) {
    const Entry& param = require("sweep.curve.param");
    const Entry& values = require("sweep.curve.values");
    if (!is_parameter(param.value)) {
      throw ValidationError("unknown curve parameter '" + param.value + "'", param.line,
                            param.value_column);
    }
    if (units_ == Units::SI && param.value == "omega_b") {
      throw ValidationError("omega_b is the unit anchor in si mode and cannot be swept",
                            param.line, param.value_column);
    }
    CurveSpec curve;
    curve.param = param.value;
    std::size_t pos = 0;
    const std::string& list = values.value;
    while (pos <= list.size()) {
      const std::size_t comma = std::min(list.find(',', pos), list.size());
      const std::string_view raw = std::string_view(list).substr(pos, comma - pos);
      const std::string_view item = trim(raw);
      const int col = values.value_column + static_cast<int>(pos) +
                      static_cast<int>(raw.find_first_not_of(" \t") == std::string_view::npos
                                           ? 0
                                           : raw.find_first_not_of(" \t"));
      const double v = to_internal(curve.param, parse_number(item, values.line, col));
      Entry where = values;
      where.value_column = col;
      check_grid_value(params, curve.param, v, where);
      curve.values.push_back(v);
      pos = comma + 1;
    }
    spec.curve = std::move(curve);
  }
  if (has("output")) spec.output = at("output").value;

  try {
    spec.validate();
  } catch (const DomainError& err) {
    throw ValidationError(err.what());
  }
  return spec;
}

}  // namespace

std::vector<double> SweepAxis::values() const {
  std::vector<double> out(count);
  if (count == 1) {
    out[0] = start;
    return out;
  }
  const double span = stop - start;
  const double denom = static_cast<double>(count - 1);
  for (std::size_t i = 0; i < count; ++i) {
    out[i] = start + span * (static_cast<double>(i) / denom);
  }
  out.back() = stop;
  return out;
}

void SweepSpec::validate() const {
  auto check_axis = [&](const SweepAxis& ax) {
    if (!is_parameter(ax.param)) throw DomainError("unknown sweep parameter '" + ax.param + "'");
    if (ax.count == 0) throw DomainError("sweep axis count must be at least 1");
    if (ax.count == 1 && ax.start != ax.stop) {
      throw DomainError("single-point sweep axis needs start == stop");
    }
    if (ax.count >= 2 && !(ax.start < ax.stop)) {
      throw DomainError("sweep axis start must be below stop");
    }
    for (double v : {ax.start, ax.stop}) {
      SystemParams probe = base;
      set_parameter(probe, ax.param, v);
      probe.validate();
    }
  };
  check_axis(axis1);
  if (axis2) {
    check_axis(*axis2);
    if (axis2->param == axis1.param) throw DomainError("axis2 repeats the axis1 parameter");
  }
  if (curve) {
    if (!is_parameter(curve->param)) {
      throw DomainError("unknown curve parameter '" + curve->param + "'");
    }
    if (curve->values.empty()) throw DomainError("curve needs at least one value");
    if (curve->param == axis1.param || (axis2 && curve->param == axis2->param)) {
      throw DomainError("curve parameter repeats a sweep axis");
    }
    for (double v : curve->values) {
      SystemParams probe = base;
      set_parameter(probe, curve->param, v);
      probe.validate();
    }
  }
}

Config parse_config(std::string_view text) { return Parser(text).build(); }

Config load_config(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read config file '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_config(buf.str());
}

const std::vector<std::string_view>& parameter_names() {
  static const std::vector<std::string_view> names = {
      "delta_a", "delta_m", "omega_b", "g_am", "g_mb_eff", "gamma_a",
      "gamma_m", "gamma_b", "n_a",     "n_m",  "n_b"};
  return names;
}

bool is_parameter(std::string_view name) {
  const auto& n = parameter_names();
  return std::find(n.begin(), n.end(), name) != n.end();
}

namespace {

double* field(SystemParams& p, std::string_view name) {
  if (name == "delta_a") return &p.delta_a;
  if (name == "delta_m") return &p.delta_m;
  if (name == "omega_b") return &p.omega_b;
  if (name == "g_am") return &p.g_am;
  if (name == "g_mb_eff") return &p.g_mb_eff;
  if (name == "gamma_a") return &p.gamma_a;
  if (name == "gamma_m") return &p.gamma_m;
  if (name == "gamma_b") return &p.gamma_b;
  if (name == "n_a") return &p.n_a;
  if (name == "n_m") return &p.n_m;
  if (name == "n_b") return &p.n_b;
  throw DomainError("unknown parameter '" + std::string(name) + "'");
}

}  // namespace

void set_parameter(SystemParams& params, std::string_view name, double value) {
  *field(params, name) = value;
}

double get_parameter(const SystemParams& params, std::string_view name) {
  return *field(const_cast<SystemParams&>(params), name);
}

}  // namespace magnomech
