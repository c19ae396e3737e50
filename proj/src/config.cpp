#include "irsim/config.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <sstream>

namespace irsim {

std::string_view to_string(PhaseMode mode) {
  switch (mode) {
    case PhaseMode::geometric: return "geometric";
    case PhaseMode::csi: return "csi";
    case PhaseMode::random: return "random";
  }
  return "geometric";
}

PhaseMode parse_phase_mode(std::string_view text) {
  if (text == "geometric") return PhaseMode::geometric;
  if (text == "csi") return PhaseMode::csi;
  if (text == "random") return PhaseMode::random;
  throw ConfigParseError("phase_mode", "expected geometric, csi or random, got '" + std::string(text) + "'");
}

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::string format_real(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

double parse_real(std::string_view key, std::string_view text) {
  text = trim(text);
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc{} || ptr != text.data() + text.size() || !std::isfinite(v))
    throw ConfigParseError(std::string(key), "expected a real number, got '" + std::string(text) + "'");
  return v;
}

template <typename Int>
Int parse_integer(std::string_view key, std::string_view text) {
  text = trim(text);
  Int v{};
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc{} || ptr != text.data() + text.size())
    throw ConfigParseError(std::string(key), "expected an integer, got '" + std::string(text) + "'");
  return v;
}

Vec3 parse_vec3(std::string_view key, std::string_view text) {
  text = trim(text);
  if (!text.empty() && text.front() == '[') {
    if (text.back() != ']') throw ConfigParseError(std::string(key), "unterminated '['");
    text = text.substr(1, text.size() - 2);
  }
  Vec3 v;
  for (int axis = 0; axis < 3; ++axis) {
    const auto comma = text.find(',');
    if ((axis < 2) == (comma == std::string_view::npos))
      throw ConfigParseError(std::string(key), "expected three comma-separated components");
    v[axis] = parse_real(key, text.substr(0, comma));
    text = axis < 2 ? text.substr(comma + 1) : std::string_view{};
  }
  return v;
}

std::string format_vec3(Vec3 v) { return format_real(v.x) + ", " + format_real(v.y) + ", " + format_real(v.z); }

struct Field {
  std::string_view key;
  std::function<void(SimConfig&, std::string_view)> set;
  std::function<std::string(const SimConfig&)> get;
};

template <typename Access>
Field real_field(std::string_view key, Access access) {
  return {key, [=](SimConfig& c, std::string_view v) { access(c) = parse_real(key, v); },
          [=](const SimConfig& c) { return format_real(access(const_cast<SimConfig&>(c))); }};
}

template <typename Access>
Field int_field(std::string_view key, Access access) {
  return {key, [=](SimConfig& c, std::string_view v) { access(c) = parse_integer<int>(key, v); },
          [=](const SimConfig& c) { return std::to_string(access(const_cast<SimConfig&>(c))); }};
}

template <typename Access>
Field vec_field(std::string_view key, Access access) {
  return {key, [=](SimConfig& c, std::string_view v) { access(c) = parse_vec3(key, v); },
          [=](const SimConfig& c) { return format_vec3(access(const_cast<SimConfig&>(c))); }};
}

#define IRSIM_ACCESS(member) [](SimConfig& c) -> auto& { return c.member; }

const std::vector<Field>& fields() {
  static const std::vector<Field> table = {
      real_field("carrier_frequency_hz", IRSIM_ACCESS(carrier_frequency_hz)),
      real_field("bandwidth_hz", IRSIM_ACCESS(bandwidth_hz)),
      int_field("num_channels", IRSIM_ACCESS(num_channels)),
      int_field("num_nodes", IRSIM_ACCESS(num_nodes)),
      int_field("irs_rows", IRSIM_ACCESS(irs_rows)),
      int_field("irs_cols", IRSIM_ACCESS(irs_cols)),
      real_field("element_spacing_wavelengths", IRSIM_ACCESS(element_spacing_wavelengths)),
      int_field("phase_bits", IRSIM_ACCESS(phase_bits)),
      real_field("reflection_efficiency", IRSIM_ACCESS(reflection_efficiency)),
      real_field("pathloss_exponent", IRSIM_ACCESS(pathloss_exponent)),
      real_field("tx_power_dbm", IRSIM_ACCESS(tx_power_dbm)),
      real_field("noise_figure_db", IRSIM_ACCESS(noise_figure_db)),
      real_field("decode_threshold_db", IRSIM_ACCESS(decode_threshold_db)),
      int_field("sensing_samples", IRSIM_ACCESS(sensing_samples)),
      real_field("target_pfa", IRSIM_ACCESS(target_pfa)),
      real_field("v_max_mps", IRSIM_ACCESS(v_max_mps)),
      real_field("slot_duration_s", IRSIM_ACCESS(slot_duration_s)),
      int_field("num_slots", IRSIM_ACCESS(num_slots)),
      int_field("window", IRSIM_ACCESS(window)),
      real_field("priority_exponent", IRSIM_ACCESS(priority_exponent)),
      real_field("rate_epsilon", IRSIM_ACCESS(rate_epsilon)),
      vec_field("bs_position", IRSIM_ACCESS(bs_position)),
      vec_field("irs_center", IRSIM_ACCESS(irs_center)),
      vec_field("region_min", IRSIM_ACCESS(region.min)),
      vec_field("region_max", IRSIM_ACCESS(region.max)),
      vec_field("irs_row_axis", IRSIM_ACCESS(irs_row_axis)),
      vec_field("irs_col_axis", IRSIM_ACCESS(irs_col_axis)),
      real_field("coherence_floor_s", IRSIM_ACCESS(coherence_floor_s)),
      Field{"phase_mode", [](SimConfig& c, std::string_view v) { c.phase_mode = parse_phase_mode(trim(v)); },
            [](const SimConfig& c) { return std::string(to_string(c.phase_mode)); }},
      Field{"seed", [](SimConfig& c, std::string_view v) { c.seed = parse_integer<std::uint64_t>("seed", v); },
            [](const SimConfig& c) { return std::to_string(c.seed); }},
  };
  return table;
}

#undef IRSIM_ACCESS

void require(bool ok, const char* key, const std::string& constraint) {
  if (!ok) throw ConfigValidationError(key, "must satisfy " + constraint);
}

bool is_unit(Vec3 v) { return std::abs(norm(v) - 1.0) <= 1e-9; }

}  // namespace

SimConfig load_config(std::string_view text) {
  SimConfig cfg;
  std::vector<std::string> seen;
  std::size_t line_no = 0;
  while (!text.empty()) {
    ++line_no;
    const auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string_view::npos)
      throw ConfigParseError("", "line " + std::to_string(line_no) + ": expected 'key = value'");
    const std::string key(trim(line.substr(0, eq)));
    const std::string_view value = trim(line.substr(eq + 1));
    if (value.empty()) throw ConfigParseError(key, "line " + std::to_string(line_no) + ": missing value");
    for (const auto& s : seen)
      if (s == key) throw ConfigParseError(key, "line " + std::to_string(line_no) + ": duplicate key");
    bool matched = false;
    for (const Field& f : fields()) {
      if (f.key == key) {
        f.set(cfg, value);
        matched = true;
        break;
      }
    }
    if (!matched) throw ConfigParseError(key, "line " + std::to_string(line_no) + ": unknown key");
    seen.push_back(key);
  }
  validate(cfg);
  return cfg;
}

SimConfig load_config_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigParseError("", "cannot open config file '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return load_config(buf.str());
}

void validate(const SimConfig& c) {
  require(c.carrier_frequency_hz > 0.0, "carrier_frequency_hz", "> 0");
  require(c.bandwidth_hz > 0.0, "bandwidth_hz", "> 0");
  require(c.num_channels >= 1, "num_channels", ">= 1");
  require(c.num_nodes >= 1, "num_nodes", ">= 1");
  require(c.irs_rows >= 1, "irs_rows", ">= 1");
  require(c.irs_cols >= 1, "irs_cols", ">= 1");
  require(c.element_spacing_wavelengths > 0.0, "element_spacing_wavelengths", "> 0");
  require(c.phase_bits >= 1 && c.phase_bits <= 32, "phase_bits", "1 <= b <= 32");
  require(c.reflection_efficiency >= 0.0 && c.reflection_efficiency <= 1.0, "reflection_efficiency", "0 <= rho <= 1");
  require(c.pathloss_exponent > 0.0, "pathloss_exponent", "> 0");
  require(c.sensing_samples >= 1, "sensing_samples", ">= 1");
  require(c.target_pfa > 0.0 && c.target_pfa < 1.0, "target_pfa", "0 < P_fa < 1");
  require(c.v_max_mps >= 0.0, "v_max_mps", ">= 0");
  require(c.slot_duration_s > 0.0, "slot_duration_s", "> 0");
  require(c.num_slots >= 1, "num_slots", ">= 1");
  require(c.window >= 1, "window", ">= 1");
  require(c.window <= c.num_slots, "window", "<= num_slots");
  require(c.priority_exponent >= 1.0, "priority_exponent", ">= 1");
  require(c.rate_epsilon > 0.0, "rate_epsilon", "> 0");
  require(c.region.max.x > c.region.min.x, "region_max", "x extent > 0");
  require(c.region.max.y > c.region.min.y, "region_max", "y extent > 0");
  require(c.region.max.z >= c.region.min.z, "region_max", "z extent >= 0");
  require(is_unit(c.irs_row_axis), "irs_row_axis", "unit length");
  require(is_unit(c.irs_col_axis), "irs_col_axis", "unit length");
  require(std::abs(dot(c.irs_row_axis, c.irs_col_axis)) <= 1e-9, "irs_col_axis", "orthogonal to irs_row_axis");
  require(c.coherence_floor_s > 0.0, "coherence_floor_s", "> 0");
}

std::string to_text(const SimConfig& cfg) {
  std::string out;
  for (const Field& f : fields()) {
    out += f.key;
    out += " = ";
    out += f.get(cfg);
    out += '\n';
  }
  return out;
}

std::uint64_t config_hash(const SimConfig& cfg) {
  std::uint64_t h = 0xCBF29CE484222325ULL;
  for (unsigned char ch : to_text(cfg)) {
    h ^= ch;
    h *= 0x100000001B3ULL;
  }
  return h;
}

void apply_env_overrides(SimConfig& cfg) {
  if (const char* env = std::getenv("IRSIM_SEED"); env && *env) cfg.seed = parse_integer<std::uint64_t>("IRSIM_SEED", env);
}

DerivedConstants derive_constants(const SimConfig& cfg) {
  DerivedConstants d;
  d.wavelength = kSpeedOfLight / cfg.carrier_frequency_hz;
  const double k = 4.0 * kPi / d.wavelength;
  d.L0 = k * k;
  d.d0 = d.wavelength / kTwoPi;
  d.noise_power = kBoltzmann * kReferenceTemperature * cfg.bandwidth_hz * db_to_linear(cfg.noise_figure_db);
  d.tx_power = dbm_to_watts(cfg.tx_power_dbm);
  d.decode_threshold_linear = db_to_linear(cfg.decode_threshold_db);

  const double spacing = cfg.element_spacing_wavelengths * d.wavelength;
  const std::size_t n = static_cast<std::size_t>(cfg.num_elements());
  d.irs.x.reserve(n);
  d.irs.y.reserve(n);
  d.irs.z.reserve(n);
  d.irs.dist_to_bs.reserve(n);
  // Element n = row * irs_cols + col, grid centred on irs_center.
  for (int row = 0; row < cfg.irs_rows; ++row) {
    const double row_off = (row - 0.5 * (cfg.irs_rows - 1)) * spacing;
    for (int col = 0; col < cfg.irs_cols; ++col) {
      const double col_off = (col - 0.5 * (cfg.irs_cols - 1)) * spacing;
      const Vec3 p = cfg.irs_center + row_off * cfg.irs_row_axis + col_off * cfg.irs_col_axis;
      d.irs.x.push_back(p.x);
      d.irs.y.push_back(p.y);
      d.irs.z.push_back(p.z);
      d.irs.dist_to_bs.push_back(distance(p, cfg.bs_position));
    }
  }
  return d;
}

}  // namespace irsim
