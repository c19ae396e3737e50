#pragma once

#include <cstdint>
#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "irsim/vec3.hpp"

namespace irsim {

inline constexpr double kSpeedOfLight = 299'792'458.0;      // m/s
inline constexpr double kBoltzmann = 1.380649e-23;          // J/K
inline constexpr double kReferenceTemperature = 290.0;      // K

enum class PhaseMode {
  geometric,
  csi,
  random,  // uniformly random phases; control runs only
};

std::string_view to_string(PhaseMode mode);
PhaseMode parse_phase_mode(std::string_view text);

struct Box {
  Vec3 min;
  Vec3 max;

  bool contains(Vec3 p) const {
    return p.x >= min.x && p.x <= max.x && p.y >= min.y && p.y <= max.y && p.z >= min.z && p.z <= max.z;
  }
  friend bool operator==(const Box&, const Box&) = default;
};

/// Simulation parameters. Defaults reproduce the reference run; all
/// quantities are SI except the fields whose names end in _db / _dbm.
struct SimConfig {
  double carrier_frequency_hz = 3.5e9;
  double bandwidth_hz = 5e6;
  int num_channels = 4;
  int num_nodes = 10;
  int irs_rows = 8;
  int irs_cols = 8;
  double element_spacing_wavelengths = 0.5;
  int phase_bits = 3;
  double reflection_efficiency = 0.98;
  double pathloss_exponent = 2.2;
  double tx_power_dbm = 20.0;
  double noise_figure_db = 6.0;
  double decode_threshold_db = -10.0;
  int sensing_samples = 128;
  double target_pfa = 0.1;
  double v_max_mps = 3.0;
  double slot_duration_s = 5e-3;
  int num_slots = 200;
  int window = 20;
  double priority_exponent = 2.0;
  double rate_epsilon = 1e3;  // bit/s
  Vec3 bs_position{0.0, 0.0, 10.0};
  Vec3 irs_center{30.0, 0.0, 8.0};
  Box region{{-50.0, -50.0, 0.0}, {50.0, 50.0, 3.0}};
  // Panel orientation: rows step along irs_row_axis, columns along irs_col_axis.
  Vec3 irs_row_axis{0.0, 0.0, 1.0};
  Vec3 irs_col_axis{0.0, 1.0, 0.0};
  double coherence_floor_s = 1e-3;
  PhaseMode phase_mode = PhaseMode::geometric;
  std::uint64_t seed = 42;

  int num_elements() const { return irs_rows * irs_cols; }

  friend bool operator==(const SimConfig&, const SimConfig&) = default;
};

class ConfigError : public std::runtime_error {
 public:
  ConfigError(std::string key, const std::string& message)
      : std::runtime_error(key.empty() ? message : key + ": " + message), key_(std::move(key)) {}
  const std::string& key() const { return key_; }

 private:
  std::string key_;
};

/// Malformed text (bad syntax, unknown key, unparsable value).
class ConfigParseError : public ConfigError {
 public:
  using ConfigError::ConfigError;
};

/// Well-formed but out of range.
class ConfigValidationError : public ConfigError {
 public:
  using ConfigError::ConfigError;
};

/// Parses flat `key = value` text with `#` comments. Vectors are written as
/// `x, y, z` (optionally bracketed). Unspecified keys keep their defaults.
SimConfig load_config(std::string_view text);
SimConfig load_config_file(const std::filesystem::path& path);

/// Throws ConfigValidationError naming the first offending key.
void validate(const SimConfig& cfg);

/// Serializes every key with 17 significant digits; load_config reads it back exactly.
std::string to_text(const SimConfig& cfg);

/// FNV-1a of to_text(cfg).
std::uint64_t config_hash(const SimConfig& cfg);

/// Applies IRSIM_SEED if set. Only the seed may be overridden from the environment.
void apply_env_overrides(SimConfig& cfg);

/// Element coordinates in structure-of-arrays form for the distance kernels.
struct ElementGrid {
  std::vector<double> x;
  std::vector<double> y;
  std::vector<double> z;
  std::vector<double> dist_to_bs;  // d_nb

  std::size_t size() const { return x.size(); }
  Vec3 position(std::size_t n) const { return {x[n], y[n], z[n]}; }
};

struct DerivedConstants {
  double wavelength = 0.0;        // m
  double L0 = 0.0;                // (4 pi / lambda)^2
  double d0 = 0.0;                // lambda / (2 pi), m
  double noise_power = 0.0;       // W
  double tx_power = 0.0;          // W
  double decode_threshold_linear = 0.0;
  ElementGrid irs;

  friend bool operator==(const DerivedConstants& a, const DerivedConstants& b) {
    return a.wavelength == b.wavelength && a.L0 == b.L0 && a.d0 == b.d0 && a.noise_power == b.noise_power &&
           a.tx_power == b.tx_power && a.decode_threshold_linear == b.decode_threshold_linear &&
           a.irs.x == b.irs.x && a.irs.y == b.irs.y && a.irs.z == b.irs.z && a.irs.dist_to_bs == b.irs.dist_to_bs;
  }
};

DerivedConstants derive_constants(const SimConfig& cfg);

inline double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }
inline double dbm_to_watts(double dbm) { return 1e-3 * std::pow(10.0, dbm / 10.0); }

}  // namespace irsim
