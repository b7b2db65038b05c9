#pragma once

#include <string>
#include <string_view>

namespace molsim {

/// Units accepted on public inputs. Energies and frequencies are stored
/// internally as angular frequency in rad/s.
enum class Unit {
  eV,
  THz,
  GHz,
  MHz,
  kHz,
  RadPerSecond,
  Kelvin,
  Tesla,
  Seconds,
  Dimensionless,
};

enum class Dimension { Frequency, Temperature, MagneticField, Time, Dimensionless };

struct Quantity {
  double value = 0.0;
  Unit unit = Unit::Dimensionless;

  friend bool operator==(const Quantity&, const Quantity&) = default;
};

Dimension dimension_of(Unit unit) noexcept;

std::string_view unit_symbol(Unit unit) noexcept;

/// Parses a unit symbol ("eV", "THz", "rad/s", "K", "T", "s", "1", ...).
/// Throws InvalidArgument for unknown symbols.
Unit parse_unit(std::string_view symbol);

/// Converts between units of the same dimension. Energy and frequency share a
/// dimension through E = hbar * omega. Temperature is never converted to an
/// energy here; see thermal_energy().
Quantity convert(const Quantity& q, Unit target);

/// Shorthand for convert(q, RadPerSecond).value, checked to be a frequency.
double to_rad_per_s(const Quantity& q);

/// hbar*omega = k_B*T expressed as angular frequency (rad/s). The only path
/// from temperature to energy.
double thermal_angular_frequency(double temperature_kelvin);

/// Mean Bose-Einstein occupation 1/(exp(hbar*omega/k_B T) - 1).
/// Returns exactly 0 at T = 0. Throws DomainError for omega <= 0 or T < 0.
double bose_occupation(double omega_rad_per_s, double temperature_kelvin);

}  // namespace molsim
