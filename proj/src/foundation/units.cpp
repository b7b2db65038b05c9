#include "molsim/foundation/units.hpp"

#include <cmath>

#include "molsim/foundation/constants.hpp"
#include "molsim/foundation/errors.hpp"

namespace molsim {
namespace {

// Multiplier taking a value in `unit` to the canonical unit of its dimension
// (rad/s, K, T, s, 1).
double to_canonical_factor(Unit unit) noexcept {
  using namespace constants;
  switch (unit) {
    case Unit::eV: return elementary_charge / hbar;
    case Unit::THz: return two_pi * 1e12;
    case Unit::GHz: return two_pi * 1e9;
    case Unit::MHz: return two_pi * 1e6;
    case Unit::kHz: return two_pi * 1e3;
    case Unit::RadPerSecond:
    case Unit::Kelvin:
    case Unit::Tesla:
    case Unit::Seconds:
    case Unit::Dimensionless: return 1.0;
  }
  return 1.0;
}

}  // namespace

Dimension dimension_of(Unit unit) noexcept {
  switch (unit) {
    case Unit::eV:
    case Unit::THz:
    case Unit::GHz:
    case Unit::MHz:
    case Unit::kHz:
    case Unit::RadPerSecond: return Dimension::Frequency;
    case Unit::Kelvin: return Dimension::Temperature;
    case Unit::Tesla: return Dimension::MagneticField;
    case Unit::Seconds: return Dimension::Time;
    case Unit::Dimensionless: return Dimension::Dimensionless;
  }
  return Dimension::Dimensionless;
}

std::string_view unit_symbol(Unit unit) noexcept {
  switch (unit) {
    case Unit::eV: return "eV";
    case Unit::THz: return "THz";
    case Unit::GHz: return "GHz";
    case Unit::MHz: return "MHz";
    case Unit::kHz: return "kHz";
    case Unit::RadPerSecond: return "rad/s";
    case Unit::Kelvin: return "K";
    case Unit::Tesla: return "T";
    case Unit::Seconds: return "s";
    case Unit::Dimensionless: return "1";
  }
  return "?";
}

Unit parse_unit(std::string_view symbol) {
  static constexpr Unit all[] = {Unit::eV,           Unit::THz,    Unit::GHz,   Unit::MHz,
                                 Unit::kHz,          Unit::RadPerSecond, Unit::Kelvin,
                                 Unit::Tesla,        Unit::Seconds, Unit::Dimensionless};
  for (Unit u : all) {
    if (unit_symbol(u) == symbol) return u;
  }
  if (symbol == "s^-1" || symbol == "1/s") return Unit::RadPerSecond;
  if (symbol.empty()) return Unit::Dimensionless;
  throw InvalidArgument("unknown unit '" + std::string(symbol) + "'");
}

Quantity convert(const Quantity& q, Unit target) {
  if (dimension_of(q.unit) != dimension_of(target)) {
    throw IncompatibleUnits(std::string("cannot convert ") + std::string(unit_symbol(q.unit)) +
                            " to " + std::string(unit_symbol(target)));
  }
  if (q.unit == target) return q;
  const double canonical = q.value * to_canonical_factor(q.unit);
  return {canonical / to_canonical_factor(target), target};
}

double to_rad_per_s(const Quantity& q) { return convert(q, Unit::RadPerSecond).value; }

double thermal_angular_frequency(double temperature_kelvin) {
  if (temperature_kelvin < 0.0) throw DomainError("temperature must be >= 0 K");
  return constants::boltzmann * temperature_kelvin / constants::hbar;
}

double bose_occupation(double omega, double temperature) {
  if (!(omega > 0.0)) throw DomainError("bose_occupation requires omega > 0");
  if (temperature < 0.0) throw DomainError("bose_occupation requires T >= 0");
  if (temperature == 0.0) return 0.0;
  const double x = omega / thermal_angular_frequency(temperature);
  return 1.0 / std::expm1(x);
}

}  // namespace molsim
