#include "cli/scenarios.hpp"

#include <cmath>
#include <complex>
#include <string>

#include "molsim/dynamics/lindblad.hpp"
#include "molsim/foundation/constants.hpp"
#include "molsim/foundation/errors.hpp"
#include "molsim/io/text.hpp"
#include "molsim/protocols/cavity.hpp"
#include "molsim/protocols/optomech.hpp"
#include "molsim/protocols/raman_memory.hpp"
#include "molsim/relaxation/relaxation.hpp"
#include "molsim/screening/screening.hpp"
#include "molsim/spin/crot.hpp"
#include "molsim/spin/odmr.hpp"
#include "molsim/vibronic/vibronic.hpp"

namespace molsim::cli {
namespace {

using constants::two_pi;
constexpr Dimension kFreq = Dimension::Frequency;
constexpr Dimension kTemp = Dimension::Temperature;
constexpr Dimension kTime = Dimension::Time;

double hz(double omega) { return omega / two_pi; }

std::vector<double> column(const Json& list) {
  std::vector<double> out;
  for (const auto& v : list) out.push_back(v.get<double>());
  return out;
}

// ---- shared schema pieces -------------------------------------------------

std::vector<Field> spin_fields() {
  return {
      required(quantity("D", kFreq, "zero-field splitting D")),
      quantity("E", kFreq, "zero-field splitting E, |E| <= |D|/3", 0.0),
      number("g_electron", "electron g factor", constants::default_g_electron),
      sized(quantity_list("magnetic_field", Dimension::MagneticField, "lab-frame field (x, y, z)",
                          Json::array({0.0, 0.0, 0.0})),
            3),
      object_list("nuclei",
                  {above(number("spin", "nuclear spin I", 0.5), 0.0),
                   required(sized(quantity_list("hyperfine", kFreq,
                                                "diagonal hyperfine tensor (Axx, Ayy, Azz)"),
                                  3)),
                   number("gyromagnetic_ratio", "nuclear gyromagnetic ratio, rad/(s T)",
                          constants::proton_gyromagnetic_ratio)},
                  "coupled nuclear spins"),
  };
}

spin::SpinSystemSpec spin_spec(const Json& p) {
  spin::SpinSystemSpec s;
  s.D = p["D"].get<double>();
  s.E = p["E"].get<double>();
  s.g_electron = p["g_electron"].get<double>();
  const auto b = column(p["magnetic_field"]);
  s.magnetic_field = Eigen::Vector3d(b[0], b[1], b[2]);
  for (const auto& n : p["nuclei"]) {
    spin::NucleusSpec ns;
    const double twice = 2.0 * n["spin"].get<double>();
    if (std::fabs(twice - std::round(twice)) > 1e-12) {
      throw ConfigError("nuclear spin must be a multiple of 1/2");
    }
    ns.spin = levels::HalfInt::from_twice(static_cast<int>(std::lround(twice)));
    const auto a = column(n["hyperfine"]);
    ns.hyperfine = Eigen::Vector3d(a[0], a[1], a[2]).asDiagonal();
    ns.gyromagnetic_ratio = n["gyromagnetic_ratio"].get<double>();
    s.nuclei.push_back(ns);
  }
  return s;
}

Field grid_field(const std::string& name, const std::string& help) {
  return required(object(name,
                         {required(quantity("start", kFreq, "first grid point")),
                          required(quantity("stop", kFreq, "last grid point")),
                          required(at_least(integer("points", "number of grid points"), 2))},
                         help));
}

FrequencyGrid make_grid(const Json& g, double offset = 0.0) {
  const double start = g["start"].get<double>() + offset;
  const double stop = g["stop"].get<double>() + offset;
  if (!(stop > start)) throw ConfigError("grid: stop must exceed start");
  return FrequencyGrid(start, stop, g["points"].get<std::size_t>());
}

std::vector<Field> emitter_fields() {
  return {required(at_least(quantity("decay", kFreq, "spontaneous decay rate gamma0"), 0.0)),
          quantity("rabi", kFreq, "drive Rabi frequency", 0.0),
          quantity("detuning", kFreq, "laser detuning", 0.0),
          at_least(quantity("dephasing", kFreq, "pure dephasing rate", 0.0), 0.0)};
}

dynamics::TwoLevelEmitter emitter(const Json& p) {
  return {p["decay"].get<double>(), p["rabi"].get<double>(), p["detuning"].get<double>(),
          p["dephasing"].get<double>()};
}

std::vector<double> sample_times(double stop, std::size_t samples) {
  std::vector<double> t(samples);
  for (std::size_t i = 0; i < samples; ++i) {
    t[i] = stop * static_cast<double>(i) / static_cast<double>(samples - 1);
  }
  return t;
}

// ---- scenarios ------------------------------------------------------------

ScenarioOutput run_spin_spectrum(const Json& p, const RunContext&) {
  const auto sys = spin::diagonalize(spin::build_spin_hamiltonian(spin_spec(p)));
  ScenarioOutput out;
  std::vector<double> index, energy;
  out.summary["dimension"] = sys.energies.size();
  for (Eigen::Index i = 0; i < sys.energies.size(); ++i) {
    index.push_back(static_cast<double>(i));
    energy.push_back(hz(sys.energies(i)));
    out.summary["level_" + std::to_string(i) + "_Hz"] = hz(sys.energies(i));
  }
  out.files.emplace_back("levels.csv", io::csv_table({"index", "energy_Hz"}, {index, energy}));
  return out;
}

ScenarioOutput run_odmr(const Json& p, const RunContext&) {
  const FrequencyGrid grid = make_grid(p["grid"]);
  const auto spec = spin::odmr_spectrum(spin_spec(p), grid, p["linewidth"].get<double>());
  ScenarioOutput out;
  std::vector<double> f, s, lo, up;
  double best = 0.0, best_f = 0.0;
  for (const auto& l : spec.lines) {
    f.push_back(hz(l.frequency));
    s.push_back(l.strength);
    lo.push_back(static_cast<double>(l.lower));
    up.push_back(static_cast<double>(l.upper));
    if (l.strength > best) {
      best = l.strength;
      best_f = l.frequency;
    }
  }
  std::vector<double> gf(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) gf[i] = hz(grid[i]);
  out.summary["line_count"] = spec.lines.size();
  out.summary["strongest_line_Hz"] = hz(best_f);
  out.summary["strongest_line_strength"] = best;
  out.files.emplace_back("odmr.csv",
                         io::csv_table({"frequency_Hz", "intensity"}, {gf, spec.intensity}));
  out.files.emplace_back(
      "lines.csv", io::csv_table({"frequency_Hz", "strength", "lower", "upper"}, {f, s, lo, up}));
  return out;
}

ScenarioOutput run_crot(const Json& p, const RunContext&) {
  const double rabi = p["rabi_frequency"].get<double>();
  const double duration =
      p.contains("duration") ? p["duration"].get<double>() : constants::pi / rabi;
  spin::CrotOptions opt;
  const auto axis = column(p["drive_axis"]);
  opt.drive_axis = Eigen::Vector3d(axis[0], axis[1], axis[2]);
  if (!(opt.drive_axis.norm() > 0.0)) throw ConfigError("parameters.drive_axis must be nonzero");
  opt.drive_axis.normalize();
  const auto r = spin::crot_gate(spin_spec(p), p["drive_frequency"].get<double>(), rabi, duration,
                                 opt);
  ScenarioOutput out;
  out.summary["fidelity"] = r.fidelity;
  out.summary["duration_s"] = duration;
  out.summary["addressed_frequency_Hz"] = hz(r.addressed_frequency);
  out.summary["addressed_nuclear_projection"] = 0.5 * r.addressed_projection_twice;
  out.summary["hyperfine_splitting_Hz"] = hz(r.hyperfine_splitting);
  out.summary["richardson_error"] = r.richardson_error;
  out.summary["steps"] = r.steps;
  std::string warnings;
  for (const auto& w : r.warnings) warnings += (warnings.empty() ? "" : "; ") + w;
  out.summary["warnings"] = warnings;
  std::vector<double> row, col, re, im;
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      row.push_back(i);
      col.push_back(j);
      re.push_back(r.qubit_unitary(i, j).real());
      im.push_back(r.qubit_unitary(i, j).imag());
    }
  }
  out.files.emplace_back("qubit_unitary.csv",
                         io::csv_table({"row", "column", "re", "im"}, {row, col, re, im}));
  return out;
}

vibronic::VibronicModel vibronic_model(const Json& p) {
  vibronic::VibronicModel m;
  m.zpl_frequency = p["zpl_frequency"].get<double>();
  m.radiative_rate = p["radiative_rate"].get<double>();
  m.temperature = p["temperature"].get<double>();
  for (const auto& v : p["vibron_modes"]) {
    m.vibron_modes.push_back({v["frequency"].get<double>(), v["huang_rhys"].get<double>(),
                              v["relaxation_rate"].get<double>()});
  }
  const Json& ph = p["phonons"];
  m.phonons.coupling_weight = ph["coupling_weight"].get<double>();
  m.phonons.peak_frequency = ph["peak_frequency"].get<double>();
  m.phonons.cutoff_frequency = ph["cutoff_frequency"].get<double>();
  const Json& d = p["dephasing"];
  m.dephasing = {d["constant"].get<double>(), d["activated_amplitude"].get<double>(),
                 d["activation_energy"].get<double>()};
  if (p.contains("target_debye_waller")) {
    m = vibronic::scale_to_debye_waller(m, p["target_debye_waller"].get<double>());
  }
  return m;
}

ScenarioOutput run_emission(const Json& p, const RunContext&) {
  const auto model = vibronic_model(p);
  const FrequencyGrid grid = make_grid(p["grid"], model.zpl_frequency);
  const auto spectrum = vibronic::emission_spectrum(model, grid);
  ScenarioOutput out;
  out.summary["debye_waller"] = vibronic::debye_waller(model);
  out.summary["zpl_branching_ratio"] = vibronic::zpl_branching_ratio(model);
  out.summary["zpl_linewidth_rad_s"] = model.zpl_linewidth();
  out.summary["spectrum_integral"] = spectrum.integral();
  out.files.emplace_back("spectrum.csv", vibronic::to_csv(spectrum));
  return out;
}

ScenarioOutput run_relaxation(const Json& p, const RunContext&) {
  relaxation::RelaxationInput in;
  in.vibron_frequency = p["vibron_frequency"].get<double>();
  in.phonon_cutoff = p["phonon_cutoff"].get<double>();
  in.other_vibron_frequencies = column(p["other_vibron_frequencies"]);
  const auto path = relaxation::classify_relaxation(in);
  ScenarioOutput out;
  out.summary["classification"] = relaxation::to_string(path);
  if (path == relaxation::RelaxationPath::TwoPhonon) {
    vibronic::PhononSpectralDensity j;
    j.coupling_weight = 1.0;
    j.peak_frequency = p["phonon_peak_frequency"].get<double>();
    j.cutoff_frequency = in.phonon_cutoff;
    out.summary["two_phonon_rate"] = relaxation::two_phonon_rate(
        in.vibron_frequency, j, p["coupling"].get<double>(), p["temperature"].get<double>());
  } else {
    out.summary["two_phonon_rate"] = nullptr;
  }
  return out;
}

ScenarioOutput run_lindblad(const Json& p, const RunContext&) {
  const auto system = dynamics::two_level_system(emitter(p));
  dynamics::Matrix rho0 = dynamics::Matrix::Zero(2, 2);
  const std::string initial = p["initial"].get<std::string>();
  if (initial == "ground") {
    rho0(0, 0) = 1.0;
  } else if (initial == "excited") {
    rho0(1, 1) = 1.0;
  } else {
    throw ConfigError("parameters.initial must be \"ground\" or \"excited\"");
  }
  const auto times = sample_times(p["duration"].get<double>(), p["samples"].get<std::size_t>());
  const auto states = dynamics::evolve(system, rho0, times);
  std::vector<double> pe, cre, cim, tr;
  for (const auto& rho : states) {
    pe.push_back(rho(1, 1).real());
    cre.push_back(rho(0, 1).real());
    cim.push_back(rho(0, 1).imag());
    tr.push_back(rho.trace().real());
  }
  const auto ss = dynamics::steady_state(system);
  ScenarioOutput out;
  out.summary["final_p_excited"] = pe.back();
  out.summary["steady_state_p_excited"] = ss(1, 1).real();
  out.files.emplace_back(
      "trajectory.csv", io::csv_table({"time_s", "p_excited", "coherence_re", "coherence_im",
                                       "trace"},
                                      {times, pe, cre, cim, tr}));
  return out;
}

ScenarioOutput run_g2(const Json& p, const RunContext& ctx) {
  const auto system = dynamics::two_level_system(emitter(p));
  const auto taus = sample_times(p["tau_max"].get<double>(), p["samples"].get<std::size_t>());
  const dynamics::Matrix a = dynamics::lowering_operator();
  const auto g2 = dynamics::g2_correlation(system, a, taus);
  ScenarioOutput out;
  out.summary["g2_zero"] = g2.front();
  out.summary["g2_final"] = g2.back();
  std::vector<std::string> header{"tau_s", "g2"};
  std::vector<std::vector<double>> cols{taus, g2};
  const auto trajectories = p["monte_carlo_trajectories"].get<std::size_t>();
  if (trajectories > 0) {
    const auto rho_ss = dynamics::steady_state(system);
    const dynamics::Matrix number = a.adjoint() * a;
    const double mean = dynamics::expectation(number, rho_ss);
    dynamics::Matrix rho_c = a * rho_ss * a.adjoint();
    rho_c = 0.5 * (rho_c + rho_c.adjoint());
    rho_c /= rho_c.trace();
    const auto est =
        dynamics::quantum_jump_expectation(system, rho_c, number, taus, trajectories, ctx.seed);
    std::vector<double> mc(taus.size()), se(taus.size());
    for (std::size_t k = 0; k < taus.size(); ++k) {
      mc[k] = est.mean[k] / mean;
      se[k] = est.standard_error[k] / mean;
    }
    out.summary["monte_carlo_trajectories"] = trajectories;
    out.summary["monte_carlo_g2_zero"] = mc.front();
    header.insert(header.end(), {"g2_monte_carlo", "g2_monte_carlo_stderr"});
    cols.push_back(mc);
    cols.push_back(se);
  }
  out.files.emplace_back("g2.csv", io::csv_table(header, cols));
  return out;
}

std::vector<Field> pulse_fields() {
  return {quantity("peak_rabi", kFreq, "peak Rabi frequency", 0.0),
          required(quantity("center", kTime, "pulse centre")),
          required(above(quantity("width", kTime, "rms pulse duration"), 0.0))};
}

ScenarioOutput run_raman(const Json& p, const RunContext&) {
  protocols::RamanMemorySpec s;
  s.gamma0 = p["gamma0"].get<double>();
  s.kappa_v = p["kappa_v"].get<double>();
  s.detuning = p["detuning"].get<double>();
  s.storage_hold = p["storage_hold"].get<double>();
  const auto pulse = [](const Json& j) {
    protocols::Pulse q;
    q.peak_rabi = j["peak_rabi"].get<double>();
    q.center = j["center"].get<double>();
    q.width = j["width"].get<double>();
    return q;
  };
  s.control = pulse(p["control"]);
  s.signal = pulse(p["signal"]);
  const auto r = protocols::raman_memory_efficiency(s);
  ScenarioOutput out;
  out.summary["storage"] = r.storage;
  out.summary["retrieval"] = r.retrieval;
  out.summary["hold_factor"] = r.hold_factor;
  out.summary["total"] = r.total;
  return out;
}

ScenarioOutput run_cavity(const Json& p, const RunContext&) {
  protocols::CavityInterfaceSpec s;
  s.g = p["g"].get<double>();
  s.kappa = p["kappa"].get<double>();
  s.kappa_in = p.contains("kappa_in") ? p["kappa_in"].get<double>() : 0.5 * s.kappa;
  s.kappa_out = p.contains("kappa_out") ? p["kappa_out"].get<double>() : 0.5 * s.kappa;
  s.gamma = p["gamma"].get<double>();
  s.emitter_coupled = p["emitter_coupled"].get<bool>();
  const auto resp = protocols::cavity_response(s, make_grid(p["grid"]));
  std::vector<double> d, rre, rim, tre, tim, refl, trans;
  for (std::size_t i = 0; i < resp.detuning.size(); ++i) {
    d.push_back(hz(resp.detuning[i]));
    rre.push_back(resp.reflection[i].real());
    rim.push_back(resp.reflection[i].imag());
    tre.push_back(resp.transmission[i].real());
    tim.push_back(resp.transmission[i].imag());
    refl.push_back(std::norm(resp.reflection[i]));
    trans.push_back(std::norm(resp.transmission[i]));
  }
  ScenarioOutput out;
  const auto split = protocols::vacuum_rabi_splitting(s);
  protocols::CavityInterfaceSpec on = s;
  on.emitter_coupled = true;
  const auto centre = protocols::cavity_response(on, FrequencyGrid(-1.0, 1.0, 3));
  out.summary["cooperativity"] = s.gamma > 0.0 ? protocols::cavity_cooperativity(s) : 0.0;
  out.summary["spin_photon_fidelity"] = protocols::spin_photon_fidelity(s);
  out.summary["coupled_resonant_transmittance"] = std::norm(centre.transmission[1]);
  out.summary["coupled_resonant_reflectance"] = std::norm(centre.reflection[1]);
  out.summary["pole_splitting_rad_s"] = split.pole_splitting;
  out.summary["peak_splitting_rad_s"] = split.peak_splitting;
  out.files.emplace_back(
      "response.csv",
      io::csv_table({"detuning_Hz", "r_re", "r_im", "t_re", "t_im", "reflectance",
                     "transmittance", "loss"},
                    {d, rre, rim, tre, tim, refl, trans, resp.loss}));
  return out;
}

ScenarioOutput run_optomech(const Json& p, const RunContext&) {
  protocols::OptomechParams o;
  o.g0 = p["g0"].get<double>();
  o.omega_v = p["omega_v"].get<double>();
  o.kappa_v = p["kappa_v"].get<double>();
  o.gamma0 = p["gamma0"].get<double>();
  o.temperature = p["temperature"].get<double>();
  if (p.contains("occupation")) o.occupation_override = p["occupation"].get<double>();
  const auto r = protocols::optomech_cooperativity(o);
  ScenarioOutput out;
  out.summary["cooperativity"] = r.cooperativity;
  out.summary["occupation"] = r.occupation;
  out.summary["g0_over_omega_v"] = o.g0 / o.omega_v;
  out.summary["ultra_strong"] = r.ultra_strong;
  return out;
}

ScenarioOutput run_screening(const Json& p, const RunContext& ctx) {
  std::filesystem::path input = p["input"].get<std::string>();
  if (input.is_relative()) input = ctx.config_dir / input;
  const auto data = screening::ingest(input);
  screening::SelectionCriteria crit{p["min_t1_ev"].get<double>(), p["max_s1_ev"].get<double>()};
  const auto picked = screening::select_candidates(data.records, crit);
  ScenarioOutput out;
  out.summary["records"] = data.records.size();
  out.summary["rejected"] = data.rejected.size();
  out.summary["candidates"] = picked.size();
  try {
    const auto fit = screening::fit_linear_scaling(data.records);
    out.summary["slope"] = fit.slope;
    out.summary["intercept_ev"] = fit.intercept;
    out.summary["r_squared"] = fit.r_squared;
  } catch (const DegenerateFit&) {
    out.summary["slope"] = nullptr;
    out.summary["intercept_ev"] = nullptr;
    out.summary["r_squared"] = nullptr;
  }
  out.files.emplace_back("candidates.csv", screening::to_csv(picked));
  std::string rejected = "row,column,reason\n";
  for (const auto& d : data.rejected) {
    rejected += std::to_string(d.row) + ',' + std::to_string(d.column) + ',' +
                io::csv_field(d.reason) + '\n';
  }
  out.files.emplace_back("rejected.csv", rejected);
  return out;
}

std::vector<Scenario> build() {
  std::vector<Scenario> s;

  s.push_back({"spin_spectrum", "eigenvalues of the triplet spin Hamiltonian", spin_fields(),
               run_spin_spectrum});

  auto odmr = spin_fields();
  odmr.push_back(grid_field("grid", "microwave frequency grid"));
  odmr.push_back(required(above(quantity("linewidth", kFreq, "Lorentzian FWHM"), 0.0)));
  s.push_back({"odmr", "magnetic-dipole ODMR spectrum", odmr, run_odmr});

  auto crot = spin_fields();
  crot.push_back(required(above(quantity("drive_frequency", kFreq, "microwave frequency"), 0.0)));
  crot.push_back(
      required(above(quantity("rabi_frequency", kFreq, "Rabi frequency of the addressed line"), 0.0)));
  crot.push_back(above(quantity("duration", kTime, "gate time, default pi / rabi_frequency"), 0.0));
  crot.push_back(sized(quantity_list("drive_axis", Dimension::Dimensionless,
                                     "microwave polarization (x, y, z)", Json::array({1, 1, 1})),
                       3));
  s.push_back({"crot", "electron-nuclear controlled rotation", crot, run_crot});

  s.push_back(
      {"emission_spectrum",
       "vibronic emission spectrum, Debye-Waller factor and ZPL branching",
       {required(above(quantity("zpl_frequency", kFreq, "zero-phonon line"), 0.0)),
        required(above(quantity("radiative_rate", kFreq, "gamma0, ZPL natural width"), 0.0)),
        at_least(quantity("temperature", kTemp, "temperature", 0.0), 0.0),
        object_list("vibron_modes",
                    {required(above(quantity("frequency", kFreq, "mode frequency"), 0.0)),
                     required(at_least(number("huang_rhys", "Huang-Rhys factor"), 0.0)),
                     at_least(quantity("relaxation_rate", kFreq, "added FWHM per quantum", 0.0),
                              0.0)},
                    "intramolecular modes"),
        object("phonons",
               {at_least(number("coupling_weight", "phonon Huang-Rhys weight", 0.0), 0.0),
                above(quantity("peak_frequency", kFreq, "sideband peak", two_pi * 1.75e12), 0.0),
                above(quantity("cutoff_frequency", kFreq, "maximal phonon frequency",
                               two_pi * 4.5e12),
                      0.0)},
               "super-ohmic phonon spectral density"),
        object("dephasing",
               {at_least(quantity("constant", kFreq, "constant ZPL broadening", 0.0), 0.0),
                at_least(quantity("activated_amplitude", kFreq, "activated broadening", 0.0), 0.0),
                at_least(quantity("activation_energy", kFreq, "activation energy", 0.0), 0.0)},
               "additive ZPL pure dephasing"),
        above(number("target_debye_waller", "rescale all couplings to this ZPL fraction"), 0.0),
        grid_field("grid", "frequency grid as offsets from the ZPL")},
       run_emission});

  s.push_back({"relaxation_classify",
               "vibrational relaxation pathway and two-phonon rate",
               {required(above(quantity("vibron_frequency", kFreq, "relaxing mode"), 0.0)),
                required(above(quantity("phonon_cutoff", kFreq, "maximal phonon frequency"), 0.0)),
                above(quantity_list("other_vibron_frequencies", kFreq, "other guest modes",
                                    Json::array()),
                      0.0),
                quantity("coupling", kFreq, "cubic anharmonic coupling (arbitrary scale)", 0.0),
                at_least(quantity("temperature", kTemp, "temperature", 0.0), 0.0),
                above(quantity("phonon_peak_frequency", kFreq, "phonon density peak",
                               two_pi * 1.75e12),
                      0.0)},
               run_relaxation});

  auto lindblad = emitter_fields();
  lindblad.push_back(text("initial", "\"ground\" or \"excited\"", "ground"));
  lindblad.push_back(required(above(quantity("duration", kTime, "propagation time"), 0.0)));
  lindblad.push_back(at_least(integer("samples", "output time points", 101), 2));
  s.push_back({"lindblad", "driven two-level emitter master equation", lindblad, run_lindblad});

  auto g2 = emitter_fields();
  g2.push_back(required(above(quantity("tau_max", kTime, "largest delay"), 0.0)));
  g2.push_back(at_least(integer("samples", "delay points", 201), 2));
  g2.push_back(at_least(
      integer("monte_carlo_trajectories", "seeded quantum-jump cross-check, 0 disables", 0), 0));
  s.push_back({"g2", "second-order photon correlation", g2, run_g2});

  s.push_back({"raman_memory",
               "Raman vibrational memory efficiency",
               {required(at_least(quantity("gamma0", kFreq, "S1 decay rate"), 0.0)),
                at_least(quantity("kappa_v", kFreq, "memory-mode decay rate", 1e11), 0.0),
                quantity("detuning", kFreq, "one-photon detuning from S1", 0.0),
                required(object("control", pulse_fields(), "control pulse")),
                required(object("signal", pulse_fields(), "signal pulse")),
                at_least(quantity("storage_hold", kTime, "storage time", 0.0), 0.0)},
               run_raman});

  s.push_back({"cavity_interface",
               "cavity spin-photon interface response",
               {required(at_least(quantity("g", kFreq, "emitter-cavity coupling"), 0.0)),
                required(above(quantity("kappa", kFreq, "total cavity decay"), 0.0)),
                at_least(quantity("kappa_in", kFreq, "input mirror decay, default kappa/2"), 0.0),
                at_least(quantity("kappa_out", kFreq, "output mirror decay, default kappa/2"),
                         0.0),
                required(above(quantity("gamma", kFreq, "emitter decay"), 0.0)),
                boolean("emitter_coupled", "emitter in the singlet (coupled) branch", true),
                grid_field("grid", "probe detuning grid")},
               run_cavity});

  s.push_back({"optomech",
               "molecular optomechanical cooperativity",
               {required(at_least(quantity("g0", kFreq, "single-photon coupling"), 0.0)),
                required(above(quantity("omega_v", kFreq, "vibron frequency"), 0.0)),
                required(above(quantity("kappa_v", kFreq, "vibron decay"), 0.0)),
                required(above(quantity("gamma0", kFreq, "optical decay"), 0.0)),
                at_least(quantity("temperature", kTemp, "temperature", 0.0), 0.0),
                at_least(number("occupation", "thermal occupation override"), 0.0)},
               run_optomech});

  s.push_back({"screening",
               "molecule screening: ingest, S1-T1 fit and candidate selection",
               {required(text("input", "CSV path, relative to the config file")),
                number("min_t1_ev", "lowest admissible T1 energy", 2.0),
                number("max_s1_ev", "highest admissible S1 energy", 3.5)},
               run_screening});
  return s;
}

}  // namespace

const std::vector<Scenario>& scenarios() {
  static const std::vector<Scenario> all = build();
  return all;
}

const Scenario& find_scenario(const std::string& kind) {
  for (const auto& s : scenarios()) {
    if (s.kind == kind) return s;
  }
  throw ConfigError("unknown scenario_kind '" + kind + "'");
}

}  // namespace molsim::cli
