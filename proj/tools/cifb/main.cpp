// Command-line experiment runner: exposes coefficient generation, loop
// simulation, coefficient perturbation, order sweeps, the bit-width
// reduction experiment and transfer-function tables, with deterministic
// CSV/JSON outputs and a manifest per run.
#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <cstdint>
#include <filesystem>
#include <iostream>
#include <limits>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "cifb/analysis.hpp"
#include "cifb/coefficients.hpp"
#include "cifb/dft.hpp"
#include "cifb/errors.hpp"
#include "cifb/io.hpp"
#include "cifb/modulator.hpp"
#include "cifb/signals.hpp"
#include "cifb/transfer.hpp"

namespace fs = std::filesystem;
using json = nlohmann::json;
using namespace cifb;

namespace {

constexpr const char* kVersion = "0.1.0";
constexpr long long kFullScaleSamples = 1 << 24;

std::string hex64(std::uint64_t v) {
  char buf[20];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
  return buf;
}

std::string digest_ints(const IntVec& a, const IntVec& b) {
  IntVec cat(a.size() + b.size());
  cat << a, b;
  return hex64(io::fnv1a64(cat.data(), static_cast<std::size_t>(cat.size()) * sizeof(std::int64_t)));
}

std::string mode_name(const std::string& mode) { return mode == "int" ? "exact-int" : "float64"; }

json verdict_json(const StabilityVerdict& v) {
  json j;
  j["stable"] = v.stable;
  j["reason"] = to_string(v.reason);
  j["max_abs_y"] = v.max_abs_output;
  j["first_violation_index"] =
      v.first_violation_index ? json(*v.first_violation_index) : json(nullptr);
  return j;
}

void write_manifest(const fs::path& dir, const std::string& command, const json& params,
                    const std::string& mode, const std::string& status,
                    const std::vector<std::string>& outputs) {
  json m;
  m["command"] = command;
  m["params"] = params;
  m["mode"] = mode;
  m["status"] = status;
  m["outputs"] = outputs;
  m["version"] = kVersion;
  io::write_file(dir / "manifest.json", m.dump(2) + "\n");
}

void print_verdict(const std::string& label, const std::string& status,
                   const StabilityVerdict& v) {
  std::cout << label << "status=" << status << " stable=" << (v.stable ? "true" : "false")
            << " reason=" << to_string(v.reason) << " max_abs_y=" << io::fmt(v.max_abs_output)
            << "\n";
}

// ---------------------------------------------------------------------------
// shared flag bundles

struct StimulusArgs {
  double amplitude = 0.0;
  double freq = 0.0;
  double freq2 = 0.0;
  long long samples = 0;
  bool round_input = false;
  CLI::Option* o_amp = nullptr;
  CLI::Option* o_freq = nullptr;
  CLI::Option* o_freq2 = nullptr;
  CLI::Option* o_samples = nullptr;
  CLI::Option* o_round = nullptr;
};

void add_stimulus_flags(CLI::App* cmd, StimulusArgs& a, bool with_second_tone) {
  a.o_amp = cmd->add_option("-A,--amplitude", a.amplitude, "stimulus amplitude");
  a.o_freq = cmd->add_option("-F,--freq", a.freq, "relative tone frequency in (0, 0.5)");
  if (with_second_tone)
    a.o_freq2 = cmd->add_option("--freq2", a.freq2, "second tone frequency");
  a.o_samples = cmd->add_option("-N,--samples", a.samples, "number of samples");
  a.o_round = cmd->add_flag("--round-input,!--no-round-input", a.round_input,
                            "round the stimulus to integers");
}

bool has_second_tone(const StimulusArgs& a) { return a.o_freq2 && a.o_freq2->count() > 0; }

SignalSpec make_spec(const StimulusArgs& a) {
  SignalSpec spec;
  spec.amplitude = a.amplitude;
  spec.freqs = has_second_tone(a) ? std::vector<double>{a.freq, a.freq2}
                                  : std::vector<double>{a.freq};
  spec.samples = a.samples;
  spec.integer_rounded = a.round_input;
  return spec;
}

Eigen::ArrayXd build_stimulus(const StimulusArgs& a) {
  const SignalSpec spec = make_spec(a);
  return has_second_tone(a) ? two_tone(spec) : sine(spec);
}

// |x| bound for the BIBO verdict: A for one tone, 2A for two.
double input_bound(const StimulusArgs& a) {
  if (!(a.amplitude > 0.0)) throw InvalidSpec("amplitude must be positive");
  return a.amplitude * (has_second_tone(a) ? 2.0 : 1.0);
}

void stimulus_params(json& p, const StimulusArgs& a) {
  p["amplitude"] = a.amplitude;
  p["freq"] = a.freq;
  p["freq2"] = has_second_tone(a) ? json(a.freq2) : json(nullptr);
  p["samples"] = a.samples;
  p["round_input"] = a.round_input;
}

// fills an option's value only when the user did not set it explicitly
template <typename T, typename V>
void fill(CLI::Option* opt, T& var, V value) {
  if (opt == nullptr || opt->count() == 0) var = static_cast<T>(value);
}

struct VerdictArgs {
  double bibo_k = kDefaultK;
  int run_threshold = kDefaultRunThreshold;
};

void add_verdict_flags(CLI::App* cmd, VerdictArgs& a) {
  cmd->add_option("--bibo-k", a.bibo_k, "BIBO constant K (verdict bound K*B)")
      ->capture_default_str();
  cmd->add_option("--run-threshold", a.run_threshold,
                  "consecutive pinned samples that count as saturation")
      ->capture_default_str();
}

ModulatorConfig<double> float_config(int order, double dq, std::optional<double> llim,
                                     std::optional<double> ulim) {
  auto cfg = ModulatorConfig<double>::from_set(cifb_coefficients(order));
  cfg.dq = dq;
  cfg.llim = llim;
  cfg.ulim = ulim;
  return cfg;
}

ModulatorConfig<Int128> int_config(int order, double dq, std::optional<double> llim,
                                   std::optional<double> ulim) {
  auto cfg = ModulatorConfig<Int128>::from_set(cifb_coefficients(order));
  cfg.dq = Int128::from_double(dq);
  if (llim) cfg.llim = Int128::from_double(*llim);
  if (ulim) cfg.ulim = Int128::from_double(*ulim);
  return cfg;
}

// ---------------------------------------------------------------------------
// coeffs

struct CoeffsArgs {
  int order = 0;
  std::string format = "csv";
  std::string out;
  CLI::Option* o_out = nullptr;
};

std::string coeffs_csv(const CoefficientSet& set) {
  std::ostringstream os;
  os << "k,c_k,d_k\n";
  for (int k = 1; k <= set.order + 1; ++k) {
    os << k << ',';
    if (k <= set.order) os << set.c(k - 1);
    os << ',' << set.d(k - 1) << '\n';
  }
  return os.str();
}

std::string coeffs_json(const CoefficientSet& set) {
  json j;
  j["order"] = set.order;
  j["c"] = std::vector<std::int64_t>(set.c.data(), set.c.data() + set.c.size());
  j["d"] = std::vector<std::int64_t>(set.d.data(), set.d.data() + set.d.size());
  return j.dump(2) + "\n";
}

int run_coeffs(const CoeffsArgs& a) {
  const CoefficientSet set = cifb_coefficients(a.order);
  const std::string text = a.format == "json" ? coeffs_json(set) : coeffs_csv(set);
  std::cout << text;
  if (a.o_out->count() > 0) {
    fs::create_directories(a.out);
    const std::string name = a.format == "json" ? "coeffs.json" : "coeffs.csv";
    io::write_file(fs::path(a.out) / name, text);
    json params;
    params["order"] = a.order;
    params["format"] = a.format;
    params["input_digest"] = digest_ints(set.c, set.d);
    write_manifest(a.out, "coeffs", params, "exact-int", "completed", {name});
  }
  return 0;
}

// ---------------------------------------------------------------------------
// simulate

struct SimulateArgs {
  int order = 0;
  double dq = 0.0;
  std::optional<double> llim, ulim;
  std::string mode = "float";
  std::string preset;
  std::string out = ".";
  StimulusArgs stim;
  VerdictArgs verdict;
  CLI::Option *o_order = nullptr, *o_dq = nullptr, *o_mode = nullptr, *o_preset = nullptr;
};

void apply_simulate_preset(SimulateArgs& a) {
  if (a.preset.empty()) return;
  if (a.preset == "fig8") {
    fill(a.o_order, a.order, 30);
    fill(a.o_dq, a.dq, 0.0);
    fill(a.o_mode, a.mode, "float");
  } else {  // fig10: high-order exact-integer run
    fill(a.o_order, a.order, 51);
    fill(a.o_dq, a.dq, 0.0);
    fill(a.o_mode, a.mode, "int");
    fill(a.stim.o_round, a.stim.round_input, true);
  }
  fill(a.stim.o_amp, a.stim.amplitude, 8.0);
  fill(a.stim.o_freq, a.stim.freq, 0.01);
  fill(a.stim.o_samples, a.stim.samples, 201);
}

int run_simulate(SimulateArgs& a) {
  apply_simulate_preset(a);
  const double B = input_bound(a.stim);
  const Eigen::ArrayXd x = build_stimulus(a.stim);

  std::string digest, status;
  StabilityVerdict v;
  std::ostringstream csv;
  if (a.mode == "int") {
    if (!a.stim.round_input) throw InvalidSpec("exact-int mode requires --round-input");
    const auto cfg = int_config(a.order, a.dq, a.llim, a.ulim);
    const ScalarVec<Int128> xi = to_exact(x);
    digest = io::digest_hex(xi);
    const auto trace = run(cfg, xi);
    v = bibo_verdict(trace, B, a.verdict.bibo_k, a.verdict.run_threshold);
    io::write_trace_csv(csv, trace);
    status = to_string(trace.status);
  } else {
    const auto cfg = float_config(a.order, a.dq, a.llim, a.ulim);
    digest = io::digest_hex(x);
    const auto trace = run(cfg, Eigen::VectorXd(x.matrix()));
    v = bibo_verdict(trace, B, a.verdict.bibo_k, a.verdict.run_threshold);
    io::write_trace_csv(csv, trace);
    status = to_string(trace.status);
  }

  fs::create_directories(a.out);
  io::write_file(fs::path(a.out) / "trace.csv", csv.str());
  json params;
  params["order"] = a.order;
  stimulus_params(params, a.stim);
  params["dq"] = a.dq;
  params["llim"] = a.llim ? json(*a.llim) : json(nullptr);
  params["ulim"] = a.ulim ? json(*a.ulim) : json(nullptr);
  params["bibo_k"] = a.verdict.bibo_k;
  params["run_threshold"] = a.verdict.run_threshold;
  params["preset"] = a.preset.empty() ? json(nullptr) : json(a.preset);
  params["input_digest"] = digest;
  write_manifest(a.out, "simulate", params, mode_name(a.mode), status, {"trace.csv"});

  print_verdict("", status, v);
  return status == "completed" ? 0 : 3;
}

// ---------------------------------------------------------------------------
// perturb

struct PerturbArgs {
  int order = 0;
  int index = 0;
  double eps = 1e-12;
  std::string preset;
  std::string out = ".";
  StimulusArgs stim;
  VerdictArgs verdict;
  CLI::Option *o_order = nullptr, *o_index = nullptr, *o_eps = nullptr;
};

int run_perturb(PerturbArgs& a) {
  if (a.preset == "fig9") {
    fill(a.o_order, a.order, 30);
    fill(a.o_index, a.index, 16);  // the largest coefficient of order 30
    fill(a.o_eps, a.eps, 1e-12);
    fill(a.stim.o_amp, a.stim.amplitude, 8.0);
    fill(a.stim.o_freq, a.stim.freq, 0.01);
    fill(a.stim.o_samples, a.stim.samples, 201);
  }
  check_order(a.order);
  if (a.index < 1 || a.index > a.order)
    throw InvalidSpec("coefficient index must lie in 1..order");
  const double B = input_bound(a.stim);
  const Eigen::ArrayXd x = build_stimulus(a.stim);
  const Eigen::VectorXd xv = x.matrix();

  auto base_cfg = float_config(a.order, 0.0, std::nullopt, std::nullopt);
  auto pert_cfg = base_cfg;
  pert_cfg.c(a.index - 1) *= 1.0 + a.eps;

  const auto base = run(base_cfg, xv);
  const auto pert = run(pert_cfg, xv);
  const auto vb = bibo_verdict(base, B, a.verdict.bibo_k, a.verdict.run_threshold);
  const auto vp = bibo_verdict(pert, B, a.verdict.bibo_k, a.verdict.run_threshold);
  const double ratio = vb.max_abs_output > 0.0
                           ? vp.max_abs_output / vb.max_abs_output
                           : (vp.max_abs_output > 0.0
                                  ? std::numeric_limits<double>::infinity()
                                  : 1.0);

  json report;
  report["baseline"] = verdict_json(vb);
  report["baseline"]["status"] = to_string(base.status);
  report["perturbed"] = verdict_json(vp);
  report["perturbed"]["status"] = to_string(pert.status);
  report["ratio"] = ratio;
  report["index"] = a.index;
  report["epsilon"] = a.eps;

  fs::create_directories(a.out);
  io::write_file(fs::path(a.out) / "perturb.json", report.dump(2) + "\n");
  json params;
  params["order"] = a.order;
  params["index"] = a.index;
  params["epsilon"] = a.eps;
  stimulus_params(params, a.stim);
  params["bibo_k"] = a.verdict.bibo_k;
  params["run_threshold"] = a.verdict.run_threshold;
  params["preset"] = a.preset.empty() ? json(nullptr) : json(a.preset);
  params["input_digest"] = io::digest_hex(x);
  write_manifest(a.out, "perturb", params, "float64", "completed", {"perturb.json"});

  print_verdict("baseline:  ", to_string(base.status), vb);
  print_verdict("perturbed: ", to_string(pert.status), vp);
  std::cout << "ratio=" << io::fmt(ratio) << "\n";
  return 0;  // instability here is the expected observation, not a failure
}

// ---------------------------------------------------------------------------
// sweep

struct SweepArgs {
  int from = 0;
  int to = 0;
  std::string mode = "float";
  std::string preset;
  std::string out = ".";
  StimulusArgs stim;
  VerdictArgs verdict;
  CLI::Option *o_from = nullptr, *o_to = nullptr, *o_mode = nullptr;
};

int run_sweep(SweepArgs& a) {
  if (a.preset == "fig11") {
    fill(a.o_from, a.from, 30);
    fill(a.o_to, a.to, 40);
    fill(a.o_mode, a.mode, "float");
    fill(a.stim.o_amp, a.stim.amplitude, 8.0);
    fill(a.stim.o_freq, a.stim.freq, 0.01);
    fill(a.stim.o_samples, a.stim.samples, 201);
  }
  const double B = input_bound(a.stim);
  const SignalSpec spec = make_spec(a.stim);
  const NumericMode mode = a.mode == "int" ? NumericMode::exact_int : NumericMode::float64;
  const SweepResult result = find_stability_boundary(a.from, a.to, spec, B, a.verdict.bibo_k,
                                                     a.verdict.run_threshold, mode);

  std::ostringstream csv;
  io::write_sweep_csv(csv, result);
  fs::create_directories(a.out);
  io::write_file(fs::path(a.out) / "sweep.csv", csv.str());

  const Eigen::ArrayXd x = sine(spec);
  json params;
  params["from"] = a.from;
  params["to"] = a.to;
  stimulus_params(params, a.stim);
  params["bibo_k"] = a.verdict.bibo_k;
  params["run_threshold"] = a.verdict.run_threshold;
  params["preset"] = a.preset.empty() ? json(nullptr) : json(a.preset);
  params["input_digest"] =
      mode == NumericMode::exact_int ? io::digest_hex(to_exact(x)) : io::digest_hex(x);
  write_manifest(a.out, "sweep", params, mode_name(a.mode), "completed", {"sweep.csv"});

  if (result.largest_stable)
    std::cout << "largest_stable=" << *result.largest_stable << "\n";
  else
    std::cout << "largest_stable=none\n";
  return 0;
}

// ---------------------------------------------------------------------------
// ddc

struct DdcArgs {
  int order = 10;
  double amplitude = 65536.0;  // 2^16, a 17-bit signed stream
  double dq = 256.0;           // 2^8 step: 17 -> 9 bits
  double freq = 0.125;
  double freq2 = 0.1;
  long long samples = 1 << 18;
  bool round_input = false;
  double fit_lo = 0.0, fit_hi = 0.0;
  std::string mode = "float";
  std::string preset;
  std::string out = ".";
  VerdictArgs verdict;
  CLI::Option *o_freq2 = nullptr, *o_fit_lo = nullptr, *o_fit_hi = nullptr;
};

struct ToneRun {
  std::string status;
  StabilityVerdict verdict;
  std::string trace_csv;
  std::string digest;
  Eigen::ArrayXd e;
  bool completed = false;
};

ToneRun ddc_tone(const DdcArgs& a, double F) {
  SignalSpec spec;
  spec.amplitude = a.amplitude;
  spec.freqs = {F};
  spec.samples = a.samples;
  spec.integer_rounded = a.round_input;
  const Eigen::ArrayXd x = sine(spec);

  ToneRun r;
  std::ostringstream csv;
  if (a.mode == "int") {
    if (!a.round_input) throw InvalidSpec("exact-int mode requires --round-input");
    const auto cfg = int_config(a.order, a.dq, std::nullopt, std::nullopt);
    const ScalarVec<Int128> xi = to_exact(x);
    r.digest = io::digest_hex(xi);
    const auto trace = run(cfg, xi);
    r.verdict = bibo_verdict(trace, a.amplitude, a.verdict.bibo_k, a.verdict.run_threshold);
    io::write_trace_csv(csv, trace);
    r.status = to_string(trace.status);
    r.completed = trace.status == RunStatus::completed;
    if (r.completed) r.e = as_double_array(trace.e);
  } else {
    const auto cfg = float_config(a.order, a.dq, std::nullopt, std::nullopt);
    r.digest = io::digest_hex(x);
    const auto trace = run(cfg, Eigen::VectorXd(x.matrix()));
    r.verdict = bibo_verdict(trace, a.amplitude, a.verdict.bibo_k, a.verdict.run_threshold);
    io::write_trace_csv(csv, trace);
    r.status = to_string(trace.status);
    r.completed = trace.status == RunStatus::completed;
    if (r.completed) r.e = trace.e.array();
  }
  r.trace_csv = csv.str();
  return r;
}

int run_ddc(DdcArgs& a) {
  if (!(a.amplitude > 0.0)) throw InvalidSpec("amplitude must be positive");
  if (!is_power_of_two(a.samples))
    throw NotPowerOfTwo("sample count must be a power of two for the spectrum");

  std::vector<double> tones = {a.freq};
  if (a.o_freq2->count() > 0) tones.push_back(a.freq2);

  fs::create_directories(a.out);
  std::vector<std::string> outputs;
  json params;
  params["order"] = a.order;
  params["amplitude"] = a.amplitude;
  params["dq"] = a.dq;
  params["samples"] = a.samples;
  params["full_scale_samples"] = kFullScaleSamples;  // reference length; runs here are reduced
  params["round_input"] = a.round_input;
  params["bibo_k"] = a.verdict.bibo_k;
  params["run_threshold"] = a.verdict.run_threshold;
  params["preset"] = a.preset.empty() ? json(nullptr) : json(a.preset);

  int exit_code = 0;
  std::string overall_status = "completed";
  const Eigen::ArrayXd window = blackman_harris(a.samples);

  for (std::size_t t = 0; t < tones.size(); ++t) {
    const std::string sfx = t == 0 ? "" : "2";
    const double F = tones[t];
    const ToneRun r = ddc_tone(a, F);

    params[t == 0 ? "freq" : "freq2"] = F;
    params[t == 0 ? "input_digest" : "input_digest2"] = r.digest;
    io::write_file(fs::path(a.out) / ("trace" + sfx + ".csv"), r.trace_csv);
    outputs.push_back("trace" + sfx + ".csv");

    if (!r.completed) {
      overall_status = r.status;
      exit_code = 3;
      print_verdict("tone F=" + io::fmt(F) + ": ", r.status, r.verdict);
      continue;  // no spectrum for a truncated trace
    }

    const Spectrum spectrum = power_spectrum(r.e, window, "blackman-harris");
    const double lo = a.o_fit_lo->count() > 0 ? a.fit_lo : 4.0 / static_cast<double>(a.samples);
    const double hi = a.o_fit_hi->count() > 0 ? a.fit_hi : F / 2.0;
    const SlopeFit fit = fit_noise_slope(spectrum, lo, hi, tone_images(F));
    params[t == 0 ? "fit_lo" : "fit_lo2"] = lo;
    params[t == 0 ? "fit_hi" : "fit_hi2"] = hi;

    // reference column: the ideal 20 L dB/decade line through the fit anchor
    const double expected = 20.0 * a.order;
    Eigen::ArrayXd reference(spectrum.frequency.size());
    reference(0) = -std::numeric_limits<double>::infinity();
    for (Eigen::Index k = 1; k < spectrum.frequency.size(); ++k)
      reference(k) = fit.level_mean_db +
                     expected * (std::log10(spectrum.frequency(k)) - fit.log10_f_mean);

    std::ostringstream scsv;
    io::write_spectrum_csv(scsv, spectrum, reference);
    io::write_file(fs::path(a.out) / ("spectrum" + sfx + ".csv"), scsv.str());
    outputs.push_back("spectrum" + sfx + ".csv");

    json slope;
    slope["slope_db_per_decade"] = fit.slope_db_per_decade;
    slope["expected_db_per_decade"] = expected;
    slope["f_lo"] = fit.f_lo;
    slope["f_hi"] = fit.f_hi;
    slope["bins_used"] = fit.bins_used;
    slope["residual_rms_db"] = fit.residual_rms_db;
    slope["verdict"] = verdict_json(r.verdict);
    io::write_file(fs::path(a.out) / ("slope" + sfx + ".json"), slope.dump(2) + "\n");
    outputs.push_back("slope" + sfx + ".json");

    std::cout << "tone F=" << io::fmt(F) << ": slope_db_per_decade="
              << io::fmt(fit.slope_db_per_decade) << " expected=" << io::fmt(expected)
              << " bins=" << fit.bins_used << " stable=" << (r.verdict.stable ? "true" : "false")
              << " max_abs_y=" << io::fmt(r.verdict.max_abs_output) << "\n";
    if (!r.verdict.stable) exit_code = 3;  // this loop is expected stable
  }

  write_manifest(a.out, "ddc", params, mode_name(a.mode), overall_status, outputs);
  return exit_code;
}

// ---------------------------------------------------------------------------
// ntf

struct NtfArgs {
  int order = 0;
  int points = 512;
  std::string out = ".";
};

int run_ntf(NtfArgs& a) {
  if (a.points < 2) throw InvalidSpec("points must be at least 2");
  const CoefficientSet set = cifb_coefficients(a.order);
  const RationalTransfer n = ntf(set.c, a.order);
  const RationalTransfer s = stf(set.c, set.d, a.order);

  std::ostringstream csv;
  csv << "omega,ntf_db,stf_db\n";
  double ntf_pi = 0.0, stf_pi = 0.0;
  for (int i = 1; i <= a.points; ++i) {
    const double omega = std::numbers::pi * static_cast<double>(i) / a.points;
    const double ndb = 20.0 * std::log10(eval_magnitude(n, omega));
    const double sdb = 20.0 * std::log10(eval_magnitude(s, omega));
    csv << io::fmt(omega) << ',' << io::fmt(ndb) << ',' << io::fmt(sdb) << '\n';
    ntf_pi = ndb;
    stf_pi = sdb;
  }
  fs::create_directories(a.out);
  io::write_file(fs::path(a.out) / "ntf.csv", csv.str());
  json params;
  params["order"] = a.order;
  params["points"] = a.points;
  params["input_digest"] = digest_ints(set.c, set.d);
  write_manifest(a.out, "ntf", params, "float64", "completed", {"ntf.csv"});
  std::cout << "ntf_db(pi)=" << io::fmt(ntf_pi) << " stf_db(pi)=" << io::fmt(stf_pi) << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"cascaded-integrator feedback delta-sigma modulator toolkit"};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);

  CoeffsArgs coeffs_args;
  auto* coeffs = app.add_subcommand("coeffs", "print the binomial loop coefficients");
  coeffs->add_option("-L,--order", coeffs_args.order, "modulator order (1..64)")->required();
  coeffs->add_option("--format", coeffs_args.format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
  coeffs_args.o_out = coeffs->add_option("-o,--out", coeffs_args.out, "output directory");

  SimulateArgs sim_args;
  auto* sim = app.add_subcommand("simulate", "run the loop and write the trace");
  sim_args.o_order = sim->add_option("-L,--order", sim_args.order, "modulator order (1..64)");
  add_stimulus_flags(sim, sim_args.stim, true);
  sim_args.o_dq = sim->add_option("--dq", sim_args.dq, "quantization step (0 disables)");
  sim->add_option("--llim", sim_args.llim, "lower output limit");
  sim->add_option("--ulim", sim_args.ulim, "upper output limit");
  sim_args.o_mode = sim->add_option("--mode", sim_args.mode, "float or int")
                        ->check(CLI::IsMember({"float", "int"}))
                        ->capture_default_str();
  sim_args.o_preset = sim->add_option("--preset", sim_args.preset, "fig8 or fig10")
                          ->check(CLI::IsMember({"fig8", "fig10"}));
  add_verdict_flags(sim, sim_args.verdict);
  sim->add_option("-o,--out", sim_args.out, "output directory")->capture_default_str();

  PerturbArgs pert_args;
  auto* pert = app.add_subcommand("perturb", "compare a run against one with a nudged coefficient");
  pert_args.o_order = pert->add_option("-L,--order", pert_args.order, "modulator order (1..64)");
  pert_args.o_index = pert->add_option("--index", pert_args.index, "1-based feedback coefficient index");
  pert_args.o_eps = pert->add_option("--eps", pert_args.eps, "relative perturbation")
                        ->capture_default_str();
  add_stimulus_flags(pert, pert_args.stim, true);
  pert->add_option("--preset", pert_args.preset, "fig9")->check(CLI::IsMember({"fig9"}));
  add_verdict_flags(pert, pert_args.verdict);
  pert->add_option("-o,--out", pert_args.out, "output directory")->capture_default_str();

  SweepArgs sweep_args;
  auto* sweep = app.add_subcommand("sweep", "stability verdict per order over a range");
  sweep_args.o_from = sweep->add_option("--from", sweep_args.from, "first order");
  sweep_args.o_to = sweep->add_option("--to", sweep_args.to, "last order");
  add_stimulus_flags(sweep, sweep_args.stim, false);
  sweep_args.o_mode = sweep->add_option("--mode", sweep_args.mode, "float or int")
                          ->check(CLI::IsMember({"float", "int"}))
                          ->capture_default_str();
  sweep->add_option("--preset", sweep_args.preset, "fig11")->check(CLI::IsMember({"fig11"}));
  add_verdict_flags(sweep, sweep_args.verdict);
  sweep->add_option("-o,--out", sweep_args.out, "output directory")->capture_default_str();

  DdcArgs ddc_args;
  auto* ddc = app.add_subcommand("ddc", "bit-width reduction run with noise spectrum and slope fit");
  ddc->add_option("-L,--order", ddc_args.order, "modulator order")->capture_default_str();
  ddc->add_option("-A,--amplitude", ddc_args.amplitude, "stimulus amplitude")
      ->capture_default_str();
  ddc->add_option("--dq", ddc_args.dq, "quantization step")->capture_default_str();
  ddc->add_option("-F,--freq", ddc_args.freq, "tone frequency")->capture_default_str();
  ddc_args.o_freq2 = ddc->add_option("--freq2", ddc_args.freq2,
                                     "second tone: adds an independent second run");
  ddc->add_option("-N,--samples", ddc_args.samples, "sample count (power of two)")
      ->capture_default_str();
  ddc->add_flag("--round-input,!--no-round-input", ddc_args.round_input,
                "round the stimulus to integers");
  ddc_args.o_fit_lo = ddc->add_option("--fit-lo", ddc_args.fit_lo, "slope fit band low edge");
  ddc_args.o_fit_hi = ddc->add_option("--fit-hi", ddc_args.fit_hi,
                                      "slope fit band high edge (default F/2)");
  ddc->add_option("--mode", ddc_args.mode, "float or int")
      ->check(CLI::IsMember({"float", "int"}))
      ->capture_default_str();
  ddc->add_option("--preset", ddc_args.preset, "fig12 (the built-in defaults)")
      ->check(CLI::IsMember({"fig12"}));
  add_verdict_flags(ddc, ddc_args.verdict);
  ddc->add_option("-o,--out", ddc_args.out, "output directory")->capture_default_str();

  NtfArgs ntf_args;
  auto* ntfc = app.add_subcommand("ntf", "noise/signal transfer magnitude table");
  ntfc->add_option("-L,--order", ntf_args.order, "modulator order (1..64)")->required();
  ntfc->add_option("--points", ntf_args.points, "frequency points on (0, pi]")
      ->capture_default_str();
  ntfc->add_option("-o,--out", ntf_args.out, "output directory")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*coeffs) return run_coeffs(coeffs_args);
    if (*sim) return run_simulate(sim_args);
    if (*pert) return run_perturb(pert_args);
    if (*sweep) return run_sweep(sweep_args);
    if (*ddc) return run_ddc(ddc_args);
    if (*ntfc) return run_ntf(ntf_args);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
