#include "iqh/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <fstream>
#include <optional>
#include <sstream>

#include "iqh/classical.hpp"
#include "iqh/errors.hpp"
#include "iqh/fock.hpp"
#include "iqh/gupta_bleuler.hpp"
#include "iqh/json_io.hpp"
#include "iqh/little_group.hpp"

namespace iqh {

namespace {

constexpr int kOk = 0;
constexpr int kVerificationFailure = 1;
constexpr int kInputError = 2;

Json make_report(const std::string& command, Json inputs, Json results,
                 std::optional<std::uint64_t> seed) {
  Json report;
  report["command"] = command;
  report["inputs"] = std::move(inputs);
  report["results"] = std::move(results);
  report["seed"] = seed ? Json(*seed) : Json(nullptr);
  report["version"] = kVersion;
  return report;
}

void emit(std::ostream& out, const Json& report) { out << report.dump(2) << "\n"; }

FourVector parse_momentum(const std::string& csv) {
  FourVector k;
  std::stringstream stream(csv);
  std::string item;
  int i = 0;
  while (std::getline(stream, item, ',')) {
    if (i >= 4) throw DataError("momentum needs exactly 4 components");
    k[i++] = rational_from_string(item);
  }
  if (i != 4) throw DataError("momentum needs exactly 4 components");
  return k;
}

Json gram_json(const HermitianMatrix& g) {
  Json rows = Json::array();
  for (int i = 0; i < g.n; ++i) {
    Json row = Json::array();
    for (int j = 0; j < g.n; ++j) row.push_back(to_json(g.at(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Json matrix_json(const Mat4& m, double tol) {
  Json rows = Json::array();
  for (int i = 0; i < 4; ++i) {
    Json row = Json::array();
    for (int j = 0; j < 4; ++j) row.push_back(m(i, j));
    rows.push_back(std::move(row));
  }
  return Json{{"entries", std::move(rows)}, {"tol", tol}};
}

Json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open input file: " + path);
  Json doc;
  try {
    in >> doc;
  } catch (const nlohmann::json::exception& e) {
    throw DataError(std::string("malformed JSON: ") + e.what());
  }
  return doc;
}

struct QuantizeOptions {
  std::string system = "oscillator";
  int variant = 1;
  int levels = 0;
  bool parallel = false;
};

int run_quantize(const QuantizeOptions& opt, std::ostream& out) {
  if (opt.levels < 0) throw DataError("--levels must be non-negative");
  if (opt.variant != 1 && opt.variant != 2) throw DataError("--variant must be 1 or 2");

  QuantizationChoice choice;
  choice.variant = static_cast<Variant>(opt.variant);
  if (opt.system == "oscillator") {
    choice.system = System::Oscillator;
    choice.modes = ModeSet::oscillator(Rational(1));
  } else if (opt.system == "scalar") {
    choice.system = System::Scalar;
    choice.modes = ModeSet::scalar_demo();
  } else if (opt.system == "em") {
    choice.system = System::EM4;
    choice.modes = ModeSet::em_single({1, 0, 0, 1});
  } else {
    throw DataError("--system must be oscillator, scalar or em");
  }

  Quantization q = build_quantization(choice);
  Execution exec = opt.parallel ? Execution::Parallel : Execution::Serial;

  Json levels = Json::array();
  for (int n = 0; n <= opt.levels; ++n) {
    std::vector<Ket> basis = level_basis(choice.modes, n);
    GramReport report = gram_inertia(basis, q.table, exec);
    levels.push_back(Json{{"n", n},
                          {"dim", static_cast<int>(basis.size())},
                          {"gram", gram_json(report.gram)},
                          {"inertia",
                           Json{{"pos", report.inertia.pos},
                                {"neg", report.inertia.neg},
                                {"zero", report.inertia.zero}}}});
  }

  Json inputs{{"system", opt.system}, {"variant", opt.variant}, {"levels", opt.levels}};
  emit(out, make_report("quantize", std::move(inputs), Json{{"levels", std::move(levels)}},
                        std::nullopt));
  return kOk;
}

int run_gb(int n, const std::string& k_csv, bool parallel, std::ostream& out) {
  if (n < 0) throw DataError("--n must be non-negative");
  LightlikeMomentum k(parse_momentum(k_csv));
  PositivityReport report =
      positivity_report(n, k, parallel ? Execution::Parallel : Execution::Serial);

  Json results{{"dim", report.constrained_dim},
               {"gauge", report.gauge_dim},
               {"inertia", Json::array({report.n_pos, report.n_zero, report.n_neg})},
               {"gram", gram_json(report.gram)}};
  Json inputs{{"n", n}, {"k", k_csv}};
  emit(out, make_report("gb", std::move(inputs), std::move(results), std::nullopt));
  return report.n_neg == 0 ? kOk : kVerificationFailure;
}

int run_lg_element(double phi, double alpha, double beta, const std::string& k_csv,
                   std::ostream& out) {
  FourVector kr = parse_momentum(k_csv);
  Vec4 k(to_double(kr[0]), to_double(kr[1]), to_double(kr[2]), to_double(kr[3]));

  E2Element g{phi, alpha, beta};
  Mat4 lambda = e2_to_little(g, k);
  E2Element back = little_to_e2(lambda, k);
  double metric = metric_residual(lambda);
  double fixes_k = k_residual(lambda, k);
  double round_trip = std::max({std::abs(back.phi - phi), std::abs(back.alpha - alpha),
                                std::abs(back.beta - beta)});

  Eigen::Matrix2cd spiral = spiral_basis_matrix(lambda, k);
  Json spiral_json = Json::array();
  for (int i = 0; i < 2; ++i) {
    Json row = Json::array();
    for (int j = 0; j < 2; ++j) {
      row.push_back(Json::array({spiral(i, j).real(), spiral(i, j).imag()}));
    }
    spiral_json.push_back(std::move(row));
  }

  Json results{{"matrix", matrix_json(lambda, kConstructionTol)},
               {"metric_residual", float_json(metric, kConstructionTol)},
               {"k_residual", float_json(fixes_k, kConstructionTol)},
               {"round_trip_error", float_json(round_trip, kRoundTripTol)},
               {"spiral", Json{{"entries", std::move(spiral_json)}, {"tol", kConstructionTol}}}};
  Json inputs{{"phi", phi}, {"alpha", alpha}, {"beta", beta}, {"k", k_csv}};
  emit(out, make_report("little-group element", std::move(inputs), std::move(results),
                        std::nullopt));

  bool ok = metric <= kConstructionTol && fixes_k <= kConstructionTol &&
            round_trip <= kRoundTripTol;
  return ok ? kOk : kVerificationFailure;
}

int run_lg_verify(int samples, std::uint64_t seed, const std::string& k_csv, std::ostream& out) {
  if (samples < 1) throw DataError("--samples must be positive");
  FourVector kr = parse_momentum(k_csv);
  Vec4 k(to_double(kr[0]), to_double(kr[1]), to_double(kr[2]), to_double(kr[3]));
  LightFrame frame = adapted_frame(k);

  double max_round_trip = 0, max_metric = 0, max_k = 0, max_homomorphism = 0;
  double max_invariance = 0;
  std::vector<E2Element> elements;
  std::vector<Mat4> matrices;
  for (int i = 0; i < samples; ++i) {
    SeededRng rng = SeededRng::at_index(seed, static_cast<std::uint64_t>(i));
    E2Element g = random_e2(rng);
    Mat4 lambda = e2_to_little(g, k);
    E2Element back = little_to_e2(lambda, k);
    max_round_trip = std::max({max_round_trip, std::abs(back.phi - g.phi),
                               std::abs(back.alpha - g.alpha), std::abs(back.beta - g.beta)});
    max_metric = std::max(max_metric, metric_residual(lambda));
    max_k = std::max(max_k, k_residual(lambda, k));
    elements.push_back(g);
    matrices.push_back(lambda);
  }

  const std::vector<SubspaceSpec> subspaces = {SubspaceSpec::mpar(k), SubspaceSpec::mperp(k),
                                               SubspaceSpec::mplus1(k), SubspaceSpec::mminus1(k)};
  for (const Mat4& lambda : matrices) {
    for (const SubspaceSpec& s : subspaces) {
      max_invariance = std::max(max_invariance, subspace_invariance_check(lambda, s).residual);
    }
  }

  int pair_count = std::min(samples - 1, 50);
  for (int i = 0; i < pair_count; ++i) {
    E2Element composed = little_to_e2(matrices[i] * matrices[i + 1], k);
    E2Element expected = compose(elements[i], elements[i + 1]);
    double dphi = std::abs(composed.phi - expected.phi);
    dphi = std::min(dphi, std::abs(dphi - 2 * 3.14159265358979323846));
    max_homomorphism = std::max({max_homomorphism, dphi, std::abs(composed.alpha - expected.alpha),
                                 std::abs(composed.beta - expected.beta)});
  }

  CVec4 generic = frame.nminus.cast<std::complex<double>>();
  CVec4 perp_vector = frame.e1.cast<std::complex<double>>();
  CVec4 fixed = frame.k.cast<std::complex<double>>();
  int span_generic = orbit_span(generic, k, std::max(samples, 20), seed + 1);
  int span_perp = orbit_span(perp_vector, k, std::max(samples, 20), seed + 2);
  int span_fixed = orbit_span(fixed, k, std::max(samples, 20), seed + 3);

  bool pass = max_round_trip <= kRoundTripTol && max_metric <= kConstructionTol &&
              max_k <= kConstructionTol && max_homomorphism <= kRoundTripTol &&
              max_invariance <= kConstructionTol && span_generic == 4 && span_perp == 3 &&
              span_fixed == 1;

  Json results{{"round_trip_error", float_json(max_round_trip, kRoundTripTol)},
               {"metric_residual", float_json(max_metric, kConstructionTol)},
               {"k_residual", float_json(max_k, kConstructionTol)},
               {"homomorphism_residual", float_json(max_homomorphism, kRoundTripTol)},
               {"invariance_residual", float_json(max_invariance, kConstructionTol)},
               {"orbit_dims", Json{{"generic", span_generic},
                                   {"perp", span_perp},
                                   {"fixed", span_fixed}}},
               {"pass", pass}};
  Json inputs{{"samples", samples}, {"k", k_csv}};
  emit(out, make_report("little-group verify", std::move(inputs), std::move(results), seed));
  return pass ? kOk : kVerificationFailure;
}

Json amplitudes_json(const FieldState& state) {
  const ModeSet& ms = *state.modes;
  Json arr = Json::array();
  for (int m = 0; m < ms.mode_count(); ++m) {
    if (ms.kind() == FieldKind::Scalar) {
      arr.push_back(to_json(state.at(ms.slot(m, 0))));
    } else {
      Json per_mode = Json::array();
      for (int mu = 0; mu < 4; ++mu) per_mode.push_back(to_json(state.at(ms.slot(m, mu))));
      arr.push_back(std::move(per_mode));
    }
  }
  return arr;
}

int run_classical(const std::string& action, const std::string& path, std::ostream& out) {
  Json doc = load_json_file(path);
  Json inputs{{"action", action}, {"input", path}};
  if (action == "energy") {
    FieldState state = field_state_from_json(doc);
    std::array<Rational, 4> p = energy_momentum(state);
    Json pj = Json::array();
    for (const Rational& v : p) pj.push_back(to_json(v));
    emit(out, make_report("classical", std::move(inputs), Json{{"P", std::move(pj)}},
                          std::nullopt));
    return kOk;
  }
  if (action == "radiate") {
    CurrentModes current = current_from_json(doc);
    RadiationResult rad = radiated_field(current);
    Json results{{"a", amplitudes_json(rad.field)}, {"lorentz_ok", rad.lorentz_ok}};
    emit(out, make_report("classical", std::move(inputs), std::move(results), std::nullopt));
    return kOk;
  }
  if (action == "bracket") {
    ModeSetPtr modes = mode_set_from_json(doc);
    if (!doc.contains("f") || !doc.contains("g")) {
      throw DataError("bracket needs 'f' and 'g' observables");
    }
    LinearObservable f = observable_from_json(doc["f"], modes);
    LinearObservable g = observable_from_json(doc["g"], modes);
    Complex value = poisson_bracket(f, g);
    emit(out, make_report("classical", std::move(inputs), Json{{"bracket", to_json(value)}},
                          std::nullopt));
    return kOk;
  }
  if (action == "generator") {
    FieldState state = field_state_from_json(doc);
    Rational g = generator(state, time_shift_flow(state));
    std::array<Rational, 4> p = energy_momentum(state);
    bool equal = (g == p[0]);
    Json results{{"G", to_json(g)}, {"P0", to_json(p[0])}, {"equal", equal}};
    emit(out, make_report("classical", std::move(inputs), std::move(results), std::nullopt));
    return equal ? kOk : kVerificationFailure;
  }
  throw DataError("unknown classical action: " + action);
}

int run_lagrangian1d(const std::string& a, const std::string& b, const std::string& c,
                     std::ostream& out) {
  QuadraticLagrangian1D lagrangian{rational_from_string(a), rational_from_string(b),
                                   rational_from_string(c)};
  const State1D probe_c{Rational(1), Rational(0)};
  const State1D probe_d{Rational(0), Rational(1)};
  const State1D probe_e{Rational(2), Rational(3)};
  const State1D probe_f{Rational(5), Rational(7)};

  Rational omega_cd = lagrangian_1d_symplectic(lagrangian, probe_c, probe_d);
  Rational omega_ef = lagrangian_1d_symplectic(lagrangian, probe_e, probe_f);

  bool invariant = true;
  Json shifted = Json::array();
  for (int shift : {1, 5}) {
    QuadraticLagrangian1D moved{lagrangian.a, lagrangian.b + shift, lagrangian.c};
    Rational s_cd = lagrangian_1d_symplectic(moved, probe_c, probe_d);
    Rational s_ef = lagrangian_1d_symplectic(moved, probe_e, probe_f);
    invariant = invariant && s_cd == omega_cd && s_ef == omega_ef;
    shifted.push_back(Json{{"b_shift", shift}, {"omega_cd", to_json(s_cd)},
                           {"omega_ef", to_json(s_ef)}});
  }

  Json results{{"omega_cd", to_json(omega_cd)},
               {"omega_ef", to_json(omega_ef)},
               {"shifted", std::move(shifted)},
               {"invariant", invariant}};
  Json inputs{{"a", a}, {"b", b}, {"c", c}};
  emit(out, make_report("lagrangian1d", std::move(inputs), std::move(results), std::nullopt));
  return invariant ? kOk : kVerificationFailure;
}

int run_equiv(const std::string& m1_path, const std::string& m2_path, std::uint64_t seed,
              int samples, std::ostream& out) {
  HermitianMatrix m1 = matrix4_from_json(load_json_file(m1_path));
  HermitianMatrix m2 = matrix4_from_json(load_json_file(m2_path));
  double epsilon = inner_equivalence(m1, m2);

  ModeSetPtr modes = ModeSet::em_stencil();
  bool verified = true;
  double slack = 1e-10;
  for (int s = 0; s < samples; ++s) {
    SeededRng rng = SeededRng::at_index(seed, static_cast<std::uint64_t>(s));
    std::vector<Complex> amps(modes->slot_count());
    for (Complex& a : amps) {
      a = Complex(Rational(static_cast<int>(rng.next_u64() % 19) - 9),
                  Rational(static_cast<int>(rng.next_u64() % 19) - 9));
    }
    FieldState z(modes, std::move(amps));
    double z1 = to_double(hilbert_inner(z, z, m1).re);
    double z2 = to_double(hilbert_inner(z, z, m2).re);
    double bound = slack * std::max({1.0, std::abs(z1), std::abs(z2)});
    if (epsilon * z2 > z1 + bound || epsilon * z1 > z2 + bound) verified = false;
  }

  Json results{{"epsilon", float_json(epsilon, 1e-10)},
               {"verified", verified},
               {"samples", samples}};
  Json inputs{{"m1", m1_path}, {"m2", m2_path}};
  emit(out, make_report("equiv", std::move(inputs), std::move(results), seed));
  return verified ? kOk : kVerificationFailure;
}

}  // namespace

int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"invariant-Hamiltonian quantization toolkit"};
  app.require_subcommand(1);

  QuantizeOptions quantize_opt;
  CLI::App* quantize = app.add_subcommand("quantize", "per-level Gram matrices and inertia");
  quantize->add_option("--system", quantize_opt.system, "oscillator|scalar|em");
  quantize->add_option("--variant", quantize_opt.variant, "invariant quantization 1 or 2");
  quantize->add_option("--levels", quantize_opt.levels, "top grade to report")->required();
  quantize->add_flag("--parallel", quantize_opt.parallel, "OpenMP Gram assembly");

  int gb_n = 0;
  std::string gb_k = "1,0,0,1";
  bool gb_parallel = false;
  CLI::App* gb = app.add_subcommand("gb", "constrained photon states: dimensions and inertia");
  gb->add_option("--n", gb_n, "particle number")->required();
  gb->add_option("--k", gb_k, "light-like momentum p/q,p/q,p/q,p/q");
  gb->add_flag("--parallel", gb_parallel, "OpenMP Gram assembly");

  CLI::App* lg = app.add_subcommand("little-group", "light-like little group toolkit");
  lg->require_subcommand(1);
  double lg_phi = 0, lg_alpha = 0, lg_beta = 0;
  std::string lg_k = "1,0,0,1";
  CLI::App* lg_element = lg->add_subcommand("element", "build one element from E(2) data");
  lg_element->add_option("--phi", lg_phi, "rotation angle");
  lg_element->add_option("--alpha", lg_alpha, "translation component");
  lg_element->add_option("--beta", lg_beta, "translation component");
  lg_element->add_option("--k", lg_k, "light-like momentum");

  int lg_samples = 100;
  std::uint64_t lg_seed = 1;
  std::string lg_verify_k = "1,0,0,1";
  CLI::App* lg_verify = lg->add_subcommand("verify", "seeded round-trip and invariance checks");
  lg_verify->add_option("--samples", lg_samples, "number of random elements");
  lg_verify->add_option("--seed", lg_seed, "random seed");
  lg_verify->add_option("--k", lg_verify_k, "light-like momentum");

  std::string classical_action, classical_input;
  CLI::App* classical = app.add_subcommand("classical", "mode-space calculator");
  classical->add_option("action", classical_action, "energy|radiate|bracket|generator")
      ->required();
  classical->add_option("--input", classical_input, "JSON document")->required();

  std::string l1_a, l1_b = "0", l1_c = "0";
  CLI::App* lagrangian1d = app.add_subcommand("lagrangian1d", "divergence invariance demo");
  lagrangian1d->add_option("--a", l1_a, "kinetic coefficient")->required();
  lagrangian1d->add_option("--b", l1_b, "cross coefficient");
  lagrangian1d->add_option("--c", l1_c, "potential coefficient");

  std::string equiv_m1, equiv_m2;
  std::uint64_t equiv_seed = 1;
  int equiv_samples = 100;
  CLI::App* equiv = app.add_subcommand("equiv", "equivalence bound for two inner products");
  equiv->add_option("--m1", equiv_m1, "JSON file with 4x4 Hermitian matrix")->required();
  equiv->add_option("--m2", equiv_m2, "JSON file with 4x4 Hermitian matrix")->required();
  equiv->add_option("--seed", equiv_seed, "random seed");
  equiv->add_option("--samples", equiv_samples, "sampled states");

  std::reverse(args.begin(), args.end());
  try {
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      return app.exit(e, out, err);
    }
    app.exit(e, out, err);
    return kInputError;
  }

  try {
    if (quantize->parsed()) return run_quantize(quantize_opt, out);
    if (gb->parsed()) return run_gb(gb_n, gb_k, gb_parallel, out);
    if (lg->parsed()) {
      if (lg_element->parsed()) return run_lg_element(lg_phi, lg_alpha, lg_beta, lg_k, out);
      return run_lg_verify(lg_samples, lg_seed, lg_verify_k, out);
    }
    if (classical->parsed()) return run_classical(classical_action, classical_input, out);
    if (lagrangian1d->parsed()) return run_lagrangian1d(l1_a, l1_b, l1_c, out);
    if (equiv->parsed()) return run_equiv(equiv_m1, equiv_m2, equiv_seed, equiv_samples, out);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }
  err << "error: no subcommand\n";
  return kInputError;
}

}  // namespace iqh
