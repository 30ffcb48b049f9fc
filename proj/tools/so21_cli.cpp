// so21 command-line front end: evaluates the library quantities over
// parameter grids, emits JSON-lines or CSV records, and runs the built-in
// verification suites.

#include <CLI11.hpp>
#include <cstdio>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "so21/group.hpp"
#include "so21/iso21.hpp"
#include "so21/numerics.hpp"
#include "so21/rep.hpp"
#include "so21/verify.hpp"
#include "so21/wigner3.hpp"

namespace {

using so21::numerics::Complex;

// ------------------------------------------------------------ formatting

std::string fmt_double(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

struct Field {
  std::string key;
  std::string value;  // already rendered (JSON-compatible scalar)
  bool quoted;
};

struct OutputRecord {
  std::string cmd;
  std::vector<Field> inputs;
  std::optional<Complex> value;
  double err_estimate = 0.0;
  long terms_used = 0;
  std::string status = "ok";  // ok | no_convergence | pole | domain_error
  std::string message;
};

void add_input(OutputRecord& r, const std::string& key, double v) {
  r.inputs.push_back({key, fmt_double(v), false});
}
void add_input(OutputRecord& r, const std::string& key, long v) {
  r.inputs.push_back({key, std::to_string(v), false});
}
void add_input(OutputRecord& r, const std::string& key, const std::string& v) {
  r.inputs.push_back({key, v, true});
}
void add_input(OutputRecord& r, const std::string& key, const Complex& z) {
  std::string s = fmt_double(z.real());
  if (z.imag() >= 0.0) s += "+";
  s += fmt_double(z.imag()) + "i";
  r.inputs.push_back({key, s, true});
}

void emit_json(const OutputRecord& r) {
  std::string line = "{\"cmd\":\"" + r.cmd + "\",\"inputs\":{";
  for (size_t i = 0; i < r.inputs.size(); ++i) {
    const Field& f = r.inputs[i];
    line += "\"" + f.key + "\":";
    line += f.quoted ? "\"" + f.value + "\"" : f.value;
    if (i + 1 < r.inputs.size()) line += ",";
  }
  line += "},";
  if (r.value) {
    line += "\"value_re\":" + fmt_double(r.value->real()) +
            ",\"value_im\":" + fmt_double(r.value->imag()) + ",";
  } else {
    line += "\"value_re\":null,\"value_im\":null,";
  }
  line += "\"err_estimate\":" + fmt_double(r.err_estimate) +
          ",\"terms_used\":" + std::to_string(r.terms_used) + ",\"status\":\"" +
          r.status + "\"";
  if (!r.message.empty()) line += ",\"message\":\"" + r.message + "\"";
  line += "}\n";
  std::fputs(line.c_str(), stdout);
}

void emit_csv(const OutputRecord& r) {
  std::string inputs;
  for (size_t i = 0; i < r.inputs.size(); ++i) {
    inputs += r.inputs[i].key + "=" + r.inputs[i].value;
    if (i + 1 < r.inputs.size()) inputs += ";";
  }
  std::string line = r.cmd + ",\"" + inputs + "\",";
  if (r.value)
    line += fmt_double(r.value->real()) + "," + fmt_double(r.value->imag()) + ",";
  else
    line += ",,";
  line += fmt_double(r.err_estimate) + "," + std::to_string(r.terms_used) + "," +
          r.status + "\n";
  std::fputs(line.c_str(), stdout);
}

struct Emitter {
  bool csv = false;
  bool any_bad = false;

  void header() const {
    if (csv)
      std::fputs("cmd,inputs,value_re,value_im,err_estimate,terms_used,status\n",
                 stdout);
  }
  void operator()(OutputRecord r) {
    if (r.status != "ok") {
      r.value.reset();
      any_bad = true;
    }
    csv ? emit_csv(r) : emit_json(r);
  }
};

// Run op, mapping library errors onto record statuses.
void guarded(OutputRecord& r, const std::function<void(OutputRecord&)>& op) {
  try {
    op(r);
  } catch (const so21::PoleError& e) {
    r.status = "pole";
    r.message = e.what();
  } catch (const so21::NoConvergenceError& e) {
    r.status = "no_convergence";
    r.message = e.what();
  } catch (const so21::DomainError& e) {
    r.status = "domain_error";
    r.message = e.what();
  }
}

// ------------------------------------------------------------ parsing

Complex parse_complex(const std::string& s) {
  // forms: "1.5", "2i", "-0.5+2i", "-0.5-2e-3i"
  std::string t = s;
  if (t.empty()) throw CLI::ValidationError("empty complex literal");
  if (t.back() == 'i' || t.back() == 'I') {
    t.pop_back();
    // split at the sign that separates real and imaginary parts
    for (size_t k = t.size(); k-- > 1;) {
      if ((t[k] == '+' || t[k] == '-') && t[k - 1] != 'e' && t[k - 1] != 'E') {
        const std::string re = t.substr(0, k);
        std::string im = t.substr(k);
        if (im == "+" || im == "-") im += "1";
        return {std::stod(re), std::stod(im)};
      }
    }
    if (t.empty() || t == "+") return {0.0, 1.0};
    if (t == "-") return {0.0, -1.0};
    return {0.0, std::stod(t)};
  }
  return {std::stod(t), 0.0};
}

std::vector<double> parse_grid(const std::string& s) {
  // "start:stop:step" inclusive, or a single value
  const auto c1 = s.find(':');
  if (c1 == std::string::npos) return {std::stod(s)};
  const auto c2 = s.find(':', c1 + 1);
  if (c2 == std::string::npos)
    throw CLI::ValidationError("grid must be start:stop:step");
  const double start = std::stod(s.substr(0, c1));
  const double stop = std::stod(s.substr(c1 + 1, c2 - c1 - 1));
  const double step = std::stod(s.substr(c2 + 1));
  if (step == 0.0) throw CLI::ValidationError("grid step must be nonzero");
  std::vector<double> out;
  const long n = std::lround(std::floor((stop - start) / step + 1e-9));
  for (long k = 0; k <= n; ++k) out.push_back(start + double(k) * step);
  return out;
}

std::vector<std::string> split_commas(const std::string& s) {
  std::vector<std::string> out;
  size_t pos = 0;
  while (pos <= s.size()) {
    const size_t next = s.find(',', pos);
    if (next == std::string::npos) {
      out.push_back(s.substr(pos));
      break;
    }
    out.push_back(s.substr(pos, next - pos));
    pos = next + 1;
  }
  return out;
}

std::array<Complex, 3> parse_sigmas(const std::string& s) {
  const auto parts = split_commas(s);
  if (parts.size() != 3) throw CLI::ValidationError("--sigmas needs 3 values");
  return {parse_complex(parts[0]), parse_complex(parts[1]), parse_complex(parts[2])};
}

std::array<long, 3> parse_ms(const std::string& s) {
  const auto parts = split_commas(s);
  if (parts.size() != 3) throw CLI::ValidationError("--ms needs 3 integers");
  return {std::stol(parts[0]), std::stol(parts[1]), std::stol(parts[2])};
}

so21::group::Vec3 parse_vec3(const std::string& s) {
  const auto parts = split_commas(s);
  if (parts.size() != 3) throw CLI::ValidationError("vector needs 3 components");
  return {std::stod(parts[0]), std::stod(parts[1]), std::stod(parts[2])};
}

so21::iso::OrbitClass parse_case(const std::string& s) {
  using so21::iso::OrbitClass;
  if (s == "massive-upper") return OrbitClass::MassiveUpper;
  if (s == "massive-lower") return OrbitClass::MassiveLower;
  if (s == "tachyonic") return OrbitClass::Tachyonic;
  if (s == "lightlike-upper") return OrbitClass::LightlikeUpper;
  if (s == "origin") return OrbitClass::Origin;
  throw CLI::ValidationError("unknown orbit case '" + s + "'");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "so21: spherical functions, invariant forms, Wigner coefficients and\n"
      "induced-representation kinematics of SO0(2,1) / ISO(2,1).\n"
      "Output: JSON lines (default) or CSV via --format=csv with columns\n"
      "cmd,inputs,value_re,value_im,err_estimate,terms_used,status."};
  app.require_subcommand(1);

  std::string format = "json";
  double tol = 1e-10;
  long max_terms = 200000;
  int quad_points = 4096;
  std::uint64_t seed = 12345;
  app.add_option("--format", format, "json or csv")->capture_default_str();
  app.add_option("--tol", tol, "series tolerance")->capture_default_str();
  app.add_option("--max-terms", max_terms, "series term cap")->capture_default_str();
  app.add_option("--quad-points", quad_points, "quadrature points")
      ->capture_default_str();
  app.add_option("--seed", seed, "seed for randomized verify suites")
      ->capture_default_str();

  // --- zonal
  auto* zonal_cmd = app.add_subcommand("zonal", "zonal spherical function");
  std::string zonal_sigma, zonal_grid = "0:0:1";
  zonal_cmd->add_option("--sigma", zonal_sigma, "complex a+bi")->required();
  zonal_cmd->add_option("--alpha-grid", zonal_grid, "start:stop:step or value")
      ->required();

  // --- assoc
  auto* assoc_cmd = app.add_subcommand("assoc", "associated spherical function");
  std::string assoc_sigma, assoc_grid = "0:0:1";
  long assoc_m = 0;
  assoc_cmd->add_option("--sigma", assoc_sigma)->required();
  assoc_cmd->add_option("--m", assoc_m)->required();
  assoc_cmd->add_option("--alpha-grid", assoc_grid)->required();

  // --- matrix-element
  auto* mat_cmd = app.add_subcommand("matrix-element",
                                     "canonical-basis matrix element t_{m',m}(g)");
  std::string mat_sigma;
  long mat_mout = 0, mat_min = 0;
  double mat_phi1 = 0.0, mat_alpha = 0.0, mat_phi2 = 0.0;
  mat_cmd->add_option("--sigma", mat_sigma)->required();
  mat_cmd->add_option("--m-out", mat_mout)->required();
  mat_cmd->add_option("--m-in", mat_min)->required();
  mat_cmd->add_option("--phi1", mat_phi1, "Cartan angle of g");
  mat_cmd->add_option("--alpha", mat_alpha, "Cartan boost of g");
  mat_cmd->add_option("--phi2", mat_phi2, "Cartan angle of g");

  // --- fourier-lambda
  auto* fl_cmd = app.add_subcommand("fourier-lambda",
                                    "coefficients of (1-cos)^lambda");
  std::string fl_lambda;
  std::string fl_mgrid = "0:0:1";
  fl_cmd->add_option("--lambda", fl_lambda)->required();
  fl_cmd->add_option("--m-grid", fl_mgrid, "integer grid start:stop:step");

  // --- phi-m
  auto* phim_cmd = app.add_subcommand("phi-m", "invariant-form coefficient");
  std::string phim_sigma;
  std::string phim_mgrid = "0:0:1";
  phim_cmd->add_option("--sigma", phim_sigma)->required();
  phim_cmd->add_option("--m-grid", phim_mgrid);

  // --- wigner3 / wigner3-oracle
  auto* w3_cmd = app.add_subcommand("wigner3", "Wigner coefficient (series)");
  std::string w3_sigmas, w3_ms = "0,0,0";
  w3_cmd->add_option("--sigmas", w3_sigmas, "s1,s2,s3 complex")->required();
  w3_cmd->add_option("--ms", w3_ms, "m1,m2,m3 integers");

  auto* w3o_cmd = app.add_subcommand("wigner3-oracle",
                                     "Wigner coefficient (2-D quadrature)");
  std::string w3o_sigmas, w3o_ms = "0,0,0";
  w3o_cmd->add_option("--sigmas", w3o_sigmas)->required();
  w3o_cmd->add_option("--ms", w3o_ms);

  // --- covariance-check
  auto* cov_cmd = app.add_subcommand("covariance-check",
                                     "covariance residual vs truncation");
  std::string cov_sigmas, cov_ms = "0,0,0";
  double cov_phi1 = 0.0, cov_alpha = 0.2, cov_phi2 = 0.0;
  int cov_M = 8;
  cov_cmd->add_option("--sigmas", cov_sigmas)->required();
  cov_cmd->add_option("--ms", cov_ms);
  cov_cmd->add_option("--phi1", cov_phi1);
  cov_cmd->add_option("--alpha", cov_alpha);
  cov_cmd->add_option("--phi2", cov_phi2);
  cov_cmd->add_option("--M", cov_M, "truncation |m'| <= M");

  // --- orbit
  auto* orbit_cmd = app.add_subcommand("orbit", "classify a momentum vector");
  std::string orbit_p;
  double orbit_tol = 0.0;
  orbit_cmd->add_option("--p", orbit_p, "p0,p1,p2")->required();
  orbit_cmd->add_option("--class-tol", orbit_tol, "0 = scale-aware default");

  // --- wigner-rotation
  auto* wr_cmd = app.add_subcommand("wigner-rotation",
                                    "little-group element and parameter");
  std::string wr_p;
  double wr_phi1 = 0.0, wr_alpha = 0.0, wr_phi2 = 0.0;
  wr_cmd->add_option("--p", wr_p)->required();
  wr_cmd->add_option("--phi1", wr_phi1);
  wr_cmd->add_option("--alpha", wr_alpha);
  wr_cmd->add_option("--phi2", wr_phi2);

  // --- induced-action
  auto* ia_cmd = app.add_subcommand("induced-action",
                                    "induced representation multiplier");
  std::string ia_label, ia_p, ia_a = "0,0,0";
  double ia_phi1 = 0.0, ia_alpha = 0.0, ia_phi2 = 0.0;
  ia_cmd->add_option("--label", ia_label,
                     "mass-spin:m:s | tachyonic:m:s | helicity:lambda")
      ->required();
  ia_cmd->add_option("--p", ia_p)->required();
  ia_cmd->add_option("--a", ia_a, "translation vector");
  ia_cmd->add_option("--phi1", ia_phi1);
  ia_cmd->add_option("--alpha", ia_alpha);
  ia_cmd->add_option("--phi2", ia_phi2);

  // --- measure
  auto* meas_cmd = app.add_subcommand("measure", "quasi-invariant measure density");
  std::string meas_case, meas_coords;
  meas_cmd->add_option("--case", meas_case,
                       "massive-upper | tachyonic | lightlike-upper")
      ->required();
  meas_cmd->add_option("--coords", meas_coords, "c1,c2")->required();

  // --- verify
  auto* verify_cmd = app.add_subcommand("verify", "run built-in check suites");
  std::string verify_suite = "all";
  verify_cmd->add_option("--suite", verify_suite,
                         "all | acceptance | rep | wigner3 | iso21 | group");

  // let the global flags (--tol, --quad-points, ...) appear after the
  // subcommand name as well
  for (CLI::App* sc : app.get_subcommands([](CLI::App*) { return true; }))
    sc->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  Emitter emit;
  emit.csv = (format == "csv");
  if (format != "csv" && format != "json") {
    std::fputs("unknown --format (use json or csv)\n", stderr);
    return 2;
  }

  const so21::numerics::BilateralOptions bilopts{tol, 32, 96};

  try {
    if (*zonal_cmd) {
      emit.header();
      const Complex sigma = parse_complex(zonal_sigma);
      for (double alpha : parse_grid(zonal_grid)) {
        OutputRecord r;
        r.cmd = "zonal";
        add_input(r, "sigma", sigma);
        add_input(r, "alpha", alpha);
        guarded(r, [&](OutputRecord& rr) {
          rr.value = so21::rep::zonal(sigma, alpha);
        });
        emit(r);
      }
    } else if (*assoc_cmd) {
      emit.header();
      const Complex sigma = parse_complex(assoc_sigma);
      for (double alpha : parse_grid(assoc_grid)) {
        OutputRecord r;
        r.cmd = "assoc";
        add_input(r, "sigma", sigma);
        add_input(r, "m", assoc_m);
        add_input(r, "alpha", alpha);
        guarded(r, [&](OutputRecord& rr) {
          rr.value = so21::rep::assoc(sigma, assoc_m, alpha);
        });
        emit(r);
      }
    } else if (*mat_cmd) {
      emit.header();
      OutputRecord r;
      r.cmd = "matrix-element";
      const Complex sigma = parse_complex(mat_sigma);
      add_input(r, "sigma", sigma);
      add_input(r, "m_out", mat_mout);
      add_input(r, "m_in", mat_min);
      add_input(r, "phi1", mat_phi1);
      add_input(r, "alpha", mat_alpha);
      add_input(r, "phi2", mat_phi2);
      guarded(r, [&](OutputRecord& rr) {
        const auto g = so21::group::cartan_compose({mat_phi1, mat_alpha, mat_phi2});
        rr.value = so21::rep::matrix_element(sigma, mat_mout, mat_min, g);
      });
      emit(r);
    } else if (*fl_cmd) {
      emit.header();
      const Complex lambda = parse_complex(fl_lambda);
      for (double md : parse_grid(fl_mgrid)) {
        OutputRecord r;
        r.cmd = "fourier-lambda";
        const long m = std::lround(md);
        add_input(r, "lambda", lambda);
        add_input(r, "m", m);
        guarded(r, [&](OutputRecord& rr) {
          rr.value = so21::rep::fourier_lambda(lambda, m);
        });
        emit(r);
      }
    } else if (*phim_cmd) {
      emit.header();
      const Complex sigma = parse_complex(phim_sigma);
      for (double md : parse_grid(phim_mgrid)) {
        OutputRecord r;
        r.cmd = "phi-m";
        const long m = std::lround(md);
        add_input(r, "sigma", sigma);
        add_input(r, "m", m);
        guarded(r, [&](OutputRecord& rr) {
          rr.value = so21::rep::phi_m(sigma, m);
        });
        emit(r);
      }
    } else if (*w3_cmd) {
      emit.header();
      OutputRecord r;
      r.cmd = "wigner3";
      const auto sigmas = parse_sigmas(w3_sigmas);
      const auto ms = parse_ms(w3_ms);
      add_input(r, "sigmas", w3_sigmas);
      add_input(r, "ms", w3_ms);
      guarded(r, [&](OutputRecord& rr) {
        const auto res = so21::wigner::wigner_coefficient({sigmas, ms}, bilopts);
        rr.value = res.value;
        rr.err_estimate = res.err_estimate;
        rr.terms_used = res.terms_used;
      });
      emit(r);
    } else if (*w3o_cmd) {
      emit.header();
      OutputRecord r;
      r.cmd = "wigner3-oracle";
      const auto sigmas = parse_sigmas(w3o_sigmas);
      const auto ms = parse_ms(w3o_ms);
      add_input(r, "sigmas", w3o_sigmas);
      add_input(r, "ms", w3o_ms);
      add_input(r, "quad_points", long(quad_points));
      guarded(r, [&](OutputRecord& rr) {
        rr.value = so21::wigner::wigner_oracle({sigmas, ms}, quad_points);
      });
      emit(r);
    } else if (*cov_cmd) {
      emit.header();
      OutputRecord r;
      r.cmd = "covariance-check";
      const auto sigmas = parse_sigmas(cov_sigmas);
      const auto ms = parse_ms(cov_ms);
      add_input(r, "sigmas", cov_sigmas);
      add_input(r, "ms", cov_ms);
      add_input(r, "phi1", cov_phi1);
      add_input(r, "alpha", cov_alpha);
      add_input(r, "phi2", cov_phi2);
      add_input(r, "M", long(cov_M));
      guarded(r, [&](OutputRecord& rr) {
        const auto g = so21::group::cartan_compose({cov_phi1, cov_alpha, cov_phi2});
        rr.value = Complex(
            so21::wigner::covariance_residual({sigmas, ms}, g, cov_M), 0.0);
      });
      emit(r);
    } else if (*orbit_cmd) {
      emit.header();
      OutputRecord r;
      r.cmd = "orbit";
      add_input(r, "p", orbit_p);
      guarded(r, [&](OutputRecord& rr) {
        const auto p = parse_vec3(orbit_p);
        const auto cls = so21::iso::orbit_classify(p, orbit_tol);
        add_input(rr, "class", std::string(so21::iso::orbit_name(cls)));
        const auto m = so21::iso::Momentum::from(p);
        rr.value = Complex(m.msq, 0.0);
      });
      emit(r);
    } else if (*wr_cmd) {
      emit.header();
      OutputRecord r;
      r.cmd = "wigner-rotation";
      add_input(r, "p", wr_p);
      add_input(r, "phi1", wr_phi1);
      add_input(r, "alpha", wr_alpha);
      add_input(r, "phi2", wr_phi2);
      guarded(r, [&](OutputRecord& rr) {
        const auto p = so21::iso::Momentum::from(parse_vec3(wr_p));
        const auto g = so21::group::cartan_compose({wr_phi1, wr_alpha, wr_phi2});
        const auto w = so21::iso::wigner_rotation(p, g);
        const char* kind = w.kind == so21::iso::LittleKind::Rotation ? "rotation"
                           : w.kind == so21::iso::LittleKind::Boost01
                               ? "boost01"
                               : "horo-z";
        add_input(rr, "kind", std::string(kind));
        rr.value = Complex(w.parameter, 0.0);
      });
      emit(r);
    } else if (*ia_cmd) {
      emit.header();
      OutputRecord r;
      r.cmd = "induced-action";
      add_input(r, "label", ia_label);
      add_input(r, "p", ia_p);
      add_input(r, "a", ia_a);
      add_input(r, "phi1", ia_phi1);
      add_input(r, "alpha", ia_alpha);
      add_input(r, "phi2", ia_phi2);
      guarded(r, [&](OutputRecord& rr) {
        const auto parts = split_commas(ia_label);
        so21::iso::IsoIrrepLabel label = so21::iso::IsoIrrepLabel::helicity(0.0);
        // label syntax uses ':' separators
        std::vector<std::string> lp;
        size_t pos = 0;
        while (pos <= ia_label.size()) {
          const size_t nx = ia_label.find(':', pos);
          if (nx == std::string::npos) {
            lp.push_back(ia_label.substr(pos));
            break;
          }
          lp.push_back(ia_label.substr(pos, nx - pos));
          pos = nx + 1;
        }
        if (lp.empty()) throw so21::DomainError("empty label");
        if (lp[0] == "mass-spin" && lp.size() == 3)
          label = so21::iso::IsoIrrepLabel::mass_spin(std::stod(lp[1]),
                                                      std::stol(lp[2]));
        else if (lp[0] == "tachyonic" && lp.size() == 3)
          label = so21::iso::IsoIrrepLabel::tachyonic_spin(std::stod(lp[1]),
                                                           std::stod(lp[2]));
        else if (lp[0] == "helicity" && lp.size() == 2)
          label = so21::iso::IsoIrrepLabel::helicity(std::stod(lp[1]));
        else
          throw so21::DomainError("label must be mass-spin:m:s, tachyonic:m:s "
                                  "or helicity:lambda");
        const auto p = so21::iso::Momentum::from(parse_vec3(ia_p));
        const so21::iso::IsoElement g{
            parse_vec3(ia_a),
            so21::group::cartan_compose({ia_phi1, ia_alpha, ia_phi2})};
        const auto res = so21::iso::induced_action(label, g, p);
        rr.value = res.multiplier;
        add_input(rr, "p_new", fmt_double(res.p_new.p(0)) + "," +
                                   fmt_double(res.p_new.p(1)) + "," +
                                   fmt_double(res.p_new.p(2)));
        (void)parts;
      });
      emit(r);
    } else if (*meas_cmd) {
      emit.header();
      OutputRecord r;
      r.cmd = "measure";
      add_input(r, "case", meas_case);
      add_input(r, "coords", meas_coords);
      guarded(r, [&](OutputRecord& rr) {
        const auto cs = split_commas(meas_coords);
        if (cs.size() != 2) throw so21::DomainError("--coords needs c1,c2");
        rr.value = Complex(
            so21::iso::measure_density(parse_case(meas_case), std::stod(cs[0]),
                                       std::stod(cs[1])),
            0.0);
      });
      emit(r);
    } else if (*verify_cmd) {
      const auto suite = so21::verify::run_suite(verify_suite, seed);
      bool all_pass = true;
      for (const auto& res : suite) {
        std::fprintf(stdout, "[%s] %s: %s\n", res.pass ? "PASS" : "FAIL",
                     res.name.c_str(), res.detail.c_str());
        all_pass = all_pass && res.pass;
      }
      return all_pass ? 0 : 3;
    }
  } catch (const CLI::ValidationError& e) {
    std::fprintf(stderr, "usage error: %s\n", e.what());
    return 2;
  } catch (const std::invalid_argument& e) {
    std::fprintf(stderr, "usage error: %s\n", e.what());
    return 2;
  } catch (const so21::Error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  }

  return emit.any_bad ? 3 : 0;
}
