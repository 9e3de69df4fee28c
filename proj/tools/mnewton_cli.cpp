// mnewton: command-line front end.
//
// Exit codes: 0 all requested checks pass, 1 a check failed, 2 input or
// usage error.

#include <CLI11.hpp>
#include <algorithm>
#include <filesystem>
#include <fstream>
#include <future>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "mnewton/charcoeff.hpp"
#include "mnewton/error.hpp"
#include "mnewton/forms.hpp"
#include "mnewton/io.hpp"
#include "mnewton/linalg.hpp"
#include "mnewton/mclass.hpp"
#include "mnewton/niep.hpp"
#include "mnewton/sfunc.hpp"

namespace fs = std::filesystem;
using namespace mnewton;
using io::Json;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitViolation = 1;
constexpr int kExitInput = 2;

struct Config {
  std::string input;
  std::string spectrum;
  std::optional<std::size_t> n;
  std::optional<std::size_t> m;
  std::optional<std::size_t> k;
  std::string kind;
  double tol = 1e-9;
  std::size_t jll_bound = 30;
  std::size_t moment_k = 20;
  std::uint64_t seed = 0;
  double margin = 0.1;
  std::string format = "json";
  std::string output;
  bool override_caps = false;
};

struct Result {
  Json report;
  std::string text;
  int code = kExitPass;
};

std::string num(double v) {
  std::ostringstream os;
  os.precision(12);
  os << v;
  return os.str();
}

std::size_t need(const std::optional<std::size_t>& v, const char* flag) {
  if (!v) throw InputError(std::string("missing required flag ") + flag);
  return *v;
}

Matrix load_matrix(const Config& c) {
  if (c.input.empty()) throw InputError("missing required flag --input");
  return io::matrix_from_json(io::read_json_file(c.input));
}

Spectrum load_spectrum(const std::string& path) {
  return io::spectrum_from_json(io::read_json_file(path));
}

Result run_classify(const Config& c) {
  const Matrix a = load_matrix(c);
  const auto r = classify(a, c.tol);
  Result out;
  out.report = io::to_json(r);
  out.code = (r.m_class != MClass::not_m || r.is_inverse_m) ? kExitPass : kExitViolation;
  out.text = "Z: " + std::string(r.is_z ? "yes" : "no") + "\nP: " +
             (r.is_p ? (*r.is_p ? "yes" : "no") : "not evaluated") +
             "\nclass: " + std::string(to_string(r.m_class)) +
             "\ninverse-M: " + (r.is_inverse_m ? "yes" : "no") + "\n";
  return out;
}

CoeffVector coeffs_for(const Config& c) {
  if (!c.input.empty() && !c.spectrum.empty())
    throw InputError("give either --input or --spectrum, not both");
  if (!c.spectrum.empty()) return coeffs_from_spectrum(load_spectrum(c.spectrum), c.tol);
  return normalized_coeffs(load_matrix(c));
}

Result run_coeffs(const Config& c) {
  const CoeffVector v = coeffs_for(c);
  Result out;
  out.report = io::to_json(v);
  for (std::size_t j = 0; j < v.c.size(); ++j)
    out.text += "c_" + std::to_string(j) + " = " + num(v.c[j]) + "\n";
  return out;
}

Result run_newton(const Config& c) {
  const CoeffVector v = coeffs_for(c);
  const auto r = newton_check(v, c.tol);
  Result out;
  out.report = Json{{"coeffs", io::to_json(v)}, {"newton", io::to_json(r)}};
  out.code = r.holds ? kExitPass : kExitViolation;
  for (std::size_t j = 0; j < r.margins.size(); ++j)
    out.text += "mu_" + std::to_string(j + 1) + " = " + num(r.margins[j]) + "\n";
  out.text += std::string("holds: ") + (r.holds ? "yes" : "no") + "\n";
  if (r.worst_j) out.text += "worst j: " + std::to_string(*r.worst_j) + "\n";
  return out;
}

Json sweep_entry_json(std::size_t m, std::size_t k, const MarginReport& g,
                      const MarginReport& p) {
  return Json{{"m", m}, {"k", k}, {"genimm", io::to_json(g)}, {"pointwise", io::to_json(p)}};
}

Result run_sfunc(const Config& c) {
  const Matrix a = load_matrix(c);
  const std::size_t n = a.order();
  const MinorTable t(a, c.override_caps);
  Result out;
  Json entries = Json::array();
  bool ok = true;
  std::optional<std::pair<std::size_t, std::size_t>> worst;
  double worst_rel = 0.0;
  auto note = [&](std::size_t m, std::size_t k, const MarginReport& g, const MarginReport& p) {
    entries.push_back(sweep_entry_json(m, k, g, p));
    for (const auto* r : {&g, &p}) {
      const double rel = r->scale > 0.0 ? r->margin / r->scale : r->margin;
      if (!worst || rel < worst_rel) {
        worst = {m, k};
        worst_rel = rel;
      }
      ok = ok && r->holds;
    }
    out.text += "m=" + std::to_string(m) + " k=" + std::to_string(k) +
                "  genimm " + num(g.margin) + (g.holds ? "" : " FAIL") +
                "  pointwise " + num(p.margin) + (p.holds ? "" : " FAIL") + "\n";
  };
  if (c.m || c.k) {
    const std::size_t m = need(c.m, "--m");
    const std::size_t k = need(c.k, "--k");
    if (!(k < m && m < n && 2 * m - k <= n)) {
      throw InputError("infeasible --m/--k: need k < m < n and 2m - k <= n (n = " +
                       std::to_string(n) + ")");
    }
    note(m, k, genimm_check(t, m, k, c.tol), pointwise_check(t, m, k, c.tol));
    out.report["S"] = Json{{"S_m_m_k", s_value(t, {m, m, k, n})},
                           {"S_m+1_m-1_k", s_value(t, {m + 1, m - 1, k, n})}};
  } else {
    for (const auto& e : genimm_sweep(t, c.tol)) note(e.m, e.k, e.genimm, e.pointwise);
  }
  out.report["n"] = n;
  out.report["entries"] = std::move(entries);
  out.report["holds"] = ok;
  if (worst) out.report["worst"] = Json{{"m", worst->first}, {"k", worst->second}};
  out.code = ok ? kExitPass : kExitViolation;
  return out;
}

void write_file(const std::string& path, const std::string& body) {
  std::ofstream f(path);
  if (!f) throw InputError("cannot write output file '" + path + "'");
  f << body;
}

Result run_forms(const Config& c) {
  const std::size_t n = need(c.n, "--n");
  const std::size_t m = need(c.m, "--m");
  const FormKind kind = parse_form_kind(c.kind.empty() ? "psi" : c.kind);
  const FormMatrix f = build_form(n, m, kind, c.override_caps);
  const auto psd = psd_check(f, 1e-8);
  const auto s = structure_checks(n, m, 1e-10, c.override_caps);
  Result out;
  out.report = Json{{"n", n},
                    {"m", m},
                    {"kind", std::string(to_string(kind))},
                    {"dim", f.dim()},
                    {"psd", psd.psd},
                    {"min_eigenvalue", psd.min_eigenvalue},
                    {"max_abs", psd.max_abs},
                    {"structure",
                     {{"gramian", s.gramian},
                      {"complement", s.complement},
                      {"reciprocal", s.reciprocal},
                      {"rank_one_shift", s.rank_one_shift},
                      {"null_vector", s.null_vector},
                      {"null_vector_residual", s.null_vector_residual}}}};
  // tilde_phi is indefinite by design; only the other kinds must be PSD.
  const bool ok = s.all() && (kind == FormKind::tilde_phi || psd.psd);
  out.code = ok ? kExitPass : kExitViolation;
  if (!c.output.empty()) {
    const bool csv = c.output.size() >= 4 && c.output.substr(c.output.size() - 4) == ".csv";
    write_file(c.output, csv ? to_csv(f) : io::to_json(f).dump(2) + "\n");
    out.report["output"] = c.output;
  }
  out.text = std::string(to_string(kind)) + "(" + std::to_string(n) + "," + std::to_string(m) +
             ") dim " + std::to_string(f.dim()) + "\nmin eigenvalue " +
             num(psd.min_eigenvalue) + (psd.psd ? " (psd)" : " (not psd)") +
             "\nstructure relations " + (s.all() ? "hold" : "FAIL") + "\n";
  return out;
}

Result run_identity(const Config& c) {
  const std::size_t n = need(c.n, "--n");
  if (n < 2) throw InputError("--n must be >= 2");
  std::vector<std::size_t> ms;
  if (c.m) {
    if (*c.m < 1 || *c.m >= n) throw InputError("--m must satisfy 1 <= m <= n-1");
    ms.push_back(*c.m);
  } else {
    for (std::size_t m = 1; m < n; ++m) ms.push_back(m);
  }
  Result out;
  Json cells = Json::array();
  bool ok = true;
  for (std::size_t m : ms) {
    const BigRational sum = binomial_identity_sum(n, m);
    const std::string s = sum.str();
    cells.push_back(Json{{"n", n}, {"m", m}, {"sum", s}});
    ok = ok && sum == 0;
    out.text += "n=" + std::to_string(n) + " m=" + std::to_string(m) + " sum " + s + "\n";
  }
  if (ms.size() == 1) {
    out.report = cells[0];
  } else {
    out.report = Json{{"cells", std::move(cells)}};
  }
  out.report["zero"] = ok;
  out.code = ok ? kExitPass : kExitViolation;
  return out;
}

Result screen_one(const std::string& path, const ScreeningParams& params) {
  const auto r = screen(load_spectrum(path), params);
  Result out;
  out.report = io::to_json(r);
  out.code = r.passes() ? kExitPass : kExitViolation;
  auto line = [](const char* name, const ConditionResult& x) {
    std::string s = std::string(name) + ": " + std::string(to_string(x.status));
    if (x.status != Status::not_applicable) s += " margin " + num(x.margin);
    if (x.k) s += " k=" + std::to_string(*x.k);
    if (x.m) s += " m=" + std::to_string(*x.m);
    if (x.j) s += " j=" + std::to_string(*x.j);
    return s + "\n";
  };
  out.text = line("moments", r.moments) + line("jll", r.jll) +
             line("newton_shift", r.newton_shift) + line("laffey_meehan", r.laffey_meehan);
  return out;
}

Result run_niep(const Config& c) {
  if (c.spectrum.empty()) throw InputError("missing required flag --spectrum");
  const ScreeningParams params{c.moment_k, c.jll_bound, c.tol};
  if (!fs::is_directory(c.spectrum)) return screen_one(c.spectrum, params);

  std::vector<std::string> files;
  for (const auto& e : fs::directory_iterator(c.spectrum))
    if (e.is_regular_file() && e.path().extension() == ".json") files.push_back(e.path().string());
  std::sort(files.begin(), files.end());

  std::vector<std::future<Result>> jobs;
  jobs.reserve(files.size());
  for (const auto& f : files) {
    jobs.push_back(std::async(std::launch::async, [f, params] {
      try {
        return screen_one(f, params);
      } catch (const std::exception& e) {
        Result r;
        r.code = kExitInput;
        r.report = Json{{"error", e.what()}};
        r.text = std::string("error: ") + e.what() + "\n";
        return r;
      }
    }));
  }
  Result out;
  Json items = Json::array();
  for (std::size_t i = 0; i < files.size(); ++i) {
    Result r = jobs[i].get();
    const std::string name = fs::path(files[i]).filename().string();
    items.push_back(Json{{"file", name}, {"report", std::move(r.report)}});
    out.text += "== " + name + "\n" + r.text;
    out.code = std::max(out.code, r.code);
  }
  out.report = Json{{"files", std::move(items)}, {"passes", out.code == kExitPass}};
  return out;
}

Result run_gen(const Config& c) {
  GeneratorSpec spec;
  spec.kind = parse_generator_kind(c.kind.empty() ? "M" : c.kind);
  spec.n = need(c.n, "--n");
  spec.seed = c.seed;
  spec.margin = c.margin;
  const Matrix a = generate(spec);
  Result out;
  out.report = io::to_json(a);
  out.report["spec"] = io::to_json(spec);
  std::ostringstream os;
  os.precision(17);
  for (std::size_t i = 0; i < a.order(); ++i) {
    for (std::size_t j = 0; j < a.order(); ++j) os << (j ? " " : "") << a(i, j);
    os << "\n";
  }
  out.text = os.str();
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Newton's inequalities for M-matrices: verification tools"};
  app.require_subcommand(1, 1);
  Config cfg;

  auto tol_opt = [&](CLI::App* s) {
    s->add_option("--tol", cfg.tol, "Tolerance")->check(CLI::PositiveNumber);
  };
  auto common = [&](CLI::App* s) {
    s->add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"json", "text"}));
    s->add_flag("--override-caps", cfg.override_caps, "Lift size caps");
  };

  auto* classify_cmd = app.add_subcommand("classify", "Z/P/M/inverse-M classification");
  classify_cmd->add_option("--input", cfg.input, "Matrix JSON")->required();
  tol_opt(classify_cmd);
  common(classify_cmd);

  auto* coeffs_cmd = app.add_subcommand("coeffs", "Normalized characteristic coefficients");
  auto* newton_cmd = app.add_subcommand("newton", "Newton's inequalities");
  for (auto* s : {coeffs_cmd, newton_cmd}) {
    s->add_option("--input", cfg.input, "Matrix JSON");
    s->add_option("--spectrum", cfg.spectrum, "Spectrum JSON");
    tol_opt(s);
    common(s);
  }

  auto* sfunc_cmd = app.add_subcommand("sfunc", "Generalized and pointwise S inequalities");
  sfunc_cmd->add_option("--input", cfg.input, "Matrix JSON")->required();
  sfunc_cmd->add_option("--m", cfg.m, "Subset size m");
  sfunc_cmd->add_option("--k", cfg.k, "Overlap k");
  tol_opt(sfunc_cmd);
  common(sfunc_cmd);

  auto* forms_cmd = app.add_subcommand("forms", "Build and check a subset-indexed form");
  forms_cmd->add_option("--n", cfg.n, "Ground set size")->required();
  forms_cmd->add_option("--m", cfg.m, "Subset size")->required();
  forms_cmd->add_option("--kind", cfg.kind, "phi, tilde_phi, tilde_psi or psi (default psi)");
  forms_cmd->add_option("--output", cfg.output, "Export entries (.csv or JSON)");
  common(forms_cmd);

  auto* identity_cmd = app.add_subcommand("identity", "Exact binomial identity sum");
  identity_cmd->add_option("--n", cfg.n, "n")->required();
  identity_cmd->add_option("--m", cfg.m, "m (all 1..n-1 when omitted)");
  common(identity_cmd);

  auto* niep_cmd = app.add_subcommand("niep-screen", "Screen candidate spectra");
  niep_cmd->add_option("--spectrum", cfg.spectrum, "Spectrum JSON file or directory")->required();
  niep_cmd->add_option("--jll-bound", cfg.jll_bound, "Largest k*m checked")
      ->check(CLI::Range(std::size_t{2}, std::size_t{1000}));
  niep_cmd->add_option("--moment-k", cfg.moment_k, "Largest moment checked")
      ->check(CLI::Range(std::size_t{1}, std::size_t{1000}));
  tol_opt(niep_cmd);
  common(niep_cmd);

  auto* gen_cmd = app.add_subcommand("gen", "Seeded random matrix");
  gen_cmd->add_option("--kind", cfg.kind,
                      "M, inverse-M, singular-M or similarity-conjugated-M (default M)");
  gen_cmd->add_option("--n", cfg.n, "Order")->required();
  gen_cmd->add_option("--seed", cfg.seed, "Seed");
  gen_cmd->add_option("--margin", cfg.margin, "Diagonal dominance margin");
  common(gen_cmd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInput;
  }

  try {
    Result r;
    if (*classify_cmd) r = run_classify(cfg);
    else if (*coeffs_cmd) r = run_coeffs(cfg);
    else if (*newton_cmd) r = run_newton(cfg);
    else if (*sfunc_cmd) r = run_sfunc(cfg);
    else if (*forms_cmd) r = run_forms(cfg);
    else if (*identity_cmd) r = run_identity(cfg);
    else if (*niep_cmd) r = run_niep(cfg);
    else r = run_gen(cfg);
    if (cfg.format == "text") {
      std::cout << r.text;
    } else {
      std::cout << r.report.dump(2) << "\n";
    }
    return r.code;
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const ConstructionError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }
}
