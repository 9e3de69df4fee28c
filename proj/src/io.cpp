#include "mnewton/io.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "mnewton/error.hpp"

namespace mnewton::io {
namespace {

const Json& field(const Json& j, const char* name) {
  if (!j.is_object()) throw InputError("expected a JSON object");
  auto it = j.find(name);
  if (it == j.end()) throw InputError(std::string("missing field '") + name + "'");
  return *it;
}

double number(const Json& j, const std::string& where) {
  if (!j.is_number()) throw InputError("field '" + where + "' must be a number");
  return j.get<double>();
}

std::uint64_t unsigned_integer(const Json& j, const std::string& where) {
  const bool ok = j.is_number_unsigned() || (j.is_number_integer() && j.get<std::int64_t>() >= 0);
  if (!ok) throw InputError("field '" + where + "' must be a nonnegative integer");
  return j.get<std::uint64_t>();
}

Json condition_json(const ConditionResult& r) { return to_json(r); }

}  // namespace

Json parse_json_text(const std::string& text, const std::string& source) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw InputError("malformed JSON in " + source + ": " + e.what());
  }
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot read input file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_json_text(ss.str(), path);
}

Matrix matrix_from_json(const Json& j) {
  const auto n = unsigned_integer(field(j, "n"), "n");
  const Json& rows = field(j, "rows");
  if (!rows.is_array()) throw InputError("field 'rows' must be an array of arrays");
  if (rows.size() != n) {
    throw InputError("field 'rows' has " + std::to_string(rows.size()) + " rows but 'n' is " +
                     std::to_string(n));
  }
  std::vector<double> flat;
  flat.reserve(n * n);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const Json& row = rows[i];
    const std::string where = "rows[" + std::to_string(i) + "]";
    if (!row.is_array()) throw InputError("field '" + where + "' must be an array");
    if (row.size() != n) {
      throw InputError("field '" + where + "' has " + std::to_string(row.size()) +
                       " entries, expected " + std::to_string(n));
    }
    for (std::size_t c = 0; c < row.size(); ++c) {
      flat.push_back(number(row[c], where + "[" + std::to_string(c) + "]"));
    }
  }
  return Matrix(n, std::move(flat));
}

Json to_json(const Matrix& a) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < a.order(); ++i) {
    Json row = Json::array();
    for (double v : a.row(i)) row.push_back(v);
    rows.push_back(std::move(row));
  }
  return Json{{"n", a.order()}, {"rows", std::move(rows)}};
}

RealPoly poly_from_json(const Json& j) {
  const Json& c = field(j, "coeffs");
  if (!c.is_array()) throw InputError("field 'coeffs' must be an array");
  std::vector<double> coeffs;
  for (std::size_t i = 0; i < c.size(); ++i) {
    coeffs.push_back(number(c[i], "coeffs[" + std::to_string(i) + "]"));
  }
  return RealPoly(std::move(coeffs));
}

Json to_json(const RealPoly& p) { return Json{{"coeffs", p.coeffs()}}; }

Spectrum spectrum_from_json(const Json& j) {
  const Json& v = field(j, "values");
  if (!v.is_array()) throw InputError("field 'values' must be an array of [re, im] pairs");
  Spectrum s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    const std::string where = "values[" + std::to_string(i) + "]";
    const Json& e = v[i];
    if (e.is_number()) {
      s.values.emplace_back(e.get<double>(), 0.0);
    } else if (e.is_array() && e.size() == 2) {
      s.values.emplace_back(number(e[0], where + "[0]"), number(e[1], where + "[1]"));
    } else {
      throw InputError("field '" + where + "' must be [re, im]");
    }
    if (!std::isfinite(s.values.back().real()) || !std::isfinite(s.values.back().imag())) {
      throw InputError("field '" + where + "' must be finite");
    }
  }
  if (s.values.empty()) throw InputError("field 'values' must be nonempty");
  return s;
}

Json to_json(const Spectrum& s) {
  Json v = Json::array();
  for (const auto& z : s.values) v.push_back(Json::array({z.real(), z.imag()}));
  return Json{{"values", std::move(v)}};
}

GeneratorSpec generator_spec_from_json(const Json& j) {
  GeneratorSpec g;
  const Json& kind = field(j, "kind");
  if (!kind.is_string()) throw InputError("field 'kind' must be a string");
  g.kind = parse_generator_kind(kind.get<std::string>());
  g.n = unsigned_integer(field(j, "n"), "n");
  g.seed = unsigned_integer(field(j, "seed"), "seed");
  if (j.contains("margin")) g.margin = number(j.at("margin"), "margin");
  if (g.n == 0) throw InputError("field 'n' must be >= 1");
  if (!(g.margin > 0.0)) throw InputError("field 'margin' must be > 0");
  return g;
}

Json to_json(const GeneratorSpec& g) {
  return Json{{"kind", std::string(to_string(g.kind))},
              {"n", g.n},
              {"seed", g.seed},
              {"margin", g.margin}};
}

Json to_json(const FormMatrix& f) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < f.dim(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < f.dim(); ++c) row.push_back(f(r, c));
    rows.push_back(std::move(row));
  }
  return Json{{"n", f.n()}, {"m", f.m()}, {"kind", std::string(to_string(f.kind()))},
              {"entries", std::move(rows)}};
}

Json to_json(const CoeffVector& c) { return Json{{"n", c.n}, {"c", c.c}}; }

Json to_json(const NewtonReport& r) {
  Json j{{"holds", r.holds}, {"margins", r.margins}};
  j["worst_j"] = r.worst_j ? Json(*r.worst_j) : Json(nullptr);
  if (r.worst_j) j["worst_margin"] = r.margins[*r.worst_j - 1];
  return j;
}

Json to_json(const IndexSet& s) {
  return Json(std::vector<int>(s.elements().begin(), s.elements().end()));
}

Json to_json(const MatrixClassReport& r) {
  Json j{{"is_Z", r.is_z}};
  if (r.is_p) {
    j["is_P"] = *r.is_p;
  } else {
    j["is_P"] = "not evaluated (n too large)";
  }
  j["m_class"] = std::string(to_string(r.m_class));
  j["is_inverse_M"] = r.is_inverse_m;
  j["leading_minors"] = r.leading_minors;
  Json w = Json::array();
  for (const auto& x : r.witnesses) w.push_back(Json{{"alpha", to_json(x.alpha)}, {"minor", x.value}});
  j["witnesses"] = std::move(w);
  Json z = Json::array();
  for (const auto& x : r.z_violations)
    z.push_back(Json{{"row", x.row}, {"col", x.col}, {"value", x.value}});
  j["z_violations"] = std::move(z);
  return j;
}

Json to_json(const MarginReport& r) {
  return Json{{"lhs", r.lhs}, {"rhs", r.rhs}, {"margin", r.margin}, {"scale", r.scale},
              {"holds", r.holds}};
}

Json to_json(const ConditionResult& r) {
  Json j{{"status", std::string(to_string(r.status))}, {"margin", r.margin}};
  Json w = Json::object();
  if (r.k) w["k"] = *r.k;
  if (r.m) w["m"] = *r.m;
  if (r.j) w["j"] = *r.j;
  j["witness"] = std::move(w);
  if (!r.note.empty()) j["note"] = r.note;
  return j;
}

Json to_json(const ScreeningReport& r) {
  return Json{{"params",
               {{"moment_k", r.params.moment_k},
                {"jll_bound", r.params.jll_bound},
                {"tol", r.params.tol}}},
              {"moments", condition_json(r.moments)},
              {"jll", condition_json(r.jll)},
              {"newton_shift", condition_json(r.newton_shift)},
              {"laffey_meehan", condition_json(r.laffey_meehan)},
              {"passes", r.passes()}};
}

}  // namespace mnewton::io
