#include "pcovers/io/json.hpp"

#include <algorithm>
#include <cstdio>
#include <vector>

#include "pcovers/errors.hpp"

namespace pcov::io {

namespace {

const json& require(const json& j, const char* key) {
  if (!j.is_object()) throw ParseError(std::string("expected an object with key \"") + key + "\"");
  const auto it = j.find(key);
  if (it == j.end()) throw ParseError(std::string("missing key \"") + key + "\"");
  return *it;
}

long long as_int(const json& j, const char* what) {
  if (!j.is_number_integer()) throw ParseError(std::string(what) + " must be an integer");
  return j.get<long long>();
}

std::vector<int> as_int_array(const json& j, const char* what) {
  if (!j.is_array()) throw ParseError(std::string(what) + " must be an array of integers");
  std::vector<int> out;
  for (const json& v : j) out.push_back(static_cast<int>(as_int(v, what)));
  return out;
}

bool as_bool(const json& j, const char* what) {
  if (!j.is_boolean()) throw ParseError(std::string(what) + " must be a boolean");
  return j.get<bool>();
}

std::vector<int> coeff_vector(const Fq& a) { return {a.coeffs().begin(), a.coeffs().end()}; }

void check_context(Field f, std::optional<Field> context) {
  if (context && !(*context == f)) throw UsageError("value is over a different field than expected");
}

std::pair<int, int> parse_key(const std::string& key, int n) {
  int i = 0, j = 0;
  char tail = 0;
  if (std::sscanf(key.c_str(), "%d,%d%c", &i, &j, &tail) != 2)
    throw ParseError("entry key \"" + key + "\" is not of the form \"i,j\"");
  if (i < 1 || j <= i || j > n) throw ParseError("entry key \"" + key + "\" is outside the strict upper triangle");
  return {i - 1, j - 1};
}

}  // namespace

json parse_document(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
}

json field_to_json(Field f) { return json{{"p", f.characteristic()}, {"modulus", f.modulus()}}; }

Field field_from_json(const json& j) {
  const int p = static_cast<int>(as_int(require(j, "p"), "p"));
  if (!j.contains("modulus")) return Field::prime(p);
  return Field::make(p, as_int_array(j["modulus"], "modulus"));
}

json fq_to_json(const Fq& a) {
  if (a.degree() == 1) return a.coeff(0);
  json j = field_to_json(a.field());
  j["coeffs"] = coeff_vector(a);
  return j;
}

Fq fq_from_json(const json& j, std::optional<Field> context) {
  if (j.is_number_integer()) {
    if (!context) throw ParseError("a bare integer element needs a known field");
    return context->from_int(j.get<long long>());
  }
  if (j.is_array()) {
    if (!context) throw ParseError("a bare coefficient array needs a known field");
    const auto c = as_int_array(j, "coeffs");
    if (static_cast<int>(c.size()) > context->degree()) throw ParseError("too many coefficients for the field");
    return context->from_coeffs(c);
  }
  if (!j.is_object()) throw ParseError("field element must be an integer, an array or an object");
  const Field f = field_from_json(j);
  check_context(f, context);
  const auto c = as_int_array(require(j, "coeffs"), "coeffs");
  if (static_cast<int>(c.size()) > f.degree()) throw ParseError("too many coefficients for the field");
  return f.from_coeffs(c);
}

json series_to_json(const LaurentSeries& s) {
  json coeffs = json::array();
  for (const Fq& c : s.terms()) coeffs.push_back(c.degree() == 1 ? json(c.coeff(0)) : json(coeff_vector(c)));
  return json{{"field", field_to_json(s.field())},
              {"val", s.valuation()},
              {"prec", s.is_exact() ? json(nullptr) : json(s.precision())},
              {"coeffs", std::move(coeffs)}};
}

LaurentSeries series_from_json(const json& j, std::optional<Field> context) {
  if (!j.is_object()) throw ParseError("series must be an object");
  Field f = context ? *context : Field::prime(2);
  if (j.contains("field")) {
    f = field_from_json(j["field"]);
    check_context(f, context);
  } else if (!context) {
    throw ParseError("series needs a \"field\" key");
  }
  const long val = static_cast<long>(as_int(require(j, "val"), "val"));
  const json& pj = require(j, "prec");
  long prec = LaurentSeries::kExact;
  if (!pj.is_null()) {
    prec = static_cast<long>(as_int(pj, "prec"));
    if (prec >= LaurentSeries::kExact) throw ParseError("precision too large; use null for exact series");
  }
  if (val < -LaurentSeries::kExact / 2) throw ParseError("valuation out of range");
  const json& cj = require(j, "coeffs");
  if (!cj.is_array()) throw ParseError("coeffs must be an array");
  std::vector<Fq> coeffs;
  for (const json& c : cj) coeffs.push_back(fq_from_json(c, f));
  return LaurentSeries(f, val, prec, std::move(coeffs));
}

RingKind ring_from_name(const std::string& name) {
  for (RingKind r : {RingKind::kFiniteField, RingKind::kGlobalP1, RingKind::kLaurent, RingKind::kEllipticGlobal})
    if (name == ring_name(r)) return r;
  throw ParseError("unknown ring \"" + name + "\" (expected fq, p1, laurent or elliptic)");
}

namespace {

template <class R, class Encode>
json matrix_json(const UnipotentMatrix<R>& m, Encode encode) {
  json entries = json::object();
  for (int i = 0; i < m.dim(); ++i)
    for (int j = i + 1; j < m.dim(); ++j)
      entries[std::to_string(i + 1) + "," + std::to_string(j + 1)] = encode(m.at(i, j));
  return json{{"n", m.dim()}, {"ring", ring_name(m.ring())}, {"field", field_to_json(m.field())}, {"entries", entries}};
}

}  // namespace

json matrix_to_json(const UnipotentMatrix<Fq>& m) { return matrix_json(m, fq_to_json); }
json matrix_to_json(const UnipotentMatrix<LaurentSeries>& m) { return matrix_json(m, series_to_json); }

AnyMatrix matrix_from_json(const json& j, std::optional<Field> context) {
  const long long n = as_int(require(j, "n"), "n");
  if (n < 2 || n > 6) throw UsageError("matrix dimension must be in [2, 6], got " + std::to_string(n));
  const json& rj = require(j, "ring");
  if (!rj.is_string()) throw ParseError("ring must be a string");
  const RingKind ring = ring_from_name(rj.get<std::string>());
  const json& ej = require(j, "entries");
  if (!ej.is_object()) throw ParseError("entries must be an object keyed by \"i,j\"");

  std::optional<Field> field = context;
  if (j.contains("field")) {
    const Field f = field_from_json(j["field"]);
    check_context(f, context);
    field = f;
  }
  if (!field) {
    // Take the field from the first self-describing entry.
    for (const auto& [key, value] : ej.items()) {
      if (ring == RingKind::kFiniteField && value.is_object()) field = field_from_json(value);
      if (ring != RingKind::kFiniteField && value.is_object() && value.contains("field"))
        field = field_from_json(value["field"]);
      if (field) break;
    }
  }
  if (!field) throw ParseError("cannot determine the field of the matrix; add a \"field\" key");

  const int dim = static_cast<int>(n);
  const std::size_t count = UnipotentMatrix<Fq>::entry_count(dim);
  auto offset = [dim](int i, int j) { return static_cast<std::size_t>(i * dim - i * (i + 1) / 2 + (j - i - 1)); };

  if (ring == RingKind::kFiniteField) {
    std::vector<Fq> e(count, field->zero());
    for (const auto& [key, value] : ej.items()) {
      const auto [i, jj] = parse_key(key, dim);
      e[offset(i, jj)] = fq_from_json(value, field);
    }
    return UnipotentMatrix<Fq>(dim, ring, std::move(e));
  }
  std::vector<LaurentSeries> e(count, LaurentSeries::zero(*field));
  for (const auto& [key, value] : ej.items()) {
    const auto [i, jj] = parse_key(key, dim);
    e[offset(i, jj)] = series_from_json(value, field);
  }
  return UnipotentMatrix<LaurentSeries>(dim, ring, std::move(e));
}

json curve_to_json(const EllipticCurve& e) { return json{{"p", e.p()}, {"A", e.a()}, {"B", e.b()}}; }

EllipticCurve curve_from_json(const json& j) {
  return EllipticCurve(static_cast<int>(as_int(require(j, "p"), "p")), static_cast<int>(as_int(require(j, "A"), "A")),
                       static_cast<int>(as_int(require(j, "B"), "B")));
}

json combination_to_json(const GlobalCombination& g) {
  json out = json::array();
  for (const auto& [key, c] : g.terms()) out.push_back(json{{"i", key.first}, {"j", key.second}, {"c", c}});
  return out;
}

GlobalCombination combination_from_json(const json& j, int p) {
  if (!j.is_array()) throw ParseError("a global combination must be an array");
  GlobalCombination g(p);
  for (const json& t : j) {
    const int i = static_cast<int>(as_int(require(t, "i"), "i"));
    const int jj = static_cast<int>(as_int(require(t, "j"), "j"));
    if (i < 0 || jj < 0 || jj > 1) throw ParseError("basis function x^i y^j needs i >= 0 and j in {0, 1}");
    g.add(i, jj, static_cast<int>(as_int(require(t, "c"), "c")));
  }
  return g;
}

json report_to_json(const EllipticReport& r) {
  return json{{"p", r.p},
              {"A", r.a},
              {"B", r.b},
              {"count", r.count},
              {"alpha", r.alpha},
              {"deuring", r.deuring},
              {"anomalous", r.anomalous},
              {"injective", r.injective},
              {"surjective", r.surjective},
              {"equivalence", r.equivalence},
              {"discrepancy", r.discrepancy}};
}

EllipticReport report_from_json(const json& j) {
  EllipticReport r;
  r.p = static_cast<int>(as_int(require(j, "p"), "p"));
  r.a = static_cast<int>(as_int(require(j, "A"), "A"));
  r.b = static_cast<int>(as_int(require(j, "B"), "B"));
  r.count = static_cast<long>(as_int(require(j, "count"), "count"));
  r.alpha = static_cast<int>(as_int(require(j, "alpha"), "alpha"));
  r.deuring = static_cast<int>(as_int(require(j, "deuring"), "deuring"));
  r.anomalous = as_bool(require(j, "anomalous"), "anomalous");
  r.injective = as_bool(require(j, "injective"), "injective");
  r.surjective = as_bool(require(j, "surjective"), "surjective");
  r.equivalence = as_bool(require(j, "equivalence"), "equivalence");
  r.discrepancy = j.contains("discrepancy") && as_bool(j["discrepancy"], "discrepancy");
  return r;
}

json orbit_report_to_json(const OrbitReport& r) {
  json reps = json::array();
  for (const auto& m : r.representatives) reps.push_back(matrix_to_json(m));
  return json{{"n", r.n},
              {"q", r.q},
              {"class_count", r.class_count},
              {"class_sizes", r.class_sizes},
              {"representatives", std::move(reps)}};
}

}  // namespace pcov::io
