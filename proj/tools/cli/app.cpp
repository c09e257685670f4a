#include "app.hpp"

#include <CLI11.hpp>

#include <cctype>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "pcovers/curves/globalize.hpp"
#include "pcovers/errors.hpp"
#include "pcovers/io/json.hpp"
#include "pcovers/series/artin_schreier.hpp"
#include "pcovers/unipotent/lang.hpp"
#include "pcovers/unipotent/orbits.hpp"

namespace pcov::cli {

namespace {

using io::json;

struct Config {
  std::optional<int> p;
  int ext_degree = 1;
  std::string modulus;
  long prec = 40;
  std::string model = "p1";
  std::string in;
  std::string out;
  std::uint64_t seed = 0;
  std::optional<int> n;
  std::optional<int> curve_a;
  std::optional<int> curve_b;
  bool scan = false;
  bool serial = false;
};

bool looks_inline(const std::string& s) {
  for (char c : s) {
    if (std::isspace(static_cast<unsigned char>(c))) continue;
    return c == '{' || c == '[';
  }
  return false;
}

std::string read_source(const std::string& source) {
  if (source.empty() || source == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    return buf.str();
  }
  if (looks_inline(source)) return source;
  std::ifstream f(source);
  if (!f) throw UsageError("cannot read input file " + source);
  std::ostringstream buf;
  buf << f.rdbuf();
  return buf.str();
}

json load(const std::string& source) { return io::parse_document(read_source(source)); }

std::vector<int> parse_modulus(const std::string& text) {
  if (looks_inline(text)) {
    const json j = io::parse_document(text);
    if (!j.is_array()) throw ParseError("--modulus must be a list of coefficients");
    std::vector<int> out;
    for (const json& v : j) {
      if (!v.is_number_integer()) throw ParseError("--modulus entries must be integers");
      out.push_back(v.get<int>());
    }
    return out;
  }
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::logic_error&) {
      throw ParseError("--modulus must be comma-separated integers, low-to-high");
    }
  }
  return out;
}

std::optional<Field> context_field(const Config& c) {
  if (!c.p) {
    if (!c.modulus.empty() || c.ext_degree != 1) throw UsageError("--modulus and --ext-degree need --p");
    return std::nullopt;
  }
  if (!c.modulus.empty()) {
    const Field f = Field::make(*c.p, parse_modulus(c.modulus));
    if (c.ext_degree != 1 && c.ext_degree != f.degree()) throw UsageError("--ext-degree disagrees with --modulus");
    return f;
  }
  return Field::extension(*c.p, c.ext_degree);
}

Field require_field(const Config& c) {
  const auto f = context_field(c);
  if (!f) throw UsageError("this command needs --p");
  return *f;
}

std::optional<EllipticCurve> model_curve(const Config& c) {
  if (c.model == "p1") return std::nullopt;
  return io::curve_from_json(load(c.model));
}

// Exact inputs with terms of positive degree describe infinite preimages;
// they are read at the working precision instead.
LaurentSeries working_series(LaurentSeries s, const Config& c, bool elliptic) {
  if (s.is_exact() && (elliptic || !s.positive_part().is_zero())) return s.truncated(c.prec);
  return s;
}

void require_verified(bool ok, const char* what) {
  if (!ok) throw IntegrityError(std::string(what) + ": the computed witness failed verification");
}

json cmd_wp_solve(const Config& c) {
  const LaurentSeries g = working_series(io::series_from_json(load(c.in), context_field(c)), c, false);
  const auto b = wp_solve_local(g);
  if (!b) return json{{"solvable", false}, {"b", nullptr}, {"input", io::series_to_json(g)}};
  const LaurentSeries image = wp_apply(*b);
  require_verified(agrees(image, g), "wp-solve");
  return json{{"solvable", true},
              {"b", io::series_to_json(*b)},
              {"wp_b", io::series_to_json(image.truncated(g.precision()))},
              {"input", io::series_to_json(g)},
              {"verified", true}};
}

json cmd_split(const Config& c) {
  const auto curve = model_curve(c);
  std::optional<Field> ctx = context_field(c);
  if (curve) ctx = curve->field();
  const LaurentSeries f = working_series(io::series_from_json(load(c.in), ctx), c, curve.has_value());
  if (!curve) {
    const P1Split s = split_p1(f);
    require_verified(agrees(wp_apply(s.b) + s.h.series(), f), "split");
    return json{{"model", "p1"}, {"b", io::series_to_json(s.b)}, {"h", io::series_to_json(s.h.series())}, {"verified", true}};
  }
  const EllipticSplit s = split_elliptic(*curve, f);
  const LaurentSeries g = evaluate(*curve, s.g, f.precision());
  const LaurentSeries rebuilt = wp_apply(s.b) + g + LaurentSeries::monomial(curve->field().from_int(s.obstruction), -1);
  require_verified(agrees(rebuilt, f), "split");
  return json{{"model", io::curve_to_json(*curve)},
              {"b", io::series_to_json(s.b)},
              {"g", io::combination_to_json(s.g)},
              {"g_expansion", io::series_to_json(g)},
              {"obstruction", s.obstruction},
              {"verified", true}};
}

SeriesMatrix series_matrix(const io::AnyMatrix& any, const char* command) {
  if (!std::holds_alternative<SeriesMatrix>(any))
    throw UsageError(std::string(command) + " needs a matrix over Laurent series");
  return std::get<SeriesMatrix>(any);
}

json cmd_reduce(const Config& c, std::ostream& err, int& code) {
  const auto curve = model_curve(c);
  std::optional<Field> ctx = context_field(c);
  if (curve) ctx = curve->field();
  const SeriesMatrix raw = series_matrix(io::matrix_from_json(load(c.in), ctx), "reduce");
  std::vector<LaurentSeries> entries;
  for (const auto& s : raw.entries()) entries.push_back(working_series(s, c, curve.has_value()));
  const SeriesMatrix m(raw.dim(), RingKind::kLaurent, std::move(entries));

  const CurveModel model = curve ? CurveModel(*curve) : CurveModel(P1Model{m.field()});
  try {
    const GlobalReduction r = reduce_matrix_global(model, m);
    require_verified(agrees(p_conjugate(r.b, m), r.m_prime), "reduce");
    json out{{"B", io::matrix_to_json(r.b)}, {"M_prime", io::matrix_to_json(r.m_prime)}, {"verified", true}};
    if (curve) {
      json g = json::object();
      for (int i = 0; i < m.dim(); ++i)
        for (int j = i + 1; j < m.dim(); ++j)
          g[std::to_string(i + 1) + "," + std::to_string(j + 1)] = io::combination_to_json(r.combinations[m.offset(i, j)]);
      out["global_functions"] = g;
    }
    return out;
  } catch (const RefusalError& e) {
    err << "refused: " << e.what() << "\n";
    code = kRefused;
    const json entry = e.row() > 0 ? json(std::to_string(e.row()) + "," + std::to_string(e.col())) : json(nullptr);
    return json{{"refused", true}, {"witness", {{"entry", entry}, {"obstruction", e.obstruction()}}}, {"reason", e.what()}};
  }
}

json cmd_equiv(const Config& c) {
  const json doc = load(c.in);
  if (!doc.is_object() || !doc.contains("M") || !doc.contains("M_prime"))
    throw ParseError("equiv expects {\"M\": matrix, \"M_prime\": matrix}");
  const auto ctx = context_field(c);
  const io::AnyMatrix a = io::matrix_from_json(doc["M"], ctx);
  const io::AnyMatrix b = io::matrix_from_json(doc["M_prime"], ctx);
  if (a.index() != b.index()) throw UsageError("M and M_prime are over different kinds of ring");
  return std::visit(
      [&](const auto& m) -> json {
        using M = std::decay_t<decltype(m)>;
        const M& mp = std::get<M>(b);
        const auto cm = p_equiv_decide(m, mp);
        if (!cm) return json{{"equivalent", false}, {"C", nullptr}};
        require_verified(agrees(p_conjugate(*cm, mp), m), "equiv");
        return json{{"equivalent", true}, {"C", io::matrix_to_json(*cm)}, {"verified", true}};
      },
      a);
}

json cmd_orbits(const Config& c) {
  if (!c.n) throw UsageError("orbits needs --n");
  const Field f = require_field(c);
  const OrbitReport r = c.serial ? orbit_classes_serial(*c.n, f) : orbit_classes(*c.n, f);
  std::uint64_t total = 0;
  for (auto s : r.class_sizes) total += s;
  require_verified(total == orbit_universe_size(*c.n, f), "orbits");
  json out = io::orbit_report_to_json(r);
  out["kernel"] = c.serial ? "serial" : "openmp";
  return out;
}

json cmd_lang_section(const Config& c) {
  const io::AnyMatrix any = io::matrix_from_json(load(c.in), context_field(c));
  if (!std::holds_alternative<UnipotentMatrix<Fq>>(any)) throw UsageError("lang-section needs a matrix over F_q");
  const auto& m = std::get<UnipotentMatrix<Fq>>(any);
  const LangSection ls = lang_section(m);
  require_verified(lang_map(ls.b).entries() == embed(ls.embedding, m).entries(), "lang-section");
  return json{{"B", io::matrix_to_json(ls.b)},
              {"s", ls.s},
              {"field", io::field_to_json(ls.b.field())},
              {"embedding", {{"generator_image", io::fq_to_json(ls.embedding.image_of_generator())}}},
              {"verified", true}};
}

json cmd_elliptic_analyze(const Config& c) {
  if (c.scan) {
    if (!c.p) throw UsageError("elliptic-analyze --scan needs --p");
    const auto reports = scan_curves(*c.p);
    json curves = json::array();
    json discrepancies = json::array();
    for (const EllipticReport& r : reports) {
      curves.push_back(io::report_to_json(r));
      if (r.discrepancy) discrepancies.push_back(io::report_to_json(r));
    }
    return json{{"p", *c.p}, {"curves", curves}, {"discrepancies", discrepancies}};
  }
  std::optional<EllipticCurve> curve;
  if (c.curve_a || c.curve_b) {
    if (!c.p || !c.curve_a || !c.curve_b) throw UsageError("give all of --p, --A and --B, or a curve via --in");
    curve.emplace(*c.p, *c.curve_a, *c.curve_b);
  } else {
    curve = io::curve_from_json(load(c.in));
  }
  return io::report_to_json(elliptic_verdict(*curve));
}

void emit(const json& result, const Config& c, std::ostream& out) {
  if (c.out.empty()) {
    out << result.dump(2) << "\n";
    return;
  }
  std::ofstream f(c.out);
  if (!f) throw UsageError("cannot write output file " + c.out);
  f << result.dump(2) << "\n";
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Computations with p-group covers via unipotent matrices", "pcovers"};
  app.fallthrough();
  app.require_subcommand(1);
  Config c;
  app.add_option("--p", c.p, "characteristic");
  app.add_option("--ext-degree", c.ext_degree, "extension degree e of F_q over F_p")->check(CLI::Range(1, 64));
  app.add_option("--modulus", c.modulus, "modulus coefficients, low-to-high (\"1,1,1\" or JSON list)");
  app.add_option("--prec", c.prec, "working precision for exact inputs")->capture_default_str();
  app.add_option("--model", c.model, "\"p1\" or an elliptic curve {\"p\",\"A\",\"B\"} (inline or path)")
      ->capture_default_str();
  app.add_option("--in", c.in, "input JSON, inline or a path; stdin when absent");
  app.add_option("--out", c.out, "write the result to this path");
  app.add_option("--seed", c.seed, "seed for randomized entry points");
  app.add_option("--n", c.n, "matrix dimension");

  auto* wp = app.add_subcommand("wp-solve", "solve x^p - x = g in F_q((t))");
  auto* split = app.add_subcommand("split", "write f = wp(b) + global part");
  auto* reduce = app.add_subcommand("reduce", "conjugate a matrix over k((t)) into the global ring");
  auto* equiv = app.add_subcommand("equiv", "decide M = C^(p) M' C^-1");
  auto* orbits = app.add_subcommand("orbits", "classify U_n(F_q) up to p-conjugation");
  orbits->add_flag("--serial", c.serial, "use the single-threaded reference kernel");
  auto* lang = app.add_subcommand("lang-section", "find B with B^(p) B^-1 = M over an extension");
  auto* ell = app.add_subcommand("elliptic-analyze", "Frobenius on H^1 and the globalization verdict");
  ell->add_option("--A", c.curve_a, "coefficient A of y^2 = x^3 + Ax + B");
  ell->add_option("--B", c.curve_b, "coefficient B");
  ell->add_flag("--scan", c.scan, "analyze every nonsingular curve over F_p");

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return kUsageFailure;
  }

  int code = kOk;
  try {
    json result;
    if (*wp) result = cmd_wp_solve(c);
    else if (*split) result = cmd_split(c);
    else if (*reduce) result = cmd_reduce(c, err, code);
    else if (*equiv) result = cmd_equiv(c);
    else if (*orbits) result = cmd_orbits(c);
    else if (*lang) result = cmd_lang_section(c);
    else if (*ell) result = cmd_elliptic_analyze(c);
    emit(result, c, out);
    return code;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kParseFailure;
  } catch (const json::exception& e) {
    err << "parse error: " << e.what() << "\n";
    return kParseFailure;
  } catch (const RefusalError& e) {
    err << "refused: " << e.what() << "\n";
    return kRefused;
  } catch (const IntegrityError& e) {
    err << "integrity failure: " << e.what() << "\n";
    return kIntegrityFailure;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kUsageFailure;
  } catch (const DomainError& e) {
    err << "domain error: " << e.what() << "\n";
    return kUsageFailure;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kIntegrityFailure;
  }
}

}  // namespace pcov::cli
