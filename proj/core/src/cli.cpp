#include "qj/cli.hpp"

#include <fstream>
#include <iostream>
#include <limits>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "qj/algrec.hpp"
#include "qj/curve.hpp"
#include "qj/jinv.hpp"
#include "qj/lattice.hpp"
#include "qj/zeta.hpp"

namespace qj {

const char* const kVersion = "quantumj 0.1.0";

namespace {

using nlohmann::json;

struct RunConfig {
  std::uint32_t p = 3;
  std::uint32_t m = 1;
  std::string modulus;   // coefficient CSV, ascending, length m+1
  std::string a = "0,1"; // coefficient CSV of the monic a(T)
  std::string b = "1";
  long long prec = 20;
  long long nmax = -1;
  int degbound = 8;
  std::string format; // resolved per subcommand when empty
  std::string out;
  std::uint64_t seed = 0;
  // subcommand extras
  long long e = -1; // epsilon exponent e = N d + l
  int n = 1;        // zeta exponent selector: value at q^n - 1
  int i = -1;       // ideal family index
  std::string x;    // polynomial subject for the element route
  int dmax = -1;    // relation degree bound (defaults to degbound)
  int bmax = -1;    // relation coefficient-degree bound (ditto)
  long long emin = -1, emax = -1; // portrait range
  std::string subcommand;
};

void add_common(CLI::App* s, RunConfig& c) {
  s->add_option("--p", c.p, "field characteristic");
  s->add_option("--m", c.m, "extension degree, q = p^m");
  s->add_option("--modulus", c.modulus,
                "modulus coefficient CSV (ascending, length m+1); empty = "
                "first primitive polynomial");
  s->add_option("--a", c.a, "coefficient CSV of the monic a(T)");
  s->add_option("--b", c.b, "the scalar b (field element digits)");
  s->add_option("--prec", c.prec, "requested coefficients past the lead");
  s->add_option("--nmax", c.nmax, "pin the epsilon-route level N");
  s->add_option("--degbound", c.degbound, "polynomial degree bound");
  s->add_option("--format", c.format, "json or csv");
  s->add_option("--out", c.out, "artifact path (empty = stdout)");
  s->add_option("--seed", c.seed, "seed echoed into the artifact");
}

std::vector<std::uint32_t> parse_uint_csv(const std::string& s) {
  std::vector<std::uint32_t> v;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ','))
    v.push_back(static_cast<std::uint32_t>(std::stoul(tok)));
  return v;
}

FieldPtr make_field(const RunConfig& c) {
  if (c.modulus.empty()) return Field::make(c.p, c.m);
  return Field::make(c.p, c.m, parse_uint_csv(c.modulus));
}

// expansion depth covering the adaptive zeta machinery with slack
long long unit_depth(const FieldPtr& F, long long prec) {
  long long q = F->q();
  return zeta_prec_cap(F) + 4 * std::max(prec, 20LL) + 12 * q + 80;
}

std::string poly_csv(const Poly& a) {
  if (a.is_zero()) return "0";
  std::ostringstream os;
  const FieldPtr& F = a.field();
  for (std::size_t i = 0; i < a.coeffs().size(); ++i) {
    if (i) os << ',';
    os << F->to_string(a.coeffs()[i]);
  }
  return os.str();
}

json config_json(const RunConfig& c) {
  json j;
  j["subcommand"] = c.subcommand;
  j["p"] = c.p;
  j["m"] = c.m;
  j["modulus"] = c.modulus;
  j["a"] = c.a;
  j["b"] = c.b;
  j["prec"] = c.prec;
  j["nmax"] = c.nmax;
  j["degbound"] = c.degbound;
  j["format"] = c.format;
  j["out"] = c.out;
  j["seed"] = c.seed;
  j["e"] = c.e;
  j["n"] = c.n;
  j["i"] = c.i;
  j["x"] = c.x;
  j["dmax"] = c.dmax;
  j["bmax"] = c.bmax;
  j["emin"] = c.emin;
  j["emax"] = c.emax;
  return j;
}

void emit(const RunConfig& c, const std::string& text) {
  if (c.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream os(c.out, std::ios::binary);
  if (!os) throw domain_error("cli: cannot open output path " + c.out);
  os << text;
}

void emit_json(const RunConfig& c, json payload) {
  payload["config"] = config_json(c);
  payload["version"] = kVersion;
  emit(c, payload.dump(2) + "\n");
}

// csv artifacts carry the same config/version as comment lines
std::string csv_header(const RunConfig& c) {
  std::ostringstream os;
  os << "# version: " << kVersion << "\n# config:";
  json cfg = config_json(c);
  for (auto it = cfg.begin(); it != cfg.end(); ++it)
    os << ' ' << it.key() << '=' << (it->is_string() ? it->get<std::string>()
                                                     : it->dump());
  os << "\n";
  return os.str();
}

void resolve_format(RunConfig& c, const std::string& def,
                    const std::vector<std::string>& allowed) {
  if (c.format.empty()) c.format = def;
  for (const std::string& a : allowed)
    if (c.format == a) return;
  throw domain_error("cli: --format " + c.format +
                     " not supported by this subcommand");
}

json jvalue_json(const JValue& v) {
  json j;
  j["laurent"] = v.value.to_canonical();
  j["infinity"] = v.infinity;
  j["tail_exp"] = v.value.unknown_exp();
  return j;
}

// ---- subcommands ------------------------------------------------------

int cmd_unit(RunConfig& c) {
  resolve_format(c, "json", {"json"});
  FieldPtr F = make_field(c);
  QuadUnit u(F, Poly::parse(F, c.a), F->parse(c.b), c.prec);
  json payload;
  json& ju = payload["unit"];
  ju["p"] = F->p();
  ju["m"] = F->m();
  ju["modulus"] = F->modulus();
  ju["a_coeffs"] = poly_csv(u.a());
  ju["b"] = F->to_string(u.b());
  ju["prec"] = u.prec();
  ju["d"] = u.d();
  ju["disc"] = poly_csv(u.disc());
  ju["f"] = u.f().to_canonical();
  ju["fstar"] = u.fstar().to_canonical();
  ju["sqrtD"] = u.sqrtD().to_canonical();
  emit_json(c, payload);
  return 0;
}

int cmd_lattice(RunConfig& c) {
  resolve_format(c, "csv", {"csv", "json"});
  FieldPtr F = make_field(c);
  Poly pa = Poly::parse(F, c.a);
  long long e = c.e < 0 ? pa.deg() : c.e;
  QuadUnit u(F, pa, F->parse(c.b),
             e + c.degbound + 4 * std::max(pa.deg(), 1) + 20);
  std::vector<Poly> st = lam_structural(u, e, c.degbound);
  std::vector<Poly> bf = lam_bruteforce(u, e, c.degbound);
  bool match = st == bf;
  if (c.format == "csv") {
    std::ostringstream os;
    os << csv_header(c) << "kind,degree,value\n";
    for (const Poly& g : st)
      os << "structural," << g.deg() << ",\"" << poly_csv(g) << "\"\n";
    for (const Poly& g : bf)
      os << "bruteforce," << g.deg() << ",\"" << poly_csv(g) << "\"\n";
    os << "match,," << (match ? "true" : "false") << "\n";
    emit(c, os.str());
  } else {
    json payload;
    payload["e"] = e;
    payload["match"] = match;
    json& js = payload["structural"];
    js = json::array();
    for (const Poly& g : st)
      js.push_back({{"degree", g.deg()}, {"value", poly_csv(g)}});
    json& jb = payload["bruteforce"];
    jb = json::array();
    for (const Poly& g : bf)
      jb.push_back({{"degree", g.deg()}, {"value", poly_csv(g)}});
    emit_json(c, payload);
  }
  if (!match) {
    std::cerr << "lattice: structural and brute-force bases differ\n";
    return 2;
  }
  return 0;
}

int cmd_zeta(RunConfig& c) {
  resolve_format(c, "json", {"json"});
  if (c.n != 1 && c.n != 2)
    throw domain_error("cli: zeta exponent selector --n must be 1 or 2");
  FieldPtr F = make_field(c);
  QuadUnit u(F, Poly::parse(F, c.a), F->parse(c.b),
             unit_depth(F, c.prec) + std::max(c.e, 0LL));
  long long expo = 1;
  for (int k = 0; k < c.n; ++k) expo *= F->q();
  expo -= 1;
  json values = json::array();
  auto push = [&](const std::string& source, const Laurent& z) {
    values.push_back({{"source", source},
                      {"exponent", expo},
                      {"laurent", z.to_canonical()},
                      {"tail_exp", z.unknown_exp()}});
  };
  if (c.e >= 0) {
    push("eps:e=" + std::to_string(c.e), zeta_eps(u, c.e, c.n, c.prec));
  } else {
    Order O(u);
    int lo = c.i < 0 ? 0 : c.i;
    int hi = c.i < 0 ? u.d() - 1 : c.i;
    for (int i = lo; i <= hi; ++i)
      push("ideal:a_" + std::to_string(i),
           zeta_ideal(O, IdealHNF::family(O, i), c.n, c.prec));
  }
  json payload;
  payload["values"] = values;
  emit_json(c, payload);
  return 0;
}

int cmd_jeps(RunConfig& c) {
  resolve_format(c, "json", {"json"});
  FieldPtr F = make_field(c);
  json payload;
  if (!c.x.empty()) {
    long long e = c.e < 0 ? 6 : c.e;
    Laurent xv = Laurent::from_poly(Poly::parse(F, c.x));
    payload["source"] = "element:" + c.x;
    payload["e"] = e;
    payload["j"] = jvalue_json(j_element(xv, e, c.degbound, c.prec));
  } else {
    QuadUnit u(F, Poly::parse(F, c.a), F->parse(c.b),
               unit_depth(F, c.prec) + std::max(c.e, 0LL));
    long long e = c.e < 0 ? u.d() : c.e;
    int N = static_cast<int>(e / u.d());
    int l = static_cast<int>(e % u.d());
    payload["source"] = "unit";
    payload["e"] = e;
    payload["N"] = N;
    payload["l"] = l;
    payload["j"] = jvalue_json(j_eps(u, N, l, c.prec));
  }
  emit_json(c, payload);
  return 0;
}

int cmd_jqt(RunConfig& c) {
  resolve_format(c, "json", {"json"});
  FieldPtr F = make_field(c);
  QuadUnit u(F, Poly::parse(F, c.a), F->parse(c.b), unit_depth(F, c.prec));
  JqtReport rep = jqt(u, c.prec, static_cast<int>(c.nmax));
  json values = json::array();
  for (const JqtValue& v : rep.values) {
    json agreed;
    if (v.agreed_exp == std::numeric_limits<long long>::max())
      agreed = nullptr;
    else
      agreed = v.agreed_exp;
    for (const char* route : {"ideal", "eps"}) {
      const JValue& jv = std::string(route) == "ideal" ? v.ideal : v.eps;
      json entry = jvalue_json(jv);
      entry["i"] = v.i;
      entry["l"] = u.d() - 1 - v.i;
      entry["route"] = route;
      entry["agreed_exp"] = agreed;
      values.push_back(std::move(entry));
    }
  }
  json payload;
  payload["prec"] = c.prec;
  payload["values"] = values;
  payload["agreement"] = {{"max_disagreement_exp", rep.max_disagreement_exp},
                          {"n_used", rep.n_used}};
  try {
    payload["norm"] = norm_jqt(u, c.prec).to_canonical();
  } catch (const precision_error& err) {
    payload["norm"] = nullptr;
    payload["norm_error"] = err.what();
  }
  emit_json(c, payload);
  return 0;
}

int cmd_norm(RunConfig& c) {
  resolve_format(c, "json", {"json"});
  FieldPtr F = make_field(c);
  QuadUnit u(F, Poly::parse(F, c.a), F->parse(c.b), unit_depth(F, c.prec));
  json payload;
  payload["norm"] = norm_jqt(u, c.prec).to_canonical();
  emit_json(c, payload);
  return 0;
}

int cmd_classnum(RunConfig& c) {
  resolve_format(c, "json", {"json"});
  FieldPtr F = make_field(c);
  QuadUnit u(F, Poly::parse(F, c.a), F->parse(c.b),
             std::max(c.prec, 4LL * 8 + 20));
  ClassNumbers cn = class_numbers(u);
  json payload;
  json& jc = payload["curve"];
  jc["char2"] = cn.curve.char2;
  jc["degenerate"] = cn.curve.degenerate;
  jc["genus"] = cn.curve.genus;
  jc["model"] = poly_csv(cn.curve.model);
  payload["point_counts"] = cn.N;
  payload["L"] = cn.L;
  payload["h_K"] = cn.h_K;
  if (cn.h_O)
    payload["h_O"] = *cn.h_O;
  else
    payload["h_O"] = nullptr;
  emit_json(c, payload);
  return 0;
}

int cmd_minpoly(RunConfig& c) {
  resolve_format(c, "json", {"json"});
  FieldPtr F = make_field(c);
  int dmax = c.dmax < 0 ? c.degbound : c.dmax;
  int bmax = c.bmax < 0 ? c.degbound : c.bmax;
  QuadUnit u(F, Poly::parse(F, c.a), F->parse(c.b),
             unit_depth(F, 2 * c.prec));
  Order O(u);
  json relations = json::array();
  bool verify_failed = false;

  auto hunt = [&](const std::string& subject, const Laurent& v1,
                  const Laurent& v2) {
    json entry;
    entry["subject"] = subject;
    auto rel = minpoly_search(v1, dmax, bmax);
    entry["found"] = rel.has_value();
    if (rel) {
      json cs = json::array();
      for (const Poly& p : rel->coeffs) cs.push_back(poly_csv(p));
      entry["coeffs"] = cs;
      entry["degree"] = static_cast<int>(rel->coeffs.size()) - 1;
      entry["deg_bound"] = rel->deg_bound;
      entry["residual_exp"] = rel->residual_exp;
      entry["found_prec"] = c.prec;
      bool ok = verify_relation(*rel, v2);
      entry["verified"] = ok;
      entry["verified_prec"] = 2 * c.prec;
      if (!ok) verify_failed = true;
    }
    relations.push_back(std::move(entry));
  };

  for (int i = 0; i < u.d(); ++i) {
    IdealHNF a = IdealHNF::family(O, i);
    JValue v1 = j_ideal(O, a, c.prec);
    JValue v2 = j_ideal(O, a, 2 * c.prec);
    std::string subject = "j(a_" + std::to_string(i) + ")";
    if (v1.infinity || v2.infinity) {
      relations.push_back({{"subject", subject}, {"infinity", true}});
      continue;
    }
    hunt(subject, v1.value, v2.value);
  }
  try {
    Laurent n1 = norm_jqt(u, c.prec);
    Laurent n2 = norm_jqt(u, 2 * c.prec);
    hunt("norm", n1, n2);
  } catch (const precision_error& err) {
    relations.push_back({{"subject", "norm"}, {"error", err.what()}});
  }
  json payload;
  payload["relations"] = relations;
  emit_json(c, payload);
  if (verify_failed) {
    std::cerr << "minpoly: a relation failed re-verification\n";
    return 2;
  }
  return 0;
}

int cmd_portrait(RunConfig& c) {
  resolve_format(c, "csv", {"csv"});
  if (c.prec < 8)
    throw domain_error("cli: portrait needs --prec >= 8 for its 8 columns");
  FieldPtr F = make_field(c);
  QuadUnit u(F, Poly::parse(F, c.a), F->parse(c.b),
             unit_depth(F, c.prec) + std::max(c.emax, 0LL));
  long long d = u.d();
  long long emin = c.emin < 0 ? d : c.emin;
  long long emax = c.emax < 0 ? 8 * d : c.emax;
  if (emin < d || emax < emin)
    throw domain_error("cli: portrait range needs d <= emin <= emax");
  std::ostringstream os;
  os << csv_header(c) << "e,N,l,lead_exp,c0,c1,c2,c3,c4,c5,c6,c7\n";
  for (long long e = emin; e <= emax; ++e) {
    int N = static_cast<int>(e / d);
    int l = static_cast<int>(e % d);
    JValue v = j_eps(u, N, l, c.prec);
    os << e << ',' << N << ',' << l << ',';
    if (v.infinity) {
      os << "inf,,,,,,,,";
    } else {
      long long lead = v.value.lead_exp();
      os << lead;
      for (int k = 0; k < 8; ++k)
        os << ',' << (v.value.coeff_known(lead - k)
                          ? F->to_string(v.value.coeff_at(lead - k))
                          : "");
    }
    os << "\n";
  }
  emit(c, os.str());
  return 0;
}

} // namespace

int run_cli(int argc, const char* const* argv) {
  RunConfig cfg;
  CLI::App app{"quantum modular invariant toolkit for quadratic units over "
               "F_q(T)"};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);

  struct Sub {
    const char* name;
    const char* help;
    int (*fn)(RunConfig&);
  };
  const Sub subs[] = {
      {"unit", "expansion and discriminant data of the unit", cmd_unit},
      {"lattice", "structural vs brute-force approximation lattice",
       cmd_lattice},
      {"zeta", "normalized zeta values at q^n - 1 (n = 1 or 2)", cmd_zeta},
      {"jeps", "invariant of one approximation lattice (or --x element)",
       cmd_jeps},
      {"jqt", "full invariant: both routes, agreement, norm", cmd_jqt},
      {"norm", "norm of the invariant over the ideal family", cmd_norm},
      {"classnum", "point counts and class numbers of the function field",
       cmd_classnum},
      {"minpoly", "algebraic relations for the invariant values",
       cmd_minpoly},
      {"portrait", "CSV of j across epsilon exponents, for plotting",
       cmd_portrait},
  };
  int (*chosen)(RunConfig&) = nullptr;
  for (const Sub& s : subs) {
    CLI::App* sc = app.add_subcommand(s.name, s.help);
    add_common(sc, cfg);
    if (std::string(s.name) == "lattice" || std::string(s.name) == "zeta" ||
        std::string(s.name) == "jeps")
      sc->add_option("--e", cfg.e, "epsilon exponent e = N d + l");
    if (std::string(s.name) == "zeta") {
      sc->add_option("--n", cfg.n, "exponent selector: value at q^n - 1");
      sc->add_option("--i", cfg.i, "ideal family index (default: all)");
    }
    if (std::string(s.name) == "jeps")
      sc->add_option("--x", cfg.x,
                     "coefficient CSV of a polynomial subject (element "
                     "route; detects rationality)");
    if (std::string(s.name) == "minpoly") {
      sc->add_option("--dmax", cfg.dmax, "relation degree bound");
      sc->add_option("--bmax", cfg.bmax, "coefficient degree bound");
    }
    if (std::string(s.name) == "portrait") {
      sc->add_option("--emin", cfg.emin, "first epsilon exponent");
      sc->add_option("--emax", cfg.emax, "last epsilon exponent");
    }
    sc->callback([&chosen, fn = s.fn, name = s.name, &cfg]() {
      chosen = fn;
      cfg.subcommand = name;
    });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& err) {
    // prints help text or the usage diagnostic; any failure maps to 1
    return app.exit(err) == 0 ? 0 : 1;
  }
  try {
    if (!chosen) return 1;
    return chosen(cfg);
  } catch (const consistency_error& err) {
    std::cerr << "consistency failure: " << err.what() << "\n";
    return 2;
  } catch (const error& err) {
    std::cerr << "error: " << err.what() << "\n";
    return 1;
  } catch (const std::exception& err) {
    std::cerr << "error: " << err.what() << "\n";
    return 1;
  }
}

int run_cli(const std::vector<std::string>& args) {
  std::vector<const char*> argv{"qj"};
  for (const std::string& a : args) argv.push_back(a.c_str());
  return run_cli(static_cast<int>(argv.size()), argv.data());
}

} // namespace qj
