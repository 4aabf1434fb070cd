#pragma once

#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "catalog.hpp"
#include "clifford.hpp"
#include "cohomology.hpp"
#include "current.hpp"
#include "json_io.hpp"
#include "unirad.hpp"

namespace suplie::cli {

enum ExitCode { ok = 0, math_failure = 1, usage = 2 };

struct Outcome {
  Json body;
  bool passed = true;
};

// ---------------------------------------------------------------- inputs

struct AlgebraInput {
  LieSuperalgebra algebra;
  std::optional<BilinearForm> form;
  std::optional<CatalogEntry> entry;
};

inline std::optional<std::string> catalog_label(const std::string& spec) {
  std::string s = spec.rfind("catalog:", 0) == 0 ? spec.substr(8) : spec;
  auto colon = s.find(':');
  if (colon == std::string::npos) return std::nullopt;
  try {
    parse_family(s.substr(0, colon));
  } catch (const ParseError&) {
    if (spec.rfind("catalog:", 0) == 0) throw;
    return std::nullopt;
  }
  return s;
}

// "catalog:su_pq:2,1", "su_pq:2,1" or a JSON algebra file (optionally with "form")
inline AlgebraInput load_algebra(const std::string& spec) {
  if (auto label = catalog_label(spec)) {
    CatalogEntry e = build_catalog(*label);
    return {e.algebra, e.form, e};
  }
  Json j = read_json_file(spec);
  LieSuperalgebra l = algebra_from_json(j);
  std::optional<BilinearForm> f;
  if (j.contains("form")) f = form_from_json(j["form"], l.dim(), "$.form");
  return {std::move(l), f, std::nullopt};
}

inline std::size_t grassmann_rank(const std::string& spec) {
  const std::string pre = "grassmann:";
  if (spec.rfind(pre, 0) != 0) throw ParseError("--A expects grassmann:s, got '" + spec + "'");
  try {
    std::size_t used = 0;
    int s = std::stoi(spec.substr(pre.size()), &used);
    if (used != spec.size() - pre.size() || s < 1 || s > 10) throw std::invalid_argument(spec);
    return static_cast<std::size_t>(s);
  } catch (const std::exception&) {
    throw ParseError("--A: bad Grassmann rank in '" + spec + "' (expected 1..10)");
  }
}

inline const BilinearForm& need_form(const AlgebraInput& in, const std::string& spec) {
  if (!in.form) throw ParseError("algebra '" + spec + "' carries no invariant form (add a \"form\" key)");
  return *in.form;
}

inline const CatalogEntry& need_entry(const AlgebraInput& in, const std::string& spec) {
  if (!in.entry) throw ParseError("'" + spec + "' must be a catalog algebra (catalog:family:params)");
  return *in.entry;
}

// ---------------------------------------------------------------- report builders

inline Json named_vector(const LieSuperalgebra& l, const Vec& v) {
  Json terms = Json::object();
  for (std::size_t k = 0; k < v.size(); ++k)
    if (sgn(v[k]) != 0) terms[l.names()[k]] = rational_string(v[k]);
  return terms;
}

inline Json facts_json(const std::vector<Fact>& fs) {
  Json a = Json::array();
  for (const auto& f : fs) a.push_back({{"name", f.name}, {"passed", f.passed}, {"detail", f.detail}});
  return a;
}

inline Outcome urad_report_json(const UradReport& r) {
  Json dims = Json::object();
  for (const auto& [k, v] : r.dims) dims[k] = v;
  return {{{"subject", r.subject}, {"passed", r.passed()}, {"checks", facts_json(r.checks)}, {"notices", r.notices}, {"dims", dims}},
          r.passed()};
}

inline Json certificate_json(const LieSuperalgebra& l, const PointednessCertificate& c) {
  return {{"lambda", named_vector(l, c.lambda)}, {"gram", matrix_json(c.gram)}, {"valid", c.valid}};
}

inline Outcome catalog_json(const CatalogEntry& e, bool with_facts) {
  Json j = algebra_json(e.algebra);
  j["form"] = form_json(e.algebra, e.form);
  j["label"] = e.label();
  j["dimension"] = {{"even", e.algebra.even_dim()}, {"odd", e.algebra.odd_dim()}, {"total", e.algebra.dim()}};
  Json sp = Json::object();
  for (const auto& [name, v] : e.specials) sp[name] = vec_json(v);
  j["specials"] = sp;
  if (e.outer_derivation) j["outer_derivation"] = matrix_json(*e.outer_derivation);
  bool passed = true;
  if (with_facts) {
    CatalogFacts f = verify_catalog_facts(e);
    j["facts"] = facts_json(f.facts);
    passed = f.all_passed();
  }
  return {j, passed};
}

inline Outcome cor1_json(std::size_t s, const std::string& kspec, bool eta, bool xi) {
  AlgebraInput in = load_algebra(kspec);
  Cor1Options o;
  o.include_eta = eta;
  o.include_xi = xi;
  Cor1Report r = verify_cor1(grassmann(s), in.algebra, need_form(in, kspec), o);
  Json j = {{"dim_z2", r.dim_z2},
            {"dim_z2_even", r.dim_z2_even},
            {"dim_z2_odd", r.dim_z2_odd},
            {"dim_b2", r.dim_b2},
            {"h2", r.h2},
            {"defect", r.defect},
            {"dim_g", r.dim_g},
            {"generators",
             {{"eta", r.eta_generators},
              {"xi", r.xi_generators},
              {"span", r.dim_span},
              {"h2_k", r.h2_k},
              {"cent_plus", r.cent_plus_dim},
              {"hochschild", r.hochschild_dim}}}};
  if (r.counterexample) j["counterexample"] = matrix_json(*r.counterexample);
  return {j, r.defect == 0};
}

inline std::vector<RatMatrix> hochschild_choice(const AssocSuperalgebra& A, const std::string& mode, std::uint64_t seed) {
  if (mode == "random") return {random_even_hochschild(A, seed)};
  if (mode == "zero") return {RatMatrix(A.dim(), A.dim())};
  if (mode == "delta") return {delta_hochschild(A)};
  throw ParseError("--hochschild for a purely even k must be random, zero or delta");
}

inline Outcome urad_verify_json(const std::string& kspec, std::size_t s, const std::string& mode, std::uint64_t seed) {
  AlgebraInput in = load_algebra(kspec);
  const CatalogEntry& e = need_entry(in, kspec);
  if (e.algebra.odd_dim() == 0) return urad_report_json(verify_urad_theorem(e, s, hochschild_choice(grassmann(s), mode, seed)));
  KernelOptions o;
  if (mode == "random") o.random_omega_seed = seed;
  else if (mode != "full") throw ParseError("--hochschild for k with odd part must be random or full");
  return urad_report_json(verify_kernel_theorem(e, s, o));
}

inline Outcome faithful_json(const std::string& kspec, std::size_t s) {
  AlgebraInput in = load_algebra(kspec);
  FaithfulReport r = faithfulness_boundary(need_entry(in, kspec), s);
  Json j = {{"s", r.s}, {"passed", r.passed}, {"hochschild_ok", r.hochschild_ok}, {"extensions_checked", r.extensions_checked}};
  if (r.certificate) {
    AssocSuperalgebra A = grassmann(s);
    NormalFormData nf;
    nf.hochschild = {delta_hochschild(A)};
    CurrentExtension ce = normal_form_extension(A, in.algebra, *in.form, nf);
    j["certificate"] = certificate_json(ce.algebra(), *r.certificate);
  }
  if (r.witness) j["witness"] = {{"name", r.witness_name}, {"vector", vec_json(*r.witness)}};
  return {j, r.passed};
}

inline Outcome pointed_json(const std::string& kspec, const CertificateSearch& opt) {
  AlgebraInput in = load_algebra(kspec);
  std::optional<NonPointedWitness> cand;
  if (in.entry) cand = catalog_witness(*in.entry);
  PointedReport r = pointed_report(in.algebra, cand, opt);
  Json j = {{"verdict", to_string(r.verdict)}, {"search_strategy", r.search.strategy}};
  j["search"] = r.search.certificate ? "certificate found" : "unknown";
  if (r.search.certificate) j["certificate"] = certificate_json(in.algebra, *r.search.certificate);
  if (r.witness) {
    Json w = Json::array();
    for (const auto& x : r.witness->xs) w.push_back(named_vector(in.algebra, x));
    j["witness"] = w;
  }
  return {j, true};
}

inline std::vector<Rational> parse_mu(const std::vector<std::string>& mu) {
  std::vector<Rational> d;
  for (std::size_t k = 0; k < mu.size(); ++k) {
    Scalar s = Scalar::parse(mu[k]);
    if (!s.is_rational() || sgn(s.rational_value()) <= 0) throw ParseError("--mu[" + std::to_string(k) + "]: expected a positive rational");
    d.push_back(s.rational_value());
  }
  return d;
}

inline Outcome gamma_json(const std::vector<Rational>& mu, bool graded) {
  GammaVariant v = graded ? GammaVariant::graded : GammaVariant::standard;
  CliffordRep r = gamma_rep(mu, v);
  GammaCheck c = verify_gamma_rep(r, v);
  Json g = Json::array();
  for (const auto& m : r.gammas) g.push_back(scalar_matrix_json(m));
  Json j = {{"n", mu.size()},
            {"space_dim", r.space_dim},
            {"gammas", g},
            {"checks",
             {{"anticommutation", c.anticommute},
              {"hermitian", c.hermitian},
              {"odd", c.odd},
              {"dimension", c.dimension},
              {"pairs_checked", c.pairs_checked}}},
            {"commutant_dim", commutant_dim(r)}};
  j["grading"] = r.grading ? Json(*r.grading) : Json(nullptr);
  bool passed = c.all() && commutant_dim(r) == 1;
  if (r.grading) {
    CliffordRep tw = parity_reversed(r);
    std::size_t ev = even_intertwiner_dim(r, tw), od = odd_intertwiner_dim(r, tw);
    j["parity_twin"] = {{"even_intertwiners", ev}, {"odd_intertwiners", od}};
    // even n: twin is a different even class; odd n: the twin is evenly equivalent
    passed = passed && od == 1 && ev == (mu.size() % 2 ? 1u : 0u);
  }
  return {j, passed};
}

inline Outcome rep_json(const LieSuperalgebra& l, const Vec& lambda, bool graded) {
  try {
    AdmissibleRep r = lambda_admissible_rep(l, lambda, graded ? GammaVariant::graded : GammaVariant::standard);
    AdmissibleCheck c = verify_admissible(l, lambda, r);
    Json chi = Json::object();
    for (std::size_t k = 0; k < l.dim(); ++k) chi[l.names()[k]] = scalar_matrix_json(r.chi[k]);
    Json j = {{"space_dim", r.space_dim},
              {"quotient_dim", r.mu.quotient_dim()},
              {"radical_dim", r.mu.radical.dim()},
              {"mu_gram", matrix_json(r.mu.gram)},
              {"chi", chi},
              {"checks",
               {{"homomorphism", c.homomorphism},
                {"unitary", c.unitary},
                {"psd_squares", c.psd_squares},
                {"radical_zero", c.radical_zero},
                {"odd_squares", c.odd_squares}}}};
    j["grading"] = r.gamma.grading ? Json(*r.gamma.grading) : Json(nullptr);
    return {j, c.all()};
  } catch (const NotAdmissible& e) {
    return {{{"error", e.what()}, {"witness", named_vector(l, e.witness)}}, false};
  }
}

// sweep: {"catalog": [...], "cor1": [{"A", "k", "eta", "xi"}], "urad": [{"k", "s", "hochschild"}],
//         "faithful": [{"k", "s"}], "pointed": [...], "clifford": [{"mu", "graded"}]}
inline Outcome report_all(const Json& p, std::uint64_t seed) {
  using namespace json_detail;
  Json out = Json::object();
  bool passed = true;
  auto list = [&](const char* key) -> Json {
    if (!p.contains(key)) return Json::array();
    if (!p[key].is_array()) schema_error(std::string("$.") + key, "expected an array");
    return p[key];
  };
  auto str = [&](const Json& j, const std::string& k, const std::string& path) {
    const Json& v = field(j, k, path);
    if (!v.is_string()) schema_error(path + "." + k, "expected a string");
    return v.get<std::string>();
  };
  auto num = [&](const Json& j, const std::string& k, const std::string& path) {
    const Json& v = field(j, k, path);
    if (!v.is_number_integer() || v.get<long>() < 1) schema_error(path + "." + k, "expected a positive integer");
    return static_cast<std::size_t>(v.get<long>());
  };
  auto record = [&](const char* key, const std::string& name, const Outcome& o) {
    out[key][name] = o.body;
    out[key][name]["ok"] = o.passed;
    passed = passed && o.passed;
  };
  Json cat = list("catalog");
  for (std::size_t k = 0; k < cat.size(); ++k) {
    if (!cat[k].is_string()) schema_error("$.catalog[" + std::to_string(k) + "]", "expected a label string");
    CatalogEntry e = build_catalog(*catalog_label(cat[k].get<std::string>()));
    CatalogFacts f = verify_catalog_facts(e);
    record("catalog", e.label(), {{{"facts", facts_json(f.facts)}, {"dim", e.algebra.dim()}}, f.all_passed()});
  }
  Json c1 = list("cor1");
  for (std::size_t k = 0; k < c1.size(); ++k) {
    std::string path = "$.cor1[" + std::to_string(k) + "]";
    std::string a = str(c1[k], "A", path), kk = str(c1[k], "k", path);
    bool eta = c1[k].value("eta", true), xi = c1[k].value("xi", true);
    Outcome o = cor1_json(grassmann_rank(a), kk, eta, xi);
    // a run with a generator family removed is a negative control: success means defect > 0
    if (!eta || !xi) o.passed = !o.passed;
    record("cor1", a + " (x) " + kk + (eta ? "" : " no-eta") + (xi ? "" : " no-xi"), o);
  }
  Json ur = list("urad");
  for (std::size_t k = 0; k < ur.size(); ++k) {
    std::string path = "$.urad[" + std::to_string(k) + "]";
    std::string kk = str(ur[k], "k", path), mode = ur[k].value("hochschild", std::string("random"));
    std::size_t s = num(ur[k], "s", path);
    record("urad", kk + " s=" + std::to_string(s) + " " + mode, urad_verify_json(kk, s, mode, seed));
  }
  Json fa = list("faithful");
  for (std::size_t k = 0; k < fa.size(); ++k) {
    std::string path = "$.faithful[" + std::to_string(k) + "]";
    std::string kk = str(fa[k], "k", path);
    std::size_t s = num(fa[k], "s", path);
    record("faithful", kk + " s=" + std::to_string(s), faithful_json(kk, s));
  }
  Json po = list("pointed");
  for (std::size_t k = 0; k < po.size(); ++k) {
    if (!po[k].is_string()) schema_error("$.pointed[" + std::to_string(k) + "]", "expected a label string");
    CertificateSearch cs;
    cs.seed = seed;
    record("pointed", po[k].get<std::string>(), pointed_json(po[k].get<std::string>(), cs));
  }
  Json cl = list("clifford");
  for (std::size_t k = 0; k < cl.size(); ++k) {
    std::string path = "$.clifford[" + std::to_string(k) + "]";
    const Json& mu = field(cl[k], "mu", path);
    if (!mu.is_array()) schema_error(path + ".mu", "expected an array of rationals");
    std::vector<std::string> ms;
    for (std::size_t t = 0; t < mu.size(); ++t) ms.push_back(mu[t].is_string() ? mu[t].get<std::string>() : mu[t].dump());
    bool graded = cl[k].value("graded", false);
    Outcome o = gamma_json(parse_mu(ms), graded);
    o.body.erase("gammas");
    record("clifford", "mu=" + std::to_string(ms.size()) + (graded ? " graded" : "") + " #" + std::to_string(k + 1), o);
  }
  out["passed"] = passed;
  return {out, passed};
}

// ---------------------------------------------------------------- entry point

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"suplie: exact computations with finite-dimensional real Lie superalgebras"};
  app.require_subcommand(1);
  app.fallthrough();  // --out and --seed may follow the subcommand
  std::string out_file;
  std::uint64_t seed = 0;
  app.add_option("--out", out_file, "write the JSON result to this file");
  app.add_option("--seed", seed, "seed for randomized steps");

  std::function<Outcome()> action;

  auto* validate = app.add_subcommand("validate", "validate an algebra JSON file");
  std::string alg_file;
  validate->add_option("file", alg_file)->required();
  validate->callback([&] {
    action = [&]() -> Outcome {
      Json j = read_json_file(alg_file);
      try {
        LieSuperalgebra l = algebra_from_json(j);
        StructureReport s = structure_report(l);
        return {{{"valid", true}, {"dim", l.dim()}, {"even_dim", l.even_dim()}, {"odd_dim", l.odd_dim()}, {"perfect", s.perfect}}, true};
      } catch (const LsaValidationError& e) {
        Json idx = Json::array();
        for (auto i : e.indices) idx.push_back(i + 1);
        return {{{"valid", false}, {"error", e.what()}, {"indices", idx}}, false};
      }
    };
  });

  auto* catalog = app.add_subcommand("catalog", "catalog algebras");
  catalog->require_subcommand(1);
  auto* build = catalog->add_subcommand("build", "build a catalog algebra");
  std::string family;
  std::vector<int> fam_p;
  int p = 0, q = 0, n = 0;
  bool facts = false;
  build->add_option("family", family, "su_n, su_pq, psu_pp, c_n, q_n, pq_n (or family:params)")->required();
  build->add_option("--p", p);
  build->add_option("--q", q);
  build->add_option("--n", n);
  build->add_flag("--facts", facts, "also run the fact checks");
  build->callback([&] {
    action = [&]() -> Outcome {
      if (family.find(':') != std::string::npos) return catalog_json(build_catalog(family), facts);
      Family f = parse_family(family);
      std::vector<int> ps;
      auto need = [&](int v, const char* flag) {
        if (v <= 0) throw ParseError(std::string(family_name(f)) + " needs " + flag);
        ps.push_back(v);
      };
      if (f == Family::su_pq) {
        need(p, "--p");
        need(q, "--q");
      } else if (f == Family::psu_pp) {
        need(p, "--p");
      } else {
        need(n, "--n");
      }
      return catalog_json(build_catalog(f, ps), facts);
    };
  });

  auto* current = app.add_subcommand("current", "build A (x) k");
  std::string a_spec, k_spec;
  current->add_option("--A", a_spec)->required();
  current->add_option("--k", k_spec)->required();
  current->callback([&] {
    action = [&]() -> Outcome {
      AlgebraInput in = load_algebra(k_spec);
      CurrentAlgebra g = current_lsa(grassmann(grassmann_rank(a_spec)), in.algebra);
      Json j = algebra_json(g.algebra);
      j["dimension"] = {{"even", g.algebra.even_dim()}, {"odd", g.algebra.odd_dim()}, {"total", g.dim()}};
      return {j, true};
    };
  });

  auto* coh = app.add_subcommand("cohomology", "second cohomology");
  coh->require_subcommand(1);
  std::size_t cap = kDenseZ2Cap;
  bool no_eta = false, no_xi = false;
  for (const char* which : {"z2", "h2"}) {
    auto* sc = coh->add_subcommand(which, std::string(which) + " of an algebra");
    sc->add_option("--k", k_spec)->required();
    sc->add_option("--cap", cap, "dimension cap of the solver");
    sc->callback([&] {
      action = [&]() -> Outcome {
        AlgebraInput in = load_algebra(k_spec);
        Z2Data d = z2_b2(in.algebra, cap);
        return {{{"dim_z2", d.z2.dim()}, {"dim_z2_even", d.z2_even}, {"dim_z2_odd", d.z2_odd}, {"dim_b2", d.b2.dim()}, {"h2", d.h2()}}, true};
      };
    });
  }
  auto* cor1 = coh->add_subcommand("verify-cor1", "cocycle normal form of A (x) k");
  cor1->add_option("--A", a_spec)->required();
  cor1->add_option("--k", k_spec)->required();
  cor1->add_flag("--no-eta", no_eta, "drop the eta generators (negative control)");
  cor1->add_flag("--no-xi", no_xi, "drop the xi generators");
  cor1->callback([&] { action = [&] { return cor1_json(grassmann_rank(a_spec), k_spec, !no_eta, !no_xi); }; });

  auto* urad = app.add_subcommand("urad", "unitary radical");
  urad->require_subcommand(1);
  std::size_t s_rank = 1;
  std::string mode = "random";
  auto* uv = urad->add_subcommand("verify", "unitary radical of A (x) k (even k) or the kernel theorem (k with odd part)");
  uv->add_option("--k", k_spec)->required();
  uv->add_option("--s", s_rank)->required()->check(CLI::Range(1, 10));
  uv->add_option("--hochschild", mode, "random | zero | delta (even k); random | full (otherwise)");
  uv->callback([&] { action = [&] { return urad_verify_json(k_spec, s_rank, mode, seed); }; });
  auto* uf = urad->add_subcommand("faithful", "faithfulness boundary s <= 2");
  uf->add_option("--k", k_spec)->required();
  uf->add_option("--s", s_rank)->required()->check(CLI::Range(1, 10));
  uf->callback([&] { action = [&] { return faithful_json(k_spec, s_rank); }; });
  auto* up = urad->add_subcommand("pointed", "pointedness certificate or witness");
  CertificateSearch cs;
  up->add_option("--k", k_spec)->required();
  up->add_option("--height", cs.height)->check(CLI::Range(1, 1000));
  up->add_option("--tries", cs.random_tries)->check(CLI::Range(0, 100000));
  up->callback([&] {
    action = [&] {
      cs.seed = seed;
      return pointed_json(k_spec, cs);
    };
  });

  auto* cliff = app.add_subcommand("clifford", "Clifford algebras and admissible representations");
  cliff->require_subcommand(1);
  std::vector<std::string> mu;
  bool graded = false;
  auto* cg = cliff->add_subcommand("gamma", "gamma matrices for mu = diag(d)");
  cg->add_option("--mu", mu, "positive rationals d_1,...,d_n")->required()->delimiter(',');
  cg->add_flag("--graded", graded, "odd gammas in every dimension");
  cg->callback([&] { action = [&] { return gamma_json(parse_mu(mu), graded); }; });
  auto* cr = cliff->add_subcommand("rep", "lambda-admissible representation of a Clifford-Lie superalgebra");
  std::string lam_text;
  std::vector<std::size_t> seeded;
  cr->add_option("--algebra", alg_file, "Clifford-Lie algebra JSON");
  cr->add_option("--lambda", lam_text, "comma separated coordinates of lambda");
  cr->add_option("--seeded", seeded, "k0,k1,rank of a seeded Clifford-Lie algebra")->delimiter(',')->expected(3);
  cr->add_flag("--graded", graded, "graded gamma matrices");
  cr->callback([&] {
    action = [&]() -> Outcome {
      if (!seeded.empty()) {
        if (seeded[0] < 1 || seeded[1] < 1 || seeded[2] < 1) throw ParseError("--seeded entries must be positive");
        SeededCliffordLie s = seeded_clifford_lie(seeded[0], seeded[1], seeded[2], seed);
        return rep_json(s.algebra, s.lambda, graded);
      }
      if (alg_file.empty() || lam_text.empty()) throw ParseError("clifford rep needs --seeded or both --algebra and --lambda");
      LieSuperalgebra l = algebra_from_json(read_json_file(alg_file));
      Json lj = Json::array();
      std::stringstream ss(lam_text);
      for (std::string tok; std::getline(ss, tok, ',');) lj.push_back(tok);
      return rep_json(l, json_detail::vec(lj, "--lambda", l.dim()), graded);
    };
  });

  auto* report = app.add_subcommand("report", "batch reports");
  report->require_subcommand(1);
  auto* all = report->add_subcommand("all", "run a parameter sweep");
  std::string params;
  all->add_option("--params", params)->required();
  all->callback([&] { action = [&] { return report_all(read_json_file(params), seed); }; });

  std::vector<std::string> argv_store{"suplie"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& a : argv_store) argv.push_back(a.data());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? ok : usage;
  }
  try {
    Outcome o = action();
    std::string text = dump(o.body);
    if (out_file.empty()) {
      out << text;
    } else {
      std::ofstream f(out_file);
      if (!f) throw ParseError("cannot write " + out_file);
      f << text;
    }
    return o.passed ? ok : math_failure;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return usage;
  } catch (const MathError& e) {
    out << dump({{"error", e.what()}});
    return math_failure;
  }
}

inline int run(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return run(args, std::cout, std::cerr);
}

}  // namespace suplie::cli
