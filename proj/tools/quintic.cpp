// Command-line front end: every subcommand prints one canonical JSON report.
// Exit codes: 0 affirmative/complete, 1 negative verdict, 2 usage or input error, 3 internal failure.

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "quintic/minimize.hpp"
#include "quintic/polytopes.hpp"
#include "quintic/singularity.hpp"
#include "quintic/strata.hpp"

using json = nlohmann::json;  // std::map-backed, so keys come out sorted
using namespace quintic;

namespace {

constexpr const char* kToolVersion = "0.1.0";

struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Parsed command line shared by all subcommands.
struct Options {
  uint64_t seed = 0;
  std::string report = "summary";
  std::string out;
  std::optional<uint32_t> prime;
  std::string field = "gf";

  // bundle pair
  std::optional<int> g;
  std::string e, f;
  // sections
  std::string section_path;
  long bound = kDefaultSampleBound;
  std::string plant, at;
  bool conjugate = false;
  // per-command
  int m_max = 2;
  int g_max = 8;
  bool no_fin = false;
  std::string from;
  std::optional<int> density_g;
};

struct Outcome {
  int code = 0;
  std::string verdict;
  json result = json::object();  // headline numbers, always printed
  json detail = json::object();  // bulky data, only with --report full
};

// ---- parsing ----

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(item);
  return out;
}

template <size_t N>
std::array<int, N> int_list(const std::string& s, const char* name) {
  auto items = split_list(s);
  if (items.size() != N) throw UsageError(std::string(name) + " needs " + std::to_string(N) + " comma-separated integers");
  std::array<int, N> out{};
  for (size_t i = 0; i < N; ++i) {
    mpq_class q = parse_rational(items[i]);
    if (q.get_den() != 1 || !q.get_num().fits_sint_p()) throw UsageError(std::string(name) + " entries must be integers");
    out[i] = static_cast<int>(q.get_num().get_si());
  }
  return out;
}

BundlePair pair_from(const Options& o) {
  if (!o.g || o.e.empty() || o.f.empty()) throw UsageError("a bundle pair needs --g, --e and --f");
  BundlePair bp{*o.g, int_list<4>(o.e, "--e"), int_list<5>(o.f, "--f")};
  require_valid(bp);
  return bp;
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw UsageError("malformed JSON in " + path + ": " + e.what());
  }
}

// ---- serialization ----

json pair_json(const BundlePair& bp) { return {{"g", bp.g}, {"e", bp.e}, {"f", bp.f}}; }

BundlePair pair_from_json(const json& j) {
  BundlePair bp{j.at("g").get<int>(), j.at("e").get<std::array<int, 4>>(), j.at("f").get<std::array<int, 5>>()};
  require_valid(bp);
  return bp;
}

json triple_json(const Triple& t) { return json::array({t.i, t.j, t.k}); }

Triple triple_from_json(const json& j) { return {j.at(0).get<int>(), j.at(1).get<int>(), j.at(2).get<int>()}; }

json field_json(const QField&) { return {{"kind", "Q"}}; }
json field_json(const GfField& K) { return {{"kind", "GF"}, {"p", K.ctx->p}, {"m", K.ctx->m}}; }

template <class F>
json form_json(const BinaryForm<F>& b) {
  json a = json::array();
  if (b.is_zero()) return a;
  for (const auto& c : b.coeffs()) a.push_back(to_string(c));
  return a;
}

template <class F>
json point_json(const P1Point<F>& p) {
  return {{"s", to_string(p.s)}, {"t", to_string(p.t)}};
}

template <class V>
json vec4_json(const V& x) {
  json a = json::array();
  for (const auto& c : x) a.push_back(to_string(c));
  return a;
}

template <class F>
json section_json(const Section<F>& sec) {
  json entries = json::array();
  for (const Triple& t : all_triples()) {
    const auto& v = sec.a(t.k, t.i, t.j);
    if (!v.is_zero()) entries.push_back({{"kij", json::array({t.k, t.i, t.j})}, {"coeffs", form_json(v)}});
  }
  return {{"pair", pair_json(sec.base)}, {"field", field_json(sec.field)}, {"entries", entries}};
}

template <class F>
json form_matrix_json(const FormMatrix<F>& m) {
  json rows = json::array();
  for (const auto& row : m) {
    json r = json::array();
    for (const auto& v : row) r.push_back(form_json(v));
    rows.push_back(r);
  }
  return rows;
}

typename QField::Elem parse_elem(const QField&, const std::string& s) { return parse_rational(s); }

typename GfField::Elem parse_elem(const GfField& K, const std::string& s) {
  mpq_class q = parse_rational(s);
  if (q.get_den() != 1 || !q.get_num().fits_slong_p()) throw UsageError("finite-field entries must be integers: " + s);
  return K.from_int(q.get_num().get_si());
}

template <class F>
Section<F> section_from_json(const json& doc, const F& K) {
  // accept a bare section or a full `sample` report
  const json& j = doc.contains("detail") ? doc.at("detail").at("section") : doc;
  if (j.contains("field") && j["field"] != field_json(K)) throw UsageError("section was written over a different field");
  BundlePair bp = pair_from_json(j.at("pair"));
  Section<F> sec(bp, K);
  for (const auto& ent : j.at("entries")) {
    auto kij = ent.at("kij");
    int k = kij.at(0), i = kij.at(1), jj = kij.at(2);
    std::vector<typename F::Elem> c;
    for (const auto& v : ent.at("coeffs")) c.push_back(parse_elem(K, v.get<std::string>()));
    sec.set(k, i, jj, BinaryForm<F>(K, std::move(c)));
  }
  return sec;
}

template <class F>
P1Point<F> parse_point(const F& K, const std::string& s) {
  if (s.empty()) throw UsageError("--at is required");
  if (s == "inf") return P1Point<F>::infinity(K);
  return P1Point<F>::affine(K, parse_elem(K, s));
}

NormalForm parse_form(const std::string& s) {
  auto items = split_list(s);
  if (items.size() == 1) return NormalForm::type_k(int_list<1>(s, "--plant")[0]);
  if (items.size() == 3) {
    auto t = int_list<3>(s, "--plant");
    return NormalForm::type_ijk(t[0], t[1], t[2]);
  }
  throw UsageError("--plant takes K or I,J,K");
}

json form_descr(const NormalForm& nf) {
  if (nf.kind == NormalFormKind::TypeK) return {{"type", "K"}, {"K", nf.K}};
  return {{"type", "IJK"}, {"triple", json::array({nf.I, nf.J, nf.K})}};
}

std::string rat(const Rat& q) { return to_string(q); }

json rat_vec(const RationalPoint& x) {
  json a = json::array();
  for (const auto& v : x) a.push_back(rat(v));
  return a;
}

// ---- field dispatch ----

GfField prime_field(const Options& o) { return GfField(o.prime ? *o.prime : default_prime()); }

// Section from --section, or sampled from --g/--e/--f with --seed; optionally planted and conjugated.
template <class F>
Section<F> build_section(const Options& o, const F& K) {
  Section<F> sec = o.section_path.empty() ? sample_section(pair_from(o), K, o.seed, o.bound)
                                          : section_from_json(read_json_file(o.section_path), K);
  if (!o.plant.empty()) sec = plant_normal_form(sec, parse_point(K, o.at), parse_form(o.plant), o.seed + 1, o.bound);
  if (o.conjugate) {
    std::mt19937_64 rng(o.seed + 2);
    sec = act(random_unipotent(sec.base, K, rng), sec);
  }
  return sec;
}

template <class Fn>
Outcome with_field(const Options& o, Fn&& fn) {
  if (o.field == "q") return fn(QField{});
  if (o.field == "gf") return fn(prime_field(o));
  throw UsageError("--field must be gf or q");
}

// ---- commands ----

Outcome cmd_realizable(const Options& o) {
  if (!o.g || o.e.empty()) throw UsageError("realizable needs --g and --e");
  auto e = int_list<4>(o.e, "--e");
  Outcome out;
  if (!o.f.empty()) {
    BundlePair bp = pair_from(o);
    auto v = theorem15_check(bp);
    json viol = json::array();
    for (const Triple& t : v.violated) viol.push_back(triple_json(t));
    out.result = {{"pair", pair_json(bp)}, {"status", to_string(v.status)}, {"fin_active", v.fin_active},
                  {"d25_1", v.d25_1}, {"violated", viol}};
    out.code = v.satisfied() ? 0 : 1;
    out.verdict = v.satisfied() ? "realizable" : "not-realizable";
    return out;
  }
  bool ok = realizable_scrollar(e, *o.g);
  out.result = {{"g", *o.g}, {"e", e}, {"realizable", ok}};
  if (ok) out.result["lift_f"] = lift_scrollar(e);
  out.code = ok ? 0 : 1;
  out.verdict = ok ? "realizable" : "not-realizable";
  return out;
}

Outcome cmd_check_bundles(const Options& o) {
  BundlePair bp = pair_from(o);
  auto v = theorem15_check(bp);
  Outcome out;
  json d = json::object();
  for (int k = 1; k <= 4; ++k) {
    json row = json::array();
    for (int i = 1; i <= 5; ++i)
      for (int j = i + 1; j <= 5; ++j) row.push_back(bp.d(i, j, k));
    d[std::to_string(k)] = row;
  }
  out.result = {{"pair", pair_json(bp)}, {"status", to_string(v.status)}, {"fin_active", v.fin_active},
                {"warnings", bundle_warnings(bp)}};
  if (v.satisfied()) {
    out.result["codim_HEF"] = codim_HEF(bp);
    out.result["dim_HEF"] = dim_HEF(bp);
  }
  out.detail["degrees_by_k_pairs_lex"] = d;
  out.code = v.satisfied() ? 0 : 1;
  out.verdict = v.satisfied() ? "realizable" : "not-realizable";
  return out;
}

Outcome cmd_sample(const Options& o) {
  return with_field(o, [&](const auto& K) {
    auto sec = build_section(o, K);
    Outcome out;
    out.verdict = "sampled";
    out.result = {{"pair", pair_json(sec.base)}, {"field", field_json(K)}, {"nonzero_entries", section_json(sec)["entries"].size()}};
    out.detail["section"] = section_json(sec);
    return out;
  });
}

Outcome cmd_pfaffians(const Options& o) {
  return with_field(o, [&](const auto& K) {
    auto sec = build_section(o, K);
    auto ps = pfaffians(sec);
    json quadrics = json::array();
    int nonzero = 0;
    for (const auto& row : ps.q) {
      json q = json::array();
      for (const auto& c : row) {
        q.push_back(form_json(c));
        nonzero += !c.is_zero();
      }
      quadrics.push_back(q);
    }
    Outcome out;
    out.verdict = "computed";
    out.result = {{"pair", pair_json(sec.base)}, {"field", field_json(K)}, {"nonzero_coefficients", nonzero},
                  {"monomial_order", "x1x1,x1x2,x1x3,x1x4,x2x2,x2x3,x2x4,x3x3,x3x4,x4x4"}};
    out.detail["quadrics"] = quadrics;
    return out;
  });
}

Outcome cmd_singular(const Options& o) {
  if (o.field != "gf") throw UsageError("singular scans need --field gf");
  GfField K = prime_field(o);
  auto sec = build_section(o, K);
  auto rep = singular_scan(sec, {o.m_max, o.report == "full"});
  auto pts = [](const std::vector<ScannedPoint>& v) {
    json a = json::array();
    for (const auto& sp : v)
      a.push_back({{"p", point_json(sp.point.p)}, {"x", vec4_json(sp.point.x)}, {"rank", sp.rank},
                   {"multiplicity", sp.multiplicity}, {"degree", sp.degree}});
    return a;
  };
  Outcome out;
  out.result = {{"pair", pair_json(sec.base)}, {"p", rep.p}, {"m_max", rep.m_max}, {"status", to_string(rep.status)},
                {"fibers", rep.fibers}, {"curve_points", rep.curve_points}, {"singular", pts(rep.singular)}};
  if (rep.degenerate_fiber) out.result["degenerate_fiber"] = point_json(*rep.degenerate_fiber);
  if (o.report == "full") out.detail["points"] = pts(rep.points);
  if (fin_active(sec.base) && rep.status != ScanStatus::Degenerate) {
    try {
      json w = json::array();
      for (const auto& p : fin_witnesses(sec)) w.push_back(point_json(p));
      out.result["fin_witnesses"] = w;
    } catch (const DegenerateInput&) {
      out.result["fin_witnesses"] = "a25 vanishes identically";
    }
  }
  out.code = rep.status == ScanStatus::SmoothScanned ? 0 : 1;
  out.verdict = rep.status == ScanStatus::SmoothScanned ? "smooth" : rep.status == ScanStatus::SingularAt ? "singular" : "degenerate";
  return out;
}

template <class F>
json certificate_json(const NormalFormCertificate<F>& c) {
  return {{"form", form_descr(c.form)}, {"p", point_json(c.p)}};
}

Outcome minimize_or_normalize(const Options& o, bool normalize) {
  return with_field(o, [&](const auto& K) {
    auto sec = build_section(o, K);
    auto p = parse_point(K, o.at);
    Outcome out;
    out.result["pair"] = pair_json(sec.base);
    try {
      auto cert = minimize_at(sec, p);
      out.result["certificate"] = certificate_json(cert);
      out.detail["witness"] = {{"g4", form_matrix_json(cert.witness.g4)}, {"g5", form_matrix_json(cert.witness.g5)}};
      if (normalize) {
        auto res = partial_normalize(sec, cert);
        out.result["normalized_pair"] = pair_json(res.base);
        out.result["warnings"] = res.warnings;
        out.detail["normalized_section"] = section_json(res.section);
      }
      out.verdict = normalize ? "normalized" : "minimized";
    } catch (const NotSingular& e) {
      out.code = 1;
      out.verdict = "not-singular";
      out.result["reason"] = e.what();
    } catch (const IrrationalSingularPoint& e) {
      out.code = 1;
      out.verdict = "irrational-singular-point";
      out.result["reason"] = e.what();
    }
    return out;
  });
}

json stratum_json(const StratumReport& r) {
  json triples = json::array();
  for (const auto& c : r.triples)
    triples.push_back({{"triple", triple_json(c.t)},
                       {"codimG", c.codimG},
                       {"codimG_direct", c.codimG_direct},
                       {"nu", c.nu},
                       {"n_accessory", c.n_accessory},
                       {"codimU_exact", c.codimU_exact},
                       {"route_n2", c.route_n2},
                       {"route_n3_nu0", c.route_n3_nu0},
                       {"route_n3_d1", c.route_n3_d1},
                       {"pass", c.pass}});
  return {{"pair", pair_json(r.bp)}, {"dim_h", r.dim_h}, {"surjective", r.surjective}, {"all_pass", r.all_pass()},
          {"triples", triples}};
}

StratumReport stratum_from_json(const json& j) {
  StratumReport r;
  r.bp = pair_from_json(j.at("pair"));
  r.dim_h = j.at("dim_h").get<std::array<int, 4>>();
  r.surjective = j.at("surjective").get<bool>();
  for (const auto& t : j.at("triples")) {
    TripleCount c;
    c.t = triple_from_json(t.at("triple"));
    c.codimG = t.at("codimG");
    c.codimG_direct = t.at("codimG_direct");
    c.nu = t.at("nu");
    c.n_accessory = t.at("n_accessory");
    c.codimU_exact = t.at("codimU_exact");
    c.route_n2 = t.at("route_n2");
    c.route_n3_nu0 = t.at("route_n3_nu0");
    c.route_n3_d1 = t.at("route_n3_d1");
    c.pass = t.at("pass");
    r.triples.push_back(c);
  }
  return r;
}

Outcome cmd_strata(const Options& o) {
  StratumReport r;
  if (!o.from.empty()) {
    json doc = read_json_file(o.from);
    if (!doc.contains("detail") || !doc["detail"].contains("stratum")) throw UsageError("--from needs a full strata report");
    try {
      r = stratum_from_json(doc["detail"]["stratum"]);
    } catch (const json::exception& e) {
      throw UsageError(std::string("malformed strata report: ") + e.what());
    }
    // a parsed report must agree with a fresh computation
    if (stratum_json(r) != stratum_json(counting_verdict(r.bp))) throw UsageError("strata report does not match a recomputation");
  } else {
    r = counting_verdict(pair_from(o));
  }
  Outcome out;
  int failing = 0;
  for (const auto& c : r.triples) failing += !(c.pass && c.route_ok());
  out.result = {{"pair", pair_json(r.bp)}, {"maximal_triples", r.triples.size()}, {"failing_triples", failing},
                {"surjective", r.surjective}};
  out.detail["stratum"] = stratum_json(r);
  out.code = r.all_pass() ? 0 : 1;
  out.verdict = r.all_pass() ? "all-strata-small" : "counting-fails";
  return out;
}

Outcome cmd_project_verify(const Options& o) {
  auto rep = verify_projection(o.g_max, {true, true, true, !o.no_fin});
  json levels = json::array();
  for (const auto& l : rep.levels)
    levels.push_back({{"level", l.level}, {"g", l.level - 4}, {"p_points", l.p_points}, {"q_points", l.q_points},
                      {"projected", l.projected}, {"p_only", l.p_only}, {"q_only", l.q_only}});
  Outcome out;
  out.result = {{"g_max", rep.g_max}, {"fin", !o.no_fin}, {"ok", rep.ok()}, {"levels", levels}};
  out.code = rep.ok() ? 0 : 1;
  out.verdict = rep.ok() ? "projection-verified" : "projection-mismatch";
  return out;
}

Outcome cmd_generators(const Options&) {
  auto gens = irreducible_generators();
  json list = json::array();
  for (const auto& g : generator_lifts()) list.push_back({{"e", g.e}, {"f", g.f}});
  Outcome out;
  out.result = {{"count", gens.size()}, {"search_bound", kGeneratorBound}, {"audit_bound", kGeneratorAuditBound},
                {"generators", list}};
  out.verdict = "generators";
  return out;
}

Outcome cmd_lift(const Options& o) {
  if (o.e.empty()) throw UsageError("lift needs --e");
  auto e = int_list<4>(o.e, "--e");
  Outcome out;
  out.result["e"] = e;
  try {
    auto r = lift_scrollar_detailed(e);
    json dec = json::array();
    for (int i : r.decomposition) dec.push_back(generator_lifts()[i].e);
    out.result["f"] = r.f;
    out.result["decomposition"] = dec;
    out.verdict = "lifted";
  } catch (const NotInMonoid& ex) {
    out.code = 1;
    out.verdict = "not-in-monoid";
    out.result["reason"] = ex.what();
  }
  return out;
}

Outcome cmd_density(const Options& o) {
  if (o.e.empty()) throw UsageError("density needs --e");
  auto items = split_list(o.e);
  if (items.size() != 4) throw UsageError("--e needs four rationals");
  RationalPoint eb;
  for (const auto& s : items) eb.push_back(parse_rational(s));
  auto r = rho_geo_detailed(eb);
  Outcome out;
  out.result = {{"e", rat_vec(eb)}, {"in_support", r.in_support}};
  if (r.in_support) {
    out.result["rho_geo"] = rat(r.value);
    out.result["piece"] = r.piece;
    out.detail["argmax"] = rat_vec(r.argmax);
  }
  if (o.density_g) {
    auto pf = pi_geo_finite_detailed(Window::point(eb), *o.density_g);
    out.result["g"] = *o.density_g;
    out.result["pi_geo_finite"] = rat(pf.value);
    if (pf.argmax) out.result["pi_argmax"] = pair_json(*pf.argmax);
  }
  out.code = r.in_support ? 0 : 1;
  out.verdict = r.in_support ? "in-support" : "outside-support";
  return out;
}

// ---- output ----

json envelope(const std::string& command, const Options& o) {
  return {{"command", command}, {"version", kToolVersion}, {"seed", o.seed}};
}

void emit(const json& doc, bool pretty, const std::string& path) {
  std::string text = pretty ? doc.dump(2) : doc.dump();
  if (path.empty()) {
    std::cout << text << "\n";
    return;
  }
  std::ofstream f(path);
  if (!f) throw UsageError("cannot write " + path);
  f << text << "\n";
}

int fail(const std::string& command, const std::string& kind, const std::string& message, int code) {
  json err = {{"command", command}, {"version", kToolVersion}, {"error", {{"kind", kind}, {"message", message}}}};
  std::cout << err.dump() << "\n";
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Quintic covers: bundles, sections, singularities, strata and polytopes"};
  app.set_version_flag("--version", kToolVersion);
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_option("--seed", o.seed, "random seed")->capture_default_str();
  app.add_option("--report", o.report, "summary or full")->check(CLI::IsMember({"summary", "full"}))->capture_default_str();
  app.add_option("--out", o.out, "write the report to this file");
  app.add_option("--prime", o.prime, "prime for finite-field runs (default: QUINTIC_PRIME or 10007)");
  app.add_option("--field", o.field, "gf or q")->check(CLI::IsMember({"gf", "q"}))->capture_default_str();

  auto add_pair = [&](CLI::App* sub, bool need_f) {
    sub->add_option("--g", o.g, "genus");
    sub->add_option("--e", o.e, "e1,..,e4");
    if (need_f) sub->add_option("--f", o.f, "f1,..,f5");
  };
  auto add_section = [&](CLI::App* sub) {
    add_pair(sub, true);
    sub->add_option("--section", o.section_path, "section JSON: a full `sample` report or its detail.section");
    sub->add_option("--bound", o.bound, "coefficient bound for sampling")->capture_default_str();
    sub->add_option("--plant", o.plant, "plant a normal form: K or I,J,K (needs --at)");
    sub->add_option("--at", o.at, "affine coordinate of the point, or inf");
    sub->add_flag("--conjugate", o.conjugate, "apply a random unipotent group element");
  };

  auto* realizable = app.add_subcommand("realizable", "scrollar realizability of e (and the full criterion with --f)");
  add_pair(realizable, true);
  auto* check = app.add_subcommand("check-bundles", "degree data, realizability and codimension of a bundle pair");
  add_pair(check, true);
  auto* sample = app.add_subcommand("sample", "sample a section");
  add_section(sample);
  auto* pf = app.add_subcommand("pfaffians", "the five quadrics of a section");
  add_section(pf);
  auto* singular = app.add_subcommand("singular", "scan a section for singular points over F_p and extensions");
  add_section(singular);
  singular->add_option("--mmax", o.m_max, "largest extension degree")->capture_default_str();
  auto* minimize = app.add_subcommand("minimize", "normal-form certificate at a singular point");
  add_section(minimize);
  auto* normalize = app.add_subcommand("normalize", "minimize then lower the splitting types");
  add_section(normalize);
  auto* strata = app.add_subcommand("strata", "stratum codimension count");
  add_pair(strata, true);
  strata->add_option("--from", o.from, "re-emit a full strata report after checking it");
  auto* pv = app.add_subcommand("project-verify", "lattice-point projection check up to a genus");
  pv->add_option("--gmax", o.g_max, "largest genus")->capture_default_str();
  pv->add_flag("--no-fin", o.no_fin, "drop the fin piece (negative control)");
  auto* gens = app.add_subcommand("generators", "irreducible generators of the scrollar monoid and their lifts");
  auto* lift = app.add_subcommand("lift", "lift e to a realizable f");
  lift->add_option("--e", o.e, "e1,..,e4");
  auto* density = app.add_subcommand("density", "geometric density at a normalized scrollar vector");
  density->add_option("--e", o.e, "four rationals summing to 1");
  density->add_option("--g", o.density_g, "also compute the finite-genus value");

  std::string command = "?";
  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    return fail(command, "usage", e.what(), 2);
  }
  command = app.get_subcommands().front()->get_name();

  try {
    Outcome res;
    auto* sub = app.get_subcommands().front();
    if (sub == realizable) res = cmd_realizable(o);
    else if (sub == check) res = cmd_check_bundles(o);
    else if (sub == sample) res = cmd_sample(o);
    else if (sub == pf) res = cmd_pfaffians(o);
    else if (sub == singular) res = cmd_singular(o);
    else if (sub == minimize) res = minimize_or_normalize(o, false);
    else if (sub == normalize) res = minimize_or_normalize(o, true);
    else if (sub == strata) res = cmd_strata(o);
    else if (sub == pv) res = cmd_project_verify(o);
    else if (sub == gens) res = cmd_generators(o);
    else if (sub == lift) res = cmd_lift(o);
    else res = cmd_density(o);

    json doc = envelope(command, o);
    doc["verdict"] = res.verdict;
    doc["result"] = res.result;
    bool full = o.report == "full";
    if (full) doc["detail"] = res.detail;
    emit(doc, full, o.out);
    if (!o.out.empty()) std::cout << json{{"command", command}, {"verdict", res.verdict}, {"out", o.out}}.dump() << "\n";
    return res.code;
  } catch (const UsageError& e) {
    return fail(command, "usage", e.what(), 2);
  } catch (const std::invalid_argument& e) {
    return fail(command, "input", e.what(), 2);
  } catch (const std::domain_error& e) {
    return fail(command, "input", e.what(), 2);
  } catch (const json::exception& e) {
    return fail(command, "input", e.what(), 2);
  } catch (const std::exception& e) {
    return fail(command, "internal", e.what(), 3);
  }
}
