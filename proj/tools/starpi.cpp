// Command-line front end: exact identity checking, transforms, Grassmann
// envelopes and degree-bounded *T-ideal membership for *-polynomials.
//
// Exit codes: 0 = holds / verified / computed, 1 = refuted (witness printed),
// 2 = usage, parse or validation error.

#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "starpi/starpi.hpp"

namespace {

using nlohmann::json;
using namespace starpi;

json element_json(const AlgebraElement& e) {
  json out = json::object();
  for (const auto& [i, c] : e.coords()) out[e.algebra().basis_name(i)] = rational_to_string(c);
  return out;
}

json witness_json(const Assignment& a) {
  json out = json::object();
  for (const auto& [v, e] : a.values) out[to_string(v)] = element_json(e);
  return out;
}

void print_witness(const Assignment& a) {
  for (const auto& [v, e] : a.values)
    std::cout << "  " << to_string(v) << " = " << to_string(e) << "\n";
}

json report_json(const IdentityReport& rep) {
  json out;
  out["holds"] = rep.holds;
  out["tuples_checked"] = rep.tuples_checked;
  out["witness"] = rep.witness ? witness_json(*rep.witness) : json(nullptr);
  return out;
}

int run_identity(const std::string& algebra_path, const std::string& poly_text, bool graded,
                 bool as_json) {
  const FinDimAlgebra A = load_algebra_file(algebra_path);
  const StarPolynomial f = parse_poly(poly_text);

  if (const auto g = f.gradedness()) {
    if (graded && !*g)
      throw std::invalid_argument(
          "check-graded-identity expects graded variables (write y1@0 etc.)");
    if (!graded && *g)
      throw std::invalid_argument("check-identity expects ungraded variables");
  }

  const IdentityReport rep = graded ? is_graded_star_identity(A, f) : is_star_identity(A, f);

  if (as_json) {
    json out = report_json(rep);
    out["command"] = graded ? "check-graded-identity" : "check-identity";
    std::cout << out.dump() << "\n";
  } else if (rep.holds) {
    std::cout << "identity holds (" << rep.tuples_checked << " tuples checked)\n";
  } else {
    std::cout << "refuted after " << rep.tuples_checked << " tuples; witness:\n";
    print_witness(*rep.witness);
  }
  return rep.holds ? 0 : 1;
}

int run_transform(const std::string& op, const std::string& poly_text,
                  const std::string& set_text, bool as_json) {
  const StarPolynomial f = parse_poly(poly_text);
  StarPolynomial result;

  if (op == "s" || op == "t" || op == "tilde") {
    if (!set_text.empty()) throw std::invalid_argument("--set applies only to alt and sym");
    result = (op == "s") ? s_op(f) : (op == "t") ? t_op(f) : tilde(f);
  } else if (op == "alt" || op == "sym") {
    if (set_text.empty()) throw std::invalid_argument("--set is required for alt and sym");
    std::vector<Variable> members;
    std::stringstream ss(set_text);
    std::string item;
    while (std::getline(ss, item, ',')) members.push_back(parse_variable(item));
    const VariableSet s(std::move(members));
    result = (op == "alt") ? alternator(s, f) : symmetrizer(s, f);
  } else {
    throw std::invalid_argument("unknown --op (use s, t, tilde, alt or sym)");
  }

  if (as_json) {
    json out;
    out["command"] = "transform";
    out["op"] = op;
    out["result"] = to_string(result);
    std::cout << out.dump() << "\n";
  } else {
    std::cout << to_string(result) << "\n";
  }
  return 0;
}

int run_envelope(const std::string& algebra_path, unsigned generators,
                 const std::string& out_path, bool as_json) {
  const FinDimAlgebra A = load_algebra_file(algebra_path);
  const EnvelopeAlgebra env = build_envelope(A, generators);

  json parts = json::object();
  for (Z4 theta : all_z4()) {
    json part;
    part["+"] = envelope_sym_skew_basis(env, theta, Sign::Plus).size();
    part["-"] = envelope_sym_skew_basis(env, theta, Sign::Minus).size();
    parts[std::to_string(theta.value())] = std::move(part);
  }

  if (!out_path.empty()) {
    if (env.realized().dim() > 128)
      throw std::invalid_argument(
          "envelope dimension " + std::to_string(env.realized().dim()) +
          " is too large for a structure-constant dump (limit 128)");
    save_algebra_file(env.realized(), out_path);
  }

  if (as_json) {
    json out;
    out["command"] = "envelope";
    out["base_dim"] = A.dim();
    out["generators"] = generators;
    out["dim"] = env.realized().dim();
    out["sym_skew_dims"] = std::move(parts);
    if (!out_path.empty()) out["written"] = out_path;
    std::cout << out.dump() << "\n";
  } else {
    std::cout << "envelope of a " << A.dim() << "-dimensional algebra over " << generators
              << " Grassmann generators: dim " << env.realized().dim() << "\n";
    for (Z4 theta : all_z4())
      std::cout << "  grade " << theta.value() << ": sym "
                << parts[std::to_string(theta.value())]["+"].get<size_t>() << ", skew "
                << parts[std::to_string(theta.value())]["-"].get<size_t>() << "\n";
    if (!out_path.empty()) std::cout << "written to " << out_path << "\n";
  }
  return 0;
}

int run_tideal(const std::string& gens_path, const std::string& target_text, unsigned max_degree,
               bool as_json) {
  std::ifstream in(gens_path);
  if (!in) throw std::runtime_error("cannot open '" + gens_path + "'");
  std::vector<StarPolynomial> gens;
  std::string line;
  size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    try {
      gens.push_back(parse_poly(line));
    } catch (const ParseError& e) {
      throw std::runtime_error(gens_path + ":" + std::to_string(lineno) + ": " + e.what());
    }
  }

  const StarPolynomial target = parse_poly(target_text);

  // Membership is decided at the multilinear level: each multihomogeneous
  // component is fully linearized first, which changes nothing over the
  // rationals.
  std::vector<std::pair<std::string, bool>> verdicts;
  bool member = true;
  for (const auto& comp : multihomogeneous_components(target)) {
    const StarPolynomial piece =
        multidegree(comp).multilinear() ? comp : full_linearization(comp);
    const bool ok = is_member(gens, piece, max_degree);
    member = member && ok;
    verdicts.emplace_back(to_string(comp), ok);
  }

  if (as_json) {
    json comps = json::array();
    for (const auto& [text, ok] : verdicts) comps.push_back({{"component", text}, {"member", ok}});
    json out;
    out["command"] = "tideal-member";
    out["member"] = member;
    out["components"] = std::move(comps);
    std::cout << out.dump() << "\n";
  } else {
    if (target.is_zero() || verdicts.empty()) {
      std::cout << "member (zero polynomial)\n";
    } else {
      for (const auto& [text, ok] : verdicts)
        std::cout << "component " << text << ": " << (ok ? "member" : "not a member") << "\n";
      std::cout << (member ? "member\n" : "not a member\n");
    }
  }
  return member ? 0 : 1;
}

int run_verify_lemma(const std::string& algebra_path, unsigned degree, unsigned samples,
                     uint64_t seed, std::optional<unsigned> generators, bool exhaustive,
                     bool as_json) {
  if (degree == 0) throw std::invalid_argument("--degree must be positive");
  const FinDimAlgebra A = load_algebra_file(algebra_path);
  Sampler sampler(seed);

  bool all_agree = true;
  for (unsigned i = 0; i < samples; ++i) {
    const StarPolynomial f = sampler.multilinear_graded(degree, 3);

    uint32_t minimal = 0;
    for (const auto& v : multidegree(f).variables()) minimal += minimal_support_size(v.grade());
    // Default truncation: three generators per variable, the documented
    // worst case; exhaustive cross-checks shrink to the minimal pattern to
    // keep the tuple count finite in practice.
    uint32_t n = generators ? *generators : 3 * degree;
    if (exhaustive) n = std::max<uint32_t>(minimal, 1);

    const EnvelopeLemmaReport rep = check_envelope_lemma(A, f, n, EnvelopeMode::Minimal);
    bool ok = rep.agree;
    std::optional<EnvelopeLemmaReport> exh;
    if (exhaustive) {
      exh = check_envelope_lemma(A, f, n, EnvelopeMode::Exhaustive);
      ok = ok && exh->agree && exh->envelope.holds == rep.envelope.holds;
    }
    all_agree = all_agree && ok;

    if (as_json) {
      json rec;
      rec["sample"] = i;
      rec["poly"] = to_string(f);
      rec["generators"] = n;
      rec["base_holds"] = rep.base.holds;
      rec["envelope_holds"] = rep.envelope.holds;
      rec["agree"] = rep.agree;
      if (exh) {
        rec["exhaustive_envelope_holds"] = exh->envelope.holds;
        rec["exhaustive_agree"] = exh->agree;
      }
      std::cout << rec.dump() << "\n";
    } else {
      std::cout << "sample " << i << ": base " << (rep.base.holds ? "holds" : "fails")
                << ", envelope " << (rep.envelope.holds ? "holds" : "fails")
                << (exhaustive ? (exh->envelope.holds ? ", exhaustive holds" : ", exhaustive fails")
                               : "")
                << " -> " << (ok ? "agree" : "DISAGREE") << "  " << to_string(f) << "\n";
    }
  }

  if (!as_json)
    std::cout << (all_agree ? "verified: all samples agree\n" : "FAILED: disagreement found\n");
  return all_agree ? 0 : 1;
}

int run_eta(unsigned grade, bool as_json) {
  if (grade > 3) throw std::invalid_argument("--grade must be one of 0,1,2,3");
  const int value = eta(Z4(grade));
  if (as_json) {
    json out;
    out["command"] = "eta";
    out["grade"] = grade;
    out["eta"] = value;
    std::cout << out.dump() << "\n";
  } else {
    std::cout << value << "\n";
  }
  return 0;
}

int run_grassmann_mul(unsigned n, const std::string& lhs, const std::string& rhs, bool as_json) {
  const GrassmannElement a = parse_grassmann(lhs, n);
  const GrassmannElement b = parse_grassmann(rhs, n);
  const GrassmannElement p = g_mul(a, b);
  if (as_json) {
    json out;
    out["command"] = "grassmann-mul";
    out["n"] = n;
    out["product"] = to_string(p);
    std::cout << out.dump() << "\n";
  } else {
    std::cout << to_string(p) << "\n";
  }
  return 0;
}

int run_catalog(const std::string& name, const std::string& out_path) {
  std::optional<FinDimAlgebra> A;
  for (auto& [n, alg] : standard_catalog())
    if (n == name) A = alg;
  if (!A && name.size() == 2 && name[0] == 'e' && name[1] >= '1' && name[1] <= '6')
    A = grassmann_findim(unsigned(name[1] - '0'));
  if (!A)
    throw std::invalid_argument(
        "unknown catalog name (use m2-transpose, m2-symplectic, e1..e6 or m2t-x-e2)");

  if (out_path.empty())
    std::cout << algebra_to_json(*A).dump() << "\n";
  else
    save_algebra_file(*A, out_path);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact *-polynomial identities, transforms and Grassmann envelopes"};
  app.require_subcommand(1);

  int rc = 0;

  // check-identity / check-graded-identity
  struct {
    std::string algebra, poly;
    bool json = false;
  } ci, cgi;
  auto* sub_ci = app.add_subcommand("check-identity",
                                    "does an ungraded *-polynomial vanish on an algebra?");
  sub_ci->add_option("--algebra", ci.algebra, "algebra JSON file")->required();
  sub_ci->add_option("--poly", ci.poly, "polynomial, e.g. '[z1,z2]'")->required();
  sub_ci->add_flag("--json", ci.json, "machine-readable output");
  sub_ci->callback([&]() { rc = run_identity(ci.algebra, ci.poly, false, ci.json); });

  auto* sub_cgi = app.add_subcommand("check-graded-identity",
                                     "does a graded *-polynomial vanish on an algebra?");
  sub_cgi->add_option("--algebra", cgi.algebra, "algebra JSON file")->required();
  sub_cgi->add_option("--poly", cgi.poly, "polynomial, e.g. 'y1@1*y2@1'")->required();
  sub_cgi->add_flag("--json", cgi.json, "machine-readable output");
  sub_cgi->callback([&]() { rc = run_identity(cgi.algebra, cgi.poly, true, cgi.json); });

  // envelope
  struct {
    std::string algebra, out;
    unsigned generators = 0;
    bool json = false;
  } env;
  auto* sub_env = app.add_subcommand("envelope", "build the Grassmann envelope of an algebra");
  sub_env->add_option("--algebra", env.algebra, "algebra JSON file")->required();
  sub_env->add_option("--generators", env.generators, "Grassmann truncation")->required();
  sub_env->add_option("--out", env.out, "write the realized algebra as JSON");
  sub_env->add_flag("--json", env.json, "machine-readable output");
  sub_env->callback([&]() { rc = run_envelope(env.algebra, env.generators, env.out, env.json); });

  // transform
  struct {
    std::string op, poly, set;
    bool json = false;
  } tr;
  auto* sub_tr = app.add_subcommand("transform", "apply s, t, tilde, alt or sym");
  sub_tr->add_option("--op", tr.op, "one of s, t, tilde, alt, sym")->required();
  sub_tr->add_option("--poly", tr.poly, "polynomial")->required();
  sub_tr->add_option("--set", tr.set, "comma-separated variables (alt/sym only)");
  sub_tr->add_flag("--json", tr.json, "machine-readable output");
  sub_tr->callback([&]() { rc = run_transform(tr.op, tr.poly, tr.set, tr.json); });

  // tideal-member
  struct {
    std::string gens, target;
    unsigned max_degree = kConsequenceDegreeCap;
    bool json = false;
  } ti;
  auto* sub_ti = app.add_subcommand("tideal-member",
                                    "degree-bounded membership in a *T-ideal");
  sub_ti->add_option("--generators", ti.gens, "file with one generator per line")->required();
  sub_ti->add_option("--target", ti.target, "polynomial to test")->required();
  sub_ti->add_option("--max-degree", ti.max_degree, "total-degree cap (default 6)");
  sub_ti->add_flag("--json", ti.json, "machine-readable output");
  sub_ti->callback([&]() { rc = run_tideal(ti.gens, ti.target, ti.max_degree, ti.json); });

  // verify-envelope-lemma
  struct {
    std::string algebra;
    unsigned degree = 0, samples = 0;
    uint64_t seed = 0;
    unsigned generators = 0;
    bool exhaustive = false, json = false;
  } vl;
  auto* sub_vl = app.add_subcommand(
      "verify-envelope-lemma",
      "sample graded identities and compare the base verdict with the envelope verdict");
  sub_vl->add_option("--algebra", vl.algebra, "algebra JSON file")->required();
  sub_vl->add_option("--degree", vl.degree, "maximal polynomial degree")->required();
  sub_vl->add_option("--samples", vl.samples, "number of random polynomials")->required();
  sub_vl->add_option("--seed", vl.seed, "RNG seed (results are reproducible)")->required();
  auto* gen_opt = sub_vl->add_option("--generators", vl.generators,
                                     "Grassmann truncation (default: 3 * degree)");
  sub_vl->add_flag("--exhaustive", vl.exhaustive,
                   "also run the full disjoint-support tuple enumeration at the minimal "
                   "truncation and require the verdicts to match");
  sub_vl->add_flag("--json", vl.json, "one JSON record per sample");
  sub_vl->callback([&]() {
    std::optional<unsigned> gens;
    if (gen_opt->count() > 0) gens = vl.generators;
    rc = run_verify_lemma(vl.algebra, vl.degree, vl.samples, vl.seed, gens, vl.exhaustive,
                          vl.json);
  });

  // eta
  struct {
    unsigned grade = 0;
    bool json = false;
  } et;
  auto* sub_et = app.add_subcommand("eta", "the envelope involution sign selector");
  sub_et->add_option("--grade", et.grade, "grade in 0..3")->required();
  sub_et->add_flag("--json", et.json, "machine-readable output");
  sub_et->callback([&]() { rc = run_eta(et.grade, et.json); });

  // grassmann-mul
  struct {
    unsigned n = 0;
    std::string lhs, rhs;
    bool json = false;
  } gm;
  auto* sub_gm = app.add_subcommand("grassmann-mul", "multiply two exterior-algebra elements");
  sub_gm->add_option("--n", gm.n, "number of generators")->required();
  sub_gm->add_option("--lhs", gm.lhs, "left factor, e.g. 'e{1,2} + 2*e{}'")->required();
  sub_gm->add_option("--rhs", gm.rhs, "right factor")->required();
  sub_gm->add_flag("--json", gm.json, "machine-readable output");
  sub_gm->callback([&]() { rc = run_grassmann_mul(gm.n, gm.lhs, gm.rhs, gm.json); });

  // catalog
  struct {
    std::string name, out;
  } ca;
  auto* sub_ca = app.add_subcommand("catalog", "emit a built-in algebra as JSON");
  sub_ca->add_option("--name", ca.name, "m2-transpose, m2-symplectic, e1..e6 or m2t-x-e2")
      ->required();
  sub_ca->add_option("--out", ca.out, "output file (stdout when omitted)");
  sub_ca->callback([&]() { rc = run_catalog(ca.name, ca.out); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return rc;
}
