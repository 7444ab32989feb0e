#include <functional>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "assoc2/fixtures.hpp"
#include "assoc2/io.hpp"
#include "assoc2/random.hpp"

using namespace assoc2;
using io::Json;

namespace {

struct Options {
  std::string format = "human";
  std::uint64_t seed = 1;
  std::size_t max_violations = 20;
};

Options opts;

struct Outcome {
  Json doc;
  int code = 0;
};

using Files = std::vector<std::string>;
using Handler = std::function<Outcome(const Files&)>;

// ---------------------------------------------------------------- loading

Json load(const std::string& path) { return io::load_file(path); }

TwoTermAlgebra load_algebra(const std::string& p) { return io::read_algebra(load(p), p + ": $"); }
CrossedModule load_xmod(const std::string& p) { return io::read_crossed_module(load(p), p + ": $"); }
Extension2 load_extension(const std::string& p) { return io::read_extension(load(p), p + ": $"); }
XModExtension load_xextension(const std::string& p) { return io::read_xmod_extension(load(p), p + ": $"); }

// A representation file, or a complex2 file read as the trivial representation.
Representation2 load_rep(const TwoTermAlgebra& g, const std::string& p) {
  Json doc = load(p);
  Representation2 r = io::kind_of(doc, p + ": $") == "complex2"
                          ? trivial_representation(g, io::read_complex(doc, p + ": $"))
                          : io::read_representation(doc, p + ": $");
  if (r.n0 != g.n0 || r.n1 != g.n1)
    throw InputError(p + ": representation dims n0/n1 do not match the algebra");
  return r;
}

Representation2 rep_or_adjoint(const TwoTermAlgebra& g, const Files& f, std::size_t i) {
  return f.size() > i ? load_rep(g, f[i]) : adjoint_representation(g);
}

XModRepresentation load_xrep(const CrossedModule& x, const std::string& p) {
  XModRepresentation r = io::read_xmod_representation(load(p), p + ": $");
  if (r.V.left.dim(0) != x.p.dim || r.tr_l.dim(0) != x.h.dim)
    throw InputError(p + ": representation dims p/h do not match the crossed module");
  return r;
}

XModRepresentation xrep_or_adjoint(const CrossedModule& x, const Files& f, std::size_t i) {
  return f.size() > i ? load_xrep(x, f[i]) : xmod_adjoint(x);
}

Cochain2 load_cochain2(const Representation2& r, const std::string& p) {
  Cochain2 c = io::read_cochain2(load(p), p + ": $");
  Cochain2 z = zero_cochain2(r);
  for (auto [a, b] : {std::pair{&c.psi, &z.psi}, {&c.omega, &z.omega}, {&c.mu, &z.mu},
                      {&c.nu, &z.nu}, {&c.theta, &z.theta}})
    if (a->shape() != b->shape())
      throw InputError(p + ": cochain dims do not match the algebra and representation");
  return c;
}

XCochain2 load_xcochain2(const CrossedModule& x, const XModRepresentation& r, const std::string& p) {
  XCochain2 c = io::read_xcochain2(load(p), p + ": $");
  XCochain2 z = zero_xcochain2(x, r);
  for (auto [a, b] :
       {std::pair{&c.psi, &z.psi}, {&c.omega, &z.omega}, {&c.mu, &z.mu}, {&c.nu, &z.nu}})
    if (a->shape() != b->shape())
      throw InputError(p + ": cochain dims do not match the crossed module and representation");
  return c;
}

// ---------------------------------------------------------------- reports

Json tuple_json(const Index& t) {
  Json out = Json::array();
  for (auto i : t) out.push_back(i);
  return out;
}

void put_report(Json& doc, const Report& r) {
  Json conds = Json::array();
  for (const auto& c : r.conditions) conds.push_back(c);
  doc["conditions"] = conds;
  doc["violation_count"] = r.violations.size();
  Json vs = Json::array();
  for (std::size_t i = 0; i < r.violations.size() && i < opts.max_violations; ++i) {
    const auto& v = r.violations[i];
    vs.push_back(Json{{"condition_id", v.condition},
                      {"basis_tuple", tuple_json(v.tuple)},
                      {"lhs_value", io::vec_json(v.lhs)},
                      {"rhs_value", io::vec_json(v.rhs)}});
  }
  doc["violations"] = vs;
}

Json start(const std::string& command) {
  Json doc;
  doc["command"] = command;
  doc["verdict"] = "";
  return doc;
}

Outcome verdict(Json doc, const Report& r) {
  doc["verdict"] = r.pass() ? "pass" : "fail";
  put_report(doc, r);
  return {doc, r.pass() ? 0 : 1};
}

// Runs a checker on an input; on failure the outcome is the final answer.
std::optional<Outcome> precheck(const Json& doc, const Report& r, const std::string& what) {
  if (r.pass()) return std::nullopt;
  Json d = doc;
  d["verdict"] = "precondition_failed";
  d["failed_input"] = what;
  put_report(d, r);
  return Outcome{d, 1};
}

Json cohomology_json(const SecondCohomology& h) {
  return Json{{"dimZ2", h.dimZ2}, {"dimB2", h.dimB2}, {"dimH2", h.dimH2}};
}

// Nonzero residual families of a d2 residual vector.
Json residual_families(const std::vector<ResidualBlock>& blocks, const QVec& res) {
  Json out = Json::object();
  std::size_t at = 0;
  for (const auto& b : blocks) {
    std::size_t n = 1;
    for (auto s : b.shape) n *= s;
    std::size_t nz = 0;
    for (std::size_t i = 0; i < n; ++i) nz += !is_zero(res[at + i]);
    if (nz) out[b.family] = nz;
    at += n;
  }
  return out;
}

// Coordinates of v in the basis `first` followed by `second` (v must lie in the span).
std::vector<Rational> coordinates(std::size_t dim, const std::vector<QVec>& first,
                                  const std::vector<QVec>& second, const QVec& v) {
  std::vector<QVec> cols = first;
  cols.insert(cols.end(), second.begin(), second.end());
  auto x = solve(Matrix::from_columns(dim, cols), v);
  if (!x) throw std::logic_error("cocycle reduce: cocycle outside Z2");
  return std::vector<Rational>(x->begin() + first.size(), x->end());
}

Json rationals(const std::vector<Rational>& v) {
  Json out = Json::array();
  for (const auto& q : v) out.push_back(to_string(q));
  return out;
}

// ---------------------------------------------------------------- check

Outcome check_algebra_cmd(const Files& f) {
  return verdict(start("check algebra"), check_algebra(load_algebra(f[0])));
}

Outcome check_rep_cmd(const Files& f) {
  TwoTermAlgebra g = load_algebra(f[0]);
  return verdict(start("check rep"), check_representation(g, load_rep(g, f[1])));
}

Outcome check_xmod_cmd(const Files& f) {
  return verdict(start("check xmod"), check_crossed_module(load_xmod(f[0])));
}

Outcome check_xrep_cmd(const Files& f) {
  CrossedModule x = load_xmod(f[0]);
  return verdict(start("check xmod-rep"), check_xmod_representation(x, load_xrep(x, f[1])));
}

Outcome check_hom_cmd(const Files& f) {
  TwoTermAlgebra s = load_algebra(f[0]), t = load_algebra(f[1]);
  Homomorphism2 h = io::read_homomorphism(load(f[2]), f[2] + ": $");
  if (h.F0.dim(0) != s.n0 || h.F1.dim(0) != s.n1 || h.F0.dim(1) != t.n0 || h.F1.dim(1) != t.n1)
    throw InputError(f[2] + ": homomorphism dims do not match source and target");
  return verdict(start("check hom"), check_homomorphism(s, t, h));
}

Outcome check_derivation_cmd(const Files& f) {
  TwoTermAlgebra g = load_algebra(f[0]);
  HomotopyDerivation d = io::read_derivation(load(f[1]), f[1] + ": $");
  if (d.D0.dim(0) != g.n0 || d.D1.dim(0) != g.n1)
    throw InputError(f[1] + ": derivation dims do not match the algebra");
  return verdict(start("check derivation"), check_derivation(g, d));
}

// ---------------------------------------------------------------- 2-algebras

Outcome cohomology_cmd(const Files& f) {
  TwoTermAlgebra g = load_algebra(f[0]);
  Representation2 r = rep_or_adjoint(g, f, 1);
  Json doc = start("cohomology");
  if (auto o = precheck(doc, check_algebra(g), "algebra")) return *o;
  if (auto o = precheck(doc, check_representation(g, r), "representation")) return *o;
  SecondCohomology h = second_cohomology(g, r);
  doc["verdict"] = "pass";
  doc["numbers"] = cohomology_json(h);
  Json reps = Json::array();
  for (const auto& v : h.representatives) reps.push_back(io::to_json(unflatten_cochain2(r, v)));
  doc["representatives"] = reps;
  return {doc, 0};
}

Outcome cocycle_cmd(const Files& f, bool reduce) {
  TwoTermAlgebra g = load_algebra(f[0]);
  Representation2 r = load_rep(g, f[1]);
  Cochain2 c = load_cochain2(r, f[2]);
  Json doc = start(reduce ? "cocycle reduce" : "cocycle check");
  if (auto o = precheck(doc, check_algebra(g), "algebra")) return *o;
  if (auto o = precheck(doc, check_representation(g, r), "representation")) return *o;
  QVec res = d2_residual(g, r, c);
  if (!is_zero(res)) {
    doc["verdict"] = "not_cocycle";
    doc["residual_families"] = residual_families(d2_blocks(r), res);
    return {doc, 1};
  }
  doc["verdict"] = "cocycle";
  if (!reduce) {
    auto lam = is_coboundary(g, r, c);
    doc["coboundary"] = lam.has_value();
    if (lam) doc["witness"] = io::to_json(*lam);
    return {doc, 0};
  }
  SecondCohomology h = second_cohomology(g, r);
  std::vector<Rational> k =
      coordinates(h.Z2.ambient_dim, h.B2.basis, h.representatives, flatten(c));
  QVec red(flatten(c).size());
  for (std::size_t i = 0; i < k.size(); ++i) red += k[i] * h.representatives[i];
  Cochain2 reduced = unflatten_cochain2(r, red);
  doc["numbers"] = cohomology_json(h);
  doc["class_coordinates"] = rationals(k);
  doc["reduced"] = io::to_json(reduced);
  doc["witness"] = io::to_json(*is_coboundary(g, r, c - reduced));
  return {doc, 0};
}

Outcome deform_check_cmd(const Files& f) {
  TwoTermAlgebra g = load_algebra(f[0]);
  Cochain2 c = load_cochain2(adjoint_representation(g), f[1]);
  Json doc = start("deform check");
  if (auto o = precheck(doc, check_algebra(g), "algebra")) return *o;
  GeneratesVerdict v = check_generates({g, c, std::nullopt});
  doc["verdict"] = v.generates() ? "generates" : "does_not_generate";
  doc["cocycle_ok"] = v.cocycle_ok;
  doc["standalone_ok"] = v.standalone_ok;
  put_report(doc, v.coefficients);
  return {doc, v.generates() ? 0 : 1};
}

NijenhuisCandidate load_nijenhuis(const TwoTermAlgebra& g, const std::string& p) {
  NijenhuisCandidate n = io::read_nijenhuis(load(p), p + ": $");
  if (n.N0.dim(0) != g.n0 || n.N1.dim(0) != g.n1)
    throw InputError(p + ": candidate dims do not match the algebra");
  return n;
}

Outcome nijenhuis_cmd(const Files& f, bool apply) {
  TwoTermAlgebra g = load_algebra(f[0]);
  NijenhuisCandidate n = load_nijenhuis(g, f[1]);
  Json doc = start(apply ? "nijenhuis apply" : "nijenhuis check");
  if (auto o = precheck(doc, check_algebra(g), "algebra")) return *o;
  Report r = check_nijenhuis(g, n);
  if (!apply || !r.pass()) return verdict(doc, r);
  PolyStructure p = nijenhuis_deformation(g, n);
  Json def;
  def["first_order"] = io::to_json(p.first_order);
  def["theta2"] = io::tensor_json(*p.theta2);
  doc["deformation"] = def;
  Report t = check_trivializing(g, p, n);
  doc["trivializing"] = t.pass();
  return verdict(doc, t);
}

Outcome ext_build_cmd(const Files& f) {
  TwoTermAlgebra g = load_algebra(f[0]);
  Representation2 r = load_rep(g, f[1]);
  Cochain2 c = load_cochain2(r, f[2]);
  Json doc = start("ext build");
  if (auto o = precheck(doc, check_algebra(g), "algebra")) return *o;
  if (auto o = precheck(doc, check_representation(g, r), "representation")) return *o;
  QVec res = d2_residual(g, r, c);
  if (!is_zero(res)) {
    doc["verdict"] = "not_cocycle";
    doc["residual_families"] = residual_families(d2_blocks(r), res);
    return {doc, 1};
  }
  doc["verdict"] = "pass";
  doc["result"] = io::to_json(build_extension(g, r, c));
  return {doc, 0};
}

Outcome ext_extract_cmd(const Files& f) {
  Extension2 e = load_extension(f[0]);
  Json doc = start("ext extract");
  if (auto o = precheck(doc, validate_extension(e), "extension")) return *o;
  doc["verdict"] = "pass";
  doc["representation"] = io::to_json(extract_representation(e));
  doc["cocycle"] = io::to_json(extract_cocycle(e));
  return {doc, 0};
}

Outcome ext_equiv_cmd(const Files& f) {
  Extension2 a = load_extension(f[0]), b = load_extension(f[1]);
  Json doc = start("ext equiv");
  if (auto o = precheck(doc, validate_extension(a), "first extension")) return *o;
  if (auto o = precheck(doc, validate_extension(b), "second extension")) return *o;
  EquivalenceResult eq = check_equivalence(a, b);
  doc["verdict"] = eq.equivalent ? "equivalent" : "inequivalent";
  if (!eq.reason.empty()) doc["reason"] = eq.reason;
  if (eq.lambda) doc["witness"] = io::to_json(*eq.lambda);
  if (eq.map) doc["map"] = io::to_json(*eq.map);
  if (eq.certificate) doc["certificate"] = io::vec_json(*eq.certificate);
  return {doc, eq.equivalent ? 0 : 1};
}

Outcome endalg_cmd(const Files& f) {
  Complex2 v = io::read_complex(load(f[0]), f[0] + ": $");
  EndAlgebra e = build_end_algebra(v);
  Json doc = start("endalg build");
  Report r = check_algebra(e.algebra);
  doc["verdict"] = r.pass() ? "pass" : "fail";
  doc["result"] = io::to_json(e.algebra);
  return {doc, r.pass() ? 0 : 1};
}

// ---------------------------------------------------------------- crossed modules

Outcome xcohomology_cmd(const Files& f) {
  CrossedModule x = load_xmod(f[0]);
  XModRepresentation r = xrep_or_adjoint(x, f, 1);
  Json doc = start("xmod cohomology");
  if (auto o = precheck(doc, check_crossed_module(x), "crossed module")) return *o;
  if (auto o = precheck(doc, check_xmod_representation(x, r), "representation")) return *o;
  SecondCohomology h = xmod_h2(x, r);
  doc["verdict"] = "pass";
  doc["numbers"] = cohomology_json(h);
  Json reps = Json::array();
  for (const auto& v : h.representatives)
    reps.push_back(io::to_json(unflatten_xcochain2(x, r, v)));
  doc["representatives"] = reps;
  return {doc, 0};
}

Outcome xcocycle_cmd(const Files& f, bool reduce) {
  CrossedModule x = load_xmod(f[0]);
  XModRepresentation r = load_xrep(x, f[1]);
  XCochain2 c = load_xcochain2(x, r, f[2]);
  Json doc = start(reduce ? "xmod cocycle reduce" : "xmod cocycle check");
  if (auto o = precheck(doc, check_crossed_module(x), "crossed module")) return *o;
  if (auto o = precheck(doc, check_xmod_representation(x, r), "representation")) return *o;
  QVec res = xmod_d2_residual(x, r, c);
  if (!is_zero(res)) {
    doc["verdict"] = "not_cocycle";
    doc["residual_families"] = residual_families(xmod_d2_blocks(x, r), res);
    return {doc, 1};
  }
  doc["verdict"] = "cocycle";
  CoboundaryMatrices m = xmod_matrices(x, r);
  auto witness = [&](const XCochain2& b) -> std::optional<XCochain1> {
    auto lam = solve(m.d1, flatten(b));
    if (!lam) return std::nullopt;
    return unflatten_xcochain1(x, r, *lam);
  };
  if (!reduce) {
    auto lam = witness(c);
    doc["coboundary"] = lam.has_value();
    if (lam) doc["witness"] = io::to_json(*lam);
    return {doc, 0};
  }
  SecondCohomology h = xmod_h2(x, r);
  std::vector<Rational> k =
      coordinates(h.Z2.ambient_dim, h.B2.basis, h.representatives, flatten(c));
  QVec red(flatten(c).size());
  for (std::size_t i = 0; i < k.size(); ++i) red += k[i] * h.representatives[i];
  XCochain2 reduced = unflatten_xcochain2(x, r, red);
  doc["numbers"] = cohomology_json(h);
  doc["class_coordinates"] = rationals(k);
  doc["reduced"] = io::to_json(reduced);
  doc["witness"] = io::to_json(*witness(c - reduced));
  return {doc, 0};
}

Outcome xdeform_cmd(const Files& f) {
  CrossedModule x = load_xmod(f[0]);
  XCochain2 c = load_xcochain2(x, xmod_adjoint(x), f[1]);
  Json doc = start("xmod deform check");
  if (auto o = precheck(doc, check_crossed_module(x), "crossed module")) return *o;
  XGeneratesVerdict v = xmod_check_generates(x, c);
  doc["verdict"] = v.generates() ? "generates" : "does_not_generate";
  doc["cocycle_ok"] = v.cocycle_ok;
  doc["standalone_ok"] = v.standalone_ok;
  put_report(doc, v.coefficients);
  return {doc, v.generates() ? 0 : 1};
}

Outcome xnijenhuis_cmd(const Files& f, bool apply) {
  CrossedModule x = load_xmod(f[0]);
  XCochain1 n = io::read_xcochain1(load(f[1]), f[1] + ": $");
  if (n.N0.shape() != Shape{x.p.dim, x.p.dim} || n.N1.shape() != Shape{x.h.dim, x.h.dim})
    throw InputError(f[1] + ": candidate dims do not match the crossed module");
  Json doc = start(apply ? "xmod nijenhuis apply" : "xmod nijenhuis check");
  if (auto o = precheck(doc, check_crossed_module(x), "crossed module")) return *o;
  Report r = xmod_check_nijenhuis(x, n);
  if (!apply || !r.pass()) return verdict(doc, r);
  XCochain2 c = xmod_nijenhuis_deformation(x, n);
  doc["deformation"] = io::to_json(c);
  Report t = xmod_check_trivializing(x, c, n);
  doc["trivializing"] = t.pass();
  return verdict(doc, t);
}

Outcome xext_build_cmd(const Files& f) {
  CrossedModule x = load_xmod(f[0]);
  XModRepresentation r = load_xrep(x, f[1]);
  XCochain2 c = load_xcochain2(x, r, f[2]);
  Json doc = start("xmod ext build");
  if (auto o = precheck(doc, check_crossed_module(x), "crossed module")) return *o;
  if (auto o = precheck(doc, check_xmod_representation(x, r), "representation")) return *o;
  QVec res = xmod_d2_residual(x, r, c);
  if (!is_zero(res)) {
    doc["verdict"] = "not_cocycle";
    doc["residual_families"] = residual_families(xmod_d2_blocks(x, r), res);
    return {doc, 1};
  }
  doc["verdict"] = "pass";
  doc["result"] = io::to_json(xmod_build_extension(x, r, c));
  return {doc, 0};
}

Outcome xext_extract_cmd(const Files& f) {
  XModExtension e = load_xextension(f[0]);
  Json doc = start("xmod ext extract");
  if (auto o = precheck(doc, validate_xmod_extension(e), "extension")) return *o;
  doc["verdict"] = "pass";
  doc["representation"] = io::to_json(xmod_extract_representation(e));
  doc["cocycle"] = io::to_json(xmod_extract_cocycle(e));
  return {doc, 0};
}

Outcome xext_equiv_cmd(const Files& f) {
  XModExtension a = load_xextension(f[0]), b = load_xextension(f[1]);
  Json doc = start("xmod ext equiv");
  if (auto o = precheck(doc, validate_xmod_extension(a), "first extension")) return *o;
  if (auto o = precheck(doc, validate_xmod_extension(b), "second extension")) return *o;
  XEquivalenceResult eq = xmod_check_equivalence(a, b);
  doc["verdict"] = eq.equivalent ? "equivalent" : "inequivalent";
  if (!eq.reason.empty()) doc["reason"] = eq.reason;
  if (eq.lambda) doc["witness"] = io::to_json(*eq.lambda);
  if (eq.map) {
    doc["map"] = Json{{"F0", io::tensor_json(eq.map->first)},
                      {"F1", io::tensor_json(eq.map->second)}};
  }
  if (eq.certificate) doc["certificate"] = io::vec_json(*eq.certificate);
  return {doc, eq.equivalent ? 0 : 1};
}

Outcome semidirect_cmd(const Files& f) {
  CrossedModule x = load_xmod(f[0]);
  XModRepresentation r = load_xrep(x, f[1]);
  Json doc = start("xmod semidirect");
  if (auto o = precheck(doc, check_crossed_module(x), "crossed module")) return *o;
  if (auto o = precheck(doc, check_xmod_representation(x, r), "representation")) return *o;
  CrossedModule s = semidirect_product(x, r);
  Report rs = check_crossed_module(s);
  doc["result"] = io::to_json(s);
  return verdict(doc, rs);
}

Outcome to_strict_cmd(const Files& f) {
  CrossedModule x = load_xmod(f[0]);
  Json doc = start("xmod to-strict");
  if (auto o = precheck(doc, check_crossed_module(x), "crossed module")) return *o;
  doc["verdict"] = "pass";
  doc["result"] = io::to_json(to_strict(x));
  return {doc, 0};
}

Outcome from_strict_cmd(const Files& f) {
  TwoTermAlgebra g = load_algebra(f[0]);
  Json doc = start("xmod from-strict");
  if (auto o = precheck(doc, check_algebra(g), "algebra")) return *o;
  if (!g.l3.is_zero()) {
    doc["verdict"] = "precondition_failed";
    doc["failed_input"] = "algebra";
    doc["reason"] = "l3 is nonzero, the algebra is not strict";
    return {doc, 1};
  }
  doc["verdict"] = "pass";
  doc["result"] = io::to_json(from_strict(g));
  return {doc, 0};
}

Outcome random_cmd(bool xmod) {
  Rng rng(opts.seed);
  Json doc = start(xmod ? "random xmod" : "random algebra");
  doc["seed"] = opts.seed;
  if (xmod) {
    CrossedModule x = random_crossed_module(rng);
    doc["result"] = io::to_json(x);
    return verdict(doc, check_crossed_module(x));
  }
  TwoTermAlgebra g = random_algebra(rng);
  doc["result"] = io::to_json(g);
  return verdict(doc, check_algebra(g));
}

// ---------------------------------------------------------------- output

std::string human(const Json& doc) {
  std::ostringstream os;
  for (const auto& [key, v] : doc.items()) {
    if (key == "conditions") {
      os << "conditions:";
      for (const auto& c : v) os << ' ' << c.get<std::string>();
      os << '\n';
    } else if (key == "violations") {
      if (v.empty()) continue;
      os << "condition\ttuple\tlhs\trhs\n";
      for (const auto& x : v) {
        os << x["condition_id"].get<std::string>() << '\t' << x["basis_tuple"].dump() << '\t'
           << x["lhs_value"].dump() << '\t' << x["rhs_value"].dump() << '\n';
      }
      if (doc["violation_count"].get<std::size_t>() > v.size())
        os << "... " << doc["violation_count"].get<std::size_t>() - v.size() << " more\n";
    } else if (v.is_string()) {
      os << key << ": " << v.get<std::string>() << '\n';
    } else if (v.is_primitive()) {
      os << key << ": " << v.dump() << '\n';
    } else if (key == "numbers") {
      os << "dimZ2 = " << v["dimZ2"] << ", dimB2 = " << v["dimB2"] << ", dimH2 = " << v["dimH2"]
         << '\n';
    } else {
      os << key << ":\n" << v.dump(2) << '\n';
    }
  }
  return os.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"assoc2: associative 2-algebras, crossed modules and their cohomology"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--format", opts.format, "Report format")
      ->check(CLI::IsMember({"human", "json"}));
  app.add_option("--seed", opts.seed, "Seed for the random commands");
  app.add_option("--max-violations", opts.max_violations, "Violations listed in a report");

  Handler handler;
  Files files;
  auto leaf = [&](CLI::App* parent, const std::string& name, const std::string& desc,
                  const std::string& args, int min_args, int max_args, Handler h) {
    CLI::App* s = parent->add_subcommand(name, desc);
    s->add_option("files", files, args)->expected(min_args, max_args)->required(min_args > 0);
    s->callback([&handler, h] { handler = h; });
    return s;
  };
  auto group = [](CLI::App* parent, const std::string& name, const std::string& desc) {
    CLI::App* s = parent->add_subcommand(name, desc);
    s->require_subcommand(1);
    return s;
  };

  CLI::App* check = group(&app, "check", "Axiom checkers");
  leaf(check, "algebra", "2-algebra axioms", "ALG", 1, 1, check_algebra_cmd);
  leaf(check, "rep", "representation axioms", "ALG REP", 2, 2, check_rep_cmd);
  leaf(check, "xmod", "crossed module axioms", "XMOD", 1, 1, check_xmod_cmd);
  leaf(check, "xmod-rep", "crossed module representation", "XMOD XREP", 2, 2, check_xrep_cmd);
  leaf(check, "hom", "homomorphism conditions", "SRC TGT HOM", 3, 3, check_hom_cmd);
  leaf(check, "derivation", "homotopy derivation", "ALG DER", 2, 2, check_derivation_cmd);

  leaf(&app, "cohomology", "second cohomology (adjoint if REP omitted)", "ALG [REP]", 1, 2,
       cohomology_cmd);
  CLI::App* cocycle = group(&app, "cocycle", "2-cocycles");
  leaf(cocycle, "check", "cocycle and coboundary test", "ALG REP COCHAIN", 3, 3,
       [](const Files& f) { return cocycle_cmd(f, false); });
  leaf(cocycle, "reduce", "reduce modulo coboundaries", "ALG REP COCHAIN", 3, 3,
       [](const Files& f) { return cocycle_cmd(f, true); });
  CLI::App* deform = group(&app, "deform", "one-parameter deformations");
  leaf(deform, "check", "does the cochain generate a deformation", "ALG COCHAIN", 2, 2,
       deform_check_cmd);
  CLI::App* nij = group(&app, "nijenhuis", "Nijenhuis operators");
  leaf(nij, "check", "Nijenhuis conditions", "ALG CANDIDATE", 2, 2,
       [](const Files& f) { return nijenhuis_cmd(f, false); });
  leaf(nij, "apply", "trivial deformation of a Nijenhuis operator", "ALG CANDIDATE", 2, 2,
       [](const Files& f) { return nijenhuis_cmd(f, true); });
  CLI::App* ext = group(&app, "ext", "abelian extensions");
  leaf(ext, "build", "extension from a cocycle", "ALG REP COCHAIN", 3, 3, ext_build_cmd);
  leaf(ext, "extract", "representation and cocycle of an extension", "EXT", 1, 1,
       ext_extract_cmd);
  leaf(ext, "equiv", "equivalence of two extensions", "EXT1 EXT2", 2, 2, ext_equiv_cmd);
  CLI::App* endalg = group(&app, "endalg", "endomorphism 2-algebras");
  leaf(endalg, "build", "End(V) of a two-term complex", "COMPLEX", 1, 1, endalg_cmd);

  CLI::App* xmod = group(&app, "xmod", "crossed modules");
  leaf(xmod, "cohomology", "second cohomology (adjoint if XREP omitted)", "XMOD [XREP]", 1, 2,
       xcohomology_cmd);
  CLI::App* xcocycle = group(xmod, "cocycle", "2-cocycles");
  leaf(xcocycle, "check", "cocycle and coboundary test", "XMOD XREP COCHAIN", 3, 3,
       [](const Files& f) { return xcocycle_cmd(f, false); });
  leaf(xcocycle, "reduce", "reduce modulo coboundaries", "XMOD XREP COCHAIN", 3, 3,
       [](const Files& f) { return xcocycle_cmd(f, true); });
  CLI::App* xdeform = group(xmod, "deform", "deformations");
  leaf(xdeform, "check", "does the cochain generate a deformation", "XMOD COCHAIN", 2, 2,
       xdeform_cmd);
  CLI::App* xnij = group(xmod, "nijenhuis", "Nijenhuis operators");
  leaf(xnij, "check", "Nijenhuis conditions", "XMOD CANDIDATE", 2, 2,
       [](const Files& f) { return xnijenhuis_cmd(f, false); });
  leaf(xnij, "apply", "trivial deformation of a Nijenhuis operator", "XMOD CANDIDATE", 2, 2,
       [](const Files& f) { return xnijenhuis_cmd(f, true); });
  CLI::App* xext = group(xmod, "ext", "abelian extensions");
  leaf(xext, "build", "extension from a cocycle", "XMOD XREP COCHAIN", 3, 3, xext_build_cmd);
  leaf(xext, "extract", "representation and cocycle of an extension", "EXT", 1, 1,
       xext_extract_cmd);
  leaf(xext, "equiv", "equivalence of two extensions", "EXT1 EXT2", 2, 2, xext_equiv_cmd);
  leaf(xmod, "semidirect", "semidirect product with a representation", "XMOD XREP", 2, 2,
       semidirect_cmd);
  leaf(xmod, "to-strict", "strict 2-algebra of a crossed module", "XMOD", 1, 1, to_strict_cmd);
  leaf(xmod, "from-strict", "crossed module of a strict 2-algebra", "ALG", 1, 1,
       from_strict_cmd);

  CLI::App* rnd = group(&app, "random", "seeded random structures");
  leaf(rnd, "algebra", "random 2/2 2-algebra", "", 0, 0, [](const Files&) {
    return random_cmd(false);
  });
  leaf(rnd, "xmod", "random crossed module", "", 0, 0, [](const Files&) {
    return random_cmd(true);
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }

  Outcome out;
  try {
    out = handler(files);
  } catch (const InputError& e) {
    std::cerr << "input error: " << e.what() << '\n';
    return 2;
  } catch (const ShapeError& e) {
    std::cerr << "dimension mismatch: " << e.what() << '\n';
    return 2;
  } catch (const PreconditionError& e) {
    out.doc = Json{{"verdict", "precondition_failed"}, {"reason", e.what()}};
    out.code = 1;
  }
  if (opts.format == "json")
    std::cout << out.doc.dump(2) << '\n';
  else
    std::cout << human(out.doc);
  return out.code;
}
