#include "assoc2/io.hpp"

#include <fstream>
#include <set>
#include <sstream>

namespace assoc2::io {

namespace {

const char* const kVersion = "1";

struct TensorSpec {
  std::string name;
  std::vector<std::string> dims;
};

struct KindSpec {
  std::string kind;
  std::vector<std::string> dims;
  std::vector<TensorSpec> tensors;
  std::vector<std::string> extras;
};

const KindSpec kAlgebra{"algebra2",
                        {"n0", "n1"},
                        {{"d", {"n1", "n0"}},
                         {"l2_00", {"n0", "n0", "n0"}},
                         {"l2_01", {"n0", "n1", "n1"}},
                         {"l2_10", {"n1", "n0", "n1"}},
                         {"l3", {"n0", "n0", "n0", "n1"}}},
                        {}};
const KindSpec kRep{"representation2",
                    {"n0", "n1", "m0", "m1"},
                    {{"partial", {"m1", "m0"}},
                     {"left0_v0", {"n0", "m0", "m0"}},
                     {"left0_v1", {"n0", "m1", "m1"}},
                     {"right0_v0", {"m0", "n0", "m0"}},
                     {"right0_v1", {"m1", "n0", "m1"}},
                     {"left1", {"n1", "m0", "m1"}},
                     {"right1", {"m0", "n1", "m1"}},
                     {"tri_l", {"n0", "n0", "m0", "m1"}},
                     {"tri_m", {"n0", "m0", "n0", "m1"}},
                     {"tri_r", {"m0", "n0", "n0", "m1"}}},
                    {}};
const KindSpec kCochain1{"cochain1",
                         {"n0", "n1", "m0", "m1"},
                         {{"phi", {"n0", "m0"}}, {"phi1", {"n1", "m1"}}, {"chi", {"n0", "n0", "m1"}}},
                         {}};
const KindSpec kCochain2{"cochain2",
                         {"n0", "n1", "m0", "m1"},
                         {{"psi", {"n1", "m0"}},
                          {"omega", {"n0", "n0", "m0"}},
                          {"mu", {"n0", "n1", "m1"}},
                          {"nu", {"n1", "n0", "m1"}},
                          {"theta", {"n0", "n0", "n0", "m1"}}},
                         {}};
const KindSpec kHom{"homomorphism2",
                    {"n0", "n1", "t0", "t1"},
                    {{"F0", {"n0", "t0"}}, {"F1", {"n1", "t1"}}, {"F2", {"n0", "n0", "t1"}}},
                    {}};
const KindSpec kDerivation{"derivation",
                           {"n0", "n1"},
                           {{"D0", {"n0", "n0"}}, {"D1", {"n1", "n1"}}, {"D2", {"n0", "n0", "n1"}}},
                           {}};
const KindSpec kComplex{"complex2", {"v0", "v1"}, {{"partial", {"v1", "v0"}}}, {}};
const KindSpec kNijenhuis{"nijenhuis",
                          {"n0", "n1"},
                          {{"N0", {"n0", "n0"}}, {"N1", {"n1", "n1"}}, {"N2", {"n0", "n0", "n1"}}},
                          {}};
const KindSpec kExtension{"extension2",
                          {"n0", "n1", "N0", "N1"},
                          {{"proj0", {"N0", "n0"}},
                           {"proj1", {"N1", "n1"}},
                           {"sigma0", {"n0", "N0"}},
                           {"sigma1", {"n1", "N1"}}},
                          {"total", "base", "sub0", "sub1"}};
const KindSpec kXmod{"crossed_module",
                     {"p", "h"},
                     {{"mul", {"p", "p", "p"}},
                      {"left", {"p", "h", "h"}},
                      {"right", {"h", "p", "h"}},
                      {"f", {"h", "p"}}},
                     {}};
const KindSpec kXrep{"xmod_representation",
                     {"p", "h", "v", "w"},
                     {{"V_left", {"p", "v", "v"}},
                      {"V_right", {"v", "p", "v"}},
                      {"W_left", {"p", "w", "w"}},
                      {"W_right", {"w", "p", "w"}},
                      {"phi", {"v", "w"}},
                      {"tr_l", {"h", "w", "v"}},
                      {"tr_r", {"w", "h", "v"}}},
                     {}};
const KindSpec kXcochain1{"xmod_cochain1",
                          {"p", "h", "v", "w"},
                          {{"N0", {"p", "w"}}, {"N1", {"h", "v"}}},
                          {}};
const KindSpec kXcochain2{"xmod_cochain",
                          {"p", "h", "v", "w"},
                          {{"psi", {"h", "w"}},
                           {"omega", {"p", "p", "w"}},
                           {"mu", {"p", "h", "v"}},
                           {"nu", {"h", "p", "v"}}},
                          {}};
const KindSpec kXextension{"xmod_extension",
                           {"p", "h", "P", "H"},
                           {{"proj_p", {"P", "p"}},
                            {"proj_h", {"H", "h"}},
                            {"sigma_p", {"p", "P"}},
                            {"sigma_h", {"h", "H"}}},
                           {"total", "base", "sub_p", "sub_h"}};

[[noreturn]] void fail(const std::string& where, const std::string& what) {
  throw InputError(where + ": " + what);
}

using Dims = std::map<std::string, std::size_t>;
using Tensors = std::map<std::string, const Tensor<Rational>*>;

Shape shape_of(const TensorSpec& t, const Dims& d) {
  Shape s;
  for (const auto& n : t.dims) s.push_back(d.at(n));
  return s;
}

Json entries(const Tensor<Rational>& t) {
  Json out = Json::array();
  if (t.size() == 0) return out;
  for_each_index(t.shape(), [&](const Index& i) {
    const Rational& v = t.at(i);
    if (is_zero(v)) return;
    out.push_back(Json{{"indices", i}, {"value", to_string(v)}});
  });
  return out;
}

Json encode(const KindSpec& k, const Dims& dims, const Tensors& ts) {
  Json doc;
  doc["format_version"] = kVersion;
  doc["kind"] = k.kind;
  Json d = Json::object();
  for (const auto& n : k.dims) d[n] = dims.at(n);
  doc["dims"] = d;
  Json t = Json::object();
  for (const auto& spec : k.tensors) {
    const Tensor<Rational>& x = *ts.at(spec.name);
    expect_shape(x, shape_of(spec, dims), spec.name.c_str());
    t[spec.name] = entries(x);
  }
  doc["tensors"] = t;
  return doc;
}

std::size_t read_count(const Json& j, const std::string& where) {
  if (!j.is_number_integer() || j.get<long long>() < 0)
    fail(where, "expected a non-negative integer");
  return j.get<std::size_t>();
}

Tensor<Rational> read_tensor(const Json& j, const Shape& shape, const std::string& where) {
  Tensor<Rational> t(shape);
  if (!j.is_array()) fail(where, "expected an array of entries");
  std::set<Index> seen;
  for (std::size_t e = 0; e < j.size(); ++e) {
    const std::string at = where + "[" + std::to_string(e) + "]";
    const Json& ent = j[e];
    if (!ent.is_object()) fail(at, "expected an object with indices and value");
    for (const auto& [key, _] : ent.items())
      if (key != "indices" && key != "value") fail(at, "unknown key \"" + key + "\"");
    if (!ent.contains("indices") || !ent["indices"].is_array())
      fail(at + ".indices", "missing or not an array");
    const Json& idx = ent["indices"];
    if (idx.size() != shape.size())
      fail(at + ".indices", "expected " + std::to_string(shape.size()) + " indices, got " +
                                std::to_string(idx.size()));
    Index i;
    for (std::size_t k = 0; k < idx.size(); ++k) {
      std::size_t v = read_count(idx[k], at + ".indices[" + std::to_string(k) + "]");
      if (v >= shape[k])
        fail(at + ".indices[" + std::to_string(k) + "]",
             "index " + std::to_string(v) + " out of range (dimension " + std::to_string(shape[k]) +
                 ")");
      i.push_back(v);
    }
    if (!seen.insert(i).second) fail(at + ".indices", "duplicate index tuple");
    if (!ent.contains("value") || !ent["value"].is_string())
      fail(at + ".value", "missing or not a \"p/q\" string");
    try {
      t.at(i) = parse_rational(ent["value"].get<std::string>());
    } catch (const InputError& e) {
      fail(at + ".value", e.what());
    }
  }
  return t;
}

struct Decoded {
  Dims dims;
  std::map<std::string, Tensor<Rational>> tensors;
};

Decoded decode(const Json& doc, const KindSpec& k, const std::string& where) {
  if (!doc.is_object()) fail(where, "expected a JSON object");
  std::set<std::string> allowed = {"format_version", "kind", "dims", "tensors"};
  allowed.insert(k.extras.begin(), k.extras.end());
  for (const auto& [key, _] : doc.items())
    if (!allowed.count(key)) fail(where, "unknown key \"" + key + "\"");
  if (!doc.contains("format_version") || doc["format_version"] != kVersion)
    fail(where + ".format_version", std::string("expected \"") + kVersion + "\"");
  const std::string kind = kind_of(doc, where);
  if (kind != k.kind) fail(where + ".kind", "expected \"" + k.kind + "\", got \"" + kind + "\"");
  Decoded out;
  if (!doc.contains("dims") || !doc["dims"].is_object()) fail(where + ".dims", "missing");
  const Json& dims = doc["dims"];
  for (const auto& [key, _] : dims.items())
    if (std::find(k.dims.begin(), k.dims.end(), key) == k.dims.end())
      fail(where + ".dims", "unknown dimension \"" + key + "\"");
  for (const auto& n : k.dims) {
    if (!dims.contains(n)) fail(where + ".dims", "missing \"" + n + "\"");
    out.dims[n] = read_count(dims[n], where + ".dims." + n);
  }
  Json tensors = doc.contains("tensors") ? doc["tensors"] : Json::object();
  if (!tensors.is_object()) fail(where + ".tensors", "expected an object");
  for (const auto& [key, _] : tensors.items()) {
    bool known = false;
    for (const auto& s : k.tensors) known = known || s.name == key;
    if (!known) fail(where + ".tensors", "unknown tensor \"" + key + "\"");
  }
  for (const auto& s : k.tensors) {
    const Shape shape = shape_of(s, out.dims);
    out.tensors[s.name] = tensors.contains(s.name)
                              ? read_tensor(tensors[s.name], shape, where + ".tensors." + s.name)
                              : Tensor<Rational>(shape);
  }
  return out;
}

std::vector<std::size_t> read_index_set(const Json& doc, const std::string& key, std::size_t bound,
                                        std::size_t count, const std::string& where) {
  const std::string at = where + "." + key;
  if (!doc.contains(key) || !doc[key].is_array()) fail(at, "missing or not an array");
  std::vector<std::size_t> out;
  std::set<std::size_t> seen;
  for (std::size_t i = 0; i < doc[key].size(); ++i) {
    std::size_t v = read_count(doc[key][i], at + "[" + std::to_string(i) + "]");
    if (v >= bound) fail(at + "[" + std::to_string(i) + "]", "index out of range");
    if (!seen.insert(v).second) fail(at + "[" + std::to_string(i) + "]", "duplicate index");
    out.push_back(v);
  }
  if (out.size() != count)
    fail(at, "expected " + std::to_string(count) + " indices (total minus base dimension)");
  return out;
}

const Json& sub_doc(const Json& doc, const std::string& key, const std::string& where) {
  if (!doc.contains(key)) fail(where, "missing \"" + key + "\"");
  return doc[key];
}

}  // namespace

Json load_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError(path + ": cannot open file");
  std::stringstream ss;
  ss << in.rdbuf();
  try {
    return Json::parse(ss.str());
  } catch (const Json::parse_error& e) {
    throw InputError(path + ": " + e.what());
  }
}

std::string kind_of(const Json& doc, const std::string& where) {
  if (!doc.is_object() || !doc.contains("kind") || !doc["kind"].is_string())
    fail(where + ".kind", "missing or not a string");
  return doc["kind"].get<std::string>();
}

Json vec_json(const QVec& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(to_string(x));
  return out;
}

Json tensor_json(const Tensor<Rational>& t) { return entries(t); }

Json to_json(const TwoTermAlgebra& g) {
  g.validate();
  return encode(kAlgebra, {{"n0", g.n0}, {"n1", g.n1}},
                {{"d", &g.d}, {"l2_00", &g.l2_00}, {"l2_01", &g.l2_01}, {"l2_10", &g.l2_10},
                 {"l3", &g.l3}});
}

TwoTermAlgebra read_algebra(const Json& doc, const std::string& where) {
  Decoded d = decode(doc, kAlgebra, where);
  TwoTermAlgebra g(d.dims["n0"], d.dims["n1"]);
  g.d = d.tensors["d"];
  g.l2_00 = d.tensors["l2_00"];
  g.l2_01 = d.tensors["l2_01"];
  g.l2_10 = d.tensors["l2_10"];
  g.l3 = d.tensors["l3"];
  return g;
}

Json to_json(const Representation2& r) {
  r.validate();
  return encode(kRep, {{"n0", r.n0}, {"n1", r.n1}, {"m0", r.m0}, {"m1", r.m1}},
                {{"partial", &r.partial},
                 {"left0_v0", &r.left0_v0},
                 {"left0_v1", &r.left0_v1},
                 {"right0_v0", &r.right0_v0},
                 {"right0_v1", &r.right0_v1},
                 {"left1", &r.left1},
                 {"right1", &r.right1},
                 {"tri_l", &r.tri_l},
                 {"tri_m", &r.tri_m},
                 {"tri_r", &r.tri_r}});
}

Representation2 read_representation(const Json& doc, const std::string& where) {
  Decoded d = decode(doc, kRep, where);
  Representation2 r(d.dims["n0"], d.dims["n1"], d.dims["m0"], d.dims["m1"]);
  r.partial = d.tensors["partial"];
  r.left0_v0 = d.tensors["left0_v0"];
  r.left0_v1 = d.tensors["left0_v1"];
  r.right0_v0 = d.tensors["right0_v0"];
  r.right0_v1 = d.tensors["right0_v1"];
  r.left1 = d.tensors["left1"];
  r.right1 = d.tensors["right1"];
  r.tri_l = d.tensors["tri_l"];
  r.tri_m = d.tensors["tri_m"];
  r.tri_r = d.tensors["tri_r"];
  return r;
}

Json to_json(const Cochain1& c) {
  if (c.phi.rank() != 2 || c.phi1.rank() != 2) throw ShapeError("cochain1: malformed");
  Dims d{{"n0", c.phi.dim(0)}, {"n1", c.phi1.dim(0)}, {"m0", c.phi.dim(1)}, {"m1", c.phi1.dim(1)}};
  return encode(kCochain1, d, {{"phi", &c.phi}, {"phi1", &c.phi1}, {"chi", &c.chi}});
}

Cochain1 read_cochain1(const Json& doc, const std::string& where) {
  Decoded d = decode(doc, kCochain1, where);
  Cochain1 c;
  c.phi = d.tensors["phi"];
  c.phi1 = d.tensors["phi1"];
  c.chi = d.tensors["chi"];
  return c;
}

Json to_json(const Cochain2& c) {
  if (c.mu.rank() != 3 || c.psi.rank() != 2) throw ShapeError("cochain2: malformed");
  Dims d{{"n0", c.mu.dim(0)}, {"n1", c.mu.dim(1)}, {"m0", c.psi.dim(1)}, {"m1", c.mu.dim(2)}};
  return encode(kCochain2, d,
                {{"psi", &c.psi}, {"omega", &c.omega}, {"mu", &c.mu}, {"nu", &c.nu},
                 {"theta", &c.theta}});
}

Cochain2 read_cochain2(const Json& doc, const std::string& where) {
  Decoded d = decode(doc, kCochain2, where);
  Cochain2 c;
  c.psi = d.tensors["psi"];
  c.omega = d.tensors["omega"];
  c.mu = d.tensors["mu"];
  c.nu = d.tensors["nu"];
  c.theta = d.tensors["theta"];
  return c;
}

Json to_json(const Homomorphism2& h) {
  if (h.F0.rank() != 2 || h.F1.rank() != 2) throw ShapeError("homomorphism2: malformed");
  Dims d{{"n0", h.F0.dim(0)}, {"n1", h.F1.dim(0)}, {"t0", h.F0.dim(1)}, {"t1", h.F1.dim(1)}};
  return encode(kHom, d, {{"F0", &h.F0}, {"F1", &h.F1}, {"F2", &h.F2}});
}

Homomorphism2 read_homomorphism(const Json& doc, const std::string& where) {
  Decoded d = decode(doc, kHom, where);
  return {d.tensors["F0"], d.tensors["F1"], d.tensors["F2"]};
}

Json to_json(const HomotopyDerivation& der) {
  if (der.D0.rank() != 2 || der.D1.rank() != 2) throw ShapeError("derivation: malformed");
  return encode(kDerivation, {{"n0", der.D0.dim(0)}, {"n1", der.D1.dim(0)}},
                {{"D0", &der.D0}, {"D1", &der.D1}, {"D2", &der.D2}});
}

HomotopyDerivation read_derivation(const Json& doc, const std::string& where) {
  Decoded d = decode(doc, kDerivation, where);
  return {d.tensors["D0"], d.tensors["D1"], d.tensors["D2"]};
}

Json to_json(const Complex2& v) {
  return encode(kComplex, {{"v0", v.v0}, {"v1", v.v1}}, {{"partial", &v.partial}});
}

Complex2 read_complex(const Json& doc, const std::string& where) {
  Decoded d = decode(doc, kComplex, where);
  Complex2 v(d.dims["v0"], d.dims["v1"]);
  v.partial = d.tensors["partial"];
  return v;
}

Json to_json(const NijenhuisCandidate& n) {
  if (n.N0.rank() != 2 || n.N1.rank() != 2) throw ShapeError("nijenhuis: malformed");
  return encode(kNijenhuis, {{"n0", n.N0.dim(0)}, {"n1", n.N1.dim(0)}},
                {{"N0", &n.N0}, {"N1", &n.N1}, {"N2", &n.N2}});
}

NijenhuisCandidate read_nijenhuis(const Json& doc, const std::string& where) {
  Decoded d = decode(doc, kNijenhuis, where);
  return {d.tensors["N0"], d.tensors["N1"], d.tensors["N2"]};
}

Json to_json(const Extension2& e) {
  Dims d{{"n0", e.base.n0}, {"n1", e.base.n1}, {"N0", e.total.n0}, {"N1", e.total.n1}};
  Json doc = encode(kExtension, d,
                    {{"proj0", &e.proj0}, {"proj1", &e.proj1}, {"sigma0", &e.sigma0},
                     {"sigma1", &e.sigma1}});
  doc["total"] = to_json(e.total);
  doc["base"] = to_json(e.base);
  doc["sub0"] = e.sub0;
  doc["sub1"] = e.sub1;
  return doc;
}

Extension2 read_extension(const Json& doc, const std::string& where) {
  Decoded d = decode(doc, kExtension, where);
  Extension2 e;
  e.total = read_algebra(sub_doc(doc, "total", where), where + ".total");
  e.base = read_algebra(sub_doc(doc, "base", where), where + ".base");
  if (e.total.n0 != d.dims["N0"] || e.total.n1 != d.dims["N1"])
    fail(where + ".total.dims", "does not match dims N0/N1");
  if (e.base.n0 != d.dims["n0"] || e.base.n1 != d.dims["n1"])
    fail(where + ".base.dims", "does not match dims n0/n1");
  if (e.base.n0 > e.total.n0 || e.base.n1 > e.total.n1)
    fail(where + ".dims", "base is larger than total");
  e.sub0 = read_index_set(doc, "sub0", e.total.n0, e.total.n0 - e.base.n0, where);
  e.sub1 = read_index_set(doc, "sub1", e.total.n1, e.total.n1 - e.base.n1, where);
  e.proj0 = d.tensors["proj0"];
  e.proj1 = d.tensors["proj1"];
  e.sigma0 = d.tensors["sigma0"];
  e.sigma1 = d.tensors["sigma1"];
  return e;
}

Json to_json(const CrossedModule& x) {
  return encode(kXmod, {{"p", x.p.dim}, {"h", x.h.dim}},
                {{"mul", &x.p.mul}, {"left", &x.h.left}, {"right", &x.h.right}, {"f", &x.f}});
}

CrossedModule read_crossed_module(const Json& doc, const std::string& where) {
  Decoded d = decode(doc, kXmod, where);
  CrossedModule x(d.dims["p"], d.dims["h"]);
  x.p.mul = d.tensors["mul"];
  x.h.left = d.tensors["left"];
  x.h.right = d.tensors["right"];
  x.f = d.tensors["f"];
  return x;
}

Json to_json(const XModRepresentation& r) {
  if (r.tr_l.rank() != 3) throw ShapeError("xmod_representation: malformed");
  Dims d{{"p", r.V.left.dim(0)}, {"h", r.tr_l.dim(0)}, {"v", r.V.dim}, {"w", r.W.dim}};
  return encode(kXrep, d,
                {{"V_left", &r.V.left},
                 {"V_right", &r.V.right},
                 {"W_left", &r.W.left},
                 {"W_right", &r.W.right},
                 {"phi", &r.phi},
                 {"tr_l", &r.tr_l},
                 {"tr_r", &r.tr_r}});
}

XModRepresentation read_xmod_representation(const Json& doc, const std::string& where) {
  Decoded d = decode(doc, kXrep, where);
  XModRepresentation r(d.dims["p"], d.dims["h"], d.dims["v"], d.dims["w"]);
  r.V.left = d.tensors["V_left"];
  r.V.right = d.tensors["V_right"];
  r.W.left = d.tensors["W_left"];
  r.W.right = d.tensors["W_right"];
  r.phi = d.tensors["phi"];
  r.tr_l = d.tensors["tr_l"];
  r.tr_r = d.tensors["tr_r"];
  return r;
}

Json to_json(const XCochain1& c) {
  if (c.N0.rank() != 2 || c.N1.rank() != 2) throw ShapeError("xmod_cochain1: malformed");
  Dims d{{"p", c.N0.dim(0)}, {"h", c.N1.dim(0)}, {"v", c.N1.dim(1)}, {"w", c.N0.dim(1)}};
  return encode(kXcochain1, d, {{"N0", &c.N0}, {"N1", &c.N1}});
}

XCochain1 read_xcochain1(const Json& doc, const std::string& where) {
  Decoded d = decode(doc, kXcochain1, where);
  return {d.tensors["N0"], d.tensors["N1"]};
}

Json to_json(const XCochain2& c) {
  if (c.mu.rank() != 3 || c.psi.rank() != 2) throw ShapeError("xmod_cochain: malformed");
  Dims d{{"p", c.mu.dim(0)}, {"h", c.mu.dim(1)}, {"v", c.mu.dim(2)}, {"w", c.psi.dim(1)}};
  return encode(kXcochain2, d, {{"psi", &c.psi}, {"omega", &c.omega}, {"mu", &c.mu}, {"nu", &c.nu}});
}

XCochain2 read_xcochain2(const Json& doc, const std::string& where) {
  Decoded d = decode(doc, kXcochain2, where);
  XCochain2 c;
  c.psi = d.tensors["psi"];
  c.omega = d.tensors["omega"];
  c.mu = d.tensors["mu"];
  c.nu = d.tensors["nu"];
  return c;
}

Json to_json(const XModExtension& e) {
  Dims d{{"p", e.base.p.dim}, {"h", e.base.h.dim}, {"P", e.total.p.dim}, {"H", e.total.h.dim}};
  Json doc = encode(kXextension, d,
                    {{"proj_p", &e.proj_p}, {"proj_h", &e.proj_h}, {"sigma_p", &e.sigma_p},
                     {"sigma_h", &e.sigma_h}});
  doc["total"] = to_json(e.total);
  doc["base"] = to_json(e.base);
  doc["sub_p"] = e.sub_p;
  doc["sub_h"] = e.sub_h;
  return doc;
}

XModExtension read_xmod_extension(const Json& doc, const std::string& where) {
  Decoded d = decode(doc, kXextension, where);
  XModExtension e;
  e.total = read_crossed_module(sub_doc(doc, "total", where), where + ".total");
  e.base = read_crossed_module(sub_doc(doc, "base", where), where + ".base");
  if (e.total.p.dim != d.dims["P"] || e.total.h.dim != d.dims["H"])
    fail(where + ".total.dims", "does not match dims P/H");
  if (e.base.p.dim != d.dims["p"] || e.base.h.dim != d.dims["h"])
    fail(where + ".base.dims", "does not match dims p/h");
  if (e.base.p.dim > e.total.p.dim || e.base.h.dim > e.total.h.dim)
    fail(where + ".dims", "base is larger than total");
  e.sub_p = read_index_set(doc, "sub_p", e.total.p.dim, e.total.p.dim - e.base.p.dim, where);
  e.sub_h = read_index_set(doc, "sub_h", e.total.h.dim, e.total.h.dim - e.base.h.dim, where);
  e.proj_p = d.tensors["proj_p"];
  e.proj_h = d.tensors["proj_h"];
  e.sigma_p = d.tensors["sigma_p"];
  e.sigma_h = d.tensors["sigma_h"];
  return e;
}

}  // namespace assoc2::io
