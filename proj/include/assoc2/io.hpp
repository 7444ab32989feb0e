#pragma once

#include <string>

#include <json.hpp>

#include "assoc2/ext2.hpp"
#include "assoc2/deform2.hpp"
#include "assoc2/xmod.hpp"

namespace assoc2::io {

using Json = nlohmann::ordered_json;

// Structure files: {"format_version": "1", "kind": ..., "dims": {...},
// "tensors": {name: [{"indices": [...], "value": "p/q"}, ...]}} plus
// kind-specific extras for extensions. Readers throw InputError with the
// file and JSON path of the offending value.

Json load_file(const std::string& path);
std::string kind_of(const Json& doc, const std::string& where);

Json to_json(const TwoTermAlgebra& g);
Json to_json(const Representation2& r);
Json to_json(const Cochain1& c);
Json to_json(const Cochain2& c);
Json to_json(const Homomorphism2& h);
Json to_json(const HomotopyDerivation& d);
Json to_json(const Complex2& v);
Json to_json(const NijenhuisCandidate& n);
Json to_json(const Extension2& e);
Json to_json(const CrossedModule& x);
Json to_json(const XModRepresentation& r);
Json to_json(const XCochain1& c);
Json to_json(const XCochain2& c);
Json to_json(const XModExtension& e);

TwoTermAlgebra read_algebra(const Json& doc, const std::string& where);
Representation2 read_representation(const Json& doc, const std::string& where);
Cochain1 read_cochain1(const Json& doc, const std::string& where);
Cochain2 read_cochain2(const Json& doc, const std::string& where);
Homomorphism2 read_homomorphism(const Json& doc, const std::string& where);
HomotopyDerivation read_derivation(const Json& doc, const std::string& where);
Complex2 read_complex(const Json& doc, const std::string& where);
NijenhuisCandidate read_nijenhuis(const Json& doc, const std::string& where);
Extension2 read_extension(const Json& doc, const std::string& where);
CrossedModule read_crossed_module(const Json& doc, const std::string& where);
XModRepresentation read_xmod_representation(const Json& doc, const std::string& where);
XCochain1 read_xcochain1(const Json& doc, const std::string& where);
XCochain2 read_xcochain2(const Json& doc, const std::string& where);
XModExtension read_xmod_extension(const Json& doc, const std::string& where);

// Sparse entry list of a tensor, as inside "tensors".
Json tensor_json(const Tensor<Rational>& t);

// Dense vector of rationals as an array of "p/q" strings.
Json vec_json(const QVec& v);

}  // namespace assoc2::io
