#pragma once

// JSON encoding of the domain types. Documents carry "schema": "nslat/1"
// and objects reject keys they do not know.

#include <initializer_list>
#include <set>
#include <string>
#include <vector>

#include <json.hpp>

#include "nslat/classifier.hpp"
#include "nslat/criterion.hpp"
#include "nslat/toric.hpp"
#include "nslat/trigonal.hpp"

namespace nslat {

using Json = nlohmann::json;

inline constexpr const char* kSchema = "nslat/1";

// Parses text, checks the schema tag. Errors are InvalidInput with the
// byte offset of the problem.
Json parse_document(const std::string& text);

// Tracks which keys of an object were read.
class ObjectReader {
 public:
  ObjectReader(const Json& j, std::string what);
  bool has(const std::string& key) const;
  const Json& required(const std::string& key);
  const Json* optional(const std::string& key);
  // Throws InvalidInput naming the first unread key.
  void finish() const;

 private:
  const Json& j_;
  std::string what_;
  std::set<std::string> seen_;
};

Integer integer_from_json(const Json& j, const std::string& what);
Json integer_to_json(const Integer& x);

Vector vector_from_json(const Json& j, const std::string& what);
Json vector_to_json(const Vector& v);
std::vector<Integer> integers_from_json(const Json& j, const std::string& what);

Matrix matrix_from_json(const Json& j, const std::string& what);
Json matrix_to_json(const Matrix& m);

// Reads "gram", "K" and optionally "chiO" from r.
SurfaceData surface_from_reader(ObjectReader& r);
SurfaceData surface_from_json(const Json& j);
// Either a nested "surface" object or the surface fields at top level.
SurfaceData surface_from_document(ObjectReader& r);
// Either "lattice": {"gram": ...} or a top-level "gram".
GramLattice lattice_from_document(ObjectReader& r);
Json surface_to_json(const SurfaceData& s);

NumericalClass class_from_json(const Json& j);
Json class_to_json(const NumericalClass& c);
std::vector<NumericalClass> classes_from_json(const Json& j);

SurfaceDescriptor descriptor_from_reader(ObjectReader& r);

Json to_json(const Signature& s);
Json to_json(const CriterionResult& r);
Json to_json(const WitnessResult& r);
Json to_json(const CollectionCheck& c);
Json to_json(const NormalizationStep& s);
Json to_json(const TrigonalMove& m);
Json to_json(const DolgachevDecision& d);
Json to_json(const Classification& c);
Json to_json(const Fan& f, const ToricSystem& t);

// With the schema tag, keys sorted, two-space indent, trailing newline.
std::string dump_document(Json j);

}  // namespace nslat
