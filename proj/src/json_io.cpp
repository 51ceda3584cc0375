#include "nslat/json_io.hpp"

#include <limits>

#include "nslat/errors.hpp"

namespace nslat {

Json parse_document(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw InvalidInput("malformed JSON at byte " + std::to_string(e.byte) + ": " + e.what());
  }
  if (!j.is_object()) throw InvalidInput("document must be a JSON object");
  auto it = j.find("schema");
  if (it == j.end()) throw InvalidInput("missing \"schema\": \"nslat/1\"");
  if (!it->is_string() || it->get<std::string>() != kSchema)
    throw InvalidInput("unsupported schema " + it->dump());
  return j;
}

ObjectReader::ObjectReader(const Json& j, std::string what) : j_(j), what_(std::move(what)) {
  if (!j_.is_object()) throw InvalidInput(what_ + " must be an object");
  if (j_.contains("schema")) seen_.insert("schema");
}

bool ObjectReader::has(const std::string& key) const { return j_.contains(key); }

const Json& ObjectReader::required(const std::string& key) {
  auto it = j_.find(key);
  if (it == j_.end()) throw InvalidInput(what_ + ": missing field \"" + key + "\"");
  seen_.insert(key);
  return *it;
}

const Json* ObjectReader::optional(const std::string& key) {
  auto it = j_.find(key);
  if (it == j_.end()) return nullptr;
  seen_.insert(key);
  return &*it;
}

void ObjectReader::finish() const {
  for (auto it = j_.begin(); it != j_.end(); ++it)
    if (!seen_.count(it.key())) throw InvalidInput(what_ + ": unknown field \"" + it.key() + "\"");
}

Integer integer_from_json(const Json& j, const std::string& what) {
  if (j.is_number_integer()) {
    if (j.is_number_unsigned()) return Integer(std::to_string(j.get<std::uint64_t>()));
    return Integer(std::to_string(j.get<std::int64_t>()));
  }
  if (j.is_string()) {
    const std::string s = j.get<std::string>();
    std::size_t start = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
    bool ok = s.size() > start;
    for (std::size_t i = start; i < s.size(); ++i) ok = ok && s[i] >= '0' && s[i] <= '9';
    if (!ok) throw InvalidInput(what + ": \"" + s + "\" is not an integer");
    return Integer(s[0] == '+' ? s.substr(1) : s);
  }
  throw InvalidInput(what + ": expected an integer, got " + j.dump());
}

Json integer_to_json(const Integer& x) {
  if (mpz_fits_slong_p(x.get_mpz_t())) return Json(static_cast<std::int64_t>(x.get_si()));
  return Json(x.get_str());
}

std::vector<Integer> integers_from_json(const Json& j, const std::string& what) {
  if (!j.is_array()) throw InvalidInput(what + ": expected an array");
  std::vector<Integer> out;
  for (std::size_t i = 0; i < j.size(); ++i)
    out.push_back(integer_from_json(j[i], what + "[" + std::to_string(i) + "]"));
  return out;
}

Vector vector_from_json(const Json& j, const std::string& what) {
  return integers_from_json(j, what);
}

Json vector_to_json(const Vector& v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(integer_to_json(x));
  return a;
}

Matrix matrix_from_json(const Json& j, const std::string& what) {
  if (!j.is_array()) throw InvalidInput(what + ": expected an array of rows");
  std::vector<Vector> rows;
  for (std::size_t i = 0; i < j.size(); ++i)
    rows.push_back(vector_from_json(j[i], what + "[" + std::to_string(i) + "]"));
  for (const auto& r : rows)
    if (r.size() != rows.size()) throw DimensionMismatch(what + ": matrix is not square");
  return Matrix::from_rows(rows);
}

Json matrix_to_json(const Matrix& m) {
  Json a = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) a.push_back(vector_to_json(m.row(i)));
  return a;
}

SurfaceData surface_from_reader(ObjectReader& r) {
  SurfaceData s;
  s.ns = GramLattice(matrix_from_json(r.required("gram"), "gram"));
  s.K = vector_from_json(r.required("K"), "K");
  if (const Json* c = r.optional("chiO")) s.chiO = integer_from_json(*c, "chiO");
  s.validate();
  return s;
}

SurfaceData surface_from_json(const Json& j) {
  ObjectReader r(j, "surface");
  SurfaceData s = surface_from_reader(r);
  r.finish();
  return s;
}

SurfaceData surface_from_document(ObjectReader& r) {
  if (r.has("surface")) return surface_from_json(r.required("surface"));
  return surface_from_reader(r);
}

GramLattice lattice_from_document(ObjectReader& r) {
  if (r.has("lattice")) {
    ObjectReader inner(r.required("lattice"), "lattice");
    GramLattice l(matrix_from_json(inner.required("gram"), "lattice.gram"));
    inner.finish();
    return l;
  }
  return GramLattice(matrix_from_json(r.required("gram"), "gram"));
}

Json surface_to_json(const SurfaceData& s) {
  return Json{{"gram", matrix_to_json(s.ns.gram())},
              {"K", vector_to_json(s.K)},
              {"chiO", integer_to_json(s.chiO)}};
}

NumericalClass class_from_json(const Json& j) {
  if (j.is_array()) return NumericalClass::line(vector_from_json(j, "class"));
  ObjectReader r(j, "class");
  NumericalClass c;
  c.rank = 1;
  c.c2 = 0;
  if (const Json* x = r.optional("rank")) c.rank = integer_from_json(*x, "rank");
  c.c1 = vector_from_json(r.required("c1"), "c1");
  if (const Json* x = r.optional("c2")) c.c2 = integer_from_json(*x, "c2");
  r.finish();
  return c;
}

Json class_to_json(const NumericalClass& c) {
  return Json{{"rank", integer_to_json(c.rank)},
              {"c1", vector_to_json(c.c1)},
              {"c2", integer_to_json(c.c2)}};
}

std::vector<NumericalClass> classes_from_json(const Json& j) {
  if (!j.is_array()) throw InvalidInput("classes: expected an array");
  std::vector<NumericalClass> out;
  for (const auto& c : j) out.push_back(class_from_json(c));
  return out;
}

SurfaceDescriptor descriptor_from_reader(ObjectReader& r) {
  SurfaceDescriptor d;
  const Json& m = r.required("minimal");
  if (!m.is_boolean()) throw InvalidInput("minimal: expected a boolean");
  d.minimal = m.get<bool>();
  const Json& k = r.required("kodaira");
  if (!k.is_string()) throw InvalidInput("kodaira: expected a string");
  d.kodaira = kodaira_from_string(k.get<std::string>());
  if (const Json* p = r.optional("multiplicities"))
    d.multiplicities = integers_from_json(*p, "multiplicities");
  if (const Json* x = r.optional("K2")) d.K2 = integer_from_json(*x, "K2");
  d.validate();
  return d;
}

Json to_json(const Signature& s) {
  return Json{{"n_plus", s.n_plus}, {"n_minus", s.n_minus}, {"n_zero", s.n_zero}};
}

Json to_json(const CriterionResult& r) {
  Json j{{"admits", r.admits}, {"case", to_string(r.which)}, {"reason", r.reason}};
  if (r.obstruction) j["obstruction"] = to_string(*r.obstruction);
  return j;
}

Json to_json(const CollectionCheck& c) {
  Json j{{"exceptional", c.exceptional}, {"chi", matrix_to_json(c.chi)}, {"message", c.message}};
  if (c.failure) j["failure"] = Json::array({c.failure->first, c.failure->second});
  return j;
}

Json to_json(const WitnessResult& r) {
  Json j{{"decision", to_json(r.decision)}, {"note", r.note}};
  if (r.witness) {
    Json classes = Json::array();
    for (const auto& c : r.witness->classes) classes.push_back(class_to_json(c));
    j["classes"] = classes;
    j["certificate"] = to_json(verify_collection(r.witness->surface, r.witness->classes));
  }
  return j;
}

Json to_json(const NormalizationStep& s) {
  return Json{{"kind", s.kind}, {"value", vector_to_json(s.value)}};
}

Json to_json(const TrigonalMove& m) {
  return Json{{"kind", m.kind},
              {"index", m.index},
              {"x", integer_to_json(m.x)},
              {"before", vector_to_json(m.before)},
              {"after", vector_to_json(m.after)}};
}

Json to_json(const DolgachevDecision& d) {
  Json j{{"lambda", integer_to_json(d.lambda)}, {"admits", d.admits}, {"listed", d.listed}};
  if (!d.note.empty()) j["note"] = d.note;
  return j;
}

Json to_json(const Classification& c) {
  return Json{{"admits", c.admits}, {"justification", c.justification}};
}

Json to_json(const Fan& f, const ToricSystem& t) {
  Json rays = Json::array();
  for (const auto& r : f.rays)
    rays.push_back(Json::array({integer_to_json(r[0]), integer_to_json(r[1])}));
  return Json{{"rays", rays},
              {"self_intersections", vector_to_json(t.self_intersections)},
              {"winding_number", f.winding_number}};
}

std::string dump_document(Json j) {
  j["schema"] = kSchema;
  return j.dump(2) + "\n";
}

}  // namespace nslat
