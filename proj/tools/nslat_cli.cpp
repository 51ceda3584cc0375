// nslat: command-line front end. JSON in (file or stdin), JSON out.

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>

#include "nslat/characteristic.hpp"
#include "nslat/classifier.hpp"
#include "nslat/criterion.hpp"
#include "nslat/errors.hpp"
#include "nslat/json_io.hpp"
#include "nslat/riemann_roch.hpp"
#include "nslat/toric.hpp"
#include "nslat/trigonal.hpp"

using namespace nslat;

namespace {

struct Options {
  std::string input;
  bool trace = false;
  std::string svg;
  std::vector<std::string> multiplicities;
};

std::string read_input(const std::string& path) {
  if (path.empty() || path == "-") {
    return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidInput("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Json columns_to_json(const BasisChange& b) {
  Json a = Json::array();
  for (const auto& c : b.columns()) a.push_back(vector_to_json(c));
  return a;
}

Json cmd_lattice_info(const Options& o) {
  Json doc = parse_document(read_input(o.input));
  ObjectReader r(doc, "lattice-info");
  GramLattice l = lattice_from_document(r);
  r.finish();
  Json out{{"rank", l.rank()},
           {"determinant", integer_to_json(l.determinant())},
           {"signature", to_json(l.signature())},
           {"unimodular", l.is_unimodular()},
           {"even", l.is_even()}};
  if (auto t = as_trigonal(l.gram())) out["trigonal_form"] = vector_to_json(t->diag);
  if (l.rank() > 0 && l.is_unimodular()) {
    Vector w = find_characteristic(l);
    out["characteristic"] = vector_to_json(w);
    out["van_der_blij"] = van_der_blij_check(l, w);
  }
  if (l.rank() > 0 && l.signature().is_nondegenerate() && l.is_unimodular())
    out["trigonal"] = to_string(is_trigonal_lattice(l));
  return out;
}

SurfaceData read_surface(const Options& o) {
  Json doc = parse_document(read_input(o.input));
  ObjectReader r(doc, "surface document");
  SurfaceData s = surface_from_document(r);
  r.finish();
  return s;
}

Json cmd_criterion(const Options& o) { return to_json(criterion(read_surface(o))); }

Json cmd_construct(const Options& o) { return to_json(construct_witness(read_surface(o))); }

Json cmd_verify(const Options& o) {
  Json doc = parse_document(read_input(o.input));
  ObjectReader r(doc, "verify-collection");
  SurfaceData s = surface_from_document(r);
  auto classes = classes_from_json(r.required("classes"));
  r.finish();
  return to_json(verify_collection(s, classes));
}

Json cmd_normalize(const Options& o) {
  Json doc = parse_document(read_input(o.input));
  ObjectReader r(doc, "normalize-characteristic");
  if (r.has("vector")) {
    Vector x = vector_from_json(r.required("vector"), "vector");
    r.finish();
    Claim1Result res = normalize_claim1(x);
    Json out{{"normalized", vector_to_json(res.normalized)}};
    if (o.trace) {
      Json t = Json::array();
      for (const auto& s : res.transcript) t.push_back(to_json(s));
      out["transcript"] = t;
    }
    return out;
  }
  GramLattice l = lattice_from_document(r);
  Vector w = vector_from_json(r.required("omega"), "omega");
  r.finish();
  EquivalenceResult res = main_equivalence(l, w);
  Json out{{"holds", res.holds}, {"reason", res.reason}};
  if (res.which) out["case"] = to_string(*res.which);
  if (res.basis) {
    out["basis"] = columns_to_json(*res.basis);
    if (auto t = as_trigonal(change_basis(l, *res.basis).gram()))
      out["trigonal_form"] = vector_to_json(t->diag);
  }
  if (o.trace) {
    Json t = Json::array();
    for (const auto& s : res.transcript) t.push_back(to_json(s));
    out["transcript"] = t;
  }
  return out;
}

Json trace_json(const std::vector<TrigonalMove>& moves) {
  Json t = Json::array();
  for (const auto& m : moves) t.push_back(to_json(m));
  return t;
}

Json cmd_reduce(const Options& o) {
  Json doc = parse_document(read_input(o.input));
  ObjectReader r(doc, "reduce-trigonal");
  TrigonalForm form{integers_from_json(r.required("trig"), "trig")};
  const Json* omega = r.optional("omega");
  r.finish();
  if (form.size() == 0) throw InvalidInput("trig must be nonempty");
  SpecialPair s = omega ? SpecialPair(form.lattice(), vector_from_json(*omega, "omega"))
                        : SpecialPair::from_trigonal(form);
  Json out{{"omega", vector_to_json(s.omega())}};
  const Signature sig = s.lattice().signature();
  const std::size_t n = form.size();
  const bool in_scope = (sig.n_plus == 1 && sig.n_minus == n - 1) || sig.n_plus == 0;
  if (in_scope) {
    SpecialReduction red = reduce_special(s);
    out["kind"] = to_string(red.kind);
    out["basis"] = columns_to_json(red.basis);
    out["gram"] = matrix_to_json(change_basis(s.lattice(), red.basis).gram());
    out["omega_in_basis"] = vector_to_json(red.basis.to_new(s.omega()));
    if (o.trace) out["trace"] = trace_json(red.trace);
  } else if (s.lattice().is_even()) {
    EvenReduction red = reduce_even(s);
    out["kind"] = "HYPERBOLIC_SUM";
    out["m"] = red.m;
    out["basis"] = columns_to_json(red.basis);
    out["gram"] = matrix_to_json(change_basis(s.lattice(), red.basis).gram());
    out["omega_in_basis"] = vector_to_json(red.basis.to_new(s.omega()));
    if (o.trace) out["trace"] = trace_json(red.trace);
  } else {
    throw SignatureOutOfScope("odd special pair of signature (" + std::to_string(sig.n_plus) +
                              "," + std::to_string(sig.n_minus) + ") is outside the reduction");
  }
  return out;
}

Json cmd_classify(const Options& o) {
  Json doc = parse_document(read_input(o.input));
  ObjectReader r(doc, "classify");
  SurfaceDescriptor d = descriptor_from_reader(r);
  r.finish();
  return to_json(classify_pgq0(d));
}

Json cmd_dolgachev(const Options& o) {
  std::vector<Integer> p;
  for (const auto& s : o.multiplicities)
    p.push_back(integer_from_json(Json(s), "multiplicity"));
  return to_json(dolgachev_admits(p));
}

Json cmd_toric(const Options& o) {
  Json doc = parse_document(read_input(o.input));
  ObjectReader r(doc, "toric-fan");
  ToricSystem t;
  if (r.has("self_intersections")) {
    t.self_intersections = integers_from_json(r.required("self_intersections"), "self_intersections");
    r.finish();
  } else {
    SurfaceData s = surface_from_document(r);
    std::vector<Vector> divisors;
    if (const Json* d = r.optional("divisors")) {
      if (!d->is_array()) throw InvalidInput("divisors: expected an array");
      for (std::size_t i = 0; i < d->size(); ++i)
        divisors.push_back(vector_from_json((*d)[i], "divisors[" + std::to_string(i) + "]"));
    } else {
      std::vector<NumericalClass> classes;
      if (const Json* c = r.optional("classes")) {
        classes = classes_from_json(*c);
      } else {
        WitnessResult w = construct_witness(s);
        if (!w.witness) throw PreconditionViolation("no collection to build a toric system: " + w.note);
        classes = w.witness->classes;
      }
      divisors = collection_to_trigonal(s, classes).divisors;
    }
    r.finish();
    t = toric_system_from_collection(s, divisors);
  }
  Fan f = fan_from_toric_system(t);
  if (!o.svg.empty()) {
    std::ofstream svg(o.svg);
    if (!svg) throw InvalidInput("cannot write " + o.svg);
    svg << fan_svg(f, t);
  }
  return to_json(f, t);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"nslat: numerically exceptional collections from lattice data"};
  app.require_subcommand(1);
  Options o;
  using Handler = Json (*)(const Options&);
  Handler handler = nullptr;

  auto add = [&](const std::string& name, const std::string& help, Handler h, bool input) {
    CLI::App* sub = app.add_subcommand(name, help);
    if (input) sub->add_option("--input,-i", o.input, "JSON file, '-' or absent for stdin");
    sub->add_flag("--trace", o.trace, "include move transcripts");
    sub->callback([&handler, h] { handler = h; });
    return sub;
  };
  add("lattice-info", "rank, determinant, signature, parity, characteristic vector",
      cmd_lattice_info, true);
  add("criterion", "decide whether a collection of maximal length exists", cmd_criterion, true);
  add("construct-collection", "build and verify a witness collection", cmd_construct, true);
  add("verify-collection", "check exceptionality through Riemann-Roch", cmd_verify, true);
  add("normalize-characteristic", "orbit normal form or special basis", cmd_normalize, true);
  add("reduce-trigonal", "reduce a special trigonal pair to canonical form", cmd_reduce, true);
  add("classify", "decision for surfaces with p_g = q = 0", cmd_classify, true);
  CLI::App* dol = add("dolgachev", "lambda and decision for X_9(p_1,...,p_n)", cmd_dolgachev, false);
  dol->add_option("multiplicities", o.multiplicities, "p_1 ... p_n")->required();
  CLI::App* toric = add("toric-fan", "toric system and fan", cmd_toric, true);
  toric->add_option("--svg", o.svg, "write the fan as SVG");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  try {
    std::cout << dump_document(handler(o));
    return 0;
  } catch (const SearchExhausted& e) {
    std::cout << dump_document(Json{{"status", "unknown"}, {"message", e.what()}});
    std::cerr << "unknown: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const Json::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::logic_error& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  }
}
