#include "nslat/toric.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "nslat/errors.hpp"

namespace nslat {

bool ToricSystem::sum_rule_holds() const {
  Integer sum = 0;
  for (const auto& a : self_intersections) sum += a;
  return sum == 12 - 3 * static_cast<long>(size());
}

ToricSystem toric_system_from_collection(const SurfaceData& s, const std::vector<Vector>& d) {
  s.validate();
  const GramLattice& l = s.ns;
  const std::size_t n = l.rank();
  if (d.size() != n + 1)
    throw DimensionMismatch("expected " + std::to_string(n + 1) + " divisors, got " +
                            std::to_string(d.size()));
  for (const auto& v : d)
    if (v.size() != n) throw DimensionMismatch("divisor has wrong length");
  Vector d0 = -s.K;
  for (const auto& v : d) d0 = d0 - v;
  std::vector<Vector> cyc = d;
  cyc.push_back(d0);
  const std::size_t m = cyc.size();
  // Names follow the cycle (D_1, ..., D_{n+1}, D_0).
  auto name = [&](std::size_t i) { return "D_" + std::to_string(i + 1 == m ? 0 : i + 1); };
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j) {
      const bool adjacent = j == i + 1 || (i == 0 && j == m - 1);
      Integer want = adjacent ? 1 : 0;
      // For three divisors every pair is adjacent.
      Integer got = l.pair(cyc[i], cyc[j]);
      if (got != want)
        throw PreconditionViolation(name(i) + "." + name(j) + " = " + got.get_str() +
                                    ", expected " + want.get_str());
    }
  ToricSystem t;
  for (const auto& v : cyc) t.self_intersections.push_back(l.norm(v));
  if (!t.sum_rule_holds())
    throw PreconditionViolation("self-intersections do not sum to 12 - 3(n+2)");
  return t;
}

Integer det2(const Ray& a, const Ray& b) { return a[0] * b[1] - a[1] * b[0]; }

long winding_number(const std::vector<Ray>& rays) {
  // Signed crossings of the positive x-axis, each step taken along the
  // shorter arc; a ray on the axis counts on arrival.
  long crossings = 0;
  const std::size_t m = rays.size();
  for (std::size_t i = 0; i < m; ++i) {
    const Ray& a = rays[i];
    const Ray& b = rays[(i + 1) % m];
    const int c = sgn(det2(a, b));
    if (c > 0 && a[1] < 0 && b[1] >= 0) ++crossings;
    if (c < 0 && a[1] >= 0 && b[1] < 0) --crossings;
  }
  return crossings;
}

Fan fan_from_toric_system(const ToricSystem& t) {
  const std::size_t m = t.size();
  if (m < 3) throw PreconditionViolation("a toric system needs at least three divisors");
  if (!t.sum_rule_holds())
    throw PreconditionViolation("self-intersections do not sum to 12 - 3N");
  const auto& a = t.self_intersections;
  std::vector<Ray> v{{Integer(1), Integer(0)}, {Integer(0), Integer(1)}};
  for (std::size_t i = 1; i <= m; ++i) {
    const Ray& prev = v[i - 1];
    const Ray& cur = v[i];
    const Integer& ai = a[i % m];
    v.push_back({-prev[0] - ai * cur[0], -prev[1] - ai * cur[1]});
  }
  if (v[m] != v[0] || v[m + 1] != v[1])
    throw InvalidInput("rays do not close: v_N = (" + v[m][0].get_str() + "," +
                       v[m][1].get_str() + ")");
  Fan f;
  f.rays.assign(v.begin(), v.begin() + static_cast<long>(m));
  for (std::size_t i = 0; i < m; ++i)
    if (det2(f.rays[i], f.rays[(i + 1) % m]) != 1)
      throw std::logic_error("adjacent rays are not a basis");
  f.winding_number = winding_number(f.rays);
  if (f.winding_number != 1)
    throw InvalidInput("rays wind " + std::to_string(f.winding_number) +
                       " times around the origin");
  return f;
}

ToricVerdict verify_abstract_toric_system(const ToricSystem& t) {
  ToricVerdict out;
  if (t.size() < 3) {
    out.reason = "fewer than three divisors";
    return out;
  }
  if (!t.sum_rule_holds()) {
    out.reason = "self-intersections do not sum to 12 - 3N";
    return out;
  }
  try {
    out.fan = fan_from_toric_system(t);
  } catch (const InvalidInput& e) {
    out.reason = e.what();
    return out;
  }
  out.valid = true;
  out.reason = "closes into a smooth complete fan";
  return out;
}

std::string fan_svg(const Fan& f, const ToricSystem& t) {
  double r = 1;
  for (const auto& v : f.rays) {
    r = std::max(r, std::abs(v[0].get_d()));
    r = std::max(r, std::abs(v[1].get_d()));
  }
  const double scale = 180.0 / r;
  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"400\" height=\"400\" "
        "viewBox=\"-200 -200 400 400\">\n";
  os << "<circle cx=\"0\" cy=\"0\" r=\"3\" fill=\"black\"/>\n";
  for (std::size_t i = 0; i < f.rays.size(); ++i) {
    const double x = f.rays[i][0].get_d() * scale;
    const double y = -f.rays[i][1].get_d() * scale;
    os << "<line x1=\"0\" y1=\"0\" x2=\"" << x << "\" y2=\"" << y
       << "\" stroke=\"black\" stroke-width=\"2\"/>\n";
    os << "<text x=\"" << x * 1.05 << "\" y=\"" << y * 1.05 << "\" font-size=\"12\">v" << i
       << " (" << t.self_intersections[i].get_str() << ")</text>\n";
  }
  os << "</svg>\n";
  return os.str();
}

}  // namespace nslat
