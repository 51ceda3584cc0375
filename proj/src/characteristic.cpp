#include "nslat/characteristic.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "nslat/errors.hpp"
#include "nslat/short_vectors.hpp"
#include "nslat/trigonal.hpp"

namespace nslat {

namespace {

bool odd(const Integer& x) { return mpz_odd_p(x.get_mpz_t()) != 0; }

void require_length(const GramLattice& lattice, const Vector& x, const char* what) {
  if (x.size() != lattice.rank())
    throw DimensionMismatch(std::string(what) + " has length " + std::to_string(x.size()) +
                            ", lattice rank is " + std::to_string(lattice.rank()));
}

}  // namespace

bool is_characteristic(const GramLattice& lattice, const Vector& w) {
  require_length(lattice, w, "vector");
  Vector gw = lattice.pairings(w);
  for (std::size_t i = 0; i < gw.size(); ++i)
    if (odd(gw[i] - lattice.entry(i, i))) return false;
  return true;
}

Vector find_characteristic(const GramLattice& lattice) {
  if (!lattice.is_unimodular())
    throw NotUnimodular("characteristic vector requested in a lattice of determinant " +
                        lattice.determinant().get_str());
  const std::size_t n = lattice.rank();
  // Gauss-Jordan over GF(2) on [G | diag(G)].
  std::vector<std::vector<int>> m(n, std::vector<int>(n + 1));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) m[i][j] = odd(lattice.entry(i, j)) ? 1 : 0;
    m[i][n] = odd(lattice.entry(i, i)) ? 1 : 0;
  }
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && m[p][c] == 0) ++p;
    if (p == n) throw NotUnimodular("Gram matrix is singular modulo 2");
    std::swap(m[p], m[c]);
    for (std::size_t r = 0; r < n; ++r)
      if (r != c && m[r][c])
        for (std::size_t t = c; t <= n; ++t) m[r][t] ^= m[c][t];
  }
  Vector w(n);
  for (std::size_t i = 0; i < n; ++i) w[i] = m[i][n];
  if (!is_characteristic(lattice, w)) throw std::logic_error("mod-2 solve gave a wrong vector");
  return w;
}

bool van_der_blij_check(const GramLattice& lattice, const Vector& w) {
  if (!lattice.is_unimodular()) throw NotUnimodular("lattice is not unimodular");
  if (!is_characteristic(lattice, w)) throw PreconditionViolation("vector is not characteristic");
  const Signature sig = lattice.signature();
  Integer diff = lattice.norm(w) - (Integer(static_cast<unsigned long>(sig.n_plus)) -
                                    Integer(static_cast<unsigned long>(sig.n_minus)));
  return mpz_divisible_ui_p(diff.get_mpz_t(), 8) != 0;
}

Vector reflect(const GramLattice& lattice, const Vector& v, const Vector& x) {
  require_length(lattice, v, "mirror");
  require_length(lattice, x, "vector");
  const Integer vv = lattice.norm(v);
  if (vv == 0) throw PreconditionViolation("reflection in an isotropic vector");
  Integer num = 2 * lattice.pair(x, v);
  if (!mpz_divisible_p(num.get_mpz_t(), vv.get_mpz_t()))
    throw PreconditionViolation("reflection is not integral: 2 b(x,v) = " + num.get_str() +
                                ", b(v,v) = " + vv.get_str());
  Integer c = num / vv;
  return x - c * v;
}

namespace {

Integer hyperbolic_norm(const Vector& x) {
  Integer s = x.empty() ? Integer(0) : x[0] * x[0];
  for (std::size_t i = 1; i < x.size(); ++i) s -= x[i] * x[i];
  return s;
}

}  // namespace

Claim1Result normalize_claim1(const Vector& x0) {
  const std::size_t n = x0.size();
  if (n == 0) throw InvalidInput("empty vector");
  const Integer norm = hyperbolic_norm(x0);
  if (norm < 0) throw PreconditionViolation("normalisation needs nonnegative norm, got " + norm.get_str());

  Claim1Result out{x0, {}, Matrix::identity(n)};
  Vector& x = out.normalized;
  Matrix& a = out.isometry;
  const std::size_t width = n >= 4 ? 4 : n;  // size of the mirror support

  for (Integer previous_top = x[0] < 0 ? Integer(-x[0]) : x[0];;) {
    bool flipped = false;
    for (std::size_t i = 0; i < n; ++i)
      if (x[i] < 0) {
        x[i] = -x[i];
        for (std::size_t j = 0; j < n; ++j) a(i, j) = -a(i, j);
        flipped = true;
      }
    if (flipped) out.transcript.push_back({"sign", x});

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin() + 1, order.end(),
                     [&](std::size_t i, std::size_t j) { return x[i] > x[j]; });
    if (!std::is_sorted(order.begin(), order.end())) {
      Vector y(n);
      Matrix b(n, n);
      for (std::size_t i = 0; i < n; ++i) {
        y[i] = x[order[i]];
        for (std::size_t j = 0; j < n; ++j) b(i, j) = a(order[i], j);
      }
      x = std::move(y);
      a = std::move(b);
      out.transcript.push_back({"sort", x});
    }

    if (n < 3) break;
    Integer tail = 0;
    for (std::size_t i = 1; i < width; ++i) tail += x[i];
    if (tail <= x[0]) break;

    // v = e_1 + ... + e_width, b(x, v) = x_1 - x_2 - ... and
    // R_v(x) = x - 2 b(x,v)/b(v,v) v with b(v,v) = 2 - width, so every row
    // in the support gains scale * (x_1 - x_2 - ...).
    const long vv = 2 - static_cast<long>(width);
    const long scale = -2 / vv;  // 1 for width 4, 2 for width 3
    Integer bx = x[0];
    for (std::size_t i = 1; i < width; ++i) bx -= x[i];
    for (std::size_t i = 0; i < width; ++i) x[i] += scale * bx;
    for (std::size_t j = 0; j < n; ++j) {
      Integer ba = a(0, j);
      for (std::size_t i = 1; i < width; ++i) ba -= a(i, j);
      for (std::size_t i = 0; i < width; ++i) a(i, j) += scale * ba;
    }
    out.transcript.push_back({"reflect", x});
    Integer top = x[0] < 0 ? Integer(-x[0]) : x[0];
    if (top >= previous_top) throw std::logic_error("reflection did not decrease x_1");
    previous_top = top;
  }

  if (hyperbolic_norm(x) != norm) throw std::logic_error("normalisation changed the norm");
  if (a * x0 != x) throw std::logic_error("normalisation isometry out of sync");
  return out;
}

Vector canonical_characteristic(std::size_t n) {
  if (n == 0) throw InvalidInput("rank must be positive");
  Vector w(n, Integer(1));
  w[0] = 3;
  return w;
}

namespace {

Matrix majorant(const GramLattice& lattice, const Vector& h) {
  const std::size_t n = lattice.rank();
  Vector gh = lattice.pairings(h);
  Integer hh = lattice.norm(h);
  Matrix q(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) q(i, j) = 2 * gh[i] * gh[j] - hh * lattice.entry(i, j);
  return q;
}

// An integral vector of positive norm, from an exact congruence
// diagonalisation over Q. Requires n_plus > 0.
Vector positive_vector(const GramLattice& lattice) {
  const std::size_t n = lattice.rank();
  for (std::size_t i = 0; i < n; ++i)
    if (lattice.entry(i, i) > 0) return unit_vector(n, i);
  // Rows of t are rational vectors; a = t G t^T is updated alongside.
  std::vector<std::vector<Rational>> t(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i) t[i][i] = 1;
  auto form = [&](const std::vector<Rational>& x, const std::vector<Rational>& y) {
    Rational r = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (x[i] != 0 && y[j] != 0) r += x[i] * Rational(lattice.entry(i, j)) * y[j];
    return r;
  };
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = n;
    for (std::size_t i = k; i < n && p == n; ++i)
      if (form(t[i], t[i]) != 0) p = i;
    if (p == n) {
      for (std::size_t i = k; i < n && p == n; ++i)
        for (std::size_t j = i + 1; j < n && p == n; ++j)
          if (form(t[i], t[j]) != 0) {
            for (std::size_t c = 0; c < n; ++c) t[i][c] += t[j][c];
            p = i;
          }
      if (p == n) break;  // the rest is radical
    }
    std::swap(t[k], t[p]);
    const Rational akk = form(t[k], t[k]);
    if (akk > 0) {
      Integer den = 1;
      for (const auto& c : t[k]) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
      Vector v(n);
      for (std::size_t c = 0; c < n; ++c) {
        Rational x = t[k][c] * Rational(den);
        v[c] = x.get_num();
      }
      return v;
    }
    for (std::size_t j = k + 1; j < n; ++j) {
      const Rational f = form(t[k], t[j]) / akk;
      if (f == 0) continue;
      for (std::size_t c = 0; c < n; ++c) t[j][c] -= f * t[k][c];
    }
  }
  throw std::logic_error("no positive vector in a form with n_plus > 0");
}

}  // namespace

namespace {

BasisChange search_diagonal(const GramLattice& lattice, const DiagonalizationLimits& limits) {
  const std::size_t n = lattice.rank();
  const Vector h = positive_vector(lattice);
  const Matrix qh = majorant(lattice, h);
  const Integer hh = lattice.norm(h);
  const EnumerationLimits box{limits.box, limits.node_budget};

  std::optional<BasisChange> found;
  // Every vector of the box has majorant value at most box^2 sum |q_ij|.
  Integer ceiling = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) ceiling += abs(qh(i, j));
  ceiling *= Integer(limits.box) * limits.box;
  // Norm-one vectors e satisfy 2 (h.e)^2 - h^2 >= h^2; widen the window
  // until a suitable e turns up or the box is exhausted.
  Integer low = -1;
  for (Integer bound = hh;; bound *= 4) {
    std::vector<std::pair<Integer, Vector>> candidates;
    auto status = enumerate_short_vectors(qh, bound, box, [&](const Vector& e, const Integer& v) {
      if (v <= low || lattice.norm(e) != 1) return true;
      // One of each pair +-e: first nonzero coordinate positive.
      for (const auto& c : e)
        if (c != 0) {
          if (c < 0) return true;
          break;
        }
      candidates.emplace_back(v, e);
      return true;
    });
    if (status == EnumerationStatus::BudgetExhausted)
      throw SearchExhausted("node budget exhausted while searching norm-one vectors");
    std::stable_sort(candidates.begin(), candidates.end(),
                     [](const auto& x, const auto& y) { return x.first < y.first; });

    for (const auto& [value, e] : candidates) {
      (void)value;
      // Norm -1 vectors orthogonal to e are exactly the solutions of
      // 2 (e.y)^2 - y^2 = 1 with e.y = 0.
      const Matrix pe = majorant(lattice, e);
      std::vector<Vector> units;
      auto st = enumerate_short_vectors(pe, 1, box, [&](const Vector& y, const Integer&) {
        if (lattice.pair(e, y) != 0 || lattice.norm(y) != -1) return true;
        for (const auto& u : units)
          if (lattice.pair(u, y) != 0) return true;
        units.push_back(y);
        return units.size() + 1 < n;
      });
      if (st == EnumerationStatus::BudgetExhausted)
        throw SearchExhausted("node budget exhausted while searching norm -1 vectors");
      if (units.size() + 1 == n) {
        std::vector<Vector> cols{e};
        for (auto& u : units) cols.push_back(u);
        Integer d = determinant(Matrix::from_columns(cols));
        if (d == 1 || d == -1) {
          found = BasisChange::from_columns(cols);
          break;
        }
      }
    }
    if (found || bound >= ceiling) break;
    low = bound;
  }
  if (!found)
    throw SearchExhausted("no diagonal basis within coordinate box " + std::to_string(limits.box));
  return *found;
}

}  // namespace

BasisChange diagonalize_odd_hyperbolic(const GramLattice& lattice,
                                       const DiagonalizationLimits& limits) {
  const std::size_t n = lattice.rank();
  if (!lattice.is_unimodular()) throw NotUnimodular("lattice is not unimodular");
  const Signature sig = lattice.signature();
  if (sig.n_plus != 1 || sig.n_zero != 0)
    throw SignatureOutOfScope("diagonalisation needs signature (1,n-1)");
  if (lattice.is_even() && n > 1) throw PreconditionViolation("lattice is even");

  // Shorten the basis with respect to a majorant first; two rounds, since
  // the positive vector of the reduced basis gives a better majorant.
  BasisChange pre = BasisChange::identity(n);
  for (int round = 0; round < 2; ++round) {
    GramLattice work = change_basis(lattice, pre);
    pre = pre.then(BasisChange(lll_reduce(majorant(work, positive_vector(work)))));
  }
  const BasisChange found = pre.then(search_diagonal(change_basis(lattice, pre), limits));

  Matrix g = change_basis(lattice, found).gram();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Integer want = i != j ? 0 : (i == 0 ? 1 : -1);
      if (g(i, j) != want) throw std::logic_error("diagonalisation produced wrong Gram matrix");
    }
  return found;
}

BasisChange hyperbolic_basis(const GramLattice& lattice) {
  if (lattice.rank() != 2 || !lattice.is_even() || lattice.determinant() != -1)
    throw PreconditionViolation("hyperbolic basis needs an even unimodular lattice of rank 2 "
                                "and determinant -1");
  // Gram [[2a, b], [b, 2c]] with b^2 - 4ac = 1; isotropic directions solve
  // a x^2 + b x y + c y^2 = 0.
  const Integer a = lattice.entry(0, 0) / 2, b = lattice.entry(0, 1), c = lattice.entry(1, 1) / 2;
  Vector v;
  if (a == 0) {
    v = make_vector({1, 0});
  } else {
    v = Vector{Integer(-b + 1), Integer(2 * a)};
    Integer g = content(v);
    v = {Integer(v[0] / g), Integer(v[1] / g)};
  }
  (void)c;
  // u with b(v, u) = 1, then make it isotropic.
  Vector gv = lattice.pairings(v);
  Integer s, t, g;
  mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), gv[0].get_mpz_t(), gv[1].get_mpz_t());
  if (g < 0) {
    g = -g;
    s = -s;
    t = -t;
  }
  if (g != 1) throw std::logic_error("isotropic vector is not primitive in the dual");
  Vector u{s, t};
  Integer half = lattice.norm(u) / 2;
  u = u - half * v;
  BasisChange out = BasisChange::from_columns(std::vector<Vector>{v, u});
  if (change_basis(lattice, out) != hyperbolic_plane())
    throw std::logic_error("hyperbolic basis construction failed");
  return out;
}

std::string to_string(EquivalenceCase c) {
  switch (c) {
    case EquivalenceCase::Rank1:
      return "RANK1";
    case EquivalenceCase::Hyperbolic:
      return "HYPERBOLIC";
    case EquivalenceCase::Odd:
      return "ODD";
  }
  return "?";
}

EquivalenceResult main_equivalence(const GramLattice& lattice, const Vector& w,
                                   const DiagonalizationLimits& limits) {
  require_length(lattice, w, "omega");
  const std::size_t n = lattice.rank();
  const Signature sig = lattice.signature();
  if (n == 0 || sig.n_plus != 1 || sig.n_zero != 0)
    throw SignatureOutOfScope("signature must be (1,n-1), got (" + std::to_string(sig.n_plus) +
                              "," + std::to_string(sig.n_minus) + "," +
                              std::to_string(sig.n_zero) + ")");
  EquivalenceResult out;
  if (!lattice.is_unimodular()) {
    out.reason = "lattice is not unimodular";
    return out;
  }
  if (!is_characteristic(lattice, w)) {
    out.reason = "omega is not characteristic";
    return out;
  }
  const Integer norm = lattice.norm(w);
  const Integer expected = 10 - static_cast<long>(n);
  if (norm != expected) {
    out.reason = "omega^2 = " + norm.get_str() + ", expected " + expected.get_str();
    return out;
  }
  const Integer k = content(w);

  if (n == 1) {
    out.which = EquivalenceCase::Rank1;
    if (k != 3) {
      out.reason = "omega is not three times a primitive vector";
      return out;
    }
    out.holds = true;
    out.reason = "<1> with omega = 3 lambda, lambda primitive";
    Vector e{Integer(-w[0] / 3)};
    out.basis = BasisChange(Matrix::from_columns(std::vector<Vector>{e}));
    return out;
  }

  if (lattice.is_even()) {
    if (n != 2) {
      out.reason = "even lattice of rank " + std::to_string(n) + " is not the hyperbolic plane";
      return out;
    }
    out.which = EquivalenceCase::Hyperbolic;
    if (k != 2) {
      out.reason = "omega is not twice a primitive vector";
      return out;
    }
    BasisChange u = hyperbolic_basis(lattice);
    Vector x = u.to_new(w);  // x_1 x_2 = 4 with both even
    Matrix m = u.matrix();
    if (x[0] > 0) {
      Matrix flip{{-1, 0}, {0, -1}};
      m = m * flip;
    }
    out.holds = true;
    out.reason = "U with omega = 2 lambda, lambda primitive";
    out.basis = BasisChange(m);
    if (!is_special(lattice, w, out.basis->columns()))
      throw std::logic_error("hyperbolic witness basis is not special");
    return out;
  }

  out.which = EquivalenceCase::Odd;
  if (k != 1) {
    out.reason = "omega is not primitive";
    return out;
  }
  out.holds = true;
  out.reason = "odd unimodular with primitive omega";
  if (n > 10) {
    out.reason += "; no basis is constructed above rank 10";
    return out;
  }
  BasisChange d = diagonalize_odd_hyperbolic(lattice, limits);
  Vector x = d.to_new(w);
  Claim1Result normal = normalize_claim1(x);
  if (normal.normalized != canonical_characteristic(n))
    throw std::logic_error("normal form " + to_string(normal.normalized) +
                           " differs from (3,1,...,1)");
  out.transcript = normal.transcript;
  // omega = 3 f_1 + f_2 + ... + f_n with f = D A^{-1}; flipping f_1 makes
  // omega special.
  auto ainv = inverse_unimodular(normal.isometry);
  if (!ainv) throw std::logic_error("normalisation isometry is not invertible");
  Matrix f = d.matrix() * *ainv;
  for (std::size_t i = 0; i < n; ++i) f(i, 0) = -f(i, 0);
  out.basis = BasisChange(f);
  if (!is_special(lattice, w, out.basis->columns()))
    throw std::logic_error("odd witness basis is not special");
  return out;
}

}  // namespace nslat
