#include "nslat/trigonal.hpp"

#include <sstream>
#include <stdexcept>
#include <utility>

#include "nslat/errors.hpp"
#include "nslat/short_vectors.hpp"

namespace nslat {

TrigonalForm TrigonalForm::of(std::initializer_list<long> entries) {
  TrigonalForm t;
  for (long x : entries) t.diag.emplace_back(x);
  return t;
}

Matrix TrigonalForm::matrix() const {
  const std::size_t n = diag.size();
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    m(i, i) = diag[i];
    if (i + 1 < n) {
      m(i, i + 1) = 1;
      m(i + 1, i) = 1;
    }
  }
  return m;
}

std::string to_string(const TrigonalForm& t) {
  std::ostringstream out;
  out << '[';
  for (std::size_t i = 0; i < t.diag.size(); ++i) out << (i ? "," : "") << t.diag[i];
  out << ']';
  return out.str();
}

std::vector<Integer> trig_determinants(std::span<const Integer> a) {
  std::vector<Integer> d{Integer(1)};
  if (a.empty()) return d;
  d.push_back(a[0]);
  for (std::size_t m = 1; m < a.size(); ++m) d.push_back(a[m] * d[m] - d[m - 1]);
  return d;
}

std::optional<TrigonalForm> as_trigonal(const Matrix& gram) {
  if (!gram.is_square()) return std::nullopt;
  const std::size_t n = gram.rows();
  TrigonalForm t;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      const bool adjacent = i + 1 == j || j + 1 == i;
      if (gram(i, j) != (adjacent ? 1 : 0)) return std::nullopt;
    }
    t.diag.push_back(gram(i, i));
  }
  return t;
}

Matrix gram_of(const GramLattice& lattice, std::span<const Vector> vectors) {
  const std::size_t k = vectors.size();
  Matrix m(k, k);
  for (std::size_t i = 0; i < k; ++i) {
    Vector gi = lattice.pairings(vectors[i]);
    for (std::size_t j = 0; j < k; ++j) {
      Integer s = 0;
      for (std::size_t t = 0; t < gi.size(); ++t) s += gi[t] * vectors[j][t];
      m(i, j) = s;
    }
  }
  return m;
}

TrigonalFamilyReport check_trigonal_family(const GramLattice& lattice,
                                           std::span<const Vector> vectors) {
  const std::size_t n = lattice.rank();
  if (vectors.size() != n + 1)
    throw DimensionMismatch("a rank-" + std::to_string(n) + " lattice needs " +
                            std::to_string(n + 1) + " vectors, got " +
                            std::to_string(vectors.size()));
  for (const auto& v : vectors)
    if (v.size() != n) throw DimensionMismatch("family vector of wrong length");

  TrigonalFamilyReport report;
  report.form = as_trigonal(gram_of(lattice, vectors));
  report.trigonal = report.form.has_value();
  if (!report.trigonal) {
    report.form.reset();
    return report;
  }
  report.lattice_unimodular = lattice.is_unimodular();
  std::vector<Vector> first(vectors.begin(), vectors.begin() + static_cast<std::ptrdiff_t>(n));
  Integer d = n == 0 ? Integer(1) : determinant(Matrix::from_columns(first));
  report.first_n_form_a_basis = d == 1 || d == -1;
  if (!report.lattice_unimodular || !report.first_n_form_a_basis)
    throw std::logic_error("trigonal family of n+1 vectors without a unimodular trigonal basis");
  return report;
}

namespace {

// x with b(x, basis[i]) = target[i] for every i.
Vector solve_pairings(const GramLattice& lattice, std::span<const Vector> basis,
                      const Vector& target) {
  Matrix b = Matrix::from_columns(basis);
  auto x = solve_integer(b.transpose() * lattice.gram(), target);
  if (!x) throw NotUnimodular("pairing equations have no integral solution");
  return *x;
}

std::vector<Integer> norms(const GramLattice& lattice, std::span<const Vector> chain) {
  std::vector<Integer> a;
  a.reserve(chain.size());
  for (const auto& v : chain) a.push_back(lattice.norm(v));
  return a;
}

void require_trigonal(const GramLattice& lattice, std::span<const Vector> chain,
                      const char* what) {
  if (!as_trigonal(gram_of(lattice, chain)))
    throw std::logic_error(std::string(what) + " produced a non-trigonal basis");
}

}  // namespace

CornerFamily extend_to_corner_family(const GramLattice& lattice,
                                     std::span<const Vector> trigonal_basis) {
  const std::size_t n = lattice.rank();
  if (trigonal_basis.size() != n) throw DimensionMismatch("trigonal basis has wrong size");
  if (!lattice.is_unimodular())
    throw NotUnimodular("corner family needs a unimodular lattice, determinant " +
                        lattice.determinant().get_str());
  if (n == 0) throw InvalidInput("corner family of the zero lattice");
  if (!as_trigonal(gram_of(lattice, trigonal_basis)))
    throw PreconditionViolation("supplied vectors do not form a trigonal basis");
  Integer d = determinant(Matrix::from_columns(trigonal_basis));
  if (d != 1 && d != -1) throw PreconditionViolation("supplied vectors are not a basis");

  CornerFamily out;
  out.vectors.push_back(solve_pairings(lattice, trigonal_basis, unit_vector(n, 0)));
  for (const auto& v : trigonal_basis) out.vectors.push_back(v);
  out.vectors.push_back(solve_pairings(lattice, trigonal_basis, unit_vector(n, n - 1)));
  out.corner = lattice.pair(out.vectors.front(), out.vectors.back());

  const Signature sig = lattice.signature();
  const Integer expected = sig.n_plus % 2 == 1 ? 1 : -1;
  Matrix g = gram_of(lattice, out.vectors);
  const std::size_t k = n + 2;
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      if (i == j) continue;
      Integer want = (i + 1 == j || j + 1 == i) ? 1 : 0;
      if ((i == 0 && j == k - 1) || (j == 0 && i == k - 1)) want = expected;
      if (g(i, j) != want)
        throw std::logic_error("corner family Gram entry (" + std::to_string(i) + "," +
                               std::to_string(j) + ") is " + g(i, j).get_str());
    }
  return out;
}

bool is_special(const GramLattice& lattice, const Vector& omega, std::span<const Vector> basis) {
  for (const auto& e : basis)
    if (lattice.pair(omega, e) != -lattice.norm(e) - 2) return false;
  return true;
}

SpecialPair::SpecialPair(GramLattice lattice, Vector omega, BasisChange basis)
    : lattice_(std::move(lattice)), omega_(std::move(omega)), basis_(std::move(basis)) {
  if (omega_.size() != lattice_.rank() || basis_.size() != lattice_.rank())
    throw DimensionMismatch("special pair data does not match lattice rank");
  auto cols = basis_.columns();
  for (std::size_t i = 0; i < cols.size(); ++i) {
    Integer lhs = lattice_.pair(omega_, cols[i]);
    Integer rhs = -lattice_.norm(cols[i]) - 2;
    if (lhs != rhs)
      throw PreconditionViolation("omega is not special: b(omega,e_" + std::to_string(i) +
                                  ") = " + lhs.get_str() + ", expected " + rhs.get_str());
  }
}

SpecialPair::SpecialPair(GramLattice lattice, Vector omega)
    : SpecialPair(lattice, std::move(omega), BasisChange::identity(lattice.rank())) {}

SpecialPair SpecialPair::from_trigonal(const TrigonalForm& form) {
  GramLattice lattice = form.lattice();
  if (!lattice.is_unimodular())
    throw NotUnimodular("trigonal form " + to_string(form) + " has determinant " +
                        lattice.determinant().get_str());
  Vector target;
  for (const auto& a : form.diag) target.push_back(-a - 2);
  auto omega = solve_integer(lattice.gram(), target);
  if (!omega) throw std::logic_error("unimodular system without integral solution");
  return SpecialPair(std::move(lattice), *omega);
}

Matrix SpecialPair::current_gram() const { return change_basis(lattice_, basis_).gram(); }

std::optional<TrigonalForm> SpecialPair::current_trigonal() const {
  return as_trigonal(current_gram());
}

namespace {

TrigonalForm require_current_trigonal(const SpecialPair& s) {
  auto t = s.current_trigonal();
  if (!t) throw PreconditionViolation("the current basis is not trigonal");
  return *t;
}

// Gram and omega of the sublattice spanned by the given vectors, assumed
// unimodular; omega is replaced by its orthogonal projection.
SpecialPair restrict_pair(const GramLattice& lattice, const Vector& omega,
                          std::span<const Vector> vectors) {
  GramLattice sub(gram_of(lattice, vectors));
  Vector t;
  for (const auto& v : vectors) t.push_back(lattice.pair(omega, v));
  auto w = solve_integer(sub.gram(), t);
  if (!w) throw std::logic_error("restriction to a non-unimodular piece");
  return SpecialPair(std::move(sub), *w);
}

void slide_chain(std::vector<Vector>& chain, std::size_t j, const Integer& x) {
  if (j + 1 < chain.size()) chain[j + 1] = chain[j + 1] + x * chain[j];
  if (j > 0) chain[j - 1] = chain[j - 1] - x * chain[j];
}

std::vector<Vector> split_chain(const std::vector<Vector>& chain, std::size_t j) {
  std::vector<Vector> rest;
  for (std::size_t i = 0; i < chain.size(); ++i) {
    if (i == j) continue;
    if (i + 1 == j || i == j + 1)
      rest.push_back(chain[i] + chain[j]);
    else
      rest.push_back(chain[i]);
  }
  return rest;
}

}  // namespace

SpecialPair move_slide(const SpecialPair& s, std::size_t j, const Integer& x) {
  TrigonalForm t = require_current_trigonal(s);
  const std::size_t n = t.size();
  if (j >= n) throw PreconditionViolation("slide index out of range");
  if (n < 2) throw PreconditionViolation("slide needs rank at least 2");
  if (t.diag[j] != 0)
    throw PreconditionViolation("slide needs a_j = 0, found " + t.diag[j].get_str());
  std::vector<Vector> chain = s.basis().columns();
  slide_chain(chain, j, x);
  SpecialPair out = s.with_basis(BasisChange::from_columns(chain));
  auto after = out.current_trigonal();
  TrigonalForm expected = t;
  if (j + 1 < n) expected.diag[j + 1] += 2 * x;
  if (j > 0) expected.diag[j - 1] -= 2 * x;
  if (!after || *after != expected) throw std::logic_error("slide broke the trigonal form");
  return out;
}

SplitResult move_split(const SpecialPair& s, std::size_t j) {
  TrigonalForm t = require_current_trigonal(s);
  const std::size_t n = t.size();
  if (j >= n) throw PreconditionViolation("split index out of range");
  if (n < 2) throw PreconditionViolation("split needs rank at least 2");
  if (t.diag[j] != -1)
    throw PreconditionViolation("split needs a_j = -1, found " + t.diag[j].get_str());
  std::vector<Vector> chain = s.basis().columns();
  std::vector<Vector> unit{chain[j]};
  std::vector<Vector> rest = split_chain(chain, j);

  for (const auto& r : rest)
    if (s.lattice().pair(r, unit[0]) != 0) throw std::logic_error("split is not orthogonal");
  require_trigonal(s.lattice(), rest, "split");

  SplitResult out{restrict_pair(s.lattice(), s.omega(), unit),
                  restrict_pair(s.lattice(), s.omega(), rest), Matrix::from_columns(unit),
                  Matrix::from_columns(rest)};
  return out;
}

EvenReduction reduce_even(const SpecialPair& s) {
  const GramLattice& lattice = s.lattice();
  TrigonalForm t = require_current_trigonal(s);
  if (!lattice.is_even()) throw PreconditionViolation("lattice is odd");
  if (!lattice.is_unimodular()) throw NotUnimodular("lattice is not unimodular");
  if (lattice.rank() % 2 != 0)
    throw PreconditionViolation("even unimodular trigonal lattice of odd rank");

  EvenReduction out{BasisChange::identity(lattice.rank()), lattice.rank() / 2,
                    BasisChange::identity(lattice.rank()), {}};
  std::vector<Vector> chain = s.basis().columns();
  std::vector<Vector> hyperbolic;
  while (!chain.empty()) {
    std::vector<Integer> a = norms(lattice, chain);
    std::size_t z = a.size();
    for (std::size_t i = 0; i < a.size(); ++i)
      if (a[i] == 0) {
        z = i;
        break;
      }
    if (z == a.size() || a.size() < 2)
      throw std::logic_error("even trigonal chain without a zero entry");
    // Block {z, w} with w the right neighbour when there is one.
    const std::size_t w = z + 1 < a.size() ? z + 1 : z - 1;
    const std::size_t lo = std::min(z, w), hi = std::max(z, w);
    const Integer c = a[w];
    const Vector& zv = chain[z];
    const Vector& wv = chain[w];
    hyperbolic.push_back(zv);
    Integer half = c / 2;
    hyperbolic.push_back(wv - half * zv);

    // Project the outside neighbours off span(z, w); the inverse Gram of
    // the block in the order (z, w) is [[-c, 1], [1, 0]].
    auto project = [&](const Vector& v) {
      Integer pz = lattice.pair(v, zv), pw = lattice.pair(v, wv);
      Integer yz = -c * pz + pw, yw = pz;
      return v - yz * zv - yw * wv;
    };
    std::vector<Vector> next;
    for (std::size_t i = 0; i < chain.size(); ++i) {
      if (i == lo || i == hi) continue;
      next.push_back(i + 1 == lo || i == hi + 1 ? project(chain[i]) : chain[i]);
    }
    // The projected neighbours pair to -1 when both exist; flipping the
    // tail restores a trigonal chain.
    if (lo > 0 && hi + 1 < chain.size()) {
      const std::size_t cut = lo;  // first index of the tail in next
      if (lattice.pair(next[cut - 1], next[cut]) == -1)
        for (std::size_t i = cut; i < next.size(); ++i) next[i] = -next[i];
    }
    TrigonalMove move{"hyperbolic", z, c, a, norms(lattice, next)};
    out.trace.push_back(std::move(move));
    require_trigonal(lattice, next, "hyperbolic excision");
    chain = std::move(next);
  }

  out.basis = BasisChange::from_columns(hyperbolic);
  Matrix g = change_basis(lattice, out.basis).gram();
  for (std::size_t i = 0; i < g.rows(); ++i)
    for (std::size_t j = 0; j < g.cols(); ++j) {
      Integer want = (i / 2 == j / 2 && i != j) ? 1 : 0;
      if (g(i, j) != want) throw std::logic_error("even reduction did not reach U^m");
    }
  // e_{2k+1} = f_{2k+1} + f_{2k-1}, e_{2k} = f_{2k} turns U^m into [0,...,0].
  std::vector<Vector> zero = hyperbolic;
  for (std::size_t k = 2; k < zero.size(); k += 2) zero[k] = hyperbolic[k] + hyperbolic[k - 2];
  out.zero_basis = BasisChange::from_columns(zero);
  auto zt = as_trigonal(change_basis(lattice, out.zero_basis).gram());
  if (!zt) throw std::logic_error("zero basis is not trigonal");
  for (const auto& x : zt->diag)
    if (x != 0) throw std::logic_error("zero basis has a nonzero diagonal entry");
  return out;
}

std::string to_string(CanonicalKind kind) {
  switch (kind) {
    case CanonicalKind::OddDiagonal:
      return "DIAG";
    case CanonicalKind::NegativeDiagonal:
      return "NEG_DIAG";
    case CanonicalKind::Hyperbolic:
      return "HYPERBOLIC";
  }
  return "?";
}

namespace {

bool is_odd(const Integer& x) { return mpz_odd_p(x.get_mpz_t()) != 0; }

// Slide that zeroes an even neighbour of a zero entry, chosen so that the
// chain keeps moving toward [0, ..., 0]; nullopt when none applies.
std::optional<std::pair<std::size_t, Integer>> even_slide(const std::vector<Integer>& a) {
  const std::size_t n = a.size();
  if (n < 2) return std::nullopt;
  if (a[0] == 0 && a[1] != 0 && !is_odd(a[1])) return std::pair{std::size_t{0}, Integer(-a[1] / 2)};
  if (a[n - 1] == 0 && a[n - 2] != 0 && !is_odd(a[n - 2]))
    return std::pair{n - 1, Integer(a[n - 2] / 2)};
  for (std::size_t j = 1; j + 1 < n; ++j)
    if (a[j] == 0 && a[j - 1] != 0 && a[j + 1] != 0 && !is_odd(a[j + 1]))
      return std::pair{j, Integer(-a[j + 1] / 2)};
  for (std::size_t j = 1; j + 1 < n; ++j) {
    if (a[j] != 0) continue;
    bool right_clear = true, left_clear = true;
    for (std::size_t i = j; i < n; ++i) right_clear = right_clear && a[i] == 0;
    for (std::size_t i = 0; i <= j; ++i) left_clear = left_clear && a[i] == 0;
    if (right_clear && a[j - 1] != 0 && !is_odd(a[j - 1])) return std::pair{j, Integer(a[j - 1] / 2)};
    if (left_clear && a[j + 1] != 0 && !is_odd(a[j + 1])) return std::pair{j, Integer(-a[j + 1] / 2)};
  }
  return std::nullopt;
}

}  // namespace

SpecialReduction reduce_special(const SpecialPair& s) {
  const GramLattice& lattice = s.lattice();
  const std::size_t n = lattice.rank();
  if (n == 0 || n > 64) throw SignatureOutOfScope("rank must lie in 1..64");
  const Signature sig = lattice.signature();
  if (sig.n_zero != 0 || sig.n_plus > 1)
    throw SignatureOutOfScope("reduction needs signature (1,n-1) or (0,n), got (" +
                              std::to_string(sig.n_plus) + "," + std::to_string(sig.n_minus) +
                              "," + std::to_string(sig.n_zero) + ")");
  require_current_trigonal(s);
  if (!lattice.is_unimodular()) throw NotUnimodular("lattice is not unimodular");

  SpecialReduction out{CanonicalKind::OddDiagonal, BasisChange::identity(n), {}};
  std::vector<Vector> chain = s.basis().columns();
  std::vector<Vector> units;
  const std::size_t step_limit = 64 * n * n + 64;
  for (std::size_t step = 0;; ++step) {
    if (step > step_limit) throw std::logic_error("trigonal reduction did not terminate");
    std::vector<Integer> a = norms(lattice, chain);
    if (a.size() == 1 || (a.size() == 2 && a[0] == 0 && a[1] == 0)) break;

    std::size_t j = a.size();
    for (std::size_t i = 0; i < a.size(); ++i)
      if (a[i] == -1) {
        j = i;
        break;
      }
    if (j < a.size()) {
      units.push_back(chain[j]);
      chain = split_chain(chain, j);
      out.trace.push_back({"split", j, 0, a, norms(lattice, chain)});
      continue;
    }

    std::optional<std::pair<std::size_t, Integer>> slide;
    for (std::size_t i = 0; i < a.size() && !slide; ++i) {
      if (a[i] != 0) continue;
      if (i + 1 < a.size() && is_odd(a[i + 1]))
        slide = std::pair{i, Integer((-1 - a[i + 1]) / 2)};
      else if (i > 0 && is_odd(a[i - 1]))
        slide = std::pair{i, Integer((a[i - 1] + 1) / 2)};
    }
    if (!slide) slide = even_slide(a);
    if (!slide) throw std::logic_error("trigonal reduction stalled at " + to_string(TrigonalForm{a}));
    slide_chain(chain, slide->first, slide->second);
    out.trace.push_back({"slide", slide->first, slide->second, a, norms(lattice, chain)});
  }

  std::vector<Integer> a = norms(lattice, chain);
  std::vector<Vector> basis;
  if (a.size() == 2) {
    if (units.empty()) {
      out.kind = CanonicalKind::Hyperbolic;
      basis = chain;
    } else {
      // <-1> + [0,0] with basis (g, u, v) becomes <1> + <-1> + <-1> in
      // (u + v - g, u - g, v - g).
      Vector g = units.back();
      units.pop_back();
      basis = {chain[0] + chain[1] - g, chain[0] - g, chain[1] - g};
      out.trace.push_back({"rebase3", 0, 0, {-1, 0, 0}, {1, -1, -1}});
      out.kind = CanonicalKind::OddDiagonal;
    }
  } else if (a[0] == 1) {
    basis = chain;
    out.kind = CanonicalKind::OddDiagonal;
  } else if (a[0] == -1) {
    basis = chain;
    out.kind = CanonicalKind::NegativeDiagonal;
  } else {
    throw std::logic_error("trigonal reduction ended at " + to_string(TrigonalForm{a}));
  }
  for (auto it = units.rbegin(); it != units.rend(); ++it) basis.push_back(*it);

  out.basis = BasisChange::from_columns(basis);
  SpecialPair check = s.with_basis(out.basis);
  Matrix g = check.current_gram();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      Integer want = 0;
      if (out.kind == CanonicalKind::Hyperbolic)
        want = i == k ? 0 : 1;
      else if (i == k)
        want = (i == 0 && out.kind == CanonicalKind::OddDiagonal) ? 1 : -1;
      if (g(i, k) != want) throw std::logic_error("reduction did not reach the canonical form");
    }
  return out;
}

std::size_t exists_small_entry(std::span<const Integer> a, SmallEntryRule rule) {
  if (a.empty()) throw PreconditionViolation("empty trigonal form");
  auto d = trig_determinants(a);
  if (d.back() != 1 && d.back() != -1)
    throw NotUnimodular("trigonal form has determinant " + d.back().get_str());
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (rule == SmallEntryRule::AbsLessThanTwo && a[i] > -2 && a[i] < 2) return i;
    if (rule == SmallEntryRule::MinusOneOrZero && (a[i] == -1 || a[i] == 0)) return i;
  }
  if (rule == SmallEntryRule::AbsLessThanTwo)
    throw std::logic_error("unimodular trigonal form with every |a_i| >= 2");
  TrigonalForm t{std::vector<Integer>(a.begin(), a.end())};
  Signature sig = t.lattice().signature();
  if (sig.n_plus == 1) throw std::logic_error("signature (1,n-1) form without a_i in {-1,0}");
  throw SignatureOutOfScope("no entry in {-1,0}; guaranteed only for signature (1,n-1)");
}

std::string to_string(Decision d) {
  switch (d) {
    case Decision::Yes:
      return "yes";
    case Decision::No:
      return "no";
    case Decision::Unknown:
      return "unknown";
  }
  return "?";
}

Decision is_trigonal_lattice(const GramLattice& lattice, const TrigonalSearch& search) {
  if (!lattice.is_unimodular())
    throw NotUnimodular("lattice determinant is " + lattice.determinant().get_str());
  const std::size_t n = lattice.rank();
  if (n == 0) return Decision::Yes;
  const Signature sig = lattice.signature();
  const bool definite = sig.n_plus == 0 || sig.n_minus == 0;
  if (!definite) {
    if (!lattice.is_even()) return Decision::Yes;
    return sig.n_plus == sig.n_minus ? Decision::Yes : Decision::No;
  }
  if (lattice.is_even()) return Decision::No;

  // Definite and odd: trigonal iff isomorphic to <s>^n, s = +-1, iff the
  // norm-s vectors number 2n.
  const long s = sig.n_plus > 0 ? 1 : -1;
  Matrix q = lattice.gram();
  if (s < 0)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) q(i, j) = -q(i, j);

  std::vector<Vector> units;
  auto status = enumerate_short_vectors(
      q, 1, {search.box, search.node_budget}, [&](const Vector& x, const Integer& value) {
        if (value != 1) return true;
        for (const auto& u : units) {
          Integer p = lattice.pair(u, x);
          if (p != 0) return true;
        }
        units.push_back(x);
        return units.size() < n;
      });
  if (units.size() == n) return Decision::Yes;
  if (status == EnumerationStatus::BudgetExhausted) return Decision::Unknown;

  // The box covers the whole ellipsoid when every (Q^{-1})_{ii} <= box^2.
  auto inv = inverse_unimodular(q);
  if (!inv) throw std::logic_error("unimodular matrix without integral inverse");
  for (std::size_t i = 0; i < n; ++i)
    if ((*inv)(i, i) > Integer(search.box) * search.box) return Decision::Unknown;
  return Decision::No;
}

}  // namespace nslat
