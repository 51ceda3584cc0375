#pragma once

// Trigonal bases [a_1, ..., a_n], special characteristic elements and the
// reduction of special pairs to canonical form.

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "nslat/lattice.hpp"

namespace nslat {

struct TrigonalForm {
  std::vector<Integer> diag;

  static TrigonalForm of(std::initializer_list<long> entries);

  std::size_t size() const { return diag.size(); }
  Matrix matrix() const;
  GramLattice lattice() const { return GramLattice(matrix()); }
  friend bool operator==(const TrigonalForm&, const TrigonalForm&) = default;
};

std::string to_string(const TrigonalForm& t);

// d_0 = 1, d_1 = a_1, d_m = a_m d_{m-1} - d_{m-2}; d_n is the determinant.
std::vector<Integer> trig_determinants(std::span<const Integer> a);

// The diagonal when gram has ones next to the diagonal and zeros elsewhere.
std::optional<TrigonalForm> as_trigonal(const Matrix& gram);

Matrix gram_of(const GramLattice& lattice, std::span<const Vector> vectors);

struct TrigonalFamilyReport {
  bool trigonal = false;
  std::optional<TrigonalForm> form;  // of all n+1 vectors
  // Filled in only for trigonal families.
  bool lattice_unimodular = false;
  bool first_n_form_a_basis = false;
};

// Requires n+1 vectors in a rank-n lattice.
TrigonalFamilyReport check_trigonal_family(const GramLattice& lattice,
                                           std::span<const Vector> vectors);

struct CornerFamily {
  std::vector<Vector> vectors;  // e_0, e_1, ..., e_n, e_{n+1}
  Integer corner;               // b(e_0, e_{n+1})
};

// Prepends the dual of e_1 and appends the dual of e_n.
CornerFamily extend_to_corner_family(const GramLattice& lattice,
                                     std::span<const Vector> trigonal_basis);

// A lattice, an element omega and a basis in which
// b(omega, e_i) = -b(e_i, e_i) - 2 for every basis vector.
class SpecialPair {
 public:
  SpecialPair(GramLattice lattice, Vector omega, BasisChange basis);
  SpecialPair(GramLattice lattice, Vector omega);

  // The pair on the expanded trigonal matrix with omega solved from the
  // speciality equations. Throws NotUnimodular when det != +-1.
  static SpecialPair from_trigonal(const TrigonalForm& form);

  const GramLattice& lattice() const { return lattice_; }
  const Vector& omega() const { return omega_; }
  const BasisChange& basis() const { return basis_; }
  std::size_t rank() const { return lattice_.rank(); }

  Matrix current_gram() const;
  std::optional<TrigonalForm> current_trigonal() const;
  // omega in the coordinates of the current basis.
  Vector omega_in_basis() const { return basis_.to_new(omega_); }
  SpecialPair with_basis(BasisChange basis) const { return {lattice_, omega_, std::move(basis)}; }

 private:
  GramLattice lattice_;
  Vector omega_;
  BasisChange basis_;
};

bool is_special(const GramLattice& lattice, const Vector& omega, std::span<const Vector> basis);

// One step of a reduction, for transcripts. Indices are 0-based.
struct TrigonalMove {
  std::string kind;  // "slide", "split", "rebase3", "hyperbolic"
  std::size_t index = 0;
  Integer x = 0;
  std::vector<Integer> before;
  std::vector<Integer> after;
};

// a_j = 0. The right neighbour becomes e_{j+1} + x e_j and the left
// neighbour e_{j-1} - x e_j, so the form reads
// [..., a_{j-1} - 2x, 0, a_{j+1} + 2x, ...]. At j = 0 only the right
// neighbour moves.
SpecialPair move_slide(const SpecialPair& s, std::size_t j, const Integer& x);

struct SplitResult {
  SpecialPair unit;        // <-1>, spanned by e_j
  SpecialPair complement;  // trigonal, in the coordinates of its own basis
  Matrix unit_embedding;   // columns in the coordinates of s.lattice()
  Matrix complement_embedding;
};

// a_j = -1. The complement of e_j has trigonal basis
// e_{j-1} + e_j, e_{j+1} + e_j (and the untouched vectors), with form
// [a_1, ..., a_{j-2}, a_{j-1} + 1, a_{j+1} + 1, a_{j+2}, ...].
SplitResult move_split(const SpecialPair& s, std::size_t j);

struct EvenReduction {
  BasisChange basis;  // Gram is U^m in this basis
  std::size_t m = 0;
  BasisChange zero_basis;  // Gram is [0, ..., 0] in this basis
  std::vector<TrigonalMove> trace;
};

EvenReduction reduce_even(const SpecialPair& s);

enum class CanonicalKind { OddDiagonal, NegativeDiagonal, Hyperbolic };

std::string to_string(CanonicalKind kind);

struct SpecialReduction {
  CanonicalKind kind;
  BasisChange basis;  // columns in coordinates of s.lattice()
  std::vector<TrigonalMove> trace;
};

// Signatures (1, n-1) and (0, n).
SpecialReduction reduce_special(const SpecialPair& s);

enum class SmallEntryRule {
  AbsLessThanTwo,  // |a_i| < 2
  MinusOneOrZero,  // a_i in {-1, 0}, guaranteed for signature (1, n-1)
};

std::size_t exists_small_entry(std::span<const Integer> a,
                               SmallEntryRule rule = SmallEntryRule::AbsLessThanTwo);

enum class Decision { Yes, No, Unknown };

std::string to_string(Decision d);

struct TrigonalSearch {
  long box = 4;
  std::uint64_t node_budget = 20'000'000;
};

Decision is_trigonal_lattice(const GramLattice& lattice, const TrigonalSearch& search = {});

}  // namespace nslat
