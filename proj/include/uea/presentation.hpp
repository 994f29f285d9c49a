#ifndef UEA_PRESENTATION_HPP
#define UEA_PRESENTATION_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "uea/dense_matrix.hpp"
#include "uea/linear_combination.hpp"
#include "uea/scalar.hpp"

namespace uea {

enum class Parity : std::uint8_t { Even = 0, Odd = 1 };

inline Parity operator+(Parity a, Parity b) {
  return static_cast<Parity>(static_cast<std::uint8_t>(a) ^ static_cast<std::uint8_t>(b));
}
inline bool is_odd(Parity p) { return p == Parity::Odd; }
/// (-1)^{|a||b|}
inline bool koszul_negative(Parity a, Parity b) { return is_odd(a) && is_odd(b); }

/// Basis index of the base algebra L (0-based internally, 1-based in files).
using Index = std::size_t;
/// Element of L in the basis {e_i}.
using LVector = LinearCombination<Index>;

struct BracketRecord {
  Index i;
  Index j;
  LVector terms;  // [e_i, e_j]
};

struct PMapRecord {
  Index i;
  LVector value;  // e_i^{[p]}
};

/// Raw description of a Lie (super)algebra as read from a file or the catalog.
struct PresentationData {
  std::string name;
  Field field;
  std::vector<std::string> basis;
  std::vector<Parity> parity;
  std::vector<BracketRecord> brackets;
  std::optional<std::vector<PMapRecord>> pmap;
  std::optional<std::vector<Index>> center_ids;
};

/// A finite-dimensional Lie (super)algebra given by structure constants.
///
/// Only the supplied bracket records are stored in `data()`; the full table
/// a_{ijk} is completed by super skew-symmetry. Records for both (i, j) and
/// (j, i) are accepted so that inconsistent input can be reported by
/// validate_presentation rather than silently overwritten.
class AlgebraPresentation {
 public:
  /// Throws MalformedInput for out-of-range indices, size mismatches,
  /// duplicate records or names, and invalid basis names.
  explicit AlgebraPresentation(PresentationData data);

  const PresentationData& data() const noexcept { return data_; }
  const std::string& name() const noexcept { return data_.name; }
  Field field() const noexcept { return data_.field; }
  std::uint32_t characteristic() const noexcept { return data_.field.characteristic(); }
  std::size_t dim() const noexcept { return data_.basis.size(); }
  Parity parity(Index i) const { return data_.parity.at(i); }
  bool is_super() const noexcept;
  const std::string& basis_name(Index i) const { return data_.basis.at(i); }
  std::optional<Index> index_of(std::string_view name) const;

  /// [e_i, e_j] from the completed table.
  const LVector& bracket(Index i, Index j) const { return table_[i * dim() + j]; }
  /// Bilinear extension of the structure constants.
  LVector bracket(const LVector& x, const LVector& y) const;

  bool has_pmap() const noexcept { return data_.pmap.has_value(); }
  /// nullptr when no p-map value is recorded for e_i.
  const LVector* pmap(Index i) const;

  const std::optional<std::vector<Index>>& center_ids() const noexcept { return data_.center_ids; }
  bool is_marked_central(Index i) const;

  /// Column j holds the coordinates of [x, e_j].
  DenseMatrix ad_matrix(const LVector& x) const;

  /// nullopt for a vector mixing parities; the zero vector counts as even.
  std::optional<Parity> parity_of(const LVector& x) const;

  /// Same algebra with bracket records reduced to the canonical set:
  /// nonzero (i, j) with i < j, and nonzero (i, i) for odd i.
  AlgebraPresentation canonical() const;

  friend bool operator==(const AlgebraPresentation& a, const AlgebraPresentation& b);

 private:
  PresentationData data_;
  std::vector<LVector> table_;
};

enum class Axiom {
  SkewSymmetry,
  Alternating,
  Jacobi,
  ParityConsistency,
  OddCubic,
  SuperInCharTwo,
  PMapDomain,
  PMapParity,
  Restrictedness,
  CenterIds,
};

std::string_view axiom_name(Axiom a) noexcept;

struct Violation {
  Axiom axiom;
  std::vector<Index> witness;  // 0-based basis indices
  std::string message;
};

struct ValidationReport {
  std::vector<Violation> violations;

  bool passed() const noexcept { return violations.empty(); }
  bool has(Axiom a) const;
  /// First violation of the given axiom, if any.
  const Violation* first(Axiom a) const;
};

/// Checks super skew-symmetry, the alternating rule for even elements,
/// super Jacobi on all basis triples, parity consistency of every nonzero
/// structure constant, the odd cubic rule in characteristic 3, the ban on
/// superalgebras in characteristic 2, the p-map domain, and any supplied
/// center_ids.
ValidationReport validate_presentation(const AlgebraPresentation& pres);

/// Echelon basis of the center C(L) = {x : [x, e_j] = 0 for all j}.
std::vector<LVector> center_basis(const AlgebraPresentation& pres);

/// Requires prime characteristic. Throws MissingPMap when no p-map is present;
/// otherwise reports, per even basis element, a missing value, an odd value,
/// or a failure of (ad e_i)^p = ad(e_i^{[p]}).
ValidationReport validate_p_map(const AlgebraPresentation& pres);

/// x^{[p]} for an even x, extended from the basis values by p-semilinearity
/// and Jacobson's formula for the p-th power of a sum.
LVector restricted_power(const AlgebraPresentation& pres, const LVector& x);

/// Re-expresses the algebra in the basis whose a-th vector is row a of
/// `rows` (old coordinates). Brackets and p-map are transported; the result
/// carries no center_ids.
AlgebraPresentation change_basis(const AlgebraPresentation& pres, const DenseMatrix& rows,
                                 std::vector<std::string> names);

struct AdaptedPresentation {
  AlgebraPresentation presentation;
  DenseMatrix change;  // row a = new basis vector a in old coordinates
  std::size_t center_dim = 0;
};

/// Produces a basis whose first |J| vectors span C(L), marking J = {0..|J|-1}.
/// The complement is the coordinate-orthogonal complement of C(L) when that
/// is a complement, otherwise the unit vectors of the non-pivot columns.
/// Throws ValidationFailed for an invalid presentation and OddCenter when
/// C(L) has a nonzero odd element.
AdaptedPresentation adapt_basis(const AlgebraPresentation& pres);

}  // namespace uea

#endif  // UEA_PRESENTATION_HPP
