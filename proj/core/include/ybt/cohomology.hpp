#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ybt/cochain.hpp"
#include "ybt/intmat.hpp"
#include "ybt/optable.hpp"
#include "ybt/sigma.hpp"

namespace ybt {

/// (d f)(a_1,...,a_{k+1}) = sum_i (-1)^{i-1} ( f(a_1,...,^a_i,...,a_{k+1})
///   - f(a_1<|a_i,...,a_{i-1}<|a_i, a_{i+1},...,a_{k+1}) ).
Cochain d_rack(const OpTable& op, const Cochain& f);

/// (d f)(a_1,...,a_{k+1}) = sum_i (-1)^{i-1}
///   ( f(a_1,...,a_{i-1}, (a_{i+1},...,a_{k+1})_{a_i})
///   - f((a_1,...,a_{i-1})^{a_i}, a_{i+1},...,a_{k+1}) ).
Cochain d_braided(const SigmaTable& sigma, const Cochain& f);

/// (d f)(a_1,...,a_{k+1}) = sum_i (-1)^{i-1} ( f(a_1,...,^a_i,...,a_{k+1})
///   - f(a_1 wdot a_i,...,a_{i-1} wdot a_i, a_i . a_{i+1},...,a_i . a_{k+1}) ).
/// Requires a birack (the sideways operations must exist).
Cochain d_birack(const SigmaTable& sigma, const Cochain& f);

enum class ComplexBase { rack, braided, birack };

enum class Subspace {
  full,
  /// Cochains vanishing on tuples with two equal adjacent entries.  Valid
  /// for a rack base when the operation is a quandle, and for a birack base
  /// when sigma is a biquandle.
  quandle_degenerate,
  /// Degree-2 cochains f with f(t(a), a) = 0, t the biquandle bijection.
  /// Valid only for the braided base over a biquandle, and only in degree 2.
  braided_biquandle_deg2,
};

/// A finite abelian group presented by its invariant-factor chain
/// d_1 | d_2 | ...; a factor 0 denotes an infinite cyclic summand.  The
/// empty list is the trivial group.
struct GroupInvariants {
  std::vector<long long> factors;

  bool trivial() const { return factors.empty(); }
  std::string to_string() const;

  friend bool operator==(const GroupInvariants&,
                         const GroupInvariants&) = default;
};

struct CoboundaryResult {
  std::optional<Cochain> witness;  // g with d g = f, when solvable
  std::string certificate;         // reason when unsolvable

  explicit operator bool() const { return witness.has_value(); }
};

/// One of the three cochain complexes bound to a structure, optionally
/// restricted to a subcomplex.  Matrices are integer matrices of the
/// differential in the delta-function basis, tuples ordered by rank.
class Complex {
 public:
  static Complex rack(OpTable op, Subspace sub = Subspace::full);
  static Complex braided(SigmaTable sigma, Subspace sub = Subspace::full);
  static Complex birack(SigmaTable sigma, Subspace sub = Subspace::full);

  ComplexBase base() const { return base_; }
  Subspace subspace() const { return subspace_; }
  int carrier() const { return carrier_; }

  Cochain differential(const Cochain& f) const;

  /// Matrix of d^degree on the full cochain space, m^{degree+1} x m^degree.
  IntMat matrix(int degree) const;

  /// Tuple ranks spanning the flagged subspace in the given degree.
  std::vector<long long> basis(int degree) const;

  /// Matrix of d^degree restricted to the flagged bases on both sides.
  /// Throws if the differential does not map the subspace into itself.
  IntMat restricted_matrix(int degree) const;

  /// H^degree = ker d^degree / im d^{degree-1} with Z_modulus coefficients
  /// (modulus 0 = integer coefficients), via Smith normal form over Z.
  GroupInvariants cohomology(int degree, long long modulus) const;

  /// Generating set of ker d^degree over Z_modulus, in Howell-canonical
  /// form (lexicographic pivots).  With modulus 0, an integer kernel basis.
  std::vector<Cochain> cocycle_basis(int degree, long long modulus) const;

  /// Solves d g = f over Z_modulus(f); the witness is verified before it is
  /// returned.
  CoboundaryResult coboundary_witness(const Cochain& f) const;

 private:
  Complex(ComplexBase base, Subspace sub, std::optional<OpTable> op,
          std::optional<SigmaTable> sigma);

  bool in_basis(long long rank, int degree) const;

  ComplexBase base_;
  Subspace subspace_;
  int carrier_;
  std::optional<OpTable> op_;
  std::optional<SigmaTable> sigma_;
  std::optional<SidewaysTables> sideways_;
  std::vector<int> t_map_;  // biquandle bijection, when relevant
};

/// How a cochain on a birack is pulled back to the braided complex.  The
/// candidates differ by composing with the guitar map or its inverse and by
/// whether the argument tuple is reversed after the map.
enum class GuitarConvention {
  compose_j,
  compose_j_inverse,
  compose_j_reversed,
  compose_j_inverse_reversed,
};

/// The convention pinned for this library.  It is the unique candidate for
/// which d_braided(J* f) = J*(d_birack f) holds exhaustively over the
/// selection corpus (all biracks on two elements plus the curated
/// three-element biracks) in degrees 1..3; passing_guitar_conventions()
/// re-runs that enumeration.
inline constexpr GuitarConvention kGuitarConvention =
    GuitarConvention::compose_j;

std::vector<GuitarConvention> passing_guitar_conventions();

Cochain pullback_guitar_with(const SigmaTable& sigma, const Cochain& f,
                             GuitarConvention convention);

/// (J* f)(a) = f(J(a)) under kGuitarConvention.  Requires a birack.
Cochain pullback_guitar(const SigmaTable& sigma, const Cochain& f);

/// Candidate readings of the braided cup product.  All route the chosen
/// strands with positive crossings and weight each shuffle by
/// (-1)^{number of crossings}; they differ in which block is gathered on
/// the left and in the reading direction of the input tuple.
enum class CupConvention {
  f_block_left,
  g_block_left,
  f_block_left_reversed,
  g_block_left_reversed,
};

/// Pinned cup convention: the unique candidate satisfying the graded
/// Leibniz rule on degree-(1,1) cochains over every braided set on two
/// elements (with associativity on (1,1,1) as a tie breaker);
/// passing_cup_conventions() re-runs the selection.
inline constexpr CupConvention kCupConvention = CupConvention::f_block_left;

std::vector<CupConvention> passing_cup_conventions();

Cochain cup_product_with(const SigmaTable& sigma, const Cochain& f,
                         const Cochain& g, CupConvention convention);

/// f cup g of degrees (k, n): sum over (k, n)-shuffles of signed products,
/// colors propagated through each shuffle's crossing pattern by sigma.
Cochain cup_product(const SigmaTable& sigma, const Cochain& f,
                    const Cochain& g);

}  // namespace ybt
