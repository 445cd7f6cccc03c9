#pragma once

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ybt/optable.hpp"

namespace ybt {

/// A map sigma: S x S -> S x S on S = {0,...,m-1}, stored as an m x m table
/// of output pairs.
///
/// Entry [a][b] is sigma(a, b) = (b_a, a^b): the first component is "b
/// lowered by a", the second "a raised by b".  One table holds both
/// components so invertibility is a property of the stored map itself.
class SigmaTable {
 public:
  /// entries[a][b] = {first, second} of sigma(a, b).
  static SigmaTable from_entries(
      const std::vector<std::vector<std::array<int, 2>>>& entries);

  template <typename F>
  static SigmaTable from_fn(int size, F&& sigma) {
    std::vector<std::vector<std::array<int, 2>>> entries(
        size, std::vector<std::array<int, 2>>(size));
    for (int a = 0; a < size; ++a)
      for (int b = 0; b < size; ++b) {
        auto [x, y] = sigma(a, b);
        entries[a][b] = {x, y};
      }
    return from_entries(entries);
  }

  int size() const { return size_; }

  std::pair<int, int> apply(int a, int b) const {
    const size_t i = static_cast<size_t>(a) * size_ + b;
    return {first_[i], second_[i]};
  }

  /// x_w, the first output of sigma(w, x).
  int lower(int x, int w) const {
    return first_[static_cast<size_t>(w) * size_ + x];
  }

  /// x^w, the second output of sigma(x, w).
  int raise(int x, int w) const {
    return second_[static_cast<size_t>(x) * size_ + w];
  }

  std::vector<std::vector<std::array<int, 2>>> entries() const;

  friend bool operator==(const SigmaTable&, const SigmaTable&) = default;

 private:
  SigmaTable(int size, std::vector<int> first, std::vector<int> second)
      : size_(size), first_(std::move(first)), second_(std::move(second)) {}

  int size_ = 0;
  std::vector<int> first_;   // [a*m+b] = first component of sigma(a,b)
  std::vector<int> second_;  // [a*m+b] = second component of sigma(a,b)
};

/// Witness for a failed braid relation: the first triple where the two
/// composites disagree, with both evaluated sides.
struct BraidedWitness {
  std::array<int, 3> triple{};
  std::array<int, 3> lhs{};
  std::array<int, 3> rhs{};
};

struct BraidedCheck {
  bool ok = false;
  std::optional<BraidedWitness> witness;

  explicit operator bool() const { return ok; }
};

/// sigma1 sigma2 sigma1 = sigma2 sigma1 sigma2 on all of S^3.
BraidedCheck check_braided(const SigmaTable& sigma);

/// Named witness for a failed solution axiom; `data` holds the offending
/// elements in scan order.
struct SigmaViolation {
  std::string axiom;
  std::vector<int> data;
};

/// Accumulated verdicts for a sigma table.  Flags satisfy
/// is_birack == is_braided && is_invertible && left && right nondegenerate,
/// and t_map is present exactly when is_biquandle holds.
struct SolutionReport {
  bool is_braided = false;
  bool is_invertible = false;
  bool is_left_nondegenerate = false;
  bool is_right_nondegenerate = false;
  bool is_birack = false;
  bool is_biquandle = false;
  std::optional<std::vector<int>> t_map;
  std::optional<SigmaViolation> first_violation;
};

SolutionReport check_birack(const SigmaTable& sigma);

/// For a birack, searches for a bijection t with sigma(t(a), a) = (t(a), a).
/// Returns the lexicographically smallest such t (as the sequence t(0),
/// t(1), ...) or nullopt.  Throws if sigma is not a birack.
std::optional<std::vector<int>> check_biquandle(const SigmaTable& sigma);

/// Number of bijections t with sigma(t(a), a) = (t(a), a) for all a.
/// Throws if sigma is not a birack or the carrier exceeds 12 elements.
long long count_biquandle_t_maps(const SigmaTable& sigma);

/// sigma(a, b) = (b, a <| b).  Defined for any operation table; the braid
/// relation for the result is equivalent to self-distributivity of <|.
SigmaTable sigma_from_shelf(const OpTable& op);

/// sigma(a, b) = (a * b, unit).  Requires unit * a = a for all a.
SigmaTable sigma_from_monoid(const OpTable& op, int unit);

/// sigma(a, b) = (b, a).
SigmaTable make_flip(int m);

/// The inverse table, or nullopt when sigma is not a bijection of S^2.
std::optional<SigmaTable> inverse_sigma(const SigmaTable& sigma);

/// The two operations read sideways off a crossing: dot[a][b] is the unique
/// x with x_a = b, and wdot[a][b] = a^(a.b).  Requires a birack.
struct SidewaysTables {
  OpTable dot;
  OpTable wdot;
};

SidewaysTables sideways(const SigmaTable& sigma);

/// The rack extracted from a birack by the two-crossing diagram:
/// a <| b = (a wdot b)_b.  The result of a birack always passes check_rack.
OpTable structure_rack(const SigmaTable& sigma);

/// Inductive lowering (a,b,...,v)_w = (a_w, (b,...,v)_{w^a}) and raising
/// (a,...,u,v)^w = ((a,...,u)^{w_v}, v^w).  Empty tuples map to themselves.
std::vector<int> tuple_lower(const SigmaTable& sigma, std::vector<int> tuple,
                             int w);
std::vector<int> tuple_raise(const SigmaTable& sigma, std::vector<int> tuple,
                             int w);

/// The guitar map J(a_1,...,a_n) = (a_1, (a_2)_{a_1}, (a_3)_{a_2 a_1}, ...),
/// where (a_3)_{a_2 a_1} = ((a_3)_{a_2})_{a_1}.
std::vector<int> guitar_map(const SigmaTable& sigma, std::vector<int> tuple);

/// Inverse of the guitar map; needs the lowerings x -> x_c to be bijections
/// (left non-degeneracy) and throws otherwise.
std::vector<int> guitar_inverse(const SigmaTable& sigma,
                                std::vector<int> tuple);

struct EntwiningReport {
  bool ok = false;
  int position = 0;                // the failing strand index i, 1-based
  std::vector<int> input;          // the failing tuple
  std::vector<int> via_j_then_sigma_prime;
  std::vector<int> via_sigma_then_j;

  explicit operator bool() const { return ok; }
};

/// Verifies J sigma_i = sigma'_i J on S^n for 1 <= i <= n-1, where sigma' is
/// the solution built from the structure rack.  Requires 2 <= n <= 4 and a
/// left non-degenerate sigma; runs on any such table so corrupted inputs can
/// be caught, and always holds for genuine biracks.
EntwiningReport entwining_check(const SigmaTable& sigma, int n);

}  // namespace ybt
