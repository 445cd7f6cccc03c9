#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace ybt {

/// A binary operation on {0,...,m-1} stored as an m x m table.
///
/// Entry [a][b] is a <| b, where <| is written infix and associates to the
/// left.  All entries are validated to lie in [0, m) at construction; every
/// routine in the library may therefore assume tables are well formed.
class OpTable {
 public:
  /// Builds a table from rows.  Throws std::invalid_argument if the rows are
  /// not square or an entry is out of range.
  static OpTable from_rows(const std::vector<std::vector<int>>& rows);

  /// Builds a table from a callable op(a, b) -> int.
  template <typename F>
  static OpTable from_fn(int size, F&& op) {
    std::vector<std::vector<int>> rows(size, std::vector<int>(size));
    for (int a = 0; a < size; ++a)
      for (int b = 0; b < size; ++b) rows[a][b] = op(a, b);
    return from_rows(rows);
  }

  int size() const { return size_; }

  /// a <| b
  int apply(int a, int b) const { return table_[a * size_ + b]; }

  std::vector<std::vector<int>> rows() const;

  friend bool operator==(const OpTable&, const OpTable&) = default;

 private:
  OpTable(int size, std::vector<int> table)
      : size_(size), table_(std::move(table)) {}

  int size_ = 0;
  std::vector<int> table_;
};

/// A failed axiom together with the first witness, in scan order.
/// Witness layout per axiom:
///   "shelf"   -> (a, b, c), the first triple with (a<|b)<|c != (a<|c)<|(b<|c)
///   "rack"    -> (a, a2, b), a < a2 and a<|b == a2<|b in the first bad column b
///   "quandle" -> (a, a, a), the first a with a<|a != a
struct Violation {
  std::string axiom;
  std::array<int, 3> witness{};

  friend bool operator==(const Violation&, const Violation&) = default;
};

struct CheckResult {
  bool ok = false;
  std::optional<Violation> violation;

  explicit operator bool() const { return ok; }
};

/// Accumulative verdicts: quandle implies rack implies shelf.  When some flag
/// is false, first_violation holds the witness for the weakest failed axiom.
struct AxiomReport {
  bool is_shelf = false;
  bool is_rack = false;
  bool is_quandle = false;
  std::optional<Violation> first_violation;
};

CheckResult check_shelf(const OpTable& op);
CheckResult check_rack(const OpTable& op);
CheckResult check_quandle(const OpTable& op);
AxiomReport axiom_report(const OpTable& op);

/// a <| b = a
OpTable make_trivial_quandle(int m);

/// a <| b = (t*a + (1-t)*b) mod m.  Requires gcd(t, m) = 1, otherwise the
/// right translations are not invertible and the call throws.
OpTable make_alexander_quandle(int m, int t);

/// a <| b = b^-1 * a * b computed in the given group table.  The input is
/// validated as a group; the failed axiom is named on rejection.
OpTable make_conjugation_quandle(const OpTable& group);

/// The k-th Laver table (0 <= k <= 4), carried over to this library's
/// conventions: the classical operation * on {1..2^k} is generated by
/// a*1 = a+1 (cyclically) and a*(b+1) = (a*b)*(a*1); it distributes from the
/// left, so the constructor stores a <| b := b * a, with elements shifted
/// down to {0..2^k-1}.
OpTable make_laver_table(int k);

/// The dual of a rack: a <|~ b is the unique c with c <| b = a.  Throws if
/// some column of the input is not a bijection.
OpTable dual_rack(const OpTable& op);

/// Group-table validation.  On success `identity` is the neutral element.
struct GroupCheck {
  bool ok = false;
  std::string failed_axiom;  // "identity", "inverses" or "associativity"
  int identity = -1;
};

GroupCheck check_group(const OpTable& op);

/// Z_m with addition.
OpTable make_cyclic_group(int m);

/// The symmetric group on `letters` letters.  Elements are encoded as the
/// lexicographic rank of the one-line notation, and the product composes
/// left to right: (p*q)(i) = q(p(i)).
OpTable make_symmetric_group(int letters);

/// Lexicographic unrank/rank of one-line permutation notation.
std::vector<int> permutation_of_rank(int letters, long long rank);
long long rank_of_permutation(const std::vector<int>& one_line);

}  // namespace ybt
