#pragma once

#include <vector>

namespace ybt {

/// Dense integer matrix with overflow-checked arithmetic.
class IntMat {
 public:
  IntMat() = default;
  IntMat(int rows, int cols) : rows_(rows), cols_(cols) {
    a_.assign(static_cast<size_t>(rows) * cols, 0);
  }

  static IntMat identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  long long& at(int r, int c) { return a_[static_cast<size_t>(r) * cols_ + c]; }
  long long at(int r, int c) const {
    return a_[static_cast<size_t>(r) * cols_ + c];
  }

  IntMat operator*(const IntMat& other) const;
  bool is_zero() const;
  IntMat transposed() const;

  friend bool operator==(const IntMat&, const IntMat&) = default;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<long long> a_;
};

long long checked_add(long long a, long long b);
long long checked_mul(long long a, long long b);

/// u * a * v = s with u, v unimodular and s diagonal, the diagonal forming a
/// divisibility chain of non-negative entries.
struct SmithDecomposition {
  IntMat s;
  IntMat u;
  IntMat v;
  IntMat v_inv;
  int rank = 0;  // nonzero diagonal entries
};

SmithDecomposition smith_normal_form(IntMat a);

/// Diagonal of the Smith form (length min(rows, cols)).
std::vector<long long> smith_diagonal(const IntMat& a);

/// Rank over the field Z_p, p prime.
int rank_mod_p(IntMat a, long long p);

/// Row-canonical (Howell) form of the Z_n-row span of `gens`: every row span
/// over Z_n has a unique Howell form, so equality of forms decides equality
/// of spans.  Returns the nonzero rows.  Requires n >= 2.
IntMat howell_form(IntMat gens, long long n);

/// Reduces v against a Howell form; returns the residue (zero iff v lies in
/// the row span).
std::vector<long long> howell_reduce(const IntMat& howell,
                                     std::vector<long long> v, long long n);

}  // namespace ybt
