#include "ybt/intmat.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <stdexcept>

namespace ybt {

long long checked_add(long long a, long long b) {
  long long out;
  if (__builtin_add_overflow(a, b, &out))
    throw std::overflow_error("integer matrix arithmetic overflow");
  return out;
}

long long checked_mul(long long a, long long b) {
  long long out;
  if (__builtin_mul_overflow(a, b, &out))
    throw std::overflow_error("integer matrix arithmetic overflow");
  return out;
}

IntMat IntMat::identity(int n) {
  IntMat m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

IntMat IntMat::operator*(const IntMat& other) const {
  if (cols_ != other.rows())
    throw std::invalid_argument("matrix dimension mismatch");
  IntMat out(rows_, other.cols());
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      const long long aik = at(i, k);
      if (aik == 0) continue;
      for (int j = 0; j < other.cols(); ++j)
        out.at(i, j) =
            checked_add(out.at(i, j), checked_mul(aik, other.at(k, j)));
    }
  return out;
}

bool IntMat::is_zero() const {
  return std::all_of(a_.begin(), a_.end(), [](long long v) { return v == 0; });
}

IntMat IntMat::transposed() const {
  IntMat out(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) out.at(j, i) = at(i, j);
  return out;
}

namespace {

struct SnfWork {
  IntMat a, u, v, v_inv;

  void swap_rows(int i, int j) {
    if (i == j) return;
    for (int c = 0; c < a.cols(); ++c) std::swap(a.at(i, c), a.at(j, c));
    for (int c = 0; c < u.cols(); ++c) std::swap(u.at(i, c), u.at(j, c));
  }

  void swap_cols(int i, int j) {
    if (i == j) return;
    for (int r = 0; r < a.rows(); ++r) std::swap(a.at(r, i), a.at(r, j));
    for (int r = 0; r < v.rows(); ++r) std::swap(v.at(r, i), v.at(r, j));
    for (int c = 0; c < v_inv.cols(); ++c)
      std::swap(v_inv.at(i, c), v_inv.at(j, c));
  }

  void negate_row(int i) {
    for (int c = 0; c < a.cols(); ++c) a.at(i, c) = -a.at(i, c);
    for (int c = 0; c < u.cols(); ++c) u.at(i, c) = -u.at(i, c);
  }

  // row_j += q * row_i
  void add_row(int j, int i, long long q) {
    if (q == 0) return;
    for (int c = 0; c < a.cols(); ++c)
      a.at(j, c) = checked_add(a.at(j, c), checked_mul(q, a.at(i, c)));
    for (int c = 0; c < u.cols(); ++c)
      u.at(j, c) = checked_add(u.at(j, c), checked_mul(q, u.at(i, c)));
  }

  // col_j += q * col_i
  void add_col(int j, int i, long long q) {
    if (q == 0) return;
    for (int r = 0; r < a.rows(); ++r)
      a.at(r, j) = checked_add(a.at(r, j), checked_mul(q, a.at(r, i)));
    for (int r = 0; r < v.rows(); ++r)
      v.at(r, j) = checked_add(v.at(r, j), checked_mul(q, v.at(r, i)));
    for (int c = 0; c < v_inv.cols(); ++c)
      v_inv.at(i, c) = checked_add(v_inv.at(i, c), checked_mul(-q, v_inv.at(j, c)));
  }
};

}  // namespace

SmithDecomposition smith_normal_form(IntMat a) {
  const int rows = a.rows(), cols = a.cols();
  SnfWork w{std::move(a), IntMat::identity(rows), IntMat::identity(cols),
            IntMat::identity(cols)};

  const int bound = std::min(rows, cols);
  int t = 0;
  while (t < bound) {
    // Re-select the smallest nonzero entry of the trailing submatrix as the
    // pivot on every round; remainders shrink it monotonically.
    auto select_pivot = [&]() {
      int pi = -1, pj = -1;
      long long best = 0;
      for (int i = t; i < rows; ++i)
        for (int j = t; j < cols; ++j) {
          const long long v = std::llabs(w.a.at(i, j));
          if (v != 0 && (pi < 0 || v < best)) {
            best = v;
            pi = i;
            pj = j;
          }
        }
      if (pi < 0) return false;
      w.swap_rows(t, pi);
      w.swap_cols(t, pj);
      return true;
    };
    if (!select_pivot()) break;

    for (;;) {
      bool dirty = false;
      for (int i = t + 1; i < rows; ++i) {
        if (w.a.at(i, t) == 0) continue;
        w.add_row(i, t, -(w.a.at(i, t) / w.a.at(t, t)));
        dirty |= w.a.at(i, t) != 0;
      }
      for (int j = t + 1; j < cols; ++j) {
        if (w.a.at(t, j) == 0) continue;
        w.add_col(j, t, -(w.a.at(t, j) / w.a.at(t, t)));
        dirty |= w.a.at(t, j) != 0;
      }
      if (dirty) {
        select_pivot();
        continue;
      }
      // Pivot must divide the rest of the submatrix before we move on.
      for (int i = t + 1; i < rows && !dirty; ++i)
        for (int j = t + 1; j < cols && !dirty; ++j)
          if (w.a.at(i, j) % w.a.at(t, t) != 0) {
            w.add_row(t, i, 1);
            dirty = true;
          }
      if (!dirty) break;
    }
    if (w.a.at(t, t) < 0) w.negate_row(t);
    ++t;
  }

  SmithDecomposition out;
  out.rank = t;
  out.s = std::move(w.a);
  out.u = std::move(w.u);
  out.v = std::move(w.v);
  out.v_inv = std::move(w.v_inv);
  return out;
}

std::vector<long long> smith_diagonal(const IntMat& a) {
  auto snf = smith_normal_form(a);
  const int n = std::min(a.rows(), a.cols());
  std::vector<long long> d(n);
  for (int i = 0; i < n; ++i) d[i] = snf.s.at(i, i);
  return d;
}

namespace {

long long mod_norm(long long v, long long p) { return ((v % p) + p) % p; }

long long mod_inv(long long a, long long n) {
  long long t = 0, new_t = 1, r = n, new_r = mod_norm(a, n);
  while (new_r != 0) {
    const long long q = r / new_r;
    std::swap(t -= q * new_t, new_t);
    std::swap(r -= q * new_r, new_r);
  }
  if (r != 1) throw std::invalid_argument("element not invertible");
  return mod_norm(t, n);
}

}  // namespace

int rank_mod_p(IntMat a, long long p) {
  const int rows = a.rows(), cols = a.cols();
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) a.at(i, j) = mod_norm(a.at(i, j), p);
  int rank = 0;
  for (int col = 0; col < cols && rank < rows; ++col) {
    int pivot = -1;
    for (int i = rank; i < rows; ++i)
      if (a.at(i, col) != 0) {
        pivot = i;
        break;
      }
    if (pivot < 0) continue;
    for (int j = 0; j < cols; ++j) std::swap(a.at(rank, j), a.at(pivot, j));
    const long long inv = mod_inv(a.at(rank, col), p);
    for (int j = col; j < cols; ++j)
      a.at(rank, j) = mod_norm(a.at(rank, j) * inv, p);
    for (int i = 0; i < rows; ++i) {
      if (i == rank || a.at(i, col) == 0) continue;
      const long long f = a.at(i, col);
      for (int j = col; j < cols; ++j)
        a.at(i, j) = mod_norm(a.at(i, j) - f * a.at(rank, j), p);
    }
    ++rank;
  }
  return rank;
}

namespace {

// Unit u of Z_n with u * d = gcd(d, n) mod n.
long long unit_for(long long d, long long n) {
  const long long g = std::gcd(d, n);
  const long long dp = d / g, np = n / g;
  long long u = np == 1 ? 1 : mod_inv(mod_norm(dp, np), np);
  while (std::gcd(u, n) != 1) u += np;
  return mod_norm(u, n);
}

}  // namespace

IntMat howell_form(IntMat gens, long long n) {
  if (n < 2) throw std::invalid_argument("howell form requires modulus >= 2");
  const int cols = gens.cols();
  std::vector<std::vector<long long>> work;
  for (int i = 0; i < gens.rows(); ++i) {
    std::vector<long long> row(cols);
    bool nonzero = false;
    for (int j = 0; j < cols; ++j) {
      row[j] = mod_norm(gens.at(i, j), n);
      nonzero |= row[j] != 0;
    }
    if (nonzero) work.push_back(std::move(row));
  }

  std::vector<std::vector<long long>> echelon;  // one row per pivot column
  for (int col = 0; col < cols; ++col) {
    std::vector<std::vector<long long>> next;
    std::vector<long long> lead;  // accumulated row with pivot at `col`
    for (auto& row : work) {
      if (row[col] == 0) {
        next.push_back(std::move(row));
        continue;
      }
      if (lead.empty()) {
        lead = std::move(row);
        continue;
      }
      // Combine so `lead` gets gcd of the two leading entries and the other
      // row's entry vanishes.
      long long a = lead[col], b = row[col];
      long long x = 1, y = 0, g = a;
      {  // extended gcd of (a, b)
        long long x1 = 0, y1 = 1, r1 = b;
        while (r1 != 0) {
          const long long q = g / r1;
          std::swap(x -= q * x1, x1);
          std::swap(y -= q * y1, y1);
          std::swap(g -= q * r1, r1);
        }
      }
      std::vector<long long> combined(cols), cleared(cols);
      for (int j = 0; j < cols; ++j) {
        combined[j] = mod_norm(x * lead[j] + y * row[j], n);
        cleared[j] = mod_norm((b / g) * lead[j] - (a / g) * row[j], n);
      }
      lead = std::move(combined);
      if (std::any_of(cleared.begin(), cleared.end(),
                      [](long long v) { return v != 0; }))
        next.push_back(std::move(cleared));
    }
    if (!lead.empty()) {
      // Normalize the pivot to gcd(pivot, n) and emit the annihilator row.
      const long long u = unit_for(lead[col], n);
      for (auto& v : lead) v = mod_norm(v * u, n);
      const long long ann = n / std::gcd(lead[col], n);
      if (ann > 1) {
        std::vector<long long> extra(cols);
        bool nonzero = false;
        for (int j = 0; j < cols; ++j) {
          extra[j] = mod_norm(ann * lead[j], n);
          nonzero |= extra[j] != 0;
        }
        if (nonzero) next.push_back(std::move(extra));
      }
      echelon.push_back(std::move(lead));
    }
    work = std::move(next);
  }

  // Reduce entries above each pivot into [0, pivot), sweeping the pivot
  // columns left to right so later columns stay reduced.
  for (size_t k = 0; k < echelon.size(); ++k) {
    for (size_t i = k + 1; i < echelon.size(); ++i) {
      size_t col = 0;
      while (echelon[i][col] == 0) ++col;
      const long long q = echelon[k][col] / echelon[i][col];
      if (q == 0) continue;
      for (int j = 0; j < cols; ++j)
        echelon[k][j] = mod_norm(echelon[k][j] - q * echelon[i][j], n);
    }
  }

  IntMat out(static_cast<int>(echelon.size()), cols);
  for (size_t i = 0; i < echelon.size(); ++i)
    for (int j = 0; j < cols; ++j) out.at(static_cast<int>(i), j) = echelon[i][j];
  return out;
}

std::vector<long long> howell_reduce(const IntMat& howell,
                                     std::vector<long long> v, long long n) {
  for (auto& x : v) x = mod_norm(x, n);
  for (int i = 0; i < howell.rows(); ++i) {
    int col = 0;
    while (col < howell.cols() && howell.at(i, col) == 0) ++col;
    if (col == howell.cols()) continue;
    const long long pivot = howell.at(i, col);
    if (v[col] % pivot != 0) continue;
    const long long q = v[col] / pivot;
    for (int j = 0; j < howell.cols(); ++j)
      v[j] = mod_norm(v[j] - q * howell.at(i, j), n);
  }
  return v;
}

}  // namespace ybt
