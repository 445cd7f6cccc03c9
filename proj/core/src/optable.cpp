#include "ybt/optable.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace ybt {

OpTable OpTable::from_rows(const std::vector<std::vector<int>>& rows) {
  const int m = static_cast<int>(rows.size());
  if (m == 0) throw std::invalid_argument("operation table must be non-empty");
  std::vector<int> flat;
  flat.reserve(static_cast<size_t>(m) * m);
  for (const auto& row : rows) {
    if (static_cast<int>(row.size()) != m)
      throw std::invalid_argument("operation table must be square");
    for (int v : row) {
      if (v < 0 || v >= m)
        throw std::invalid_argument("operation table entry out of range");
      flat.push_back(v);
    }
  }
  return OpTable(m, std::move(flat));
}

std::vector<std::vector<int>> OpTable::rows() const {
  std::vector<std::vector<int>> out(size_, std::vector<int>(size_));
  for (int a = 0; a < size_; ++a)
    for (int b = 0; b < size_; ++b) out[a][b] = apply(a, b);
  return out;
}

CheckResult check_shelf(const OpTable& op) {
  const int m = op.size();
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b)
      for (int c = 0; c < m; ++c) {
        const int lhs = op.apply(op.apply(a, b), c);
        const int rhs = op.apply(op.apply(a, c), op.apply(b, c));
        if (lhs != rhs) return {false, Violation{"shelf", {a, b, c}}};
      }
  return {true, std::nullopt};
}

CheckResult check_rack(const OpTable& op) {
  auto shelf = check_shelf(op);
  if (!shelf.ok) return shelf;
  const int m = op.size();
  for (int b = 0; b < m; ++b) {
    std::vector<int> seen(m, -1);
    for (int a = 0; a < m; ++a) {
      const int v = op.apply(a, b);
      if (seen[v] >= 0) return {false, Violation{"rack", {seen[v], a, b}}};
      seen[v] = a;
    }
  }
  return {true, std::nullopt};
}

CheckResult check_quandle(const OpTable& op) {
  auto rack = check_rack(op);
  if (!rack.ok) return rack;
  for (int a = 0; a < op.size(); ++a)
    if (op.apply(a, a) != a) return {false, Violation{"quandle", {a, a, a}}};
  return {true, std::nullopt};
}

AxiomReport axiom_report(const OpTable& op) {
  AxiomReport report;
  auto shelf = check_shelf(op);
  report.is_shelf = shelf.ok;
  if (!shelf.ok) {
    report.first_violation = shelf.violation;
    return report;
  }
  auto rack = check_rack(op);
  report.is_rack = rack.ok;
  if (!rack.ok) {
    report.first_violation = rack.violation;
    return report;
  }
  auto quandle = check_quandle(op);
  report.is_quandle = quandle.ok;
  if (!quandle.ok) report.first_violation = quandle.violation;
  return report;
}

OpTable make_trivial_quandle(int m) {
  if (m < 1) throw std::invalid_argument("carrier size must be positive");
  return OpTable::from_fn(m, [](int a, int) { return a; });
}

OpTable make_alexander_quandle(int m, int t) {
  if (m < 1) throw std::invalid_argument("carrier size must be positive");
  const int tm = ((t % m) + m) % m;
  if (std::gcd(tm, m) != 1)
    throw std::invalid_argument(
        "alexander parameter t must be invertible mod m (gcd(t,m)=1)");
  return OpTable::from_fn(m, [&](int a, int b) {
    long long v = static_cast<long long>(tm) * a +
                  static_cast<long long>(1 - tm) * b;
    return static_cast<int>(((v % m) + m) % m);
  });
}

GroupCheck check_group(const OpTable& op) {
  const int m = op.size();
  int identity = -1;
  for (int e = 0; e < m; ++e) {
    bool is_id = true;
    for (int a = 0; a < m && is_id; ++a)
      is_id = op.apply(e, a) == a && op.apply(a, e) == a;
    if (is_id) {
      identity = e;
      break;
    }
  }
  if (identity < 0) return {false, "identity", -1};
  for (int a = 0; a < m; ++a) {
    bool has_inverse = false;
    for (int b = 0; b < m && !has_inverse; ++b)
      has_inverse = op.apply(a, b) == identity && op.apply(b, a) == identity;
    if (!has_inverse) return {false, "inverses", identity};
  }
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b)
      for (int c = 0; c < m; ++c)
        if (op.apply(op.apply(a, b), c) != op.apply(a, op.apply(b, c)))
          return {false, "associativity", identity};
  return {true, "", identity};
}

OpTable make_conjugation_quandle(const OpTable& group) {
  auto gc = check_group(group);
  if (!gc.ok)
    throw std::invalid_argument("input is not a group: fails " +
                                gc.failed_axiom);
  const int m = group.size();
  std::vector<int> inv(m);
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b)
      if (group.apply(a, b) == gc.identity) inv[a] = b;
  return OpTable::from_fn(m, [&](int a, int b) {
    return group.apply(group.apply(inv[b], a), b);
  });
}

OpTable make_laver_table(int k) {
  if (k < 0 || k > 4)
    throw std::invalid_argument("laver table index must lie in [0, 4]");
  const int n = 1 << k;
  // Classical table on {1..n}, stored 0-based: star[p][q] = (p+1)*(q+1) - 1.
  std::vector<std::vector<int>> star(n, std::vector<int>(n, -1));
  for (int q = 0; q < n; ++q) star[n - 1][q] = q;  // row of 2^k is the identity
  for (int p = n - 2; p >= 0; --p) {
    star[p][0] = p + 1;  // a*1 = a+1
    for (int q = 1; q < n; ++q) star[p][q] = star[star[p][q - 1]][p + 1];
  }
  // a <| b = b * a, shifted to {0..n-1}.
  return OpTable::from_fn(n, [&](int a, int b) { return star[b][a]; });
}

OpTable dual_rack(const OpTable& op) {
  const int m = op.size();
  std::vector<std::vector<int>> dual(m, std::vector<int>(m, -1));
  for (int b = 0; b < m; ++b) {
    for (int c = 0; c < m; ++c) {
      const int a = op.apply(c, b);
      if (dual[a][b] != -1)
        throw std::invalid_argument(
            "dual_rack: right translations are not invertible");
      dual[a][b] = c;
    }
  }
  return OpTable::from_rows(dual);
}

OpTable make_cyclic_group(int m) {
  if (m < 1) throw std::invalid_argument("carrier size must be positive");
  return OpTable::from_fn(m, [m](int a, int b) { return (a + b) % m; });
}

std::vector<int> permutation_of_rank(int letters, long long rank) {
  std::vector<int> pool(letters);
  std::iota(pool.begin(), pool.end(), 0);
  std::vector<long long> fact(letters + 1, 1);
  for (int i = 1; i <= letters; ++i) fact[i] = fact[i - 1] * i;
  if (rank < 0 || rank >= fact[letters])
    throw std::invalid_argument("permutation rank out of range");
  std::vector<int> out;
  out.reserve(letters);
  for (int i = letters - 1; i >= 0; --i) {
    const long long f = fact[i];
    const auto idx = static_cast<size_t>(rank / f);
    rank %= f;
    out.push_back(pool[idx]);
    pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(idx));
  }
  return out;
}

long long rank_of_permutation(const std::vector<int>& one_line) {
  const int n = static_cast<int>(one_line.size());
  std::vector<long long> fact(n + 1, 1);
  for (int i = 1; i <= n; ++i) fact[i] = fact[i - 1] * i;
  long long rank = 0;
  for (int i = 0; i < n; ++i) {
    int smaller = 0;
    for (int j = i + 1; j < n; ++j)
      if (one_line[j] < one_line[i]) ++smaller;
    rank += smaller * fact[n - 1 - i];
  }
  return rank;
}

OpTable make_symmetric_group(int letters) {
  if (letters < 1 || letters > 6)
    throw std::invalid_argument("symmetric group supported for 1..6 letters");
  long long order = 1;
  for (int i = 2; i <= letters; ++i) order *= i;
  const int m = static_cast<int>(order);
  std::vector<std::vector<int>> perms(m);
  for (int r = 0; r < m; ++r) perms[r] = permutation_of_rank(letters, r);
  return OpTable::from_fn(m, [&](int p, int q) {
    std::vector<int> prod(letters);
    for (int i = 0; i < letters; ++i) prod[i] = perms[q][perms[p][i]];
    return static_cast<int>(rank_of_permutation(prod));
  });
}

}  // namespace ybt
