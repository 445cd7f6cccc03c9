#include "ybt/sigma.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace ybt {
namespace {

// Applies sigma to positions (i, i+1) of a tuple.
void apply_at(const SigmaTable& sigma, std::vector<int>& t, int i) {
  auto [x, y] = sigma.apply(t[i], t[i + 1]);
  t[i] = x;
  t[i + 1] = y;
}

// Column-inverse of the lowering maps: lower_inv[w][b] = the x with x_w = b,
// or -1 when no (or no unique) x exists.
std::vector<int> lowering_inverse(const SigmaTable& sigma) {
  const int m = sigma.size();
  std::vector<int> inv(static_cast<size_t>(m) * m, -1);
  for (int w = 0; w < m; ++w)
    for (int x = 0; x < m; ++x) {
      const int b = sigma.lower(x, w);
      auto& slot = inv[static_cast<size_t>(w) * m + b];
      slot = slot == -1 ? x : -2;
    }
  for (auto& v : inv)
    if (v == -2) v = -1;
  return inv;
}

bool is_left_nondegenerate(const SigmaTable& sigma) {
  const auto inv = lowering_inverse(sigma);
  return std::find(inv.begin(), inv.end(), -1) == inv.end();
}

// Greedy lexicographic matching: picks the smallest candidate for each a in
// turn, keeping the remainder completable (augmenting-path feasibility).
std::optional<std::vector<int>> smallest_matching(
    const std::vector<std::vector<char>>& allowed) {
  const int m = static_cast<int>(allowed.size());
  std::vector<int> match_of_x(m, -1);  // x -> a
  std::vector<int> t(m, -1);

  // match_of_x currently reflects t[0..a); tries to complete a..m-1.
  auto completable = [&](int from) {
    std::vector<int> owner = match_of_x;
    std::vector<char> visited(m);
    std::function<bool(int)> augment = [&](int a) -> bool {
      for (int x = 0; x < m; ++x) {
        if (!allowed[a][x] || visited[x]) continue;
        visited[x] = 1;
        if (owner[x] == -1 || (owner[x] >= from && augment(owner[x]))) {
          owner[x] = a;
          return true;
        }
      }
      return false;
    };
    for (int a = from; a < m; ++a) {
      std::fill(visited.begin(), visited.end(), 0);
      if (!augment(a)) return false;
    }
    return true;
  };

  if (!completable(0)) return std::nullopt;
  for (int a = 0; a < m; ++a) {
    bool placed = false;
    for (int x = 0; x < m && !placed; ++x) {
      if (!allowed[a][x] || match_of_x[x] != -1) continue;
      match_of_x[x] = a;
      if (completable(a + 1)) {
        t[a] = x;
        placed = true;
      } else {
        match_of_x[x] = -1;
      }
    }
    if (!placed) return std::nullopt;  // unreachable after the initial check
  }
  return t;
}

std::vector<std::vector<char>> fixed_pair_relation(const SigmaTable& sigma) {
  const int m = sigma.size();
  std::vector<std::vector<char>> allowed(m, std::vector<char>(m, 0));
  for (int a = 0; a < m; ++a)
    for (int x = 0; x < m; ++x)
      allowed[a][x] = sigma.apply(x, a) == std::pair<int, int>{x, a};
  return allowed;
}

OpTable structure_rack_table(const SigmaTable& sigma) {
  const int m = sigma.size();
  const auto low_inv = lowering_inverse(sigma);
  if (std::find(low_inv.begin(), low_inv.end(), -1) != low_inv.end())
    throw std::invalid_argument(
        "structure rack requires a left non-degenerate sigma");
  return OpTable::from_fn(m, [&](int a, int b) {
    const int x = low_inv[static_cast<size_t>(a) * m + b];  // x_a = b
    return sigma.lower(sigma.raise(a, x), b);
  });
}

}  // namespace

SigmaTable SigmaTable::from_entries(
    const std::vector<std::vector<std::array<int, 2>>>& entries) {
  const int m = static_cast<int>(entries.size());
  if (m == 0) throw std::invalid_argument("sigma table must be non-empty");
  std::vector<int> first, second;
  first.reserve(static_cast<size_t>(m) * m);
  second.reserve(static_cast<size_t>(m) * m);
  for (const auto& row : entries) {
    if (static_cast<int>(row.size()) != m)
      throw std::invalid_argument("sigma table must be square");
    for (auto [x, y] : row) {
      if (x < 0 || x >= m || y < 0 || y >= m)
        throw std::invalid_argument("sigma table entry out of range");
      first.push_back(x);
      second.push_back(y);
    }
  }
  return SigmaTable(m, std::move(first), std::move(second));
}

std::vector<std::vector<std::array<int, 2>>> SigmaTable::entries() const {
  std::vector<std::vector<std::array<int, 2>>> out(
      size_, std::vector<std::array<int, 2>>(size_));
  for (int a = 0; a < size_; ++a)
    for (int b = 0; b < size_; ++b) {
      auto [x, y] = apply(a, b);
      out[a][b] = {x, y};
    }
  return out;
}

BraidedCheck check_braided(const SigmaTable& sigma) {
  const int m = sigma.size();
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b)
      for (int c = 0; c < m; ++c) {
        std::vector<int> lhs = {a, b, c};
        apply_at(sigma, lhs, 0);
        apply_at(sigma, lhs, 1);
        apply_at(sigma, lhs, 0);
        std::vector<int> rhs = {a, b, c};
        apply_at(sigma, rhs, 1);
        apply_at(sigma, rhs, 0);
        apply_at(sigma, rhs, 1);
        if (lhs != rhs) {
          BraidedWitness w;
          w.triple = {a, b, c};
          w.lhs = {lhs[0], lhs[1], lhs[2]};
          w.rhs = {rhs[0], rhs[1], rhs[2]};
          return {false, w};
        }
      }
  return {true, std::nullopt};
}

SolutionReport check_birack(const SigmaTable& sigma) {
  const int m = sigma.size();
  SolutionReport report;

  auto braided = check_braided(sigma);
  report.is_braided = braided.ok;
  if (!braided.ok) {
    const auto& w = *braided.witness;
    report.first_violation =
        SigmaViolation{"braided", {w.triple[0], w.triple[1], w.triple[2]}};
  }

  std::vector<int> seen(static_cast<size_t>(m) * m, -1);
  report.is_invertible = true;
  for (int a = 0; a < m && report.is_invertible; ++a)
    for (int b = 0; b < m; ++b) {
      auto [x, y] = sigma.apply(a, b);
      auto& slot = seen[static_cast<size_t>(x) * m + y];
      if (slot != -1) {
        report.is_invertible = false;
        if (!report.first_violation)
          report.first_violation =
              SigmaViolation{"invertible", {slot / m, slot % m, a, b}};
        break;
      }
      slot = a * m + b;
    }

  report.is_left_nondegenerate = true;
  for (int a = 0; a < m && report.is_left_nondegenerate; ++a) {
    std::vector<int> hit(m, -1);
    for (int b = 0; b < m; ++b) {
      const int v = sigma.lower(b, a);
      if (hit[v] != -1) {
        report.is_left_nondegenerate = false;
        if (!report.first_violation)
          report.first_violation =
              SigmaViolation{"left-nondegenerate", {a, hit[v], b}};
        break;
      }
      hit[v] = b;
    }
  }

  report.is_right_nondegenerate = true;
  for (int b = 0; b < m && report.is_right_nondegenerate; ++b) {
    std::vector<int> hit(m, -1);
    for (int a = 0; a < m; ++a) {
      const int v = sigma.raise(a, b);
      if (hit[v] != -1) {
        report.is_right_nondegenerate = false;
        if (!report.first_violation)
          report.first_violation =
              SigmaViolation{"right-nondegenerate", {b, hit[v], a}};
        break;
      }
      hit[v] = a;
    }
  }

  report.is_birack = report.is_braided && report.is_invertible &&
                     report.is_left_nondegenerate &&
                     report.is_right_nondegenerate;
  if (report.is_birack) {
    report.t_map = smallest_matching(fixed_pair_relation(sigma));
    report.is_biquandle = report.t_map.has_value();
    if (!report.is_biquandle && !report.first_violation)
      report.first_violation = SigmaViolation{"biquandle", {}};
  }
  return report;
}

std::optional<std::vector<int>> check_biquandle(const SigmaTable& sigma) {
  auto report = check_birack(sigma);
  if (!report.is_birack)
    throw std::invalid_argument("check_biquandle requires a birack");
  return report.t_map;
}

long long count_biquandle_t_maps(const SigmaTable& sigma) {
  auto report = check_birack(sigma);
  if (!report.is_birack)
    throw std::invalid_argument("count_biquandle_t_maps requires a birack");
  const int m = sigma.size();
  if (m > 12)
    throw std::invalid_argument(
        "count_biquandle_t_maps supports carriers of at most 12 elements");
  const auto allowed = fixed_pair_relation(sigma);
  // Permanent of the relation matrix by subset DP.
  std::vector<long long> count(size_t{1} << m, 0);
  count[0] = 1;
  for (size_t mask = 0; mask < count.size(); ++mask) {
    if (count[mask] == 0) continue;
    const int a = __builtin_popcountll(mask);
    if (a == m) continue;
    for (int x = 0; x < m; ++x)
      if (allowed[a][x] && !(mask >> x & 1))
        count[mask | (size_t{1} << x)] += count[mask];
  }
  return count.back();
}

SigmaTable sigma_from_shelf(const OpTable& op) {
  return SigmaTable::from_fn(op.size(), [&](int a, int b) {
    return std::pair<int, int>{b, op.apply(a, b)};
  });
}

SigmaTable sigma_from_monoid(const OpTable& op, int unit) {
  const int m = op.size();
  if (unit < 0 || unit >= m)
    throw std::invalid_argument("unit element out of range");
  for (int a = 0; a < m; ++a)
    if (op.apply(unit, a) != a)
      throw std::invalid_argument("element is not a left unit");
  return SigmaTable::from_fn(m, [&](int a, int b) {
    return std::pair<int, int>{op.apply(a, b), unit};
  });
}

SigmaTable make_flip(int m) {
  if (m < 1) throw std::invalid_argument("carrier size must be positive");
  return SigmaTable::from_fn(
      m, [](int a, int b) { return std::pair<int, int>{b, a}; });
}

std::optional<SigmaTable> inverse_sigma(const SigmaTable& sigma) {
  const int m = sigma.size();
  std::vector<std::vector<std::array<int, 2>>> inv(
      m, std::vector<std::array<int, 2>>(m, {-1, -1}));
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) {
      auto [x, y] = sigma.apply(a, b);
      if (inv[x][y][0] != -1) return std::nullopt;
      inv[x][y] = {a, b};
    }
  return SigmaTable::from_entries(inv);
}

SidewaysTables sideways(const SigmaTable& sigma) {
  if (!check_birack(sigma).is_birack)
    throw std::invalid_argument("sideways operations require a birack");
  const int m = sigma.size();
  const auto low_inv = lowering_inverse(sigma);
  auto dot = OpTable::from_fn(
      m, [&](int a, int b) { return low_inv[static_cast<size_t>(a) * m + b]; });
  auto wdot = OpTable::from_fn(
      m, [&](int a, int b) { return sigma.raise(a, dot.apply(a, b)); });
  return {std::move(dot), std::move(wdot)};
}

OpTable structure_rack(const SigmaTable& sigma) {
  if (!check_birack(sigma).is_birack)
    throw std::invalid_argument("structure rack requires a birack");
  return structure_rack_table(sigma);
}

std::vector<int> tuple_lower(const SigmaTable& sigma, std::vector<int> tuple,
                             int w) {
  for (size_t i = 0; i < tuple.size(); ++i) {
    const int head = tuple[i];
    tuple[i] = sigma.lower(head, w);
    w = sigma.raise(w, head);
  }
  return tuple;
}

std::vector<int> tuple_raise(const SigmaTable& sigma, std::vector<int> tuple,
                             int w) {
  for (size_t i = tuple.size(); i-- > 0;) {
    const int last = tuple[i];
    tuple[i] = sigma.raise(last, w);
    w = sigma.lower(w, last);
  }
  return tuple;
}

std::vector<int> guitar_map(const SigmaTable& sigma, std::vector<int> tuple) {
  const int n = static_cast<int>(tuple.size());
  std::vector<int> out(tuple.size());
  for (int i = 0; i < n; ++i) {
    int x = tuple[i];
    for (int j = i - 1; j >= 0; --j) x = sigma.lower(x, tuple[j]);
    out[i] = x;
  }
  return out;
}

std::vector<int> guitar_inverse(const SigmaTable& sigma,
                                std::vector<int> tuple) {
  const int m = sigma.size();
  const auto low_inv = lowering_inverse(sigma);
  if (std::find(low_inv.begin(), low_inv.end(), -1) != low_inv.end())
    throw std::invalid_argument(
        "guitar inverse requires a left non-degenerate sigma");
  const int n = static_cast<int>(tuple.size());
  std::vector<int> out(tuple.size());
  for (int i = 0; i < n; ++i) {
    int x = tuple[i];
    for (int j = 0; j < i; ++j)
      x = low_inv[static_cast<size_t>(out[j]) * m + x];
    out[i] = x;
  }
  return out;
}

EntwiningReport entwining_check(const SigmaTable& sigma, int n) {
  if (n < 2 || n > 4)
    throw std::invalid_argument("entwining check supports 2 <= n <= 4");
  if (!is_left_nondegenerate(sigma))
    throw std::invalid_argument(
        "entwining check requires a left non-degenerate sigma");
  const SigmaTable prime = sigma_from_shelf(structure_rack_table(sigma));
  const int m = sigma.size();
  size_t total = 1;
  for (int i = 0; i < n; ++i) total *= static_cast<size_t>(m);

  std::vector<int> tuple(n);
  for (size_t r = 0; r < total; ++r) {
    size_t rest = r;
    for (int i = n - 1; i >= 0; --i) {
      tuple[i] = static_cast<int>(rest % m);
      rest /= m;
    }
    for (int i = 0; i + 1 < n; ++i) {
      std::vector<int> lhs = tuple;
      apply_at(sigma, lhs, i);
      lhs = guitar_map(sigma, lhs);
      std::vector<int> rhs = guitar_map(sigma, tuple);
      apply_at(prime, rhs, i);
      if (lhs != rhs) {
        EntwiningReport report;
        report.ok = false;
        report.position = i + 1;
        report.input = tuple;
        report.via_sigma_then_j = lhs;
        report.via_j_then_sigma_prime = rhs;
        return report;
      }
    }
  }
  EntwiningReport report;
  report.ok = true;
  return report;
}

}  // namespace ybt
