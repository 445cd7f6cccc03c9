#include "ybt/cohomology.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <stdexcept>

#include "ybt/corpus.hpp"

namespace ybt {
namespace {

// The two argument tuples of the i-th summand (0-based i here): the summand
// contributes (-1)^i * (f(plain) - f(acted)).
struct SummandArgs {
  std::vector<int> plain;
  std::vector<int> acted;
};

SummandArgs rack_summand(const OpTable& op, const std::vector<int>& t, int i) {
  SummandArgs out;
  const int len = static_cast<int>(t.size());
  out.plain.reserve(len - 1);
  out.acted.reserve(len - 1);
  for (int j = 0; j < len; ++j) {
    if (j == i) continue;
    out.plain.push_back(t[j]);
    out.acted.push_back(j < i ? op.apply(t[j], t[i]) : t[j]);
  }
  return out;
}

SummandArgs braided_summand(const SigmaTable& sigma, const std::vector<int>& t,
                            int i) {
  SummandArgs out;
  const int len = static_cast<int>(t.size());
  std::vector<int> prefix(t.begin(), t.begin() + i);
  std::vector<int> suffix(t.begin() + i + 1, t.end());
  out.plain = prefix;
  for (int v : tuple_lower(sigma, suffix, t[i])) out.plain.push_back(v);
  out.acted = tuple_raise(sigma, prefix, t[i]);
  for (int j = i + 1; j < len; ++j) out.acted.push_back(t[j]);
  return out;
}

SummandArgs birack_summand(const SidewaysTables& side, const std::vector<int>& t,
                           int i) {
  SummandArgs out;
  const int len = static_cast<int>(t.size());
  out.plain.reserve(len - 1);
  out.acted.reserve(len - 1);
  for (int j = 0; j < len; ++j) {
    if (j == i) continue;
    out.plain.push_back(t[j]);
    out.acted.push_back(j < i ? side.wdot.apply(t[j], t[i])
                              : side.dot.apply(t[i], t[j]));
  }
  return out;
}

template <typename Summand>
Cochain apply_differential(const Cochain& f, int carrier, Summand&& summand) {
  if (f.carrier() != carrier)
    throw std::invalid_argument("cochain carrier does not match structure");
  const int k = f.degree();
  Cochain out(k + 1, f.modulus(), carrier);
  const long long total = power(carrier, k + 1);
  for (long long rank = 0; rank < total; ++rank) {
    const auto t = tuple_unrank(rank, k + 1, carrier);
    long long value = 0;
    for (int i = 0; i <= k; ++i) {
      const auto args = summand(t, i);
      const long long term = f.at(args.plain) - f.at(args.acted);
      value += (i % 2 == 0) ? term : -term;
    }
    out.set_rank(rank, value);
  }
  return out;
}

}  // namespace

Cochain d_rack(const OpTable& op, const Cochain& f) {
  return apply_differential(f, op.size(), [&](const std::vector<int>& t, int i) {
    return rack_summand(op, t, i);
  });
}

Cochain d_braided(const SigmaTable& sigma, const Cochain& f) {
  return apply_differential(f, sigma.size(),
                            [&](const std::vector<int>& t, int i) {
                              return braided_summand(sigma, t, i);
                            });
}

Cochain d_birack(const SigmaTable& sigma, const Cochain& f) {
  const auto side = sideways(sigma);  // rejects non-biracks
  return apply_differential(f, sigma.size(),
                            [&](const std::vector<int>& t, int i) {
                              return birack_summand(side, t, i);
                            });
}

std::string GroupInvariants::to_string() const {
  if (factors.empty()) return "0";
  std::string out;
  for (size_t i = 0; i < factors.size(); ++i) {
    if (i) out += " x ";
    out += factors[i] == 0 ? "Z" : "Z_" + std::to_string(factors[i]);
  }
  return out;
}

Complex::Complex(ComplexBase base, Subspace sub, std::optional<OpTable> op,
                 std::optional<SigmaTable> sigma)
    : base_(base), subspace_(sub), carrier_(op ? op->size() : sigma->size()),
      op_(std::move(op)), sigma_(std::move(sigma)) {
  if (base_ == ComplexBase::birack) sideways_ = sideways(*sigma_);

  switch (subspace_) {
    case Subspace::full:
      break;
    case Subspace::quandle_degenerate:
      if (base_ == ComplexBase::rack) {
        if (!check_quandle(*op_).ok)
          throw std::invalid_argument(
              "quandle subcomplex requires a quandle operation");
      } else if (base_ == ComplexBase::birack) {
        auto t = check_biquandle(*sigma_);
        if (!t)
          throw std::invalid_argument(
              "degenerate subcomplex of a birack requires a biquandle");
        t_map_ = *t;
      } else {
        throw std::invalid_argument(
            "quandle_degenerate is not defined for the braided complex");
      }
      break;
    case Subspace::braided_biquandle_deg2: {
      if (base_ != ComplexBase::braided)
        throw std::invalid_argument(
            "braided_biquandle_deg2 applies to the braided complex only");
      auto t = check_biquandle(*sigma_);
      if (!t)
        throw std::invalid_argument(
            "braided biquandle subcomplex requires a biquandle");
      t_map_ = *t;
      break;
    }
  }
}

Complex Complex::rack(OpTable op, Subspace sub) {
  return Complex(ComplexBase::rack, sub, std::move(op), std::nullopt);
}

Complex Complex::braided(SigmaTable sigma, Subspace sub) {
  return Complex(ComplexBase::braided, sub, std::nullopt, std::move(sigma));
}

Complex Complex::birack(SigmaTable sigma, Subspace sub) {
  return Complex(ComplexBase::birack, sub, std::nullopt, std::move(sigma));
}

Cochain Complex::differential(const Cochain& f) const {
  switch (base_) {
    case ComplexBase::rack:
      return d_rack(*op_, f);
    case ComplexBase::braided:
      return d_braided(*sigma_, f);
    case ComplexBase::birack:
      return apply_differential(f, carrier_,
                                [&](const std::vector<int>& t, int i) {
                                  return birack_summand(*sideways_, t, i);
                                });
  }
  throw std::logic_error("unknown complex base");
}

IntMat Complex::matrix(int degree) const {
  if (degree < 0) throw std::invalid_argument("degree must be >= 0");
  const long long rows = power(carrier_, degree + 1);
  const long long cols = power(carrier_, degree);
  IntMat out(static_cast<int>(rows), static_cast<int>(cols));
  for (long long r = 0; r < rows; ++r) {
    const auto t = tuple_unrank(r, degree + 1, carrier_);
    for (int i = 0; i <= degree; ++i) {
      SummandArgs args;
      switch (base_) {
        case ComplexBase::rack:
          args = rack_summand(*op_, t, i);
          break;
        case ComplexBase::braided:
          args = braided_summand(*sigma_, t, i);
          break;
        case ComplexBase::birack:
          args = birack_summand(*sideways_, t, i);
          break;
      }
      const int sign = i % 2 == 0 ? 1 : -1;
      out.at(static_cast<int>(r),
             static_cast<int>(tuple_rank(args.plain, carrier_))) += sign;
      out.at(static_cast<int>(r),
             static_cast<int>(tuple_rank(args.acted, carrier_))) -= sign;
    }
  }
  return out;
}

bool Complex::in_basis(long long rank, int degree) const {
  switch (subspace_) {
    case Subspace::full:
      return true;
    case Subspace::quandle_degenerate: {
      const auto t = tuple_unrank(rank, degree, carrier_);
      for (int i = 0; i + 1 < degree; ++i)
        if (t[i] == t[i + 1]) return false;
      return true;
    }
    case Subspace::braided_biquandle_deg2: {
      if (degree != 2) return true;
      const auto t = tuple_unrank(rank, degree, carrier_);
      return t[0] != t_map_[t[1]];
    }
  }
  return true;
}

std::vector<long long> Complex::basis(int degree) const {
  std::vector<long long> out;
  const long long total = power(carrier_, degree);
  for (long long r = 0; r < total; ++r)
    if (in_basis(r, degree)) out.push_back(r);
  return out;
}

IntMat Complex::restricted_matrix(int degree) const {
  const IntMat full = matrix(degree);
  if (subspace_ == Subspace::full) return full;
  const auto row_basis = basis(degree + 1);
  const auto col_basis = basis(degree);
  std::vector<char> row_kept(static_cast<size_t>(full.rows()), 0);
  for (long long r : row_basis) row_kept[static_cast<size_t>(r)] = 1;
  for (long long c : col_basis)
    for (int r = 0; r < full.rows(); ++r)
      if (!row_kept[static_cast<size_t>(r)] &&
          full.at(r, static_cast<int>(c)) != 0)
        throw std::logic_error(
            "differential does not preserve the flagged subspace");
  IntMat out(static_cast<int>(row_basis.size()),
             static_cast<int>(col_basis.size()));
  for (size_t i = 0; i < row_basis.size(); ++i)
    for (size_t j = 0; j < col_basis.size(); ++j)
      out.at(static_cast<int>(i), static_cast<int>(j)) =
          full.at(static_cast<int>(row_basis[i]),
                  static_cast<int>(col_basis[j]));
  return out;
}

namespace {

// Scaling factors turning the Smith basis into a basis of the lattice
// {x : A x = 0 mod n}; for n = 0 only the exact kernel columns survive.
std::vector<long long> kernel_scales(const SmithDecomposition& snf,
                                     long long n, int cols) {
  std::vector<long long> t(static_cast<size_t>(cols), 1);
  for (int i = 0; i < snf.rank; ++i) {
    const long long s = snf.s.at(i, i);
    t[static_cast<size_t>(i)] = n == 0 ? 0 : n / std::gcd(s, n);
  }
  return t;  // 0 marks columns excluded from the n = 0 kernel
}

}  // namespace

GroupInvariants Complex::cohomology(int degree, long long modulus) const {
  if (degree < 1) throw std::invalid_argument("cohomology degree must be >= 1");
  if (subspace_ == Subspace::braided_biquandle_deg2 && degree != 2)
    throw std::invalid_argument(
        "the braided biquandle subcomplex is defined in degree 2 only");
  const IntMat a = restricted_matrix(degree);
  const IntMat b = restricted_matrix(degree - 1);
  const int n_cols = a.cols();
  assert(b.rows() == n_cols);

  const auto snf = smith_normal_form(a);
  const auto scales = kernel_scales(snf, modulus, n_cols);

  // Coordinates of the coboundary generators (and n * identity) in the
  // scaled kernel basis.
  const IntMat vinv_b = snf.v_inv * b;
  std::vector<int> kept;  // kernel basis indices
  for (int i = 0; i < n_cols; ++i)
    if (scales[static_cast<size_t>(i)] != 0) kept.push_back(i);

  const int gen_count = b.cols() + (modulus > 0 ? n_cols : 0);
  IntMat coords(static_cast<int>(kept.size()), gen_count);
  for (int g = 0; g < b.cols(); ++g)
    for (size_t i = 0; i < kept.size(); ++i) {
      const long long y = vinv_b.at(kept[i], g);
      const long long t = scales[static_cast<size_t>(kept[i])];
      assert(y % t == 0);
      coords.at(static_cast<int>(i), g) = y / t;
    }
  if (modulus > 0)
    for (int j = 0; j < n_cols; ++j)
      for (size_t i = 0; i < kept.size(); ++i) {
        const long long y = checked_mul(modulus, snf.v_inv.at(kept[i], j));
        const long long t = scales[static_cast<size_t>(kept[i])];
        assert(y % t == 0);
        coords.at(static_cast<int>(i), b.cols() + j) = y / t;
      }

  const auto diag = smith_diagonal(coords);
  GroupInvariants out;
  int rank = 0;
  for (long long d : diag)
    if (d != 0) {
      ++rank;
      if (d > 1) out.factors.push_back(d);
    }
  const int free_rank = static_cast<int>(kept.size()) - rank;
  assert(modulus == 0 || free_rank == 0);
  for (int i = 0; i < free_rank; ++i) out.factors.push_back(0);
  return out;
}

std::vector<Cochain> Complex::cocycle_basis(int degree, long long modulus) const {
  if (degree < 0) throw std::invalid_argument("degree must be >= 0");
  if (subspace_ == Subspace::braided_biquandle_deg2 && degree != 2)
    throw std::invalid_argument(
        "the braided biquandle subcomplex is defined in degree 2 only");
  const IntMat a = restricted_matrix(degree);
  const auto col_basis = basis(degree);
  const int n_cols = a.cols();
  const auto snf = smith_normal_form(a);
  const auto scales = kernel_scales(snf, modulus, n_cols);

  std::vector<std::vector<long long>> gens;
  for (int i = 0; i < n_cols; ++i) {
    const long long t = scales[static_cast<size_t>(i)];
    if (t == 0) continue;                   // not in the n = 0 kernel
    if (modulus > 0 && t % modulus == 0) continue;  // the zero generator
    std::vector<long long> g(static_cast<size_t>(n_cols));
    for (int r = 0; r < n_cols; ++r)
      g[static_cast<size_t>(r)] = checked_mul(t, snf.v.at(r, i));
    gens.push_back(std::move(g));
  }

  std::vector<std::vector<long long>> rows;
  if (modulus > 0) {
    IntMat gm(static_cast<int>(gens.size()), n_cols);
    for (size_t i = 0; i < gens.size(); ++i)
      for (int j = 0; j < n_cols; ++j)
        gm.at(static_cast<int>(i), j) = gens[i][static_cast<size_t>(j)];
    const IntMat h = howell_form(gm, modulus);
    for (int i = 0; i < h.rows(); ++i) {
      std::vector<long long> row(static_cast<size_t>(n_cols));
      for (int j = 0; j < n_cols; ++j) row[static_cast<size_t>(j)] = h.at(i, j);
      rows.push_back(std::move(row));
    }
  } else {
    rows = std::move(gens);
  }

  std::vector<Cochain> out;
  for (const auto& row : rows) {
    Cochain f(degree, modulus, carrier_);
    for (int j = 0; j < n_cols; ++j)
      f.set_rank(col_basis[static_cast<size_t>(j)], row[static_cast<size_t>(j)]);
    out.push_back(std::move(f));
  }
  return out;
}

CoboundaryResult Complex::coboundary_witness(const Cochain& f) const {
  if (f.degree() < 1)
    throw std::invalid_argument("coboundary check needs degree >= 1");
  if (f.carrier() != carrier_)
    throw std::invalid_argument("cochain carrier does not match structure");
  if (subspace_ == Subspace::braided_biquandle_deg2 && f.degree() != 2)
    throw std::invalid_argument(
        "the braided biquandle subcomplex is defined in degree 2 only");
  const long long n = f.modulus();
  const auto col_basis = basis(f.degree());
  if (subspace_ != Subspace::full) {
    std::vector<char> allowed(f.values().size(), 0);
    for (long long r : col_basis) allowed[static_cast<size_t>(r)] = 1;
    for (size_t r = 0; r < f.values().size(); ++r)
      if (!allowed[r] && f.values()[r] != 0)
        throw std::invalid_argument(
            "cochain does not lie in the flagged subspace");
  }

  const IntMat b = restricted_matrix(f.degree() - 1);
  const int rows = b.rows();
  const int cols = b.cols() + (n > 0 ? rows : 0);
  IntMat system(rows, cols);
  for (int i = 0; i < rows; ++i) {
    for (int j = 0; j < b.cols(); ++j) system.at(i, j) = b.at(i, j);
    if (n > 0) system.at(i, b.cols() + i) = n;
  }

  const auto snf = smith_normal_form(system);
  std::vector<long long> y(static_cast<size_t>(rows), 0);
  for (int i = 0; i < rows; ++i) {
    long long acc = 0;
    for (int j = 0; j < rows; ++j)
      acc = checked_add(acc, checked_mul(snf.u.at(i, j),
                                         f.value_at_rank(col_basis[j])));
    y[static_cast<size_t>(i)] = acc;
  }

  CoboundaryResult result;
  for (int i = 0; i < rows; ++i) {
    const long long s = i < snf.rank ? snf.s.at(i, i) : 0;
    if (s == 0 ? y[static_cast<size_t>(i)] != 0
               : y[static_cast<size_t>(i)] % s != 0) {
      result.certificate =
          "no solution: invariant factor " + std::to_string(s) +
          " does not divide transformed entry " +
          std::to_string(y[static_cast<size_t>(i)]) + " at row " +
          std::to_string(i);
      return result;
    }
  }

  std::vector<long long> x(static_cast<size_t>(cols), 0);
  for (int j = 0; j < cols; ++j) {
    long long acc = 0;
    for (int i = 0; i < snf.rank; ++i)
      acc = checked_add(
          acc, checked_mul(snf.v.at(j, i), y[static_cast<size_t>(i)] /
                                               snf.s.at(i, i)));
    x[static_cast<size_t>(j)] = acc;
  }

  const auto low_basis = basis(f.degree() - 1);
  Cochain witness(f.degree() - 1, n, carrier_);
  for (int j = 0; j < b.cols(); ++j)
    witness.set_rank(low_basis[static_cast<size_t>(j)],
                     witness.reduce(x[static_cast<size_t>(j)]));
  if (differential(witness) != f)
    throw std::logic_error("coboundary witness failed verification");
  result.witness = std::move(witness);
  return result;
}

namespace {

std::vector<int> apply_guitar_convention(const SigmaTable& sigma,
                                         std::vector<int> tuple,
                                         GuitarConvention convention) {
  switch (convention) {
    case GuitarConvention::compose_j:
      return guitar_map(sigma, std::move(tuple));
    case GuitarConvention::compose_j_inverse:
      return guitar_inverse(sigma, std::move(tuple));
    case GuitarConvention::compose_j_reversed: {
      auto out = guitar_map(sigma, std::move(tuple));
      std::reverse(out.begin(), out.end());
      return out;
    }
    case GuitarConvention::compose_j_inverse_reversed: {
      auto out = guitar_inverse(sigma, std::move(tuple));
      std::reverse(out.begin(), out.end());
      return out;
    }
  }
  throw std::logic_error("unknown guitar convention");
}

}  // namespace

Cochain pullback_guitar_with(const SigmaTable& sigma, const Cochain& f,
                             GuitarConvention convention) {
  if (f.carrier() != sigma.size())
    throw std::invalid_argument("cochain carrier does not match sigma");
  Cochain out(f.degree(), f.modulus(), f.carrier());
  const long long total = power(f.carrier(), f.degree());
  for (long long rank = 0; rank < total; ++rank) {
    auto tuple = tuple_unrank(rank, f.degree(), f.carrier());
    out.set_rank(rank,
                 f.at(apply_guitar_convention(sigma, std::move(tuple),
                                              convention)));
  }
  return out;
}

Cochain pullback_guitar(const SigmaTable& sigma, const Cochain& f) {
  if (!check_birack(sigma).is_birack)
    throw std::invalid_argument("guitar pullback requires a birack");
  return pullback_guitar_with(sigma, f, kGuitarConvention);
}

std::vector<GuitarConvention> passing_guitar_conventions() {
  const auto candidates = {GuitarConvention::compose_j,
                           GuitarConvention::compose_j_inverse,
                           GuitarConvention::compose_j_reversed,
                           GuitarConvention::compose_j_inverse_reversed};
  auto solutions = corpus::birack_corpus();
  std::vector<GuitarConvention> passing;
  for (auto convention : candidates) {
    bool ok = true;
    for (const auto& sigma : solutions) {
      const int m = sigma.size();
      for (int k = 1; k <= 3 && ok; ++k) {
        const long long dim = power(m, k);
        for (long long r = 0; r < dim && ok; ++r) {
          const auto tuple = tuple_unrank(r, k, m);
          const Cochain f = Cochain::delta(tuple, 0, m);
          const Cochain lhs =
              d_braided(sigma, pullback_guitar_with(sigma, f, convention));
          const Cochain rhs =
              pullback_guitar_with(sigma, d_birack(sigma, f), convention);
          ok = lhs == rhs;
        }
      }
      if (!ok) break;
    }
    if (ok) passing.push_back(convention);
  }
  return passing;
}

namespace {

struct ShuffleTerm {
  int sign = 1;
  std::vector<int> routed;  // colors after routing, chosen block first
};

// Routes the strands whose input positions lie in `front` to the left block
// (both blocks keep their input order), propagating colors through each
// positive crossing with sigma.  The sign is (-1)^crossings.
ShuffleTerm route_to_front(const SigmaTable& sigma, std::vector<int> colors,
                           const std::vector<int>& front) {
  const int total = static_cast<int>(colors.size());
  std::vector<int> order(total);  // order[p] = input index now at position p
  for (int p = 0; p < total; ++p) order[p] = p;

  std::vector<int> desired = front;
  std::vector<char> in_front(total, 0);
  for (int idx : front) in_front[idx] = 1;
  for (int idx = 0; idx < total; ++idx)
    if (!in_front[idx]) desired.push_back(idx);

  ShuffleTerm term;
  for (int p = 0; p < total; ++p) {
    int q = p;
    while (order[q] != desired[p]) ++q;
    for (; q > p; --q) {
      auto [x, y] = sigma.apply(colors[q - 1], colors[q]);
      colors[q - 1] = x;
      colors[q] = y;
      std::swap(order[q - 1], order[q]);
      term.sign = -term.sign;
    }
  }
  term.routed = std::move(colors);
  return term;
}

}  // namespace

Cochain cup_product_with(const SigmaTable& sigma, const Cochain& f,
                         const Cochain& g, CupConvention convention) {
  if (f.carrier() != sigma.size() || g.carrier() != sigma.size())
    throw std::invalid_argument("cochain carrier does not match sigma");
  if (f.modulus() != g.modulus())
    throw std::invalid_argument("cochain modulus mismatch");
  const bool reversed = convention == CupConvention::f_block_left_reversed ||
                        convention == CupConvention::g_block_left_reversed;
  const bool f_left = convention == CupConvention::f_block_left ||
                      convention == CupConvention::f_block_left_reversed;
  const int kf = f.degree(), kg = g.degree(), total = kf + kg;
  const int m = sigma.size();
  Cochain out(total, f.modulus(), m);

  // Subsets of input positions routed to the f block, in increasing order.
  std::vector<std::vector<int>> subsets;
  std::vector<int> pick;
  auto gather = [&](auto&& self, int next) -> void {
    if (static_cast<int>(pick.size()) == kf) {
      subsets.push_back(pick);
      return;
    }
    for (int i = next; i < total; ++i) {
      pick.push_back(i);
      self(self, i + 1);
      pick.pop_back();
    }
  };
  gather(gather, 0);

  const long long count = power(m, total);
  for (long long rank = 0; rank < count; ++rank) {
    auto colors = tuple_unrank(rank, total, m);
    if (reversed) std::reverse(colors.begin(), colors.end());
    long long acc = 0;
    for (const auto& subset : subsets) {
      std::vector<int> front = subset;
      if (!f_left) {
        front.clear();
        std::vector<char> chosen(total, 0);
        for (int idx : subset) chosen[idx] = 1;
        for (int idx = 0; idx < total; ++idx)
          if (!chosen[idx]) front.push_back(idx);
      }
      auto term = route_to_front(sigma, colors, front);
      std::vector<int> left(term.routed.begin(),
                            term.routed.begin() + (f_left ? kf : kg));
      std::vector<int> right(term.routed.begin() + (f_left ? kf : kg),
                             term.routed.end());
      if (reversed) {
        std::reverse(left.begin(), left.end());
        std::reverse(right.begin(), right.end());
      }
      const long long fv = f_left ? f.at(left) : f.at(right);
      const long long gv = f_left ? g.at(right) : g.at(left);
      acc += term.sign * fv * gv;
    }
    out.set_rank(rank, acc);
  }
  return out;
}

Cochain cup_product(const SigmaTable& sigma, const Cochain& f,
                    const Cochain& g) {
  if (!check_braided(sigma).ok)
    throw std::invalid_argument("cup product requires a braided set");
  return cup_product_with(sigma, f, g, kCupConvention);
}

std::vector<CupConvention> passing_cup_conventions() {
  const auto candidates = {
      CupConvention::f_block_left, CupConvention::g_block_left,
      CupConvention::f_block_left_reversed,
      CupConvention::g_block_left_reversed};
  const auto braided = corpus::all_braided_on_2();
  std::vector<CupConvention> leibniz_pass;
  for (auto convention : candidates) {
    bool ok = true;
    for (const auto& sigma : braided) {
      for (int u = 0; u < 2 && ok; ++u)
        for (int v = 0; v < 2 && ok; ++v) {
          const Cochain f = Cochain::delta(std::vector<int>{u}, 0, 2);
          const Cochain g = Cochain::delta(std::vector<int>{v}, 0, 2);
          const Cochain lhs =
              d_braided(sigma, cup_product_with(sigma, f, g, convention));
          const Cochain rhs = subtract(
              cup_product_with(sigma, d_braided(sigma, f), g, convention),
              cup_product_with(sigma, f, d_braided(sigma, g), convention));
          ok = lhs == rhs;
        }
      if (!ok) break;
    }
    if (ok) leibniz_pass.push_back(convention);
  }
  if (leibniz_pass.size() <= 1) return leibniz_pass;

  // Tie break on associativity in degrees (1,1,1).
  std::vector<CupConvention> assoc_pass;
  for (auto convention : leibniz_pass) {
    bool ok = true;
    for (const auto& sigma : braided) {
      for (int u = 0; u < 2 && ok; ++u)
        for (int v = 0; v < 2 && ok; ++v)
          for (int w = 0; w < 2 && ok; ++w) {
            const Cochain f = Cochain::delta(std::vector<int>{u}, 0, 2);
            const Cochain g = Cochain::delta(std::vector<int>{v}, 0, 2);
            const Cochain h = Cochain::delta(std::vector<int>{w}, 0, 2);
            const Cochain lhs = cup_product_with(
                sigma, cup_product_with(sigma, f, g, convention), h,
                convention);
            const Cochain rhs = cup_product_with(
                sigma, f, cup_product_with(sigma, g, h, convention),
                convention);
            ok = lhs == rhs;
          }
      if (!ok) break;
    }
    if (ok) assoc_pass.push_back(convention);
  }
  return assoc_pass;
}

}  // namespace ybt
