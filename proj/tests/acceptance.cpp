// Acceptance suite: one checked claim per numbered criterion, one verdict
// line each, nonzero exit if anything fails.

#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "ybt/braid.hpp"
#include "ybt/cohomology.hpp"
#include "ybt/corpus.hpp"
#include "ybt/io.hpp"

using namespace ybt;

namespace {

int failures = 0;
int current_ok = 1;
std::string first_detail;

void expect(bool ok, const std::string& detail) {
  if (!ok && current_ok) {
    current_ok = 0;
    first_detail = detail;
  }
}

void criterion(int number, const char* title,
               const std::function<void()>& body) {
  current_ok = 1;
  first_detail.clear();
  try {
    body();
  } catch (const std::exception& e) {
    expect(false, std::string("exception: ") + e.what());
  }
  if (current_ok) {
    std::printf("[PASS] criterion %2d: %s\n", number, title);
  } else {
    std::printf("[FAIL] criterion %2d: %s (%s)\n", number, title,
                first_detail.c_str());
    ++failures;
  }
}

std::vector<OpTable> rack_kind_corpus() {
  auto out = corpus::shelves_on_2();
  for (auto& r : corpus::curated_racks_on_3()) out.push_back(std::move(r));
  out.push_back(make_laver_table(1));
  out.push_back(make_laver_table(2));
  return out;
}

// All signed words of length <= max_len on `strands` strands, fed to `visit`
// via depth-first extension.
void for_each_word(int strands, int max_len,
                   const std::function<void(const BraidWord&)>& visit) {
  std::vector<int> alphabet;
  for (int g = 1; g < strands; ++g) {
    alphabet.push_back(g);
    alphabet.push_back(-g);
  }
  BraidWord word{strands, {}};
  std::function<void()> extend = [&]() {
    visit(word);
    if (static_cast<int>(word.letters.size()) == max_len) return;
    for (int g : alphabet) {
      word.letters.push_back(g);
      extend();
      word.letters.pop_back();
    }
  };
  extend();
}

long long fixed_points(const SigmaTable& sigma, const SigmaTable& inverse,
                       const BraidWord& word) {
  const int m = sigma.size();
  const long long total = power(m, word.strands);
  long long fixed = 0;
  std::vector<int> t;
  for (long long rank = 0; rank < total; ++rank) {
    t = tuple_unrank(rank, word.strands, m);
    for (int g : word.letters) {
      const int i = (g > 0 ? g : -g) - 1;
      auto [x, y] = (g > 0 ? sigma : inverse).apply(t[i], t[i + 1]);
      t[i] = x;
      t[i + 1] = y;
    }
    if (tuple_rank(t, m) == rank) ++fixed;
  }
  return fixed;
}

}  // namespace

int main() {
  const auto biracks = corpus::birack_corpus();

  criterion(1, "two-element weight example reproduced exactly", [&] {
    const auto sigma = sigma_from_shelf(make_trivial_quandle(2));
    Cochain phi(2, 2, 2);
    phi.set(std::vector<int>{0, 1}, 1);
    const auto braid = parse_braid("1 1", 2);
    const auto empty = parse_braid("", 2);
    expect(weight(sigma, phi, braid, std::vector<int>{0, 1}) == 1,
           "weight of 1 1 on (0,1)");
    expect(weight(sigma, phi, empty, std::vector<int>{0, 1}) == 0,
           "weight of the empty braid");
    for (long long r = 0; r < 4; ++r) {
      const auto input = tuple_unrank(r, 2, 2);
      expect(act(sigma, braid, input) == act(sigma, empty, input),
             "actions of 1 1 and the empty braid differ");
    }
  });

  criterion(2, "trefoil and figure-eight closure counts", [&] {
    const auto r3 = sigma_from_shelf(make_alexander_quandle(3, 2));
    expect(coloring_count_closure(r3, parse_braid("1 1 1", 2)) == 9,
           "dihedral trefoil count");
    expect(coloring_count_closure(r3, parse_braid("1 -2 1 -2", 3)) == 3,
           "dihedral figure-eight count");
    const auto triv = sigma_from_shelf(make_trivial_quandle(3));
    expect(coloring_count_closure(triv, parse_braid("1 1 1", 2)) == 3,
           "trivial-quandle trefoil count");
  });

  criterion(3, "d o d = 0 exactly for all three complexes on the corpus", [&] {
    for (const auto& op : rack_kind_corpus()) {
      const auto cx = Complex::rack(op);
      for (int k = 0; k <= 3; ++k)
        expect((cx.matrix(k + 1) * cx.matrix(k)).is_zero(), "rack complex");
    }
    for (const auto& sigma : corpus::braided_corpus()) {
      const auto cx = Complex::braided(sigma);
      for (int k = 0; k <= 3; ++k)
        expect((cx.matrix(k + 1) * cx.matrix(k)).is_zero(), "braided complex");
    }
    for (const auto& sigma : biracks) {
      const auto cx = Complex::birack(sigma);
      for (int k = 0; k <= 3; ++k)
        expect((cx.matrix(k + 1) * cx.matrix(k)).is_zero(), "birack complex");
    }
  });

  criterion(4, "degree-2 cocycle identity and R-move invariance", [&] {
    for (const auto& rack : corpus::racks_on_2()) {
      const auto sigma = sigma_from_shelf(rack);
      const auto pairs = standard_rmove_pairs(3);
      for (long long n : {2, 3}) {
        const long long count = power(n, 4);
        for (long long code = 0; code < count; ++code) {
          Cochain f(2, n, 2);
          long long rest = code;
          for (long long r = 0; r < 4; ++r) {
            f.set_rank(r, rest % n);
            rest /= n;
          }
          // d^2 f = 0 iff the R-III identity holds for all triples.
          bool identity = true;
          for (int a = 0; a < 2; ++a)
            for (int b = 0; b < 2; ++b)
              for (int c = 0; c < 2; ++c) {
                auto phi = [&](int x, int y) {
                  return f.at(std::vector<int>{x, y});
                };
                identity &=
                    f.reduce(phi(a, b) + phi(rack.apply(a, b), c) -
                             phi(a, c) -
                             phi(rack.apply(a, c), rack.apply(b, c))) == 0;
              }
          const bool cocycle = d_rack(rack, f).is_zero();
          expect(cocycle == identity, "cocycle condition mismatch");
          const auto report = rmove_invariance_suite(sigma, f, pairs);
          if (cocycle) {
            expect(report.all_equal, "cocycle fails an R-move pair");
          } else {
            bool riii_failure = false;
            for (const auto& failure : report.failures)
              riii_failure |= pairs[failure.pair_index].label.find("RIII") !=
                              std::string::npos;
            expect(riii_failure, "non-cocycle passes all R-III pairs");
          }
        }
      }
    }
  });

  criterion(5, "braid relation equivalences on two elements", [&] {
    for (const auto& op : corpus::all_ops_on_2()) {
      expect(check_braided(sigma_from_shelf(op)).ok == check_shelf(op).ok,
             "sigma_SD vs shelf");
      for (int unit = 0; unit < 2; ++unit) {
        bool left_unit = true;
        for (int a = 0; a < 2; ++a) left_unit &= op.apply(unit, a) == a;
        if (!left_unit) continue;
        bool assoc = true;
        for (int a = 0; a < 2; ++a)
          for (int b = 0; b < 2; ++b)
            for (int c = 0; c < 2; ++c)
              assoc &= op.apply(op.apply(a, b), c) ==
                       op.apply(a, op.apply(b, c));
        expect(check_braided(sigma_from_monoid(op, unit)).ok == assoc,
               "sigma_Ass vs associativity");
      }
    }
  });

  criterion(6, "structure rack theorems and matched braid actions", [&] {
    for (const auto& rack : corpus::rack_corpus())
      expect(structure_rack(sigma_from_shelf(rack)) == rack, "retraction");
    for (const auto& sigma : biracks) {
      const auto rack = structure_rack(sigma);
      expect(check_rack(rack).ok, "structure rack fails rack axioms");
      bool involutive = true;
      for (int a = 0; a < sigma.size() && involutive; ++a)
        for (int b = 0; b < sigma.size() && involutive; ++b) {
          auto [x, y] = sigma.apply(a, b);
          involutive = sigma.apply(x, y) == std::pair<int, int>{a, b};
        }
      expect((rack == make_trivial_quandle(sigma.size())) == involutive,
             "triviality vs involutivity");
      expect(check_quandle(rack).ok == check_biquandle(sigma).has_value(),
             "quandle vs biquandle");

      const auto prime = sigma_from_shelf(rack);
      const auto inv = inverse_sigma(sigma);
      const auto prime_inv = inverse_sigma(prime);
      for (int strands = 2; strands <= 3; ++strands)
        for_each_word(strands, 6, [&](const BraidWord& word) {
          expect(fixed_points(sigma, *inv, word) ==
                     fixed_points(prime, *prime_inv, word),
                 "fixed point counts differ");
        });
    }
  });

  criterion(7, "guitar map bijectivity, entwining, and the monoid value", [&] {
    for (const auto& sigma : biracks)
      for (int n = 1; n <= 4; ++n) {
        const long long total = power(sigma.size(), n);
        std::vector<char> seen(static_cast<size_t>(total), 0);
        for (long long r = 0; r < total; ++r) {
          const auto image =
              guitar_map(sigma, tuple_unrank(r, n, sigma.size()));
          seen[static_cast<size_t>(tuple_rank(image, sigma.size()))] = 1;
        }
        for (char s : seen) expect(s == 1, "guitar map not onto");
      }
    for (const auto& sigma : biracks)
      for (int n = 2; n <= 4; ++n)
        expect(entwining_check(sigma, n).ok, "entwining fails");
    const auto ass = sigma_from_monoid(make_cyclic_group(2), 0);
    expect(guitar_map(ass, {1, 1, 1}) == std::vector<int>{1, 0, 1},
           "J(1,1,1) for the additive monoid");
  });

  criterion(8, "guitar pullback: unique convention, chain map, equal H^k", [&] {
    expect(passing_guitar_conventions() ==
               std::vector<GuitarConvention>{GuitarConvention::compose_j},
           "convention selection not unique");
    for (const auto& sigma : biracks) {
      const int m = sigma.size();
      for (int k = 1; k <= 2; ++k)
        for (long long r = 0; r < power(m, k); ++r) {
          const auto f = Cochain::delta(tuple_unrank(r, k, m), 0, m);
          expect(d_braided(sigma, pullback_guitar(sigma, f)) ==
                     pullback_guitar(sigma, d_birack(sigma, f)),
                 "chain map fails");
        }
      const auto braided = Complex::braided(sigma);
      const auto birack = Complex::birack(sigma);
      for (int k = 1; k <= 2; ++k)
        for (long long n : {2, 3})
          expect(braided.cohomology(k, n) == birack.cohomology(k, n),
                 "cohomology differs between the two complexes");
    }
  });

  criterion(9, "cohomology values and dual-rack equality", [&] {
    for (int m = 1; m <= 3; ++m) {
      const auto cx = Complex::rack(make_trivial_quandle(m));
      for (int k = 1; k <= 3; ++k)
        for (long long n : {2, 3, 6}) {
          const auto h = cx.cohomology(k, n);
          expect(static_cast<long long>(h.factors.size()) == power(m, k),
                 "trivial quandle rank");
          for (long long d : h.factors)
            expect(d == n, "trivial quandle factor");
        }
    }
    const auto r3 = Complex::rack(make_alexander_quandle(3, 2),
                                  Subspace::quandle_degenerate);
    expect(r3.cohomology(2, 3).trivial(), "H^2_Q of the dihedral quandle");
    expect(r3.cohomology(3, 3).factors == std::vector<long long>{3},
           "H^3_Q of the dihedral quandle");
    for (const auto& rack : corpus::rack_corpus()) {
      const auto cx = Complex::rack(rack);
      const auto dual = Complex::rack(dual_rack(rack));
      for (int k = 1; k <= 3; ++k)
        for (long long n : {2, 3})
          expect(cx.cohomology(k, n) == dual.cohomology(k, n),
                 "dual rack cohomology differs");
    }
  });

  criterion(10, "cup product: Leibniz, associativity, commutativity", [&] {
    expect(passing_cup_conventions() ==
               std::vector<CupConvention>{CupConvention::f_block_left},
           "cup convention selection not unique");
    for (const auto& sigma : corpus::all_braided_on_2()) {
      for (int u = 0; u < 2; ++u)
        for (int v = 0; v < 2; ++v) {
          const auto f = Cochain::delta(std::vector<int>{u}, 0, 2);
          const auto g = Cochain::delta(std::vector<int>{v}, 0, 2);
          expect(d_braided(sigma, cup_product(sigma, f, g)) ==
                     subtract(cup_product(sigma, d_braided(sigma, f), g),
                              cup_product(sigma, f, d_braided(sigma, g))),
                 "graded Leibniz fails");
          for (int w = 0; w < 2; ++w) {
            const auto h = Cochain::delta(std::vector<int>{w}, 0, 2);
            expect(cup_product(sigma, cup_product(sigma, f, g), h) ==
                       cup_product(sigma, f, cup_product(sigma, g, h)),
                   "associativity fails");
          }
        }
      const auto cx = Complex::braided(sigma);
      for (long long n : {2, 3}) {
        const auto cocycles = cx.cocycle_basis(1, n);
        for (const auto& f : cocycles)
          for (const auto& g : cocycles) {
            const auto anti =
                add(cup_product(sigma, f, g), cup_product(sigma, g, f));
            expect(static_cast<bool>(cx.coboundary_witness(anti)),
                   "commutator is not a coboundary");
          }
      }
    }
  });

  criterion(11, "coboundary weights collapse to count * t^0", [&] {
    for (const auto& sigma : biracks) {
      const int m = sigma.size();
      const auto cx = Complex::birack(sigma);
      for (long long n : {3, 6}) {
        std::vector<Cochain> coboundaries;
        for (int c = 0; c < m; ++c)
          coboundaries.push_back(
              cx.differential(Cochain::delta(std::vector<int>{c}, n, m)));
        coboundaries.push_back(add(scale(2, coboundaries[0]),
                                   coboundaries[m - 1]));
        for (const auto& phi : coboundaries)
          for (int strands = 2; strands <= 3; ++strands)
            for_each_word(strands, 5,
                          [&](const BraidWord& word) {
                            const auto inv =
                                weight_polynomial_closure(sigma, phi, word);
                            expect(inv.weight_polynomial[0] ==
                                       inv.coloring_count,
                                   "weight polynomial is not count * t^0");
                            for (size_t i = 1;
                                 i < inv.weight_polynomial.size(); ++i)
                              expect(inv.weight_polynomial[i] == 0,
                                     "nonzero higher coefficient");
                          });
      }
    }
  });

  if (failures == 0) {
    std::printf("all %d acceptance criteria passed\n", 11);
    return 0;
  }
  std::printf("%d acceptance criteria FAILED\n", failures);
  return 1;
}
