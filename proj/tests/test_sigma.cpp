#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>

#include "ybt/cochain.hpp"
#include "ybt/corpus.hpp"
#include "ybt/sigma.hpp"

using namespace ybt;

namespace {

bool associativity_oracle(const OpTable& op) {
  const int m = op.size();
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b)
      for (int c = 0; c < m; ++c)
        if (op.apply(op.apply(a, b), c) != op.apply(a, op.apply(b, c)))
          return false;
  return true;
}

SigmaTable mirror_sd(const OpTable& op) {
  return SigmaTable::from_fn(op.size(), [&](int a, int b) {
    return std::pair<int, int>{op.apply(b, a), a};
  });
}

}  // namespace

TEST_CASE("sigma table construction and accessors") {
  CHECK_THROWS_AS(SigmaTable::from_entries({}), std::invalid_argument);
  CHECK_THROWS_AS(SigmaTable::from_entries({{{0, 2}, {0, 0}}, {{0, 0}, {0, 0}}}),
                  std::invalid_argument);
  const auto flip = make_flip(2);
  CHECK(flip.apply(0, 1) == std::pair<int, int>{1, 0});
  CHECK(flip.lower(1, 0) == 1);  // b_a = b
  CHECK(flip.raise(1, 0) == 1);  // a^b = a
}

TEST_CASE("check_braided") {
  CHECK(check_braided(make_flip(2)).ok);
  CHECK(check_braided(make_flip(5)).ok);

  const auto xorop = OpTable::from_fn(2, [](int a, int b) { return a ^ b; });
  const auto bad = check_braided(sigma_from_shelf(xorop));
  CHECK_FALSE(bad.ok);
  REQUIRE(bad.witness.has_value());
  CHECK(bad.witness->lhs != bad.witness->rhs);

  CHECK(check_braided(sigma_from_monoid(make_cyclic_group(2), 0)).ok);
}

TEST_CASE("braid relation for sigma_SD is self-distributivity") {
  for (const auto& op : corpus::all_ops_on_2())
    CHECK(check_braided(sigma_from_shelf(op)).ok == check_shelf(op).ok);
  for (int code = 0; code < 19683; ++code) {
    int digits[9], rest = code;
    for (int& d : digits) {
      d = rest % 3;
      rest /= 3;
    }
    const auto op =
        OpTable::from_fn(3, [&](int a, int b) { return digits[3 * a + b]; });
    CHECK(check_braided(sigma_from_shelf(op)).ok == check_shelf(op).ok);
  }
}

TEST_CASE("braid relation for sigma_Ass is associativity") {
  for (const auto& op : corpus::all_ops_on_2())
    for (int unit = 0; unit < 2; ++unit) {
      bool left_unit = true;
      for (int a = 0; a < 2; ++a) left_unit &= op.apply(unit, a) == a;
      if (!left_unit) {
        CHECK_THROWS_AS(sigma_from_monoid(op, unit), std::invalid_argument);
        continue;
      }
      CHECK(check_braided(sigma_from_monoid(op, unit)).ok ==
            associativity_oracle(op));
    }
}

TEST_CASE("check_birack flags") {
  const auto ass = check_birack(sigma_from_monoid(make_cyclic_group(2), 0));
  CHECK(ass.is_braided);
  CHECK_FALSE(ass.is_invertible);
  CHECK_FALSE(ass.is_birack);
  REQUIRE(ass.first_violation.has_value());

  const auto flip = check_birack(make_flip(3));
  CHECK(flip.is_birack);
  CHECK(flip.is_biquandle);
  CHECK_FALSE(flip.first_violation.has_value());

  // sigma_SD of a rack is a birack; of a non-rack shelf it fails right
  // non-degeneracy because a^b = a <| b.
  CHECK(check_birack(sigma_from_shelf(make_alexander_quandle(3, 2))).is_birack);
  const auto laver = check_birack(sigma_from_shelf(make_laver_table(1)));
  CHECK(laver.is_braided);
  CHECK_FALSE(laver.is_right_nondegenerate);
  CHECK_FALSE(laver.is_birack);

  for (const auto& sigma : corpus::birack_corpus()) {
    const auto report = check_birack(sigma);
    CHECK(report.is_birack ==
          (report.is_braided && report.is_invertible &&
           report.is_left_nondegenerate && report.is_right_nondegenerate));
    CHECK(report.is_biquandle == report.t_map.has_value());
  }
}

TEST_CASE("biquandle detection and t maps") {
  // flip: sigma(x, a) = (a, x) fixes (x, a) only when x = a.
  CHECK(check_biquandle(make_flip(4)) == std::vector<int>{0, 1, 2, 3});
  CHECK(count_biquandle_t_maps(make_flip(4)) == 1);

  // sigma_SD of a quandle: t = identity works.
  const auto r3 = sigma_from_shelf(make_alexander_quandle(3, 2));
  CHECK(check_biquandle(r3) == std::vector<int>{0, 1, 2});

  // sigma_SD of a non-quandle rack is a birack without any t.
  const auto cyclic = sigma_from_shelf(
      OpTable::from_fn(2, [](int a, int) { return (a + 1) % 2; }));
  CHECK(check_birack(cyclic).is_birack);
  CHECK_FALSE(check_biquandle(cyclic).has_value());
  CHECK(count_biquandle_t_maps(cyclic) == 0);

  // Not a birack: rejected.
  CHECK_THROWS_AS(check_biquandle(sigma_from_monoid(make_cyclic_group(2), 0)),
                  std::invalid_argument);
  // t maps agree with a brute-force count over all bijections.
  for (const auto& sigma : corpus::birack_corpus()) {
    const int m = sigma.size();
    std::vector<int> perm(m);
    for (int i = 0; i < m; ++i) perm[i] = i;
    long long expected = 0;
    std::vector<int> smallest;
    do {
      bool ok = true;
      for (int a = 0; a < m && ok; ++a)
        ok = sigma.apply(perm[a], a) == std::pair<int, int>{perm[a], a};
      if (ok) {
        ++expected;
        if (smallest.empty()) smallest = perm;  // lexicographically first
      }
    } while (std::next_permutation(perm.begin(), perm.end()));
    CHECK(count_biquandle_t_maps(sigma) == expected);
    const auto t = check_biquandle(sigma);
    CHECK(t.has_value() == (expected > 0));
    if (t) CHECK(*t == smallest);
  }
}

TEST_CASE("solution constructions") {
  CHECK(sigma_from_shelf(make_trivial_quandle(2)) == make_flip(2));
  const auto s = sigma_from_shelf(make_alexander_quandle(3, 2));
  CHECK(s.apply(0, 1) == std::pair<int, int>{1, 2});

  const auto ass = sigma_from_monoid(make_cyclic_group(2), 0);
  CHECK(ass.apply(1, 1) == std::pair<int, int>{0, 0});
  const auto one = sigma_from_monoid(make_cyclic_group(1), 0);
  CHECK(one.apply(0, 0) == std::pair<int, int>{0, 0});

  CHECK(make_flip(2).apply(0, 1) == std::pair<int, int>{1, 0});
  CHECK_THROWS_AS(make_flip(0), std::invalid_argument);
}

TEST_CASE("inverse sigma") {
  CHECK_FALSE(inverse_sigma(sigma_from_monoid(make_cyclic_group(2), 0)));
  for (const auto& sigma : corpus::birack_corpus()) {
    const auto inv = inverse_sigma(sigma);
    REQUIRE(inv.has_value());
    for (int a = 0; a < sigma.size(); ++a)
      for (int b = 0; b < sigma.size(); ++b) {
        auto [x, y] = sigma.apply(a, b);
        CHECK(inv->apply(x, y) == std::pair<int, int>{a, b});
      }
  }
  // flip is an involution
  const auto flip = make_flip(3);
  CHECK(*inverse_sigma(flip) == flip);
}

TEST_CASE("sideways operations") {
  // sigma_SD of a rack: x_a = x so a.b = b, and a wdot b = a^b = a <| b.
  const auto rack = make_alexander_quandle(3, 2);
  const auto side = sideways(sigma_from_shelf(rack));
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b) {
      CHECK(side.dot.apply(a, b) == b);
      CHECK(side.wdot.apply(a, b) == rack.apply(a, b));
    }

  const auto flip_side = sideways(make_flip(2));
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b) {
      CHECK(flip_side.dot.apply(a, b) == b);
      CHECK(flip_side.wdot.apply(a, b) == a);
    }

  // Defining property: sigma(a, a.b) = (b, a wdot b).
  for (const auto& sigma : corpus::birack_corpus()) {
    const auto tables = sideways(sigma);
    for (int a = 0; a < sigma.size(); ++a)
      for (int b = 0; b < sigma.size(); ++b)
        CHECK(sigma.apply(a, tables.dot.apply(a, b)) ==
              std::pair<int, int>{b, tables.wdot.apply(a, b)});
  }

  CHECK_THROWS_AS(sideways(sigma_from_shelf(make_laver_table(1))),
                  std::invalid_argument);
}

TEST_CASE("structure rack") {
  // Retraction: the structure rack of sigma_SD is the original rack.
  for (const auto& rack : corpus::rack_corpus())
    CHECK(structure_rack(sigma_from_shelf(rack)) == rack);

  CHECK(structure_rack(make_flip(3)) == make_trivial_quandle(3));

  for (const auto& sigma : corpus::birack_corpus()) {
    const auto rack = structure_rack(sigma);
    CHECK(check_rack(rack).ok);

    // Trivial structure rack exactly when sigma is involutive.
    bool involutive = true;
    for (int a = 0; a < sigma.size() && involutive; ++a)
      for (int b = 0; b < sigma.size() && involutive; ++b) {
        auto [x, y] = sigma.apply(a, b);
        involutive = sigma.apply(x, y) == std::pair<int, int>{a, b};
      }
    CHECK((rack == make_trivial_quandle(sigma.size())) == involutive);

    // Quandle exactly when sigma is a biquandle.
    CHECK(check_quandle(rack).ok == check_biquandle(sigma).has_value());

    // Same table through the explicit sideways route.
    const auto side = sideways(sigma);
    for (int a = 0; a < sigma.size(); ++a)
      for (int b = 0; b < sigma.size(); ++b)
        CHECK(rack.apply(a, b) ==
              sigma.lower(side.wdot.apply(a, b), b));
  }

  CHECK_THROWS_AS(structure_rack(sigma_from_monoid(make_cyclic_group(2), 0)),
                  std::invalid_argument);
}

TEST_CASE("tuple lowering and raising") {
  const auto flip = make_flip(3);
  CHECK(tuple_lower(flip, {}, 1).empty());
  CHECK(tuple_raise(flip, {}, 2).empty());
  CHECK(tuple_lower(flip, {2, 0, 1}, 1) == std::vector<int>{2, 0, 1});
  CHECK(tuple_raise(flip, {2, 0, 1}, 1) == std::vector<int>{2, 0, 1});

  // Singleton base case: (a)_w = (a_w).
  for (const auto& sigma : corpus::birack_corpus())
    for (int a = 0; a < sigma.size(); ++a)
      for (int w = 0; w < sigma.size(); ++w) {
        CHECK(tuple_lower(sigma, {a}, w) ==
              std::vector<int>{sigma.lower(a, w)});
        CHECK(tuple_raise(sigma, {a}, w) ==
              std::vector<int>{sigma.raise(a, w)});
      }

  // For sigma_SD lowering is the identity.
  const auto sd = sigma_from_shelf(make_alexander_quandle(3, 2));
  CHECK(tuple_lower(sd, {0, 1, 2}, 2) == std::vector<int>{0, 1, 2});

  // Recursion step: (a, rest)_w = (a_w, rest_{w^a}).
  for (const auto& sigma : corpus::curated_biracks_on_3()) {
    const std::vector<int> tuple = {2, 0, 1};
    for (int w = 0; w < 3; ++w) {
      auto lowered = tuple_lower(sigma, tuple, w);
      std::vector<int> tail(tuple.begin() + 1, tuple.end());
      auto expected_tail =
          tuple_lower(sigma, tail, sigma.raise(w, tuple[0]));
      CHECK(lowered[0] == sigma.lower(tuple[0], w));
      CHECK(std::vector<int>(lowered.begin() + 1, lowered.end()) ==
            expected_tail);
    }
  }
}

TEST_CASE("guitar map") {
  // sigma_Ass on Z_2: J(a,b,c) = (a, a+b, a+b+c).
  const auto ass = sigma_from_monoid(make_cyclic_group(2), 0);
  CHECK(guitar_map(ass, {1, 1, 1}) == std::vector<int>{1, 0, 1});

  // Mirror dihedral solution: J(a,b,c) = (a, b<|a, (c<|b)<|a).
  const auto mirror = mirror_sd(make_alexander_quandle(3, 2));
  CHECK(guitar_map(mirror, {0, 1, 2}) == std::vector<int>{0, 2, 0});

  // J is a bijection of S^n for biracks, inverted by guitar_inverse.
  for (const auto& sigma : corpus::birack_corpus())
    for (int n = 1; n <= 3; ++n) {
      const long long total = power(sigma.size(), n);
      std::vector<char> seen(static_cast<size_t>(total), 0);
      for (long long r = 0; r < total; ++r) {
        const auto tuple = tuple_unrank(r, n, sigma.size());
        const auto image = guitar_map(sigma, tuple);
        seen[static_cast<size_t>(tuple_rank(image, sigma.size()))] = 1;
        CHECK(guitar_inverse(sigma, image) == tuple);
      }
      CHECK(std::count(seen.begin(), seen.end(), 1) == total);
    }

  // A monoid with an absorbing element is not left non-degenerate.
  const auto absorbing = OpTable::from_rows({{0, 1}, {1, 1}});
  CHECK_THROWS_AS(guitar_inverse(sigma_from_monoid(absorbing, 0), {0, 1}),
                  std::invalid_argument);
}

TEST_CASE("entwining relation") {
  for (const auto& sigma : corpus::birack_corpus())
    for (int n = 2; n <= 3; ++n) CHECK(entwining_check(sigma, n).ok);
  CHECK(entwining_check(make_flip(2), 4).ok);
  CHECK(entwining_check(sigma_from_shelf(make_alexander_quandle(3, 2)), 4).ok);

  // A corrupted table is caught with a witness.
  auto entries = sigma_from_shelf(make_alexander_quandle(3, 2)).entries();
  std::swap(entries[0][1], entries[0][2]);
  const auto corrupted = SigmaTable::from_entries(entries);
  const auto report = entwining_check(corrupted, 3);
  CHECK_FALSE(report.ok);
  CHECK(report.via_sigma_then_j != report.via_j_then_sigma_prime);

  CHECK_THROWS_AS(entwining_check(make_flip(2), 5), std::invalid_argument);
  const auto absorbing = OpTable::from_rows({{0, 1}, {1, 1}});
  CHECK_THROWS_AS(entwining_check(sigma_from_monoid(absorbing, 0), 3),
                  std::invalid_argument);
}
