#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "ybt/corpus.hpp"
#include "ybt/optable.hpp"

using namespace ybt;

namespace {

// Direct triple enumeration, independent of check_shelf.
bool shelf_oracle(const OpTable& op) {
  const int m = op.size();
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b)
      for (int c = 0; c < m; ++c)
        if (op.apply(op.apply(a, b), c) !=
            op.apply(op.apply(a, c), op.apply(b, c)))
          return false;
  return true;
}

std::vector<OpTable> all_ops_on_3() {
  std::vector<OpTable> out;
  out.reserve(19683);
  for (int code = 0; code < 19683; ++code) {
    int digits[9], rest = code;
    for (int& d : digits) {
      d = rest % 3;
      rest /= 3;
    }
    out.push_back(OpTable::from_fn(
        3, [&](int a, int b) { return digits[3 * a + b]; }));
  }
  return out;
}

}  // namespace

TEST_CASE("table construction validates shape and range") {
  CHECK_THROWS_AS(OpTable::from_rows({}), std::invalid_argument);
  CHECK_THROWS_AS(OpTable::from_rows({{0, 1}, {0}}), std::invalid_argument);
  CHECK_THROWS_AS(OpTable::from_rows({{0, 2}, {0, 1}}), std::invalid_argument);
  const auto op = OpTable::from_rows({{0, 0}, {1, 1}});
  CHECK(op.size() == 2);
  CHECK(op.apply(1, 0) == 1);
}

TEST_CASE("check_shelf") {
  CHECK(check_shelf(make_trivial_quandle(2)).ok);

  const auto xorop = OpTable::from_fn(2, [](int a, int b) { return a ^ b; });
  const auto result = check_shelf(xorop);
  CHECK_FALSE(result.ok);
  REQUIRE(result.violation.has_value());
  CHECK(result.violation->axiom == "shelf");
  CHECK(result.violation->witness == std::array<int, 3>{0, 0, 1});

  CHECK(check_shelf(make_conjugation_quandle(make_symmetric_group(3))).ok);
}

TEST_CASE("check_rack") {
  CHECK(check_rack(make_trivial_quandle(3)).ok);

  const auto constant = OpTable::from_fn(2, [](int, int) { return 0; });
  const auto result = check_rack(constant);
  CHECK_FALSE(result.ok);
  REQUIRE(result.violation.has_value());
  CHECK(result.violation->axiom == "rack");

  CHECK(check_rack(make_alexander_quandle(3, 2)).ok);
}

TEST_CASE("check_quandle") {
  CHECK(check_quandle(make_alexander_quandle(3, 2)).ok);
  CHECK(check_quandle(make_trivial_quandle(4)).ok);

  const auto laver1 = make_laver_table(1);
  const auto result = check_quandle(laver1);
  CHECK_FALSE(result.ok);
  CHECK(laver1.apply(0, 0) != 0);
}

TEST_CASE("axiom_report accumulates and witnesses the weakest failure") {
  for (const auto& op : corpus::all_ops_on_2()) {
    const auto report = axiom_report(op);
    if (report.is_quandle) CHECK(report.is_rack);
    if (report.is_rack) CHECK(report.is_shelf);
    CHECK(report.first_violation.has_value() ==
          !(report.is_shelf && report.is_rack && report.is_quandle));
  }
  const auto xorop = OpTable::from_fn(2, [](int a, int b) { return a ^ b; });
  CHECK(axiom_report(xorop).first_violation->axiom == "shelf");
}

TEST_CASE("exhaustive shelf cross-check on two elements") {
  int flagged = 0, oracle = 0;
  for (const auto& op : corpus::all_ops_on_2()) {
    const bool expected = shelf_oracle(op);
    CHECK(check_shelf(op).ok == expected);
    flagged += check_shelf(op).ok;
    oracle += expected;
  }
  CHECK(flagged == oracle);
  CHECK(flagged == 9);
}

TEST_CASE("accumulativity over all operations on three elements") {
  for (const auto& op : all_ops_on_3()) {
    const auto report = axiom_report(op);
    if (report.is_quandle) CHECK(report.is_rack);
    if (report.is_rack) CHECK(report.is_shelf);
    CHECK(check_shelf(op).ok == shelf_oracle(op));
  }
}

TEST_CASE("trivial quandle tables") {
  CHECK(make_trivial_quandle(2).rows() ==
        std::vector<std::vector<int>>{{0, 0}, {1, 1}});
  CHECK(make_trivial_quandle(1).rows() == std::vector<std::vector<int>>{{0}});
  const auto t3 = make_trivial_quandle(3);
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b) CHECK(t3.apply(a, b) == a);
  CHECK_THROWS_AS(make_trivial_quandle(0), std::invalid_argument);
}

TEST_CASE("alexander quandles") {
  const auto r3 = make_alexander_quandle(3, 2);
  CHECK(r3.apply(0, 1) == 2);
  CHECK(r3.apply(1, 1) == 1);
  CHECK(check_quandle(r3).ok);
  // t = 1 collapses to the trivial quandle.
  CHECK(make_alexander_quandle(5, 1) == make_trivial_quandle(5));
  // dihedral form a <| b = 2b - a agrees mod 3
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b)
      CHECK(r3.apply(a, b) == ((2 * b - a) % 3 + 3) % 3);
  CHECK_THROWS_AS(make_alexander_quandle(4, 2), std::invalid_argument);
  CHECK_THROWS_AS(make_alexander_quandle(6, 3), std::invalid_argument);
  CHECK(check_quandle(make_alexander_quandle(5, 3)).ok);
}

TEST_CASE("conjugation quandles") {
  // Abelian groups conjugate trivially.
  CHECK(make_conjugation_quandle(make_cyclic_group(4)) ==
        make_trivial_quandle(4));
  CHECK(make_conjugation_quandle(make_cyclic_group(1)).rows() ==
        std::vector<std::vector<int>>{{0}});

  const auto s3 = make_symmetric_group(3);
  const auto conj = make_conjugation_quandle(s3);
  CHECK(check_quandle(conj).ok);
  // (01) has one-line 102 = rank 2, (012) has 120 = rank 3, (12) has 021 =
  // rank 1.
  CHECK(rank_of_permutation({1, 0, 2}) == 2);
  CHECK(rank_of_permutation({1, 2, 0}) == 3);
  CHECK(rank_of_permutation({0, 2, 1}) == 1);
  CHECK(conj.apply(2, 3) == 1);

  const auto not_group = OpTable::from_fn(2, [](int, int) { return 0; });
  CHECK_THROWS_WITH_AS(make_conjugation_quandle(not_group),
                       "input is not a group: fails identity",
                       std::invalid_argument);
}

TEST_CASE("group validation names the failed axiom") {
  CHECK(check_group(make_symmetric_group(4)).ok);
  const auto cyclic = check_group(make_cyclic_group(6));
  CHECK(cyclic.ok);
  CHECK(cyclic.identity == 0);
  // Left-unital but not a group: second row constant.
  const auto bad = OpTable::from_rows({{0, 1}, {0, 0}});
  CHECK(check_group(bad).failed_axiom == "identity");
}

TEST_CASE("laver tables") {
  CHECK(make_laver_table(0).rows() == std::vector<std::vector<int>>{{0}});
  CHECK(check_quandle(make_laver_table(0)).ok);

  // Classical A_1 is 1*1=2, 1*2=2, 2*1=1, 2*2=2; transposed and shifted.
  const auto a1 = make_laver_table(1);
  CHECK(a1.rows() == std::vector<std::vector<int>>{{1, 0}, {1, 1}});
  CHECK(check_shelf(a1).ok);
  // Laver tables are self-distributive but their translations are not
  // bijections, so they are shelves and not racks.
  CHECK_FALSE(check_rack(a1).ok);

  const auto a2 = make_laver_table(2);
  CHECK(check_shelf(a2).ok);
  CHECK_FALSE(check_rack(a2).ok);
  CHECK_FALSE(check_quandle(a2).ok);
  // Classical A_2 row 1 is 2,4,2,4: column b=0 of the stored table.
  CHECK(a2.apply(0, 0) == 1);
  CHECK(a2.apply(1, 0) == 3);
  CHECK(a2.apply(2, 0) == 1);
  CHECK(a2.apply(3, 0) == 3);

  for (int k = 3; k <= 4; ++k) CHECK(check_shelf(make_laver_table(k)).ok);
  CHECK_THROWS_AS(make_laver_table(5), std::invalid_argument);
  CHECK_THROWS_AS(make_laver_table(-1), std::invalid_argument);
}

TEST_CASE("dual racks") {
  CHECK(dual_rack(make_trivial_quandle(3)) == make_trivial_quandle(3));
  // Alexander(3,2) has t = t^{-1}, so it is self-dual.
  CHECK(dual_rack(make_alexander_quandle(3, 2)) ==
        make_alexander_quandle(3, 2));
  for (const auto& rack : corpus::rack_corpus()) {
    CHECK(dual_rack(dual_rack(rack)) == rack);
    CHECK(check_rack(dual_rack(rack)).ok);
    for (int a = 0; a < rack.size(); ++a)
      for (int b = 0; b < rack.size(); ++b)
        CHECK(rack.apply(dual_rack(rack).apply(a, b), b) == a);
  }
  CHECK_THROWS_AS(dual_rack(make_laver_table(1)), std::invalid_argument);
}

TEST_CASE("dual_rack commutes with relabeling") {
  const auto r3 = make_alexander_quandle(9, 2);
  const int m = r3.size();
  // Relabel by the cycle x -> x+1.
  auto relabel = [&](const OpTable& op) {
    return OpTable::from_fn(m, [&](int a, int b) {
      return (op.apply((a + m - 1) % m, (b + m - 1) % m) + 1) % m;
    });
  };
  CHECK(dual_rack(relabel(r3)) == relabel(dual_rack(r3)));
}

TEST_CASE("permutation ranking") {
  CHECK(permutation_of_rank(3, 0) == std::vector<int>{0, 1, 2});
  CHECK(permutation_of_rank(3, 5) == std::vector<int>{2, 1, 0});
  for (int r = 0; r < 24; ++r)
    CHECK(rank_of_permutation(permutation_of_rank(4, r)) == r);
  CHECK_THROWS_AS(permutation_of_rank(3, 6), std::invalid_argument);
}

TEST_CASE("corpus families pass their advertised checks") {
  for (const auto& rack : corpus::rack_corpus()) CHECK(check_rack(rack).ok);
  CHECK(check_quandle(make_conjugation_quandle(make_symmetric_group(3))).ok);
  CHECK(check_quandle(make_alexander_quandle(7, 3)).ok);
  CHECK(corpus::racks_on_2().size() == 2);
  CHECK(corpus::shelves_on_2().size() == 9);
}
