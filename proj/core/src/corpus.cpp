#include "ybt/corpus.hpp"

#include <stdexcept>

namespace ybt::corpus {
namespace {

SigmaTable permutation_solution(const std::vector<int>& f,
                                const std::vector<int>& g) {
  const int m = static_cast<int>(f.size());
  return SigmaTable::from_fn(m, [&](int a, int b) {
    return std::pair<int, int>{f[b], g[a]};
  });
}

void require_birack(const SigmaTable& sigma) {
  if (!check_birack(sigma).is_birack)
    throw std::logic_error("curated corpus entry is not a birack");
}

}  // namespace

std::vector<OpTable> all_ops_on_2() {
  std::vector<OpTable> out;
  for (int code = 0; code < 16; ++code) {
    out.push_back(OpTable::from_fn(
        2, [code](int a, int b) { return code >> (2 * a + b) & 1; }));
  }
  return out;
}

std::vector<OpTable> shelves_on_2() {
  std::vector<OpTable> out;
  for (const auto& op : all_ops_on_2())
    if (check_shelf(op).ok) out.push_back(op);
  return out;
}

std::vector<OpTable> racks_on_2() {
  std::vector<OpTable> out;
  for (const auto& op : all_ops_on_2())
    if (check_rack(op).ok) out.push_back(op);
  return out;
}

std::vector<OpTable> curated_racks_on_3() {
  std::vector<OpTable> out;
  out.push_back(make_trivial_quandle(3));
  out.push_back(make_alexander_quandle(3, 2));  // dihedral
  out.push_back(OpTable::from_fn(3, [](int a, int) { return (a + 1) % 3; }));
  out.push_back(OpTable::from_fn(3, [](int a, int) { return (a + 2) % 3; }));
  const int swap01[3] = {1, 0, 2};
  out.push_back(OpTable::from_fn(3, [&](int a, int) { return swap01[a]; }));
  return out;
}

std::vector<OpTable> rack_corpus() {
  auto out = racks_on_2();
  for (auto& op : curated_racks_on_3()) out.push_back(std::move(op));
  return out;
}

std::vector<SigmaTable> all_biracks_on_2() {
  std::vector<SigmaTable> out;
  for (const auto& sigma : all_braided_on_2())
    if (check_birack(sigma).is_birack) out.push_back(sigma);
  return out;
}

std::vector<SigmaTable> curated_biracks_on_3() {
  std::vector<SigmaTable> out;
  out.push_back(make_flip(3));
  for (const auto& rack : curated_racks_on_3())
    out.push_back(sigma_from_shelf(rack));
  // Mirror of the dihedral solution: sigma(a,b) = (b <| a, a).
  const auto dihedral = make_alexander_quandle(3, 2);
  out.push_back(SigmaTable::from_fn(3, [&](int a, int b) {
    return std::pair<int, int>{dihedral.apply(b, a), a};
  }));
  const std::vector<int> id = {0, 1, 2}, shift1 = {1, 2, 0}, shift2 = {2, 0, 1},
                         swap01 = {1, 0, 2};
  out.push_back(permutation_solution(shift1, id));
  out.push_back(permutation_solution(id, shift1));
  out.push_back(permutation_solution(shift1, shift1));
  out.push_back(permutation_solution(shift1, shift2));
  out.push_back(permutation_solution(swap01, swap01));
  for (const auto& sigma : out) require_birack(sigma);
  return out;
}

std::vector<SigmaTable> birack_corpus() {
  auto out = all_biracks_on_2();
  for (auto& sigma : curated_biracks_on_3()) out.push_back(std::move(sigma));
  return out;
}

std::vector<SigmaTable> all_braided_on_2() {
  std::vector<SigmaTable> out;
  // A map S^2 -> S^2 on two elements is one of 4^4 tables.
  for (int code = 0; code < 256; ++code) {
    auto sigma = SigmaTable::from_fn(2, [code](int a, int b) {
      const int nibble = code >> (2 * (2 * a + b)) & 3;
      return std::pair<int, int>{nibble >> 1, nibble & 1};
    });
    if (check_braided(sigma).ok) out.push_back(std::move(sigma));
  }
  return out;
}

std::vector<SigmaTable> braided_corpus() {
  auto out = birack_corpus();
  out.push_back(sigma_from_monoid(make_cyclic_group(2), 0));
  out.push_back(sigma_from_monoid(make_cyclic_group(3), 0));
  out.push_back(sigma_from_shelf(make_laver_table(1)));
  out.push_back(sigma_from_shelf(make_laver_table(2)));
  for (const auto& shelf : shelves_on_2())
    if (!check_rack(shelf).ok) out.push_back(sigma_from_shelf(shelf));
  return out;
}

}  // namespace ybt::corpus
