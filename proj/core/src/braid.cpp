#include "ybt/braid.hpp"

#include <charconv>
#include <optional>

namespace ybt {
namespace {

std::optional<SigmaTable> inverse_if_needed(const SigmaTable& sigma,
                                            const BraidWord& word) {
  for (int g : word.letters)
    if (g < 0) {
      auto inv = inverse_sigma(sigma);
      if (!inv)
        throw std::invalid_argument(
            "braid word has negative letters but sigma is not invertible");
      return inv;
    }
  return std::nullopt;
}

void apply_letter(const SigmaTable& sigma, const SigmaTable* inverse, int g,
                  std::vector<int>& t) {
  const int i = (g > 0 ? g : -g) - 1;
  const auto& table = g > 0 ? sigma : *inverse;
  auto [x, y] = table.apply(t[i], t[i + 1]);
  t[i] = x;
  t[i + 1] = y;
}

void check_word(const BraidWord& word) {
  if (word.strands < 1)
    throw std::invalid_argument("braid needs at least one strand");
  for (int g : word.letters) {
    const int i = g > 0 ? g : -g;
    if (g == 0 || i > word.strands - 1)
      throw std::invalid_argument("braid letter out of range");
  }
}

}  // namespace

BraidWord parse_braid(std::string_view text, int strands) {
  if (strands < 1)
    throw BraidParseError("strand count must be at least 1", 0);
  BraidWord word;
  word.strands = strands;
  int index = 0;
  size_t pos = 0;
  while (pos < text.size()) {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
      ++pos;
    if (pos >= text.size()) break;
    size_t end = pos;
    while (end < text.size() && !std::isspace(static_cast<unsigned char>(text[end])))
      ++end;
    const std::string_view token = text.substr(pos, end - pos);
    int value = 0;
    const auto [ptr, ec] =
        std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc{} || ptr != token.data() + token.size())
      throw BraidParseError("token " + std::to_string(index) + " ('" +
                                std::string(token) + "') is not an integer",
                            index);
    if (value == 0)
      throw BraidParseError(
          "token " + std::to_string(index) + " is zero; generators are signed "
          "indices starting at 1",
          index);
    const int abs = value > 0 ? value : -value;
    if (abs > strands - 1)
      throw BraidParseError("token " + std::to_string(index) + " ('" +
                                std::string(token) +
                                "') exceeds generator range for " +
                                std::to_string(strands) + " strands",
                            index);
    word.letters.push_back(value);
    pos = end;
    ++index;
  }
  return word;
}

std::vector<int> act(const SigmaTable& sigma, const BraidWord& word,
                     std::vector<int> input) {
  check_word(word);
  if (static_cast<int>(input.size()) != word.strands)
    throw std::invalid_argument("input tuple length must equal strand count");
  const auto inverse = inverse_if_needed(sigma, word);
  for (int g : word.letters)
    apply_letter(sigma, inverse ? &*inverse : nullptr, g, input);
  return input;
}

long long coloring_count_closure(const SigmaTable& sigma,
                                 const BraidWord& word) {
  check_word(word);
  if (!check_birack(sigma).is_birack)
    throw std::invalid_argument("closure counting requires a birack");
  const auto inverse = inverse_sigma(sigma);
  const int m = sigma.size();
  const long long total = power(m, word.strands);
  long long fixed = 0;
  std::vector<int> t;
  for (long long rank = 0; rank < total; ++rank) {
    t = tuple_unrank(rank, word.strands, m);
    for (int g : word.letters) apply_letter(sigma, &*inverse, g, t);
    if (tuple_rank(t, m) == rank) ++fixed;
  }
  return fixed;
}

namespace {

void require_weight_cochain(const SigmaTable& sigma, const Cochain& phi) {
  if (phi.degree() != 2)
    throw std::invalid_argument("weight cochain must have degree 2");
  if (phi.carrier() != sigma.size())
    throw std::invalid_argument("weight cochain carrier does not match sigma");
}

long long weight_walk(const SigmaTable& sigma, const SigmaTable* inverse,
                      const Cochain& phi, const BraidWord& word,
                      std::vector<int>& t) {
  long long w = 0;
  for (int g : word.letters) {
    const int i = (g > 0 ? g : -g) - 1;
    if (g > 0) {
      w += phi.at(std::vector<int>{t[i], sigma.lower(t[i + 1], t[i])});
      auto [x, y] = sigma.apply(t[i], t[i + 1]);
      t[i] = x;
      t[i + 1] = y;
    } else {
      auto [p, q] = inverse->apply(t[i], t[i + 1]);
      w -= phi.at(std::vector<int>{p, t[i]});
      t[i] = p;
      t[i + 1] = q;
    }
  }
  return w;
}

}  // namespace

long long weight(const SigmaTable& sigma, const Cochain& phi,
                 const BraidWord& word, std::span<const int> input) {
  check_word(word);
  require_weight_cochain(sigma, phi);
  if (static_cast<int>(input.size()) != word.strands)
    throw std::invalid_argument("input tuple length must equal strand count");
  const auto inverse = inverse_if_needed(sigma, word);
  std::vector<int> t(input.begin(), input.end());
  return phi.reduce(
      weight_walk(sigma, inverse ? &*inverse : nullptr, phi, word, t));
}

std::vector<WeightedColoring> weight_table(const SigmaTable& sigma,
                                           const Cochain& phi,
                                           const BraidWord& word) {
  check_word(word);
  require_weight_cochain(sigma, phi);
  const auto inverse = inverse_if_needed(sigma, word);
  const int m = sigma.size();
  const long long total = power(m, word.strands);
  std::vector<WeightedColoring> out;
  out.reserve(static_cast<size_t>(total));
  for (long long rank = 0; rank < total; ++rank) {
    WeightedColoring row;
    row.input = tuple_unrank(rank, word.strands, m);
    std::vector<int> t = row.input;
    row.weight = phi.reduce(
        weight_walk(sigma, inverse ? &*inverse : nullptr, phi, word, t));
    row.output = std::move(t);
    out.push_back(std::move(row));
  }
  return out;
}

ClosureInvariant weight_polynomial_closure(const SigmaTable& sigma,
                                           const Cochain& phi,
                                           const BraidWord& word) {
  check_word(word);
  require_weight_cochain(sigma, phi);
  if (phi.modulus() < 1)
    throw std::invalid_argument(
        "weight polynomial needs a positive cochain modulus");
  if (!check_birack(sigma).is_birack)
    throw std::invalid_argument("closure invariants require a birack");
  const auto inverse = inverse_sigma(sigma);
  const int m = sigma.size();
  ClosureInvariant inv;
  inv.weight_polynomial.assign(static_cast<size_t>(phi.modulus()), 0);
  const long long total = power(m, word.strands);
  for (long long rank = 0; rank < total; ++rank) {
    std::vector<int> t = tuple_unrank(rank, word.strands, m);
    const long long w = weight_walk(sigma, &*inverse, phi, word, t);
    if (tuple_rank(t, m) != rank) continue;
    ++inv.coloring_count;
    ++inv.weight_polynomial[static_cast<size_t>(phi.reduce(w))];
  }
  return inv;
}

RmoveReport rmove_invariance_suite(const SigmaTable& sigma, const Cochain& phi,
                                   const std::vector<WordPair>& pairs) {
  RmoveReport report;
  for (size_t idx = 0; idx < pairs.size(); ++idx) {
    const auto& pair = pairs[idx];
    if (pair.left.strands != pair.right.strands)
      throw std::invalid_argument("word pair strand counts differ");
    const auto left = weight_table(sigma, phi, pair.left);
    const auto right = weight_table(sigma, phi, pair.right);
    for (size_t i = 0; i < left.size(); ++i) {
      if (left[i].output == right[i].output &&
          left[i].weight == right[i].weight)
        continue;
      report.all_equal = false;
      RmoveFailure failure;
      failure.pair_index = idx;
      failure.input = left[i].input;
      failure.outputs_differ = left[i].output != right[i].output;
      failure.left_weight = left[i].weight;
      failure.right_weight = right[i].weight;
      report.failures.push_back(std::move(failure));
    }
  }
  return report;
}

std::vector<WordPair> standard_rmove_pairs(int strands) {
  std::vector<WordPair> pairs;
  auto word = [strands](std::vector<int> letters) {
    return BraidWord{strands, std::move(letters)};
  };
  for (int g = 1; g <= strands - 1; ++g) {
    pairs.push_back({word({g, -g}), word({}), "RII"});
    pairs.push_back({word({-g, g}), word({}), "RII inverse"});
    if (g + 1 <= strands - 1) {
      pairs.push_back(
          {word({g, g + 1, g}), word({g + 1, g, g + 1}), "RIII"});
      pairs.push_back({word({g, g + 1, g, g}), word({g + 1, g, g + 1, g}),
                       "RIII with suffix"});
      pairs.push_back({word({g, g, g + 1, g}), word({g, g + 1, g, g + 1}),
                       "RIII with prefix"});
    }
  }
  return pairs;
}

}  // namespace ybt
