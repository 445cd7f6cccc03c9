#pragma once

#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "ybt/cochain.hpp"
#include "ybt/sigma.hpp"

namespace ybt {

/// A braid word on `strands` strands.  Letter g > 0 is the generator
/// crossing strands (g, g+1); g < 0 is its inverse.  The empty word is the
/// identity braid.
struct BraidWord {
  int strands = 1;
  std::vector<int> letters;

  friend bool operator==(const BraidWord&, const BraidWord&) = default;
};

struct BraidParseError : std::invalid_argument {
  BraidParseError(const std::string& what, int token_index)
      : std::invalid_argument(what), token_index(token_index) {}
  int token_index;  // 0-based position of the offending token
};

/// Parses whitespace-separated signed generator indices.  Rejects
/// non-integers, zeros and out-of-range indices, reporting the token
/// position.
BraidWord parse_braid(std::string_view text, int strands);

/// Color propagation through the braid, letters applied left to right: a
/// positive letter g replaces positions (g, g+1) of the tuple by sigma of
/// them, a negative letter applies sigma^{-1}.  Words with negative letters
/// require an invertible sigma.
std::vector<int> act(const SigmaTable& sigma, const BraidWord& word,
                     std::vector<int> input);

/// Number of tuples fixed by the braid action: the coloring count of the
/// braid closure.  Requires a birack.
long long coloring_count_closure(const SigmaTable& sigma,
                                 const BraidWord& word);

/// Weight of one colored braid: each positive letter acting on the local
/// pair (a, c) adds phi(a, c_a); each negative letter on the pair (u, v)
/// subtracts phi(p, u) where (p, q) = sigma^{-1}(u, v).  Reduced mod the
/// cochain modulus.  phi must have degree 2 over the same carrier.
long long weight(const SigmaTable& sigma, const Cochain& phi,
                 const BraidWord& word, std::span<const int> input);

/// One colored strand evaluation: the action output and the weight.
struct WeightedColoring {
  std::vector<int> input;
  std::vector<int> output;
  long long weight = 0;
};

/// The full input -> (output, weight) table in lexicographic input order.
std::vector<WeightedColoring> weight_table(const SigmaTable& sigma,
                                           const Cochain& phi,
                                           const BraidWord& word);

/// Closure invariants: the coloring count and the weight polynomial
/// sum_C t^{w(C)} in Z[t]/(t^n - 1), n the cochain modulus; coefficient
/// index = exponent.
struct ClosureInvariant {
  long long coloring_count = 0;
  std::vector<long long> weight_polynomial;
};

ClosureInvariant weight_polynomial_closure(const SigmaTable& sigma,
                                           const Cochain& phi,
                                           const BraidWord& word);

/// A pair of braid words expected to act identically (e.g. related by an
/// R-II or R-III rewrite).
struct WordPair {
  BraidWord left;
  BraidWord right;
  std::string label;
};

struct RmoveFailure {
  size_t pair_index = 0;
  std::vector<int> input;
  bool outputs_differ = false;
  long long left_weight = 0;
  long long right_weight = 0;
};

struct RmoveReport {
  bool all_equal = true;
  std::vector<RmoveFailure> failures;
};

/// Checks, input tuple by input tuple, that both words of every pair yield
/// the same action output and the same weight.
RmoveReport rmove_invariance_suite(const SigmaTable& sigma, const Cochain& phi,
                                   const std::vector<WordPair>& pairs);

/// The standard rewrite pairs on n strands: "g -g" and "-g g" against the
/// identity, and "g g+1 g" against "g+1 g g+1", each also embedded in a
/// one-letter context.
std::vector<WordPair> standard_rmove_pairs(int strands);

}  // namespace ybt
