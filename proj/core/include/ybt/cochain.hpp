#pragma once

#include <span>
#include <vector>

namespace ybt {

/// Lexicographic rank of a tuple over {0..m-1}; the leftmost entry is the
/// most significant digit.
long long tuple_rank(std::span<const int> tuple, int m);
std::vector<int> tuple_unrank(long long rank, int degree, int m);
long long power(int m, int degree);

/// A map S^k -> Z_n stored densely in lexicographic tuple order.  Modulus 0
/// means integer coefficients; otherwise values are kept reduced in [0, n).
class Cochain {
 public:
  Cochain(int degree, long long modulus, int carrier);

  static Cochain zero(int degree, long long modulus, int carrier) {
    return Cochain(degree, modulus, carrier);
  }

  /// Delta function of one tuple (value 1 there, 0 elsewhere).
  static Cochain delta(std::span<const int> tuple, long long modulus,
                       int carrier);

  int degree() const { return degree_; }
  long long modulus() const { return modulus_; }
  int carrier() const { return carrier_; }

  long long at(std::span<const int> tuple) const {
    return values_[static_cast<size_t>(tuple_rank(tuple, carrier_))];
  }

  long long value_at_rank(long long rank) const {
    return values_[static_cast<size_t>(rank)];
  }

  void set(std::span<const int> tuple, long long value) {
    set_rank(tuple_rank(tuple, carrier_), value);
  }

  void set_rank(long long rank, long long value) {
    values_[static_cast<size_t>(rank)] = reduce(value);
  }

  long long reduce(long long value) const {
    if (modulus_ == 0) return value;
    return ((value % modulus_) + modulus_) % modulus_;
  }

  const std::vector<long long>& values() const { return values_; }
  std::vector<long long>& values() { return values_; }

  bool is_zero() const;

  friend bool operator==(const Cochain&, const Cochain&) = default;

 private:
  int degree_ = 0;
  long long modulus_ = 0;
  int carrier_ = 1;
  std::vector<long long> values_;
};

Cochain add(const Cochain& f, const Cochain& g);
Cochain subtract(const Cochain& f, const Cochain& g);
Cochain scale(long long c, const Cochain& f);

}  // namespace ybt
