#include "ybt/cochain.hpp"

#include <algorithm>
#include <stdexcept>

namespace ybt {

long long power(int m, int degree) {
  long long out = 1;
  for (int i = 0; i < degree; ++i) {
    if (out > (1LL << 40))
      throw std::invalid_argument("cochain space too large");
    out *= m;
  }
  return out;
}

long long tuple_rank(std::span<const int> tuple, int m) {
  long long rank = 0;
  for (int v : tuple) rank = rank * m + v;
  return rank;
}

std::vector<int> tuple_unrank(long long rank, int degree, int m) {
  std::vector<int> tuple(degree);
  for (int i = degree - 1; i >= 0; --i) {
    tuple[i] = static_cast<int>(rank % m);
    rank /= m;
  }
  return tuple;
}

Cochain::Cochain(int degree, long long modulus, int carrier)
    : degree_(degree), modulus_(modulus), carrier_(carrier) {
  if (degree < 0) throw std::invalid_argument("cochain degree must be >= 0");
  if (carrier < 1) throw std::invalid_argument("carrier size must be positive");
  if (modulus < 0) throw std::invalid_argument("modulus must be >= 0");
  values_.assign(static_cast<size_t>(power(carrier, degree)), 0);
}

Cochain Cochain::delta(std::span<const int> tuple, long long modulus,
                       int carrier) {
  Cochain f(static_cast<int>(tuple.size()), modulus, carrier);
  f.set(tuple, 1);
  return f;
}

bool Cochain::is_zero() const {
  return std::all_of(values_.begin(), values_.end(),
                     [](long long v) { return v == 0; });
}

namespace {

void require_compatible(const Cochain& f, const Cochain& g) {
  if (f.degree() != g.degree() || f.modulus() != g.modulus() ||
      f.carrier() != g.carrier())
    throw std::invalid_argument("cochain degree/modulus/carrier mismatch");
}

}  // namespace

Cochain add(const Cochain& f, const Cochain& g) {
  require_compatible(f, g);
  Cochain out = f;
  for (size_t i = 0; i < out.values().size(); ++i)
    out.values()[i] = out.reduce(out.values()[i] + g.values()[i]);
  return out;
}

Cochain subtract(const Cochain& f, const Cochain& g) {
  require_compatible(f, g);
  Cochain out = f;
  for (size_t i = 0; i < out.values().size(); ++i)
    out.values()[i] = out.reduce(out.values()[i] - g.values()[i]);
  return out;
}

Cochain scale(long long c, const Cochain& f) {
  Cochain out = f;
  for (auto& v : out.values()) v = out.reduce(c * v);
  return out;
}

}  // namespace ybt
