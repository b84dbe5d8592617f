#include "ztau/triples.hpp"

#include <array>
#include <optional>
#include <set>

#include "ztau/division.hpp"
#include "ztau/errors.hpp"
#include "ztau/roots.hpp"

namespace ztau {

PowerTriple from_params(const Parametrization& p) {
  const RingElement m2 = p.m * p.m;
  const RingElement n2 = p.n * p.n;
  RingElement x = RingElement(2 * p.sign, 0) * p.l * p.m * p.n;
  RingElement y = p.l * (m2 - n2);
  RingElement z = p.l * (m2 + n2);
  if (p.swapped) std::swap(x, y);
  return {std::move(x), std::move(y), std::move(z), 2};
}

bool verify(const PowerTriple& t) {
  if (t.k < 1) return false;
  return pow(t.x, t.k) + pow(t.y, t.k) == pow(t.z, t.k);
}

namespace {

using TripleKey = std::array<RingElement, 3>;

struct KeyLess {
  bool operator()(const TripleKey& a, const TripleKey& b) const {
    LexLess less;
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (less(a[i], b[i])) return true;
      if (less(b[i], a[i])) return false;
    }
    return false;
  }
};

TripleKey unordered_key(const PowerTriple& t) {
  if (LexLess{}(t.y, t.x)) return {t.y, t.x, t.z};
  return {t.x, t.y, t.z};
}

}  // namespace

std::size_t enumerate(int bound, std::size_t limit, const std::function<void(const PowerTriple&)>& sink) {
  if (bound < 0) throw DomainError("enumerate: bound must be nonnegative");
  std::vector<RingElement> box;
  for (long a = -bound; a <= bound; ++a) {
    for (long b = -bound; b <= bound; ++b) box.emplace_back(a, b);
  }

  std::set<TripleKey, KeyLess> seen;
  std::size_t emitted = 0;
  for (const auto& l : box) {
    if (l.is_zero()) continue;
    for (const auto& m : box) {
      for (const auto& n : box) {
        if (emitted >= limit) return emitted;
        PowerTriple t = from_params({l, m, n, 1, false});
        if (!t.nontrivial()) continue;
        if (!seen.insert(unordered_key(t)).second) continue;
        sink(t);
        ++emitted;
      }
    }
  }
  return emitted;
}

std::vector<PowerTriple> enumerate(int bound, std::size_t limit) {
  std::vector<PowerTriple> out;
  enumerate(bound, limit, [&out](const PowerTriple& t) { out.push_back(t); });
  return out;
}

namespace {

RingElement exact_quotient(const RingElement& num, const RingElement& den) {
  auto q = divides(den, num);
  if (!q) throw InternalError("decompose: expected exact division failed");
  return *q;
}

bool even(const RingElement& x) {
  return mpz_even_p(x.m().get_mpz_t()) != 0 && mpz_even_p(x.n().get_mpz_t()) != 0;
}

RingElement halve(const RingElement& x) {
  if (!even(x)) throw InternalError("decompose: parity check failed");
  return {Integer(x.m() / 2), Integer(x.n() / 2)};
}

// The first candidate (sign +1 before -1) reproducing t exactly.
std::optional<Parametrization> match(const PowerTriple& t, const RingElement& l, const RingElement& m,
                                     const RingElement& n, bool swapped) {
  for (int sign : {1, -1}) {
    Parametrization p{l, m, n, sign, swapped};
    if (from_params(p) == t) return p;
  }
  return std::nullopt;
}

}  // namespace

Parametrization decompose(const PowerTriple& t) {
  if (t.k != 2) throw DomainError("decompose: only k = 2 triples have a parametrization");
  if (!t.nontrivial()) throw DomainError("decompose: triple has a zero component");
  if (!verify(t)) throw DomainError("decompose: input is not a Pythagorean triple");

  const RingElement plus = t.z + t.y;
  const RingElement minus = t.z - t.y;
  const RingElement d = gcd(minus, plus);
  const RingElement a = exact_quotient(plus, d);
  const RingElement b = exact_quotient(minus, d);

  const std::array<Unit, 4> units{Unit{1, 0}, Unit{-1, 0}, Unit{1, -1}, Unit{-1, -1}};
  for (const Unit& u : units) {
    const RingElement u_inv = u.inverse().value();
    auto m = sqrt(a * u_inv);
    if (!m) continue;
    auto n = sqrt(b * u_inv);
    if (!n) continue;

    const RingElement du = d * u.value();
    if (auto l = divides(RingElement(2, 0), du)) {
      if (auto p = match(t, *l, *m, *n, false)) return *p;
      throw InternalError("decompose: even du case did not reproduce the triple");
    }

    RingElement nn = *n;
    if (!even(*m - nn)) nn = -nn;
    const RingElement m1 = halve(*m - nn);
    const RingElement n1 = halve(*m + nn);
    if (auto p = match(t, du, n1, m1, true)) return *p;
    if (auto p = match(t, du, m1, n1, true)) return *p;
    throw InternalError("decompose: odd du case did not reproduce the triple");
  }
  throw InternalError("decompose: no unit makes both cofactors squares");
}

}  // namespace ztau
