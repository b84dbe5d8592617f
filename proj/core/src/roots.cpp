#include "ztau/roots.hpp"

#include <algorithm>

#include "bigfloat.hpp"
#include "ztau/detail/small_ring.hpp"
#include "ztau/errors.hpp"

namespace ztau {

namespace detail {

Integer to_integer(i128 v) {
  const bool negative = v < 0;
  const unsigned __int128 a = negative ? -static_cast<unsigned __int128>(v) : static_cast<unsigned __int128>(v);
  Integer hi(static_cast<unsigned long>(a >> 64));
  Integer lo(static_cast<unsigned long>(a & 0xFFFFFFFFFFFFFFFFULL));
  Integer out = (hi << 64) + lo;
  if (negative) out = -out;
  return out;
}

std::optional<i128> to_i128(const Integer& v) {
  if (mpz_sizeinbase(v.get_mpz_t(), 2) > 126) return std::nullopt;
  const Integer a = abs(v);
  const Integer hi_z = a >> 64;
  const Integer lo_z = a - (hi_z << 64);
  const unsigned __int128 a128 =
      (static_cast<unsigned __int128>(hi_z.get_ui()) << 64) | static_cast<unsigned __int128>(lo_z.get_ui());
  const auto out = static_cast<i128>(a128);
  return sgn(v) < 0 ? -out : out;
}

RingElement to_ring(const SmallElement& x) { return {to_integer(x.m), to_integer(x.n)}; }

std::optional<SmallElement> to_small(const RingElement& x) {
  auto m = to_i128(x.m());
  auto n = to_i128(x.n());
  if (!m || !n) return std::nullopt;
  return SmallElement{*m, *n};
}

std::optional<RingElement> kth_root_multiprecision(const RingElement& t, unsigned k) {
  if (k < 2) throw DomainError("is_kth_power requires k >= 2");
  if (t.is_zero()) return RingElement::zero();

  const HalfSurd e1 = embed(t);
  const HalfSurd e2 = embed_conj(t);
  const int s1 = surd_sign(e1);
  const int s2 = surd_sign(e2);
  const bool even = (k % 2) == 0;
  if (even && (s1 < 0 || s2 < 0)) return std::nullopt;

  // |e1 * e2| = |norm| >= 1, so this precision keeps the smaller embedding
  // accurate even when u and v sqrt5 nearly cancel.
  const std::size_t bits = std::max(mpz_sizeinbase(e1.u.get_mpz_t(), 2), mpz_sizeinbase(e1.v.get_mpz_t(), 2));
  const auto prec = static_cast<mpfr_prec_t>(2 * bits + 64);

  BigFloat sqrt5(prec);
  mpfr_sqrt_ui(sqrt5.get(), 5, MPFR_RNDN);
  BigFloat tau(prec);
  mpfr_add_ui(tau.get(), sqrt5.get(), 1, MPFR_RNDN);
  mpfr_div_2ui(tau.get(), tau.get(), 1, MPFR_RNDN);

  auto abs_root = [&](const HalfSurd& e) {
    BigFloat x = BigFloat::from_integer(e.v, prec);
    mpfr_mul(x.get(), x.get(), sqrt5.get(), MPFR_RNDN);
    BigFloat u = BigFloat::from_integer(e.u, prec);
    mpfr_add(x.get(), x.get(), u.get(), MPFR_RNDN);
    mpfr_div_2ui(x.get(), x.get(), 1, MPFR_RNDN);
    mpfr_abs(x.get(), x.get(), MPFR_RNDN);
    mpfr_rootn_ui(x.get(), x.get(), k, MPFR_RNDN);
    return x;
  };

  BigFloat w1 = abs_root(e1);
  if (s1 < 0) mpfr_neg(w1.get(), w1.get(), MPFR_RNDN);
  BigFloat w2 = abs_root(e2);
  if (s2 < 0) mpfr_neg(w2.get(), w2.get(), MPFR_RNDN);

  const int combos = even ? 2 : 1;
  for (int c = 0; c < combos; ++c) {
    if (c == 1) mpfr_neg(w2.get(), w2.get(), MPFR_RNDN);
    // q = (w1 - w2) / sqrt5, p = w1 - q t
    BigFloat q(prec);
    mpfr_sub(q.get(), w1.get(), w2.get(), MPFR_RNDN);
    mpfr_div(q.get(), q.get(), sqrt5.get(), MPFR_RNDN);
    BigFloat p(prec);
    mpfr_mul(p.get(), q.get(), tau.get(), MPFR_RNDN);
    mpfr_sub(p.get(), w1.get(), p.get(), MPFR_RNDN);

    const Integer p0 = p.round();
    const Integer q0 = q.round();
    for (int dp = -1; dp <= 1; ++dp) {
      for (int dq = -1; dq <= 1; ++dq) {
        RingElement cand(Integer(p0 + dp), Integer(q0 + dq));
        if (pow(cand, k) == t) {
          if (even && surd_sign(embed(cand)) < 0) cand = -cand;
          return cand;
        }
      }
    }
  }
  return std::nullopt;
}

}  // namespace detail

std::optional<RingElement> is_kth_power(const RingElement& t, unsigned k) {
  if (k < 2) throw DomainError("is_kth_power requires k >= 2");
  if (auto small = detail::to_small(t)) {
    const detail::RootProbe probe = detail::probe_kth_root(*small, k);
    if (probe.status == detail::RootStatus::found) return detail::to_ring(probe.root);
    if (probe.status == detail::RootStatus::absent) return std::nullopt;
  }
  return detail::kth_root_multiprecision(t, k);
}

std::optional<RingElement> sqrt(const RingElement& x) { return is_kth_power(x, 2); }

}  // namespace ztau
