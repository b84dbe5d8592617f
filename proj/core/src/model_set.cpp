#include "ztau/model_set.hpp"

#include <algorithm>
#include <cmath>

#include "ztau/errors.hpp"

namespace ztau {

bool contains(const RingElement& x) { return Window::fibonacci().holds(embed_conj(x)); }

void SubstitutionWord::validate() const {
  auto ok = [](const std::string& w) {
    return !w.empty() && std::all_of(w.begin(), w.end(), [](char c) { return c == 'a' || c == 'b'; });
  };
  if (!ok(left) || !ok(right)) throw DomainError("substitution word must be a nonempty word over {a, b}");
}

namespace {

std::string substitute_side(const std::string& word) {
  std::string out;
  out.reserve(word.size() * 2);
  for (char c : word) out += (c == 'a') ? "ab" : "a";
  return out;
}

RingElement letter_length(char c) { return c == 'a' ? RingElement::tau() : RingElement::one(); }

}  // namespace

SubstitutionWord substitute(const SubstitutionWord& word) {
  word.validate();
  return {substitute_side(word.left), substitute_side(word.right)};
}

Patch realize(const SubstitutionWord& word) {
  word.validate();
  std::vector<RingElement> left_points;
  RingElement pos;
  for (auto it = word.left.rbegin(); it != word.left.rend(); ++it) {
    pos -= letter_length(*it);
    left_points.push_back(pos);
  }

  Patch out;
  out.points.assign(left_points.rbegin(), left_points.rend());
  out.points.push_back(RingElement::zero());
  pos = RingElement::zero();
  for (char c : word.right) {
    pos += letter_length(c);
    out.points.push_back(pos);
  }
  out.hull_lo = out.points.front();
  out.hull_hi = out.points.back();
  return out;
}

Patch patch(int iterations, int cap) {
  if (iterations < 0) throw DomainError("patch: iterations must be nonnegative");
  if (iterations > cap) {
    throw CapExceeded("patch: iterations " + std::to_string(iterations) + " exceed cap " + std::to_string(cap));
  }
  SubstitutionWord word{"a", "a"};
  for (int i = 0; i < 2 * iterations; ++i) word = substitute(word);
  return realize(word);
}

std::vector<RingElement> members_in_interval(const HalfSurd& lo, const HalfSurd& hi) {
  if (surd_sign(hi - lo) < 0) throw DomainError("members_in_interval: lo > hi");

  // x = m + n t with e1 = m + n t in [lo, hi] and e2 = m + n t' in [-1, t-1).
  // Since e1 - e2 = n sqrt5 this bounds n; each n then bounds m. The bounds
  // are padded by one and the exact filter below decides membership.
  const double tau = (1.0 + std::sqrt(5.0)) / 2.0;
  const double tau_conj = 1.0 - tau;
  const double sqrt5 = std::sqrt(5.0);
  const double lo_d = to_double(lo);
  const double hi_d = to_double(hi);
  const double win_lo = -1.0;
  const double win_hi = tau - 1.0;

  const auto n_min = static_cast<long>(std::floor((lo_d - win_hi) / sqrt5)) - 1;
  const auto n_max = static_cast<long>(std::ceil((hi_d - win_lo) / sqrt5)) + 1;

  const Window window = Window::fibonacci();
  std::vector<RingElement> out;
  for (long n = n_min; n <= n_max; ++n) {
    const double nd = static_cast<double>(n);
    const double m_lo = std::max(lo_d - nd * tau, win_lo - nd * tau_conj);
    const double m_hi = std::min(hi_d - nd * tau, win_hi - nd * tau_conj);
    if (m_lo > m_hi + 2.0) continue;
    const auto m_min = static_cast<long>(std::floor(m_lo)) - 1;
    const auto m_max = static_cast<long>(std::ceil(m_hi)) + 1;
    for (long m = m_min; m <= m_max; ++m) {
      RingElement x(m, n);
      const HalfSurd e = embed(x);
      if (surd_sign(e - lo) < 0 || surd_sign(e - hi) > 0) continue;
      if (!window.holds(embed_conj(x))) continue;
      out.push_back(std::move(x));
    }
  }
  std::sort(out.begin(), out.end(), RealLess{});
  return out;
}

}  // namespace ztau
