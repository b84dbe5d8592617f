#include "ztau/serialize.hpp"

#include <limits>

#include "ztau/decimal.hpp"
#include "ztau/errors.hpp"

namespace ztau {

namespace {

[[noreturn]] void malformed(const std::string& what) { throw DomainError("malformed JSON record: " + what); }

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) malformed(std::string("missing field '") + key + "'");
  return j.at(key);
}

}  // namespace

Json integer_to_json(const Integer& z) {
  if (mpz_fits_slong_p(z.get_mpz_t())) return Json(static_cast<std::int64_t>(z.get_si()));
  return Json(z.get_str());
}

Integer integer_from_json(const Json& j) {
  if (j.is_number_integer()) {
    if (j.is_number_unsigned()) return Integer(j.get<std::uint64_t>());
    return Integer(static_cast<long>(j.get<std::int64_t>()));
  }
  if (j.is_string()) {
    Integer z;
    if (z.set_str(j.get<std::string>(), 10) != 0) malformed("bad integer string");
    return z;
  }
  malformed("expected integer");
}

Json element_to_json(const RingElement& x) { return Json::array({integer_to_json(x.m()), integer_to_json(x.n())}); }

RingElement element_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 2) malformed("element must be [m, n]");
  return {integer_from_json(j[0]), integer_from_json(j[1])};
}

Json triple_to_json(const PowerTriple& t) {
  return {{"x", element_to_json(t.x)}, {"y", element_to_json(t.y)}, {"z", element_to_json(t.z)}, {"k", t.k}};
}

PowerTriple triple_from_json(const Json& j) {
  const Json& k = field(j, "k");
  if (!k.is_number_unsigned()) malformed("k must be a nonnegative integer");
  return {element_from_json(field(j, "x")), element_from_json(field(j, "y")), element_from_json(field(j, "z")),
          k.get<unsigned>()};
}

Json params_to_json(const Parametrization& p) {
  return {{"l", element_to_json(p.l)},
          {"m", element_to_json(p.m)},
          {"n", element_to_json(p.n)},
          {"sign", p.sign},
          {"swapped", p.swapped}};
}

Parametrization params_from_json(const Json& j) {
  const Json& sign = field(j, "sign");
  const Json& swapped = field(j, "swapped");
  if (!sign.is_number_integer() || (sign.get<int>() != 1 && sign.get<int>() != -1)) malformed("sign must be 1 or -1");
  if (!swapped.is_boolean()) malformed("swapped must be a boolean");
  return {element_from_json(field(j, "l")), element_from_json(field(j, "m")), element_from_json(field(j, "n")),
          sign.get<int>(), swapped.get<bool>()};
}

Json shift_to_json(const ShiftResult& r) {
  Json sigma = Json::array();
  for (const auto& s : r.sigma) sigma.push_back(to_decimal(s, 6));
  return {{"N", r.exponent}, {"triple", triple_to_json(r.shifted)}, {"sigma", sigma}};
}

ShiftResult shift_from_json(const Json& j) {
  const Json& n = field(j, "N");
  if (!n.is_number_integer()) malformed("N must be an integer");
  ShiftResult r;
  r.exponent = n.get<long>();
  r.shifted = triple_from_json(field(j, "triple"));
  r.sigma = {embed_conj(r.shifted.x), embed_conj(r.shifted.y), embed_conj(r.shifted.z)};
  return r;
}

Json report_to_json(const SearchReport& r) {
  Json solutions = Json::array();
  for (const auto& t : r.solutions) solutions.push_back(triple_to_json(t));
  return {{"k", r.config.k},
          {"bound", r.config.bound},
          {"dedup", r.config.dedup},
          {"pairs_tested", r.pairs_tested},
          {"elapsed_ms", r.elapsed.count()},
          {"solutions", solutions}};
}

SearchReport report_from_json(const Json& j) {
  SearchReport r;
  r.config.k = field(j, "k").get<unsigned>();
  r.config.bound = field(j, "bound").get<int>();
  if (j.contains("dedup")) r.config.dedup = j.at("dedup").get<bool>();
  r.pairs_tested = field(j, "pairs_tested").get<std::uint64_t>();
  r.elapsed = std::chrono::milliseconds(field(j, "elapsed_ms").get<std::int64_t>());
  const Json& sols = field(j, "solutions");
  if (!sols.is_array()) malformed("solutions must be an array");
  for (const auto& s : sols) r.solutions.push_back(triple_from_json(s));
  return r;
}

Json elements_to_json(const std::vector<RingElement>& xs) {
  Json out = Json::array();
  for (const auto& x : xs) out.push_back(element_to_json(x));
  return out;
}

std::vector<RingElement> elements_from_json(const Json& j) {
  if (!j.is_array()) malformed("expected an array of elements");
  std::vector<RingElement> out;
  for (const auto& e : j) out.push_back(element_from_json(e));
  return out;
}

}  // namespace ztau
