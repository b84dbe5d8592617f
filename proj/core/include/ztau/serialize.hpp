#pragma once

// JSON records shared by the CLI and the checkpoint format.
//
//   element        [m, n]
//   triple         {"x": elem, "y": elem, "z": elem, "k": k}
//   parametrization{"l": elem, "m": elem, "n": elem, "sign": +-1, "swapped": bool}
//   shift result   {"N": n, "triple": triple, "sigma": ["d.dddddd" x3]}
//   search report  {"k", "bound", "dedup", "pairs_tested", "elapsed_ms", "solutions": [triple...]}
//
// Integers are JSON numbers when they fit in 64 bits and decimal strings
// otherwise; readers accept either form.

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "ztau/fermat_search.hpp"
#include "ztau/ring.hpp"
#include "ztau/triples.hpp"
#include "ztau/window_shift.hpp"

namespace ztau {

using Json = nlohmann::json;

Json integer_to_json(const Integer& z);
Integer integer_from_json(const Json& j);

Json element_to_json(const RingElement& x);
RingElement element_from_json(const Json& j);

Json triple_to_json(const PowerTriple& t);
PowerTriple triple_from_json(const Json& j);

Json params_to_json(const Parametrization& p);
Parametrization params_from_json(const Json& j);

Json shift_to_json(const ShiftResult& r);
// sigma is recomputed exactly from the shifted triple.
ShiftResult shift_from_json(const Json& j);

Json report_to_json(const SearchReport& r);
SearchReport report_from_json(const Json& j);

Json elements_to_json(const std::vector<RingElement>& xs);
std::vector<RingElement> elements_from_json(const Json& j);

}  // namespace ztau
