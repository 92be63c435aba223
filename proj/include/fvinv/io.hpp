#pragma once

#include <json.hpp>

#include "fvinv/matrix.hpp"
#include "fvinv/riordan.hpp"
#include "fvinv/series.hpp"
#include "fvinv/simplicial.hpp"
#include "fvinv/subdivision.hpp"

// JSON encodings. Rationals are always strings ("p/q", or "p" when q = 1).
//
//   Series       {"coeffs": ["1", "-1/2"], "precision": 2}
//   RiordanPair  {"beta": <Series>, "alpha": <Series>, "truncation": N}
//   ExactMatrix  [["1", "0"], ["1", "1"]]              (row-major)
//   Complex      {"maximal": [[0, 1, 2], [2, 3]]}
//   FVector      [3, 3, 1]
//
// Decoders throw std::invalid_argument on malformed input.

namespace fvinv::io {

using json = nlohmann::json;

json to_json(const Series& s);
json to_json(const RiordanPair& t);
json to_json(const ExactMatrix& m);
json to_json(const Complex& c);
json to_json(const FVector& f);

Series series_from_json(const json& j);
RiordanPair riordan_from_json(const json& j);
ExactMatrix matrix_from_json(const json& j);
Complex complex_from_json(const json& j);

} // namespace fvinv::io
