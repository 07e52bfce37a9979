#pragma once

#include <json.hpp>

#include "qpbw/gram.hpp"
#include "qpbw/impoly.hpp"
#include "qpbw/pbw.hpp"
#include "qpbw/roots.hpp"

namespace qpbw {

using json = nlohmann::json;

// LaurentPoly: {"terms": [[exponent, "num", "den"], ...]}, exponents ascending
json to_json(const LaurentPoly& p);
LaurentPoly laurent_from_json(const json& j);

// RatFunc: {"num": ..., "den": ...}
json to_json(const RatFunc& f);
RatFunc ratfunc_from_json(const json& j);

// Root: {"coords": [...], "kind": "real"|"imaginary", "mult_index": i?}
json to_json(const Root& r);
Root root_from_json(const json& j);

// CartanData: matrix, symmetrizers, o, delta marks
json to_json(const CartanData& data);

// ImPoly: {"terms": [{"exps": {"1": e1, ...}, "coeff": RatFunc}, ...]}
json to_json(const ImPoly& p);
ImPoly impoly_from_json(const json& j);

// GramMatrix: {"r": r, "entries": [[RatFunc]]}
json to_json(const GramMatrix& g);

json to_json(const NonvanishingReport& r);

// ExpVec: ordered [{"root": ..., "exp": n, "normalization": ...}]
json to_json(const ExpVec& v);

json to_json(const CycloElement& c);

}  // namespace qpbw
