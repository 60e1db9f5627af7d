#pragma once

#include <json.hpp>

#include "klab/clifford.hpp"
#include "klab/kgroup.hpp"
#include "klab/matrix.hpp"
#include "klab/replab.hpp"

namespace klab::io {

using json = nlohmann::ordered_json;

// Big integers serialize as decimal strings so 2^64-scale exponents survive
// every JSON parser.
json int_json(const Int& v);
Int int_from_json(const json& j);

json to_json(const clifford::CNormalForm& g);
clifford::CNormalForm cnf_from_json(const json& j);

json to_json(const clifford::ApplicationCount& c);

json to_json(const kgroup::K0NormalForm& nf);
kgroup::K0NormalForm k0nf_from_json(const json& j);

// {"segments": [K0NormalForm | {"t": 1|-1}, ...]}
json to_json(const kgroup::BrittonForm& f);

// {"pinch_steps": n, "max_bits": [...], "comparisons": n, "micros": n}
json to_json(const kgroup::ReductionTrace& tr);

// Flat row-major [re, im] pairs: {"rows": r, "cols": c, "data": [[re,im],..]}
json to_json(const mat::CMat& m);
mat::CMat cmat_from_json(const json& j);

// {"n": n, "d": d, "entries": [{"element": CNormalForm, "matrix": CMat}]}
json to_json(const rep::HomTable& t);
rep::HomTable table_from_json(const json& j);

json to_json(const rep::Verdict& v);
json to_json(const rep::HlpResult& r);
json to_json(const rep::SearchReport& r);

}  // namespace klab::io
