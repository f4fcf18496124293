#pragma once

#include <string>

#include "qsymp/codes.hpp"
#include "qsymp/enumerators.hpp"
#include "qsymp/report.hpp"

namespace qsymp {

// {"q": 2, "n": 2, "basis": [[1,0,1,0], ...]}
Json to_json(const SympSubspace& w);
// Accepts the object above; "role" is ignored here. Throws ParseError.
SympSubspace subspace_from_json(const Json& j);
// "code" when absent.
std::string role_from_json(const Json& j);

Json to_json(const CodeParams& p);
Json to_json(const DistributionTable& w);
Json to_json(const MomentTable& b);
Json to_json(const EnumeratorPoly& p);

// Pauli strings for q = 2, otherwise interleaved coordinate tuples such as "(1,0|0,2)".
std::string describe(const SympVector& v);

}  // namespace qsymp
