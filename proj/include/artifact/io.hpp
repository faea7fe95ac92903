#pragma once
// JSON forms of codes, sectors, algebras and verifier reports.
#include <string>

#include <json.hpp>

#include "artifact/analytic.hpp"
#include "artifact/bitcode.hpp"
#include "artifact/codecft.hpp"
#include "artifact/cyclo.hpp"
#include "artifact/framed.hpp"
#include "artifact/sectors.hpp"

namespace artifact {

using json = nlohmann::ordered_json;

// {"r": 3, "generators": ["111"]}; "<111>" as a bare string is accepted too.
Code code_from_json(const json& j);
json code_to_json(const Code& G);

json sector_to_json(const Sector& s);
Sector sector_from_json(const json& j);

json cyclo_to_json(const Cyclo& c);  // {"exact": "(..)", "approx": ".."}
Cyclo cyclo_from_json(const json& j);  // exact string, number, or the object above

json algebra_to_json(const FramedAlgebra& S);
FramedAlgebra algebra_from_json(const json& j);  // throws std::invalid_argument

json report_to_json(const VerifierReport& rep, const FramedAlgebra& S);
json monodromy_to_json(const MonodromyResult& m);
json code_summary(const Code& G);  // code, dims, modular_invariant, currents, enumerator

json parse_json_arg(const std::string& arg);  // inline JSON/literal or a path to a file

}  // namespace artifact
