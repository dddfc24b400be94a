#pragma once

#include <utility>

#include <json.hpp>

#include "secorder/boolfn.hpp"
#include "secorder/counterexample.hpp"
#include "secorder/families.hpp"

namespace secorder
{

/// {"ground": ["1","2","3"], "components": [["3"], ["1","2","3"]]}
nlohmann::json family_to_json( const SetFamily& family );

/// Inverse of family_to_json; numeric labels are accepted and stringified.
SetFamily family_from_json( const nlohmann::json& j );

/*! \brief {"X": <family>, "Y": <family>}

  Both families must be over the same ground set. When Y lists the same labels
  in a different order it is re-expressed over X's ground.
*/
std::pair<SetFamily, SetFamily> pair_from_json( const nlohmann::json& j );

nlohmann::json pair_to_json( const SetFamily& x, const SetFamily& y );

/// {"n": 2, "outputs": ["00","01","01","11"]}, outputs indexed by packed input.
nlohmann::json truth_table_to_json( const BooleanFunction& f, unsigned max_width = default_sweep_width );

/// Reads "outputs" (or "table") as written by truth_table_to_json.
BooleanFunction truth_table_from_json( const nlohmann::json& j );

nlohmann::json report_to_json( const RefutationReport& report );

} // namespace secorder
