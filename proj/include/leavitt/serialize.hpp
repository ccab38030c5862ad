#pragma once

#include <json.hpp>

#include "leavitt/abelian.hpp"
#include "leavitt/kreport.hpp"
#include "leavitt/quiver.hpp"
#include "leavitt/smith.hpp"
#include "leavitt/verify.hpp"

namespace leavitt {

// JSON conventions: every integer that can exceed 64 bits (matrix entries,
// invariant factors, torsion orders, determinants, path counts) is emitted as
// a decimal string; small structural counts stay numeric.

nlohmann::json matrix_json(const IntMatrix& a);
nlohmann::json group_json(const FgAbGroup& g);
nlohmann::json group_value_json(const GroupValue& g);
nlohmann::json quiver_json(const Quiver& q);
nlohmann::json smith_json(const SmithForm& sf);
nlohmann::json kreport_json(const KReport& r, bool with_citations);
nlohmann::json gamma_json(const GammaPrediction& p);

}  // namespace leavitt
