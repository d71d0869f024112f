#pragma once

/// JSON wire formats. Polynomials serialize as arrays of decimal strings,
/// lowest degree first, in canonical form (no trailing "0" entries), so
/// consumers never lose precision. Object keys are emitted sorted, which
/// makes the output byte-stable across runs and worker counts.

#include <nlohmann/json.hpp>

#include "kohlab/bergeron.hpp"
#include "kohlab/kohdec.hpp"
#include "kohlab/proofcheck.hpp"
#include "kohlab/qpoly.hpp"

namespace kohlab {

using Json = nlohmann::json;

Json to_json(const QPoly& p);
QPoly qpoly_from_json(const Json& j);

Json to_json(const CheckReport& report);
Json to_json(const DominanceReport& report);
Json to_json(const Quadruple& quad);
Json to_json(const QuadrupleCheck& failure);
Json to_json(const Partition& partition);
Json to_json(const KohTerm& term);
Json to_json(const StepVerdict& verdict);

}  // namespace kohlab
