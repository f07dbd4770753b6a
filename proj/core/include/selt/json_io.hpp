#pragma once

#include <nlohmann/json.hpp>

#include "selt/eyd.hpp"
#include "selt/jdt.hpp"
#include "selt/partition.hpp"
#include "selt/ring.hpp"
#include "selt/slide_calc.hpp"
#include "selt/tableau.hpp"

// JSON interchange. Keys are emitted in a fixed order; parsers throw
// InvalidArgument on malformed documents.

namespace selt {

using Json = nlohmann::ordered_json;

Json to_json(const StrictPartition& p);
StrictPartition partition_from_json(const Json& j);

/// {"shape":{"outer":[..],"inner":[..]},"boxes":[{"row","col","label"}],
///  "edges":{"1":[..],...},"n":N}
Json to_json(const EdgeTableau& t);
EdgeTableau tableau_from_json(const Json& j);

Json to_json(const Violation& v);
Json to_json(const SlideRecord& r);
/// {"states":[..],"corners":[[r,c],..],"slides":[..]}
Json to_json(const RectificationTrace& trace);

/// {"n":N,"m":M,"shaded":[[col,row],..]}
Json to_json(const Shading& s);
Shading shading_from_json(const Json& j);

Json to_json(const SlideDecomposition& d);
Json to_json(const SlidableReport& r);

/// {"ambient":[..],"pluses":[[r,c],..]}
Json to_json(const ExcitedDiagram& d);

/// Integers that fit in 64 bits become JSON numbers, larger ones strings.
Json to_json(const Integer& v);
/// {"lambda":[..],"mu":[..],"terms":[{"nu":[..],"coeff":e,"z_power":k},..]}.
/// A coefficient that is not a single z-power is split into one entry per
/// power.
Json to_json(const SigmaExpansion& e);

}  // namespace selt
