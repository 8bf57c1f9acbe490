#pragma once

// JSON encodings of the machine interface: flats, classifications,
// enumeration results, verification records. Scalars are encoded as strings
// ("5/6") to stay exact; object key order is fixed so identical runs emit
// byte-identical output.

#include <json.hpp>

#include "octlin/canonical.hpp"
#include "octlin/flats.hpp"
#include "octlin/oracle.hpp"
#include "octlin/solver.hpp"

namespace octlin {

using Json = nlohmann::ordered_json;

Json scalar_to_json(const Scalar& s);
Json octonion_to_json(const Octonion& a);
Json flat_to_json(const AffineFlat& f);
Json classification_to_json(const Classification& c);
Json enumeration_to_json(const EnumerationResult& r);
Json trial_to_json(const VerifyReport& report, const TrialRecord& r);
Json degeneration_report_to_json(const DegenerationReport& r);

} // namespace octlin
