#pragma once

// JSON schema for every value the CLI prints. All numbers are decimal
// strings; rationals are "num/den" in lowest terms.

#include <json.hpp>

#include "sqdiff/euler_section.hpp"
#include "sqdiff/fiber.hpp"
#include "sqdiff/search.hpp"
#include "sqdiff/transforms.hpp"
#include "sqdiff/triples.hpp"

namespace sqdiff::json {

using Json = nlohmann::ordered_json;

Json to_json(const EulerTriple& e);
Json to_json(const HyperbolicTriple& h);
Json to_json(const Cuboid& c);
Json to_json(const SumDiffTriple& sd);
Json to_json(const SectionParams& sp);
Json to_json(const SixTuple& st);
Json to_json(const QuarticPoint& p);
Json to_json(const SolutionRecord& r);
Json to_json(const Checkpoint& cp);

// Inverse direction; throw Error(Parse) on schema violations and re-validate
// the decoded value.
EulerTriple euler_from_json(const Json& j);
HyperbolicTriple hyperbolic_from_json(const Json& j);
Cuboid cuboid_from_json(const Json& j);
SumDiffTriple sumdiff_from_json(const Json& j);
SectionParams params_from_json(const Json& j);
SixTuple sixtuple_from_json(const Json& j);
QuarticPoint point_from_json(const Json& j);
SolutionRecord record_from_json(const Json& j);
Checkpoint checkpoint_from_json(const Json& j);

}  // namespace sqdiff::json
