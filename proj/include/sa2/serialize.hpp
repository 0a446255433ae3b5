#pragma once

#include <json.hpp>

#include "sa2/render.hpp"
#include "sa2/verify.hpp"

namespace sa2 {

using Json = nlohmann::ordered_json;

Json to_json(const Element& w);
Json to_json(const Hexagon& h);
Json to_json(const Hull& h);
Json to_json(const QTable& t);
Json to_json(const LocusRecord& r);
Json to_json(const LocusReport& r);
Json to_json(const CheckResult& r);
Json to_json(const std::vector<SmoothRow>& rows);
Json to_json(const RationalNF& f);

}  // namespace sa2
