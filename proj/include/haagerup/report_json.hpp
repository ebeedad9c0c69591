#pragma once

#include <json.hpp>

#include "haagerup/apartment.hpp"
#include "haagerup/convolution.hpp"
#include "haagerup/triangle_presentation.hpp"

namespace haagerup {

void to_json(nlohmann::json& j, Shape const& s);
void to_json(nlohmann::json& j, CheckReport const& r);
void to_json(nlohmann::json& j, NormEstimate const& e);
void to_json(nlohmann::json& j, RadialTrajectory const& t);
void to_json(nlohmann::json& j, TriangleSumReport const& r);
void to_json(nlohmann::json& j, LinkGraphStats const& s);
void to_json(nlohmann::json& j, AxiomResult const& a);
void to_json(nlohmann::json& j, ValidationReport const& r);
void to_json(nlohmann::json& j, ApartmentPoint const& p);
void to_json(nlohmann::json& j, FoldingDiagram const& d);

}  // namespace haagerup
