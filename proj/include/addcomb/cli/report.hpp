#pragma once

#include <string>

#include <json.hpp>

#include "addcomb/cli/config.hpp"
#include "addcomb/colorings/coloring.hpp"
#include "addcomb/core/rational.hpp"
#include "addcomb/torus/monte_carlo.hpp"

namespace addcomb::cli {

using Json = nlohmann::ordered_json;

// {version, command, seed, budget}; every report starts with these.
Json report_header(const std::string& command, std::uint64_t seed, const Budgets& budgets);

Json witness_json(const colorings::Witness& w);
std::string witness_summary(const colorings::Witness& w);

// Exact values travel as "p/q" strings next to a double companion.
void put_rational(Json& j, const std::string& key, const core::Rational& v);

Json estimate_json(const torus::Estimate& e);

}  // namespace addcomb::cli
