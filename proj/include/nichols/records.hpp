#pragma once

#include <json.hpp>

#include <string>
#include <vector>

#include "nichols/screener.hpp"

namespace nichols {

// Canonical verdict record: fixed key order, exact arithmetic only.
nlohmann::ordered_json row_to_json(const ScreenRow& row);
std::string rows_to_json(const std::vector<ScreenRow>& rows);

// CSV with the same columns in the same order.
std::string rows_to_csv(const std::vector<ScreenRow>& rows);

// Aligned text table.
std::string rows_to_text(const std::vector<ScreenRow>& rows);

std::string verdict_summary(const Verdict& v);  // "InfiniteDim", "FiniteDim(4)", ...

}  // namespace nichols
