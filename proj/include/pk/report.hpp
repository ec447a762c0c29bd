#pragma once

#include <json.hpp>

#include <string>
#include <vector>

#include "pk/homology.hpp"

namespace pk {

// Machine-readable run report.  Field order and slice order are pinned
// so identical inputs (and seed) produce byte-identical files; `timing`
// is fixed at 0 for the same reason.
nlohmann::json make_report(const Space& sp, const std::string& command,
                           const nlohmann::json& inputs, const std::string& verdict,
                           std::vector<SliceReport> slices,
                           const std::vector<std::string>& witnesses);

nlohmann::json slice_to_json(const SliceReport& r);

void write_report(const nlohmann::json& j, const std::string& path);

} // namespace pk
