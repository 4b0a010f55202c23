#pragma once

#include <string>

#include "json.hpp"

#include "casg/comm.hpp"

namespace casg {

nlohmann::json table_to_json(const CosetTable& t);
CosetTable table_from_json(const nlohmann::json& j);

/// Iso definition file: ambient group name, the two kernels as
/// FiniteAbelianTarget specs, and image / inverse-image word arrays indexed by
/// the Schreier generator order of the corresponding kernel table.
/// inverse_images may be omitted for free groups.
SubgroupIso load_iso_json(const nlohmann::json& j);
SubgroupIso load_iso_file(const std::string& path);

/// Letters file for the word evaluator: named commensurators, each either
/// {"inner": "<word>"} or {"iso_file": "<path>"}.
CommWordInstance load_letters_file(const std::string& path,
                                   const std::string& base_dir = "");

}  // namespace casg
