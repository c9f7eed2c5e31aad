#pragma once
// Parameter / cartan / one-form file loading and the JSON report schema
// shared by the CLI and the python module.  Reports are deterministic:
// scalars as strings, bases in the canonical word order, no timestamps.

#include <json.hpp>

#include <string>
#include <vector>

#include "qda/kacmoody.hpp"
#include "qda/taylor.hpp"

namespace qda {

using Json = nlohmann::ordered_json;

struct LoadedParams {
    ParamSpec params;
    ParamOptions options;
};

LoadedParams load_params_json(const Json& j);
LoadedParams load_params_file(const std::string& path);

CartanData load_cartan_json(const Json& j);
CartanData load_cartan_file(const std::string& path);

OneForm load_one_form_json(const Json& j, const ParamSpec& params);
OneForm load_one_form_file(const std::string& path, const ParamSpec& params);

Json params_to_json(const ParamSpec& params);
Json poly_to_json(const FreePoly& p, const ParamSpec& params);
Json basis_to_json(const std::vector<FreePoly>& basis, const MultiDegree& d,
                   const ParamSpec& params);
Json matrix_to_json(const Matrix& m, const ParamSpec& params);

// The envelope every command emits: schema version, resolved parameter
// point, result payload.
Json report_envelope(const ParamSpec& params, Json result);

}  // namespace qda
