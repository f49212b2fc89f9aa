#pragma once

#include <string>

#include "minsky/experiments.hpp"

namespace minsky {

// Scenario files are JSON documents with four optional sections and an
// optional schema tag (current version 1):
//
//   {
//     "schema_version": 1,
//     "params":      { "r": 0.05, ..., "phillips": {"c1": 0.01, ...} },
//     "driver":      { "kind": "constant" | "step" | "ramp" | "stochastic", ... },
//     "integration": { "dt": 0.01, "horizon": 250, "record_stride": 10 },
//     "init":        { "standard": true } |
//                    { "d_target": ..., "debt": ..., "employment": ..., "wage_share": ... }
//   }
//
// Missing keys take the documented defaults; unknown keys are rejected with
// an error naming the key. Driver fields by kind:
//   constant:   alpha
//   step:       alpha_before, alpha_after, t_switch
//   ramp:       alpha_before, alpha_after, t_start, t_end
//   stochastic: mean, std_dev, seed, and optionally mean_after + t_switch
//               for a mean that steps down mid-run.
Scenario load_scenario_file(const std::string& path);

Scenario parse_scenario_json(const std::string& text, const std::string& origin);

}  // namespace minsky
