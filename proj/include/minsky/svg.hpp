#pragma once

#include <iosfwd>
#include <string>

#include "minsky/experiments.hpp"

namespace minsky {

// Self-contained three-panel line plot (employment/wage share/profit share,
// growth, debt vs time). No external references; valid standalone SVG.
void svg_trajectory_plot(std::ostream& out, const Trajectory& trajectory,
                         const std::string& title);
void svg_trajectory_plot(const std::string& path, const Trajectory& trajectory,
                         const std::string& title);

// Same panel layout for ensemble statistics: solid mean lines with dotted
// mean +/- one standard deviation envelopes.
void svg_ensemble_plot(std::ostream& out, const MonteCarloSummary& summary,
                       const std::string& title);
void svg_ensemble_plot(const std::string& path, const MonteCarloSummary& summary,
                       const std::string& title);

}  // namespace minsky
