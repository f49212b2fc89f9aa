#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "minsky/experiments.hpp"

namespace minsky {

// Column layout is fixed:
//   t,alpha,d_target,debt,employment,wage_share,profit_share,growth,
//   investment_norm,output,crisis
// Numbers carry 12 significant digits; crisis is 0/1 and is 1 only on the
// final row of a crisis-terminated run.
extern const char* const kTrajectoryCsvHeader;

void write_trajectory_csv(std::ostream& out, const Trajectory& trajectory);
void write_trajectory_csv(const std::string& path, const Trajectory& trajectory);

// Read-back of a trajectory file (testing and post-processing); columns by
// header position.
struct TrajectoryTable {
    std::vector<std::string> columns;
    std::vector<std::vector<double>> rows;
};

TrajectoryTable read_csv(const std::string& path);

// Per-time ensemble statistics:
//   t,mean_employment,std_employment,mean_wage_share,std_wage_share,
//   mean_profit_share,std_profit_share,mean_growth,std_growth,mean_debt,
//   std_debt,runs
void write_ensemble_csv(std::ostream& out, const MonteCarloSummary& summary);
void write_ensemble_csv(const std::string& path, const MonteCarloSummary& summary);

// One row per cell: axis values, verdict, crisis time (empty when none).
void write_sweep_csv(std::ostream& out, const SweepResult& result);
void write_sweep_csv(const std::string& path, const SweepResult& result);

// 12-significant-digit rendering used for every CSV number.
std::string format_number(double value);

}  // namespace minsky
