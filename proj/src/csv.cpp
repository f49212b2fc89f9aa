#include "minsky/csv.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "minsky/errors.hpp"

namespace minsky {

const char* const kTrajectoryCsvHeader =
    "t,alpha,d_target,debt,employment,wage_share,profit_share,growth,"
    "investment_norm,output,crisis";

std::string format_number(double value) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", value);
    return buf;
}

namespace {

std::ofstream open_for_write(const std::string& path) {
    std::ofstream out(path);
    if (!out) throw ConfigError(path + ": cannot open for writing");
    return out;
}

}  // namespace

void write_trajectory_csv(std::ostream& out, const Trajectory& traj) {
    out << kTrajectoryCsvHeader << '\n';
    const std::size_t n = traj.size();
    const bool crisis = traj.termination.kind == TerminationKind::Crisis;
    for (std::size_t i = 0; i < n; ++i) {
        out << format_number(traj.t[i]) << ',' << format_number(traj.alpha[i]) << ','
            << format_number(traj.d_target[i]) << ',' << format_number(traj.debt[i]) << ','
            << format_number(traj.employment[i]) << ','
            << format_number(traj.wage_share[i]) << ','
            << format_number(traj.profit_share[i]) << ','
            << format_number(traj.growth[i]) << ','
            << format_number(traj.investment_norm[i]) << ','
            << format_number(traj.output[i]) << ','
            << ((crisis && i + 1 == n) ? '1' : '0') << '\n';
    }
}

void write_trajectory_csv(const std::string& path, const Trajectory& traj) {
    auto out = open_for_write(path);
    write_trajectory_csv(out, traj);
}

TrajectoryTable read_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError(path + ": cannot open");
    TrajectoryTable table;
    std::string line;
    if (!std::getline(in, line)) throw ConfigError(path + ": empty file");
    std::istringstream header(line);
    std::string cell;
    while (std::getline(header, cell, ',')) table.columns.push_back(cell);
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::istringstream row(line);
        std::vector<double> values;
        values.reserve(table.columns.size());
        while (std::getline(row, cell, ',')) values.push_back(std::stod(cell));
        if (values.size() != table.columns.size()) {
            throw ConfigError(path + ": row with wrong column count");
        }
        table.rows.push_back(std::move(values));
    }
    return table;
}

void write_ensemble_csv(std::ostream& out, const MonteCarloSummary& mc) {
    out << "t,mean_employment,std_employment,mean_wage_share,std_wage_share,"
           "mean_profit_share,std_profit_share,mean_growth,std_growth,"
           "mean_debt,std_debt,runs\n";
    for (std::size_t k = 0; k < mc.t.size(); ++k) {
        out << format_number(mc.t[k]) << ',' << format_number(mc.mean_employment[k]) << ','
            << format_number(mc.std_employment[k]) << ','
            << format_number(mc.mean_wage_share[k]) << ','
            << format_number(mc.std_wage_share[k]) << ','
            << format_number(mc.mean_profit_share[k]) << ','
            << format_number(mc.std_profit_share[k]) << ','
            << format_number(mc.mean_growth[k]) << ',' << format_number(mc.std_growth[k])
            << ',' << format_number(mc.mean_debt[k]) << ','
            << format_number(mc.std_debt[k]) << ',' << mc.contributing[k] << '\n';
    }
}

void write_ensemble_csv(const std::string& path, const MonteCarloSummary& mc) {
    auto out = open_for_write(path);
    write_ensemble_csv(out, mc);
}

void write_sweep_csv(std::ostream& out, const SweepResult& result) {
    for (const auto& axis : result.axes) out << axis.param << ',';
    out << "verdict,crisis_time\n";
    for (const auto& cell : result.cells) {
        for (double v : cell.values) out << format_number(v) << ',';
        out << cell.verdict << ',';
        if (cell.crisis_time == cell.crisis_time) out << format_number(cell.crisis_time);
        out << '\n';
    }
}

void write_sweep_csv(const std::string& path, const SweepResult& result) {
    auto out = open_for_write(path);
    write_sweep_csv(out, result);
}

}  // namespace minsky
