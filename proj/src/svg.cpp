#include "minsky/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <vector>

#include "minsky/errors.hpp"

namespace minsky {

namespace {

struct Series {
    const char* label;
    const char* color;
    bool dotted;
    const std::vector<double>* y;
};

struct Panel {
    const char* y_label;
    std::vector<Series> series;
};

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

// One panel: frame, five ticks per axis, polyline per series, legend row.
void draw_panel(std::ostream& out, const Panel& panel, const std::vector<double>& t,
                double x0, double y0, double width, double height) {
    double lo = 0.0, hi = 1.0;
    bool first = true;
    for (const auto& s : panel.series) {
        for (double v : *s.y) {
            if (!std::isfinite(v)) continue;
            if (first) { lo = hi = v; first = false; }
            lo = std::min(lo, v);
            hi = std::max(hi, v);
        }
    }
    if (first) { lo = 0.0; hi = 1.0; }
    if (hi - lo < 1e-12) { lo -= 0.5; hi += 0.5; }
    const double pad = 0.05 * (hi - lo);
    lo -= pad;
    hi += pad;

    const double t_lo = t.front(), t_hi = t.back();
    const auto map_x = [&](double tv) {
        return x0 + (tv - t_lo) / (t_hi - t_lo) * width;
    };
    const auto map_y = [&](double v) { return y0 + height - (v - lo) / (hi - lo) * height; };

    out << "<rect x=\"" << fmt(x0) << "\" y=\"" << fmt(y0) << "\" width=\"" << fmt(width)
        << "\" height=\"" << fmt(height)
        << "\" fill=\"none\" stroke=\"#444444\" stroke-width=\"1\"/>\n";

    for (int k = 0; k <= 4; ++k) {
        const double frac = k / 4.0;
        const double tx = t_lo + frac * (t_hi - t_lo);
        const double px = map_x(tx);
        out << "<line x1=\"" << fmt(px) << "\" y1=\"" << fmt(y0 + height) << "\" x2=\""
            << fmt(px) << "\" y2=\"" << fmt(y0 + height + 4)
            << "\" stroke=\"#444444\" stroke-width=\"1\"/>\n";
        out << "<text x=\"" << fmt(px) << "\" y=\"" << fmt(y0 + height + 16)
            << "\" font-size=\"10\" text-anchor=\"middle\" fill=\"#222222\">" << fmt(tx)
            << "</text>\n";
        const double vy = lo + frac * (hi - lo);
        const double py = map_y(vy);
        out << "<line x1=\"" << fmt(x0 - 4) << "\" y1=\"" << fmt(py) << "\" x2=\"" << fmt(x0)
            << "\" y2=\"" << fmt(py) << "\" stroke=\"#444444\" stroke-width=\"1\"/>\n";
        out << "<text x=\"" << fmt(x0 - 6) << "\" y=\"" << fmt(py + 3)
            << "\" font-size=\"10\" text-anchor=\"end\" fill=\"#222222\">" << fmt(vy)
            << "</text>\n";
    }
    out << "<text x=\"" << fmt(x0 - 52) << "\" y=\"" << fmt(y0 + height / 2)
        << "\" font-size=\"11\" fill=\"#222222\" transform=\"rotate(-90 " << fmt(x0 - 52)
        << " " << fmt(y0 + height / 2) << ")\" text-anchor=\"middle\">" << panel.y_label
        << "</text>\n";

    for (const auto& s : panel.series) {
        out << "<polyline fill=\"none\" stroke=\"" << s.color << "\" stroke-width=\"1\"";
        if (s.dotted) out << " stroke-dasharray=\"2,3\"";
        out << " points=\"";
        for (std::size_t i = 0; i < t.size(); ++i) {
            const double v = (*s.y)[i];
            if (!std::isfinite(v)) continue;
            out << fmt(map_x(t[i])) << ',' << fmt(map_y(v)) << ' ';
        }
        out << "\"/>\n";
    }

    double lx = x0 + 8;
    for (const auto& s : panel.series) {
        if (s.dotted) continue;
        out << "<line x1=\"" << fmt(lx) << "\" y1=\"" << fmt(y0 + 10) << "\" x2=\""
            << fmt(lx + 18) << "\" y2=\"" << fmt(y0 + 10) << "\" stroke=\"" << s.color
            << "\" stroke-width=\"2\"/>\n";
        out << "<text x=\"" << fmt(lx + 22) << "\" y=\"" << fmt(y0 + 13)
            << "\" font-size=\"10\" fill=\"#222222\">" << s.label << "</text>\n";
        lx += 30 + 7.0 * std::char_traits<char>::length(s.label);
    }
}

void draw_document(std::ostream& out, const std::string& title,
                   const std::vector<double>& t, const std::vector<Panel>& panels) {
    const double panel_w = 760, panel_h = 200, margin_l = 90, margin_t = 40, gap = 36;
    const double width = margin_l + panel_w + 30;
    const double height =
        margin_t + panels.size() * panel_h + (panels.size() - 1) * gap + 40;

    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << fmt(width)
        << "\" height=\"" << fmt(height) << "\" viewBox=\"0 0 " << fmt(width) << ' '
        << fmt(height) << "\">\n";
    out << "<rect width=\"100%\" height=\"100%\" fill=\"#ffffff\"/>\n";
    out << "<text x=\"" << fmt(width / 2)
        << "\" y=\"22\" font-size=\"14\" text-anchor=\"middle\" fill=\"#000000\">" << title
        << "</text>\n";
    for (std::size_t p = 0; p < panels.size(); ++p) {
        draw_panel(out, panels[p], t, margin_l, margin_t + p * (panel_h + gap), panel_w,
                   panel_h);
    }
    out << "<text x=\"" << fmt(margin_l + panel_w / 2) << "\" y=\"" << fmt(height - 8)
        << "\" font-size=\"11\" text-anchor=\"middle\" fill=\"#222222\">t (years)</text>\n";
    out << "</svg>\n";
}

std::ofstream open_for_write(const std::string& path) {
    std::ofstream out(path);
    if (!out) throw ConfigError(path + ": cannot open for writing");
    return out;
}

}  // namespace

void svg_trajectory_plot(std::ostream& out, const Trajectory& traj,
                         const std::string& title) {
    std::vector<Panel> panels(3);
    panels[0] = {"shares / rate",
                 {{"employment", "#1f77b4", false, &traj.employment},
                  {"wage share", "#d62728", false, &traj.wage_share},
                  {"profit share", "#2ca02c", false, &traj.profit_share}}};
    panels[1] = {"growth", {{"g", "#9467bd", false, &traj.growth}}};
    panels[2] = {"debt ratio",
                 {{"d", "#8c564b", false, &traj.debt},
                  {"d_T", "#8c564b", true, &traj.d_target}}};
    draw_document(out, title, traj.t, panels);
}

void svg_trajectory_plot(const std::string& path, const Trajectory& traj,
                         const std::string& title) {
    auto out = open_for_write(path);
    svg_trajectory_plot(out, traj, title);
}

void svg_ensemble_plot(std::ostream& out, const MonteCarloSummary& mc,
                       const std::string& title) {
    const std::size_t n = mc.t.size();
    auto band = [&](const std::vector<double>& mean, const std::vector<double>& sd,
                    double sign) {
        std::vector<double> out_v(n);
        for (std::size_t i = 0; i < n; ++i) out_v[i] = mean[i] + sign * sd[i];
        return out_v;
    };
    const std::vector<double> lam_hi = band(mc.mean_employment, mc.std_employment, 1.0);
    const std::vector<double> lam_lo = band(mc.mean_employment, mc.std_employment, -1.0);
    const std::vector<double> om_hi = band(mc.mean_wage_share, mc.std_wage_share, 1.0);
    const std::vector<double> om_lo = band(mc.mean_wage_share, mc.std_wage_share, -1.0);
    const std::vector<double> pi_hi = band(mc.mean_profit_share, mc.std_profit_share, 1.0);
    const std::vector<double> pi_lo = band(mc.mean_profit_share, mc.std_profit_share, -1.0);
    const std::vector<double> g_hi = band(mc.mean_growth, mc.std_growth, 1.0);
    const std::vector<double> g_lo = band(mc.mean_growth, mc.std_growth, -1.0);
    const std::vector<double> d_hi = band(mc.mean_debt, mc.std_debt, 1.0);
    const std::vector<double> d_lo = band(mc.mean_debt, mc.std_debt, -1.0);

    std::vector<Panel> panels(3);
    panels[0] = {"shares / rate",
                 {{"employment", "#1f77b4", false, &mc.mean_employment},
                  {"", "#1f77b4", true, &lam_hi},
                  {"", "#1f77b4", true, &lam_lo},
                  {"wage share", "#d62728", false, &mc.mean_wage_share},
                  {"", "#d62728", true, &om_hi},
                  {"", "#d62728", true, &om_lo},
                  {"profit share", "#2ca02c", false, &mc.mean_profit_share},
                  {"", "#2ca02c", true, &pi_hi},
                  {"", "#2ca02c", true, &pi_lo}}};
    panels[1] = {"growth",
                 {{"g", "#9467bd", false, &mc.mean_growth},
                  {"", "#9467bd", true, &g_hi},
                  {"", "#9467bd", true, &g_lo}}};
    panels[2] = {"debt ratio",
                 {{"d", "#8c564b", false, &mc.mean_debt},
                  {"", "#8c564b", true, &d_hi},
                  {"", "#8c564b", true, &d_lo}}};
    draw_document(out, title, mc.t, panels);
}

void svg_ensemble_plot(const std::string& path, const MonteCarloSummary& mc,
                       const std::string& title) {
    auto out = open_for_write(path);
    svg_ensemble_plot(out, mc, title);
}

}  // namespace minsky
