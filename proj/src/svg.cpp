#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>

#include "scrollres/sweep.hpp"

// Hand-rolled SVG writer. Everything is emitted with fixed two-decimal
// coordinates so the document is byte-identical across runs.

namespace scrollres {

namespace {

constexpr double kCell = 32.0;
constexpr double kPad = 16.0;
constexpr double kMarginLeft = 56.0;
constexpr double kMarginTop = 20.0;
constexpr double kMarginBottom = 48.0;
constexpr double kLegendWidth = 216.0;
constexpr double kLegendGap = 14.0;

struct LegendEntry {
    VerdictTag tag;
    const char* color;
};

constexpr LegendEntry kLegend[] = {
    {VerdictTag::unbalanced_N1, "#d62728"},
    {VerdictTag::balanced_N1, "#2ca02c"},
    {VerdictTag::balanced_N1_boundary, "#ff7f0e"},
    {VerdictTag::conjectural_balanced, "#9467bd"},
    {VerdictTag::out_of_hypothesis, "#9e9e9e"},
};

const char* fill_for(VerdictTag tag) {
    for (const LegendEntry& e : kLegend)
        if (e.tag == tag) return e.color;
    throw std::logic_error("unreachable verdict tag");
}

std::string num(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    return buf;
}

}  // namespace

std::string emit_region_svg(std::span<const RegionRecord> records, std::int64_t k_max) {
    if (records.empty())
        throw std::invalid_argument("emit_region_svg: no records to draw");
    if (k_max < 4) throw std::invalid_argument("emit_region_svg: k_max must be at least 4");

    std::int64_t rho_lo = records.front().rho;
    std::int64_t rho_hi = records.front().rho;
    for (const RegionRecord& r : records) {
        rho_lo = std::min(rho_lo, r.rho);
        rho_hi = std::max(rho_hi, r.rho);
    }

    const double plot_w = static_cast<double>(k_max - 4) * kCell + 2 * kPad;
    const double plot_h = static_cast<double>(rho_hi - rho_lo) * kCell + 2 * kPad;
    const double width = kMarginLeft + plot_w + kLegendGap + kLegendWidth;
    const double legend_h = kMarginTop + 8.0 + 22.0 * (sizeof kLegend / sizeof kLegend[0]) + 12.0;
    const double height = std::max(kMarginTop + plot_h + kMarginBottom, legend_h);

    const auto x_of = [&](double k) { return kMarginLeft + kPad + (k - 4.0) * kCell; };
    const auto y_of = [&](double rho) {
        return kMarginTop + kPad + (static_cast<double>(rho_hi) - rho) * kCell;
    };

    std::string svg;
    svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" + num(width) +
           "\" height=\"" + num(height) + "\" viewBox=\"0 0 " + num(width) + " " +
           num(height) + "\">\n";
    svg += "<defs><clipPath id=\"plot\"><rect x=\"" + num(kMarginLeft) + "\" y=\"" +
           num(kMarginTop) + "\" width=\"" + num(plot_w) + "\" height=\"" + num(plot_h) +
           "\"/></clipPath></defs>\n";
    svg += "<rect x=\"0\" y=\"0\" width=\"" + num(width) + "\" height=\"" + num(height) +
           "\" fill=\"#ffffff\"/>\n";
    svg += "<rect x=\"" + num(kMarginLeft) + "\" y=\"" + num(kMarginTop) + "\" width=\"" +
           num(plot_w) + "\" height=\"" + num(plot_h) +
           "\" fill=\"none\" stroke=\"#444444\"/>\n";

    // feasible wedge 0 <= rho < k-3, between the rho = 0 axis and the line
    svg += "<g clip-path=\"url(#plot)\">\n";
    svg += "<polygon points=\"" + num(x_of(4)) + "," + num(y_of(0)) + " " + num(x_of(4)) +
           "," + num(y_of(1)) + " " + num(x_of(static_cast<double>(k_max))) + "," +
           num(y_of(static_cast<double>(k_max) - 3.0)) + " " +
           num(x_of(static_cast<double>(k_max))) + "," + num(y_of(0)) +
           "\" fill=\"#f2f2f2\"/>\n";

    // the line rho = k - 3  (g = k + 1)
    svg += "<line x1=\"" + num(x_of(4)) + "\" y1=\"" + num(y_of(1)) + "\" x2=\"" +
           num(x_of(static_cast<double>(k_max))) + "\" y2=\"" +
           num(y_of(static_cast<double>(k_max) - 3.0)) +
           "\" stroke=\"#1f77b4\" stroke-width=\"1.5\"/>\n";

    // conic branches rho = k - 7/2 +- sqrt(8k - 23)/2, sampled at integer k;
    // 8k - 23 > 0 for every integer k >= 4, checked in integers
    std::string upper, lower;
    for (std::int64_t k = 4; k <= k_max; ++k) {
        if (8 * k - 23 <= 0) continue;
        const double half_root = std::sqrt(static_cast<double>(8 * k - 23)) / 2.0;
        const double mid = static_cast<double>(k) - 3.5;
        if (!upper.empty()) upper += " ";
        upper += num(x_of(static_cast<double>(k))) + "," + num(y_of(mid + half_root));
        if (!lower.empty()) lower += " ";
        lower += num(x_of(static_cast<double>(k))) + "," + num(y_of(mid - half_root));
    }
    svg += "<polyline points=\"" + upper +
           "\" fill=\"none\" stroke=\"#000000\" stroke-width=\"1.5\"/>\n";
    svg += "<polyline points=\"" + lower +
           "\" fill=\"none\" stroke=\"#000000\" stroke-width=\"1.5\"/>\n";

    // lattice points
    for (const RegionRecord& r : records) {
        svg += "<circle cx=\"" + num(x_of(static_cast<double>(r.k))) + "\" cy=\"" +
               num(y_of(static_cast<double>(r.rho))) + "\" r=\"7.00\" fill=\"" +
               fill_for(r.verdict) + "\" stroke=\"#333333\"><title>(k,rho)=(" +
               std::to_string(r.k) + "," + std::to_string(r.rho) + ") " +
               to_string(r.verdict) + "</title></circle>\n";
    }
    svg += "</g>\n";

    // axis ticks and labels
    for (std::int64_t k = 4; k <= k_max; ++k) {
        const double x = x_of(static_cast<double>(k));
        svg += "<line x1=\"" + num(x) + "\" y1=\"" + num(kMarginTop + plot_h) + "\" x2=\"" +
               num(x) + "\" y2=\"" + num(kMarginTop + plot_h + 5) +
               "\" stroke=\"#444444\"/>\n";
        svg += "<text x=\"" + num(x) + "\" y=\"" + num(kMarginTop + plot_h + 18) +
               "\" font-family=\"monospace\" font-size=\"11\" text-anchor=\"middle\">" +
               std::to_string(k) + "</text>\n";
    }
    for (std::int64_t rho = rho_lo; rho <= rho_hi; ++rho) {
        const double y = y_of(static_cast<double>(rho));
        svg += "<line x1=\"" + num(kMarginLeft - 5) + "\" y1=\"" + num(y) + "\" x2=\"" +
               num(kMarginLeft) + "\" y2=\"" + num(y) + "\" stroke=\"#444444\"/>\n";
        svg += "<text x=\"" + num(kMarginLeft - 9) + "\" y=\"" + num(y + 4) +
               "\" font-family=\"monospace\" font-size=\"11\" text-anchor=\"end\">" +
               std::to_string(rho) + "</text>\n";
    }
    svg += "<text x=\"" + num(kMarginLeft + plot_w / 2) + "\" y=\"" + num(height - 10) +
           "\" font-family=\"monospace\" font-size=\"13\" text-anchor=\"middle\">k</text>\n";
    svg += "<text x=\"14.00\" y=\"" + num(kMarginTop + plot_h / 2) +
           "\" font-family=\"monospace\" font-size=\"13\" text-anchor=\"middle\">rho</text>\n";

    // legend
    const double lx = kMarginLeft + plot_w + kLegendGap;
    double ly = kMarginTop + 8.0;
    for (const LegendEntry& e : kLegend) {
        svg += "<rect x=\"" + num(lx) + "\" y=\"" + num(ly) +
               "\" width=\"14.00\" height=\"14.00\" fill=\"" + std::string(e.color) +
               "\" stroke=\"#333333\"/>\n";
        svg += "<text x=\"" + num(lx + 20) + "\" y=\"" + num(ly + 11) +
               "\" font-family=\"monospace\" font-size=\"12\">" + to_string(e.tag) +
               "</text>\n";
        ly += 22.0;
    }

    svg += "</svg>\n";
    return svg;
}

}  // namespace scrollres
