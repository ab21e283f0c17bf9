#pragma once

#include <cstdio>
#include <string>
#include <vector>

#include "netph/persistence.hpp"

namespace netph {

// Renders barcodes as a stack of one panel per requested dimension. The
// x-axis is the normalized weight range [0,1]; every bar is a horizontal
// line, and essential bars run to x=1 and end in a filled marker. Output is
// plain SVG text with fixed-precision coordinates, so equal inputs give
// byte-identical files. Bars with persistence below min_persistence are
// dropped (0 keeps everything, including zero-length bars, drawn as dots).
inline std::string render_barcode_svg(const BarcodeSet& bc, const std::vector<int>& dims = {0, 1, 2, 3},
                                      double min_persistence = 0.0) {
    const double width = 640.0, margin = 42.0, bar_gap = 7.0, panel_pad = 34.0;
    const double plot_w = width - 2.0 * margin;

    auto fmt = [](double v) {
        char buf[32];
        std::snprintf(buf, sizeof buf, "%.2f", v);
        return std::string(buf);
    };

    std::vector<std::vector<Bar>> panels;
    for (int p : dims) {
        std::vector<Bar> keep;
        for (const Bar& b : bc.dim(p))
            if (b.death - b.birth >= min_persistence) keep.push_back(b);
        panels.push_back(std::move(keep));
    }

    double height = 10.0;
    std::vector<double> panel_tops;
    for (const auto& bars : panels) {
        panel_tops.push_back(height);
        height += panel_pad + bar_gap * static_cast<double>(bars.size() ? bars.size() : 1) + 26.0;
    }

    std::string s;
    s += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + fmt(width) + "\" height=\"" +
         fmt(height) + "\" viewBox=\"0 0 " + fmt(width) + " " + fmt(height) + "\">\n";
    s += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

    for (std::size_t pi = 0; pi < panels.size(); ++pi) {
        const double top = panel_tops[pi];
        const auto& bars = panels[pi];
        const double axis_y = top + panel_pad + bar_gap * static_cast<double>(bars.size() ? bars.size() : 1) + 6.0;
        auto x_of = [&](double w) { return margin + w * plot_w; };

        s += "<text x=\"" + fmt(margin) + "\" y=\"" + fmt(top + 16.0) +
             "\" font-family=\"sans-serif\" font-size=\"13\">H" + std::to_string(dims[pi]) +
             " (" + std::to_string(bars.size()) + " bars)</text>\n";

        for (std::size_t bi = 0; bi < bars.size(); ++bi) {
            const Bar& b = bars[bi];
            const double y = top + panel_pad + bar_gap * static_cast<double>(bi);
            const double x0 = x_of(b.birth), x1 = x_of(b.essential ? 1.0 : b.death);
            if (x1 > x0)
                s += "<line x1=\"" + fmt(x0) + "\" y1=\"" + fmt(y) + "\" x2=\"" + fmt(x1) +
                     "\" y2=\"" + fmt(y) + "\" stroke=\"#2c5f8a\" stroke-width=\"2\"/>\n";
            else
                s += "<circle cx=\"" + fmt(x0) + "\" cy=\"" + fmt(y) +
                     "\" r=\"1.6\" fill=\"#2c5f8a\"/>\n";
            if (b.essential)
                s += "<circle cx=\"" + fmt(x1) + "\" cy=\"" + fmt(y) +
                     "\" r=\"3.2\" fill=\"#b03030\"/>\n";
        }

        s += "<line x1=\"" + fmt(margin) + "\" y1=\"" + fmt(axis_y) + "\" x2=\"" +
             fmt(margin + plot_w) + "\" y2=\"" + fmt(axis_y) +
             "\" stroke=\"black\" stroke-width=\"1\"/>\n";
        for (int tick = 0; tick <= 4; ++tick) {
            const double w = tick / 4.0;
            const double x = x_of(w);
            s += "<line x1=\"" + fmt(x) + "\" y1=\"" + fmt(axis_y) + "\" x2=\"" + fmt(x) +
                 "\" y2=\"" + fmt(axis_y + 4.0) + "\" stroke=\"black\" stroke-width=\"1\"/>\n";
            s += "<text x=\"" + fmt(x - 8.0) + "\" y=\"" + fmt(axis_y + 16.0) +
                 "\" font-family=\"sans-serif\" font-size=\"10\">" + fmt(w) + "</text>\n";
        }
    }

    s += "</svg>\n";
    return s;
}

} // namespace netph
