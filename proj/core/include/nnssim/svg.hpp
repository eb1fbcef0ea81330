#pragma once

// Minimal, byte-deterministic SVG 1.1 plotting: line charts with an optional
// right-hand axis, stacked area charts, and side-by-side histogram panels.
// Coordinates are printed with two decimals; nothing depends on time or
// memory addresses.

#include <span>
#include <string>
#include <vector>

#include "nnssim/population.hpp"

namespace nnssim::svg {

/// A NaN in `y` breaks the polyline, leaving a visible gap.
struct Series {
    std::string name;
    std::vector<double> x{};
    std::vector<double> y{};
    bool right_axis = false;
};

struct LineChart {
    std::string title;
    std::string x_label;
    std::string y_label;
    std::string y2_label;  // used when any series sits on the right axis
    std::vector<Series> series;
    /// Draw series as areas stacked bottom-up in declaration order. All
    /// series must share the same x values.
    bool stacked = false;
};

struct HistogramPanel {
    std::string title;
    std::string x_label;
    std::vector<HistogramBin> bins;
};

std::string render(const LineChart& chart);
std::string render(const std::string& title, std::span<const HistogramPanel> panels);

/// Tick positions covering [lo, hi] at a 1/2/5 x 10^k step.
std::vector<double> nice_ticks(double lo, double hi, int target_count = 5);

std::string escape_xml(std::string_view text);

}  // namespace nnssim::svg
