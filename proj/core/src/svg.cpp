#include "nnssim/svg.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <limits>

#include "nnssim/errors.hpp"

namespace nnssim::svg {

namespace {

constexpr double kWidth = 880.0;
constexpr double kHeight = 500.0;
constexpr double kMarginLeft = 90.0;
constexpr double kMarginRight = 90.0;
constexpr double kMarginTop = 60.0;
constexpr double kMarginBottom = 70.0;

constexpr std::array<const char*, 6> kPalette = {"#1f77b4", "#d62728", "#2ca02c",
                                                 "#ff7f0e", "#9467bd", "#8c564b"};

std::string coord(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    return buf;
}

std::string tick_label(double v) {
    char buf[32];
    const double a = std::fabs(v);
    if (a >= 1e9) {
        std::snprintf(buf, sizeof buf, "%gB", v / 1e9);
    } else if (a >= 1e6) {
        std::snprintf(buf, sizeof buf, "%gM", v / 1e6);
    } else if (a >= 1e4) {
        std::snprintf(buf, sizeof buf, "%gk", v / 1e3);
    } else {
        std::snprintf(buf, sizeof buf, "%.6g", std::fabs(v) < 1e-12 ? 0.0 : v);
    }
    return buf;
}

struct Range {
    double lo = std::numeric_limits<double>::infinity();
    double hi = -std::numeric_limits<double>::infinity();

    void include(double v) {
        if (!std::isfinite(v)) return;
        lo = std::min(lo, v);
        hi = std::max(hi, v);
    }
    bool empty() const { return lo > hi; }
};

struct Axis {
    double lo = 0.0;
    double hi = 1.0;
    std::vector<double> ticks;
};

Axis make_axis(Range r) {
    if (r.empty()) r = Range{0.0, 1.0};
    if (r.hi == r.lo) {
        const double pad = r.lo == 0.0 ? 1.0 : std::fabs(r.lo) * 0.1;
        r.lo -= pad;
        r.hi += pad;
    }
    Axis axis;
    axis.ticks = nice_ticks(r.lo, r.hi);
    axis.lo = axis.ticks.front();
    axis.hi = axis.ticks.back();
    return axis;
}

class Frame {
public:
    Frame(double left, double top, double width, double height, Axis x, Axis y)
        : left_(left), top_(top), width_(width), height_(height), x_(std::move(x)), y_(std::move(y)) {}

    double px(double x) const { return left_ + (x - x_.lo) / (x_.hi - x_.lo) * width_; }
    double py(double y) const { return top_ + height_ - (y - y_.lo) / (y_.hi - y_.lo) * height_; }
    double py(double y, const Axis& axis) const {
        return top_ + height_ - (y - axis.lo) / (axis.hi - axis.lo) * height_;
    }
    double left() const { return left_; }
    double top() const { return top_; }
    double right() const { return left_ + width_; }
    double bottom() const { return top_ + height_; }
    const Axis& x_axis() const { return x_; }
    const Axis& y_axis() const { return y_; }

private:
    double left_, top_, width_, height_;
    Axis x_, y_;
};

void open_document(std::string& out, double width, double height, const std::string& title) {
    out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    out += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" + coord(width) +
           "\" height=\"" + coord(height) + "\" viewBox=\"0 0 " + coord(width) + " " + coord(height) +
           "\" font-family=\"sans-serif\" font-size=\"12\">\n";
    out += "<title>" + escape_xml(title) + "</title>\n";
    out += "<rect x=\"0\" y=\"0\" width=\"" + coord(width) + "\" height=\"" + coord(height) +
           "\" fill=\"#ffffff\"/>\n";
    out += "<text x=\"" + coord(width / 2) + "\" y=\"28\" text-anchor=\"middle\" font-size=\"16\">" +
           escape_xml(title) + "</text>\n";
}

void draw_axes(std::string& out, const Frame& f, const std::string& x_label, const std::string& y_label) {
    out += "<g class=\"axes\" stroke=\"#333333\" fill=\"none\">\n";
    out += "<line x1=\"" + coord(f.left()) + "\" y1=\"" + coord(f.bottom()) + "\" x2=\"" + coord(f.right()) +
           "\" y2=\"" + coord(f.bottom()) + "\"/>\n";
    out += "<line x1=\"" + coord(f.left()) + "\" y1=\"" + coord(f.top()) + "\" x2=\"" + coord(f.left()) +
           "\" y2=\"" + coord(f.bottom()) + "\"/>\n";
    out += "</g>\n<g class=\"ticks\" fill=\"#333333\">\n";
    for (double t : f.x_axis().ticks) {
        const double x = f.px(t);
        out += "<line x1=\"" + coord(x) + "\" y1=\"" + coord(f.bottom()) + "\" x2=\"" + coord(x) +
               "\" y2=\"" + coord(f.bottom() + 5) + "\" stroke=\"#333333\"/>\n";
        out += "<text x=\"" + coord(x) + "\" y=\"" + coord(f.bottom() + 18) +
               "\" text-anchor=\"middle\">" + tick_label(t) + "</text>\n";
    }
    for (double t : f.y_axis().ticks) {
        const double y = f.py(t);
        out += "<line x1=\"" + coord(f.left() - 5) + "\" y1=\"" + coord(y) + "\" x2=\"" + coord(f.left()) +
               "\" y2=\"" + coord(y) + "\" stroke=\"#333333\"/>\n";
        out += "<text x=\"" + coord(f.left() - 8) + "\" y=\"" + coord(y + 4) +
               "\" text-anchor=\"end\">" + tick_label(t) + "</text>\n";
    }
    out += "</g>\n";
    out += "<text class=\"x-label\" x=\"" + coord((f.left() + f.right()) / 2) + "\" y=\"" +
           coord(f.bottom() + 40) + "\" text-anchor=\"middle\">" + escape_xml(x_label) + "</text>\n";
    const double mid = (f.top() + f.bottom()) / 2;
    out += "<text class=\"y-label\" x=\"" + coord(f.left() - 60) + "\" y=\"" + coord(mid) +
           "\" text-anchor=\"middle\" transform=\"rotate(-90 " + coord(f.left() - 60) + " " + coord(mid) +
           ")\">" + escape_xml(y_label) + "</text>\n";
}

void draw_right_axis(std::string& out, const Frame& f, const Axis& axis, const std::string& label) {
    out += "<g class=\"axis-right\" fill=\"#333333\">\n";
    out += "<line x1=\"" + coord(f.right()) + "\" y1=\"" + coord(f.top()) + "\" x2=\"" + coord(f.right()) +
           "\" y2=\"" + coord(f.bottom()) + "\" stroke=\"#333333\"/>\n";
    for (double t : axis.ticks) {
        const double y = f.py(t, axis);
        out += "<line x1=\"" + coord(f.right()) + "\" y1=\"" + coord(y) + "\" x2=\"" + coord(f.right() + 5) +
               "\" y2=\"" + coord(y) + "\" stroke=\"#333333\"/>\n";
        out += "<text x=\"" + coord(f.right() + 8) + "\" y=\"" + coord(y + 4) +
               "\" text-anchor=\"start\">" + tick_label(t) + "</text>\n";
    }
    out += "</g>\n";
    const double x = f.right() + 65;
    const double mid = (f.top() + f.bottom()) / 2;
    out += "<text class=\"y2-label\" x=\"" + coord(x) + "\" y=\"" + coord(mid) +
           "\" text-anchor=\"middle\" transform=\"rotate(90 " + coord(x) + " " + coord(mid) + ")\">" +
           escape_xml(label) + "</text>\n";
}

void draw_legend(std::string& out, const Frame& f, std::span<const Series> series, bool filled) {
    const double row = 18.0;
    const double box_w = 190.0;
    const double x = f.right() - box_w - 8;
    const double y = f.top() + 8;
    out += "<g class=\"legend\">\n";
    out += "<rect x=\"" + coord(x) + "\" y=\"" + coord(y) + "\" width=\"" + coord(box_w) + "\" height=\"" +
           coord(row * static_cast<double>(series.size()) + 8) +
           "\" fill=\"#ffffff\" fill-opacity=\"0.85\" stroke=\"#999999\"/>\n";
    for (std::size_t i = 0; i < series.size(); ++i) {
        const double ry = y + 6 + row * static_cast<double>(i);
        const char* color = kPalette[i % kPalette.size()];
        if (filled) {
            out += "<rect x=\"" + coord(x + 8) + "\" y=\"" + coord(ry + 2) + "\" width=\"18\" height=\"10\" fill=\"" +
                   color + "\"/>\n";
        } else {
            out += "<line x1=\"" + coord(x + 8) + "\" y1=\"" + coord(ry + 7) + "\" x2=\"" + coord(x + 26) +
                   "\" y2=\"" + coord(ry + 7) + "\" stroke=\"" + color + "\" stroke-width=\"2\"" +
                   (series[i].right_axis ? " stroke-dasharray=\"5,3\"" : "") + "/>\n";
        }
        out += "<text x=\"" + coord(x + 32) + "\" y=\"" + coord(ry + 11) + "\">" + escape_xml(series[i].name) +
               "</text>\n";
    }
    out += "</g>\n";
}

void check_series(const Series& s) {
    if (s.x.size() != s.y.size()) {
        throw DomainError("series '" + s.name + "' has mismatched x/y lengths");
    }
}

}  // namespace

std::string escape_xml(std::string_view text) {
    std::string out;
    out.reserve(text.size());
    for (char c : text) {
        switch (c) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '"': out += "&quot;"; break;
            case '\'': out += "&apos;"; break;
            default: out += c;
        }
    }
    return out;
}

std::vector<double> nice_ticks(double lo, double hi, int target_count) {
    if (!(hi > lo)) throw DomainError("tick range must be non-empty");
    const double raw = (hi - lo) / std::max(target_count, 1);
    const double magnitude = std::pow(10.0, std::floor(std::log10(raw)));
    const double fraction = raw / magnitude;
    double step = 10.0 * magnitude;
    if (fraction <= 1.0) {
        step = magnitude;
    } else if (fraction <= 2.0) {
        step = 2.0 * magnitude;
    } else if (fraction <= 5.0) {
        step = 5.0 * magnitude;
    }
    const double first = std::floor(lo / step + 1e-9);
    const double last = std::ceil(hi / step - 1e-9);
    std::vector<double> ticks;
    for (double k = first; k <= last + 0.5; k += 1.0) ticks.push_back(k * step);
    return ticks;
}

std::string render(const LineChart& chart) {
    if (chart.series.empty()) throw DomainError("chart '" + chart.title + "' has no series");
    for (const auto& s : chart.series) check_series(s);

    Range xr, yl, yr;
    bool has_right = false;
    if (chart.stacked) {
        const auto& xs = chart.series.front().x;
        for (const auto& s : chart.series) {
            if (s.x != xs) throw DomainError("stacked series must share x values");
        }
        yl.include(0.0);
        for (std::size_t k = 0; k < xs.size(); ++k) {
            xr.include(xs[k]);
            double total = 0.0;
            for (const auto& s : chart.series) total += s.y[k];
            yl.include(total);
        }
    } else {
        for (const auto& s : chart.series) {
            for (double x : s.x) xr.include(x);
            for (double y : s.y) (s.right_axis ? yr : yl).include(y);
            has_right = has_right || s.right_axis;
        }
    }

    const Frame frame(kMarginLeft, kMarginTop, kWidth - kMarginLeft - kMarginRight,
                      kHeight - kMarginTop - kMarginBottom, make_axis(xr), make_axis(yl));
    const Axis right = make_axis(yr);

    std::string out;
    open_document(out, kWidth, kHeight, chart.title);
    draw_axes(out, frame, chart.x_label, chart.y_label);
    if (has_right) draw_right_axis(out, frame, right, chart.y2_label);

    if (chart.stacked) {
        const auto& xs = chart.series.front().x;
        std::vector<double> base(xs.size(), 0.0);
        for (std::size_t i = 0; i < chart.series.size(); ++i) {
            const auto& s = chart.series[i];
            std::string points;
            for (std::size_t k = 0; k < xs.size(); ++k) {
                if (!points.empty()) points += ' ';
                points += coord(frame.px(xs[k])) + "," + coord(frame.py(base[k] + s.y[k]));
            }
            for (std::size_t k = xs.size(); k-- > 0;) {
                points += ' ' + coord(frame.px(xs[k])) + "," + coord(frame.py(base[k]));
            }
            out += "<polygon class=\"series\" data-series=\"" + escape_xml(s.name) + "\" fill=\"" +
                   kPalette[i % kPalette.size()] + "\" fill-opacity=\"0.8\" stroke=\"none\" points=\"" +
                   points + "\"/>\n";
            for (std::size_t k = 0; k < xs.size(); ++k) base[k] += s.y[k];
        }
    } else {
        for (std::size_t i = 0; i < chart.series.size(); ++i) {
            const auto& s = chart.series[i];
            std::vector<std::string> segments(1);
            for (std::size_t k = 0; k < s.x.size(); ++k) {
                if (!std::isfinite(s.y[k]) || !std::isfinite(s.x[k])) {
                    if (!segments.back().empty()) segments.emplace_back();
                    continue;
                }
                const double y = s.right_axis ? frame.py(s.y[k], right) : frame.py(s.y[k]);
                auto& seg = segments.back();
                if (!seg.empty()) seg += ' ';
                seg += coord(frame.px(s.x[k])) + "," + coord(y);
            }
            for (const auto& seg : segments) {
                if (seg.empty()) continue;
                out += "<polyline class=\"series\" data-series=\"" + escape_xml(s.name) + "\" fill=\"none\" stroke=\"" +
                       kPalette[i % kPalette.size()] + "\" stroke-width=\"2\"" +
                       (s.right_axis ? " stroke-dasharray=\"5,3\"" : "") + " points=\"" + seg + "\"/>\n";
            }
        }
    }
    draw_legend(out, frame, chart.series, chart.stacked);
    out += "</svg>\n";
    return out;
}

std::string render(const std::string& title, std::span<const HistogramPanel> panels) {
    if (panels.empty()) throw DomainError("histogram figure needs at least one panel");
    constexpr double panel_w = 300.0;
    constexpr double panel_h = 300.0;
    constexpr double gap = 110.0;
    const double width = kMarginLeft + static_cast<double>(panels.size()) * (panel_w + gap) - gap + 40.0;
    const double height = kMarginTop + panel_h + kMarginBottom + 20.0;

    std::string out;
    open_document(out, width, height, title);
    for (std::size_t p = 0; p < panels.size(); ++p) {
        const auto& panel = panels[p];
        if (panel.bins.empty()) throw DomainError("histogram panel '" + panel.title + "' has no bins");
        Range xr, yr;
        yr.include(0.0);
        for (const auto& b : panel.bins) {
            xr.include(b.lo);
            xr.include(b.hi);
            yr.include(static_cast<double>(b.count));
        }
        const double left = kMarginLeft + static_cast<double>(p) * (panel_w + gap);
        const Frame frame(left, kMarginTop + 20.0, panel_w, panel_h, make_axis(xr), make_axis(yr));
        out += "<g class=\"panel\" data-feature=\"" + escape_xml(panel.title) + "\">\n";
        out += "<text x=\"" + coord(left + panel_w / 2) + "\" y=\"" + coord(kMarginTop + 10.0) +
               "\" text-anchor=\"middle\" font-size=\"14\">" + escape_xml(panel.title) + "</text>\n";
        draw_axes(out, frame, panel.x_label, "count");
        const char* color = kPalette[p % kPalette.size()];
        for (const auto& b : panel.bins) {
            const double x0 = frame.px(b.lo);
            const double x1 = frame.px(b.hi);
            const double y0 = frame.py(static_cast<double>(b.count));
            out += "<rect x=\"" + coord(x0) + "\" y=\"" + coord(y0) + "\" width=\"" + coord(std::max(x1 - x0, 0.0)) +
                   "\" height=\"" + coord(frame.bottom() - y0) + "\" fill=\"" + color +
                   "\" stroke=\"#ffffff\" stroke-width=\"0.5\"/>\n";
        }
        out += "</g>\n";
    }
    out += "</svg>\n";
    return out;
}

}  // namespace nnssim::svg
