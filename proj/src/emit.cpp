#include "wabl/emit.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace wabl {

std::string format_number(double value) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.6g", value);
    return buf;
}

std::string curve_csv(const ResponseCurve& curve) {
    std::string out = "t,v\n";
    for (const CurveSample& s : curve.samples) {
        out += format_number(s.t);
        out += ',';
        out += format_number(s.v);
        out += '\n';
    }
    return out;
}

std::string trace_csv(const SimTrace& trace) {
    std::string out = "time,temperature,fan_speed\n";
    for (const TraceSample& s : trace.samples) {
        out += format_number(s.time);
        out += ',';
        out += format_number(s.temperature);
        out += ',';
        out += format_number(s.fan_speed);
        out += '\n';
    }
    return out;
}

std::string sweep_csv(const std::vector<SweepRow>& rows) {
    std::string out = "c_left,m,output\n";
    for (const SweepRow& r : rows) {
        out += format_number(r.c_left);
        out += ',';
        out += format_number(r.m);
        out += ',';
        out += format_number(r.output);
        out += '\n';
    }
    return out;
}

std::string curve_svg(const ResponseCurve& curve, const std::string& x_label,
                      const std::string& y_label) {
    constexpr double kWidth = 800.0, kHeight = 500.0, kMargin = 60.0;
    const double plot_w = kWidth - 2.0 * kMargin;
    const double plot_h = kHeight - 2.0 * kMargin;

    double x_lo = curve.samples.front().t, x_hi = curve.samples.back().t;
    double y_lo = curve.samples.front().v, y_hi = y_lo;
    for (const CurveSample& s : curve.samples) {
        y_lo = std::min(y_lo, s.v);
        y_hi = std::max(y_hi, s.v);
    }
    if (x_hi == x_lo) x_hi = x_lo + 1.0;
    if (y_hi == y_lo) y_hi = y_lo + 1.0;

    auto px = [&](double t) { return kMargin + (t - x_lo) / (x_hi - x_lo) * plot_w; };
    auto py = [&](double v) { return kHeight - kMargin - (v - y_lo) / (y_hi - y_lo) * plot_h; };

    std::ostringstream svg;
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth << "\" height=\""
        << kHeight << "\" viewBox=\"0 0 " << kWidth << " " << kHeight << "\">\n";
    svg << "  <rect width=\"" << kWidth << "\" height=\"" << kHeight << "\" fill=\"white\"/>\n";
    svg << "  <line x1=\"" << kMargin << "\" y1=\"" << kHeight - kMargin << "\" x2=\""
        << kWidth - kMargin << "\" y2=\"" << kHeight - kMargin
        << "\" stroke=\"black\" stroke-width=\"1\"/>\n";
    svg << "  <line x1=\"" << kMargin << "\" y1=\"" << kMargin << "\" x2=\"" << kMargin
        << "\" y2=\"" << kHeight - kMargin << "\" stroke=\"black\" stroke-width=\"1\"/>\n";

    svg << "  <polyline fill=\"none\" stroke=\"steelblue\" stroke-width=\"2\" points=\"";
    for (std::size_t i = 0; i < curve.samples.size(); ++i) {
        if (i > 0) svg << ' ';
        svg << format_number(px(curve.samples[i].t)) << ',' << format_number(py(curve.samples[i].v));
    }
    svg << "\"/>\n";

    svg << "  <text x=\"" << kWidth / 2.0 << "\" y=\"" << kHeight - kMargin / 4.0
        << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"14\">" << x_label
        << "</text>\n";
    svg << "  <text x=\"" << kMargin / 4.0 << "\" y=\"" << kHeight / 2.0
        << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"14\" "
           "transform=\"rotate(-90 "
        << kMargin / 4.0 << ' ' << kHeight / 2.0 << ")\">" << y_label << "</text>\n";

    auto tick = [&](double x, double y, const std::string& text, bool x_axis) {
        svg << "  <text x=\"" << x << "\" y=\"" << y << "\" text-anchor=\""
            << (x_axis ? "middle" : "end")
            << "\" font-family=\"sans-serif\" font-size=\"12\">" << text << "</text>\n";
    };
    tick(px(x_lo), kHeight - kMargin + 18.0, format_number(x_lo), true);
    tick(px(x_hi), kHeight - kMargin + 18.0, format_number(x_hi), true);
    tick(kMargin - 6.0, py(y_lo) + 4.0, format_number(y_lo), false);
    tick(kMargin - 6.0, py(y_hi) + 4.0, format_number(y_hi), false);

    svg << "</svg>\n";
    return svg.str();
}

void write_file(const std::filesystem::path& path, const std::string& content) {
    const std::filesystem::path tmp = path.string() + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) {
            throw IoError("cannot write " + path.string());
        }
        out << content;
        if (!out) {
            std::error_code ec;
            std::filesystem::remove(tmp, ec);
            throw IoError("cannot write " + path.string());
        }
    }
    std::error_code ec;
    std::filesystem::rename(tmp, path, ec);
    if (ec) {
        std::filesystem::remove(tmp, ec);
        throw IoError("cannot write " + path.string());
    }
}

} // namespace wabl
