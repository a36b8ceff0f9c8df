#include "rocopula/svg.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <sstream>

namespace rocopula::svg {

namespace {

constexpr double kLeft = 70.0;
constexpr double kTop = 40.0;
constexpr double kSide = 420.0;
constexpr double kLegendWidth = 260.0;

std::string num(double x)
{
    char buf[32];
    auto res = std::to_chars(buf, buf + sizeof buf, x, std::chars_format::fixed, 2);
    return std::string(buf, res.ptr);
}

double px(double fpf) { return kLeft + kSide * std::clamp(fpf, 0.0, 1.0); }
double py(double tpf) { return kTop + kSide * (1.0 - std::clamp(tpf, 0.0, 1.0)); }

std::string escape(const std::string& s)
{
    std::string out;
    for (char ch : s) {
        switch (ch) {
        case '&': out += "&amp;"; break;
        case '<': out += "&lt;"; break;
        case '>': out += "&gt;"; break;
        case '"': out += "&quot;"; break;
        default: out += ch;
        }
    }
    return out;
}

void line(std::ostringstream& os, OperatingPoint a, OperatingPoint b, const char* style)
{
    os << "<line x1=\"" << num(px(a.fpf)) << "\" y1=\"" << num(py(a.tpf)) << "\" x2=\"" << num(px(b.fpf))
       << "\" y2=\"" << num(py(b.tpf)) << "\" " << style << "/>\n";
}

}  // namespace

std::string palette(std::size_t i)
{
    static const char* colors[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd",
                                   "#ff7f0e", "#8c564b", "#e377c2", "#17becf"};
    return colors[i % (sizeof colors / sizeof colors[0])];
}

std::string render(const Plot& plot)
{
    std::ostringstream os;
    const double width = kLeft + kSide + 30.0 + kLegendWidth;
    const double height = kTop + kSide + 60.0;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << num(width) << "\" height=\"" << num(height)
       << "\" viewBox=\"0 0 " << num(width) << ' ' << num(height) << "\" font-family=\"sans-serif\" font-size=\"12\">\n";
    os << "<rect x=\"0\" y=\"0\" width=\"" << num(width) << "\" height=\"" << num(height) << "\" fill=\"white\"/>\n";
    if (!plot.title.empty()) {
        os << "<text x=\"" << num(kLeft + kSide / 2) << "\" y=\"24\" text-anchor=\"middle\" font-size=\"14\">"
           << escape(plot.title) << "</text>\n";
    }

    for (int i = 0; i <= 5; ++i) {
        const double t = i / 5.0;
        line(os, {t, 0.0}, {t, 1.0}, "stroke=\"#eeeeee\"");
        line(os, {0.0, t}, {1.0, t}, "stroke=\"#eeeeee\"");
        os << "<text x=\"" << num(px(t)) << "\" y=\"" << num(py(0.0) + 16) << "\" text-anchor=\"middle\">"
           << num(t).substr(0, 3) << "</text>\n";
        os << "<text x=\"" << num(px(0.0) - 6) << "\" y=\"" << num(py(t) + 4) << "\" text-anchor=\"end\">"
           << num(t).substr(0, 3) << "</text>\n";
    }
    line(os, {0.0, 0.0}, {1.0, 1.0}, "stroke=\"#bbbbbb\" stroke-dasharray=\"2,3\"");

    if (plot.prevalence && *plot.prevalence > 0.0 && *plot.prevalence < 1.0) {
        const double p = *plot.prevalence;
        // PPV = c  <=>  TPF = k FPF through the origin
        for (double c : plot.ppv_levels) {
            const double k = (1.0 - p) * c / (p * (1.0 - c));
            const OperatingPoint end = k >= 1.0 ? OperatingPoint{1.0 / k, 1.0} : OperatingPoint{1.0, k};
            line(os, {0.0, 0.0}, end, "stroke=\"#999999\" stroke-width=\"0.8\" stroke-dasharray=\"6,3\"");
            os << "<text x=\"" << num(px(end.fpf) - 2) << "\" y=\"" << num(py(end.tpf) - 3)
               << "\" text-anchor=\"end\" font-size=\"9\" fill=\"#777777\">PPV " << c << "</text>\n";
        }
        // NPV = c  <=>  1 - TPF = k (1 - FPF) through (1,1)
        for (double c : plot.npv_levels) {
            const double k = (1.0 - p) * (1.0 - c) / (p * c);
            const OperatingPoint end = k <= 1.0 ? OperatingPoint{0.0, 1.0 - k} : OperatingPoint{1.0 - 1.0 / k, 0.0};
            line(os, {1.0, 1.0}, end, "stroke=\"#999999\" stroke-width=\"0.8\" stroke-dasharray=\"1,3\"");
            os << "<text x=\"" << num(px(end.fpf) + 2) << "\" y=\"" << num(py(end.tpf) - 3)
               << "\" font-size=\"9\" fill=\"#777777\">NPV " << c << "</text>\n";
        }
    }

    os << "<rect x=\"" << num(kLeft) << "\" y=\"" << num(kTop) << "\" width=\"" << num(kSide) << "\" height=\""
       << num(kSide) << "\" fill=\"none\" stroke=\"black\"/>\n";
    os << "<text x=\"" << num(kLeft + kSide / 2) << "\" y=\"" << num(kTop + kSide + 36)
       << "\" text-anchor=\"middle\">False positive fraction</text>\n";
    os << "<text x=\"20\" y=\"" << num(kTop + kSide / 2) << "\" text-anchor=\"middle\" transform=\"rotate(-90 20 "
       << num(kTop + kSide / 2) << ")\">True positive fraction</text>\n";

    double ly = kTop + 10.0;
    const double lx = kLeft + kSide + 30.0;
    for (const auto& s : plot.series) {
        if (s.points.empty()) {
            continue;
        }
        os << "<polyline fill=\"none\" stroke=\"" << s.color << "\" stroke-width=\"1.6\""
           << (s.dashed ? " stroke-dasharray=\"5,3\"" : "") << " points=\"";
        for (std::size_t i = 0; i < s.points.size(); ++i) {
            os << (i ? " " : "") << num(px(s.points[i].fpf)) << ',' << num(py(s.points[i].tpf));
        }
        os << "\"/>\n";
        os << "<line x1=\"" << num(lx) << "\" y1=\"" << num(ly) << "\" x2=\"" << num(lx + 24) << "\" y2=\""
           << num(ly) << "\" stroke=\"" << s.color << "\" stroke-width=\"1.6\""
           << (s.dashed ? " stroke-dasharray=\"5,3\"" : "") << "/>\n";
        os << "<text x=\"" << num(lx + 30) << "\" y=\"" << num(ly + 4) << "\">" << escape(s.label) << "</text>\n";
        ly += 18.0;
    }
    for (const auto& m : plot.markers) {
        os << "<circle cx=\"" << num(px(m.point.fpf)) << "\" cy=\"" << num(py(m.point.tpf))
           << "\" r=\"4\" fill=\"" << m.color << "\" stroke=\"black\" stroke-width=\"0.5\"/>\n";
        os << "<circle cx=\"" << num(lx + 12) << "\" cy=\"" << num(ly) << "\" r=\"4\" fill=\"" << m.color
           << "\" stroke=\"black\" stroke-width=\"0.5\"/>\n";
        os << "<text x=\"" << num(lx + 30) << "\" y=\"" << num(ly + 4) << "\">" << escape(m.label) << "</text>\n";
        ly += 18.0;
    }
    os << "</svg>\n";
    return os.str();
}

}  // namespace rocopula::svg
