#pragma once

#include "rocopula/jointroc.hpp"

#include <optional>
#include <string>
#include <vector>

namespace rocopula::svg {

struct Series {
    std::string label;
    std::vector<OperatingPoint> points;
    std::string color = "#1f77b4";
    bool dashed = false;
};

struct Marker {
    std::string label;
    OperatingPoint point;
    std::string color = "#000000";
};

struct Plot {
    std::string title;
    std::vector<Series> series;
    std::vector<Marker> markers;
    /// When set, draws lines of constant PPV and NPV at this prevalence.
    std::optional<double> prevalence;
    std::vector<double> ppv_levels{0.1, 0.2, 0.5};
    std::vector<double> npv_levels{0.99, 0.995, 0.999};
};

/// ROC plot on [0,1]² with FPF on x and TPF on y.
std::string render(const Plot& plot);

/// Distinct colors cycled by series index.
std::string palette(std::size_t i);

}  // namespace rocopula::svg
