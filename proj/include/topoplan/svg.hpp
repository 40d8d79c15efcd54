#pragma once

#include <filesystem>
#include <string>
#include <utility>
#include <vector>

namespace topoplan {

struct ChartSeries {
    std::string label;
    std::string color;
    std::vector<std::pair<double, double>> points;
};

// Best-effort line chart; deterministic output for fixed inputs.
void write_line_chart(const std::filesystem::path& file, const std::string& title,
                      const std::string& x_label, const std::string& y_label,
                      const std::vector<ChartSeries>& series);

}  // namespace topoplan
