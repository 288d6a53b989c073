#pragma once

#include <filesystem>
#include <string>
#include <vector>

namespace localdeg {

/// Minimal deterministic chart rendering for result CSVs.
struct ChartSpec {
    enum class Kind { line, box, bar };
    Kind kind = Kind::line;
    int x_column = 0;
    int y_column = 1;
    int series_column = -1;   ///< line charts: one polyline per distinct value
    bool log_y = false;
    int width = 800;
    int height = 500;
    std::string title;
};

/// Renders rows (header + data) to an SVG file. Identical inputs give
/// byte-identical output. Empty data yields axes only.
void render_svg(const std::vector<std::vector<std::string>>& rows, const ChartSpec& spec,
                const std::filesystem::path& out_path);

void render_svg_file(const std::filesystem::path& csv_path, const ChartSpec& spec,
                     const std::filesystem::path& out_path);

} // namespace localdeg
