#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "talbot/carpet.hpp"

namespace talbot {

namespace {

std::string fmt17(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

// Write-to-temp-then-rename so partially written outputs never appear
// under the final name.
void commit(const std::filesystem::path& path, const std::string& payload,
            bool binary) {
    const std::filesystem::path tmp = path.string() + ".tmp";
    {
        std::ofstream out(tmp, binary ? std::ios::binary : std::ios::out);
        if (!out) throw std::runtime_error("cannot open " + tmp.string());
        out.write(payload.data(), static_cast<std::streamsize>(payload.size()));
        if (!out) throw std::runtime_error("write failed: " + tmp.string());
    }
    std::filesystem::rename(tmp, path);
}

std::vector<double> parse_row(const std::string& line) {
    std::vector<double> vals;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) {
        if (!cell.empty()) vals.push_back(std::strtod(cell.c_str(), nullptr));
    }
    return vals;
}

}  // namespace

void render_pgm(const CarpetGrid& grid, const std::filesystem::path& path,
                double gamma, bool north_up) {
    if (grid.values.empty()) throw std::invalid_argument("render_pgm: empty grid");
    const double vmax = grid.max_value();
    std::string payload = "P5\n" + std::to_string(grid.nx()) + " " +
                          std::to_string(grid.ny()) + "\n255\n";
    payload.reserve(payload.size() + grid.values.size());
    for (std::size_t row = 0; row < grid.ny(); ++row) {
        const std::size_t iy = north_up ? row : grid.ny() - 1 - row;
        for (std::size_t ix = 0; ix < grid.nx(); ++ix) {
            double v = vmax > 0.0 ? grid.at(iy, ix) / vmax : 0.0;
            v = std::clamp(std::pow(v, gamma), 0.0, 1.0);
            payload.push_back(static_cast<char>(std::lround(255.0 * v)));
        }
    }
    commit(path, payload, true);
}

void write_csv(const CarpetGrid& grid, const std::filesystem::path& path) {
    std::string payload = "axis";
    for (double x : grid.x_axis) payload += "," + fmt17(x);
    payload += "\n";
    for (std::size_t iy = 0; iy < grid.ny(); ++iy) {
        payload += fmt17(grid.y_axis[iy]);
        for (std::size_t ix = 0; ix < grid.nx(); ++ix)
            payload += "," + fmt17(grid.at(iy, ix));
        payload += "\n";
    }
    commit(path, payload, false);
}

void write_csv(const Curve& curve, const std::filesystem::path& path) {
    std::string payload = "theta,density\n";
    for (std::size_t i = 0; i < curve.theta.size(); ++i)
        payload += fmt17(curve.theta[i]) + "," + fmt17(curve.density[i]) + "\n";
    commit(path, payload, false);
}

CarpetGrid read_csv_grid(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path.string());
    CarpetGrid grid;
    grid.meta.kind = "loaded";
    std::string line;
    if (!std::getline(in, line)) throw std::runtime_error("empty grid CSV");
    {
        std::stringstream ss(line);
        std::string cell;
        std::getline(ss, cell, ',');  // corner label
        while (std::getline(ss, cell, ','))
            grid.x_axis.push_back(std::strtod(cell.c_str(), nullptr));
    }
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::vector<double> row = parse_row(line);
        if (row.size() != grid.x_axis.size() + 1)
            throw std::runtime_error("ragged grid CSV row");
        grid.y_axis.push_back(row.front());
        grid.values.insert(grid.values.end(), row.begin() + 1, row.end());
    }
    return grid;
}

Curve read_csv_curve(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path.string());
    Curve curve;
    std::string line;
    std::getline(in, line);  // header
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::vector<double> row = parse_row(line);
        if (row.size() != 2) throw std::runtime_error("bad curve CSV row");
        curve.theta.push_back(row[0]);
        curve.density.push_back(row[1]);
    }
    return curve;
}

void write_meta_json(const CarpetGrid& grid, const std::filesystem::path& path) {
    nlohmann::json j;
    j["kind"] = grid.meta.kind;
    j["params"] = grid.meta.params;
    j["min"] = grid.values.empty()
                   ? 0.0
                   : *std::min_element(grid.values.begin(), grid.values.end());
    j["max"] = grid.max_value();
    j["axes"] = {{"x", {{"min", grid.x_axis.front()}, {"max", grid.x_axis.back()},
                        {"n", grid.nx()}}},
                 {"y", {{"min", grid.y_axis.front()}, {"max", grid.y_axis.back()},
                        {"n", grid.ny()}}}};
    commit(path, j.dump(2) + "\n", false);
}

}  // namespace talbot
