#pragma once

#include <cstdio>
#include <fstream>
#include <limits>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "bh/core.hpp"
#include "bh/errors.hpp"

namespace bh {

class ParseError : public Error {
public:
    using Error::Error;
};

/// 17 significant digits: round-trips binary64 exactly.
inline std::string format_number(double x) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

/// Problem file: {"points":[{"z": <number>, "taylor":[<numbers>]} ...]};
/// multiplicity is the taylor row length.
inline std::pair<Grid, HermiteData> read_problem(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open problem file: " + path);
    nlohmann::json doc;
    try {
        in >> doc;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError("invalid JSON in " + path + ": " + e.what());
    }
    if (!doc.contains("points") || !doc["points"].is_array())
        throw ParseError(path + ": missing \"points\" array");
    std::vector<double> pts;
    std::vector<int> mults;
    HermiteData data;
    for (const auto& p : doc["points"]) {
        if (!p.contains("z") || !p["z"].is_number())
            throw ParseError(path + ": point entry missing numeric \"z\"");
        if (!p.contains("taylor") || !p["taylor"].is_array() || p["taylor"].empty())
            throw ParseError(path + ": point entry missing nonempty \"taylor\" array");
        pts.push_back(p["z"].get<double>());
        std::vector<double> row;
        for (const auto& c : p["taylor"]) {
            if (!c.is_number()) throw ParseError(path + ": non-numeric taylor coefficient");
            row.push_back(c.get<double>());
        }
        mults.push_back(static_cast<int>(row.size()));
        data.push_back(std::move(row));
    }
    return {validate_grid(std::move(pts), std::move(mults)), std::move(data)};
}

inline void write_problem(const std::string& path, const Grid& grid, const HermiteData& data) {
    require_aligned(grid, data, "data");
    nlohmann::json doc;
    doc["points"] = nlohmann::json::array();
    for (std::size_t k = 0; k < grid.K(); ++k) {
        nlohmann::json p;
        p["z"] = grid.points[k];
        p["taylor"] = data[k];
        doc["points"].push_back(std::move(p));
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ParseError("cannot write " + path);
    out << doc.dump(2) << "\n";
}

/// Weights CSV, header `k,z,r,w`; k is 1-based.
inline void write_weights_csv(std::ostream& out, const Grid& grid, const WeightTable& w) {
    out << "k,z,r,w\n";
    for (std::size_t k = 0; k < grid.K(); ++k)
        for (std::size_t r = 0; r < w[k].size(); ++r)
            out << (k + 1) << ',' << format_number(grid.points[k]) << ',' << r << ','
                << format_number(w[k][r]) << '\n';
}

/// Reads a weights CSV back against a known grid shape.
inline WeightTable read_weights_csv(const std::string& path, const Grid& grid) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open weights file: " + path);
    WeightTable w(grid.K());
    for (std::size_t k = 0; k < grid.K(); ++k)
        w[k].assign(static_cast<std::size_t>(grid.mults[k]),
                    std::numeric_limits<double>::quiet_NaN());
    std::string line;
    if (!std::getline(in, line) || line.rfind("k,z,r,w", 0) != 0)
        throw ParseError(path + ": missing k,z,r,w header");
    std::size_t rows = 0;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::istringstream ss(line);
        std::size_t k, r;
        double z, wv;
        char c1, c2, c3;
        if (!(ss >> k >> c1 >> z >> c2 >> r >> c3 >> wv) || c1 != ',' || c2 != ',' || c3 != ',')
            throw ParseError(path + ": malformed row: " + line);
        if (k < 1 || k > grid.K() || r >= w[k - 1].size())
            throw ParseError(path + ": row out of range: " + line);
        w[k - 1][r] = wv;
        ++rows;
    }
    if (rows != grid.N) throw ParseError(path + ": expected " + std::to_string(grid.N) + " rows");
    return w;
}

}  // namespace bh
