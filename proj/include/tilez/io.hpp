#pragma once

// File formats and rendering. Certificates are plain structured-text
// documents with a stable field order so they stay diffable across tool
// versions; parse(serialize(x)) == x exactly.

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "tilez/decide.hpp"
#include "tilez/geometry.hpp"
#include "tilez/periodize.hpp"

namespace tilez {

using ordered_json = nlohmann::ordered_json;

inline constexpr const char* kToolVersion = "tilez 1.0.0";

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// ---------------------------------------------------------------- tiles

// Rows of '#' and '.'; the first row is the top of the shape (highest y).
inline Tile tile_from_grid(const std::vector<std::string>& rows) {
    if (rows.empty()) throw ParseError("grid needs at least one row");
    std::size_t width = rows[0].size();
    std::vector<Cell> cells;
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != width) throw ParseError("grid rows must have equal length");
        for (std::size_t cidx = 0; cidx < rows[r].size(); ++cidx) {
            char ch = rows[r][cidx];
            if (ch == '#')
                cells.push_back({static_cast<i64>(cidx),
                                 static_cast<i64>(rows.size() - 1 - r)});
            else if (ch != '.')
                throw ParseError("grid cells must be '#' or '.'");
        }
    }
    if (cells.empty()) throw ParseError("grid has no '#' cells");
    return canonicalize_tile(cells);
}

struct TileDocument {
    std::optional<std::string> name;
    Tile tile;

    friend bool operator==(const TileDocument& a, const TileDocument& b) = default;
};

inline ordered_json tile_to_json(const TileDocument& doc) {
    ordered_json j;
    if (doc.name) j["name"] = *doc.name;
    ordered_json cells = ordered_json::array();
    for (Cell c : doc.tile.cells()) cells.push_back({c.x, c.y});
    j["cells"] = cells;
    return j;
}

inline TileDocument tile_from_json(const ordered_json& j) {
    if (!j.is_object()) throw ParseError("tile document must be an object");
    TileDocument doc;
    if (j.contains("name")) {
        if (!j["name"].is_string()) throw ParseError("tile name must be a string");
        doc.name = j["name"].get<std::string>();
    }
    if (j.contains("grid") && j.contains("cells"))
        throw ParseError("tile document has both grid and cells");
    if (j.contains("grid")) {
        if (!j["grid"].is_array()) throw ParseError("grid must be an array of strings");
        std::vector<std::string> rows;
        for (const auto& row : j["grid"]) {
            if (!row.is_string()) throw ParseError("grid must be an array of strings");
            rows.push_back(row.get<std::string>());
        }
        doc.tile = tile_from_grid(rows);
    } else if (j.contains("cells")) {
        if (!j["cells"].is_array() || j["cells"].empty())
            throw ParseError("cells must be a nonempty array");
        std::vector<Cell> cells;
        for (const auto& pair : j["cells"]) {
            if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number_integer() ||
                !pair[1].is_number_integer())
                throw ParseError("each cell must be an [x, y] integer pair");
            cells.push_back({pair[0].get<i64>(), pair[1].get<i64>()});
        }
        doc.tile = canonicalize_tile(cells);
    } else {
        throw ParseError("tile document needs grid or cells");
    }
    return doc;
}

// --------------------------------------------------------- certificates

struct CertificateDocument {
    std::string tool_version = kToolVersion;
    std::string schedule = "alternate";
    TileDocument tile;
    Verdict verdict;

    friend bool operator==(const CertificateDocument& a, const CertificateDocument& b) = default;
};

inline ordered_json certificate_to_json(const CertificateDocument& doc) {
    ordered_json j;
    j["tool_version"] = doc.tool_version;
    j["schedule"] = doc.schedule;
    j["tile"] = tile_to_json(doc.tile);
    if (doc.verdict.tiles()) {
        const PeriodicTiling& pt = doc.verdict.tiling();
        j["verdict"] = "tiles";
        j["lattice"] = {{"p", pt.lattice.p}, {"q", pt.lattice.q}, {"r", pt.lattice.r}};
        ordered_json reps = ordered_json::array();
        for (Cell c : pt.reps) reps.push_back({c.x, c.y});
        j["reps"] = reps;
    } else if (doc.verdict.does_not_tile()) {
        const ObstructionCertificate& oc = doc.verdict.obstruction();
        j["verdict"] = "does_not_tile";
        j["radius"] = oc.radius;
        j["policy"] = oc.search_policy_version;
    } else {
        const Inconclusive& inc = doc.verdict.budget_spent();
        j["verdict"] = "inconclusive";
        j["budget_spent"] = {{"index_reached", inc.index_reached},
                             {"box_reached", inc.box_reached}};
    }
    return j;
}

inline std::string serialize_certificate(const CertificateDocument& doc) {
    return certificate_to_json(doc).dump(2) + "\n";
}

inline CertificateDocument certificate_from_json(const ordered_json& j) {
    if (!j.is_object()) throw ParseError("certificate must be an object");
    for (const char* key : {"tool_version", "schedule", "tile", "verdict"})
        if (!j.contains(key)) throw ParseError(std::string("certificate lacks ") + key);
    CertificateDocument doc;
    doc.tool_version = j["tool_version"].get<std::string>();
    doc.schedule = j["schedule"].get<std::string>();
    doc.tile = tile_from_json(j["tile"]);
    std::string verdict = j["verdict"].get<std::string>();
    if (verdict == "tiles") {
        if (!j.contains("lattice") || !j.contains("reps"))
            throw ParseError("tiles certificate lacks lattice/reps");
        const auto& lat = j["lattice"];
        Lattice l{lat.at("p").get<i64>(), lat.at("q").get<i64>(), lat.at("r").get<i64>()};
        if (l.p < 1 || l.r < 1 || l.q < 0 || l.q >= l.p)
            throw ParseError("lattice violates the HNF convention");
        std::vector<Cell> reps;
        for (const auto& pair : j["reps"]) {
            if (!pair.is_array() || pair.size() != 2)
                throw ParseError("each rep must be an [x, y] pair");
            reps.push_back({pair[0].get<i64>(), pair[1].get<i64>()});
        }
        doc.verdict = Verdict{PeriodicTiling{doc.tile.tile, l, std::move(reps)}};
    } else if (verdict == "does_not_tile") {
        if (!j.contains("radius") || !j.contains("policy"))
            throw ParseError("does_not_tile certificate lacks radius/policy");
        doc.verdict = Verdict{ObstructionCertificate{
            doc.tile.tile, j["radius"].get<i64>(), j["policy"].get<std::string>()}};
    } else if (verdict == "inconclusive") {
        Inconclusive inc;
        if (j.contains("budget_spent")) {
            inc.index_reached = j["budget_spent"].at("index_reached").get<i64>();
            inc.box_reached = j["budget_spent"].at("box_reached").get<i64>();
        }
        doc.verdict = Verdict{inc};
    } else {
        throw ParseError("unknown verdict: " + verdict);
    }
    return doc;
}

inline CertificateDocument parse_certificate(const std::string& text) {
    ordered_json j = ordered_json::parse(text, nullptr, false);
    if (j.is_discarded()) throw ParseError("certificate is not valid JSON");
    return certificate_from_json(j);
}

// -------------------------------------------------------- window tables

// A file-backed window oracle: rows list the x positions (inside [0,m)) of
// the set on consecutive rows starting at y0; rows repeat periodically in
// y so the table describes an infinite set.
struct WindowTableDocument {
    i64 m = 1;
    i64 y0 = 0;
    std::vector<std::vector<i64>> rows;
};

inline WindowTableDocument window_table_from_json(const ordered_json& j) {
    if (!j.is_object() || !j.contains("m") || !j.contains("rows"))
        throw ParseError("window table needs m and rows");
    WindowTableDocument doc;
    doc.m = j["m"].get<i64>();
    if (doc.m < 1) throw ParseError("window table period m must be >= 1");
    doc.y0 = j.value("y0", 0);
    if (!j["rows"].is_array() || j["rows"].empty())
        throw ParseError("window table rows must be a nonempty array");
    for (const auto& row : j["rows"]) {
        std::vector<i64> xs;
        for (const auto& x : row) {
            i64 v = x.get<i64>();
            if (v < 0 || v >= doc.m) throw ParseError("window table x out of [0, m)");
            xs.push_back(v);
        }
        std::sort(xs.begin(), xs.end());
        doc.rows.push_back(std::move(xs));
    }
    return doc;
}

inline WindowOracle table_oracle(const WindowTableDocument& doc) {
    i64 m = doc.m, y0 = doc.y0;
    i64 height = static_cast<i64>(doc.rows.size());
    auto rows = doc.rows;
    return oracle_from_membership(m, [m, y0, height, rows](Cell c) {
        const auto& xs = rows[static_cast<std::size_t>(floor_mod(c.y - y0, height))];
        return std::binary_search(xs.begin(), xs.end(), floor_mod(c.x, m));
    });
}

// ------------------------------------------------------------- render

// ASCII patch of a periodic tiling: cell (x, y) for x in [0, width) and
// y in [0, height), top row printed first, one letter per translate.
inline std::string render_patch(const PeriodicTiling& pt, i64 width, i64 height) {
    const char alphabet[] = "ABCDEFGHIJKLMNOPQRSTUVWXYZabcdefghijklmnopqrstuvwxyz0123456789";
    PeriodicSet complement{pt.lattice, pt.reps};
    std::vector<Cell> translate_order;
    auto label_of = [&](Cell t) {
        for (std::size_t i = 0; i < translate_order.size(); ++i)
            if (translate_order[i] == t) return alphabet[i % 62];
        translate_order.push_back(t);
        return alphabet[(translate_order.size() - 1) % 62];
    };
    std::string out;
    for (i64 y = height - 1; y >= 0; --y) {
        for (i64 x = 0; x < width; ++x) {
            Cell c{x, y};
            int found = 0;
            char label = '?';
            for (Cell fc : pt.tile.cells()) {
                Cell t = c - fc;
                if (complement.member(t)) {
                    ++found;
                    label = label_of(t);
                }
            }
            out += (found == 1) ? label : (found == 0 ? '!' : '*');
        }
        out += '\n';
    }
    return out;
}

}  // namespace tilez
