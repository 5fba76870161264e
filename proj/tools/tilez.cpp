// tilez: decides whether a finite tile admits a translational tiling of
// the integer plane, emits machine-checkable certificates either way, and
// periodizes 1-periodic tilings described by window oracles.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "tilez/decide.hpp"
#include "tilez/io.hpp"
#include "tilez/line.hpp"
#include "tilez/oracle.hpp"
#include "tilez/polyomino.hpp"

namespace {

constexpr int kExitTiles = 0;
constexpr int kExitDoesNotTile = 1;
constexpr int kExitInconclusive = 2;
constexpr int kExitOracleFailure = 3;
constexpr int kExitUsage = 64;

struct TileArgs {
    std::string path;
    std::vector<std::string> grid;
    std::string cells;
};

void add_tile_options(CLI::App* cmd, TileArgs& args) {
    cmd->add_option("tile", args.path, "path to a tile document (JSON)");
    cmd->add_option("--grid", args.grid, "inline grid row of '#' and '.' (repeatable)");
    cmd->add_option("--cells", args.cells, "inline cells as 'x,y;x,y;...'");
}

tilez::TileDocument load_tile(const TileArgs& args) {
    int sources = (!args.path.empty()) + (!args.grid.empty()) + (!args.cells.empty());
    if (sources != 1)
        throw tilez::ParseError("give exactly one of: tile path, --grid, --cells");
    if (!args.grid.empty())
        return tilez::TileDocument{std::nullopt, tilez::tile_from_grid(args.grid)};
    if (!args.cells.empty()) {
        std::vector<tilez::Cell> cells;
        std::stringstream ss(args.cells);
        std::string item;
        while (std::getline(ss, item, ';')) {
            tilez::i64 x, y;
            char comma;
            std::stringstream cs(item);
            if (!(cs >> x >> comma >> y) || comma != ',')
                throw tilez::ParseError("cells must look like 'x,y;x,y'");
            cells.push_back({x, y});
        }
        if (cells.empty()) throw tilez::ParseError("no cells given");
        return tilez::TileDocument{std::nullopt, tilez::canonicalize_tile(cells)};
    }
    std::ifstream in(args.path);
    if (!in) throw tilez::ParseError("cannot open " + args.path);
    tilez::ordered_json j = tilez::ordered_json::parse(in, nullptr, false);
    if (j.is_discarded()) throw tilez::ParseError(args.path + " is not valid JSON");
    return tilez::tile_from_json(j);
}

std::vector<tilez::i64> parse_offsets(const std::string& text) {
    std::vector<tilez::i64> offsets;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) offsets.push_back(std::stoll(item));
    if (offsets.empty()) throw tilez::ParseError("no offsets given");
    return offsets;
}

int resolve_threads(int flag_value) {
    if (flag_value > 0) return flag_value;
    if (const char* env = std::getenv("TILEZ_THREADS")) {
        int v = std::atoi(env);
        if (v > 0) return v;
    }
    return 1;
}

void emit_certificate(const tilez::CertificateDocument& doc, const std::string& path) {
    std::string text = tilez::serialize_certificate(doc);
    std::cout << text;
    if (!path.empty() && !doc.verdict.inconclusive()) {
        std::ofstream out(path);
        out << text;
    }
}

int run_decide(const TileArgs& tile_args, tilez::i64 max_index, tilez::i64 max_box,
               const std::string& schedule_text, const std::string& emit_path, int threads) {
    auto schedule = tilez::parse_schedule(schedule_text);
    if (!schedule) {
        std::cerr << "error: bad schedule '" << schedule_text << "' (use 'alternate' or 'A:B')\n";
        return kExitUsage;
    }
    tilez::TileDocument doc = load_tile(tile_args);
    tilez::Budget budget{max_index, max_box, *schedule, resolve_threads(threads)};
    tilez::Verdict verdict = tilez::decide(doc.tile, budget);
    tilez::CertificateDocument cert{tilez::kToolVersion, schedule->text, doc, verdict};
    emit_certificate(cert, emit_path);
    if (verdict.tiles()) return kExitTiles;
    if (verdict.does_not_tile()) return kExitDoesNotTile;
    return kExitInconclusive;
}

int run_verify(const std::string& cert_path) {
    std::ifstream in(cert_path);
    if (!in) {
        std::cerr << "error: cannot open " << cert_path << "\n";
        return kExitUsage;
    }
    std::stringstream buffer;
    buffer << in.rdbuf();
    tilez::CertificateDocument doc = tilez::parse_certificate(buffer.str());
    if (doc.verdict.inconclusive()) {
        std::cerr << "error: inconclusive certificates carry nothing to verify\n";
        return kExitUsage;
    }
    bool ok = tilez::verify(doc.tile.tile, doc.verdict);
    std::cout << (ok ? "valid" : "INVALID") << "\n";
    return ok ? 0 : 1;
}

int run_decide_line(const std::string& offsets_text) {
    tilez::LineTile f = tilez::canonicalize_line_tile(parse_offsets(offsets_text));
    auto tiling = tilez::decide_line(f);
    tilez::ordered_json j;
    j["offsets"] = f.offsets;
    if (tiling) {
        j["verdict"] = "tiles";
        j["period"] = tiling->period;
        j["starts"] = tiling->starts;
    } else {
        j["verdict"] = "does_not_tile";
    }
    std::cout << j.dump(2) << "\n";
    return tiling ? kExitTiles : kExitDoesNotTile;
}

tilez::WindowOracle make_oracle(const std::string& spec, tilez::i64 bar_length) {
    if (spec == "brick") return tilez::brick_oracle(bar_length);
    const std::string prefix = "random-rows:";
    if (spec.rfind(prefix, 0) == 0) {
        std::uint64_t seed = std::stoull(spec.substr(prefix.size()));
        return tilez::random_rows_oracle(bar_length, seed);
    }
    std::ifstream in(spec);
    if (!in) throw tilez::ParseError("cannot open oracle file " + spec);
    tilez::ordered_json j = tilez::ordered_json::parse(in, nullptr, false);
    if (j.is_discarded()) throw tilez::ParseError(spec + " is not valid JSON");
    return tilez::table_oracle(tilez::window_table_from_json(j));
}

int run_periodize(const TileArgs& tile_args, const std::string& oracle_spec,
                  const std::string& h_text, const std::string& emit_path) {
    tilez::TileDocument doc = load_tile(tile_args);
    tilez::i64 hx, hy;
    char comma;
    std::stringstream hs(h_text);
    if (!(hs >> hx >> comma >> hy) || comma != ',')
        throw tilez::ParseError("--h must look like 'mx,my'");
    tilez::Cell h{hx, hy};

    // built-in oracles describe horizontal bars of length m; m comes from
    // the normalized invariance vector
    auto [t, m] = tilez::gl2_normalize(h);
    tilez::WindowOracle oracle = make_oracle(oracle_spec, m);
    tilez::membership_fn contains = [oracle, t](tilez::Cell v) {
        tilez::Cell w = t.apply(v);
        auto row = oracle.query(w.y, 1);
        tilez::Cell target{tilez::floor_mod(w.x, oracle.m), w.y};
        for (tilez::Cell c : row)
            if (c == target) return true;
        return false;
    };

    try {
        tilez::PeriodicSet out =
            tilez::periodize_general(doc.tile, h, contains, tilez::whole_plane());
        tilez::PeriodicTiling pt{doc.tile, out.lattice, out.reps};
        tilez::CertificateDocument cert{tilez::kToolVersion, "periodize", doc,
                                        tilez::Verdict{pt}};
        emit_certificate(cert, emit_path);
        return kExitTiles;
    } catch (const tilez::error& e) {
        if (e.code() == tilez::errc::promise_violated ||
            e.code() == tilez::errc::oracle_inconsistent) {
            std::cerr << "error: " << e.what() << "\n";
            return kExitOracleFailure;
        }
        throw;
    }
}

int run_render(const std::string& cert_path, tilez::i64 width, tilez::i64 height) {
    std::ifstream in(cert_path);
    if (!in) {
        std::cerr << "error: cannot open " << cert_path << "\n";
        return kExitUsage;
    }
    std::stringstream buffer;
    buffer << in.rdbuf();
    tilez::CertificateDocument doc = tilez::parse_certificate(buffer.str());
    if (!doc.verdict.tiles()) {
        std::cerr << "error: only 'tiles' certificates can be rendered\n";
        return kExitUsage;
    }
    std::cout << tilez::render_patch(doc.verdict.tiling(), width, height);
    return 0;
}

int run_corpus(int max_cells) {
    auto tiles = tilez::enumerate_fixed_polyominoes(max_cells);
    for (std::size_t i = 0; i < tiles.size(); ++i) {
        tilez::TileDocument doc{"poly" + std::to_string(tiles[i].size()) + "_" +
                                    std::to_string(i),
                                tiles[i]};
        std::cout << tilez::tile_to_json(doc).dump() << "\n";
    }
    return 0;
}

int run_oracle(const std::string& kind, const TileArgs& tile_args, const std::string& lattice_text,
               tilez::i64 box_n, const std::string& offsets_text, tilez::i64 horizon) {
    tilez::ordered_json j;
    if (kind == "torus") {
        tilez::TileDocument doc = load_tile(tile_args);
        tilez::i64 p, q, r;
        char c1, c2;
        std::stringstream ls(lattice_text);
        if (!(ls >> p >> c1 >> q >> c2 >> r) || c1 != ',' || c2 != ',')
            throw tilez::ParseError("--lattice must look like 'p,q,r'");
        auto s = tilez::oracle::brute_torus(doc.tile, tilez::Lattice{p, q, r});
        j["subject"] = "brute_torus";
        if (s) {
            tilez::ordered_json reps = tilez::ordered_json::array();
            for (tilez::Cell c : *s) reps.push_back({c.x, c.y});
            j["answer"] = reps;
        } else {
            j["answer"] = nullptr;
        }
    } else if (kind == "box") {
        tilez::TileDocument doc = load_tile(tile_args);
        j["subject"] = "brute_box";
        j["n"] = box_n;
        j["answer"] = tilez::oracle::brute_box(doc.tile, box_n);
    } else if (kind == "line") {
        auto f = tilez::canonicalize_line_tile(parse_offsets(offsets_text));
        tilez::i64 h = horizon > 0 ? horizon : 2 * (tilez::i64{1} << f.diameter());
        j["subject"] = "brute_line";
        j["horizon"] = h;
        j["answer"] =
            tilez::oracle::brute_line(f.offsets, h) == tilez::oracle::LineVerdict::tiles
                ? "tiles"
                : "does_not_tile";
    } else {
        throw tilez::ParseError("oracle kind must be torus, box, or line");
    }
    std::cout << j.dump(2) << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"decision engine for translational tilings of the integer plane"};
    app.require_subcommand(1);

    // decide
    auto* decide_cmd = app.add_subcommand("decide", "decide whether the tile tiles the plane");
    TileArgs decide_tile;
    add_tile_options(decide_cmd, decide_tile);
    tilez::i64 max_index = 120, max_box = 8;
    std::string schedule = "alternate", emit_path;
    int threads = 0;
    std::uint64_t seed = 0;
    decide_cmd->add_option("--max-index", max_index, "largest lattice index to try");
    decide_cmd->add_option("--max-box", max_box, "largest box radius to try");
    decide_cmd->add_option("--schedule", schedule, "'alternate' or 'A:B' step ratio");
    decide_cmd->add_option("--emit-cert", emit_path, "write the certificate here");
    decide_cmd->add_option("--seed", seed, "seed for randomized test oracles (unused by decide)");
    decide_cmd->add_option("--threads", threads, "worker threads (default: TILEZ_THREADS or 1)");

    // verify
    auto* verify_cmd = app.add_subcommand("verify", "re-check a certificate from scratch");
    std::string verify_path;
    verify_cmd->add_option("cert", verify_path, "certificate path")->required();

    // decide-line
    auto* line_cmd = app.add_subcommand("decide-line", "decide a 1-D tile");
    std::string offsets_text;
    line_cmd->add_option("--offsets", offsets_text, "comma-separated offsets, e.g. 0,2")
        ->required();

    // periodize
    auto* per_cmd = app.add_subcommand("periodize", "periodize a 1-periodic tiling");
    TileArgs per_tile;
    add_tile_options(per_cmd, per_tile);
    std::string oracle_spec, h_text, per_emit;
    per_cmd->add_option("--oracle", oracle_spec, "brick | random-rows:SEED | window-table file")
        ->required();
    per_cmd->add_option("--h", h_text, "invariance vector 'mx,my'")->required();
    per_cmd->add_option("--emit-cert", per_emit, "write the certificate here");

    // render
    auto* render_cmd = app.add_subcommand("render", "draw a patch of a tiling certificate");
    std::string render_path;
    tilez::i64 width = 8, height = 8;
    render_cmd->add_option("cert", render_path, "certificate path")->required();
    render_cmd->add_option("--width", width, "patch width");
    render_cmd->add_option("--height", height, "patch height");

    // corpus
    auto* corpus_cmd = app.add_subcommand("corpus", "enumerate fixed polyominoes");
    int max_cells = 5;
    corpus_cmd->add_option("--max-cells", max_cells, "largest tile size");

    // oracle (hidden): regenerate minted constants
    auto* oracle_cmd = app.add_subcommand("oracle", "run a brute-force oracle");
    oracle_cmd->group("");
    std::string oracle_kind, oracle_lattice;
    TileArgs oracle_tile;
    tilez::i64 oracle_n = 0, oracle_horizon = 0;
    std::string oracle_offsets;
    oracle_cmd->add_option("kind", oracle_kind, "torus | box | line")->required();
    add_tile_options(oracle_cmd, oracle_tile);
    oracle_cmd->add_option("--lattice", oracle_lattice, "lattice 'p,q,r' (torus)");
    oracle_cmd->add_option("--n", oracle_n, "box radius (box)");
    oracle_cmd->add_option("--offsets", oracle_offsets, "1-D offsets (line)");
    oracle_cmd->add_option("--horizon", oracle_horizon, "1-D horizon (line)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    try {
        if (decide_cmd->parsed())
            return run_decide(decide_tile, max_index, max_box, schedule, emit_path, threads);
        if (verify_cmd->parsed()) return run_verify(verify_path);
        if (line_cmd->parsed()) return run_decide_line(offsets_text);
        if (per_cmd->parsed()) return run_periodize(per_tile, oracle_spec, h_text, per_emit);
        if (render_cmd->parsed()) return run_render(render_path, width, height);
        if (corpus_cmd->parsed()) return run_corpus(max_cells);
        if (oracle_cmd->parsed())
            return run_oracle(oracle_kind, oracle_tile, oracle_lattice, oracle_n, oracle_offsets,
                              oracle_horizon);
    } catch (const tilez::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const tilez::error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
