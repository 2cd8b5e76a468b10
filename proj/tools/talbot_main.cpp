// Command-line front end: exact Gauss-sum arithmetic, wave-function slices,
// Talbot carpets, singularity atlases, convergents, valley scans, and
// reproduction presets for the standard figures.

#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <regex>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "talbot/carpet.hpp"
#include "talbot/diophantine.hpp"
#include "talbot/errors.hpp"
#include "talbot/evolution.hpp"
#include "talbot/gauss.hpp"
#include "talbot/legendre.hpp"
#include "talbot/singularities.hpp"
#include "talbot/valleys.hpp"

using nlohmann::json;

namespace {

constexpr double kPi = 3.141592653589793238462643383279;
constexpr double kTwoPi = 2.0 * kPi;

struct GridSpec {
    int nx = 300;
    int ny = 300;
};

GridSpec parse_grid(const std::string& s) {
    GridSpec g;
    if (std::sscanf(s.c_str(), "%dx%d", &g.nx, &g.ny) != 2 || g.nx < 1 || g.ny < 1)
        throw CLI::ValidationError("--grid", "expected WIDTHxHEIGHT, e.g. 1024x1024");
    return g;
}

// Accepts a plain decimal or the symbolic form 1/sqrt(N).
double parse_x(const std::string& s) {
    static const std::regex inv_sqrt(R"(^1/sqrt\((\d+)\)$)");
    std::smatch m;
    if (std::regex_match(s, m, inv_sqrt)) {
        const double n = std::stod(m[1].str());
        return 1.0 / std::sqrt(n);
    }
    std::size_t pos = 0;
    const double v = std::stod(s, &pos);
    if (pos != s.size()) throw CLI::ValidationError("--x", "cannot parse " + s);
    return v;
}

void commit_text(const std::filesystem::path& path, const std::string& payload) {
    const std::filesystem::path tmp = path.string() + ".tmp";
    {
        std::ofstream out(tmp);
        out << payload;
    }
    std::filesystem::rename(tmp, path);
}

std::string fmt17(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

// Slice output: theta, re, im, density = |Psi|^2 sin(theta).
void write_slice_csv(const std::filesystem::path& path,
                     const std::vector<double>& thetas,
                     const std::vector<std::complex<double>>& psi) {
    std::string payload = "theta,re,im,density\n";
    for (std::size_t i = 0; i < thetas.size(); ++i) {
        const double dens = std::norm(psi[i]) * std::sin(thetas[i]);
        payload += fmt17(thetas[i]) + "," + fmt17(psi[i].real()) + "," +
                   fmt17(psi[i].imag()) + "," + fmt17(dens) + "\n";
    }
    commit_text(path, payload);
}

std::vector<double> centered_thetas(int n) {
    std::vector<double> out(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) out[static_cast<std::size_t>(i)] = (i + 0.5) * kPi / n;
    return out;
}

std::vector<std::complex<double>> rational_slice(const talbot::RationalTime& rt,
                                                 double r,
                                                 const std::vector<double>& thetas) {
    std::vector<std::complex<double>> psi(thetas.size());
    for (std::size_t i = 0; i < thetas.size(); ++i)
        psi[i] = talbot::psi_rational(thetas[i], rt, r);
    return psi;
}

std::vector<std::complex<double>> series_slice(double t, double r, int terms,
                                               const std::vector<double>& thetas) {
    const talbot::WavePacketParams params =
        terms > 0 ? talbot::WavePacketParams(r, terms)
                  : talbot::WavePacketParams::auto_truncated(r);
    std::vector<std::complex<double>> psi(thetas.size());
    for (std::size_t i = 0; i < thetas.size(); ++i)
        psi[i] = talbot::psi_series(thetas[i], t, params);
    return psi;
}

json gauss_json(long long a, long long b, long long q) {
    const talbot::GaussTriple t(a, b, q);
    const std::complex<double> g = talbot::gauss_sum(t);
    return json{{"a", a},
                {"b", b},
                {"q", q},
                {"re", g.real()},
                {"im", g.imag()},
                {"modulus_sq", talbot::gauss_modulus_sq(t)},
                {"vanishes", talbot::gauss_vanishes(t)}};
}

json singularities_json(const talbot::RationalTime& rt) {
    json arr = json::array();
    for (const auto& rep : talbot::singular_points(rt)) {
        arr.push_back(
            {{"k", rep.k},
             {"theta", rep.theta},
             {"kind", rep.kind == talbot::SingularityKind::RightBlowupLeftFinite
                          ? "right_blowup_left_finite"
                          : "removable"},
             {"gauss_re", rep.gauss_value.real()},
             {"gauss_im", rep.gauss_value.imag()}});
    }
    return json{{"a", rt.a()}, {"q", rt.q()}, {"t", rt.t()}, {"points", arr}};
}

json approx_json(double x, int n, double r, double theta) {
    json arr = json::array();
    for (const auto& c : talbot::convergents(x, n)) {
        json entry{{"a", c.a}, {"q", c.q}, {"epsilon", c.epsilon}};
        entry["E"] = talbot::error_indicator(c, r, theta);
        arr.push_back(entry);
    }
    return json{{"x", x},
                {"r", r},
                {"theta", theta},
                {"convergents", arr},
                {"note", "E is an ordering heuristic with implied constants 1, "
                         "not a certified bound"}};
}

// ---------------------------------------------------------------------------
// reproduction presets

struct PresetResult {
    json info;
};

using PresetFn = PresetResult (*)(const std::filesystem::path&, int);

PresetResult preset_fig1(const std::filesystem::path& dir, int threads) {
    // lambda = 0.01, w = 0.1, 300 x 300; width is the Talbot length, three
    // grating periods vertically; rendered as amplitude (gamma 1/2).
    auto grid = talbot::optical_carpet(100, 0.1, 300, 300, 0.0, 200.0, 0.0, 3.0, threads);
    talbot::render_pgm(grid, dir / "fig1.pgm", 0.5);
    grid.meta.params["gamma"] = 0.5;
    talbot::write_meta_json(grid, dir / "fig1.json");
    return {json{{"outputs", {"fig1.pgm", "fig1.json"}}}};
}

PresetResult preset_fig3(const std::filesystem::path& dir, int threads) {
    auto grid = talbot::quantum_carpet(0.95, 1000, 1024, 1024, threads);
    talbot::render_pgm(grid, dir / "fig3.pgm", 1.0);
    grid.meta.params["gamma"] = 1.0;
    talbot::write_meta_json(grid, dir / "fig3.json");
    return {json{{"outputs", {"fig3.pgm", "fig3.json"}}}};
}

PresetResult slice_preset(const std::filesystem::path& dir, const std::string& name,
                          long long a, long long q, double r) {
    const int n = 2048;
    const talbot::RationalTime rt(a, q);
    const auto thetas = centered_thetas(n);
    write_slice_csv(dir / (name + ".csv"), thetas, rational_slice(rt, r, thetas));
    json info{{"kind", "slice"},   {"a", rt.a()},      {"q", rt.q()},
              {"t", rt.t()},       {"r", r},           {"n_theta", n},
              {"exact_time", true}};
    commit_text(dir / (name + ".json"), info.dump(2) + "\n");
    return {json{{"outputs", {name + ".csv", name + ".json"}}}};
}

PresetResult preset_fig4a(const std::filesystem::path& dir, int) {
    // irrational time t = 2 pi / sqrt(14), truncated series
    const int n = 2048;
    const double r = 0.95;
    const double t = kTwoPi / std::sqrt(14.0);
    const auto thetas = centered_thetas(n);
    write_slice_csv(dir / "fig4a.csv", thetas, series_slice(t, r, 0, thetas));
    json info{{"kind", "slice"}, {"t", t}, {"r", r}, {"n_theta", n},
              {"exact_time", false},
              {"terms", talbot::WavePacketParams::auto_truncated(r).terms}};
    commit_text(dir / "fig4a.json", info.dump(2) + "\n");
    return {json{{"outputs", {"fig4a.csv", "fig4a.json"}}}};
}

PresetResult preset_fig6(const std::filesystem::path& dir, int threads,
                         const std::string& name, double fraction) {
    auto grid = talbot::quantum_carpet(0.95, 1000, 1024, 1024, threads);
    auto mask = talbot::shadow_mask(grid, fraction);
    talbot::render_pgm(mask, dir / (name + ".pgm"));
    json info{{"kind", "shadow_mask"}, {"fraction", fraction},
              {"carpet", {{"r", 0.95}, {"terms", 1000}, {"n_theta", 1024}, {"n_t", 1024}}}};
    commit_text(dir / (name + ".json"), info.dump(2) + "\n");
    return {json{{"outputs", {name + ".pgm", name + ".json"}}}};
}

const std::map<std::string, std::function<PresetResult(const std::filesystem::path&, int)>>&
presets() {
    static const std::map<std::string,
                          std::function<PresetResult(const std::filesystem::path&, int)>>
        table = {
            {"fig1", preset_fig1},
            {"fig3", preset_fig3},
            {"fig4a", [](const auto& d, int t) { return preset_fig4a(d, t); }},
            {"fig4b", [](const auto& d, int) { return slice_preset(d, "fig4b", 4, 15, 0.95); }},
            {"fig5a", [](const auto& d, int) { return slice_preset(d, "fig5a", 27, 101, 0.95); }},
            {"fig5b", [](const auto& d, int) { return slice_preset(d, "fig5b", 31, 116, 0.95); }},
            {"fig6a", [](const auto& d, int t) { return preset_fig6(d, t, "fig6a", 0.05); }},
            {"fig6b", [](const auto& d, int t) { return preset_fig6(d, t, "fig6b", 0.025); }},
            {"fig7a", [](const auto& d, int) { return slice_preset(d, "fig7a", 2, 7, 0.9); }},
            {"fig7b", [](const auto& d, int) { return slice_preset(d, "fig7b", 2, 7, 0.95); }},
            {"fig7c", [](const auto& d, int) { return slice_preset(d, "fig7c", 7, 15, 0.97); }},
            {"fig8a", [](const auto& d, int) { return slice_preset(d, "fig8a", 1, 12, 0.97); }},
            {"fig8b", [](const auto& d, int) { return slice_preset(d, "fig8b", 3, 14, 0.97); }},
            {"fig8c", [](const auto& d, int) { return slice_preset(d, "fig8c", 3, 14, 0.8); }},
        };
    return table;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Quantum and optical Talbot carpets on the sphere"};
    app.require_subcommand(1);
    int threads = 0;
    app.add_option("--threads", threads, "worker threads (0 = all cores)");

    // gauss
    auto* cmd_gauss = app.add_subcommand("gauss", "evaluate a quadratic Gauss sum");
    long long ga = 1, gb = 0, gq = 1;
    cmd_gauss->add_option("-a", ga, "quadratic coefficient")->required();
    cmd_gauss->add_option("-b", gb, "linear coefficient")->required();
    cmd_gauss->add_option("-q", gq, "modulus")->required();
    cmd_gauss->add_flag("--json", "JSON output (always on for this subcommand)");

    // slice
    auto* cmd_slice = app.add_subcommand("slice", "wave-function profile at fixed time");
    long long sa = 0, sq = 0;
    double st = 0.0, sr = 0.95;
    int sL = 0, sn = 2048;
    bool st_set = false;
    std::string slice_out = "slice.csv";
    cmd_slice->add_option("--a", sa, "numerator of t/(2 pi)");
    cmd_slice->add_option("--q", sq, "denominator of t/(2 pi)");
    cmd_slice->add_option("--t", st, "time (series evaluation)")->each([&](const std::string&) {
        st_set = true;
    });
    cmd_slice->add_option("--r", sr, "concentration parameter in (0,1)");
    cmd_slice->add_option("--L", sL, "series truncation (0 = automatic)");
    cmd_slice->add_option("--n", sn, "theta samples");
    cmd_slice->add_option("--out", slice_out, "output CSV path");
    bool slice_json = false;
    cmd_slice->add_flag("--json", slice_json, "echo summary JSON");

    // carpet
    auto* cmd_carpet = app.add_subcommand("carpet", "quantum Talbot carpet");
    double cr = 0.95;
    int cL = 1000;
    std::string cgrid = "1024x1024", carpet_out = "carpet.pgm", carpet_csv;
    double cgamma = 1.0;
    cmd_carpet->add_option("--r", cr, "concentration parameter");
    cmd_carpet->add_option("--L", cL, "series truncation");
    cmd_carpet->add_option("--grid", cgrid, "grid size, e.g. 1024x1024");
    cmd_carpet->add_option("--out", carpet_out, "output PGM path");
    cmd_carpet->add_option("--csv", carpet_csv, "also write the grid as CSV");
    cmd_carpet->add_option("--gamma", cgamma, "display gamma");
    bool carpet_json = false;
    cmd_carpet->add_flag("--json", carpet_json, "echo summary JSON");

    // optical
    auto* cmd_optical = app.add_subcommand("optical", "near-field grating carpet");
    long long il = 100;
    double ow = 0.1, ox0 = 0.0, ox1 = -1.0, oy0 = 0.0, oy1 = 1.0, ogamma = 0.5;
    std::string ogrid = "300x300", optical_out = "optical.pgm";
    cmd_optical->add_option("--inv-lambda", il, "reciprocal wavelength");
    cmd_optical->add_option("--w", ow, "slit width in (0,1)");
    cmd_optical->add_option("--grid", ogrid, "grid size");
    cmd_optical->add_option("--x0", ox0, "x range start");
    cmd_optical->add_option("--x1", ox1, "x range end (default: Talbot length)");
    cmd_optical->add_option("--y0", oy0, "y range start");
    cmd_optical->add_option("--y1", oy1, "y range end");
    cmd_optical->add_option("--gamma", ogamma, "display gamma (0.5 plots amplitude)");
    cmd_optical->add_option("--out", optical_out, "output PGM path");
    bool optical_json = false;
    cmd_optical->add_flag("--json", optical_json, "echo summary JSON");

    // singularities
    auto* cmd_sing = app.add_subcommand("singularities", "classify revival angles");
    long long na = 0, nq = 1;
    cmd_sing->add_option("--a", na, "numerator")->required();
    cmd_sing->add_option("--q", nq, "denominator")->required();
    cmd_sing->add_flag("--json", "JSON output (always on for this subcommand)");

    // approx
    auto* cmd_approx = app.add_subcommand("approx", "continued-fraction convergents");
    std::string ax = "1/sqrt(14)";
    int an = 6;
    double ar = 0.95, atheta = 0.5;
    cmd_approx->add_option("--x", ax, "target in (0,1); decimals or 1/sqrt(N)")->required();
    cmd_approx->add_option("-n", an, "number of convergents");
    cmd_approx->add_option("--r", ar, "r for the error indicator");
    cmd_approx->add_option("--theta", atheta, "theta for the error indicator");

    // valleys
    auto* cmd_valleys = app.add_subcommand("valleys", "proven slices and zero scan");
    long long vqmax = 16, va = 0, vq = 0;
    int vgrid = 1024;
    double vtol = 1e-4;
    cmd_valleys->add_option("--q-max", vqmax, "enumerate proven slices up to q");
    cmd_valleys->add_option("--a", va, "scan slice numerator");
    cmd_valleys->add_option("--q", vq, "scan slice denominator");
    cmd_valleys->add_option("--n-grid", vgrid, "scan resolution");
    cmd_valleys->add_option("--rel-tol", vtol, "zero threshold relative to slice median");

    // mask
    auto* cmd_mask = app.add_subcommand("mask", "shadow mask of a saved carpet");
    std::string mask_in, mask_out = "mask.pgm";
    double mfrac = 0.05;
    cmd_mask->add_option("--in", mask_in, "carpet CSV")->required();
    cmd_mask->add_option("--fraction", mfrac, "threshold as a fraction of the maximum");
    cmd_mask->add_option("--out", mask_out, "output PGM path");

    // reproduce
    auto* cmd_repro = app.add_subcommand("reproduce", "rebuild a standard figure");
    std::string preset_name;
    std::string out_dir = ".";
    cmd_repro->add_option("preset", preset_name, "figure name, e.g. fig3")->required();
    cmd_repro->add_option("--out-dir", out_dir, "output directory");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (app.got_subcommand(cmd_gauss)) {
            std::cout << gauss_json(ga, gb, gq).dump(2) << "\n";
        } else if (app.got_subcommand(cmd_slice)) {
            const auto thetas = centered_thetas(sn);
            std::vector<std::complex<double>> psi;
            json info{{"r", sr}, {"n_theta", sn}, {"out", slice_out}};
            if (sq > 0) {
                talbot::RationalTime rt(sa, sq);
                psi = rational_slice(rt, sr, thetas);
                info["a"] = rt.a();
                info["q"] = rt.q();
                info["t"] = rt.t();
                info["exact_time"] = true;
            } else if (st_set) {
                psi = series_slice(st, sr, sL, thetas);
                info["t"] = st;
                info["exact_time"] = false;
            } else {
                std::cerr << "slice: provide --a/--q or --t\n";
                return 2;
            }
            write_slice_csv(slice_out, thetas, psi);
            if (slice_json) std::cout << info.dump(2) << "\n";
        } else if (app.got_subcommand(cmd_carpet)) {
            const GridSpec g = parse_grid(cgrid);
            auto grid = talbot::quantum_carpet(cr, cL, g.ny, g.nx, threads);
            talbot::render_pgm(grid, carpet_out, cgamma);
            if (!carpet_csv.empty()) talbot::write_csv(grid, carpet_csv);
            grid.meta.params["gamma"] = cgamma;
            talbot::write_meta_json(grid, std::filesystem::path(carpet_out).replace_extension("json"));
            if (carpet_json)
                std::cout << json{{"out", carpet_out}, {"max", grid.max_value()}}.dump(2)
                          << "\n";
        } else if (app.got_subcommand(cmd_optical)) {
            const GridSpec g = parse_grid(ogrid);
            if (ox1 < 0.0) ox1 = 2.0 * static_cast<double>(il);
            auto grid = talbot::optical_carpet(il, ow, g.nx, g.ny, ox0, ox1, oy0, oy1, threads);
            talbot::render_pgm(grid, optical_out, ogamma);
            grid.meta.params["gamma"] = ogamma;
            talbot::write_meta_json(grid, std::filesystem::path(optical_out).replace_extension("json"));
            if (optical_json)
                std::cout << json{{"out", optical_out}, {"max", grid.max_value()}}.dump(2)
                          << "\n";
        } else if (app.got_subcommand(cmd_sing)) {
            std::cout << singularities_json(talbot::RationalTime(na, nq)).dump(2) << "\n";
        } else if (app.got_subcommand(cmd_approx)) {
            std::cout << approx_json(parse_x(ax), an, ar, atheta).dump(2) << "\n";
        } else if (app.got_subcommand(cmd_valleys)) {
            json out;
            json slices = json::array();
            for (const auto& s : talbot::v0_slices(vqmax))
                slices.push_back({{"a", s.rt.a()},
                                  {"q", s.rt.q()},
                                  {"t", s.rt.t()},
                                  {"theta_end", s.theta_end}});
            out["slices"] = slices;
            if (vq > 0) {
                talbot::RationalTime rt(va, vq);
                json zeros = json::array();
                for (const auto& z : talbot::scan_zeros(rt, vgrid, vtol))
                    zeros.push_back({{"theta", z.theta},
                                     {"label", z.label == talbot::ZeroLabel::Proven
                                                   ? "PROVEN"
                                                   : "CANDIDATE"}});
                out["zeros"] = zeros;
                out["scan"] = {{"a", rt.a()}, {"q", rt.q()}, {"n_grid", vgrid},
                               {"rel_tol", vtol}};
            }
            std::cout << out.dump(2) << "\n";
        } else if (app.got_subcommand(cmd_mask)) {
            const auto grid = talbot::read_csv_grid(mask_in);
            const auto mask = talbot::shadow_mask(grid, mfrac);
            talbot::render_pgm(mask, mask_out);
        } else if (app.got_subcommand(cmd_repro)) {
            const auto& table = presets();
            auto it = table.find(preset_name);
            if (it == table.end()) {
                std::cerr << "unknown preset '" << preset_name << "'; valid presets:";
                for (const auto& [name, fn] : table) std::cerr << " " << name;
                std::cerr << "\n";
                return 2;
            }
            std::filesystem::create_directories(out_dir);
            const auto start = std::chrono::steady_clock::now();
            PresetResult res = it->second(out_dir, threads);
            const double secs =
                std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
                    .count();
            res.info["preset"] = preset_name;
            res.info["seconds"] = secs;
            std::cout << res.info.dump(2) << "\n";
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
