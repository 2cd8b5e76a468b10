#pragma once

#include <complex>
#include <cstddef>
#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include "talbot/evolution.hpp"

namespace talbot {

struct CarpetMeta {
    std::string kind;  // "quantum" | "optical" | "loaded"
    std::map<std::string, double> params;
};

/// Rectangular sampling of a nonnegative density over x (t or distance)
/// and y (theta or slit coordinate). values is row-major: values[iy*nx+ix].
struct CarpetGrid {
    std::vector<double> x_axis;
    std::vector<double> y_axis;
    std::vector<double> values;
    CarpetMeta meta;

    std::size_t nx() const { return x_axis.size(); }
    std::size_t ny() const { return y_axis.size(); }
    double at(std::size_t iy, std::size_t ix) const { return values[iy * nx() + ix]; }
    double max_value() const;
};

struct Curve {
    std::vector<double> theta;
    std::vector<double> density;
};

/// sqrt(|Psi(theta,t)|^2 sin theta) over theta, t in [0,pi] x [0,pi],
/// cell-centered so no sample lands on theta = 0, pi or on a singular
/// angle. Summation order over l is fixed, so identical parameters give
/// bit-identical grids for any thread count. Throws std::length_error when
/// n_theta*n_t*terms exceeds the evaluation budget.
CarpetGrid quantum_carpet(double r, int terms, int n_theta, int n_t, int threads = 0);

/// Time slice |Psi(theta, 2 pi a/q)|^2 sin theta through psi_rational
/// (exact in time). Cell-centered theta sampling.
Curve slice_profile(const RationalTime& rt, double r, int n_theta);

/// Near-field grating intensity
///   |sum_{|n| <= 1/lambda} sin(n pi w)/(n pi) e(x sqrt(lambda^-2 - n^2) + n y)|^2
/// (the n = 0 amplitude is the sinc limit w). Axes sample the given ranges
/// inclusive of both endpoints.
CarpetGrid optical_carpet(long long inv_lambda, double slit_width, int n_x, int n_y,
                          double x0, double x1, double y0, double y1, int threads = 0);

/// Truncated paraxial field (1/d) sum_{|n| <= n_terms}
/// e((x/(2 lambda)) (d n / lambda)^2) e(n y / d); exactly d-periodic in y.
std::complex<double> paraxial_field(double x, double y, long long inv_lambda,
                                    double spacing, int n_terms);

/// Binary PGM (P5, maxval 255); v |-> round(255 (v/v_max)^gamma). Row 0 is
/// the largest y (set north_up to flip). Written atomically.
void render_pgm(const CarpetGrid& grid, const std::filesystem::path& path,
                double gamma = 1.0, bool north_up = false);

/// Headered CSV with axis values in the first row and column, 17
/// significant digits (doubles round-trip bit-exactly).
void write_csv(const CarpetGrid& grid, const std::filesystem::path& path);
void write_csv(const Curve& curve, const std::filesystem::path& path);
CarpetGrid read_csv_grid(const std::filesystem::path& path);
Curve read_csv_curve(const std::filesystem::path& path);

/// JSON sidecar: {kind, params, min, max, axes}.
void write_meta_json(const CarpetGrid& grid, const std::filesystem::path& path);

}  // namespace talbot
