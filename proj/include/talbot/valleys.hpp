#pragma once

#include <cstdint>
#include <filesystem>
#include <vector>

#include "talbot/carpet.hpp"
#include "talbot/evolution.hpp"

namespace talbot {

/// One proven valley slice [0, 2 pi/q) x {2 pi a/q}, q a multiple of 4.
struct ValleySlice {
    RationalTime rt;
    double theta_end;  // 2 pi / q, open right endpoint
};

/// All proven slices with 4 | q <= q_max, sorted by time.
std::vector<ValleySlice> v0_slices(long long q_max);

enum class ZeroLabel {
    Proven,    // inside a known valley interval
    Candidate  // a numerical zero the conjecture says should be isolated
};

struct ZeroHit {
    double theta = 0.0;
    ZeroLabel label = ZeroLabel::Candidate;
};

/// Scan |S_{a/q}| on a half-cell-offset grid over [0, pi] (no sample lands
/// on a singular angle) and report points below rel_tol x the slice median.
/// The median, not the maximum, sets the scale: blow-up peaks make the
/// maximum grid-dependent. n_grid >= 256.
std::vector<ZeroHit> scan_zeros(const RationalTime& rt, int n_grid, double rel_tol = 1e-4);

struct ShadowMask {
    std::size_t nx = 0;
    std::size_t ny = 0;
    std::vector<std::uint8_t> cells;  // row-major, 1 = in shadow

    bool at(std::size_t iy, std::size_t ix) const { return cells[iy * nx + ix] != 0; }
};

/// Cells with value < fraction x the global maximum.
ShadowMask shadow_mask(const CarpetGrid& grid, double fraction);

/// Shadow cells render black on white. Row 0 is the largest y, as for grids.
void render_pgm(const ShadowMask& mask, const std::filesystem::path& path,
                bool north_up = false);

}  // namespace talbot
