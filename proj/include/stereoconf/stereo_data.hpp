#pragma once

#include <cstdint>
#include <vector>

#include "stereoconf/tensor.hpp"

namespace stereoconf {

/// H x W x 3 intensities in [0, 1].
using Image = Tensor<float>;
/// H x W real disparities.
using DisparityMap = Tensor<float>;

struct ValidityMask {
    int h = 0, w = 0;
    std::vector<std::uint8_t> data;  // 0 or 1

    static ValidityMask all(int h, int w, bool v = true) {
        ValidityMask m;
        m.h = h;
        m.w = w;
        m.data.assign(static_cast<std::size_t>(h) * w, v ? 1 : 0);
        return m;
    }
    bool at(int y, int x) const { return data[static_cast<std::size_t>(y) * w + x] != 0; }
    void set(int y, int x, bool v) { data[static_cast<std::size_t>(y) * w + x] = v ? 1 : 0; }
    std::size_t count_true() const {
        std::size_t n = 0;
        for (auto v : data) n += v;
        return n;
    }
};

struct CostVolume {
    enum class Kind { raw, refined };
    Kind kind = Kind::raw;
    Tensor<float> data;  // H x W x D

    int height() const { return data.dim(0); }
    int width() const { return data.dim(1); }
    int candidates() const { return data.dim(2); }
};

struct ConfidenceMap {
    enum class Kind { estimated, ground_truth };
    Kind kind = Kind::estimated;
    Tensor<float> data;  // H x W
};

struct StereoSample {
    Image left;               // H x W x 3
    Image right;              // H x W x 3
    DisparityMap gt_disparity;  // H x W, values in [0, d_max-1] where valid
    ValidityMask gt_valid;
    int d_max = 0;

    int height() const { return left.dim(0); }
    int width() const { return left.dim(1); }
};

/// Census transform of a single-channel image. Each code has window^2-1 bits;
/// neighbors are visited in row-major order (center excluded) and contribute
/// a 1 bit iff strictly darker than the center. Borders use replicate padding.
/// The first visited neighbor lands in the most significant bit of the code.
Tensor<std::uint64_t> census_transform(const Tensor<float>& image, int window);

struct CostParams {
    int census_window = 5;  // 5x5 local window
    float sgm_p1 = 0.008f;
    float sgm_p2 = 0.126f;
    int sgm_paths = 4;
};

/// Per-pixel census Hamming cost against the right image sampled at column
/// x - d (clamped at the left border), normalized by window^2-1 to [0, 1].
/// Color inputs use the per-channel mean census cost.
CostVolume compute_raw_cost(const StereoSample& sample, int window);

/// Semi-global aggregation over 1, 2, or 4 axis-aligned paths (left-to-right,
/// plus right-to-left, plus both vertical directions), averaged.
CostVolume sgm_aggregate(const CostVolume& cost, float p1, float p2, int paths);

/// Census + SGM raw cost in one call.
CostVolume census_sgm_cost(const StereoSample& sample, const CostParams& p);

/// Q* = 1 where |d_est - d_gt| < rho (strict) on valid pixels, 0 otherwise.
/// Invalid pixels carry value 0 and are excluded from losses and metrics via
/// the mask, which callers must thread through.
ConfidenceMap ground_truth_confidence(const DisparityMap& d_est, const DisparityMap& d_gt,
                                      const ValidityMask& valid, float rho);

/// out(x, y) = bilinear sample of image at (x - disparity(x, y), y), with the
/// horizontal coordinate clamped to [0, W-1]. Non-differentiable entry point;
/// the tape op in nn_ops.hpp shares the same sampling rule.
Image bilinear_warp(const Image& image, const DisparityMap& disparity);

/// Layered fronto-parallel synthetic scene: textured background plus
/// n_layers textured rectangles at integer disparities, z-buffered
/// (larger disparity wins). gt_valid is false where the left pixel is
/// occluded in or falls outside the right view. Deterministic per seed.
StereoSample synth_scene(std::uint64_t seed, int h, int w, int d_max, int n_layers);

/// Per-pixel argmin over disparity candidates, ties toward smaller d.
DisparityMap wta_disparity(const CostVolume& cost);

}  // namespace stereoconf
