#pragma once

#include <utility>
#include <vector>

#include "flowdbn/image.hpp"

namespace flowdbn {

enum class ColorMode { kRgb, kYcbcr };

// Full-range BT.601 conversion, chroma centered at 0.5.
Image rgb_to_ycbcr(const Image& rgb);

// Inverse conversion; output clamped to [0,1].
Image ycbcr_to_rgb(const Image& ycbcr);

// Extracts the Y plane of an RGB image as a 1-channel image.
Image luma(const Image& rgb);

// Combines a predicted Y channel with the chroma of the blurry input:
// ycbcr_to_rgb(concat(y_pred, CbCr(rgb_to_ycbcr(blurry_rgb)))).
Image reconstruct(const Image& y_pred, const Image& blurry_rgb);

struct OracleBounds {
  double input_psnr = 0.0;    // mean PSNR(blurry, sharp)
  double y_oracle_psnr = 0.0; // mean PSNR(reconstruct(Y_gt, blurry), sharp)
};

// Mean over the given (blurry, sharp) pairs.
OracleBounds oracle_bounds(
    const std::vector<std::pair<Image, Image>>& pairs);

}  // namespace flowdbn
