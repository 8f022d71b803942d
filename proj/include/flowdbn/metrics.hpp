#pragma once

#include "flowdbn/image.hpp"

namespace flowdbn {

// PSNR cap reported for (near-)identical images; keeps reports finite.
inline constexpr double kPsnrCap = 100.0;

// 10*log10(1/MSE) with peak 1.0, capped at kPsnrCap.
double psnr(const Image& pred, const Image& gt);

// Multi-scale SSIM: 5 dyadic scales, 11x11 Gaussian window (sigma 1.5),
// luminance term at the coarsest scale only, standard per-scale weights.
// Channels are scored independently and averaged. Requires
// min(height, width) >= 176 so that an 11x11 window fits at scale 5.
double mssim(const Image& pred, const Image& gt);

// Smallest image side accepted by mssim (11 * 2^4).
inline constexpr int kMssimMinSide = 176;

}  // namespace flowdbn
