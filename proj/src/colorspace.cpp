#include "flowdbn/colorspace.hpp"

#include "flowdbn/metrics.hpp"

namespace flowdbn {

namespace {
// Full-range BT.601 luma weights.
constexpr float kYr = 0.299f, kYg = 0.587f, kYb = 0.114f;
}  // namespace

Image rgb_to_ycbcr(const Image& rgb) {
  require(rgb.channels == 3, "rgb_to_ycbcr expects 3 channels, got ",
          rgb.channels);
  Image out(3, rgb.height, rgb.width);
  const size_t plane = static_cast<size_t>(rgb.height) * rgb.width;
  const float* r = rgb.plane(0);
  const float* g = rgb.plane(1);
  const float* b = rgb.plane(2);
  float* y = out.plane(0);
  float* cb = out.plane(1);
  float* cr = out.plane(2);
  for (size_t i = 0; i < plane; ++i) {
    y[i] = kYr * r[i] + kYg * g[i] + kYb * b[i];
    cb[i] = 0.5f + (b[i] - y[i]) * (0.5f / (1.0f - kYb));
    cr[i] = 0.5f + (r[i] - y[i]) * (0.5f / (1.0f - kYr));
  }
  return out;
}

Image ycbcr_to_rgb(const Image& ycbcr) {
  require(ycbcr.channels == 3, "ycbcr_to_rgb expects 3 channels, got ",
          ycbcr.channels);
  Image out(3, ycbcr.height, ycbcr.width);
  const size_t plane = static_cast<size_t>(ycbcr.height) * ycbcr.width;
  const float* y = ycbcr.plane(0);
  const float* cb = ycbcr.plane(1);
  const float* cr = ycbcr.plane(2);
  float* r = out.plane(0);
  float* g = out.plane(1);
  float* b = out.plane(2);
  for (size_t i = 0; i < plane; ++i) {
    const float dcb = cb[i] - 0.5f;
    const float dcr = cr[i] - 0.5f;
    const float rv = y[i] + (2.0f - 2.0f * kYr) * dcr;
    const float bv = y[i] + (2.0f - 2.0f * kYb) * dcb;
    const float gv = (y[i] - kYr * rv - kYb * bv) / kYg;
    r[i] = std::clamp(rv, 0.0f, 1.0f);
    g[i] = std::clamp(gv, 0.0f, 1.0f);
    b[i] = std::clamp(bv, 0.0f, 1.0f);
  }
  return out;
}

Image luma(const Image& rgb) {
  require(rgb.channels == 3, "luma expects 3 channels, got ", rgb.channels);
  Image out(1, rgb.height, rgb.width);
  const size_t plane = static_cast<size_t>(rgb.height) * rgb.width;
  const float* r = rgb.plane(0);
  const float* g = rgb.plane(1);
  const float* b = rgb.plane(2);
  float* y = out.plane(0);
  for (size_t i = 0; i < plane; ++i) y[i] = kYr * r[i] + kYg * g[i] + kYb * b[i];
  return out;
}

Image reconstruct(const Image& y_pred, const Image& blurry_rgb) {
  require(y_pred.channels == 1, "reconstruct expects a 1-channel Y image");
  require(blurry_rgb.channels == 3, "reconstruct expects an RGB blurry image");
  require(y_pred.height == blurry_rgb.height &&
              y_pred.width == blurry_rgb.width,
          "reconstruct: Y ", y_pred.height, "x", y_pred.width,
          " does not match RGB ", blurry_rgb.height, "x", blurry_rgb.width);
  Image ycbcr = rgb_to_ycbcr(blurry_rgb);
  std::copy(y_pred.data.begin(), y_pred.data.end(), ycbcr.plane(0));
  return ycbcr_to_rgb(ycbcr);
}

OracleBounds oracle_bounds(
    const std::vector<std::pair<Image, Image>>& pairs) {
  require(!pairs.empty(), "oracle_bounds: empty dataset");
  OracleBounds sums;
  for (const auto& [blurry, sharp] : pairs) {
    sums.input_psnr += psnr(blurry, sharp);
    Image y_gt = luma(sharp);
    sums.y_oracle_psnr += psnr(reconstruct(y_gt, blurry), sharp);
  }
  sums.input_psnr /= pairs.size();
  sums.y_oracle_psnr /= pairs.size();
  return sums;
}

}  // namespace flowdbn
