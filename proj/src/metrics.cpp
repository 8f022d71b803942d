#include "flowdbn/metrics.hpp"

#include <array>
#include <cmath>

namespace flowdbn {

double psnr(const Image& pred, const Image& gt) {
  require(pred.same_shape(gt), "psnr: shape mismatch (", pred.channels, "x",
          pred.height, "x", pred.width, " vs ", gt.channels, "x", gt.height,
          "x", gt.width, ")");
  require(pred.numel() > 0, "psnr: empty image");
  double sum = 0.0;
  for (size_t i = 0; i < pred.data.size(); ++i) {
    const double d = static_cast<double>(pred.data[i]) - gt.data[i];
    sum += d * d;
  }
  const double mse = sum / pred.data.size();
  if (mse == 0.0) return kPsnrCap;
  return std::min(kPsnrCap, 10.0 * std::log10(1.0 / mse));
}

namespace {

constexpr int kWin = 11;
constexpr double kSigma = 1.5;
constexpr double kC1 = 0.01 * 0.01;
constexpr double kC2 = 0.03 * 0.03;
constexpr std::array<double, 5> kScaleWeights = {0.0448, 0.2856, 0.3001,
                                                 0.2363, 0.1333};

std::array<double, kWin> gaussian_taps() {
  std::array<double, kWin> g{};
  double sum = 0.0;
  for (int i = 0; i < kWin; ++i) {
    const double d = i - (kWin - 1) / 2.0;
    g[i] = std::exp(-d * d / (2.0 * kSigma * kSigma));
    sum += g[i];
  }
  for (double& x : g) x /= sum;
  return g;
}

struct Plane {
  int h = 0, w = 0;
  std::vector<double> v;
  Plane(int h_, int w_) : h(h_), w(w_), v(static_cast<size_t>(h_) * w_) {}
  double& at(int y, int x) { return v[static_cast<size_t>(y) * w + x]; }
  double at(int y, int x) const { return v[static_cast<size_t>(y) * w + x]; }
};

// Separable 'valid' Gaussian filtering: output (h-10) x (w-10).
Plane filter_valid(const Plane& in, const std::array<double, kWin>& g) {
  Plane tmp(in.h, in.w - kWin + 1);
  for (int y = 0; y < in.h; ++y)
    for (int x = 0; x < tmp.w; ++x) {
      double s = 0.0;
      for (int k = 0; k < kWin; ++k) s += g[k] * in.at(y, x + k);
      tmp.at(y, x) = s;
    }
  Plane out(in.h - kWin + 1, tmp.w);
  for (int y = 0; y < out.h; ++y)
    for (int x = 0; x < out.w; ++x) {
      double s = 0.0;
      for (int k = 0; k < kWin; ++k) s += g[k] * tmp.at(y + k, x);
      out.at(y, x) = s;
    }
  return out;
}

Plane multiply(const Plane& a, const Plane& b) {
  Plane out(a.h, a.w);
  for (size_t i = 0; i < out.v.size(); ++i) out.v[i] = a.v[i] * b.v[i];
  return out;
}

// 2x2 box filter ('valid') followed by stride-2 decimation.
Plane downsample2(const Plane& in) {
  const int bh = in.h - 1, bw = in.w - 1;
  Plane out((bh + 1) / 2, (bw + 1) / 2);
  for (int y = 0; y < out.h; ++y)
    for (int x = 0; x < out.w; ++x) {
      const int sy = 2 * y, sx = 2 * x;
      out.at(y, x) = 0.25 * (in.at(sy, sx) + in.at(sy, sx + 1) +
                             in.at(sy + 1, sx) + in.at(sy + 1, sx + 1));
    }
  return out;
}

// Mean luminance and contrast-structure terms at one scale.
void ssim_terms(const Plane& a, const Plane& b,
                const std::array<double, kWin>& g, double* mean_l,
                double* mean_cs) {
  Plane mu_a = filter_valid(a, g);
  Plane mu_b = filter_valid(b, g);
  Plane aa = filter_valid(multiply(a, a), g);
  Plane bb = filter_valid(multiply(b, b), g);
  Plane ab = filter_valid(multiply(a, b), g);
  double sum_l = 0.0, sum_cs = 0.0;
  for (size_t i = 0; i < mu_a.v.size(); ++i) {
    const double ma = mu_a.v[i], mb = mu_b.v[i];
    const double va = aa.v[i] - ma * ma;
    const double vb = bb.v[i] - mb * mb;
    const double vab = ab.v[i] - ma * mb;
    sum_l += (2.0 * ma * mb + kC1) / (ma * ma + mb * mb + kC1);
    sum_cs += (2.0 * vab + kC2) / (va + vb + kC2);
  }
  *mean_l = sum_l / mu_a.v.size();
  *mean_cs = sum_cs / mu_a.v.size();
}

double mssim_channel(Plane a, Plane b) {
  const auto g = gaussian_taps();
  double score = 1.0;
  for (size_t scale = 0; scale < kScaleWeights.size(); ++scale) {
    double mean_l = 0.0, mean_cs = 0.0;
    ssim_terms(a, b, g, &mean_l, &mean_cs);
    const bool coarsest = scale + 1 == kScaleWeights.size();
    // Luminance enters at the coarsest scale only. Negative means are
    // clamped so the fractional powers stay real and the score in [0,1].
    const double term = coarsest ? mean_l * mean_cs : mean_cs;
    score *= std::pow(std::max(term, 0.0), kScaleWeights[scale]);
    if (!coarsest) {
      a = downsample2(a);
      b = downsample2(b);
    }
  }
  return score;
}

}  // namespace

double mssim(const Image& pred, const Image& gt) {
  require(pred.same_shape(gt), "mssim: shape mismatch");
  require(std::min(pred.height, pred.width) >= kMssimMinSide,
          "mssim: image ", pred.height, "x", pred.width,
          " too small for 5 scales (need >= ", kMssimMinSide, ")");
  double sum = 0.0;
  for (int c = 0; c < pred.channels; ++c) {
    Plane a(pred.height, pred.width), b(pred.height, pred.width);
    const float* pa = pred.plane(c);
    const float* pb = gt.plane(c);
    for (size_t i = 0; i < a.v.size(); ++i) {
      a.v[i] = pa[i];
      b.v[i] = pb[i];
    }
    sum += mssim_channel(std::move(a), std::move(b));
  }
  return sum / pred.channels;
}

}  // namespace flowdbn
