#pragma once

#include <algorithm>
#include <cstddef>
#include <vector>

#include "flowdbn/common.hpp"

namespace flowdbn {

// Planar CHW float image, values nominally in [0,1].
struct Image {
  int channels = 0, height = 0, width = 0;
  std::vector<float> data;

  Image() = default;
  Image(int c, int h, int w)
      : channels(c), height(h), width(w),
        data(static_cast<size_t>(c) * h * w, 0.0f) {}

  size_t numel() const { return data.size(); }
  bool same_shape(const Image& o) const {
    return channels == o.channels && height == o.height && width == o.width;
  }

  size_t idx(int c, int y, int x) const {
    return (static_cast<size_t>(c) * height + y) * width + x;
  }
  float& at(int c, int y, int x) { return data[idx(c, y, x)]; }
  const float& at(int c, int y, int x) const { return data[idx(c, y, x)]; }

  float* plane(int c) { return data.data() + idx(c, 0, 0); }
  const float* plane(int c) const { return data.data() + idx(c, 0, 0); }
};

inline Image constant_image(int c, int h, int w, float value) {
  Image img(c, h, w);
  std::fill(img.data.begin(), img.data.end(), value);
  return img;
}

inline void clamp01(Image& img) {
  for (float& x : img.data) x = std::clamp(x, 0.0f, 1.0f);
}

}  // namespace flowdbn
