#pragma once

#include <random>
#include <string>
#include <vector>

#include "flowdbn/common.hpp"

namespace flowdbn {

enum class FanMode { kFanIn, kFanOut, kFanMax };

const char* to_string(FanMode mode);
FanMode fan_mode_from_string(const std::string& s);

// Connectivity of one (transposed) convolution, as seen from a single unit.
struct LayerShape {
  int kernel_h = 0, kernel_w = 0;
  int channels_in = 0, channels_out = 0;
};

inline void validate(const LayerShape& s) {
  require(s.kernel_h >= 1 && s.kernel_w >= 1 && s.channels_in >= 1 &&
              s.channels_out >= 1,
          "invalid layer shape ", s.kernel_h, "x", s.kernel_w, " ",
          s.channels_in, "->", s.channels_out);
}

// fan_in = cin*kh*kw, fan_out = cout*kh*kw, fan_max = max of the two.
long fan_value(const LayerShape& shape, FanMode mode);

// Zero-mean Gaussian with std sqrt(2 / fan); deterministic given the rng
// state. `count` must equal cout*cin*kh*kw for a full weight tensor.
template <typename T>
void msra_fill(T* weights, size_t count, const LayerShape& shape,
               FanMode mode, std::mt19937& rng);

template <typename T>
std::vector<T> msra_init(const LayerShape& shape, FanMode mode,
                         std::mt19937& rng) {
  validate(shape);
  std::vector<T> w(static_cast<size_t>(shape.channels_out) *
                   shape.channels_in * shape.kernel_h * shape.kernel_w);
  msra_fill(w.data(), w.size(), shape, mode, rng);
  return w;
}

}  // namespace flowdbn
