#pragma once

#include <cstddef>
#include <vector>

#include "flowdbn/common.hpp"

namespace flowdbn {

// Dense NCHW tensor. Row-major within a plane, planes contiguous.
template <typename T>
struct Tensor {
  int n = 0, c = 0, h = 0, w = 0;
  std::vector<T> v;

  Tensor() = default;
  Tensor(int n_, int c_, int h_, int w_)
      : n(n_), c(c_), h(h_), w(w_),
        v(static_cast<size_t>(n_) * c_ * h_ * w_, T(0)) {
    require(n_ >= 0 && c_ >= 0 && h_ >= 0 && w_ >= 0, "negative tensor dim");
  }

  size_t numel() const { return v.size(); }
  bool same_shape(const Tensor& o) const {
    return n == o.n && c == o.c && h == o.h && w == o.w;
  }

  T* data() { return v.data(); }
  const T* data() const { return v.data(); }

  size_t idx(int in, int ic, int iy, int ix) const {
    return ((static_cast<size_t>(in) * c + ic) * h + iy) * w + ix;
  }
  T& at(int in, int ic, int iy, int ix) { return v[idx(in, ic, iy, ix)]; }
  const T& at(int in, int ic, int iy, int ix) const {
    return v[idx(in, ic, iy, ix)];
  }

  // Pointer to the (n, c) plane.
  T* plane(int in, int ic) { return v.data() + idx(in, ic, 0, 0); }
  const T* plane(int in, int ic) const { return v.data() + idx(in, ic, 0, 0); }

  void zero() { std::fill(v.begin(), v.end(), T(0)); }
};

}  // namespace flowdbn
