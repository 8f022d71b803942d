#pragma once

#include <string>
#include <vector>

#include "flowdbn/image.hpp"

namespace flowdbn {

// An ordered temporal window of blurry frames plus the sharp reference
// aligned to the center frame. The window length L is odd.
struct VideoClip {
  std::vector<Image> blurry_frames;
  Image sharp_reference;
  std::string sequence_id;
  int center_index = 0;

  int length() const { return static_cast<int>(blurry_frames.size()); }
  const Image& center_frame() const {
    return blurry_frames[blurry_frames.size() / 2];
  }
};

inline void validate_clip(const VideoClip& clip) {
  require(!clip.blurry_frames.empty(), "clip has no frames");
  require(clip.length() % 2 == 1, "clip length must be odd, got ",
          clip.length());
  for (const Image& f : clip.blurry_frames)
    require(f.same_shape(clip.blurry_frames.front()),
            "clip frames differ in shape");
  require(clip.sharp_reference.height == clip.blurry_frames[0].height &&
              clip.sharp_reference.width == clip.blurry_frames[0].width,
          "sharp reference shape does not match blurry frames");
}

}  // namespace flowdbn
