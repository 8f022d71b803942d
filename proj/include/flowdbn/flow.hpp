#pragma once

#include <array>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "flowdbn/clip.hpp"
#include "flowdbn/image.hpp"

namespace flowdbn {

// Dense displacement field mapping reference coordinates into neighbor
// coordinates (backward warping): sample neighbor at (x+u, y+v).
struct FlowField {
  int height = 0, width = 0;
  std::vector<float> u, v;

  FlowField() = default;
  FlowField(int h, int w)
      : height(h), width(w),
        u(static_cast<size_t>(h) * w, 0.0f),
        v(static_cast<size_t>(h) * w, 0.0f) {}

  size_t idx(int y, int x) const {
    return static_cast<size_t>(y) * width + x;
  }
};

// Constant-translation field.
FlowField constant_flow(int height, int width, float du, float dv);

// Throws if the field contains NaN/inf.
void validate_flow(const FlowField& flow);

// Backward warping with bilinear interpolation; out-of-bounds samples
// replicate the border. Channel count is preserved.
Image warp(const Image& neighbor, const FlowField& flow);

// Middlebury .flo container (magic 202021.25, little-endian).
FlowField read_flo(const std::string& path);
void write_flo(const FlowField& flow, const std::string& path);

enum class AssemblyMode { kNone, kRep, kCat };

const char* to_string(AssemblyMode mode);
AssemblyMode assembly_mode_from_string(const std::string& s);

// Channels of the assembled input for per-frame channel count c.
int assembled_channels(AssemblyMode mode, int sequence_length,
                       int frame_channels);

// Yields the field registering the neighbor at `center+offset` onto the
// reference at `center`. Implementations must be safe for concurrent reads.
class FlowProvider {
 public:
  virtual ~FlowProvider() = default;
  virtual FlowField get(const std::string& sequence_id, int center,
                        int offset, int height, int width) const = 0;
};

// Reads <root>/<sequence>/flow/NNNNN_offset<d>.flo (root is a split dir).
class FileFlowProvider : public FlowProvider {
 public:
  explicit FileFlowProvider(std::string split_root);
  FlowField get(const std::string& sequence_id, int center, int offset,
                int height, int width) const override;

  static std::string flow_path(const std::string& split_root,
                               const std::string& sequence_id, int center,
                               int offset);

 private:
  std::string root_;
};

// Constant fields derived from a per-frame 2D camera translation script:
// flow(center, offset) = position(center) - position(center + offset).
class SyntheticFlowProvider : public FlowProvider {
 public:
  // positions_by_sequence[seq][t] = camera offset of frame t, in pixels.
  explicit SyntheticFlowProvider(
      std::map<std::string, std::vector<std::array<float, 2>>> positions);
  FlowField get(const std::string& sequence_id, int center, int offset,
                int height, int width) const override;

 private:
  std::map<std::string, std::vector<std::array<float, 2>>> positions_;
};

// Stacks the clip channelwise per the assembly mode:
//   none: the L frames in temporal order;
//   rep:  neighbors replaced by their warped versions, center unchanged;
//   cat:  the L originals followed by the L-1 warped neighbors.
// The provider may be null for mode none or L == 1.
Image assemble_input(const VideoClip& clip, AssemblyMode mode,
                     const FlowProvider* provider);

}  // namespace flowdbn
