#include "flowdbn/flow.hpp"

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <sstream>

namespace flowdbn {

namespace {
constexpr float kFloMagic = 202021.25f;
}

FlowField constant_flow(int height, int width, float du, float dv) {
  FlowField f(height, width);
  std::fill(f.u.begin(), f.u.end(), du);
  std::fill(f.v.begin(), f.v.end(), dv);
  return f;
}

void validate_flow(const FlowField& flow) {
  for (float x : flow.u)
    require(std::isfinite(x), "flow field contains non-finite u values");
  for (float x : flow.v)
    require(std::isfinite(x), "flow field contains non-finite v values");
}

Image warp(const Image& neighbor, const FlowField& flow) {
  require(neighbor.height == flow.height && neighbor.width == flow.width,
          "warp: image ", neighbor.height, "x", neighbor.width,
          " does not match flow ", flow.height, "x", flow.width);
  validate_flow(flow);
  const int h = neighbor.height, w = neighbor.width;
  Image out(neighbor.channels, h, w);
  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x) {
      const size_t i = flow.idx(y, x);
      const float sx = x + flow.u[i];
      const float sy = y + flow.v[i];
      const float fx0 = std::floor(sx);
      const float fy0 = std::floor(sy);
      const float ax = sx - fx0;
      const float ay = sy - fy0;
      const int x0 = std::clamp(static_cast<int>(fx0), 0, w - 1);
      const int x1 = std::clamp(static_cast<int>(fx0) + 1, 0, w - 1);
      const int y0 = std::clamp(static_cast<int>(fy0), 0, h - 1);
      const int y1 = std::clamp(static_cast<int>(fy0) + 1, 0, h - 1);
      const float w00 = (1.0f - ax) * (1.0f - ay);
      const float w01 = ax * (1.0f - ay);
      const float w10 = (1.0f - ax) * ay;
      const float w11 = ax * ay;
      for (int c = 0; c < neighbor.channels; ++c) {
        const float* p = neighbor.plane(c);
        out.at(c, y, x) = w00 * p[static_cast<size_t>(y0) * w + x0] +
                          w01 * p[static_cast<size_t>(y0) * w + x1] +
                          w10 * p[static_cast<size_t>(y1) * w + x0] +
                          w11 * p[static_cast<size_t>(y1) * w + x1];
      }
    }
  }
  return out;
}

FlowField read_flo(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  require(in.good(), "cannot open flow file: ", path);
  float magic = 0.0f;
  int32_t w = 0, h = 0;
  in.read(reinterpret_cast<char*>(&magic), sizeof(magic));
  in.read(reinterpret_cast<char*>(&w), sizeof(w));
  in.read(reinterpret_cast<char*>(&h), sizeof(h));
  require(in.good() && magic == kFloMagic, "bad .flo magic in ", path);
  require(w > 0 && h > 0 && w < 100000 && h < 100000,
          "implausible .flo dimensions ", w, "x", h, " in ", path);
  FlowField flow(h, w);
  std::vector<float> interleaved(static_cast<size_t>(h) * w * 2);
  in.read(reinterpret_cast<char*>(interleaved.data()),
          static_cast<std::streamsize>(interleaved.size() * sizeof(float)));
  require(in.gcount() ==
              static_cast<std::streamsize>(interleaved.size() * sizeof(float)),
          "truncated .flo payload in ", path);
  for (size_t i = 0; i < flow.u.size(); ++i) {
    flow.u[i] = interleaved[2 * i];
    flow.v[i] = interleaved[2 * i + 1];
  }
  validate_flow(flow);
  return flow;
}

void write_flo(const FlowField& flow, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  require(out.good(), "cannot write flow file: ", path);
  const int32_t w = flow.width, h = flow.height;
  out.write(reinterpret_cast<const char*>(&kFloMagic), sizeof(kFloMagic));
  out.write(reinterpret_cast<const char*>(&w), sizeof(w));
  out.write(reinterpret_cast<const char*>(&h), sizeof(h));
  std::vector<float> interleaved(static_cast<size_t>(h) * w * 2);
  for (size_t i = 0; i < flow.u.size(); ++i) {
    interleaved[2 * i] = flow.u[i];
    interleaved[2 * i + 1] = flow.v[i];
  }
  out.write(reinterpret_cast<const char*>(interleaved.data()),
            static_cast<std::streamsize>(interleaved.size() * sizeof(float)));
  require(out.good(), "short write to flow file: ", path);
}

const char* to_string(AssemblyMode mode) {
  switch (mode) {
    case AssemblyMode::kNone: return "none";
    case AssemblyMode::kRep: return "rep";
    case AssemblyMode::kCat: return "cat";
  }
  return "?";
}

AssemblyMode assembly_mode_from_string(const std::string& s) {
  if (s == "none") return AssemblyMode::kNone;
  if (s == "rep") return AssemblyMode::kRep;
  if (s == "cat") return AssemblyMode::kCat;
  fail("unknown assembly mode '", s, "' (expected none|rep|cat)");
}

int assembled_channels(AssemblyMode mode, int sequence_length,
                       int frame_channels) {
  if (mode == AssemblyMode::kCat)
    return frame_channels * (2 * sequence_length - 1);
  return frame_channels * sequence_length;
}

FileFlowProvider::FileFlowProvider(std::string split_root)
    : root_(std::move(split_root)) {}

std::string FileFlowProvider::flow_path(const std::string& split_root,
                                        const std::string& sequence_id,
                                        int center, int offset) {
  std::ostringstream os;
  os << split_root << "/" << sequence_id << "/flow/" << std::setw(5)
     << std::setfill('0') << center << "_offset" << offset << ".flo";
  return os.str();
}

FlowField FileFlowProvider::get(const std::string& sequence_id, int center,
                                int offset, int height, int width) const {
  const std::string path = flow_path(root_, sequence_id, center, offset);
  if (!std::filesystem::exists(path))
    fail("missing flow file for (sequence=", sequence_id, ", center=", center,
         ", offset=", offset, "): ", path);
  FlowField flow = read_flo(path);
  require(flow.height == height && flow.width == width, "flow file ", path,
          " is ", flow.height, "x", flow.width, ", expected ", height, "x",
          width);
  return flow;
}

SyntheticFlowProvider::SyntheticFlowProvider(
    std::map<std::string, std::vector<std::array<float, 2>>> positions)
    : positions_(std::move(positions)) {}

FlowField SyntheticFlowProvider::get(const std::string& sequence_id,
                                     int center, int offset, int height,
                                     int width) const {
  auto it = positions_.find(sequence_id);
  if (it == positions_.end())
    fail("no trajectory for sequence '", sequence_id, "'");
  const auto& pos = it->second;
  const int neighbor = center + offset;
  require(center >= 0 && center < static_cast<int>(pos.size()) &&
              neighbor >= 0 && neighbor < static_cast<int>(pos.size()),
          "trajectory for '", sequence_id, "' does not cover frames ", center,
          " and ", neighbor);
  return constant_flow(height, width, pos[center][0] - pos[neighbor][0],
                       pos[center][1] - pos[neighbor][1]);
}

Image assemble_input(const VideoClip& clip, AssemblyMode mode,
                     const FlowProvider* provider) {
  validate_clip(clip);
  const int length = clip.length();
  const int half = length / 2;
  const Image& first = clip.blurry_frames.front();
  const int fc = first.channels;

  std::vector<const Image*> layers;
  std::vector<Image> warped;
  warped.reserve(length - 1);
  if (mode != AssemblyMode::kNone && length > 1) {
    require(provider != nullptr, "assembly mode ", to_string(mode),
            " needs a flow provider");
    for (int k = 0; k < length; ++k) {
      if (k == half) continue;
      FlowField flow = provider->get(clip.sequence_id, clip.center_index,
                                     k - half, first.height, first.width);
      warped.push_back(warp(clip.blurry_frames[k], flow));
    }
  }

  switch (mode) {
    case AssemblyMode::kNone:
      for (int k = 0; k < length; ++k) layers.push_back(&clip.blurry_frames[k]);
      break;
    case AssemblyMode::kRep: {
      int wi = 0;
      for (int k = 0; k < length; ++k)
        layers.push_back(k == half ? &clip.blurry_frames[k] : &warped[wi++]);
      break;
    }
    case AssemblyMode::kCat: {
      for (int k = 0; k < length; ++k) layers.push_back(&clip.blurry_frames[k]);
      for (const Image& wimg : warped) layers.push_back(&wimg);
      break;
    }
  }

  Image out(fc * static_cast<int>(layers.size()), first.height, first.width);
  const size_t plane = static_cast<size_t>(first.height) * first.width;
  for (size_t li = 0; li < layers.size(); ++li)
    std::copy(layers[li]->data.begin(), layers[li]->data.end(),
              out.data.begin() + li * fc * plane);
  return out;
}

}  // namespace flowdbn
