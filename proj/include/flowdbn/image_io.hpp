#pragma once

#include <string>

#include "flowdbn/image.hpp"

namespace flowdbn {

// Loads an 8-bit image file as RGB float in [0,1] (values / 255).
Image load_image(const std::string& path);

// Quantizes to 8-bit (round(v*255), clamped) and writes a PNG.
void save_image(const Image& img, const std::string& path);

// Antialiased area resampling to the given size (used for downscaling).
Image resize_area(const Image& img, int new_height, int new_width);

}  // namespace flowdbn
