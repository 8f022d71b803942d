#include "flowdbn/image_io.hpp"

#include <opencv2/imgcodecs.hpp>
#include <opencv2/imgproc.hpp>

#include <cmath>

namespace flowdbn {

Image load_image(const std::string& path) {
  cv::Mat mat = cv::imread(path, cv::IMREAD_COLOR);
  if (mat.empty()) fail("cannot read image: ", path);
  Image img(3, mat.rows, mat.cols);
  for (int y = 0; y < mat.rows; ++y) {
    const cv::Vec3b* row = mat.ptr<cv::Vec3b>(y);
    for (int x = 0; x < mat.cols; ++x) {
      // OpenCV loads BGR
      img.at(0, y, x) = row[x][2] / 255.0f;
      img.at(1, y, x) = row[x][1] / 255.0f;
      img.at(2, y, x) = row[x][0] / 255.0f;
    }
  }
  return img;
}

void save_image(const Image& img, const std::string& path) {
  require(img.channels == 3 || img.channels == 1,
          "save_image expects 1 or 3 channels, got ", img.channels);
  auto to_u8 = [](float v) {
    float q = std::round(std::clamp(v, 0.0f, 1.0f) * 255.0f);
    return static_cast<unsigned char>(q);
  };
  cv::Mat mat(img.height, img.width,
              img.channels == 3 ? CV_8UC3 : CV_8UC1);
  for (int y = 0; y < img.height; ++y) {
    if (img.channels == 3) {
      cv::Vec3b* row = mat.ptr<cv::Vec3b>(y);
      for (int x = 0; x < img.width; ++x) {
        row[x][2] = to_u8(img.at(0, y, x));
        row[x][1] = to_u8(img.at(1, y, x));
        row[x][0] = to_u8(img.at(2, y, x));
      }
    } else {
      unsigned char* row = mat.ptr<unsigned char>(y);
      for (int x = 0; x < img.width; ++x) row[x] = to_u8(img.at(0, y, x));
    }
  }
  if (!cv::imwrite(path, mat)) fail("cannot write image: ", path);
}

Image resize_area(const Image& img, int new_height, int new_width) {
  require(new_height >= 1 && new_width >= 1, "resize to empty image");
  Image out(img.channels, new_height, new_width);
  for (int c = 0; c < img.channels; ++c) {
    cv::Mat src(img.height, img.width, CV_32FC1,
                const_cast<float*>(img.plane(c)));
    cv::Mat dst(new_height, new_width, CV_32FC1, out.plane(c));
    cv::resize(src, dst, dst.size(), 0, 0, cv::INTER_AREA);
  }
  return out;
}

}  // namespace flowdbn
