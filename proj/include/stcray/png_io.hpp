#pragma once

#include <filesystem>

#include "stcray/image.hpp"

namespace stcray {

// Both throw IoFailure on encode or filesystem errors.
void write_png(const std::filesystem::path& path, const RgbImage& img);
void write_png(const std::filesystem::path& path, const GrayImage& img);

}  // namespace stcray
