#pragma once

#include <vector>

#include "stcray/image.hpp"
#include "stcray/scene.hpp"

namespace stcray {

// Column sums of attenuation along the beam (z) axis for one energy channel,
// with voxel-length step 1.
struct PathIntegralImage {
    int width = 0;
    int height = 0;
    std::vector<double> values;

    static PathIntegralImage zeros(int w, int h) {
        return {w, h, std::vector<double>(static_cast<std::size_t>(w) * h, 0.0)};
    }
    double& at(int x, int y) { return values[static_cast<std::size_t>(y) * width + x]; }
    double at(int x, int y) const { return values[static_cast<std::size_t>(y) * width + x]; }
};

// T = i0 * exp(-P) per pixel.
struct TransmittanceImage {
    int width = 0;
    int height = 0;
    double i0 = 1.0;
    std::vector<double> values;

    double at(int x, int y) const { return values[static_cast<std::size_t>(y) * width + x]; }
};

// Tight pixel box, min/max coordinates inclusive.
struct PixelBox {
    int x_min = 0;
    int y_min = 0;
    int x_max = 0;
    int y_max = 0;
    bool operator==(const PixelBox&) const = default;
};

struct ColorizeOptions {
    double background_eps = 1e-4;  // path-integral floor below which a pixel is background
};

// Trilinear resample about the volume center; out-of-range samples read as
// zero. The all-zero pose returns the input unchanged.
VoxelVolume rotate_volume(const VoxelVolume& vol, const EulerPose& pose);

PathIntegralImage project(const VoxelVolume& vol, EnergyChannel channel);

TransmittanceImage transmit(const PathIntegralImage& p, double i0 = 1.0);

// Elementwise product of two i0-normalized transmittance images; throws
// DimMismatch.
TransmittanceImage fuse(const TransmittanceImage& a, const TransmittanceImage& b);

// Dual-energy pseudo-color: background pixels white; otherwise the
// high/low path-integral ratio selects the material hue (metal blue,
// inorganic/mixed green, organic/polymer orange) with lightness T_high.
RgbImage colorize(const TransmittanceImage& t_low, const TransmittanceImage& t_high, const ColorizeOptions& opts = {});

// Binary mask of the item's own attenuation footprint.
GrayImage threat_mask(const PathIntegralImage& solo, double eps = 1e-6);

// Tight box over set mask pixels; throws EmptyMask when nothing is set.
PixelBox bbox_of(const GrayImage& mask);

// 8-bit grayscale quantization of a transmittance image, round(255 * T).
GrayImage quantize(const TransmittanceImage& t);

}  // namespace stcray
