#include "stcray/render.hpp"

#include <algorithm>
#include <array>
#include <cmath>

#include "stcray/errors.hpp"
#include "stcray/material.hpp"

namespace stcray {

namespace {

struct Mat3 {
    std::array<double, 9> m;

    static Mat3 identity() { return {{1, 0, 0, 0, 1, 0, 0, 0, 1}}; }

    Mat3 operator*(const Mat3& o) const {
        Mat3 r{};
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) {
                double s = 0;
                for (int k = 0; k < 3; ++k) s += m[i * 3 + k] * o.m[k * 3 + j];
                r.m[i * 3 + j] = s;
            }
        return r;
    }

    void apply(double x, double y, double z, double& ox, double& oy, double& oz) const {
        ox = m[0] * x + m[1] * y + m[2] * z;
        oy = m[3] * x + m[4] * y + m[5] * z;
        oz = m[6] * x + m[7] * y + m[8] * z;
    }
};

Mat3 rot_x(double a) {
    const double c = std::cos(a), s = std::sin(a);
    return {{1, 0, 0, 0, c, -s, 0, s, c}};
}
Mat3 rot_y(double a) {
    const double c = std::cos(a), s = std::sin(a);
    return {{c, 0, s, 0, 1, 0, -s, 0, c}};
}
Mat3 rot_z(double a) {
    const double c = std::cos(a), s = std::sin(a);
    return {{c, -s, 0, s, c, 0, 0, 0, 1}};
}

// Inverse of R = Rz(psi) Ry(theta) Rx(phi).
Mat3 inverse_rotation(const EulerPose& pose) {
    return rot_x(-pose.phi) * rot_y(-pose.theta) * rot_z(-pose.psi);
}

double sample_trilinear(const std::vector<double>& ch, Vec3i dims, double x, double y, double z) {
    const int x0 = static_cast<int>(std::floor(x));
    const int y0 = static_cast<int>(std::floor(y));
    const int z0 = static_cast<int>(std::floor(z));
    const double fx = x - x0, fy = y - y0, fz = z - z0;

    double acc = 0.0;
    for (int dz = 0; dz <= 1; ++dz) {
        const int zz = z0 + dz;
        if (zz < 0 || zz >= dims.z) continue;
        const double wz = dz ? fz : 1.0 - fz;
        for (int dy = 0; dy <= 1; ++dy) {
            const int yy = y0 + dy;
            if (yy < 0 || yy >= dims.y) continue;
            const double wy = dy ? fy : 1.0 - fy;
            for (int dx = 0; dx <= 1; ++dx) {
                const int xx = x0 + dx;
                if (xx < 0 || xx >= dims.x) continue;
                const double wx = dx ? fx : 1.0 - fx;
                const std::size_t i = static_cast<std::size_t>(xx) +
                                      static_cast<std::size_t>(dims.x) *
                                          (static_cast<std::size_t>(yy) + static_cast<std::size_t>(dims.y) * zz);
                acc += wx * wy * wz * ch[i];
            }
        }
    }
    return acc;
}

struct Hsl {
    double h;  // degrees
    double s;
    double l;
};

std::array<std::uint8_t, 3> hsl_to_rgb8(const Hsl& hsl) {
    const double c = (1.0 - std::abs(2.0 * hsl.l - 1.0)) * hsl.s;
    const double hp = hsl.h / 60.0;
    const double x = c * (1.0 - std::abs(std::fmod(hp, 2.0) - 1.0));
    double r = 0, g = 0, b = 0;
    if (hp < 1) { r = c; g = x; }
    else if (hp < 2) { r = x; g = c; }
    else if (hp < 3) { g = c; b = x; }
    else if (hp < 4) { g = x; b = c; }
    else if (hp < 5) { r = x; b = c; }
    else { r = c; b = x; }
    const double m = hsl.l - c / 2.0;
    auto q = [m](double v) {
        return static_cast<std::uint8_t>(std::lround(255.0 * std::clamp(v + m, 0.0, 1.0)));
    };
    return {q(r), q(g), q(b)};
}

double class_hue(MaterialClass c) {
    switch (c) {
        case MaterialClass::Metal: return 225.0;      // blue
        case MaterialClass::Inorganic: return 120.0;  // green
        case MaterialClass::Mixed: return 140.0;      // green, circuit-like
        case MaterialClass::Organic: return 30.0;     // orange
        case MaterialClass::Polymer: return 30.0;     // orange
    }
    return 0.0;
}

}  // namespace

VoxelVolume rotate_volume(const VoxelVolume& vol, const EulerPose& pose) {
    if (pose.is_identity()) return vol;

    const Mat3 inv = inverse_rotation(pose);
    const Vec3i dims = vol.dims;
    const double cx = (dims.x - 1) / 2.0;
    const double cy = (dims.y - 1) / 2.0;
    const double cz = (dims.z - 1) / 2.0;

    VoxelVolume out = VoxelVolume::zeros(dims);
    for (int z = 0; z < dims.z; ++z)
        for (int y = 0; y < dims.y; ++y)
            for (int x = 0; x < dims.x; ++x) {
                double sx, sy, sz;
                inv.apply(x - cx, y - cy, z - cz, sx, sy, sz);
                sx += cx;
                sy += cy;
                sz += cz;
                if (sx < -1 || sy < -1 || sz < -1 || sx > dims.x || sy > dims.y || sz > dims.z) continue;
                const std::size_t i = out.index(x, y, z);
                out.mu_low[i] = sample_trilinear(vol.mu_low, dims, sx, sy, sz);
                out.mu_high[i] = sample_trilinear(vol.mu_high, dims, sx, sy, sz);
            }
    return out;
}

PathIntegralImage project(const VoxelVolume& vol, EnergyChannel channel) {
    PathIntegralImage img = PathIntegralImage::zeros(vol.dims.x, vol.dims.y);
    const auto& ch = vol.channel(channel);
    const std::size_t slice = static_cast<std::size_t>(vol.dims.x) * vol.dims.y;
    for (int z = 0; z < vol.dims.z; ++z) {
        const double* src = ch.data() + slice * z;
        for (std::size_t i = 0; i < slice; ++i) img.values[i] += src[i];
    }
    return img;
}

TransmittanceImage transmit(const PathIntegralImage& p, double i0) {
    TransmittanceImage t;
    t.width = p.width;
    t.height = p.height;
    t.i0 = i0;
    t.values.resize(p.values.size());
    for (std::size_t i = 0; i < p.values.size(); ++i) t.values[i] = i0 * std::exp(-p.values[i]);
    return t;
}

TransmittanceImage fuse(const TransmittanceImage& a, const TransmittanceImage& b) {
    if (a.width != b.width || a.height != b.height) throw DimMismatch("transmittance image dims differ");
    TransmittanceImage out;
    out.width = a.width;
    out.height = a.height;
    out.i0 = 1.0;
    out.values.resize(a.values.size());
    for (std::size_t i = 0; i < a.values.size(); ++i) out.values[i] = a.values[i] * b.values[i];
    return out;
}

RgbImage colorize(const TransmittanceImage& t_low, const TransmittanceImage& t_high, const ColorizeOptions& opts) {
    if (t_low.width != t_high.width || t_low.height != t_high.height)
        throw DimMismatch("transmittance image dims differ");

    RgbImage img = RgbImage::filled(t_low.width, t_low.height, 255, 255, 255);
    for (std::size_t i = 0; i < t_low.values.size(); ++i) {
        const double p_low = -std::log(std::max(t_low.values[i] / t_low.i0, 1e-300));
        if (p_low < opts.background_eps) continue;
        const double p_high = -std::log(std::max(t_high.values[i] / t_high.i0, 1e-300));
        const MaterialClass cls = classify_material_ratio(p_high / p_low);
        const double lightness = std::clamp(t_high.values[i] / t_high.i0, 0.03, 0.97);
        const auto rgb = hsl_to_rgb8({class_hue(cls), 0.85, lightness});
        img.pixels[i * 3] = rgb[0];
        img.pixels[i * 3 + 1] = rgb[1];
        img.pixels[i * 3 + 2] = rgb[2];
    }
    return img;
}

GrayImage threat_mask(const PathIntegralImage& solo, double eps) {
    GrayImage mask = GrayImage::zeros(solo.width, solo.height);
    for (std::size_t i = 0; i < solo.values.size(); ++i)
        if (solo.values[i] > eps) mask.pixels[i] = 255;
    return mask;
}

PixelBox bbox_of(const GrayImage& mask) {
    PixelBox box{mask.width, mask.height, -1, -1};
    for (int y = 0; y < mask.height; ++y)
        for (int x = 0; x < mask.width; ++x)
            if (mask.at(x, y)) {
                box.x_min = std::min(box.x_min, x);
                box.y_min = std::min(box.y_min, y);
                box.x_max = std::max(box.x_max, x);
                box.y_max = std::max(box.y_max, y);
            }
    if (box.x_max < 0) throw EmptyMask("mask has no set pixels");
    return box;
}

GrayImage quantize(const TransmittanceImage& t) {
    GrayImage img = GrayImage::zeros(t.width, t.height);
    for (std::size_t i = 0; i < t.values.size(); ++i)
        img.pixels[i] = static_cast<std::uint8_t>(std::lround(255.0 * std::clamp(t.values[i] / t.i0, 0.0, 1.0)));
    return img;
}

}  // namespace stcray
