#include "stcray/scene.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "stcray/errors.hpp"

namespace stcray {

namespace {

constexpr double kPi = 3.14159265358979323846;

bool inside_primitive(const Primitive& p, double lx, double ly, double lz) {
    // lx/ly/lz are voxel-center coordinates relative to the primitive offset.
    if (lx < 0 || ly < 0 || lz < 0 || lx > p.extent.x || ly > p.extent.y || lz > p.extent.z) return false;
    switch (p.kind) {
        case SolidKind::box:
            return true;
        case SolidKind::cylinder: {
            // Elliptic cylinder along z.
            const double rx = p.extent.x / 2.0;
            const double ry = p.extent.y / 2.0;
            const double dx = (lx - rx) / rx;
            const double dy = (ly - ry) / ry;
            return dx * dx + dy * dy <= 1.0;
        }
        case SolidKind::l_solid: {
            // Two legs, each 45% of the corresponding extent thick, sharing
            // the min corner.
            const double leg_x = std::max(1.0, 0.45 * p.extent.y);
            const double leg_y = std::max(1.0, 0.45 * p.extent.x);
            return ly <= leg_x || lx <= leg_y;
        }
    }
    return false;
}

}  // namespace

Vec3i ItemShape::bounding_extent() const {
    Vec3i ext{0, 0, 0};
    for (const auto& p : primitives) {
        ext.x = std::max(ext.x, p.offset.x + p.extent.x);
        ext.y = std::max(ext.y, p.offset.y + p.extent.y);
        ext.z = std::max(ext.z, p.offset.z + p.extent.z);
    }
    return ext;
}

VoxelVolume VoxelVolume::zeros(Vec3i dims) {
    VoxelVolume v;
    v.dims = dims;
    const std::size_t n = static_cast<std::size_t>(dims.x) * dims.y * dims.z;
    v.mu_low.assign(n, 0.0);
    v.mu_high.assign(n, 0.0);
    return v;
}

double VoxelVolume::sum(EnergyChannel c) const {
    const auto& ch = channel(c);
    return std::accumulate(ch.begin(), ch.end(), 0.0);
}

void VoxelVolume::add(const VoxelVolume& other) {
    if (!(dims == other.dims)) throw DimMismatch("voxel volume dims differ");
    for (std::size_t i = 0; i < mu_low.size(); ++i) mu_low[i] += other.mu_low[i];
    for (std::size_t i = 0; i < mu_high.size(); ++i) mu_high[i] += other.mu_high[i];
}

VoxelVolume voxelize(const PlacedItem& item, Vec3i dims) {
    for (const auto& p : item.shape.primitives) {
        if (p.extent.x <= 0 || p.extent.y <= 0 || p.extent.z <= 0)
            throw OutOfBounds("primitive extent must be positive");
        const Vec3i lo{item.position.x + p.offset.x, item.position.y + p.offset.y, item.position.z + p.offset.z};
        const Vec3i hi{lo.x + p.extent.x, lo.y + p.extent.y, lo.z + p.extent.z};
        if (lo.x < 0 || lo.y < 0 || lo.z < 0 || hi.x > dims.x || hi.y > dims.y || hi.z > dims.z)
            throw OutOfBounds("item footprint exceeds volume dims");
    }

    VoxelVolume vol = VoxelVolume::zeros(dims);
    const MaterialProps mat = material_props(item.shape.material);
    for (const auto& p : item.shape.primitives) {
        const Vec3i lo{item.position.x + p.offset.x, item.position.y + p.offset.y, item.position.z + p.offset.z};
        for (int z = lo.z; z < lo.z + p.extent.z; ++z)
            for (int y = lo.y; y < lo.y + p.extent.y; ++y)
                for (int x = lo.x; x < lo.x + p.extent.x; ++x) {
                    if (!inside_primitive(p, x + 0.5 - lo.x, y + 0.5 - lo.y, z + 0.5 - lo.z)) continue;
                    const std::size_t i = vol.index(x, y, z);
                    vol.mu_low[i] = mat.mu_low;
                    vol.mu_high[i] = mat.mu_high;
                }
    }
    return vol;
}

LocationLabel classify_location(double cx, double cy, int width, int height) {
    const bool in_x = cx >= 0.25 * width && cx <= 0.75 * width;
    const bool in_y = cy >= 0.25 * height && cy <= 0.75 * height;
    return (in_x && in_y) ? LocationLabel::center : LocationLabel::corner;
}

PoseLabel classify_orientation(const EulerPose& pose) {
    double a = std::fmod(pose.psi, kPi);
    if (a < 0) a += kPi;
    const double band = kPi / 12.0;  // 15 degrees
    const double dist_h = std::min(a, kPi - a);
    const double dist_v = std::abs(a - kPi / 2.0);
    if (dist_h <= band) return PoseLabel::horizontal;
    if (dist_v <= band) return PoseLabel::vertical;
    return PoseLabel::inclined;
}

namespace {

template <typename E, std::size_t N>
std::optional<E> enum_from_id(const std::array<std::pair<E, std::string_view>, N>& table, std::string_view id) {
    for (const auto& [value, name] : table)
        if (name == id) return value;
    return std::nullopt;
}

constexpr std::array<std::pair<BaggageType, std::string_view>, 4> kBaggage = {{
    {BaggageType::suitcase, "suitcase"},
    {BaggageType::backpack, "backpack"},
    {BaggageType::gym_bag, "gym_bag"},
    {BaggageType::fanny_pack, "fanny_pack"},
}};

constexpr std::array<std::pair<ClutterLevel, std::string_view>, 4> kClutter = {{
    {ClutterLevel::Limited, "Limited"},
    {ClutterLevel::Medium, "Medium"},
    {ClutterLevel::Heavy, "Heavy"},
    {ClutterLevel::Extreme, "Extreme"},
}};

constexpr std::array<std::pair<LocationLabel, std::string_view>, 2> kLocation = {{
    {LocationLabel::center, "center"},
    {LocationLabel::corner, "corner"},
}};

constexpr std::array<std::pair<PoseLabel, std::string_view>, 3> kPose = {{
    {PoseLabel::horizontal, "horizontal"},
    {PoseLabel::vertical, "vertical"},
    {PoseLabel::inclined, "inclined"},
}};

}  // namespace

std::string_view baggage_type_id(BaggageType b) { return kBaggage[static_cast<int>(b)].second; }
std::optional<BaggageType> baggage_type_from_id(std::string_view id) { return enum_from_id(kBaggage, id); }
std::string_view clutter_id(ClutterLevel c) { return kClutter[static_cast<int>(c)].second; }
std::optional<ClutterLevel> clutter_from_id(std::string_view id) { return enum_from_id(kClutter, id); }
std::string_view location_label_id(LocationLabel l) { return kLocation[static_cast<int>(l)].second; }
std::optional<LocationLabel> location_label_from_id(std::string_view id) { return enum_from_id(kLocation, id); }
std::string_view pose_label_id(PoseLabel p) { return kPose[static_cast<int>(p)].second; }
std::optional<PoseLabel> pose_label_from_id(std::string_view id) { return enum_from_id(kPose, id); }

}  // namespace stcray
