#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "stcray/material.hpp"
#include "stcray/taxonomy.hpp"

namespace stcray {

struct Vec3i {
    int x = 0;
    int y = 0;
    int z = 0;
    bool operator==(const Vec3i&) const = default;
};

// Euler angles in radians; psi is the in-plane rotation about the beam (z)
// axis, the one orientation labels are derived from.
struct EulerPose {
    double phi = 0.0;
    double theta = 0.0;
    double psi = 0.0;
    bool is_identity() const { return phi == 0.0 && theta == 0.0 && psi == 0.0; }
};

enum class SolidKind { box, cylinder, l_solid };

// Axis-aligned solid in item-local voxel coordinates. A voxel belongs to the
// primitive when its center falls inside the solid.
struct Primitive {
    SolidKind kind = SolidKind::box;
    Vec3i extent;  // all components > 0
    Vec3i offset;  // local placement within the item
};

struct ItemShape {
    std::vector<Primitive> primitives;
    MaterialClass material = MaterialClass::Organic;

    // Tight local bounding extent over all primitives.
    Vec3i bounding_extent() const;
};

enum class ItemRole { threat, occluder, distractor };

struct PlacedItem {
    ItemShape shape;
    std::optional<ThreatCategory> category;  // set for threat-role items
    std::string name;                        // display name ("metal grid", "cables", ...)
    ItemRole role = ItemRole::distractor;
    Vec3i position;   // min-corner offset of the shape's local frame in scene voxels
    EulerPose pose;   // applied about the item center before summation into the scene
    int threat_index = -1;  // metadata.threats index this placement belongs to
};

enum class BaggageType { suitcase, backpack, gym_bag, fanny_pack };
enum class ClutterLevel { Limited, Medium, Heavy, Extreme };
enum class LocationLabel { center, corner };
enum class PoseLabel { horizontal, vertical, inclined };
enum class ExplosiveVariant { cohesive, dispersed };

std::string_view baggage_type_id(BaggageType b);
std::optional<BaggageType> baggage_type_from_id(std::string_view id);
std::string_view clutter_id(ClutterLevel c);
std::optional<ClutterLevel> clutter_from_id(std::string_view id);
std::string_view location_label_id(LocationLabel l);
std::optional<LocationLabel> location_label_from_id(std::string_view id);
std::string_view pose_label_id(PoseLabel p);
std::optional<PoseLabel> pose_label_from_id(std::string_view id);

struct ThreatRequest {
    ThreatCategory category = ThreatCategory::gun;
    LocationLabel location = LocationLabel::center;
    PoseLabel pose = PoseLabel::horizontal;
    // Only meaningful for explosives: whether the device's parts are grouped
    // or spread through the bag.
    ExplosiveVariant variant = ExplosiveVariant::cohesive;
};

struct SceneSpec {
    std::uint64_t seed = 0;
    BaggageType baggage_type = BaggageType::suitcase;
    ClutterLevel clutter = ClutterLevel::Limited;
    int concealment_sublevel = 1;  // 1..10
    std::vector<ThreatRequest> threats;  // empty for nonthreat scenes
    int image_width = 256;
    int image_height = 256;
    Vec3i volume_dims{256, 256, 64};
};

struct ThreatMetadata {
    ThreatCategory category = ThreatCategory::gun;
    LocationLabel location_label = LocationLabel::center;
    PoseLabel orientation_label = PoseLabel::horizontal;
    std::string concealment_phrase;
    std::vector<std::string> occluder_names;
    int concealment_level = 1;
};

struct SceneMetadata {
    std::vector<ThreatMetadata> threats;
    std::vector<std::string> distractor_names;
    BaggageType baggage_type = BaggageType::suitcase;
};

enum class EnergyChannel { low, high };

// Dual-energy attenuation field. Layout is x-fastest, z-major, so one z
// slice is contiguous and projection streams through memory.
struct VoxelVolume {
    Vec3i dims;
    std::vector<double> mu_low;
    std::vector<double> mu_high;

    static VoxelVolume zeros(Vec3i dims);

    std::size_t index(int x, int y, int z) const {
        return static_cast<std::size_t>(x) +
               static_cast<std::size_t>(dims.x) * (static_cast<std::size_t>(y) + static_cast<std::size_t>(dims.y) * z);
    }
    std::size_t size() const { return mu_low.size(); }
    const std::vector<double>& channel(EnergyChannel c) const { return c == EnergyChannel::low ? mu_low : mu_high; }
    std::vector<double>& channel(EnergyChannel c) { return c == EnergyChannel::low ? mu_low : mu_high; }

    double sum(EnergyChannel c) const;

    // Voxelwise superposition; throws DimMismatch.
    void add(const VoxelVolume& other);
};

// Rasterizes the item's primitives, at its position, into a volume of the
// given dims. Voxels inside any primitive carry the material's (mu_low,
// mu_high); overlapping primitives of one item do not stack. The pose is
// not applied here. Throws OutOfBounds when the footprint exceeds dims.
VoxelVolume voxelize(const PlacedItem& item, Vec3i dims);

// center iff the centroid lies within the middle 50% band of both axes
// (inclusive), else corner.
LocationLabel classify_location(double cx, double cy, int width, int height);

// In-plane angle psi folded mod pi: within 15 degrees of 0 -> horizontal,
// within 15 degrees of pi/2 -> vertical, else inclined.
PoseLabel classify_orientation(const EulerPose& pose);

}  // namespace stcray
