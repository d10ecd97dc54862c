#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "stcray/rng.hpp"
#include "stcray/scene.hpp"

namespace stcray {

// Enumeration axes for the systematic concealment grid. Scene count is
// |categories| * |locations| * |poses| * |clutter| * |sublevels| * |baggage|
// * repeats, plus ceil(nonthreat_fraction * that) nonthreat scenes.
struct ProtocolConfig {
    std::vector<ThreatCategory> categories;
    std::vector<LocationLabel> locations{LocationLabel::center, LocationLabel::corner};
    std::vector<PoseLabel> poses{PoseLabel::horizontal, PoseLabel::vertical, PoseLabel::inclined};
    std::vector<ClutterLevel> clutter_levels{ClutterLevel::Limited, ClutterLevel::Medium, ClutterLevel::Heavy,
                                             ClutterLevel::Extreme};
    int sublevel_min = 1;
    int sublevel_max = 10;
    std::vector<BaggageType> baggage_types{BaggageType::suitcase, BaggageType::backpack, BaggageType::gym_bag,
                                           BaggageType::fanny_pack};
    int repeats_per_cell = 1;
    double nonthreat_fraction = 0.0;
    std::uint64_t master_seed = 0;

    int image_width = 256;
    int image_height = 256;
    int volume_depth = 64;

    std::size_t threat_cell_count() const;
};

// Deterministic: spec i gets seed derive_seed(master_seed, i). Throws
// EmptyAxis when any axis list is empty or the sublevel range is inverted.
std::vector<SceneSpec> enumerate_grid(const ProtocolConfig& config);

enum class OccluderRule { beside, partially_over, fully_over, layered_over };

std::string_view occluder_rule_id(OccluderRule r);

struct PlannedOccluder {
    std::string name;
    MaterialClass material;
    OccluderRule rule;
    // For layered_over: which layer (0 below the threat, 1 above).
    int layer = 1;
};

struct OccluderPlan {
    int sublevel = 1;
    std::vector<PlannedOccluder> occluders;
};

// Concealment ladder: sublevel 1 leaves the threat visible; low sublevels
// use organic covers, high sublevels stack metal grids and layered sheets.
// Projected coverage of the threat is non-decreasing in sublevel.
OccluderPlan occluders_for(int sublevel, ThreatCategory threat, Rng& rng);

}  // namespace stcray
