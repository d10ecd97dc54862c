#pragma once

#include <string>
#include <vector>

#include "stcray/rng.hpp"
#include "stcray/scene.hpp"

namespace stcray {

// Parametric stand-ins for physical objects. Base extents are tuned for a
// 256x256xZ scene; `scale` shrinks or grows them proportionally (min extent
// clamps at 1 voxel). rng applies a mild per-instance size jitter so a
// category shows intra-class variation.

// Shape for a single-body threat. Explosives are multi-part; use
// explosive_part_shapes instead.
ItemShape threat_shape(ThreatCategory cat, double scale, Rng& rng);

struct ExplosivePart {
    std::string name;  // "explosive container", "circuit", "power source"
    ItemShape shape;
};

// The three linked parts of an improvised explosive device.
std::vector<ExplosivePart> explosive_part_shapes(double scale, Rng& rng);

struct DistractorDef {
    std::string name;
    ItemShape shape;
};

DistractorDef sample_distractor(double scale, Rng& rng);

// Occluder body sized to cover a footprint of cover_x by cover_y voxels in
// projection (depth stays thin).
ItemShape occluder_shape(MaterialClass material, int cover_x, int cover_y, Rng& rng);

}  // namespace stcray
