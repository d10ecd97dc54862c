#include "stcray/shapes.hpp"

#include <algorithm>
#include <cmath>

namespace stcray {

namespace {

int scaled(double base, double scale, double jitter) {
    return std::max(1, static_cast<int>(std::lround(base * scale * jitter)));
}

Primitive prim(SolidKind kind, double scale, double jitter, double ex, double ey, double ez, double ox = 0,
               double oy = 0, double oz = 0) {
    Primitive p;
    p.kind = kind;
    p.extent = {scaled(ex, scale, jitter), scaled(ey, scale, jitter), scaled(ez, scale, jitter)};
    p.offset = {scaled(ox, scale, jitter) * (ox < 0 ? -1 : 1), scaled(oy, scale, jitter) * (oy < 0 ? -1 : 1),
                scaled(oz, scale, jitter) * (oz < 0 ? -1 : 1)};
    if (ox == 0) p.offset.x = 0;
    if (oy == 0) p.offset.y = 0;
    if (oz == 0) p.offset.z = 0;
    return p;
}

}  // namespace

ItemShape threat_shape(ThreatCategory cat, double scale, Rng& rng) {
    const double j = rng.uniform_real(0.85, 1.2);  // intra-class size variation
    ItemShape s;
    switch (cat) {
        case ThreatCategory::gun:
            s.material = MaterialClass::Metal;
            s.primitives = {prim(SolidKind::l_solid, scale, j, 34, 24, 6)};
            break;
        case ThreatCategory::three_d_printed_gun:
            s.material = MaterialClass::Polymer;
            s.primitives = {prim(SolidKind::l_solid, scale, j, 34, 24, 8)};
            break;
        case ThreatCategory::knife:
            s.material = MaterialClass::Metal;
            s.primitives = {prim(SolidKind::box, scale, j, 26, 5, 2), prim(SolidKind::box, scale, j, 10, 7, 3, 26, 0, 0)};
            break;
        case ThreatCategory::cutter:
            s.material = MaterialClass::Metal;
            s.primitives = {prim(SolidKind::box, scale, j, 18, 8, 3)};
            break;
        case ThreatCategory::blade:
            s.material = MaterialClass::Metal;
            s.primitives = {prim(SolidKind::box, scale, j, 12, 6, 1)};
            break;
        case ThreatCategory::shaving_razor:
            s.material = MaterialClass::Mixed;
            s.primitives = {prim(SolidKind::box, scale, j, 5, 14, 3), prim(SolidKind::box, scale, j, 12, 5, 3, 0, 14, 0)};
            break;
        case ThreatCategory::lighter:
            // Both metallic and polymer variants exist in the wild.
            s.material = rng.chance(0.5) ? MaterialClass::Metal : MaterialClass::Polymer;
            s.primitives = {prim(SolidKind::cylinder, scale, j, 7, 7, 14)};
            break;
        case ThreatCategory::syringe:
            s.material = MaterialClass::Polymer;
            s.primitives = {prim(SolidKind::cylinder, scale, j, 5, 5, 22)};
            break;
        case ThreatCategory::battery:
            s.material = MaterialClass::Inorganic;
            s.primitives = {prim(SolidKind::cylinder, scale, j, 9, 9, 16)};
            break;
        case ThreatCategory::nail_cutter:
            s.material = MaterialClass::Metal;
            s.primitives = {prim(SolidKind::box, scale, j, 10, 4, 3)};
            break;
        case ThreatCategory::other_sharp_items:
            s.material = MaterialClass::Metal;
            s.primitives = {prim(SolidKind::box, scale, j, 22, 4, 2)};
            break;
        case ThreatCategory::powerbank:
            s.material = MaterialClass::Inorganic;
            s.primitives = {prim(SolidKind::box, scale, j, 24, 12, 5)};
            break;
        case ThreatCategory::scissors:
            s.material = MaterialClass::Metal;
            s.primitives = {prim(SolidKind::l_solid, scale, j, 26, 16, 3)};
            break;
        case ThreatCategory::hammer:
            s.material = MaterialClass::Metal;
            s.primitives = {prim(SolidKind::box, scale, j, 16, 8, 8), prim(SolidKind::box, scale, j, 6, 24, 6, 5, 8, 1)};
            break;
        case ThreatCategory::pliers:
            s.material = MaterialClass::Metal;
            s.primitives = {prim(SolidKind::l_solid, scale, j, 24, 14, 5)};
            break;
        case ThreatCategory::wrench:
            s.material = MaterialClass::Metal;
            s.primitives = {prim(SolidKind::box, scale, j, 28, 7, 4), prim(SolidKind::box, scale, j, 9, 13, 4, 28, -3, 0)};
            break;
        case ThreatCategory::screwdriver:
            s.material = MaterialClass::Mixed;
            s.primitives = {prim(SolidKind::box, scale, j, 26, 5, 5)};
            break;
        case ThreatCategory::handcuffs:
            s.material = MaterialClass::Metal;
            s.primitives = {prim(SolidKind::cylinder, scale, j, 12, 12, 4), prim(SolidKind::cylinder, scale, j, 12, 12, 4, 12, 0, 0)};
            break;
        case ThreatCategory::bullet:
            s.material = MaterialClass::Metal;
            s.primitives = {prim(SolidKind::cylinder, scale, j, 5, 5, 11)};
            break;
        case ThreatCategory::explosive:
        case ThreatCategory::nonthreat:
            // explosive is multi-part, nonthreat is never placed
            s.material = MaterialClass::Organic;
            s.primitives = {prim(SolidKind::box, scale, j, 16, 16, 10)};
            break;
    }
    // Negative offsets would escape the local frame; shift so the min corner is 0.
    Vec3i min_off{0, 0, 0};
    for (const auto& p : s.primitives) {
        min_off.x = std::min(min_off.x, p.offset.x);
        min_off.y = std::min(min_off.y, p.offset.y);
        min_off.z = std::min(min_off.z, p.offset.z);
    }
    for (auto& p : s.primitives) {
        p.offset.x -= min_off.x;
        p.offset.y -= min_off.y;
        p.offset.z -= min_off.z;
    }
    return s;
}

std::vector<ExplosivePart> explosive_part_shapes(double scale, Rng& rng) {
    const double j = rng.uniform_real(0.85, 1.2);
    std::vector<ExplosivePart> parts;
    ItemShape container;
    container.material = MaterialClass::Organic;
    container.primitives = {prim(SolidKind::cylinder, scale, j, 18, 18, 12)};
    parts.push_back({"explosive container", container});

    ItemShape circuit;
    circuit.material = MaterialClass::Mixed;
    circuit.primitives = {prim(SolidKind::box, scale, j, 12, 9, 3)};
    parts.push_back({"circuit", circuit});

    ItemShape cell;
    cell.material = MaterialClass::Inorganic;
    cell.primitives = {prim(SolidKind::cylinder, scale, j, 7, 7, 12)};
    parts.push_back({"power source", cell});
    return parts;
}

DistractorDef sample_distractor(double scale, Rng& rng) {
    struct Def {
        const char* name;
        MaterialClass material;
        SolidKind kind;
        double ex, ey, ez;
    };
    static const std::vector<Def> kPool = {
        {"cables", MaterialClass::Mixed, SolidKind::l_solid, 24, 20, 3},
        {"umbrella", MaterialClass::Mixed, SolidKind::box, 40, 6, 6},
        {"hangers", MaterialClass::Metal, SolidKind::l_solid, 20, 14, 2},
        {"book", MaterialClass::Organic, SolidKind::box, 28, 20, 4},
        {"clothes", MaterialClass::Organic, SolidKind::box, 34, 28, 8},
        {"shoes", MaterialClass::Organic, SolidKind::box, 24, 12, 10},
        {"laptop", MaterialClass::Mixed, SolidKind::box, 38, 28, 3},
        {"water bottle", MaterialClass::Polymer, SolidKind::cylinder, 10, 10, 26},
        {"headphones", MaterialClass::Mixed, SolidKind::l_solid, 16, 16, 5},
        {"charger", MaterialClass::Inorganic, SolidKind::box, 8, 6, 4},
        {"keys", MaterialClass::Metal, SolidKind::box, 8, 4, 1},
        {"toys", MaterialClass::Polymer, SolidKind::box, 14, 10, 8},
        {"spoons", MaterialClass::Metal, SolidKind::box, 16, 4, 2},
        {"toiletries", MaterialClass::Polymer, SolidKind::cylinder, 8, 8, 14},
        {"snacks", MaterialClass::Organic, SolidKind::box, 12, 8, 4},
    };
    const auto& def = kPool[static_cast<std::size_t>(rng.uniform_int(0, static_cast<std::int64_t>(kPool.size()) - 1))];
    const double j = rng.uniform_real(0.8, 1.25);
    ItemShape s;
    s.material = def.material;
    s.primitives = {prim(def.kind, scale, j, def.ex, def.ey, def.ez)};
    return {def.name, s};
}

ItemShape occluder_shape(MaterialClass material, int cover_x, int cover_y, Rng& rng) {
    ItemShape s;
    s.material = material;
    const int depth = static_cast<int>(rng.uniform_int(2, 4));
    s.primitives = {Primitive{SolidKind::box, {std::max(1, cover_x), std::max(1, cover_y), depth}, {0, 0, 0}}};
    return s;
}

}  // namespace stcray
