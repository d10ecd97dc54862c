#include "stcray/material.hpp"

#include <array>
#include <cmath>

namespace stcray {

MaterialClass classify_material_ratio(double ratio) {
    static constexpr std::array<MaterialClass, 5> kClasses = {
        MaterialClass::Metal, MaterialClass::Inorganic, MaterialClass::Mixed,
        MaterialClass::Organic, MaterialClass::Polymer};
    MaterialClass best = MaterialClass::Metal;
    double best_dist = 1e300;
    for (const MaterialClass c : kClasses) {
        const double d = std::abs(material_ratio(c) - ratio);
        if (d < best_dist) {
            best_dist = d;
            best = c;
        }
    }
    return best;
}

std::string_view material_name(MaterialClass c) {
    switch (c) {
        case MaterialClass::Metal: return "metal";
        case MaterialClass::Organic: return "organic";
        case MaterialClass::Inorganic: return "inorganic";
        case MaterialClass::Polymer: return "polymer";
        case MaterialClass::Mixed: return "mixed";
    }
    return "";
}

}  // namespace stcray
