#pragma once

#include <string_view>

namespace stcray {

enum class MaterialClass { Metal, Organic, Inorganic, Polymer, Mixed };

// Per-voxel attenuation coefficients at the two beam energies
// (dimensionless, per voxel length).
struct MaterialProps {
    double mu_low;
    double mu_high;
};

// The table is synthetic but obeys two constraints the renderer relies on:
// mu_low strictly ordered Metal > Inorganic > Organic > Polymer, and the
// high/low ratio separated by >= 0.05 between any two classes so material
// classification from the dual-energy ratio is unambiguous.
constexpr MaterialProps material_props(MaterialClass c) {
    switch (c) {
        case MaterialClass::Metal:     return {0.30, 0.270};   // ratio 0.90
        case MaterialClass::Inorganic: return {0.12, 0.090};   // ratio 0.75
        case MaterialClass::Mixed:     return {0.09, 0.0585};  // ratio 0.65
        case MaterialClass::Organic:   return {0.06, 0.036};   // ratio 0.60
        case MaterialClass::Polymer:   return {0.03, 0.0165};  // ratio 0.55
    }
    return {0.0, 0.0};
}

constexpr double material_ratio(MaterialClass c) {
    const MaterialProps p = material_props(c);
    return p.mu_high / p.mu_low;
}

// Nearest-ratio classification, the inverse of material_props under projection.
MaterialClass classify_material_ratio(double ratio);

std::string_view material_name(MaterialClass c);

}  // namespace stcray
