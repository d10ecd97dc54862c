#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace stcray {

// Closed label set. `nonthreat` is the 21st classification label but never a
// placed item category.
enum class ThreatCategory {
    explosive,
    gun,
    three_d_printed_gun,
    knife,
    cutter,
    blade,
    shaving_razor,
    lighter,
    syringe,
    battery,
    nail_cutter,
    other_sharp_items,
    powerbank,
    scissors,
    hammer,
    pliers,
    wrench,
    screwdriver,
    handcuffs,
    bullet,
    nonthreat,
};

inline constexpr int kThreatCategoryCount = 20;  // excluding nonthreat

const std::array<ThreatCategory, kThreatCategoryCount>& all_threat_categories();

// Stable identifier used in JSON ("3d_printed_gun", "other_sharp_items", ...).
std::string_view category_id(ThreatCategory c);

// Lowercase display form used in prompts and answers ("3d printed gun").
std::string_view category_display(ThreatCategory c);

// Title form used in question templates ("3D Printed Gun", "Battery").
std::string category_title(ThreatCategory c);

std::optional<ThreatCategory> category_from_id(std::string_view id);

// The 21 display labels (20 threats + "nonthreat") in canonical order, as
// listed in classification prompts.
const std::vector<std::string>& classification_vocabulary();

// Comma-joined vocabulary, for prompt construction.
const std::string& classification_vocabulary_joined();

}  // namespace stcray
