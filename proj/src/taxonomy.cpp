#include "stcray/taxonomy.hpp"

#include <cctype>

namespace stcray {

namespace {

struct CategoryNames {
    ThreatCategory cat;
    std::string_view id;
    std::string_view display;
};

constexpr std::array<CategoryNames, 21> kNames = {{
    {ThreatCategory::explosive, "explosive", "explosive"},
    {ThreatCategory::gun, "gun", "gun"},
    {ThreatCategory::three_d_printed_gun, "3d_printed_gun", "3d printed gun"},
    {ThreatCategory::knife, "knife", "knife"},
    {ThreatCategory::cutter, "cutter", "cutter"},
    {ThreatCategory::blade, "blade", "blade"},
    {ThreatCategory::shaving_razor, "shaving_razor", "shaving razor"},
    {ThreatCategory::lighter, "lighter", "lighter"},
    {ThreatCategory::syringe, "syringe", "syringe"},
    {ThreatCategory::battery, "battery", "battery"},
    {ThreatCategory::nail_cutter, "nail_cutter", "nail cutter"},
    {ThreatCategory::other_sharp_items, "other_sharp_items", "other sharp items"},
    {ThreatCategory::powerbank, "powerbank", "powerbank"},
    {ThreatCategory::scissors, "scissors", "scissors"},
    {ThreatCategory::hammer, "hammer", "hammer"},
    {ThreatCategory::pliers, "pliers", "pliers"},
    {ThreatCategory::wrench, "wrench", "wrench"},
    {ThreatCategory::screwdriver, "screwdriver", "screwdriver"},
    {ThreatCategory::handcuffs, "handcuffs", "handcuffs"},
    {ThreatCategory::bullet, "bullet", "bullet"},
    {ThreatCategory::nonthreat, "nonthreat", "nonthreat"},
}};

}  // namespace

const std::array<ThreatCategory, kThreatCategoryCount>& all_threat_categories() {
    static const std::array<ThreatCategory, kThreatCategoryCount> cats = [] {
        std::array<ThreatCategory, kThreatCategoryCount> out{};
        for (int i = 0; i < kThreatCategoryCount; ++i) out[i] = kNames[i].cat;
        return out;
    }();
    return cats;
}

std::string_view category_id(ThreatCategory c) { return kNames[static_cast<int>(c)].id; }

std::string_view category_display(ThreatCategory c) { return kNames[static_cast<int>(c)].display; }

std::string category_title(ThreatCategory c) {
    const std::string_view display = category_display(c);
    std::string out(display);
    bool start = true;
    for (auto& ch : out) {
        if (start) ch = static_cast<char>(std::toupper(static_cast<unsigned char>(ch)));
        start = (ch == ' ');
    }
    if (c == ThreatCategory::three_d_printed_gun) out = "3D Printed Gun";
    return out;
}

std::optional<ThreatCategory> category_from_id(std::string_view id) {
    for (const auto& n : kNames)
        if (n.id == id) return n.cat;
    return std::nullopt;
}

const std::vector<std::string>& classification_vocabulary() {
    static const std::vector<std::string> vocab = [] {
        std::vector<std::string> out;
        out.reserve(kNames.size());
        for (const auto& n : kNames) out.emplace_back(n.display);
        return out;
    }();
    return vocab;
}

const std::string& classification_vocabulary_joined() {
    static const std::string joined = [] {
        std::string out;
        for (const auto& label : classification_vocabulary()) {
            if (!out.empty()) out += ", ";
            out += label;
        }
        return out;
    }();
    return joined;
}

}  // namespace stcray
