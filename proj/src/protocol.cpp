#include "stcray/protocol.hpp"

#include <cmath>

#include "stcray/errors.hpp"

namespace stcray {

std::size_t ProtocolConfig::threat_cell_count() const {
    const std::size_t sublevels = static_cast<std::size_t>(sublevel_max - sublevel_min + 1);
    return categories.size() * locations.size() * poses.size() * clutter_levels.size() * sublevels *
           baggage_types.size() * static_cast<std::size_t>(repeats_per_cell);
}

std::vector<SceneSpec> enumerate_grid(const ProtocolConfig& config) {
    if (config.categories.empty()) throw EmptyAxis("categories axis is empty");
    if (config.locations.empty()) throw EmptyAxis("locations axis is empty");
    if (config.poses.empty()) throw EmptyAxis("poses axis is empty");
    if (config.clutter_levels.empty()) throw EmptyAxis("clutter axis is empty");
    if (config.baggage_types.empty()) throw EmptyAxis("baggage axis is empty");
    if (config.sublevel_min < 1 || config.sublevel_max > 10 || config.sublevel_min > config.sublevel_max)
        throw EmptyAxis("sublevel range invalid");
    if (config.repeats_per_cell < 1) throw EmptyAxis("repeats_per_cell must be >= 1");
    if (config.nonthreat_fraction < 0.0 || config.nonthreat_fraction >= 1.0)
        throw EmptyAxis("nonthreat_fraction must be in [0,1)");

    std::vector<SceneSpec> specs;
    specs.reserve(config.threat_cell_count());
    std::uint64_t index = 0;

    auto base_spec = [&](std::uint64_t i) {
        SceneSpec spec;
        spec.seed = derive_seed(config.master_seed, i);
        spec.image_width = config.image_width;
        spec.image_height = config.image_height;
        spec.volume_dims = {config.image_width, config.image_height, config.volume_depth};
        return spec;
    };

    for (const ThreatCategory cat : config.categories)
        for (const LocationLabel loc : config.locations)
            for (const PoseLabel pose : config.poses)
                for (const ClutterLevel clutter : config.clutter_levels)
                    for (int sub = config.sublevel_min; sub <= config.sublevel_max; ++sub)
                        for (const BaggageType bag : config.baggage_types)
                            for (int rep = 0; rep < config.repeats_per_cell; ++rep) {
                                SceneSpec spec = base_spec(index);
                                spec.baggage_type = bag;
                                spec.clutter = clutter;
                                spec.concealment_sublevel = sub;
                                ThreatRequest req{cat, loc, pose, ExplosiveVariant::cohesive};
                                if (cat == ThreatCategory::explosive) {
                                    Rng variant_rng(spec.seed, 17);
                                    req.variant = variant_rng.chance(0.5) ? ExplosiveVariant::dispersed
                                                                          : ExplosiveVariant::cohesive;
                                }
                                spec.threats = {req};
                                specs.push_back(std::move(spec));
                                ++index;
                            }

    const auto nonthreat_count =
        static_cast<std::size_t>(std::ceil(config.nonthreat_fraction * static_cast<double>(specs.size())));
    for (std::size_t k = 0; k < nonthreat_count; ++k) {
        SceneSpec spec = base_spec(index);
        spec.baggage_type = config.baggage_types[k % config.baggage_types.size()];
        spec.clutter = config.clutter_levels[k % config.clutter_levels.size()];
        spec.concealment_sublevel = config.sublevel_min;
        spec.threats = {};
        specs.push_back(std::move(spec));
        ++index;
    }
    return specs;
}

std::string_view occluder_rule_id(OccluderRule r) {
    switch (r) {
        case OccluderRule::beside: return "beside";
        case OccluderRule::partially_over: return "partially_over";
        case OccluderRule::fully_over: return "fully_over";
        case OccluderRule::layered_over: return "layered_over";
    }
    return "";
}

namespace {

const std::vector<std::string>& organic_occluder_names() {
    static const std::vector<std::string> names = {"clothes", "books", "towels"};
    return names;
}

const std::vector<std::string>& medium_occluder_names() {
    static const std::vector<std::string> names = {"cables", "hangers", "umbrella"};
    return names;
}

const std::vector<std::string>& metal_occluder_names() {
    static const std::vector<std::string> names = {"metal grid", "metal sheets", "chain"};
    return names;
}

MaterialClass medium_material(const std::string& name) {
    return name == "hangers" ? MaterialClass::Metal : MaterialClass::Mixed;
}

PlannedOccluder organic(Rng& rng, OccluderRule rule, int layer = 1) {
    return {rng.pick(organic_occluder_names()), MaterialClass::Organic, rule, layer};
}

PlannedOccluder medium(Rng& rng, OccluderRule rule, int layer = 1) {
    const std::string name = rng.pick(medium_occluder_names());
    return {name, medium_material(name), rule, layer};
}

PlannedOccluder metal(Rng& rng, OccluderRule rule, int layer = 1) {
    return {rng.pick(metal_occluder_names()), MaterialClass::Metal, rule, layer};
}

}  // namespace

OccluderPlan occluders_for(int sublevel, ThreatCategory threat, Rng& rng) {
    (void)threat;  // the ladder is shared; occluder sizing adapts at placement
    OccluderPlan plan;
    plan.sublevel = sublevel;
    switch (sublevel) {
        case 1:
            break;  // threat fully visible
        case 2:
            plan.occluders = {organic(rng, OccluderRule::partially_over)};
            break;
        case 3:
            plan.occluders = {organic(rng, OccluderRule::partially_over), organic(rng, OccluderRule::beside)};
            break;
        case 4:
            plan.occluders = {organic(rng, OccluderRule::fully_over)};
            break;
        case 5:
            plan.occluders = {medium(rng, OccluderRule::fully_over), organic(rng, OccluderRule::beside)};
            break;
        case 6:
            plan.occluders = {medium(rng, OccluderRule::fully_over), organic(rng, OccluderRule::partially_over)};
            break;
        case 7:
            plan.occluders = {medium(rng, OccluderRule::fully_over), metal(rng, OccluderRule::partially_over)};
            break;
        case 8:
            plan.occluders = {metal(rng, OccluderRule::fully_over)};
            break;
        case 9:
            plan.occluders = {metal(rng, OccluderRule::fully_over), organic(rng, OccluderRule::layered_over, 0)};
            break;
        default:
            plan.occluders = {metal(rng, OccluderRule::layered_over, 1), metal(rng, OccluderRule::fully_over),
                              organic(rng, OccluderRule::layered_over, 0)};
            break;
    }
    return plan;
}

}  // namespace stcray
