#include "roadcarbon/pavement.hpp"

#include "roadcarbon/errors.hpp"

#include <fmt/format.h>

#include <cmath>

namespace roadcarbon::pavement {

namespace {

constexpr std::array<std::string_view, 15> kUscsNames = {
    "GW", "GP", "GM", "GC", "SW", "SP", "SM", "SC", "ML", "CL", "OL", "MH", "CH", "OH", "PT",
};

} // namespace

std::string_view to_string(UscsClass cls)
{
    return kUscsNames[static_cast<std::size_t>(cls)];
}

UscsClass uscs_from_string(std::string_view name)
{
    for (std::size_t i = 0; i < kUscsNames.size(); ++i) {
        if (kUscsNames[i] == name) {
            return static_cast<UscsClass>(i);
        }
    }
    throw DomainError(fmt::format("unknown USCS soil class: '{}'", name));
}

void SoilProfile::validate() const
{
    if (!(cbr_base > 0.0) || !(cbr_base <= 100.0)) {
        throw DomainError(fmt::format("CBR must be in (0, 100], got {}", cbr_base));
    }
}

ClimateSeasons ClimateSeasons::defaults()
{
    ClimateSeasons seasons;
    seasons.frozen = {0.25, 2.0};
    seasons.saturated = {0.10, 0.5};
    seasons.wet = {0.30, 0.75};
    seasons.dry = {0.35, 1.0};
    return seasons;
}

void ClimateSeasons::validate() const
{
    const double sum = frozen.duration_fraction + saturated.duration_fraction +
                       wet.duration_fraction + dry.duration_fraction;
    if (std::abs(sum - 1.0) > 1e-9) {
        throw DomainError(fmt::format("season durations must sum to 1, got {}", sum));
    }
    for (const auto& s : ordered()) {
        if (!(s.duration_fraction >= 0.0)) {
            throw DomainError("season durations must be non-negative");
        }
        if (!(s.cbr_multiplier > 0.0)) {
            throw DomainError("season CBR multipliers must be positive");
        }
    }
    // Moisture ordering: saturated <= wet <= dry, frozen stiffest.
    if (saturated.cbr_multiplier > wet.cbr_multiplier ||
        wet.cbr_multiplier > dry.cbr_multiplier) {
        throw DomainError(fmt::format("season multipliers must satisfy saturated <= wet <= dry "
                                      "({} / {} / {})",
                                      saturated.cbr_multiplier, wet.cbr_multiplier,
                                      dry.cbr_multiplier));
    }
    if (frozen.cbr_multiplier < dry.cbr_multiplier) {
        throw DomainError(fmt::format("frozen multiplier must be >= dry ({} < {})",
                                      frozen.cbr_multiplier, dry.cbr_multiplier));
    }
}

void TrafficDemand::validate() const
{
    if (!(annual_esal >= 0.0)) {
        throw DomainError(fmt::format("annual ESAL must be >= 0, got {}", annual_esal));
    }
    if (design_life_years < 1) {
        throw DomainError(fmt::format("design life must be >= 1 year, got {}",
                                      design_life_years));
    }
}

double resilient_modulus(double cbr)
{
    if (!(cbr > 0.0)) {
        throw DomainError(fmt::format("CBR must be positive, got {}", cbr));
    }
    return 17.6 * std::pow(cbr, 0.64);
}

BaseModulusFactor base_modulus_factor(double h_bs_mm)
{
    if (!(h_bs_mm > 0.0)) {
        throw DomainError(fmt::format("base thickness must be positive, got {}", h_bs_mm));
    }
    const double raw = 0.2 * std::pow(h_bs_mm, 0.45);
    BaseModulusFactor factor;
    if (raw < 2.0) {
        factor.k = 2.0;
        factor.clamped = true;
    } else if (raw > 4.0) {
        factor.k = 4.0;
        factor.clamped = true;
    } else {
        factor.k = raw;
    }
    return factor;
}

double base_modulus(double h_bs_mm, double subgrade_mr_mpa)
{
    if (!(subgrade_mr_mpa > 0.0)) {
        throw DomainError(fmt::format("subgrade modulus must be positive, got {}",
                                      subgrade_mr_mpa));
    }
    return base_modulus_factor(h_bs_mm).k * subgrade_mr_mpa;
}

std::array<double, 4> seasonal_moduli(const SoilProfile& soil, const ClimateSeasons& seasons)
{
    soil.validate();
    seasons.validate();
    const auto states = seasons.ordered();
    std::array<double, 4> moduli{};
    for (std::size_t i = 0; i < states.size(); ++i) {
        moduli[i] = resilient_modulus(soil.cbr_base * states[i].cbr_multiplier);
    }
    return moduli;
}

PowerLawDamageModel::PowerLawDamageModel(PowerLawDamageParams params) : params_(params)
{
    if (!(params_.w0 > 0.0) || !(params_.reference_modulus_mpa > 0.0) ||
        !(params_.reference_thickness_mm > 0.0)) {
        throw ConfigError("damage model reference values must be positive");
    }
}

double PowerLawDamageModel::allowable_esal(double subgrade_mr_mpa, double thickness_mm) const
{
    return params_.w0 *
           std::pow(subgrade_mr_mpa / params_.reference_modulus_mpa, params_.modulus_exponent) *
           std::pow(thickness_mm / params_.reference_thickness_mm, params_.thickness_exponent);
}

void DesignConstants::validate() const
{
    if (!(thickness_min_mm > 0.0) || !(thickness_max_mm >= thickness_min_mm) ||
        !(thickness_step_mm > 0.0)) {
        throw ConfigError(fmt::format("bad thickness search grid [{}, {}] step {}",
                                      thickness_min_mm, thickness_max_mm, thickness_step_mm));
    }
    if (!(aggregate_loss_mm >= 0.0)) {
        throw ConfigError("aggregate loss allowance must be >= 0");
    }
}

double seasonal_damage(double thickness_mm, const SoilProfile& soil,
                       const ClimateSeasons& seasons, const TrafficDemand& traffic,
                       const DamageModel& model)
{
    if (!(thickness_mm > 0.0)) {
        throw DomainError(fmt::format("thickness must be positive, got {}", thickness_mm));
    }
    traffic.validate();
    const auto moduli = seasonal_moduli(soil, seasons);
    const auto states = seasons.ordered();
    const double total_esal = traffic.annual_esal * traffic.design_life_years;

    double damage = 0.0;
    for (std::size_t i = 0; i < states.size(); ++i) {
        const double applied = total_esal * states[i].duration_fraction;
        if (applied == 0.0) {
            continue;
        }
        const double allowable = model.allowable_esal(moduli[i], thickness_mm);
        if (!(allowable > 0.0)) {
            throw DomainError(fmt::format("damage model returned non-positive allowable ESAL {} "
                                          "for modulus {} MPa, thickness {} mm",
                                          allowable, moduli[i], thickness_mm));
        }
        damage += applied / allowable;
    }
    return damage;
}

PavementSection design_thickness(const SoilProfile& soil, const ClimateSeasons& seasons,
                                 const TrafficDemand& traffic, const DesignConstants& constants,
                                 const DamageModel& model)
{
    constants.validate();

    double chosen = -1.0;
    double damage_at_chosen = 0.0;
    double damage_at_max = 0.0;
    double h = constants.thickness_min_mm;
    while (h <= constants.thickness_max_mm + 1e-9) {
        const double damage = seasonal_damage(h, soil, seasons, traffic, model);
        damage_at_max = damage;
        if (damage <= 1.0) {
            chosen = h;
            damage_at_chosen = damage;
            break;
        }
        h += constants.thickness_step_mm;
    }
    if (chosen < 0.0) {
        throw InfeasibleDesignError(
            fmt::format("no thickness in [{}, {}] mm keeps damage <= 1 (damage {} at maximum)",
                        constants.thickness_min_mm, constants.thickness_max_mm, damage_at_max),
            damage_at_max);
    }

    PavementSection section;
    section.aggregate_loss_allowance_mm = constants.aggregate_loss_mm;
    section.base_thickness_mm = chosen + constants.aggregate_loss_mm;
    section.seasonal_subgrade_moduli_mpa = seasonal_moduli(soil, seasons);
    section.base_modulus_mpa =
        base_modulus(section.base_thickness_mm, resilient_modulus(soil.cbr_base));
    section.total_damage = damage_at_chosen;
    return section;
}

} // namespace roadcarbon::pavement
