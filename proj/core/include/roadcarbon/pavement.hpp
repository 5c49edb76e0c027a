#pragma once

#include <array>
#include <string>
#include <string_view>

namespace roadcarbon::pavement {

/// The 15 Unified Soil Classification System groups.
enum class UscsClass {
    GW, GP, GM, GC, SW, SP, SM, SC, ML, CL, OL, MH, CH, OH, PT,
};

constexpr std::array<UscsClass, 15> kAllUscsClasses = {
    UscsClass::GW, UscsClass::GP, UscsClass::GM, UscsClass::GC, UscsClass::SW,
    UscsClass::SP, UscsClass::SM, UscsClass::SC, UscsClass::ML, UscsClass::CL,
    UscsClass::OL, UscsClass::MH, UscsClass::CH, UscsClass::OH, UscsClass::PT,
};

std::string_view to_string(UscsClass cls);
UscsClass uscs_from_string(std::string_view name);

struct SoilProfile {
    UscsClass uscs_class = UscsClass::SM;
    double cbr_base = 10.0; // percent

    void validate() const;
};

struct SeasonState {
    double duration_fraction = 0.25;
    double cbr_multiplier = 1.0;
};

/// The four moisture seasons: frozen winter, saturated spring thaw, wet
/// spring/fall, dry summer. Multipliers scale the base CBR per season.
struct ClimateSeasons {
    SeasonState frozen;
    SeasonState saturated;
    SeasonState wet;
    SeasonState dry;

    static ClimateSeasons defaults();
    void validate() const;

    std::array<SeasonState, 4> ordered() const { return {frozen, saturated, wet, dry}; }
};

struct TrafficDemand {
    double annual_esal = 0.0;
    int design_life_years = 30;

    void validate() const;
};

constexpr double kMpaPerPsi = 0.00689476;

/// Subgrade resilient modulus (MPa) from CBR percent: 17.6 * CBR^0.64.
double resilient_modulus(double cbr);

struct BaseModulusFactor {
    double k = 2.0;
    bool clamped = false;
};

/// Thickness-proportional base stiffness factor k = 0.2 * h^0.45, clamped to
/// [2, 4] with a flag when the raw value falls outside.
BaseModulusFactor base_modulus_factor(double h_bs_mm);

/// Base layer modulus E_BS = k(h) * M_R (MPa).
double base_modulus(double h_bs_mm, double subgrade_mr_mpa);

/// Per-season subgrade moduli, ordered frozen / saturated / wet / dry.
std::array<double, 4> seasonal_moduli(const SoilProfile& soil, const ClimateSeasons& seasons);

/// Allowable-traffic relation for one thickness and subgrade stiffness. The
/// design charts behind it are not public, so the relation is pluggable.
class DamageModel {
public:
    virtual ~DamageModel() = default;
    virtual double allowable_esal(double subgrade_mr_mpa, double thickness_mm) const = 0;
};

struct PowerLawDamageParams {
    double w0 = 5.0e4;            // allowable ESAL at the reference point
    double reference_modulus_mpa = 30.0;
    double reference_thickness_mm = 150.0;
    double modulus_exponent = 3.0;
    double thickness_exponent = 2.0;
};

/// Monotone power law W = w0 * (M_R/M_ref)^a * (h/h_ref)^b.
class PowerLawDamageModel : public DamageModel {
public:
    explicit PowerLawDamageModel(PowerLawDamageParams params = {});
    double allowable_esal(double subgrade_mr_mpa, double thickness_mm) const override;
    const PowerLawDamageParams& params() const noexcept { return params_; }

private:
    PowerLawDamageParams params_;
};

struct DesignConstants {
    double serviceability_loss = 3.0;        // PSI units
    double allowable_rut_depth_mm = 50.8;
    double aggregate_loss_mm = 3.5;
    double target_base_modulus_psi = 30000.0;
    double thickness_min_mm = 100.0;
    double thickness_max_mm = 1000.0;
    double thickness_step_mm = 10.0;

    double target_base_modulus_mpa() const { return target_base_modulus_psi * kMpaPerPsi; }
    void validate() const;
};

/// Miner's-rule damage across the four seasons at one thickness.
double seasonal_damage(double thickness_mm, const SoilProfile& soil,
                       const ClimateSeasons& seasons, const TrafficDemand& traffic,
                       const DamageModel& model);

struct PavementSection {
    double base_thickness_mm = 0.0;          // includes the aggregate-loss allowance
    double base_modulus_mpa = 0.0;
    std::array<double, 4> seasonal_subgrade_moduli_mpa{};
    double total_damage = 0.0;
    double aggregate_loss_allowance_mm = 3.5;
};

/// Smallest grid thickness with damage <= 1, plus the aggregate-loss
/// allowance. Throws InfeasibleDesignError when even the maximum thickness
/// cannot carry the traffic.
PavementSection design_thickness(const SoilProfile& soil, const ClimateSeasons& seasons,
                                 const TrafficDemand& traffic, const DesignConstants& constants,
                                 const DamageModel& model);

} // namespace roadcarbon::pavement
