#include "roadcarbon/quantities.hpp"

#include "roadcarbon/errors.hpp"

#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <map>
#include <random>
#include <sstream>

using namespace roadcarbon;
using namespace roadcarbon::quantities;

namespace {

terrain::Alignment road_of(double length, double width)
{
    terrain::Alignment alignment;
    alignment.vertices = {{0.0, 0.0}, {length, 0.0}};
    alignment.width = width;
    alignment.design_grade = {0.0, 0.0};
    return alignment;
}

pavement::PavementSection section_of(double thickness_mm)
{
    pavement::PavementSection section;
    section.base_thickness_mm = thickness_mm;
    return section;
}

} // namespace

TEST_CASE("aggregate_volume: box volume and width linearity")
{
    const auto item = aggregate_volume(road_of(1000.0, 4.0), section_of(250.0));
    CHECK(item.material_id == material::aggregate);
    CHECK(item.unit == Unit::cubic_metre);
    CHECK(item.quantity == doctest::Approx(1000.0));

    CHECK_THROWS_AS(aggregate_volume(road_of(1000.0, 4.0), section_of(0.0)), DomainError);

    const auto narrow = aggregate_volume(road_of(500.0, 3.5), section_of(200.0));
    const auto wide = aggregate_volume(road_of(500.0, 4.0), section_of(200.0));
    CHECK(wide.quantity / narrow.quantity == doctest::Approx(40.0 / 35.0).epsilon(1e-12));
    CHECK(wide.quantity > narrow.quantity);
}

TEST_CASE("earthworks_quantities: cut only, fill only, and netting with reuse")
{
    const EarthworksConfig config;

    auto items = earthworks_quantities(1000.0, 0.0, config);
    REQUIRE(items.size() == 1);
    CHECK(items[0].material_id == material::excavation);
    CHECK(items[0].quantity == doctest::Approx(1000.0));

    items = earthworks_quantities(0.0, 500.0, config);
    REQUIRE(items.size() == 2);
    CHECK(items[0].material_id == material::imported_fill);
    CHECK(items[0].quantity == doctest::Approx(500.0));
    CHECK(items[1].material_id == material::haulage);
    CHECK(items[1].unit == Unit::tonne);
    CHECK(items[1].quantity == doctest::Approx(500.0 * 1.8));

    // reuse 0.8: imported = 1000 - 0.8 * 1000 = 200
    items = earthworks_quantities(1000.0, 1000.0, config);
    REQUIRE(items.size() == 3);
    std::map<std::string, double> by_id;
    for (const auto& item : items) {
        by_id[item.material_id] = item.quantity;
    }
    CHECK(by_id[std::string(material::excavation)] == doctest::Approx(1000.0));
    CHECK(by_id[std::string(material::imported_fill)] == doctest::Approx(200.0));
    CHECK(by_id[std::string(material::haulage)] == doctest::Approx(360.0));

    CHECK_THROWS_AS(earthworks_quantities(-1.0, 0.0, config), DomainError);
}

TEST_CASE("drainage_quantities: unlined, zero length, and the trapezoid oracle")
{
    const EarthworksConfig config;
    hydrology::Ditch ditch;
    ditch.bottom_width_m = 0.5;
    ditch.side_slope = 1.0;
    ditch.depth_m = 0.5;
    const std::vector<hydrology::Ditch> ditches = {ditch};
    const std::vector<double> hundred = {100.0};
    const std::vector<double> zero = {0.0};

    CHECK(drainage_quantities(ditches, DitchLining::none, hundred, config).empty());
    CHECK(drainage_quantities(ditches, DitchLining::concrete, zero, config).empty());

    // perimeter = 0.5 + 2 * 0.5 * sqrt(2); volume = perimeter * 0.1 * 100
    const double perimeter = 0.5 + 2.0 * 0.5 * std::sqrt(2.0);
    auto items = drainage_quantities(ditches, DitchLining::concrete, hundred, config);
    REQUIRE(items.size() == 1);
    CHECK(items[0].material_id == material::concrete);
    CHECK(items[0].quantity == doctest::Approx(perimeter * 0.1 * 100.0).epsilon(1e-12));

    items = drainage_quantities(ditches, DitchLining::riprap, hundred, config);
    REQUIRE(items.size() == 1);
    CHECK(items[0].material_id == material::riprap);
    CHECK(items[0].unit == Unit::tonne);
    CHECK(items[0].quantity == doctest::Approx(perimeter * 100.0 * 0.4).epsilon(1e-12));

    CHECK_THROWS_AS(drainage_quantities(ditches, DitchLining::concrete, {}, config),
                    DomainError);
}

TEST_CASE("assemble_boq: empty parts keep the road geometry")
{
    const auto road = road_of(750.0, 4.0);
    const auto boq = assemble_boq({}, road);
    CHECK(boq.items.empty());
    CHECK(boq.road_length_m == doctest::Approx(750.0));
    CHECK(boq.road_area_m2 == doctest::Approx(3000.0));
}

TEST_CASE("assemble_boq: duplicate materials merge additively")
{
    const auto road = road_of(100.0, 3.5);
    const std::vector<std::vector<BoqItem>> parts = {
        {{std::string(material::aggregate), 100.0, Unit::cubic_metre}},
        {{std::string(material::aggregate), 50.0, Unit::cubic_metre}},
    };
    const auto boq = assemble_boq(parts, road);
    REQUIRE(boq.items.size() == 1);
    CHECK(boq.items[0].quantity == doctest::Approx(150.0));
}

TEST_CASE("assemble_boq: unit mismatch for one material is a schema error")
{
    const auto road = road_of(100.0, 3.5);
    const std::vector<std::vector<BoqItem>> parts = {
        {{std::string(material::aggregate), 100.0, Unit::cubic_metre}},
        {{std::string(material::aggregate), 50.0, Unit::tonne}},
    };
    CHECK_THROWS_AS(assemble_boq(parts, road), SchemaError);
}

TEST_CASE("assemble_boq: merge equals a brute-force group-by and is order independent")
{
    std::mt19937_64 rng(17);
    const std::vector<std::string> ids = {"aggregate", "excavation", "imported_fill", "concrete"};

    std::vector<BoqItem> pool;
    for (int i = 0; i < 40; ++i) {
        pool.push_back({ids[rng() % ids.size()],
                        static_cast<double>(rng() % 10000) / 10.0, Unit::cubic_metre});
    }

    std::map<std::string, double> expected;
    for (const auto& item : pool) {
        expected[item.material_id] += item.quantity;
    }

    const auto road = road_of(100.0, 4.0);
    std::vector<std::vector<BoqItem>> parts = {{pool.begin(), pool.begin() + 13},
                                               {pool.begin() + 13, pool.begin() + 25},
                                               {pool.begin() + 25, pool.end()}};
    const auto merged = assemble_boq(parts, road);
    REQUIRE(merged.items.size() == expected.size());
    for (const auto& item : merged.items) {
        CHECK(item.quantity == doctest::Approx(expected[item.material_id]).epsilon(1e-12));
    }

    // Any permutation of the parts yields identical quantities.
    std::vector<std::vector<BoqItem>> shuffled = {parts[2], parts[0], parts[1]};
    const auto remerged = assemble_boq(shuffled, road);
    REQUIRE(remerged.items.size() == merged.items.size());
    for (std::size_t i = 0; i < merged.items.size(); ++i) {
        CHECK(remerged.items[i].material_id == merged.items[i].material_id);
        CHECK(remerged.items[i].quantity == doctest::Approx(merged.items[i].quantity));
    }
}

TEST_CASE("BoQ CSV has fixed columns and six significant digits")
{
    BillOfQuantities boq;
    boq.items = {{"aggregate", 1234.5678, Unit::cubic_metre},
                 {"haulage", 0.00012345649, Unit::tonne}};
    boq.road_area_m2 = 400.0;
    boq.road_length_m = 100.0;

    std::ostringstream out;
    write_boq_csv(boq, out);
    CHECK(out.str() == "material_id,quantity,unit\n"
                       "aggregate,1234.57,m3\n"
                       "haulage,0.000123456,t\n");
}

TEST_CASE("unit and lining names round trip")
{
    for (const auto unit : {Unit::cubic_metre, Unit::tonne, Unit::square_metre, Unit::metre}) {
        CHECK(unit_from_string(to_string(unit)) == unit);
    }
    CHECK_THROWS_AS(unit_from_string("kg"), SchemaError);
    for (const auto lining : {DitchLining::none, DitchLining::concrete, DitchLining::riprap}) {
        CHECK(lining_from_string(to_string(lining)) == lining);
    }
    CHECK_THROWS_AS(lining_from_string("steel"), SchemaError);
}
