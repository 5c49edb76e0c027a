#include "roadcarbon/lca.hpp"

#include "roadcarbon/errors.hpp"

#include <doctest.h>

#include <random>
#include <sstream>

using namespace roadcarbon;
using namespace roadcarbon::lca;
using roadcarbon::quantities::BillOfQuantities;
using roadcarbon::quantities::BoqItem;
using roadcarbon::quantities::Unit;

namespace {

FactorDatabase demo_db()
{
    return FactorDatabase::from_rows({
        {"aggregate", "GWP", Unit::cubic_metre, 450.0},
        {"excavation", "GWP", Unit::cubic_metre, 40.0},
        {"imported_fill", "GWP", Unit::cubic_metre, 200.0},
        {"haulage", "GWP", Unit::tonne, 20.0},
    });
}

BillOfQuantities boq_of(std::vector<BoqItem> items, double length = 1000.0, double width = 4.0)
{
    BillOfQuantities boq;
    boq.items = std::move(items);
    boq.road_length_m = length;
    boq.road_area_m2 = length * width;
    return boq;
}

} // namespace

TEST_CASE("factor table: empty, single row, duplicates")
{
    const auto empty = FactorDatabase::from_rows({});
    CHECK(empty.size() == 0);
    CHECK(empty.categories().empty());

    const auto single = FactorDatabase::from_rows({{"aggregate", "GWP", Unit::cubic_metre, 5.0}});
    REQUIRE(single.find("aggregate", "GWP") != nullptr);
    CHECK(single.find("aggregate", "GWP")->factor_kgco2e == 5.0);
    CHECK(single.find("aggregate", "other") == nullptr);

    CHECK_THROWS_WITH_AS(FactorDatabase::from_rows({
                             {"aggregate", "GWP", Unit::cubic_metre, 5.0},
                             {"aggregate", "GWP", Unit::cubic_metre, 7.0},
                         }),
                         doctest::Contains("row 2"), SchemaError);

    CHECK_THROWS_AS(FactorDatabase::from_rows({{"aggregate", "GWP", Unit::cubic_metre, -1.0}}),
                    SchemaError);
}

TEST_CASE("factor table CSV parsing")
{
    std::stringstream csv("material_id,category,unit,factor_kgco2e_per_unit\n"
                          "aggregate,GWP,m3,450\n"
                          "haulage,GWP,t,20\n");
    const auto db = FactorDatabase::from_csv(csv, "demo");
    CHECK(db.size() == 2);
    CHECK(db.categories() == std::vector<std::string>{"GWP"});

    std::stringstream bad_header("material,category\n");
    CHECK_THROWS_AS(FactorDatabase::from_csv(bad_header, "bad"), SchemaError);

    std::stringstream bad_unit("material_id,category,unit,factor_kgco2e_per_unit\n"
                               "aggregate,GWP,kg,450\n");
    CHECK_THROWS_WITH_AS(FactorDatabase::from_csv(bad_unit, "bad"), doctest::Contains("line 2"),
                         SchemaError);
}

TEST_CASE("characterize: empty BoQ, single product, and the dot-product oracle")
{
    const auto db = demo_db();

    auto totals = characterize(boq_of({}), db);
    CHECK(totals.at("GWP") == 0.0);

    totals = characterize(boq_of({{"aggregate", 2.0, Unit::cubic_metre}}), db);
    CHECK(totals.at("GWP") == doctest::Approx(900.0));

    // Five items against an independent item-by-item summation.
    const std::vector<BoqItem> items = {
        {"aggregate", 123.4, Unit::cubic_metre}, {"excavation", 55.0, Unit::cubic_metre},
        {"imported_fill", 7.75, Unit::cubic_metre}, {"haulage", 900.1, Unit::tonne},
        {"aggregate", 10.0, Unit::cubic_metre},
    };
    long double expected = 0.0L;
    for (const auto& item : items) {
        expected += static_cast<long double>(db.find(item.material_id, "GWP")->factor_kgco2e) *
                    item.quantity;
    }
    totals = characterize(boq_of(items), db);
    CHECK(totals.at("GWP") == doctest::Approx(static_cast<double>(expected)).epsilon(1e-12));
}

TEST_CASE("characterize: missing factors list every offending material")
{
    const auto db = demo_db();
    try {
        characterize(boq_of({{"bitumen", 1.0, Unit::tonne}, {"steel", 2.0, Unit::tonne}}), db);
        FAIL("expected AssessmentError");
    } catch (const AssessmentError& e) {
        REQUIRE(e.missing_materials().size() == 2);
        CHECK(e.missing_materials()[0] == "bitumen (GWP)");
        CHECK(e.missing_materials()[1] == "steel (GWP)");
    }
}

TEST_CASE("characterize: unit mismatch is a schema error")
{
    const auto db = demo_db();
    CHECK_THROWS_AS(characterize(boq_of({{"aggregate", 1.0, Unit::tonne}}), db), SchemaError);
}

TEST_CASE("characterisation is linear over random BoQ pairs")
{
    const auto db = demo_db();
    std::mt19937_64 rng(97);
    const std::vector<std::string> ids = {"aggregate", "excavation", "imported_fill", "haulage"};

    auto random_boq = [&]() {
        std::vector<BoqItem> items;
        for (const auto& id : ids) {
            if (rng() % 4 != 0) {
                const auto unit = id == "haulage" ? Unit::tonne : Unit::cubic_metre;
                items.push_back({id, static_cast<double>(rng() % 100000) / 10.0, unit});
            }
        }
        return boq_of(items);
    };

    for (int trial = 0; trial < 200; ++trial) {
        const auto b1 = random_boq();
        const auto b2 = random_boq();
        const double a = static_cast<double>(rng() % 1000) / 100.0;
        const double b = static_cast<double>(rng() % 1000) / 100.0;

        BillOfQuantities combined = boq_of({});
        for (const auto& item : b1.items) {
            combined.items.push_back({item.material_id, a * item.quantity, item.unit});
        }
        for (const auto& item : b2.items) {
            combined.items.push_back({item.material_id, b * item.quantity, item.unit});
        }

        const double lhs = characterize(combined, db).at("GWP");
        const double rhs =
            a * characterize(b1, db).at("GWP") + b * characterize(b2, db).at("GWP");
        CHECK(lhs == doctest::Approx(rhs).epsilon(1e-9));
    }
}

TEST_CASE("normalize: identity, zero, and elementwise division")
{
    CategoryTotals totals{{"GWP", 10.0}, {"water", 40.0}};
    CategoryTotals refs{{"GWP", 2.0}, {"water", 8.0}};
    const auto normalised = normalize(totals, refs);
    CHECK(normalised.at("GWP") == doctest::Approx(5.0));
    CHECK(normalised.at("water") == doctest::Approx(5.0));

    CHECK(normalize({{"GWP", 7.5}}, {{"GWP", 7.5}}).at("GWP") == doctest::Approx(1.0));
    CHECK(normalize({{"GWP", 0.0}}, {{"GWP", 3.0}}).at("GWP") == 0.0);

    CHECK_THROWS_AS(normalize({{"GWP", 1.0}}, {{"GWP", 0.0}}), ConfigError);
    CHECK_THROWS_AS(normalize({{"GWP", 1.0}}, {}), ConfigError);
}

TEST_CASE("weight: zero weights, identity, weighted sum")
{
    CHECK(weight({{"GWP", 5.0}}, {{"GWP", 0.0}}) == 0.0);
    CHECK(weight({{"GWP", 5.0}}, {{"GWP", 1.0}}) == doctest::Approx(5.0));
    CHECK(weight({{"a", 5.0}, {"b", 5.0}}, {{"a", 0.3}, {"b", 0.7}}) == doctest::Approx(5.0));
    CHECK_THROWS_AS(weight({{"GWP", 1.0}}, {{"GWP", -1.0}}), ConfigError);
}

TEST_CASE("weighted score scales with the weights but never reorders projects")
{
    const auto db = demo_db();
    const CategoryTotals refs{{"GWP", 1.0e6}};
    std::mt19937_64 rng(41);

    for (int trial = 0; trial < 20; ++trial) {
        const double qty_a = static_cast<double>(rng() % 10000) / 10.0;
        const double qty_b = static_cast<double>(rng() % 10000) / 10.0;
        const auto na = normalize(
            characterize(boq_of({{"aggregate", qty_a, Unit::cubic_metre}}), db), refs);
        const auto nb = normalize(
            characterize(boq_of({{"aggregate", qty_b, Unit::cubic_metre}}), db), refs);

        const double c = 0.5 + static_cast<double>(rng() % 100) / 10.0;
        const CategoryTotals w1{{"GWP", 1.0}};
        const CategoryTotals wc{{"GWP", c}};
        CHECK(weight(na, wc) == doctest::Approx(c * weight(na, w1)).epsilon(1e-12));

        const bool order_base = weight(na, w1) < weight(nb, w1);
        const bool order_scaled = weight(na, wc) < weight(nb, wc);
        if (qty_a != qty_b) {
            CHECK(order_base == order_scaled);
        }
    }
}

TEST_CASE("assess_project: empty BoQ, per-km arithmetic, headline magnitude")
{
    const auto db = demo_db();
    const CategoryTotals refs{{"GWP", 1.0e6}};
    const CategoryTotals weights{{"GWP", 1.0}};

    auto result = assess_project(boq_of({}), db, refs, weights);
    CHECK(result.embodied_tco2e == 0.0);
    CHECK(result.per_km_tco2e == 0.0);
    CHECK(result.weighted_single_score == 0.0);

    // A 1 km road whose BoQ characterises to 880000 kg lands on the headline
    // per-km magnitude.
    const double quantity = 880000.0 / 450.0;
    result = assess_project(boq_of({{"aggregate", quantity, Unit::cubic_metre}}, 1000.0), db,
                            refs, weights);
    CHECK(result.embodied_tco2e == doctest::Approx(880.0).epsilon(1e-12));
    CHECK(result.per_km_tco2e == doctest::Approx(880.0).epsilon(1e-12));

    // per_km = embodied / length for arbitrary input
    result = assess_project(boq_of({{"excavation", 123.0, Unit::cubic_metre}}, 3217.0), db, refs,
                            weights);
    CHECK(result.per_km_tco2e ==
          doctest::Approx(result.embodied_tco2e / 3.217).epsilon(1e-12));

    CHECK_THROWS_AS(assess_project(boq_of({}, 0.0), db, refs, weights), DomainError);
}

TEST_CASE("per-km value is invariant under self-concatenation")
{
    const auto db = demo_db();
    const CategoryTotals refs{{"GWP", 1.0e6}};
    const CategoryTotals weights{{"GWP", 1.0}};

    const auto once = boq_of({{"aggregate", 500.0, Unit::cubic_metre},
                              {"haulage", 120.0, Unit::tonne}},
                             1250.0);
    auto twice = boq_of({{"aggregate", 1000.0, Unit::cubic_metre},
                         {"haulage", 240.0, Unit::tonne}},
                        2500.0);

    const auto r1 = assess_project(once, db, refs, weights);
    const auto r2 = assess_project(twice, db, refs, weights);
    CHECK(r2.embodied_tco2e == doctest::Approx(2.0 * r1.embodied_tco2e).epsilon(1e-12));
    CHECK(r2.per_km_tco2e == doctest::Approx(r1.per_km_tco2e).epsilon(1e-12));
}
