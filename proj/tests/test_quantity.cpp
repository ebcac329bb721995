#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <random>

#include "inerton/constants.hpp"
#include "inerton/quantity.hpp"
#include "inerton/units.hpp"
#include "test_util.hpp"

using namespace inerton;

TEST_CASE("multiplication multiplies magnitudes and adds exponents") {
    Quantity a = meters(3.0) * meters(2.0);
    CHECK(a.magnitude() == 6.0);
    CHECK(a.dim() == Dimension{0, 2, 0});

    Quantity cube = pow_int(meters(1e-30), 3);
    CHECK(cube.magnitude() == doctest::Approx(1e-90).epsilon(1e-15));
    CHECK(cube.dim() == dim::volume);

    Quantity m = kilograms(9.109e-31) * scalar(1.0);
    CHECK(m.magnitude() == 9.109e-31);
    CHECK(m.dim() == dim::mass);
}

TEST_CASE("multiplication overflow is an error, not an infinity") {
    CHECK_THROWS_WITH_AS(kilograms(1e200) * kilograms(1e200),
                         doctest::Contains("magnitude out of range"), numeric_error);
}

TEST_CASE("addition requires equal dimensions") {
    CHECK((meters(1.0) + meters(1.0)).magnitude() == 2.0);
    CHECK((meters(1.0) + meters(0.0)).magnitude() == 1.0);
    try {
        meters(1.0) + kilograms(1.0);
        FAIL("expected dimension mismatch");
    } catch (const config_error& e) {
        std::string msg = e.what();
        CHECK(msg.find("dimension mismatch") != std::string::npos);
        CHECK(msg.find("[m]") != std::string::npos);
        CHECK(msg.find("[kg]") != std::string::npos);
    }
}

TEST_CASE("randomized dimension mismatches are always rejected") {
    std::mt19937_64 rng(0x51a7e5);
    std::uniform_int_distribution<int> exp_dist(-12, 12);
    int rejected = 0;
    for (int trial = 0; trial < 500; ++trial) {
        Dimension da{exp_dist(rng), exp_dist(rng), exp_dist(rng)};
        Dimension db{exp_dist(rng), exp_dist(rng), exp_dist(rng)};
        if (da == db) continue;
        CHECK_THROWS_AS(Quantity(1.0, da) + Quantity(1.0, db), config_error);
        ++rejected;
    }
    CHECK(rejected > 400);
}

TEST_CASE("algebraic properties over random quantities") {
    std::mt19937_64 rng(0xd1ce);
    std::uniform_real_distribution<double> mag(-20.0, 20.0); // decades
    std::uniform_int_distribution<int> exp_dist(-3, 3);
    for (int trial = 0; trial < 200; ++trial) {
        Dimension da{exp_dist(rng), exp_dist(rng), exp_dist(rng)};
        Dimension db{exp_dist(rng), exp_dist(rng), exp_dist(rng)};
        Dimension dc{exp_dist(rng), exp_dist(rng), exp_dist(rng)};
        Quantity a(std::pow(10.0, mag(rng)), da);
        Quantity b(std::pow(10.0, mag(rng)), db);
        Quantity c(std::pow(10.0, mag(rng)), dc);

        // dimension exponents associate under multiplication
        CHECK(((a * b) * c).dim() == (a * (b * c)).dim());

        // addition commutes
        Quantity a2(std::pow(10.0, mag(rng)), da);
        CHECK((a + a2).magnitude() == (a2 + a).magnitude());

        // the dimensionless identity is exact
        Quantity id = a * scalar(1.0);
        CHECK(id.dim() == a.dim());
        CHECK(rel_err(id.magnitude(), a.magnitude()) <= 1e-15);
    }
}

TEST_CASE("parsing normalizes the model's unit mix to SI") {
    Constants k = Constants::codata();

    Quantity compton = parse_quantity("2.42e-10 cm", k);
    CHECK(compton.dim() == dim::length);
    CHECK(rel_err(compton.magnitude(), 2.42e-12) <= 1e-15);

    Quantity v = parse_quantity("0.6 c", k);
    CHECK(v.dim() == dim::velocity);
    CHECK(rel_err(v.magnitude(), 1.798754748e8) <= 1e-15);

    for (const char* text : {"1 µm/s", "1 μm/s", "1 um/s"}) {
        Quantity slow = parse_quantity(text, k);
        CHECK(slow.dim() == dim::velocity);
        CHECK(rel_err(slow.magnitude(), 1e-6) <= 1e-15);
    }

    CHECK(parse_quantity("1e-30 m", k).magnitude() == 1e-30);
    CHECK(parse_quantity("5 g", k).magnitude() == doctest::Approx(5e-3));
    CHECK(parse_quantity("3 cm/s", k).magnitude() == doctest::Approx(0.03));
    CHECK(parse_quantity("2 J·s", k).dim() == dim::action);
    CHECK(parse_quantity("7 dimensionless", k).dim() == dim::none);
    CHECK(parse_quantity("  1.5e3 s ", k).magnitude() == 1500.0);
    CHECK(parse_quantity("4kg", k).magnitude() == 4.0); // space optional
}

TEST_CASE("parse errors name the problem") {
    Constants k = Constants::codata();
    CHECK_THROWS_WITH_AS(parse_quantity("5 furlong", k), doctest::Contains("unknown unit"),
                         config_error);
    CHECK_THROWS_WITH_AS(parse_quantity("abc", k), doctest::Contains("cannot parse number"),
                         config_error);
    CHECK_THROWS_WITH_AS(parse_quantity("inf kg", k), doctest::Contains("non-finite"),
                         config_error);
    CHECK_THROWS_WITH_AS(parse_quantity("1e400 kg", k), doctest::Contains("out of double range"),
                         config_error);
    CHECK_THROWS_WITH_AS(parse_quantity("5", k), doctest::Contains("missing unit"),
                         config_error);
    CHECK_THROWS_AS(parse_quantity("", k), config_error);
}

TEST_CASE("format / parse round-trips exactly over canonical units") {
    Constants k = Constants::codata();
    std::mt19937_64 rng(0xf0f0);
    std::uniform_real_distribution<double> mag(-90.0, 55.0);
    const Dimension dims[] = {dim::none, dim::mass, dim::length, dim::time, dim::velocity,
                              dim::action};
    for (int trial = 0; trial < 300; ++trial) {
        Dimension d = dims[static_cast<size_t>(trial) % std::size(dims)];
        Quantity q(std::pow(10.0, mag(rng)), d);
        Quantity back = parse_quantity(format_quantity(q), k);
        CHECK(back.dim() == q.dim());
        CHECK(rel_err(back.magnitude(), q.magnitude()) <= 1e-12);
    }
}

TEST_CASE("dimension rendering") {
    CHECK(dim::none.str() == "dimensionless");
    CHECK(dim::velocity.str() == "m/s");
    CHECK(dim::action.str() == "J·s");
    CHECK(Dimension{0, 3, 0}.str() == "m^3");
    CHECK(Dimension{1, 2, -2}.str() == "kg m^2 s^-2");
}

TEST_CASE("codata defaults") {
    Constants k = Constants::codata();
    CHECK(k.c.magnitude() == 299792458.0);
    CHECK(k.h.magnitude() == 6.62607015e-34);
    CHECK(k.preset("electron").magnitude() == 9.1093837015e-31);
    CHECK(k.preset("proton").magnitude() == 1.67262192369e-27);
    CHECK(k.preset("hydrogen").magnitude() == 1.6735e-27);
    CHECK_THROWS_WITH_AS(k.preset("muon"), doctest::Contains("unknown particle preset"),
                         config_error);
}

TEST_CASE("constants override file") {
    Constants k = parse_constants_overrides(
        R"({"c_m_per_s": 3e8, "h_J_s": 6.6e-34, "presets": {"muon": 1.8835e-28}})");
    CHECK(k.c.magnitude() == 3e8);
    CHECK(k.h.magnitude() == 6.6e-34);
    CHECK(k.preset("muon").magnitude() == 1.8835e-28);
    // defaults survive a partial override
    CHECK(k.preset("electron").magnitude() == 9.1093837015e-31);

    Constants partial = parse_constants_overrides(R"({"presets": {"electron": 1e-30}})");
    CHECK(partial.c.magnitude() == 299792458.0);
    CHECK(partial.preset("electron").magnitude() == 1e-30);

    CHECK_THROWS_WITH_AS(parse_constants_overrides(R"({"speed": 1})"),
                         doctest::Contains("unknown key \"speed\""), config_error);
    CHECK_THROWS_AS(parse_constants_overrides(R"({"c_m_per_s": -1})"), config_error);
    CHECK_THROWS_AS(parse_constants_overrides("not json"), config_error);
    CHECK_THROWS_AS(parse_constants_overrides(R"(["array"])"), config_error);
}

TEST_CASE("constants load from file") {
    const char* path = "test_constants_override.json";
    {
        std::ofstream out(path);
        out << R"({"c_m_per_s": 1e8})";
    }
    Constants k = load_constants_file(path);
    CHECK(k.c.magnitude() == 1e8);
    std::remove(path);
    CHECK_THROWS_WITH_AS(load_constants_file("does_not_exist.json"),
                         doctest::Contains("cannot open"), config_error);
}
