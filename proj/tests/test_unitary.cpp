#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "hecke/unitary.hpp"
#include "hecke/snchar.hpp"

using namespace hecke;

namespace {
CharacterVector cv(std::vector<Rational> v) { return CharacterVector(std::move(v)); }
}

TEST_CASE("speh_central_character") {
    CHECK(speh_central_character(SpehFactor(2, 2)).real_part() ==
          cv({Rational(1), Rational(0), Rational(-1), Rational(0)}));
    CHECK(speh_central_character(SpehFactor(1, 1)).real_part() == cv({Rational(0)}));
    CHECK(speh_central_character(SpehFactor(3, 2)).real_part() ==
          cv({Rational(3, 2), Rational(1, 2), Rational(-1, 2), Rational(-3, 2), Rational(1, 2),
              Rational(-1, 2)}));
    // as a multiset, equals the c-content of the box at c = (d-m)/2, all md <= 12
    for (int m = 1; m <= 12; ++m)
        for (int d = 1; m * d <= 12; ++d) {
            SpehFactor f(m, d);
            CHECK(speh_central_character(f).real_part() ==
                  cv(c_content(f.box(), Rational(d - m, 2))));
            CHECK(speh_central_character(f).real_part() ==
                  middle_element(f.hook_string().partition()));
        }
}

TEST_CASE("central_character of products and twists") {
    UnitaryModule single({SpehFactor(2, 2)});
    CHECK(central_character(single).real_part() ==
          cv({Rational(1), Rational(0), Rational(-1), Rational(0)}));

    UnitaryModule two({SpehFactor(1, 2), SpehFactor(1, 2)});
    CHECK(central_character(two).real_part() ==
          cv({Rational(1, 2), Rational(-1, 2), Rational(1, 2), Rational(-1, 2)}));

    UnitaryModule cs({ComplementaryFactor(SpehFactor(1, 1), Rational(1, 4))});
    CHECK(central_character(cs).real_part() == cv({Rational(1, 4), Rational(-1, 4)}));
    CHECK(central_character(cs).norm_squared().first == Rational(1, 8));

    UnitaryModule twisted({SpehFactor(2, 1, Rational(1, 3))});
    CHECK_FALSE(central_character(twisted).is_real());
    CHECK(central_character(twisted).real_part() == cv({Rational(1, 2), Rational(-1, 2)}));

    // invariance under permuting factors is by construction: multisets
    UnitaryModule ab({SpehFactor(2, 1), SpehFactor(1, 2)});
    UnitaryModule ba({SpehFactor(1, 2), SpehFactor(2, 1)});
    CHECK(ab == ba);
    CHECK(central_character(ab) == central_character(ba));
}

TEST_CASE("speh_langlands") {
    LanglandsDatum d22 = speh_langlands(SpehFactor(2, 2));
    CHECK(d22.lambda == Composition{2, 2});
    REQUIRE(d22.nu.size() == 2);
    CHECK(d22.nu[0].first == Rational(1, 2));
    CHECK(d22.nu[1].first == Rational(-1, 2));
    CHECK(d22.dominant());

    LanglandsDatum d11 = speh_langlands(SpehFactor(1, 1));
    CHECK(d11.lambda == Composition{1});
    CHECK(d11.nu[0].first == Rational(0));

    LanglandsDatum d31 = speh_langlands(SpehFactor(3, 1));
    CHECK(d31.lambda == Composition{1, 1, 1});
    CHECK(d31.nu[0].first == Rational(1));
    CHECK(d31.nu[1].first == Rational(0));
    CHECK(d31.nu[2].first == Rational(-1));
    CHECK(d31.dominant());

    CHECK_THROWS_AS(speh_langlands(SpehFactor(2, 2, Rational(1))), std::invalid_argument);

    for (int m = 1; m <= 6; ++m)
        for (int d = 1; m * d <= 12; ++d) CHECK(speh_langlands(SpehFactor(m, d)).dominant());
}

TEST_CASE("validate_unitary") {
    CHECK(validate_unitary(UnitaryModule({SpehFactor(2, 3)})).ok);
    CHECK(validate_unitary(UnitaryModule({ComplementaryFactor(SpehFactor(1, 1), Rational(1, 4))})).ok);

    auto bad = validate_unitary(UnitaryModule({ComplementaryFactor(SpehFactor(1, 1), Rational(1, 2))}));
    CHECK_FALSE(bad.ok);
    REQUIRE(bad.violations.size() == 1);

    auto bad2 = validate_unitary(UnitaryModule({ComplementaryFactor(SpehFactor(2, 1), Rational(0))}));
    CHECK_FALSE(bad2.ok);
}

TEST_CASE("restriction_to_W") {
    MultiplicityMap r = restriction_to_W(UnitaryModule({SpehFactor(2, 2)}));
    CHECK(r.size() == 1);
    CHECK(r[Partition{2, 2}] == 1);

    MultiplicityMap r2 = restriction_to_W(UnitaryModule({SpehFactor(1, 1), SpehFactor(1, 1)}));
    CHECK(r2[Partition{2}] == 1);
    CHECK(r2[Partition{1, 1}] == 1);

    MultiplicityMap r3 = restriction_to_W(UnitaryModule({SpehFactor(4, 1)}));
    CHECK(r3.size() == 1);
    CHECK(r3[Partition{4}] == 1);

    CHECK_THROWS_AS(restriction_to_W(UnitaryModule({ComplementaryFactor(SpehFactor(1, 1), Rational(1, 4))})),
                    std::invalid_argument);
    CHECK_THROWS_AS(restriction_to_W(UnitaryModule({SpehFactor(2, 1, Rational(1, 5))})),
                    std::invalid_argument);

    // dimension count: index of the parabolic times factor dimensions, n <= 8
    auto dim_check = [](std::vector<SpehFactor> fs) {
        std::vector<Factor> v(fs.begin(), fs.end());
        UnitaryModule X(v);
        Rational expected(1);
        long long placed = 0;
        for (const SpehFactor& f : fs) {
            expected *= Rational(sn_dimension(f.box()));
            for (int k = 1; k <= f.size(); ++k) expected *= Rational(++placed, k);
        }
        Rational total;
        for (const auto& [mu, mult] : restriction_to_W(X))
            total += Rational(mult * sn_dimension(mu));
        CHECK(total == expected);
    };
    dim_check({SpehFactor(2, 2), SpehFactor(2, 1)});
    dim_check({SpehFactor(1, 2), SpehFactor(1, 2), SpehFactor(1, 1)});
    dim_check({SpehFactor(2, 3), SpehFactor(1, 2)});
    dim_check({SpehFactor(4, 2)});
}

TEST_CASE("module grammar round trip") {
    UnitaryModule X = parse_module("a(2,2)*cs(a(1,1),1/4)");
    CHECK(X.n() == 6);
    CHECK(X.factors().size() == 2);
    CHECK(X.to_string() == "a(2,2)*cs(a(1,1),1/4)");
    CHECK(parse_module(X.to_string()) == X);

    UnitaryModule Y = parse_module("a(1,2)*a(2,1)");
    CHECK(Y.to_string() == "a(2,1)*a(1,2)");  // canonical order
    CHECK(parse_module("a(2,2)@y=1/3").to_string() == "a(2,2)@y=1/3");
    CHECK(parse_module("cs(a(2,1)@y=-1/2,3/8)").n() == 4);
    CHECK(parse_module("cs(a(2,2),3/8)").n() == 8);

    CHECK_THROWS_WITH_AS(parse_module("a(2,2)*"), doctest::Contains("position 7"),
                         std::invalid_argument);
    CHECK_THROWS_AS(parse_module("b(2,2)"), std::invalid_argument);
    CHECK_THROWS_AS(parse_module("a(2,2)junk"), std::invalid_argument);
    CHECK_THROWS_AS(parse_module("cs(cs(a(1,1),1/4),1/4)"), std::invalid_argument);
    CHECK_THROWS_AS(parse_module(""), std::invalid_argument);
    CHECK_THROWS_AS(parse_module("a(0,2)"), std::invalid_argument);
}
