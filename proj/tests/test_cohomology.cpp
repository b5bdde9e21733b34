#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>

#include "hecke/cohomology.hpp"

using namespace hecke;

namespace {

UnitaryModule speh(int m, int d) { return UnitaryModule({SpehFactor(m, d)}); }

long long class_total(const CohomologyResult& r, const DistinctPartition& lambda) {
    auto sym = r.symmetrized();
    auto it = sym.find(lambda);
    return it == sym.end() ? 0 : it->second;
}

}  // namespace

TEST_CASE("allowed_central_characters") {
    auto a2 = allowed_central_characters(2);
    REQUIRE(a2.size() == 1);
    CHECK(a2[0] == CharacterVector({Rational(1, 2), Rational(-1, 2)}));

    auto a1 = allowed_central_characters(1);
    REQUIRE(a1.size() == 1);
    CHECK(a1[0] == CharacterVector({Rational(0)}));

    auto a3 = allowed_central_characters(3);
    REQUIRE(a3.size() == 2);
    CHECK(a3[0] == CharacterVector({Rational(1), Rational(0), Rational(-1)}));
    CHECK(a3[1] == CharacterVector({Rational(1, 2), Rational(-1, 2), Rational(0)}));
}

TEST_CASE("has_nonzero_dirac decision") {
    auto [ok22, w22] = has_nonzero_dirac(speh(2, 2));
    CHECK(ok22);
    REQUIRE(w22.has_value());
    CHECK(*w22 == DistinctPartition{3, 1});

    auto [okrep, wrep] = has_nonzero_dirac(UnitaryModule({SpehFactor(1, 2), SpehFactor(1, 2)}));
    CHECK_FALSE(okrep);  // strings (2),(2) collide
    CHECK_FALSE(wrep.has_value());

    auto [okcs, wcs] =
        has_nonzero_dirac(UnitaryModule({ComplementaryFactor(SpehFactor(1, 1), Rational(1, 4))}));
    CHECK_FALSE(okcs);

    auto [oky, wy] = has_nonzero_dirac(UnitaryModule({SpehFactor(2, 2, Rational(1, 3))}));
    CHECK_FALSE(oky);

    auto [okmix, wmix] = has_nonzero_dirac(UnitaryModule({SpehFactor(3, 1), SpehFactor(2, 1), SpehFactor(1, 1)}));
    CHECK(okmix);
    CHECK(*wmix == DistinctPartition{3, 2, 1});

    auto [okcol, wcol] = has_nonzero_dirac(UnitaryModule({SpehFactor(2, 1), SpehFactor(1, 2)}));
    CHECK_FALSE(okcol);  // strings (2),(2) collide
}

TEST_CASE("dirac_cohomology_speh closed forms") {
    CohomologyResult a21 = dirac_cohomology_speh(SpehFactor(2, 1), SpinChoice::Unique);
    CHECK(a21.nonzero);
    CHECK(a21.decomposition.multiplicity(SpinType(DistinctPartition{2}, Associate::Plus)) == 1);
    CHECK(a21.decomposition.multiplicity(SpinType(DistinctPartition{2}, Associate::Minus)) == 1);
    CHECK(a21.decomposition.total_dimension() == 2);

    CohomologyResult a11 = dirac_cohomology_speh(SpehFactor(1, 1), SpinChoice::Plus);
    CHECK(a11.decomposition.multiplicity(SpinType(DistinctPartition{1}, Associate::Self)) == 1);

    CohomologyResult a22 = dirac_cohomology_speh(SpehFactor(2, 2), SpinChoice::Unique);
    CHECK(class_total(a22, DistinctPartition{3, 1}) == 2);
    CHECK(a22.decomposition.total_dimension() == 8);  // = dim X (x) S

    CHECK_THROWS_AS(dirac_cohomology_speh(SpehFactor(2, 2, Rational(1)), SpinChoice::Unique),
                    std::invalid_argument);
}

TEST_CASE("spin choice changes labels only") {
    for (int m = 1; m <= 4; ++m)
        for (int d = 1; m * d <= 8; ++d) {
            auto plus = dirac_cohomology_speh(SpehFactor(m, d), SpinChoice::Plus);
            auto minus = dirac_cohomology_speh(SpehFactor(m, d), SpinChoice::Minus);
            CHECK(plus.symmetrized() == minus.symmetrized());
        }
}

TEST_CASE("dirac_cohomology_spherical closed forms") {
    // lambda = (n): restriction of the spin module
    for (int n = 1; n <= 8; ++n) {
        CohomologyResult r = dirac_cohomology_spherical(n, DistinctPartition{n},
                                                        default_spin_choice(n));
        CHECK(r.decomposition == spin_module_restriction(n));
    }

    CohomologyResult s3 = dirac_cohomology_spherical(3, DistinctPartition{2, 1}, SpinChoice::Plus);
    CHECK(s3.decomposition.multiplicity(SpinType(DistinctPartition{2, 1}, Associate::Plus)) == 1);
    CHECK(s3.decomposition.multiplicity(SpinType(DistinctPartition{2, 1}, Associate::Minus)) == 1);

    CohomologyResult s4 = dirac_cohomology_spherical(4, DistinctPartition{3, 1}, SpinChoice::Unique);
    CHECK(class_total(s4, DistinctPartition{3, 1}) == 2);

    CHECK_THROWS_AS(dirac_cohomology_spherical(4, DistinctPartition{2, 1}, SpinChoice::Unique),
                    std::invalid_argument);
}

TEST_CASE("dirac_cohomology_general examples") {
    CohomologyResult g22 = dirac_cohomology_general(speh(2, 2), SpinChoice::Unique);
    CHECK(g22.nonzero);
    CHECK(*g22.witness == DistinctPartition{3, 1});
    CHECK(class_total(g22, DistinctPartition{3, 1}) == 2);
    CHECK(g22.symmetrized() == dirac_cohomology_speh(SpehFactor(2, 2), SpinChoice::Unique).symmetrized());

    CohomologyResult zero = dirac_cohomology_general(
        UnitaryModule({SpehFactor(1, 2), SpehFactor(1, 2)}), SpinChoice::Unique);
    CHECK_FALSE(zero.nonzero);
    CHECK(zero.decomposition.empty());

    for (int n = 1; n <= 8; ++n) {
        CohomologyResult triv = dirac_cohomology_general(speh(n, 1), default_spin_choice(n));
        CHECK(triv.decomposition == spin_module_restriction(n));
    }

    CohomologyResult cs = dirac_cohomology_general(
        UnitaryModule({ComplementaryFactor(SpehFactor(1, 1), Rational(1, 4))}), SpinChoice::Unique);
    CHECK_FALSE(cs.nonzero);

    CohomologyResult twisted =
        dirac_cohomology_general(UnitaryModule({SpehFactor(2, 2, Rational(2, 7))}), SpinChoice::Unique);
    CHECK_FALSE(twisted.nonzero);
}

TEST_CASE("decision procedure iff general formula nonzero, n <= 8") {
    for (int n = 1; n <= 8; ++n)
        for (const UnitaryModule& X : enumerate_speh_multisets(n)) {
            auto [expected, witness] = has_nonzero_dirac(X);
            CohomologyResult r = dirac_cohomology_general(X, default_spin_choice(n));
            CHECK(r.nonzero == expected);
            if (expected) {
                REQUIRE(r.witness.has_value());
                CHECK(*r.witness == *witness);
                // witness consistency: casimir scalar = <chi, chi>
                CHECK(casimir_scalar(*r.witness) ==
                      central_character(X).norm_squared().first);
            }
        }
}

TEST_CASE("closed Speh table vs general formula: known disagreement set") {
    // The tabulated constants use d where min(m,d) is forced; for m < d they
    // overshoot. The general formula is what the oracle confirms.
    std::set<std::pair<int, int>> expected_mismatch = {
        {1, 3}, {1, 4}, {1, 5}, {1, 6}, {1, 7}, {1, 8}, {2, 4}};
    std::set<std::pair<int, int>> seen;
    for (int m = 1; m <= 8; ++m)
        for (int d = 1; m * d <= 8; ++d) {
            auto closed = dirac_cohomology_speh(SpehFactor(m, d), default_spin_choice(m * d));
            auto general = dirac_cohomology_general(speh(m, d), default_spin_choice(m * d));
            if (closed.symmetrized() != general.symmetrized()) seen.insert({m, d});
        }
    CHECK(seen == expected_mismatch);
}

TEST_CASE("spherical closed form vs induced-from-trivials general formula") {
    // The spherical module with character h_lambda is the induced product of
    // the a(lambda_i, 1); the closed form should match the general formula
    // except in the known n even / lambda odd cases, where it is low by a
    // factor of 2 (again settled by the oracle on the n = 6 case).
    for (int n = 2; n <= 8; ++n)
        for (const DistinctPartition& lam : distinct_partitions(n)) {
            std::vector<Factor> fs;
            for (int p : lam.parts()) fs.push_back(SpehFactor(p, 1));
            CohomologyResult gen = dirac_cohomology_general(UnitaryModule(fs), default_spin_choice(n));
            CohomologyResult sph = dirac_cohomology_spherical(n, lam, default_spin_choice(n));
            auto gs = gen.symmetrized();
            auto ss = sph.symmetrized();
            REQUIRE(gs.count(lam) == 1);
            REQUIRE(ss.count(lam) == 1);
            bool odd_case = n % 2 == 0 && !partition_is_even(lam.partition()) && lam.length() > 1;
            if (odd_case)
                CHECK(gs[lam] == 2 * ss[lam]);
            else
                CHECK(gs[lam] == ss[lam]);
        }
}

TEST_CASE("criterion_check") {
    CentralCharacter chi2({{Rational(1, 2), Rational(0)}, {Rational(-1, 2), Rational(0)}});
    CHECK(criterion_check(chi2, SpinType(DistinctPartition{2}, Associate::Plus)));
    CHECK(criterion_check(chi2, SpinType(DistinctPartition{2}, Associate::Minus)));

    CentralCharacter chi31 = central_character(speh(2, 2));
    CHECK(criterion_check(chi31, SpinType(DistinctPartition{3, 1}, Associate::Self)));
    CHECK_FALSE(criterion_check(chi31, SpinType(DistinctPartition{4}, Associate::Plus)));

    CentralCharacter zero1({{Rational(0), Rational(0)}});
    CHECK(criterion_check(zero1, SpinType(DistinctPartition{1}, Associate::Self)));
}

TEST_CASE("enumerate_speh_multisets") {
    CHECK(enumerate_speh_multisets(1).size() == 1);
    CHECK(enumerate_speh_multisets(2).size() == 3);   // a(2,1), a(1,2), a(1,1)^2
    CHECK(enumerate_speh_multisets(3).size() == 5);
    CHECK(enumerate_speh_multisets(4).size() == 11);
    CHECK(enumerate_speh_multisets(5).size() == 17);
    // no duplicates, all of size n
    for (int n = 1; n <= 8; ++n) {
        auto ms = enumerate_speh_multisets(n);
        std::set<std::string> seen;
        for (const UnitaryModule& X : ms) {
            CHECK(X.n() == n);
            CHECK(seen.insert(X.to_string()).second);
        }
    }
}

TEST_CASE("nonzero count for small n matches independent recount") {
    // brute force: a multiset works iff the hook strings of its factors are
    // disjoint; recount by scanning subsets of DP-strings independently
    for (int n = 1; n <= 8; ++n) {
        long long by_engine = 0;
        for (const UnitaryModule& X : enumerate_speh_multisets(n))
            if (has_nonzero_dirac(X).first) ++by_engine;

        // independent: for each strict partition of n, count the ways to
        // split its parts into factor strings (each string is the hook string
        // of a unique box a(m,d) up to m/d swap giving distinct factors)
        long long recount = 0;
        for (const DistinctPartition& target : distinct_partitions(n)) {
            // parts must be grouped into arithmetic strings k, k-2, ..., step 2;
            // each maximal choice corresponds to factor multisets; count by
            // recursion over the set of parts
            std::vector<int> parts = target.parts();
            auto rec = [&](auto&& self, std::vector<int> rem) -> long long {
                if (rem.empty()) return 1;
                // the largest remaining entry starts a string; choose how far
                // the string extends (entries k, k-2, ... present in rem)
                long long ways = 0;
                int top = rem[0];
                std::vector<int> chain;
                for (int v = top; v >= 1; v -= 2) {
                    if (std::find(rem.begin(), rem.end(), v) == rem.end()) break;
                    chain.push_back(v);
                    std::vector<int> next;
                    for (int x : rem)
                        if (std::find(chain.begin(), chain.end(), x) == chain.end())
                            next.push_back(x);
                    // string (top, top-2, ..., v): realized by a(m,d) with
                    // m+d-1 = top, |m-d|+1 = v: m,d = (top+v)/2, (top-v+2)/2
                    // in either order; distinct factors unless m = d
                    int m = (top + v) / 2, dd = (top - v + 2) / 2;
                    long long factor_choices = (m == dd) ? 1 : 2;
                    ways += factor_choices * self(self, next);
                }
                return ways;
            };
            recount += rec(rec, parts);
        }
        CHECK(by_engine == recount);
    }
}
