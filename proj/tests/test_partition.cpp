#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "hecke/partition.hpp"

using namespace hecke;

namespace {

// independent partition counter: p(n) by Euler recurrence over restricted counts
long long count_partitions(int n, int maxpart) {
    if (n == 0) return 1;
    if (n < 0 || maxpart == 0) return 0;
    return count_partitions(n - maxpart, maxpart) + count_partitions(n, maxpart - 1);
}

}  // namespace

TEST_CASE("enumerate_partitions basics") {
    CHECK(enumerate_partitions(1) == std::vector<Partition>{Partition{1}});
    CHECK(enumerate_partitions(3) ==
          std::vector<Partition>{Partition{3}, Partition{2, 1}, Partition{1, 1, 1}});
    CHECK(enumerate_partitions(5).size() == 7);  // p(5) = 7
    for (int n = 1; n <= 12; ++n) {
        auto ps = enumerate_partitions(n);
        CHECK(static_cast<long long>(ps.size()) == count_partitions(n, n));
        for (size_t i = 0; i < ps.size(); ++i) {
            CHECK(ps[i].n() == n);
            if (i > 0) CHECK(ps[i - 1].parts() > ps[i].parts());  // strictly descending lex
        }
    }
}

TEST_CASE("enumeration order refines dominance") {
    for (int n = 1; n <= 9; ++n) {
        auto ps = enumerate_partitions(n);
        for (size_t i = 0; i < ps.size(); ++i)
            for (size_t j = i + 1; j < ps.size(); ++j) {
                bool later_dominates = dominance_leq(ps[i], ps[j]) && ps[i] != ps[j];
                CHECK_FALSE(later_dominates);
            }
    }
}

TEST_CASE("distinct_partitions") {
    CHECK(distinct_partitions(3) ==
          std::vector<DistinctPartition>{DistinctPartition{3}, DistinctPartition{2, 1}});
    CHECK(distinct_partitions(1) == std::vector<DistinctPartition>{DistinctPartition{1}});
    CHECK(distinct_partitions(4) ==
          std::vector<DistinctPartition>{DistinctPartition{4}, DistinctPartition{3, 1}});
    CHECK_THROWS_AS(DistinctPartition(Partition{2, 2}), std::invalid_argument);
}

TEST_CASE("transpose") {
    CHECK(transpose(Partition{3, 3, 1}) == Partition{3, 2, 2});
    CHECK(transpose(Partition{5}) == Partition{1, 1, 1, 1, 1});
    CHECK(transpose(Partition{2, 1}) == Partition{2, 1});
    for (int n = 1; n <= 12; ++n)
        for (const Partition& p : enumerate_partitions(n)) CHECK(transpose(transpose(p)) == p);
}

TEST_CASE("hook_partition") {
    CHECK(hook_partition(Partition{3, 3, 1}) == DistinctPartition{5, 2});
    CHECK(hook_partition(Partition{1}) == DistinctPartition{1});
    CHECK(hook_partition(Partition{2, 2}) == DistinctPartition{3, 1});
    for (int n = 1; n <= 12; ++n)
        for (const Partition& p : enumerate_partitions(n)) {
            DistinctPartition h = hook_partition(p);
            CHECK(h.n() == n);  // strictness enforced by the type
        }
}

TEST_CASE("dominance order") {
    CHECK(dominance_leq(Partition{2, 1}, Partition{3}));
    CHECK(dominance_leq(Partition{2, 1}, Partition{2, 1}));
    CHECK_FALSE(dominance_leq(Partition{3}, Partition{2, 1}));
    CHECK_THROWS_AS(dominance_leq(Partition{2}, Partition{3}), std::invalid_argument);

    // partial order axioms, exhaustive for n <= 9
    for (int n = 1; n <= 9; ++n) {
        auto ps = enumerate_partitions(n);
        for (const auto& a : ps) {
            CHECK(dominance_leq(a, a));
            for (const auto& b : ps) {
                if (dominance_leq(a, b) && dominance_leq(b, a)) CHECK(a == b);
                for (const auto& c : ps)
                    if (dominance_leq(a, b) && dominance_leq(b, c)) CHECK(dominance_leq(a, c));
            }
        }
    }
}

TEST_CASE("c_content") {
    auto c0 = c_content(Partition{3, 3, 1}, Rational(0));
    std::vector<Rational> expect{Rational(2), Rational(1), Rational(1), Rational(0),
                                 Rational(0), Rational(-1), Rational(-2)};
    CHECK(c0 == expect);
    CHECK(c_content(Partition{1}, Rational(7, 3)) == std::vector<Rational>{Rational(7, 3)});
    auto sq = c_content(Partition{2, 2}, Rational(0));
    CHECK(sq == std::vector<Rational>{Rational(1), Rational(0), Rational(0), Rational(-1)});
}

TEST_CASE("middle_element") {
    CHECK(middle_element(Partition{3, 1}) ==
          CharacterVector({Rational(1), Rational(0), Rational(-1), Rational(0)}));
    CHECK(middle_element(Partition{1}) == CharacterVector({Rational(0)}));
    CHECK(middle_element(Partition{2, 2}) ==
          CharacterVector({Rational(1, 2), Rational(-1, 2), Rational(1, 2), Rational(-1, 2)}));
}

TEST_CASE("casimir_scalar") {
    CHECK(casimir_scalar(DistinctPartition{2}) == Rational(1, 2));
    CHECK(casimir_scalar(DistinctPartition{1}) == Rational(0));
    CHECK(casimir_scalar(DistinctPartition{3, 1}) == Rational(2));
    // against <h,h> computed independently, all strict partitions up to n = 12
    for (int n = 1; n <= 12; ++n)
        for (const DistinctPartition& d : distinct_partitions(n))
            CHECK(casimir_scalar(d) == middle_element(d.partition()).norm_squared());
}

TEST_CASE("rectangle content matches hook middle element") {
    // for lambda = (m^d) with c = (d-m)/2, the c-content is exactly h_{hook(lambda)}
    for (int m = 1; m <= 12; ++m)
        for (int d = 1; m * d <= 12; ++d) {
            std::vector<int> box(d, m);
            Partition rect(box);
            auto content = c_content(rect, Rational(d - m, 2));
            CHECK(CharacterVector(content) == middle_element(hook_partition(rect).partition()));
        }
}

TEST_CASE("text formats") {
    CHECK(Partition({3, 1}).to_string() == "[3,1]");
    CHECK(Partition::from_string("[3,1]") == Partition{3, 1});
    CHECK(Partition::from_string("[7]") == Partition{7});
    CHECK_THROWS_AS(Partition::from_string("3,1"), std::invalid_argument);
    CHECK_THROWS_AS(Partition({1, 3}), std::invalid_argument);
    CHECK(Rational::from_string("-1/2").to_string() == "-1/2");
}
