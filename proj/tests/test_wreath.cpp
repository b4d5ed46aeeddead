#include <catch2/catch_amalgamated.hpp>

#include "orbichi/wreath.hpp"

#include <map>

#include "oracles.hpp"

using namespace orbichi;

TEST_CASE("wreath of the trivial group is the symmetric group, same table") {
    for (int n : {1, 2, 3, 4}) {
        WreathGroup w(trivial_group(), n);
        FiniteGroup sn = symmetric_group(n);
        REQUIRE(w.order() == sn.order());
        for (int a = 0; a < sn.order(); ++a)
            for (int b = 0; b < sn.order(); ++b) CHECK(w.group().mul(a, b) == sn.mul(a, b));
    }
}

TEST_CASE("wreath with n = 1 is the base group") {
    FiniteGroup s3 = symmetric_group(3);
    WreathGroup w(s3, 1);
    REQUIRE(w.order() == 6);
    for (int a = 0; a < 6; ++a)
        for (int b = 0; b < 6; ++b) CHECK(w.group().mul(a, b) == s3.mul(a, b));
}

TEST_CASE("wreath group axioms hold for small instances") {
    for (const auto& [g, n] : std::vector<std::pair<FiniteGroup, int>>{
             {cyclic_group(2), 2}, {cyclic_group(3), 2}, {symmetric_group(3), 2},
             {cyclic_group(2), 3}}) {
        WreathGroup w(g, n);
        const FiniteGroup& wg = w.group();
        INFO(wg.label());
        int e = wg.identity();
        for (int a = 0; a < wg.order(); ++a) {
            CHECK(wg.mul(e, a) == a);
            CHECK(wg.mul(a, wg.inv(a)) == e);
            CHECK(w.encode(w.decode(a)) == a);
        }
        // sampled associativity (tables are built from the closure, not validated cubically)
        for (int a = 0; a < wg.order(); a += 3)
            for (int b = 1; b < wg.order(); b += 5)
                for (int c = 2; c < wg.order(); c += 7)
                    REQUIRE(wg.mul(wg.mul(a, b), c) == wg.mul(a, wg.mul(b, c)));
    }
}

TEST_CASE("Z2 wr S2 is the order-8 group with 5 conjugacy classes") {
    WreathGroup w(cyclic_group(2), 2);
    CHECK(w.order() == 8);
    auto classes = conjugacy_classes(w.group());
    REQUIRE(classes.size() == 5);
    std::vector<size_t> sizes;
    for (const auto& c : classes) sizes.push_back(c.members.size());
    std::sort(sizes.begin(), sizes.end());
    CHECK(sizes == std::vector<size_t>{1, 1, 2, 2, 2});
}

TEST_CASE("cycle products") {
    FiniteGroup z2 = cyclic_group(2);
    WreathGroup w(z2, 2);
    SECTION("identity vector gives the identity class") {
        WreathElement a{{0, 0}, {1, 0}}; // ((e,e), swap)
        CHECK(cycle_product_class(w, a, {0, 1}) == 0);
    }
    SECTION("n = 1: class of the single entry") {
        WreathGroup w1(symmetric_group(3), 1);
        for (int x = 0; x < 6; ++x) {
            WreathElement a{{x}, {0}};
            auto classes = conjugacy_classes(symmetric_group(3));
            int expect = -1;
            for (const auto& c : classes)
                if (std::find(c.members.begin(), c.members.end(), x) != c.members.end())
                    expect = c.representative;
            CHECK(cycle_product_class(w1, a, {0}) == expect);
        }
    }
    SECTION("((x,e), swap) has cycle product x") {
        WreathElement a{{1, 0}, {1, 0}};
        CHECK(cycle_product_class(w, a, {0, 1}) == 1);
    }
    SECTION("starting point does not matter") {
        WreathGroup w3(symmetric_group(3), 3);
        WreathElement a{{3, 1, 4}, {1, 2, 0}}; // one 3-cycle
        int c1 = cycle_product_class(w3, a, {0, 1, 2});
        int c2 = cycle_product_class(w3, a, {1, 2, 0});
        int c3 = cycle_product_class(w3, a, {2, 0, 1});
        CHECK(c1 == c2);
        CHECK(c2 == c3);
    }
    SECTION("a non-cycle is rejected") {
        WreathElement a{{0, 0}, {1, 0}};
        CHECK_THROWS_AS(cycle_product_class(w, a, {0}), validation_error);
    }
}

TEST_CASE("types") {
    FiniteGroup z2 = cyclic_group(2);
    WreathGroup w(z2, 2);
    SECTION("identity element") {
        WreathType t = type_of(w, w.group().identity());
        REQUIRE(t.counts.size() == 1);
        CHECK(t.counts.at({1, 0}) == 2);
    }
    SECTION("((e,e), swap)") {
        WreathType t = type_of(w, WreathElement{{0, 0}, {1, 0}});
        REQUIRE(t.counts.size() == 1);
        CHECK(t.counts.at({2, 0}) == 1);
    }
    SECTION("((x,x), id)") {
        WreathType t = type_of(w, WreathElement{{1, 1}, {0, 1}});
        REQUIRE(t.counts.size() == 1);
        CHECK(t.counts.at({1, 1}) == 2);
    }
    SECTION("weights always sum to n") {
        for (int a = 0; a < (int)w.order(); ++a) {
            WreathType t = type_of(w, a);
            long long sum = 0;
            for (auto& [key, m] : t.counts) sum += (long long)key.first * m;
            CHECK(sum == 2);
        }
    }
}

TEST_CASE("centralizer order by type") {
    FiniteGroup z2 = cyclic_group(2);
    SECTION("identity type is the whole group") {
        WreathGroup w(z2, 3);
        WreathType t = type_of(w, w.group().identity());
        CHECK(centralizer_order_by_type(t, z2) == 48);
    }
    SECTION("m_2(e) = 1 in Z2 wr S2 gives 4") {
        WreathGroup w(z2, 2);
        WreathType t = type_of(w, WreathElement{{0, 0}, {1, 0}});
        CHECK(centralizer_order_by_type(t, z2) == 4);
    }
    SECTION("trivial base recovers n!") {
        WreathGroup w(trivial_group(), 4);
        WreathType t = type_of(w, w.group().identity());
        CHECK(centralizer_order_by_type(t, trivial_group()) == 24);
    }
    SECTION("inconsistent types are rejected") {
        WreathType t;
        t.n = 3;
        t.counts[{2, 0}] = 1; // weight 2 != 3
        CHECK_THROWS_AS(centralizer_order_by_type(t, z2), validation_error);
        WreathType bad;
        bad.n = 1;
        bad.counts[{1, 1}] = 1; // 1 is not a class representative of the trivial group
        CHECK_THROWS_AS(centralizer_order_by_type(bad, trivial_group()), validation_error);
    }
}

TEST_CASE("type census") {
    SECTION("trivial base: partitions of n") {
        for (int n : {1, 2, 3, 4, 5})
            CHECK((long long)conjugacy_classes_by_type(trivial_group(), n).size() ==
                  oracles::partitions(n));
    }
    SECTION("pinned counts") {
        CHECK(conjugacy_classes_by_type(cyclic_group(2), 2).size() == 5);
        CHECK(conjugacy_classes_by_type(cyclic_group(2), 1).size() == 2);
        CHECK(conjugacy_classes_by_type(cyclic_group(3), 2).size() == 9);
    }
    SECTION("census size matches the colored partition count") {
        for (const auto& [g, n] : std::vector<std::pair<FiniteGroup, int>>{
                 {cyclic_group(2), 4}, {cyclic_group(3), 3}, {symmetric_group(3), 3}}) {
            long long colors = (long long)conjugacy_classes(g).size();
            CHECK((long long)conjugacy_classes_by_type(g, n).size() ==
                  oracles::colored_partitions(n, (int)colors));
        }
    }
    SECTION("class sizes sum to |G_n|") {
        for (const auto& [g, n] : std::vector<std::pair<FiniteGroup, int>>{
                 {cyclic_group(2), 3}, {symmetric_group(3), 2}, {cyclic_group(3), 2}}) {
            long long ord = perm::factorial(n);
            for (int i = 0; i < n; ++i) ord *= g.order();
            long long sum = 0;
            for (const auto& [t, size] : conjugacy_classes_by_type(g, n)) sum += size;
            CHECK(sum == ord);
        }
    }
}

TEST_CASE("brute-force conjugacy equals the type partition") {
    for (const auto& [g, n] : std::vector<std::pair<FiniteGroup, int>>{
             {cyclic_group(2), 2}, {cyclic_group(2), 3}, {cyclic_group(3), 2},
             {symmetric_group(3), 2}}) {
        WreathGroup w(g, n);
        INFO(w.group().label());
        auto brute = conjugacy_classes(w.group());
        std::map<std::string, int> type_to_class;
        for (int i = 0; i < (int)brute.size(); ++i) {
            for (int m : brute[i].members) {
                std::string key = type_of(w, m).str();
                auto it = type_to_class.find(key);
                if (it == type_to_class.end())
                    type_to_class[key] = i;
                else
                    REQUIRE(it->second == i);
            }
        }
        CHECK(type_to_class.size() == brute.size());
        // centralizer orders agree with the product formula
        for (const auto& cls : brute)
            CHECK(centralizer(w.group(), cls.representative).size() ==
                  centralizer_order_by_type(type_of(w, cls.representative), g));
    }
}

TEST_CASE("cyclic extensions") {
    FiniteGroup z2 = cyclic_group(2);
    SECTION("extension by a square root of the identity is Z2 x Z2") {
        FiniteGroup ext = cyclic_extension(z2, 0, 2);
        REQUIRE(ext.order() == 4);
        for (int x = 0; x < 4; ++x) CHECK(ext.mul(x, x) == ext.identity());
    }
    SECTION("extension by a square root of the generator is Z4") {
        FiniteGroup ext = cyclic_extension(z2, 1, 2);
        REQUIRE(ext.order() == 4);
        bool has_order4 = false;
        for (int x = 0; x < 4; ++x) has_order4 |= ext.element_order(x) == 4;
        CHECK(has_order4);
    }
    SECTION("r = 1 returns the base") {
        CHECK(cyclic_extension(z2, 1, 1).same_object(z2));
    }
    SECTION("non-central elements are rejected") {
        FiniteGroup s3 = symmetric_group(3);
        CHECK_THROWS_AS(cyclic_extension(s3, 1, 2), validation_error);
    }
}

TEST_CASE("wreath order cap") {
    CHECK_THROWS_AS(WreathGroup(symmetric_group(3), 5), budget_error);
}
