#include <catch2/catch_amalgamated.hpp>

#include "orbichi/group.hpp"

using namespace orbichi;

namespace {

std::vector<FiniteGroup> catalog() {
    return {trivial_group(),
            cyclic_group(2),
            cyclic_group(3),
            cyclic_group(4),
            dihedral_group(3),
            dihedral_group(4),
            symmetric_group(3),
            direct_product(cyclic_group(2), cyclic_group(2)),
            direct_product(cyclic_group(2), symmetric_group(3))};
}

} // namespace

TEST_CASE("catalog group axioms hold exhaustively") {
    for (const auto& g : catalog()) {
        INFO(g.label());
        int e = g.identity();
        for (int a = 0; a < g.order(); ++a) {
            CHECK(g.mul(e, a) == a);
            CHECK(g.mul(a, e) == a);
            CHECK(g.mul(a, g.inv(a)) == e);
            CHECK(g.mul(g.inv(a), a) == e);
        }
        for (int a = 0; a < g.order(); ++a)
            for (int b = 0; b < g.order(); ++b)
                for (int c = 0; c < g.order(); ++c)
                    REQUIRE(g.mul(g.mul(a, b), c) == g.mul(a, g.mul(b, c)));
    }
}

TEST_CASE("catalog orders and class structure") {
    CHECK(trivial_group().order() == 1);
    CHECK(conjugacy_classes(trivial_group()).size() == 1);

    FiniteGroup s3 = symmetric_group(3);
    CHECK(s3.order() == 6);
    auto classes = conjugacy_classes(s3);
    REQUIRE(classes.size() == 3);
    std::vector<size_t> sizes;
    for (const auto& c : classes) sizes.push_back(c.members.size());
    std::sort(sizes.begin(), sizes.end());
    CHECK(sizes == std::vector<size_t>{1, 2, 3});

    FiniteGroup z4 = cyclic_group(4);
    CHECK(z4.order() == 4);
    for (const auto& c : conjugacy_classes(z4)) CHECK(c.members.size() == 1);

    CHECK(dihedral_group(4).order() == 8);
    CHECK(conjugacy_classes(dihedral_group(4)).size() == 5);

    FiniteGroup v4 = direct_product(cyclic_group(2), cyclic_group(2));
    CHECK(conjugacy_classes(v4).size() == 4);
    int involutions = 0;
    for (int x = 0; x < v4.order(); ++x)
        if (x != v4.identity() && v4.mul(x, x) == v4.identity()) ++involutions;
    CHECK(involutions == 3);

    CHECK(direct_product(cyclic_group(2), symmetric_group(3)).order() == 12);
}

TEST_CASE("class size times centralizer order equals group order") {
    for (const auto& g : catalog()) {
        INFO(g.label());
        auto classes = conjugacy_classes(g);
        long long total = 0;
        for (const auto& cls : classes) {
            total += (long long)cls.members.size();
            CHECK((long long)cls.members.size() *
                      centralizer(g, cls.representative).size() ==
                  g.order());
            CHECK(cls.representative == cls.members.front());
        }
        CHECK(total == g.order());
    }
}

TEST_CASE("centralizer examples") {
    FiniteGroup s3 = symmetric_group(3);
    // find a transposition (order-2 element)
    int tau = -1;
    for (int x = 1; x < 6; ++x)
        if (s3.element_order(x) == 2) {
            tau = x;
            break;
        }
    REQUIRE(tau >= 0);
    CHECK(centralizer(s3, tau).size() == 2);
    CHECK(centralizer(s3, s3.identity()).size() == 6);
    FiniteGroup z4 = cyclic_group(4);
    CHECK(centralizer(z4, 1).size() == 4);
}

TEST_CASE("generated subgroups") {
    FiniteGroup s3 = symmetric_group(3);
    CHECK(Subgroup::generated(s3, std::vector<int>{}).size() == 1);
    int rho = -1;
    for (int x = 1; x < 6; ++x)
        if (s3.element_order(x) == 3) {
            rho = x;
            break;
        }
    REQUIRE(rho >= 0);
    CHECK(Subgroup::generated(s3, std::vector<int>{rho}).size() == 3);
    FiniteGroup z4 = cyclic_group(4);
    CHECK(Subgroup::generated(z4, std::vector<int>{1}).size() == 4);

    SECTION("generating from a subgroup's own elements is idempotent") {
        for (const auto& g : catalog()) {
            for (int x = 0; x < g.order(); ++x) {
                Subgroup h = Subgroup::generated(g, std::vector<int>{x});
                CHECK(Subgroup::generated(g, h.elements()) == h);
            }
        }
    }
}

TEST_CASE("direct product layout") {
    FiniteGroup g = symmetric_group(3);
    FiniteGroup tg = direct_product(trivial_group(), g);
    REQUIRE(tg.order() == g.order());
    for (int a = 0; a < g.order(); ++a)
        for (int b = 0; b < g.order(); ++b) CHECK(tg.mul(a, b) == g.mul(a, b));
}

TEST_CASE("table validation errors") {
    // 2x2 table with no identity
    CHECK_THROWS_AS(FiniteGroup::from_table({1, 1, 1, 1}, "bad"), validation_error);
    // non-associative magma on 3 elements: e is identity, but (1*1)*2 != 1*(1*2)
    std::vector<int32_t> t = {0, 1, 2, //
                              1, 0, 0, //
                              2, 0, 1};
    try {
        FiniteGroup::from_table(t, "bad");
        FAIL("expected validation_error");
    } catch (const validation_error& e) {
        CHECK(std::string(e.what()).find("triple") != std::string::npos);
    }
    // entry out of range
    CHECK_THROWS_AS(FiniteGroup::from_table({0, 1, 1, 7}, "bad"), validation_error);
}

TEST_CASE("subgroup validation") {
    FiniteGroup s3 = symmetric_group(3);
    // not closed: a transposition without identity closure
    int tau = 1;
    CHECK_THROWS_AS(Subgroup(s3, {tau}), validation_error);
    Subgroup whole = Subgroup::whole(s3);
    CHECK(whole.size() == 6);
    auto [sub, map] = Subgroup::generated(s3, std::vector<int>{tau}).as_group();
    CHECK(sub.order() == 2);
    CHECK(map.size() == 2);
    CHECK(map[0] == s3.identity());
}

TEST_CASE("lazy groups multiply like their table twins") {
    // symmetric_group(7) is above the table cap and stays functional
    FiniteGroup s7 = symmetric_group(7);
    CHECK_FALSE(s7.has_table());
    CHECK(s7.order() == 5040);
    // spot-check against composing the ranked permutations directly
    for (int a : {0, 1, 17, 1000, 5039})
        for (int b : {0, 2, 99, 4321}) {
            auto pa = perm::unrank(7, a), pb = perm::unrank(7, b);
            CHECK(s7.mul(a, b) == (int)perm::rank(perm::compose(pa, pb)));
        }
    CHECK(s7.element_order(1) == 2);
}

TEST_CASE("element order and powers") {
    FiniteGroup z6 = cyclic_group(6);
    CHECK(z6.element_order(1) == 6);
    CHECK(z6.element_order(2) == 3);
    CHECK(z6.element_order(3) == 2);
    CHECK(z6.power(1, 45) == 3);
    CHECK(z6.power(1, -1) == 5);
}
