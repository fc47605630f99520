#include <doctest.h>

#include "helpers.hpp"
#include "nullfd/relation.hpp"

using namespace nullfd;
using namespace nullfd::testing;

TEST_CASE("eq3 on Table 1 pairs") {
    Relation r = make_table1();
    const auto& t1 = r.tuples()[0];  // (Joe, null, Mathematics)
    const auto& t2 = r.tuples()[1];  // (Joe, Jill, Computer Science)

    CHECK(eq3(r.schema(), t1, t2, {"professor"}) == TruthValue::True);
    CHECK(eq3(r.schema(), t1, t2, {"chair"}) == TruthValue::Unknown);
    CHECK(eq3(r.schema(), t1, t2, {"professor", "department"}) == TruthValue::False);
    CHECK(eq3(r.schema(), t1, t1, {"professor", "department"}) == TruthValue::True);
    // empty attribute set compares true
    CHECK(eq3(r.schema(), t1, t2, {}) == TruthValue::True);
}

TEST_CASE("distinct markers compare unknown, not equal") {
    Relation r{Schema({"A"})};
    r.add_row({std::nullopt});
    r.add_row({std::nullopt});
    CHECK(eq3(r.schema(), r.tuples()[0], r.tuples()[1], {"A"}) == TruthValue::Unknown);
    CHECK(identical(r.schema(), r.tuples()[0], r.tuples()[1], {"A"}));
}

TEST_CASE("eq3 rejects unknown attributes") {
    Relation r = make_table1();
    CHECK_THROWS_AS(eq3(r.schema(), r.tuples()[0], r.tuples()[1], {"bogus"}), SchemaError);
}

TEST_CASE("identical on Table fixtures") {
    Relation r2 = make_table2();
    CHECK(identical(r2.schema(), r2.tuples()[0], r2.tuples()[1], {"income"}));

    Relation r1 = make_table1();
    CHECK_FALSE(identical(r1.schema(), r1.tuples()[0], r1.tuples()[1], {"chair"}));
    for (const auto& t : r1.tuples())
        CHECK(identical(r1.schema(), t, t, r1.schema().attr_set()));
}

TEST_CASE("duplicates match values and markers positionally") {
    Relation r{Schema({"professor", "chair", "department"})};
    auto a = r.add_row({Value{"Joe"}, std::nullopt, Value{"Math"}});
    auto b = r.add_row({Value{"Joe"}, std::nullopt, Value{"Math"}});
    auto c = r.add_row({Value{"Joe"}, Value{"Jill"}, Value{"Math"}});
    auto d = r.add_row({Value{"Joe"}, std::nullopt, Value{"CS"}});
    CHECK(is_duplicate(r.schema(), r.tuple_by_id(a), r.tuple_by_id(b)));
    CHECK_FALSE(is_duplicate(r.schema(), r.tuple_by_id(a), r.tuple_by_id(c)));
    CHECK_FALSE(is_duplicate(r.schema(), r.tuple_by_id(a), r.tuple_by_id(d)));
}

TEST_CASE("projection removes identity duplicates") {
    Relation r1 = make_table1();
    Relation p = project(r1, {"department"});
    CHECK(p.size() == 2);

    Relation r2 = make_table2();
    Relation p2 = project(r2, {"SSN", "income"});
    CHECK(p2.size() == 1);
    CHECK(p2.tuples()[0].cells[p2.schema().index_of("income")].null);
}

TEST_CASE("full projection equals duplicate elimination") {
    Relation r{Schema({"A", "B"})};
    r.add_row({Value{"x"}, std::nullopt});
    r.add_row({Value{"x"}, std::nullopt});
    r.add_row({Value{"x"}, Value{"y"}});
    Relation p = project(r, r.schema().attr_set());
    CHECK(p.size() == 2);
}

TEST_CASE("projection is idempotent up to marker renaming") {
    std::mt19937 gen{7};
    for (int i = 0; i < 200; ++i) {
        Relation r = random_relation(gen);
        AttrSet x = random_attr_subset(gen, r.schema(), false);
        Relation p1 = project(r, x);
        Relation p2 = project(p1, x);
        REQUIRE(p1.size() == p2.size());
        for (std::size_t k = 0; k < p1.size(); ++k)
            CHECK(identity_key(p1.schema(), p1.tuples()[k], x) ==
                  identity_key(p2.schema(), p2.tuples()[k], x));
    }
}

TEST_CASE("eq3 properties on the random family") {
    std::mt19937 gen{11};
    for (int i = 0; i < 300; ++i) {
        Relation r = random_relation(gen);
        if (r.size() < 2) continue;
        AttrSet x = random_attr_subset(gen, r.schema(), true);
        AttrSet y = random_attr_subset(gen, r.schema(), true);
        AttrSet xy = x;
        xy.insert(y.begin(), y.end());
        for (std::size_t a = 0; a < r.size(); ++a)
            for (std::size_t b = a + 1; b < r.size(); ++b) {
                const auto& t = r.tuples()[a];
                const auto& u = r.tuples()[b];
                // symmetry
                CHECK(eq3(r.schema(), t, u, x) == eq3(r.schema(), u, t, x));
                // 3-valued conjunction over the union
                bool union_false = eq3(r.schema(), t, u, xy) == TruthValue::False;
                bool part_false = eq3(r.schema(), t, u, x) == TruthValue::False ||
                                  eq3(r.schema(), t, u, y) == TruthValue::False;
                CHECK(union_false == part_false);
                // identical is stronger than "not false"
                if (identical(r.schema(), t, u, x))
                    CHECK(eq3(r.schema(), t, u, x) != TruthValue::False);
            }
    }
}

TEST_CASE("identical is an equivalence relation") {
    std::mt19937 gen{13};
    for (int i = 0; i < 100; ++i) {
        Relation r = random_relation(gen);
        AttrSet x = random_attr_subset(gen, r.schema(), true);
        const auto& ts = r.tuples();
        for (std::size_t a = 0; a < ts.size(); ++a) {
            CHECK(identical(r.schema(), ts[a], ts[a], x));
            for (std::size_t b = 0; b < ts.size(); ++b) {
                CHECK(identical(r.schema(), ts[a], ts[b], x) ==
                      identical(r.schema(), ts[b], ts[a], x));
                for (std::size_t c = 0; c < ts.size(); ++c)
                    if (identical(r.schema(), ts[a], ts[b], x) &&
                        identical(r.schema(), ts[b], ts[c], x))
                        CHECK(identical(r.schema(), ts[a], ts[c], x));
            }
        }
    }
}

TEST_CASE("null markers rejected in non-nullable attributes") {
    Relation r{Schema({"A", "B"}, AttrSet{"B"})};
    CHECK_THROWS_AS(r.add_row({std::nullopt, Value{"x"}}), SchemaError);
    CHECK_NOTHROW(r.add_row({Value{"x"}, std::nullopt}));
}
