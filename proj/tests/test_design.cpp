#include <doctest.h>

#include <algorithm>

#include "helpers.hpp"
#include "nullfd/design.hpp"

using namespace nullfd;
using namespace nullfd::testing;

namespace {

bool has_set(const std::vector<AttrSet>& sets, const AttrSet& x) {
    return std::find(sets.begin(), sets.end(), x) != sets.end();
}

// multiset equality under identity over the full schema
bool same_extension(const Relation& a, const Relation& b) {
    if (a.size() != b.size()) return false;
    auto keys = [](const Relation& r) {
        std::vector<std::string> out;
        for (const auto& t : r.tuples())
            out.push_back(identity_key(r.schema(), t, r.schema().attr_set()));
        std::sort(out.begin(), out.end());
        return out;
    };
    return keys(a) == keys(b);
}

}  // namespace

TEST_CASE("literal keys of the fixture tables") {
    LiteralKeyReport t1 = literal_keys(make_table1());
    // chair values are pairwise non-identical, so it keys the table alone
    CHECK(has_set(t1.keys, {"chair"}));
    CHECK(has_set(t1.keys, {"professor", "department"}));
    CHECK_FALSE(has_set(t1.keys, {"professor"}));
    CHECK(has_set(t1.superkeys, {"chair", "department"}));

    LiteralKeyReport t2 = literal_keys(make_table2());
    // SSN repeats and the two income markers are identical
    CHECK(has_set(t2.keys, {"taxation"}));
    CHECK_FALSE(has_set(t2.superkeys, {"SSN"}));
    CHECK_FALSE(has_set(t2.superkeys, {"income"}));

    Relation single{Schema({"A", "B"})};
    single.add_row({Value{"x"}, std::nullopt});
    LiteralKeyReport s = literal_keys(single);
    CHECK(has_set(s.keys, {"A"}));
    CHECK(has_set(s.keys, {"B"}));
}

TEST_CASE("key enumeration refuses wide schemas") {
    std::vector<std::string> wide;
    for (int i = 0; i < 13; ++i) wide.push_back("A" + std::to_string(i));
    Relation r{Schema(wide)};
    CHECK_THROWS_AS(literal_keys(r), SizeGuardError);
}

TEST_CASE("reported keys are minimal literal determinants") {
    std::mt19937 gen{73};
    for (int i = 0; i < 150; ++i) {
        Relation r = random_relation(gen);
        LiteralKeyReport rep = literal_keys(r);
        AttrSet all = r.schema().attr_set();
        for (const auto& k : rep.keys) {
            CHECK(holds_literal(r, FD{k, all}).ok);
            for (const auto& a : k) {
                AttrSet sub = k;
                sub.erase(a);
                if (!sub.empty()) CHECK_FALSE(holds_literal(r, FD{sub, all}).ok);
            }
            for (const auto& other : rep.keys)
                if (other != k)
                    CHECK_FALSE(std::includes(k.begin(), k.end(), other.begin(),
                                              other.end()));
        }
        for (const auto& sk : rep.superkeys) {
            CHECK(holds_literal(r, FD{sk, all}).ok);
            CHECK(std::any_of(rep.keys.begin(), rep.keys.end(), [&](const AttrSet& k) {
                return std::includes(sk.begin(), sk.end(), k.begin(), k.end());
            }));
        }
    }
}

TEST_CASE("literal foreign keys") {
    Relation t1 = make_table1();
    Relation depts = project(t1, {"department"});  // each department once

    CHECK(check_literal_fk(t1, depts, {"department"}).ok);
    CHECK(check_literal_fk(Relation{t1.schema()}, depts, {"department"}).ok);

    // department does not key Table 1 itself (Mathematics repeats)
    CHECK_FALSE(check_literal_fk(depts, t1, {"department"}).ok);

    Relation alien{t1.schema()};
    alien.add_row({Value{"Ann"}, Value{"Zoe"}, Value{"History"}});
    CHECK_FALSE(check_literal_fk(alien, depts, {"department"}).ok);
}

TEST_CASE("identity join on the taxation projections") {
    Relation t2 = make_table2();
    Relation left = project(t2, {"SSN", "income"});      // one tuple, marker income
    Relation right = project(t2, {"income", "taxation"});  // two tuples
    REQUIRE(left.size() == 1);
    REQUIRE(right.size() == 2);

    Relation joined = literal_join(left, right, {"income"});
    CHECK(joined.size() == 2);  // the marker matches both marker rows
    CHECK(joined.schema().arity() == 3);
    for (const auto& t : joined.tuples()) {
        CHECK(t.cells[joined.schema().index_of("SSN")].value == "1112233");
        CHECK(t.cells[joined.schema().index_of("income")].null);
    }
}

TEST_CASE("identity join with no matches is empty") {
    Relation a{Schema({"X", "Y"})};
    a.add_row({Value{"1"}, Value{"p"}});
    Relation b{Schema({"X", "Z"})};
    b.add_row({Value{"2"}, Value{"q"}});
    CHECK(literal_join(a, b, {"X"}).size() == 0);
}

TEST_CASE("self-join on a key reproduces the relation") {
    Relation t1 = make_table1();
    Relation dedup = project(t1, t1.schema().attr_set());
    Relation joined = literal_join(t1, dedup, {"chair"});  // chair is a literal key
    CHECK(same_extension(joined, t1));
}

TEST_CASE("identity join on null-free inputs is the natural join") {
    std::mt19937 gen{79};
    for (int i = 0; i < 150; ++i) {
        Relation left = random_relation(gen, 4, 3, 2, /*max_markers=*/0);
        Relation right = random_relation(gen, 4, 3, 2, /*max_markers=*/0);
        AttrSet common;
        for (const auto& a : left.schema().attributes())
            if (right.schema().contains(a)) common.insert(a);
        if (common.empty()) continue;
        Relation joined = literal_join(left, right, common);

        std::size_t expect = 0;
        for (const auto& t : left.tuples())
            for (const auto& u : right.tuples()) {
                bool match = true;
                for (const auto& a : common)
                    if (t.cells[left.schema().index_of(a)].value !=
                        u.cells[right.schema().index_of(a)].value)
                        match = false;
                if (match) ++expect;
            }
        CHECK(joined.size() == expect);
    }
}

TEST_CASE("lossless verdicts on the fixture tables") {
    Relation t1 = make_table1();
    AttrSet sch = t1.schema().attr_set();

    CHECK(check_lossless(t1, sch, {"chair"}).lossless);  // one side is the table itself
    // chair keys both fragments' overlap
    CHECK(check_lossless(t1, {"professor", "chair"}, {"chair", "department"}).lossless);

    // department repeats, so rejoining on it invents (Joe, Arthur, Mathematics)
    LosslessResult lossy =
        check_lossless(t1, {"professor", "department"}, {"department", "chair"});
    CHECK_FALSE(lossy.lossless);
    CHECK_FALSE(lossy.counterexample.empty());

    CHECK_THROWS_AS(check_lossless(t1, {"professor"}, {"chair"}), SchemaError);
}

TEST_CASE("overlap determining a fragment guarantees losslessness") {
    std::mt19937 gen{83};
    int lossy_seen = 0;
    for (int i = 0; i < 400; ++i) {
        Relation r = random_relation(gen, 5, 4, 2, 2);
        if (r.schema().arity() < 2) continue;
        AttrSet sch = r.schema().attr_set();
        AttrSet z = random_attr_subset(gen, r.schema(), false);
        AttrSet w;
        std::set_difference(sch.begin(), sch.end(), z.begin(), z.end(),
                            std::inserter(w, w.end()));
        if (w.empty()) continue;
        // give the fragments an overlap
        w.insert(*z.begin());
        AttrSet overlap;
        std::set_intersection(z.begin(), z.end(), w.begin(), w.end(),
                              std::inserter(overlap, overlap.end()));
        LosslessResult res = check_lossless(r, z, w);
        if (holds_literal(r, FD{overlap, w}).ok)
            CHECK(res.lossless);
        else if (!res.lossless)
            ++lossy_seen;
    }
    CHECK(lossy_seen > 0);  // the converse gap is actually exercised
}

TEST_CASE("single decomposition steps") {
    Relation t1 = make_table1();
    FDSet f{{FD{{"chair"}, {"professor"}}}};
    Decomposition d = decompose_step(t1, f, f.fds()[0]);
    CHECK(d.z == AttrSet{"chair", "professor"});
    CHECK(d.w == AttrSet{"chair", "department"});
    CHECK(check_lossless(t1, d.z, d.w).lossless);

    Relation t2 = make_table2();
    FDSet g{{FD{{"SSN"}, {"income"}}}};
    Decomposition d2 = decompose_step(t2, g, g.fds()[0]);
    CHECK(d2.z == AttrSet{"SSN", "income"});
    CHECK(d2.w == AttrSet{"SSN", "taxation"});
    CHECK(check_lossless(t2, d2.z, d2.w).lossless);

    // no split available when the FD spans the whole schema
    CHECK_THROWS_AS(
        decompose_step(t1, f, FD{{"chair"}, {"professor", "department"}}),
        PreconditionError);
    // and the FD must actually hold literally
    CHECK_THROWS_AS(decompose_step(t1, f, FD{{"professor"}, {"chair"}}),
                    PreconditionError);
}

TEST_CASE("decomposition outputs always rejoin losslessly") {
    std::mt19937 gen{89};
    int split = 0;
    for (int i = 0; i < 500 && split < 80; ++i) {
        Relation r = random_relation(gen);
        if (r.schema().arity() < 2) continue;
        FD f = random_stored_fd(gen, r.schema());
        AttrSet zu = f.lhs;
        zu.insert(f.rhs.begin(), f.rhs.end());
        if (zu == r.schema().attr_set()) continue;
        if (!holds_literal(r, f).ok) continue;
        Decomposition d = decompose_step(r, FDSet{{f}}, f);
        CHECK(check_lossless(r, d.z, d.w).lossless);
        ++split;
    }
    CHECK(split >= 80);
}
