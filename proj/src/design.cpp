#include "nullfd/design.hpp"

#include <algorithm>
#include <bit>

namespace nullfd {

namespace {

std::string render_tuple(const Schema& schema, const Tuple& t, const AttrSet& attrs) {
    std::string out = "(";
    bool first = true;
    for (const auto& a : attrs) {
        if (!first) out += ",";
        first = false;
        const Cell& c = t.cells[schema.index_of(a)];
        out += a + "=" + (c.null ? "null" : c.value);
    }
    return out + ")";
}

}  // namespace

LiteralKeyReport literal_keys(const Relation& r) {
    const auto& attrs = r.schema().attributes();
    std::size_t n = attrs.size();
    if (n == 0) throw SchemaError("empty schema has no keys");
    if (n > 12)
        throw SizeGuardError("key enumeration refused for schemas wider than 12 attributes");

    AttrSet all = r.schema().attr_set();
    LiteralKeyReport report;
    std::vector<std::uint32_t> superkey_masks;

    std::vector<std::uint32_t> masks;
    for (std::uint32_t m = 1; m < (1u << n); ++m) masks.push_back(m);
    std::sort(masks.begin(), masks.end(), [](std::uint32_t a, std::uint32_t b) {
        int pa = std::popcount(a), pb = std::popcount(b);
        return pa != pb ? pa < pb : a < b;
    });

    for (std::uint32_t m : masks) {
        AttrSet x;
        for (std::size_t i = 0; i < n; ++i)
            if (m & (1u << i)) x.insert(attrs[i]);
        if (!holds_literal(r, FD{x, all})) continue;
        report.superkeys.push_back(x);
        bool minimal = std::none_of(superkey_masks.begin(), superkey_masks.end(),
                                    [&](std::uint32_t k) { return (k & m) == k; });
        superkey_masks.push_back(m);
        if (minimal) report.keys.push_back(x);
    }
    return report;
}

FkResult check_literal_fk(const Relation& r1, const Relation& r2, const AttrSet& x) {
    for (const auto& a : x) {
        r1.schema().index_of(a);
        r2.schema().index_of(a);
    }
    LiteralKeyReport keys2 = literal_keys(r2);
    bool contains_key = std::any_of(keys2.keys.begin(), keys2.keys.end(), [&](const AttrSet& k) {
        return std::includes(x.begin(), x.end(), k.begin(), k.end());
    });
    if (!contains_key)
        return {false, "referenced attribute set contains no literal key of the target"};

    std::set<std::string> targets;
    for (const auto& t : r2.tuples()) targets.insert(identity_key(r2.schema(), t, x));
    for (const auto& t : r1.tuples())
        if (!targets.count(identity_key(r1.schema(), t, x)))
            return {false, "no identity match in target for tuple " +
                               render_tuple(r1.schema(), t, x)};
    return {};
}

Relation literal_join(const Relation& r1, const Relation& r2, const AttrSet& x) {
    for (const auto& a : x) {
        r1.schema().index_of(a);
        r2.schema().index_of(a);
    }
    std::vector<std::string> attrs = r1.schema().attributes();
    AttrSet nullable = r1.schema().nullable();
    std::vector<std::string> extra;
    for (const auto& a : r2.schema().attributes())
        if (!r1.schema().contains(a)) {
            attrs.push_back(a);
            extra.push_back(a);
            if (r2.schema().is_nullable(a)) nullable.insert(a);
        }
    Relation out{Schema(attrs, nullable)};

    std::map<std::string, std::vector<const Tuple*>> right;
    for (const auto& t : r2.tuples()) right[identity_key(r2.schema(), t, x)].push_back(&t);

    for (const auto& t1 : r1.tuples()) {
        auto it = right.find(identity_key(r1.schema(), t1, x));
        if (it == right.end()) continue;
        for (const Tuple* t2 : it->second) {
            std::vector<Cell> cells = t1.cells;
            for (const auto& a : extra) cells.push_back(t2->cells[r2.schema().index_of(a)]);
            out.add_cells(std::move(cells));
        }
    }
    return out;
}

LosslessResult check_lossless(const Relation& r, const AttrSet& z, const AttrSet& w) {
    AttrSet covered = z;
    covered.insert(w.begin(), w.end());
    if (covered != r.schema().attr_set())
        throw SchemaError("fragments do not cover the schema exactly");

    AttrSet on;
    std::set_intersection(z.begin(), z.end(), w.begin(), w.end(),
                          std::inserter(on, on.begin()));
    Relation joined = literal_join(project(r, z), project(r, w), on);

    AttrSet all = r.schema().attr_set();
    std::map<std::string, const Tuple*> left, right;
    for (const auto& t : r.tuples()) left.emplace(identity_key(r.schema(), t, all), &t);
    for (const auto& t : joined.tuples())
        right.emplace(identity_key(joined.schema(), t, all), &t);

    for (const auto& [key, t] : left)
        if (!right.count(key))
            return {false, "missing from join: " + render_tuple(r.schema(), *t, all)};
    for (const auto& [key, t] : right)
        if (!left.count(key))
            return {false, "spurious in join: " + render_tuple(joined.schema(), *t, all)};
    return {};
}

Decomposition decompose_step(const Relation& r, const FDSet& f, const FD& fd) {
    (void)f;
    CheckResult res = holds_literal(r, fd);
    if (!res)
        throw PreconditionError("splitting FD does not hold literally: " + fd.to_string(),
                                res.violation);
    AttrSet z = fd.lhs;
    z.insert(fd.rhs.begin(), fd.rhs.end());
    if (z == r.schema().attr_set())
        throw PreconditionError("FD spans the whole schema, nothing to split");
    AttrSet w = fd.lhs;
    for (const auto& a : r.schema().attributes())
        if (!fd.rhs.count(a)) w.insert(a);
    return {z, w};
}

}  // namespace nullfd
