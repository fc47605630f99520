#pragma once

#include <random>

#include "nullfd/fd.hpp"
#include "nullfd/relation.hpp"

namespace nullfd::testing {

// Table: professor | chair | department
inline Relation make_table1() {
    Relation r{Schema({"professor", "chair", "department"})};
    r.add_row({Value{"Joe"}, std::nullopt, Value{"Mathematics"}});
    r.add_row({Value{"Joe"}, Value{"Jill"}, Value{"Computer Science"}});
    r.add_row({Value{"Bill"}, Value{"Arthur"}, Value{"Mathematics"}});
    return r;
}

// Table: SSN | income | taxation
inline Relation make_table2() {
    Relation r{Schema({"SSN", "income", "taxation"})};
    r.add_row({Value{"1112233"}, std::nullopt, Value{"15%"}});
    r.add_row({Value{"1112233"}, std::nullopt, Value{"25%"}});
    return r;
}

inline FD fd(const AttrSet& lhs, const AttrSet& rhs) { return FD{lhs, rhs}; }

// desk-scale random family: ≤5 tuples, ≤4 attributes, ≤3 values,
// ≤3 markers
inline Relation random_relation(std::mt19937& gen, int max_tuples = 5, int max_attrs = 4,
                                int max_values = 3, int max_markers = 3) {
    std::uniform_int_distribution<int> n_attrs{1, max_attrs};
    int attrs = n_attrs(gen);
    std::vector<std::string> names;
    for (int i = 0; i < attrs; ++i) names.push_back(std::string(1, char('A' + i)));
    Relation r{Schema(names)};

    std::uniform_int_distribution<int> n_tuples{0, max_tuples};
    std::uniform_int_distribution<int> value{0, max_values - 1};
    int tuples = n_tuples(gen);
    std::vector<std::vector<std::optional<Value>>> rows;
    for (int t = 0; t < tuples; ++t) {
        std::vector<std::optional<Value>> row;
        for (int a = 0; a < attrs; ++a) row.push_back("v" + std::to_string(value(gen)));
        rows.push_back(std::move(row));
    }
    if (tuples > 0) {
        std::uniform_int_distribution<int> n_markers{0, max_markers};
        std::uniform_int_distribution<int> pick_t{0, tuples - 1};
        std::uniform_int_distribution<int> pick_a{0, attrs - 1};
        for (int m = n_markers(gen); m > 0; --m) rows[pick_t(gen)][pick_a(gen)] = std::nullopt;
    }
    for (auto& row : rows) r.add_row(row);
    return r;
}

inline AttrSet random_attr_subset(std::mt19937& gen, const Schema& schema,
                                  bool allow_empty) {
    std::uniform_int_distribution<int> coin{0, 1};
    AttrSet out;
    for (;;) {
        out.clear();
        for (const auto& a : schema.attributes())
            if (coin(gen)) out.insert(a);
        if (allow_empty || !out.empty()) return out;
    }
}

inline FD random_fd(std::mt19937& gen, const Schema& schema) {
    AttrSet lhs = random_attr_subset(gen, schema, true);
    AttrSet rhs = random_attr_subset(gen, schema, false);
    return FD{std::move(lhs), std::move(rhs)};
}

// nontrivial FD usable inside an FDSet
inline FD random_stored_fd(std::mt19937& gen, const Schema& schema) {
    for (;;) {
        FD f = random_fd(gen, schema);
        if (!is_trivial(f)) return f;
    }
}

}  // namespace nullfd::testing
