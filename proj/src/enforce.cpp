#include "nullfd/enforce.hpp"

#include <algorithm>

namespace nullfd {

std::vector<std::int64_t> intersect_sorted(
    const std::vector<std::vector<std::int64_t>>& lists) {
    if (lists.empty()) return {};
    std::vector<const std::vector<std::int64_t>*> sorted;
    for (const auto& l : lists) sorted.push_back(&l);
    std::sort(sorted.begin(), sorted.end(),
              [](const auto* a, const auto* b) { return a->size() < b->size(); });

    std::vector<std::int64_t> result = *sorted.front();
    for (std::size_t k = 1; k < sorted.size() && !result.empty(); ++k) {
        const auto& other = *sorted[k];
        std::vector<std::int64_t> next;
        auto it = other.begin();
        for (std::int64_t v : result) {
            it = std::lower_bound(it, other.end(), v);  // galloping skip
            if (it == other.end()) break;
            if (*it == v) next.push_back(v);
        }
        result = std::move(next);
    }
    return result;
}

namespace {

std::vector<std::int64_t> merge_sorted(const std::vector<std::int64_t>& a,
                                       const std::vector<std::int64_t>& b) {
    std::vector<std::int64_t> out;
    out.reserve(a.size() + b.size());
    std::merge(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

void insert_id(std::vector<std::int64_t>& list, std::int64_t id) {
    list.insert(std::lower_bound(list.begin(), list.end(), id), id);
}

void erase_id(std::vector<std::int64_t>& list, std::int64_t id) {
    auto it = std::lower_bound(list.begin(), list.end(), id);
    if (it != list.end() && *it == id) list.erase(it);
}

}  // namespace

IndexedRelation::Part IndexedRelation::part_of(const Cell& c) const {
    if (c.null) return Part{null_sort_ == NullSort::High ? 2 : 0, {}};
    return Part{1, c.value};
}

IndexedRelation::CompositeKey IndexedRelation::literal_key(
    const LiteralIndex& ix, const std::vector<Cell>& cells) const {
    CompositeKey key;
    key.reserve(ix.lhs_cols.size());
    for (std::size_t col : ix.lhs_cols) key.push_back(part_of(cells[col]));
    return key;
}

IndexedRelation IndexedRelation::build(const Relation& r, const FDSet& literal_fds,
                                       const FDSet& sr_fds, NullSort null_sort) {
    std::vector<Violation> initial;
    for (const auto& fd : literal_fds.fds()) {
        CheckResult res = holds_literal(r, fd);
        if (!res) initial.push_back(*res.violation);
    }
    for (const auto& fd : sr_fds.fds()) {
        CheckResult res = holds_super_reflexive(r, fd);
        if (!res) initial.push_back(*res.violation);
    }
    if (!initial.empty()) throw InitialViolationError(std::move(initial));

    IndexedRelation ir{r.schema(), null_sort};
    ir.base_ = r;
    ir.literal_fds_ = literal_fds;
    ir.sr_fds_ = sr_fds;

    for (const auto& fd : literal_fds.fds()) {
        LiteralIndex ix;
        ix.fd = fd;
        for (const auto& a : r.schema().attributes())
            if (fd.lhs.count(a)) ix.lhs_cols.push_back(r.schema().index_of(a));
        ir.literal_indexes_.push_back(std::move(ix));
    }
    FDSet sr_components = decompose_rhs(sr_fds);
    for (const auto& fd : sr_components.fds()) {
        SrIndex ix;
        ix.fd = fd;
        ix.rhs_col = r.schema().index_of(*fd.rhs.begin());
        for (const auto& a : fd.lhs) ix.per_attr[r.schema().index_of(a)];
        ir.sr_indexes_.push_back(std::move(ix));
    }
    for (const auto& t : ir.base_.tuples()) ir.index_tuple(t.id, t.cells);
    return ir;
}

void IndexedRelation::index_tuple(std::int64_t id, const std::vector<Cell>& cells) {
    for (auto& ix : literal_indexes_) insert_id(ix.postings[literal_key(ix, cells)], id);
    for (auto& ix : sr_indexes_)
        for (auto& [col, index] : ix.per_attr) insert_id(index[part_of(cells[col])], id);
}

void IndexedRelation::unindex_tuple(std::int64_t id, const std::vector<Cell>& cells) {
    for (auto& ix : literal_indexes_) {
        auto key = literal_key(ix, cells);
        auto it = ix.postings.find(key);
        if (it != ix.postings.end()) {
            erase_id(it->second, id);
            if (it->second.empty()) ix.postings.erase(it);
        }
    }
    for (auto& ix : sr_indexes_)
        for (auto& [col, index] : ix.per_attr) {
            auto it = index.find(part_of(cells[col]));
            if (it != index.end()) {
                erase_id(it->second, id);
                if (it->second.empty()) index.erase(it);
            }
        }
}

WriteOutcome IndexedRelation::check(const std::vector<Cell>& cells,
                                    std::int64_t exclude_id) const {
    WriteOutcome out;
    const Schema& schema = base_.schema();
    static const std::vector<std::int64_t> kEmpty;

    for (const auto& ix : literal_indexes_) {
        auto it = ix.postings.find(literal_key(ix, cells));
        const auto& s = it == ix.postings.end() ? kEmpty : it->second;
        for (std::int64_t id : s) {
            if (id == exclude_id) continue;
            ++out.candidate_set_size;
            const Tuple& other = base_.tuple_by_id(id);
            for (const auto& a : ix.fd.rhs) {
                std::size_t col = schema.index_of(a);
                if (!identical_cells(cells[col], other.cells[col])) {
                    out.violations.push_back(
                        Violation{ix.fd, id, -1, "rhs not identical on " + a});
                    break;
                }
            }
        }
    }

    for (const auto& ix : sr_indexes_) {
        if (cells[ix.rhs_col].null) continue;  // nothing to check
        std::vector<std::vector<std::int64_t>> lists;
        bool any_present = false;
        for (const auto& [col, index] : ix.per_attr) {
            if (cells[col].null) continue;
            any_present = true;
            auto vit = index.find(Part{1, cells[col].value});
            auto nit = index.find(part_of(Cell::null_marker(-1)));
            lists.push_back(merge_sorted(vit == index.end() ? kEmpty : vit->second,
                                         nit == index.end() ? kEmpty : nit->second));
        }
        std::vector<std::int64_t> s;
        if (!any_present) {
            // all-marker LHS: every existing tuple is a candidate
            out.full_scan = true;
            for (const auto& t : base_.tuples()) s.push_back(t.id);
            std::sort(s.begin(), s.end());
        } else {
            s = intersect_sorted(lists);
        }
        const Value& y = cells[ix.rhs_col].value;
        for (std::int64_t id : s) {
            if (id == exclude_id) continue;
            ++out.candidate_set_size;
            const Cell& other = base_.tuple_by_id(id).cells[ix.rhs_col];
            if (other.present() && other.value != y)
                out.violations.push_back(
                    Violation{ix.fd, id, -1, "rhs value conflict on " + *ix.fd.rhs.begin()});
        }
    }

    out.accepted = out.violations.empty();
    return out;
}

WriteOutcome IndexedRelation::try_insert(const std::vector<std::optional<Value>>& row) {
    if (row.size() != base_.schema().arity()) throw SchemaError("row arity mismatch");
    std::vector<Cell> cells;
    cells.reserve(row.size());
    for (std::size_t i = 0; i < row.size(); ++i)
        cells.push_back(row[i] ? Cell::of(*row[i]) : Cell::null_marker(-1));

    WriteOutcome out = check(cells, -1);
    if (out.accepted) {
        std::int64_t id = base_.add_row(row);
        index_tuple(id, base_.tuple_by_id(id).cells);
        out.tuple_id = id;
    }
    return out;
}

WriteOutcome IndexedRelation::try_update(std::int64_t old_id,
                                         const std::vector<std::optional<Value>>& row) {
    const Tuple& old = base_.tuple_by_id(old_id);  // throws on unknown id
    if (row.size() != base_.schema().arity()) throw SchemaError("row arity mismatch");
    std::vector<Cell> cells;
    cells.reserve(row.size());
    for (std::size_t i = 0; i < row.size(); ++i)
        cells.push_back(row[i] ? Cell::of(*row[i]) : Cell::null_marker(-1));

    // staged delete-then-insert: nothing is touched unless the check passes
    WriteOutcome out = check(cells, old_id);
    if (out.accepted) {
        std::vector<Cell> old_cells = old.cells;
        unindex_tuple(old_id, old_cells);
        base_.remove_tuple(old_id);
        std::int64_t id = base_.add_row(row);
        index_tuple(id, base_.tuple_by_id(id).cells);
        out.tuple_id = id;
    }
    return out;
}

}  // namespace nullfd
