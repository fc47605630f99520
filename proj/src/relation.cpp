#include "nullfd/relation.hpp"

#include <algorithm>

namespace nullfd {

TruthValue tv_and(TruthValue a, TruthValue b) {
    if (a == TruthValue::False || b == TruthValue::False) return TruthValue::False;
    if (a == TruthValue::Unknown || b == TruthValue::Unknown) return TruthValue::Unknown;
    return TruthValue::True;
}

const char* to_string(TruthValue tv) {
    switch (tv) {
        case TruthValue::True: return "true";
        case TruthValue::False: return "false";
        default: return "unknown";
    }
}

bool identical_cells(const Cell& a, const Cell& b) {
    if (a.null && b.null) return true;
    if (a.null || b.null) return false;
    return a.value == b.value;
}

TruthValue eq3_cells(const Cell& a, const Cell& b) {
    if (a.null || b.null) return TruthValue::Unknown;
    return a.value == b.value ? TruthValue::True : TruthValue::False;
}

Schema::Schema(std::vector<std::string> attributes)
    : Schema(std::move(attributes), AttrSet{}) {
    nullable_ = attr_set();
}

Schema::Schema(std::vector<std::string> attributes, AttrSet nullable)
    : attrs_(std::move(attributes)), nullable_(std::move(nullable)) {
    for (std::size_t i = 0; i < attrs_.size(); ++i) {
        if (!index_.emplace(attrs_[i], i).second)
            throw SchemaError("duplicate attribute name: " + attrs_[i]);
    }
    for (const auto& a : nullable_)
        if (!index_.count(a))
            throw SchemaError("nullable attribute not in schema: " + a);
}

std::size_t Schema::index_of(const std::string& attr) const {
    auto it = index_.find(attr);
    if (it == index_.end()) throw SchemaError("unknown attribute: " + attr);
    return it->second;
}

bool Schema::contains(const std::string& attr) const {
    return index_.count(attr) != 0;
}

bool Schema::is_nullable(const std::string& attr) const {
    index_of(attr);
    return nullable_.count(attr) != 0;
}

AttrSet Schema::attr_set() const {
    return AttrSet(attrs_.begin(), attrs_.end());
}

std::int64_t Relation::add_row(const std::vector<std::optional<Value>>& row) {
    if (row.size() != schema_.arity())
        throw SchemaError("row arity mismatch: expected " + std::to_string(schema_.arity()) +
                          ", got " + std::to_string(row.size()));
    std::vector<Cell> cells;
    cells.reserve(row.size());
    for (std::size_t i = 0; i < row.size(); ++i) {
        if (row[i]) {
            cells.push_back(Cell::of(*row[i]));
        } else {
            if (!schema_.is_nullable(schema_.attributes()[i]))
                throw SchemaError("null marker in non-nullable attribute: " +
                                  schema_.attributes()[i]);
            cells.push_back(Cell::null_marker(next_marker_++));
        }
    }
    pos_[next_tuple_] = tuples_.size();
    tuples_.push_back(Tuple{next_tuple_, std::move(cells)});
    return next_tuple_++;
}

std::int64_t Relation::add_cells(std::vector<Cell> cells) {
    if (cells.size() != schema_.arity()) throw SchemaError("cell arity mismatch");
    for (std::size_t i = 0; i < cells.size(); ++i) {
        if (cells[i].null) {
            if (!schema_.is_nullable(schema_.attributes()[i]))
                throw SchemaError("null marker in non-nullable attribute: " +
                                  schema_.attributes()[i]);
            cells[i].marker = next_marker_++;
        }
    }
    pos_[next_tuple_] = tuples_.size();
    tuples_.push_back(Tuple{next_tuple_, std::move(cells)});
    return next_tuple_++;
}

std::int64_t Relation::add_cells_keep_markers(std::vector<Cell> cells) {
    if (cells.size() != schema_.arity()) throw SchemaError("cell arity mismatch");
    for (std::size_t i = 0; i < cells.size(); ++i) {
        if (cells[i].null) {
            if (!schema_.is_nullable(schema_.attributes()[i]))
                throw SchemaError("null marker in non-nullable attribute: " +
                                  schema_.attributes()[i]);
            next_marker_ = std::max(next_marker_, cells[i].marker + 1);
        }
    }
    pos_[next_tuple_] = tuples_.size();
    tuples_.push_back(Tuple{next_tuple_, std::move(cells)});
    return next_tuple_++;
}

const Tuple& Relation::tuple_by_id(std::int64_t id) const {
    auto it = pos_.find(id);
    if (it == pos_.end()) throw std::out_of_range("unknown tuple id: " + std::to_string(id));
    return tuples_[it->second];
}

bool Relation::has_tuple(std::int64_t id) const { return pos_.count(id) != 0; }

void Relation::remove_tuple(std::int64_t id) {
    auto it = pos_.find(id);
    if (it == pos_.end()) throw std::out_of_range("unknown tuple id: " + std::to_string(id));
    std::size_t idx = it->second;
    tuples_.erase(tuples_.begin() + static_cast<std::ptrdiff_t>(idx));
    pos_.erase(it);
    for (auto& [tid, p] : pos_)
        if (p > idx) --p;
}

std::set<Value> Relation::value_universe() const {
    std::set<Value> out;
    for (const auto& t : tuples_)
        for (const auto& c : t.cells)
            if (c.present()) out.insert(c.value);
    return out;
}

std::vector<std::int64_t> Relation::marker_ids() const {
    std::vector<std::int64_t> out;
    for (const auto& t : tuples_)
        for (const auto& c : t.cells)
            if (c.null) out.push_back(c.marker);
    return out;
}

std::size_t Relation::marker_count() const { return marker_ids().size(); }

TruthValue eq3(const Schema& schema, const Tuple& t, const Tuple& u, const AttrSet& x) {
    TruthValue acc = TruthValue::True;  // eq3 over the empty set is true
    for (const auto& a : x) {
        std::size_t i = schema.index_of(a);
        acc = tv_and(acc, eq3_cells(t.cells[i], u.cells[i]));
        if (acc == TruthValue::False) return acc;
    }
    return acc;
}

bool identical(const Schema& schema, const Tuple& t, const Tuple& u, const AttrSet& x) {
    for (const auto& a : x) {
        std::size_t i = schema.index_of(a);
        if (!identical_cells(t.cells[i], u.cells[i])) return false;
    }
    return true;
}

bool is_duplicate(const Schema& schema, const Tuple& t, const Tuple& u) {
    return identical(schema, t, u, schema.attr_set());
}

std::string identity_key(const Schema& schema, const Tuple& t, const AttrSet& x) {
    std::string key;
    for (const auto& a : x) {
        std::size_t i = schema.index_of(a);
        const Cell& c = t.cells[i];
        if (c.null) {
            key += "\x01";
        } else {
            key += "\x02";
            key += c.value;
        }
        key += '\x00';
    }
    return key;
}

Relation project(const Relation& r, const AttrSet& x) {
    std::vector<std::string> attrs;
    AttrSet nullable;
    for (const auto& a : r.schema().attributes()) {
        if (x.count(a)) {
            attrs.push_back(a);
            if (r.schema().is_nullable(a)) nullable.insert(a);
        }
    }
    if (attrs.size() != x.size()) {
        for (const auto& a : x) r.schema().index_of(a);  // raise on the culprit
    }
    Relation out{Schema(attrs, nullable)};
    std::set<std::string> seen;
    for (const auto& t : r.tuples()) {
        std::string key = identity_key(r.schema(), t, x);
        if (!seen.insert(key).second) continue;
        std::vector<Cell> cells;
        for (const auto& a : attrs) cells.push_back(t.cells[r.schema().index_of(a)]);
        out.add_cells(std::move(cells));
    }
    return out;
}

Value FreshValues::next() {
    for (;;) {
        Value v = "\xE2\x8A\xA5" + std::to_string(counter_++);  // ⊥n
        if (used_.insert(v).second) return v;
    }
}

}  // namespace nullfd
