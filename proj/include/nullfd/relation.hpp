#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace nullfd {

using Value = std::string;
using AttrSet = std::set<std::string>;

struct SchemaError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Codd 3-valued logic for equality comparisons.
enum class TruthValue { True, False, Unknown };

TruthValue tv_and(TruthValue a, TruthValue b);
const char* to_string(TruthValue tv);

/// One field of a tuple: either a value from the domain V or a null
/// marker. Every marker occurrence carries its own id so valuations can
/// address each occurrence independently.
struct Cell {
    bool null = false;
    Value value;
    std::int64_t marker = -1;

    static Cell of(Value v) { return Cell{false, std::move(v), -1}; }
    static Cell null_marker(std::int64_t id) { return Cell{true, {}, id}; }
    bool present() const { return !null; }
};

// both null, or both the same value (marker ids do not matter)
bool identical_cells(const Cell& a, const Cell& b);
TruthValue eq3_cells(const Cell& a, const Cell& b);

class Schema {
public:
    Schema() = default;
    // all attributes nullable
    explicit Schema(std::vector<std::string> attributes);
    Schema(std::vector<std::string> attributes, AttrSet nullable);

    const std::vector<std::string>& attributes() const { return attrs_; }
    std::size_t arity() const { return attrs_.size(); }
    std::size_t index_of(const std::string& attr) const;
    bool contains(const std::string& attr) const;
    bool is_nullable(const std::string& attr) const;
    const AttrSet& nullable() const { return nullable_; }
    AttrSet attr_set() const;

private:
    std::vector<std::string> attrs_;
    std::map<std::string, std::size_t> index_;
    AttrSet nullable_;
};

struct Tuple {
    std::int64_t id = -1;
    std::vector<Cell> cells;
};

/// Finite multiset of tuples over a schema. Immutable once built except
/// through add_row; shared reads are safe.
class Relation {
public:
    explicit Relation(Schema schema) : schema_(std::move(schema)) {}

    const Schema& schema() const { return schema_; }
    const std::vector<Tuple>& tuples() const { return tuples_; }
    std::size_t size() const { return tuples_.size(); }

    /// nullopt cells become fresh null markers. Returns the tuple id.
    std::int64_t add_row(const std::vector<std::optional<Value>>& row);
    /// Cells taken verbatim; null cells are re-stamped with fresh marker ids.
    std::int64_t add_cells(std::vector<Cell> cells);
    /// Cells taken verbatim including marker ids (caller guarantees
    /// occurrence ids stay distinct).
    std::int64_t add_cells_keep_markers(std::vector<Cell> cells);

    const Tuple& tuple_by_id(std::int64_t id) const;
    bool has_tuple(std::int64_t id) const;
    void remove_tuple(std::int64_t id);

    std::set<Value> value_universe() const;
    std::vector<std::int64_t> marker_ids() const;
    std::size_t marker_count() const;

private:
    Schema schema_;
    std::vector<Tuple> tuples_;
    std::map<std::int64_t, std::size_t> pos_;  // tuple id -> index in tuples_
    std::int64_t next_marker_ = 0;
    std::int64_t next_tuple_ = 0;
};

TruthValue eq3(const Schema& schema, const Tuple& t, const Tuple& u, const AttrSet& x);
bool identical(const Schema& schema, const Tuple& t, const Tuple& u, const AttrSet& x);
bool is_duplicate(const Schema& schema, const Tuple& t, const Tuple& u);

/// Duplicate-eliminating projection; marker occurrence ids are freshly
/// assigned in the output, identity structure is preserved.
Relation project(const Relation& r, const AttrSet& x);

/// Grouping key under identity semantics: all markers in an attribute
/// position fall into one bucket.
std::string identity_key(const Schema& schema, const Tuple& t, const AttrSet& x);

/// Deterministic source of values not present in `used`: ⊥0, ⊥1, ...
class FreshValues {
public:
    explicit FreshValues(std::set<Value> used) : used_(std::move(used)) {}
    Value next();

private:
    std::set<Value> used_;
    std::int64_t counter_ = 0;
};

}  // namespace nullfd
