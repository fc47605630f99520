#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "nullfd/fd.hpp"
#include "nullfd/semantics.hpp"

namespace nullfd {

enum class NullSort { High, Low };

struct InitialViolationError : std::runtime_error {
    explicit InitialViolationError(std::vector<Violation> v)
        : std::runtime_error("relation violates FDs at index build time"),
          violations(std::move(v)) {}
    std::vector<Violation> violations;
};

struct WriteOutcome {
    bool accepted = false;
    std::vector<Violation> violations;
    std::size_t candidate_set_size = 0;  // Σ|S| over checked FDs
    std::int64_t tuple_id = -1;          // assigned on accept
    bool full_scan = false;              // an SRFD degraded to a whole-relation scan
};

/// Sorted duplicate-free intersection, linear merge with galloping
/// skips; O(Σ|Si| + |S|) plus the log factors from the jumps.
std::vector<std::int64_t> intersect_sorted(
    const std::vector<std::vector<std::int64_t>>& lists);

/// Relation plus the indexes backing incremental LFD/SRFD insert and
/// update checks. Single writer, shared readers between writes.
class IndexedRelation {
public:
    /// Verifies the relation against every FD first; throws
    /// InitialViolationError listing all offenders.
    static IndexedRelation build(const Relation& r, const FDSet& literal_fds,
                                 const FDSet& sr_fds, NullSort null_sort = NullSort::High);

    WriteOutcome try_insert(const std::vector<std::optional<Value>>& row);
    WriteOutcome try_update(std::int64_t old_id, const std::vector<std::optional<Value>>& row);

    const Relation& base() const { return base_; }
    const FDSet& literal_fds() const { return literal_fds_; }
    const FDSet& sr_fds() const { return sr_fds_; }

private:
    // composite key part: null sorts before or after all values
    struct Part {
        int rank;  // 0 = null-low, 1 = value, 2 = null-high
        Value value;
        auto operator<=>(const Part&) const = default;
    };
    using CompositeKey = std::vector<Part>;

    struct LiteralIndex {
        FD fd;
        std::vector<std::size_t> lhs_cols;  // schema order
        std::map<CompositeKey, std::vector<std::int64_t>> postings;
    };

    struct SrIndex {
        FD fd;  // singleton RHS disjoint from LHS
        std::size_t rhs_col;
        // one ordered index per LHS attribute
        std::map<std::size_t, std::map<Part, std::vector<std::int64_t>>> per_attr;
    };

    IndexedRelation(Schema schema, NullSort null_sort)
        : base_(std::move(schema)), null_sort_(null_sort) {}

    Part part_of(const Cell& c) const;
    CompositeKey literal_key(const LiteralIndex& ix, const std::vector<Cell>& cells) const;
    void index_tuple(std::int64_t id, const std::vector<Cell>& cells);
    void unindex_tuple(std::int64_t id, const std::vector<Cell>& cells);

    // checks `cells` against the current state, ignoring `exclude_id`
    WriteOutcome check(const std::vector<Cell>& cells, std::int64_t exclude_id) const;

    Relation base_;
    NullSort null_sort_;
    FDSet literal_fds_;
    FDSet sr_fds_;
    std::vector<LiteralIndex> literal_indexes_;
    std::vector<SrIndex> sr_indexes_;
};

}  // namespace nullfd
