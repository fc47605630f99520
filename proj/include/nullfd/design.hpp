#pragma once

#include "nullfd/fd.hpp"
#include "nullfd/realize.hpp"
#include "nullfd/relation.hpp"
#include "nullfd/semantics.hpp"

namespace nullfd {

struct LiteralKeyReport {
    std::vector<AttrSet> superkeys;
    std::vector<AttrSet> keys;  // minimal superkeys
};

/// Enumerates literal superkeys of the current extension, ascending by
/// size. Refuses schemas wider than 12 attributes.
LiteralKeyReport literal_keys(const Relation& r);

struct FkResult {
    bool ok = true;
    std::string detail;
    explicit operator bool() const { return ok; }
};

/// X must contain a literal key of r2 and every r1 tuple must have an
/// identity match in r2 on X.
FkResult check_literal_fk(const Relation& r1, const Relation& r2, const AttrSet& x);

/// Join on identity matching over X; result schema is sch(r1) followed
/// by sch(r2) − sch(r1). Markers in the output get fresh occurrence ids.
Relation literal_join(const Relation& r1, const Relation& r2, const AttrSet& x);

struct LosslessResult {
    bool lossless = true;
    std::string counterexample;  // rendered tuple from the symmetric difference
    explicit operator bool() const { return lossless; }
};

/// Materializes π_Z(r) ⨝̂ π_W(r) and compares with r as sets under
/// identity. Z ∪ W must cover the schema.
LosslessResult check_lossless(const Relation& r, const AttrSet& z, const AttrSet& w);

struct Decomposition {
    AttrSet z;  // lhs ∪ rhs of the splitting FD
    AttrSet w;  // remaining attributes plus the lhs
};

/// One BCNF-style split on a literally-holding FD; the result is
/// guaranteed lossless.
Decomposition decompose_step(const Relation& r, const FDSet& f, const FD& fd);

}  // namespace nullfd
