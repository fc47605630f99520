#pragma once

#include <cstdint>
#include <optional>

#include "nullfd/fd.hpp"
#include "nullfd/relation.hpp"

namespace nullfd {

enum class Mode { Classical, Literal, SuperReflexive, Strong, Weak };

const char* to_string(Mode mode);
std::optional<Mode> mode_from_string(const std::string& s);

struct NullPresentError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct SizeGuardError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Violation {
    FD fd;
    std::int64_t tuple_a = -1;
    std::int64_t tuple_b = -1;
    std::string detail;
};

struct CheckResult {
    bool ok = true;
    std::optional<Violation> violation;
    explicit operator bool() const { return ok; }
};

/// Total assignment of values to the null-marker occurrences of one
/// relation; applying it yields a possible world.
struct Valuation {
    std::map<std::int64_t, Value> assignment;
};

Relation apply_valuation(const Relation& r, const Valuation& phi);

struct WeakResult {
    bool ok = true;
    std::optional<Valuation> witness;
    std::optional<Violation> violation;
    explicit operator bool() const { return ok; }
};

/// identical(t,u,lhs) ⇒ identical(t,u,rhs) for all pairs.
CheckResult holds_literal(const Relation& r, const FD& f);

/// eq3(t,u,lhs) ≠ false ⇒ eq3(t,u,rhs) ≠ false for all pairs.
CheckResult holds_super_reflexive(const Relation& r, const FD& f);

/// Holds in every possible world. Decided pairwise: for each singleton
/// component X→A, eq3(t,u,X) ≠ false forces t[A], u[A] present and
/// equal.
CheckResult holds_strong(const Relation& r, const FD& f);

/// Holds in some possible world; returns a concrete witness valuation.
WeakResult holds_weak(const Relation& r, const FD& f);

/// Classical FD check; throws NullPresentError if lhs ∪ rhs columns
/// contain markers.
CheckResult holds_classical(const Relation& r, const FD& f);

CheckResult check(const Relation& r, const FD& f, Mode mode);

enum class Quantifier { Exists, ForAll };

/// Brute-force enumeration of all valuations over the finite domain
/// (values of r plus one fresh value per marker); test oracle, desk
/// scale only.
bool world_oracle(const Relation& r, const FDSet& f, Quantifier q,
                  std::uint64_t cap = 1'000'000);

struct JointWeakResult {
    bool ok = false;
    std::optional<Valuation> witness;
    explicit operator bool() const { return ok; }
};

/// Is there one world satisfying every FD of the set classically?
JointWeakResult joint_weak(const Relation& r, const FDSet& f,
                           std::uint64_t cap = 1'000'000);

}  // namespace nullfd
