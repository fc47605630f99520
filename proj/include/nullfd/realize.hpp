#pragma once

#include "nullfd/fd.hpp"
#include "nullfd/semantics.hpp"

namespace nullfd {

enum class StepReason { LhsArbitrary, RhsGroupValue, RhsFresh, LfdSingleFresh };

const char* to_string(StepReason r);

struct RealizationStep {
    std::int64_t occurrence = -1;
    std::string attribute;
    Value value;
    StepReason reason = StepReason::LhsArbitrary;
};

/// Ordered marker substitutions; applying any prefix never breaks a
/// checked FD.
struct RealizationPlan {
    std::vector<RealizationStep> steps;
    std::string to_text() const;
};

struct PreconditionError : std::runtime_error {
    explicit PreconditionError(const std::string& msg,
                               std::optional<Violation> v = std::nullopt)
        : std::runtime_error(msg), violation(std::move(v)) {}
    std::optional<Violation> violation;
};

/// All FDs must hold literally; replaces every marker with one fresh
/// value, after which every FD holds classically.
std::pair<Relation, RealizationPlan> realize_literal(const Relation& r, const FDSet& f);

/// f must be a singleton-RHS FD disjoint from its LHS that holds
/// super-reflexively. LHS markers get fresh values, then RHS markers
/// take their group's unique present value (or a fresh one).
std::pair<Relation, RealizationPlan> realize_sr_fd(const Relation& r, const FD& f);

/// Whole-set realization for SRFDs under the 1RHS condition: peels
/// zero-in-degree attributes off the determines graph. The output has
/// no markers left in nullable attributes.
std::pair<Relation, RealizationPlan> realize_sr_set(const Relation& r, const FDSet& f,
                                                    const AttrSet& nullable);

}  // namespace nullfd
