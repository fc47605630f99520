#pragma once

#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "nullfd/relation.hpp"

namespace nullfd {

struct FD {
    AttrSet lhs;
    AttrSet rhs;  // nonempty

    std::string to_string() const;
    bool operator==(const FD& other) const = default;
    bool operator<(const FD& other) const {
        return std::tie(lhs, rhs) < std::tie(other.lhs, other.rhs);
    }
};

bool is_trivial(const FD& f);  // rhs ⊆ lhs

/// Set of FDs. Pure loops (rhs ⊆ lhs) are silently dropped on
/// construction; duplicates are removed.
class FDSet {
public:
    FDSet() = default;
    explicit FDSet(std::vector<FD> fds);

    void add(FD f);
    const std::vector<FD>& fds() const { return fds_; }
    bool empty() const { return fds_.empty(); }
    std::size_t size() const { return fds_.size(); }
    AttrSet attributes() const;

private:
    std::vector<FD> fds_;
};

/// Splits X→{A1..An} into the singleton FDs X→{Ai} for Ai ∉ X; trivial
/// components are dropped. Equivalent to the input under every semantics
/// handled by this library.
std::vector<FD> decompose_rhs(const FD& f);
FDSet decompose_rhs(const FDSet& f);

/// Least fixpoint of X under reflexivity/augmentation/transitivity.
AttrSet attribute_closure(const AttrSet& x, const FDSet& f);

bool implies(const FDSet& f, const FD& g);

/// Canonical form: singleton RHS, no extraneous LHS attribute, no
/// redundant FD. Deterministic: attributes tried in name order, FDs in
/// input order.
FDSet minimal_cover(const FDSet& f);

/// Transitively closed "determines" relation over the nullable
/// attributes, computed on the minimal cover of the FD set.
struct DeterminesGraph {
    std::vector<std::string> nodes;
    std::set<std::pair<std::string, std::string>> edges;

    bool has_edge(const std::string& a, const std::string& b) const {
        return edges.count({a, b}) != 0;
    }
};

DeterminesGraph determines_graph(const FDSet& f, const AttrSet& nullable);

struct OneRhsViolation {
    std::string attribute;
    std::string reason;
};

struct OneRhsResult {
    bool ok = true;
    std::vector<OneRhsViolation> violations;
    AttrSet culprits() const;
};

/// Condition: every nullable attribute is on the RHS of at most one FD
/// of the minimal cover, and no two nullable attributes determine each
/// other.
OneRhsResult check_1rhs(const FDSet& f, const AttrSet& nullable);

}  // namespace nullfd
