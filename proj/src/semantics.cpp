#include "nullfd/semantics.hpp"

#include <algorithm>

namespace nullfd {

const char* to_string(Mode mode) {
    switch (mode) {
        case Mode::Classical: return "classical";
        case Mode::Literal: return "literal";
        case Mode::SuperReflexive: return "sr";
        case Mode::Strong: return "strong";
        default: return "weak";
    }
}

std::optional<Mode> mode_from_string(const std::string& s) {
    if (s == "classical") return Mode::Classical;
    if (s == "literal") return Mode::Literal;
    if (s == "sr" || s == "super-reflexive") return Mode::SuperReflexive;
    if (s == "strong") return Mode::Strong;
    if (s == "weak") return Mode::Weak;
    return std::nullopt;
}

Relation apply_valuation(const Relation& r, const Valuation& phi) {
    Relation out{r.schema()};
    for (const auto& t : r.tuples()) {
        std::vector<Cell> cells;
        cells.reserve(t.cells.size());
        for (const auto& c : t.cells) {
            if (c.present()) {
                cells.push_back(c);
            } else {
                auto it = phi.assignment.find(c.marker);
                if (it == phi.assignment.end())
                    throw std::invalid_argument("valuation is not total: marker " +
                                                std::to_string(c.marker));
                cells.push_back(Cell::of(it->second));
            }
        }
        out.add_cells(std::move(cells));
    }
    return out;
}

namespace {

void validate_fd(const Relation& r, const FD& f) {
    for (const auto& a : f.lhs) r.schema().index_of(a);
    for (const auto& a : f.rhs) r.schema().index_of(a);
}

// RHS attributes that actually constrain anything
AttrSet effective_rhs(const FD& f) {
    AttrSet out;
    for (const auto& a : f.rhs)
        if (!f.lhs.count(a)) out.insert(a);
    return out;
}

}  // namespace

CheckResult holds_literal(const Relation& r, const FD& f) {
    validate_fd(r, f);
    const auto& ts = r.tuples();
    const auto& schema = r.schema();
    for (std::size_t i = 0; i < ts.size(); ++i)
        for (std::size_t j = i + 1; j < ts.size(); ++j) {
            if (!identical(schema, ts[i], ts[j], f.lhs)) continue;
            for (const auto& a : f.rhs) {
                std::size_t k = schema.index_of(a);
                if (!identical_cells(ts[i].cells[k], ts[j].cells[k]))
                    return {false, Violation{f, ts[i].id, ts[j].id,
                                             "lhs identical but rhs differs on " + a}};
            }
        }
    return {};
}

CheckResult holds_super_reflexive(const Relation& r, const FD& f) {
    validate_fd(r, f);
    const auto& ts = r.tuples();
    const auto& schema = r.schema();
    for (std::size_t i = 0; i < ts.size(); ++i)
        for (std::size_t j = i + 1; j < ts.size(); ++j) {
            if (eq3(schema, ts[i], ts[j], f.lhs) == TruthValue::False) continue;
            for (const auto& a : f.rhs) {
                std::size_t k = schema.index_of(a);
                if (eq3_cells(ts[i].cells[k], ts[j].cells[k]) == TruthValue::False)
                    return {false, Violation{f, ts[i].id, ts[j].id,
                                             "lhs not false but rhs false on " + a}};
            }
        }
    return {};
}

CheckResult holds_strong(const Relation& r, const FD& f) {
    validate_fd(r, f);
    AttrSet rhs = effective_rhs(f);
    if (rhs.empty()) return {};
    const auto& ts = r.tuples();
    const auto& schema = r.schema();
    for (std::size_t i = 0; i < ts.size(); ++i)
        for (std::size_t j = i + 1; j < ts.size(); ++j) {
            if (eq3(schema, ts[i], ts[j], f.lhs) == TruthValue::False) continue;
            // some world equates the lhs; the rhs must then match in
            // every such world, so markers are fatal here
            for (const auto& a : rhs) {
                std::size_t k = schema.index_of(a);
                const Cell& ca = ts[i].cells[k];
                const Cell& cb = ts[j].cells[k];
                if (ca.null || cb.null || ca.value != cb.value)
                    return {false, Violation{f, ts[i].id, ts[j].id,
                                             "rhs not definitely equal on " + a}};
            }
        }
    return {};
}

WeakResult holds_weak(const Relation& r, const FD& f) {
    validate_fd(r, f);
    AttrSet rhs = effective_rhs(f);
    const auto& ts = r.tuples();
    const auto& schema = r.schema();

    // tuples whose lhs is fully present form the classes that exist in
    // every world; marker-bearing lhs tuples can always be isolated
    std::map<std::string, std::vector<std::size_t>> classes;
    for (std::size_t i = 0; i < ts.size(); ++i) {
        bool all_present = true;
        for (const auto& a : f.lhs)
            if (ts[i].cells[schema.index_of(a)].null) all_present = false;
        if (all_present)
            classes[identity_key(schema, ts[i], f.lhs)].push_back(i);
    }

    for (const auto& [key, members] : classes) {
        (void)key;
        for (const auto& a : rhs) {
            std::size_t k = schema.index_of(a);
            const Cell* first = nullptr;
            std::size_t first_idx = 0;
            for (std::size_t i : members) {
                const Cell& c = ts[i].cells[k];
                if (!c.present()) continue;
                if (!first) {
                    first = &c;
                    first_idx = i;
                } else if (first->value != c.value) {
                    return {false, std::nullopt,
                            Violation{f, ts[first_idx].id, ts[i].id,
                                      "two distinct present values on " + a +
                                          " within one lhs class"}};
                }
            }
        }
    }

    // build a witness valuation
    Valuation phi;
    FreshValues fresh{r.value_universe()};
    for (const auto& [key, members] : classes) {
        (void)key;
        for (const auto& a : rhs) {
            std::size_t k = schema.index_of(a);
            std::optional<Value> v;
            for (std::size_t i : members)
                if (ts[i].cells[k].present()) v = ts[i].cells[k].value;
            std::optional<Value> shared;
            for (std::size_t i : members) {
                const Cell& c = ts[i].cells[k];
                if (!c.null) continue;
                if (!v && !shared) shared = fresh.next();
                phi.assignment[c.marker] = v ? *v : *shared;
            }
        }
    }
    for (std::int64_t m : r.marker_ids())
        if (!phi.assignment.count(m)) phi.assignment[m] = fresh.next();
    return {true, phi, std::nullopt};
}

CheckResult holds_classical(const Relation& r, const FD& f) {
    validate_fd(r, f);
    AttrSet cols = f.lhs;
    cols.insert(f.rhs.begin(), f.rhs.end());
    const auto& ts = r.tuples();
    const auto& schema = r.schema();
    for (const auto& t : ts)
        for (const auto& a : cols)
            if (t.cells[schema.index_of(a)].null)
                throw NullPresentError("null marker in attribute " + a +
                                       " of tuple " + std::to_string(t.id));
    for (std::size_t i = 0; i < ts.size(); ++i)
        for (std::size_t j = i + 1; j < ts.size(); ++j) {
            if (eq3(schema, ts[i], ts[j], f.lhs) != TruthValue::True) continue;
            if (eq3(schema, ts[i], ts[j], f.rhs) != TruthValue::True)
                return {false, Violation{f, ts[i].id, ts[j].id, "classical violation"}};
        }
    return {};
}

CheckResult check(const Relation& r, const FD& f, Mode mode) {
    switch (mode) {
        case Mode::Classical: return holds_classical(r, f);
        case Mode::Literal: return holds_literal(r, f);
        case Mode::SuperReflexive: return holds_super_reflexive(r, f);
        case Mode::Strong: return holds_strong(r, f);
        case Mode::Weak: {
            WeakResult w = holds_weak(r, f);
            return {w.ok, w.violation};
        }
    }
    return {};
}

namespace {

bool world_satisfies(const Relation& world, const FDSet& f) {
    const auto& ts = world.tuples();
    const auto& schema = world.schema();
    for (const auto& fd : f.fds())
        for (std::size_t i = 0; i < ts.size(); ++i)
            for (std::size_t j = i + 1; j < ts.size(); ++j) {
                if (eq3(schema, ts[i], ts[j], fd.lhs) != TruthValue::True) continue;
                if (eq3(schema, ts[i], ts[j], fd.rhs) != TruthValue::True) return false;
            }
    return true;
}

// enumerates every valuation over a finite domain wide enough to realize
// any equality pattern among the markers and the existing constants
template <typename Visit>
void for_each_world(const Relation& r, std::uint64_t cap, Visit&& visit) {
    std::vector<std::int64_t> markers = r.marker_ids();
    std::set<Value> universe = r.value_universe();
    std::vector<Value> domain(universe.begin(), universe.end());
    FreshValues fresh{universe};
    for (std::size_t i = 0; i < markers.size(); ++i) domain.push_back(fresh.next());

    std::uint64_t total = 1;
    for (std::size_t i = 0; i < markers.size(); ++i) {
        if (total > cap / std::max<std::uint64_t>(domain.size(), 1))
            throw SizeGuardError("world enumeration exceeds cap of " + std::to_string(cap));
        total *= domain.size();
    }

    std::vector<std::size_t> odometer(markers.size(), 0);
    for (;;) {
        Valuation phi;
        for (std::size_t i = 0; i < markers.size(); ++i)
            phi.assignment[markers[i]] = domain[odometer[i]];
        if (!visit(phi)) return;
        std::size_t pos = 0;
        while (pos < odometer.size() && ++odometer[pos] == domain.size())
            odometer[pos++] = 0;
        if (pos == odometer.size()) return;
    }
}

}  // namespace

bool world_oracle(const Relation& r, const FDSet& f, Quantifier q, std::uint64_t cap) {
    bool result = (q == Quantifier::ForAll);
    for_each_world(r, cap, [&](const Valuation& phi) {
        bool sat = world_satisfies(apply_valuation(r, phi), f);
        if (q == Quantifier::Exists && sat) {
            result = true;
            return false;
        }
        if (q == Quantifier::ForAll && !sat) {
            result = false;
            return false;
        }
        return true;
    });
    return result;
}

JointWeakResult joint_weak(const Relation& r, const FDSet& f, std::uint64_t cap) {
    JointWeakResult res;
    for_each_world(r, cap, [&](const Valuation& phi) {
        if (world_satisfies(apply_valuation(r, phi), f)) {
            res.ok = true;
            res.witness = phi;
            return false;
        }
        return true;
    });
    return res;
}

}  // namespace nullfd
