#include "nullfd/realize.hpp"

#include <algorithm>

namespace nullfd {

const char* to_string(StepReason r) {
    switch (r) {
        case StepReason::LhsArbitrary: return "LHS-arbitrary";
        case StepReason::RhsGroupValue: return "RHS-group-value";
        case StepReason::RhsFresh: return "RHS-fresh";
        default: return "LFD-single-fresh";
    }
}

std::string RealizationPlan::to_text() const {
    std::string out;
    for (const auto& s : steps) {
        out += "occ=" + std::to_string(s.occurrence) + " attr=" + s.attribute +
               " value=" + s.value + " reason=" + to_string(s.reason) + "\n";
    }
    return out;
}

namespace {

// mutable working copy; markers keep their input occurrence ids
struct Workspace {
    explicit Workspace(const Relation& r) : schema(r.schema()), tuples(r.tuples()) {}

    const Schema& schema;
    std::vector<Tuple> tuples;
    RealizationPlan plan;

    void assign(std::size_t tuple_idx, const std::string& attr, const Value& v,
                StepReason reason) {
        Cell& c = tuples[tuple_idx].cells[schema.index_of(attr)];
        plan.steps.push_back({c.marker, attr, v, reason});
        c = Cell::of(v);
    }

    Relation finish() const {
        Relation out{schema};
        for (const auto& t : tuples) out.add_cells_keep_markers(t.cells);
        return out;
    }
};

// replace every marker of one column, using the single FD whose RHS it
// is (group value) or fresh values when no FD constrains it
void realize_column(Workspace& ws, const std::string& attr, const FD* rhs_fd,
                    FreshValues& fresh) {
    std::size_t col = ws.schema.index_of(attr);
    if (!rhs_fd) {
        for (std::size_t i = 0; i < ws.tuples.size(); ++i)
            if (ws.tuples[i].cells[col].null)
                ws.assign(i, attr, fresh.next(), StepReason::LhsArbitrary);
        return;
    }
    // group by the (now null-free) LHS of rhs_fd, first-seen order
    std::map<std::string, std::vector<std::size_t>> groups;
    std::vector<std::string> order;
    for (std::size_t i = 0; i < ws.tuples.size(); ++i) {
        std::string key;
        for (const auto& a : rhs_fd->lhs) {
            const Cell& c = ws.tuples[i].cells[ws.schema.index_of(a)];
            if (c.null)
                throw std::logic_error("realization order broken: marker left in " + a);
            key += c.value;
            key += '\0';
        }
        auto [it, inserted] = groups.try_emplace(key);
        if (inserted) order.push_back(key);
        it->second.push_back(i);
    }
    for (const auto& key : order) {
        const auto& members = groups[key];
        std::optional<Value> v;
        for (std::size_t i : members)
            if (ws.tuples[i].cells[col].present()) v = ws.tuples[i].cells[col].value;
        StepReason reason = v ? StepReason::RhsGroupValue : StepReason::RhsFresh;
        std::optional<Value> chosen = v;
        for (std::size_t i : members) {
            if (!ws.tuples[i].cells[col].null) continue;
            if (!chosen) chosen = fresh.next();
            ws.assign(i, attr, *chosen, reason);
        }
    }
}

}  // namespace

std::pair<Relation, RealizationPlan> realize_literal(const Relation& r, const FDSet& f) {
    for (const auto& fd : f.fds()) {
        CheckResult res = holds_literal(r, fd);
        if (!res)
            throw PreconditionError("FD does not hold literally: " + fd.to_string(),
                                    res.violation);
    }
    Workspace ws{r};
    FreshValues fresh{r.value_universe()};
    Value v = fresh.next();
    for (std::size_t i = 0; i < ws.tuples.size(); ++i)
        for (const auto& a : ws.schema.attributes())
            if (ws.tuples[i].cells[ws.schema.index_of(a)].null)
                ws.assign(i, a, v, StepReason::LfdSingleFresh);
    return {ws.finish(), ws.plan};
}

std::pair<Relation, RealizationPlan> realize_sr_fd(const Relation& r, const FD& f) {
    if (f.rhs.size() != 1 || f.lhs.count(*f.rhs.begin()))
        throw std::invalid_argument(
            "realize_sr_fd expects a singleton RHS disjoint from the LHS");
    CheckResult res = holds_super_reflexive(r, f);
    if (!res)
        throw PreconditionError("FD does not hold super-reflexively: " + f.to_string(),
                                res.violation);

    Workspace ws{r};
    FreshValues fresh{r.value_universe()};
    // phase 1: LHS markers take fresh distinct values
    for (std::size_t i = 0; i < ws.tuples.size(); ++i)
        for (const auto& a : f.lhs)
            if (ws.tuples[i].cells[ws.schema.index_of(a)].null)
                ws.assign(i, a, fresh.next(), StepReason::LhsArbitrary);
    // phase 2: RHS markers take their group's unique present value
    realize_column(ws, *f.rhs.begin(), &f, fresh);
    return {ws.finish(), ws.plan};
}

std::pair<Relation, RealizationPlan> realize_sr_set(const Relation& r, const FDSet& f,
                                                    const AttrSet& nullable) {
    for (const auto& fd : f.fds()) {
        CheckResult res = holds_super_reflexive(r, fd);
        if (!res)
            throw PreconditionError("FD does not hold super-reflexively: " + fd.to_string(),
                                    res.violation);
    }
    OneRhsResult onerhs = check_1rhs(f, nullable);
    if (!onerhs.ok) {
        std::string attrs;
        for (const auto& a : onerhs.culprits()) attrs += (attrs.empty() ? "" : ",") + a;
        throw PreconditionError("1RHS condition violated on " + attrs);
    }

    FDSet cover = minimal_cover(f);
    std::map<std::string, FD> rhs_fd;  // nullable attr -> the one FD it answers to
    for (const auto& fd : cover.fds())
        for (const auto& a : fd.rhs)
            if (nullable.count(a)) rhs_fd.emplace(a, FD{fd.lhs, AttrSet{a}});

    DeterminesGraph g = determines_graph(f, nullable);

    Workspace ws{r};
    FreshValues fresh{r.value_universe()};
    AttrSet remaining = nullable;
    while (!remaining.empty()) {
        AttrSet zero_in;
        for (const auto& a : remaining) {
            bool has_pred = false;
            for (const auto& b : remaining)
                if (b != a && g.has_edge(b, a)) has_pred = true;
            if (!has_pred) zero_in.insert(a);
        }
        if (zero_in.empty())
            throw std::logic_error("determines graph has a cycle despite 1RHS");
        for (const auto& a : zero_in) {
            auto it = rhs_fd.find(a);
            realize_column(ws, a, it == rhs_fd.end() ? nullptr : &it->second, fresh);
            remaining.erase(a);
        }
    }
    return {ws.finish(), ws.plan};
}

}  // namespace nullfd
