#include "nullfd/fd.hpp"

#include <algorithm>

namespace nullfd {

namespace {

std::string join_attrs(const AttrSet& s) {
    std::string out;
    for (const auto& a : s) {
        if (!out.empty()) out += ",";
        out += a;
    }
    return out;
}

bool subset(const AttrSet& a, const AttrSet& b) {
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

}  // namespace

std::string FD::to_string() const {
    return join_attrs(lhs) + " -> " + join_attrs(rhs);
}

bool is_trivial(const FD& f) {
    return std::includes(f.lhs.begin(), f.lhs.end(), f.rhs.begin(), f.rhs.end());
}

FDSet::FDSet(std::vector<FD> fds) {
    for (auto& f : fds) add(std::move(f));
}

void FDSet::add(FD f) {
    if (f.rhs.empty()) throw std::invalid_argument("FD with empty right-hand side");
    if (is_trivial(f)) return;  // loop convention
    if (std::find(fds_.begin(), fds_.end(), f) != fds_.end()) return;
    fds_.push_back(std::move(f));
}

AttrSet FDSet::attributes() const {
    AttrSet out;
    for (const auto& f : fds_) {
        out.insert(f.lhs.begin(), f.lhs.end());
        out.insert(f.rhs.begin(), f.rhs.end());
    }
    return out;
}

std::vector<FD> decompose_rhs(const FD& f) {
    std::vector<FD> out;
    for (const auto& a : f.rhs) {
        if (f.lhs.count(a)) continue;
        out.push_back(FD{f.lhs, AttrSet{a}});
    }
    return out;
}

FDSet decompose_rhs(const FDSet& f) {
    FDSet out;
    for (const auto& fd : f.fds())
        for (auto& c : decompose_rhs(fd)) out.add(std::move(c));
    return out;
}

AttrSet attribute_closure(const AttrSet& x, const FDSet& f) {
    AttrSet closure = x;
    bool changed = true;
    while (changed) {
        changed = false;
        for (const auto& fd : f.fds()) {
            if (!subset(fd.lhs, closure)) continue;
            for (const auto& a : fd.rhs)
                changed |= closure.insert(a).second;
        }
    }
    return closure;
}

bool implies(const FDSet& f, const FD& g) {
    return subset(g.rhs, attribute_closure(g.lhs, f));
}

FDSet minimal_cover(const FDSet& f) {
    std::vector<FD> work;
    for (const auto& fd : f.fds())
        for (const auto& c : decompose_rhs(fd))
            if (std::find(work.begin(), work.end(), c) == work.end()) work.push_back(c);

    // drop extraneous LHS attributes
    for (std::size_t i = 0; i < work.size(); ++i) {
        bool shrunk = true;
        while (shrunk) {
            shrunk = false;
            for (const auto& b : work[i].lhs) {
                AttrSet reduced = work[i].lhs;
                reduced.erase(b);
                if (subset(work[i].rhs, attribute_closure(reduced, FDSet{work}))) {
                    work[i].lhs = reduced;
                    shrunk = true;
                    break;
                }
            }
        }
    }

    // drop redundant FDs
    for (std::size_t i = 0; i < work.size();) {
        std::vector<FD> rest;
        for (std::size_t j = 0; j < work.size(); ++j)
            if (j != i) rest.push_back(work[j]);
        if (implies(FDSet{rest}, work[i]))
            work.erase(work.begin() + static_cast<std::ptrdiff_t>(i));
        else
            ++i;
    }
    return FDSet{work};
}

namespace {

// edge relation of "determines" over all attributes, transitively closed
std::set<std::pair<std::string, std::string>> determines_closure(const FDSet& f) {
    FDSet cover = minimal_cover(f);
    std::set<std::pair<std::string, std::string>> edges;
    for (const auto& fd : cover.fds())
        for (const auto& a : fd.lhs)
            for (const auto& b : fd.rhs) edges.insert({a, b});
    bool changed = true;
    while (changed) {
        changed = false;
        for (const auto& e1 : std::set(edges))
            for (const auto& e2 : std::set(edges))
                if (e1.second == e2.first && e1.first != e2.second)
                    changed |= edges.insert({e1.first, e2.second}).second;
    }
    return edges;
}

}  // namespace

DeterminesGraph determines_graph(const FDSet& f, const AttrSet& nullable) {
    DeterminesGraph g;
    g.nodes.assign(nullable.begin(), nullable.end());
    for (const auto& e : determines_closure(f))
        if (nullable.count(e.first) && nullable.count(e.second)) g.edges.insert(e);
    return g;
}

OneRhsResult check_1rhs(const FDSet& f, const AttrSet& nullable) {
    OneRhsResult res;
    FDSet cover = minimal_cover(f);

    std::map<std::string, int> rhs_count;
    for (const auto& fd : cover.fds())
        for (const auto& a : fd.rhs) ++rhs_count[a];
    for (const auto& a : nullable) {
        auto it = rhs_count.find(a);
        if (it != rhs_count.end() && it->second > 1)
            res.violations.push_back(
                {a, "appears on the right-hand side of " + std::to_string(it->second) +
                        " FDs in the minimal cover"});
    }

    auto det = determines_closure(f);
    for (const auto& a : nullable)
        for (const auto& b : nullable) {
            if (a >= b) continue;
            if (det.count({a, b}) && det.count({b, a})) {
                res.violations.push_back({a, "mutual determination with " + b});
                res.violations.push_back({b, "mutual determination with " + a});
            }
        }

    res.ok = res.violations.empty();
    return res;
}

AttrSet OneRhsResult::culprits() const {
    AttrSet out;
    for (const auto& v : violations) out.insert(v.attribute);
    return out;
}

}  // namespace nullfd
