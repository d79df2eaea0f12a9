#include "regulous/closure.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace regulous {

namespace {

std::string join(const std::vector<std::string>& ids) {
    std::ostringstream out;
    for (std::size_t i = 0; i < ids.size(); ++i) out << (i ? "," : "") << ids[i];
    return out.str();
}

std::vector<std::string> sorted(std::vector<std::string> ids) {
    std::sort(ids.begin(), ids.end());
    ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
    return ids;
}

} // namespace

int ArcSymIncidence::dim_of(const std::string& id) const {
    for (const auto& c : components)
        if (c.id == id) return c.dim;
    throw Error("unknown component '" + id + "'");
}

MissingIncidenceError::MissingIncidenceError(const std::string& comp,
                                             const std::vector<std::string>& cur)
    : Error("missing incidence entry for (" + comp + ", {" + join(cur) + "})"), component(comp),
      current(cur) {}

bool sym_necessaire_test(const std::string& z, const std::vector<std::string>& current,
                         const ArcSymIncidence& inc) {
    auto key = std::make_pair(z, sorted(current));
    auto it = inc.table.find(key);
    if (it == inc.table.end()) throw MissingIncidenceError(z, key.second);
    int dz = inc.dim_of(z);
    if (it->second > dz) throw Error("inconsistent dims: intersection exceeds dim of " + z);
    return it->second == dz;
}

ClosureResult closure_algorithm(const ArcSymIncidence& inc) {
    ClosureResult res;
    if (inc.top.empty()) throw Error("closure_algorithm: empty top-dimensional part");
    int d = 0;
    for (const auto& t : inc.top) d = std::max(d, inc.dim_of(t));
    for (const auto& t : inc.top)
        if (inc.dim_of(t) != d) throw Error("inconsistent dims: top components not all maximal");

    std::vector<std::string> current = sorted(inc.top);
    std::set<std::string> in_current(current.begin(), current.end());

    // pools of pending components by dimension
    std::map<int, std::vector<ArcSymIncidence::Component>, std::greater<int>> pool;
    for (const auto& c : inc.components) {
        if (in_current.count(c.id)) continue;
        if (c.dim >= d) throw Error("inconsistent dims: non-top component of maximal dimension");
        pool[c.dim].push_back(c);
    }

    for (int dim = d - 1; dim >= 0; --dim) {
        auto it = pool.find(dim);
        if (it == pool.end() || it->second.empty()) continue;
        ++res.passes;
        int pass = d - dim;
        std::sort(it->second.begin(), it->second.end(),
                  [](const auto& a, const auto& b) { return a.id < b.id; });
        std::vector<std::string> pass_current = current; // rule evaluated pass-wide
        std::vector<std::string> newly;
        for (const auto& z : it->second) {
            if (in_current.count(z.id)) continue;
            AuditEntry entry;
            entry.pass = pass;
            entry.component = z.id;
            entry.dim_component = z.dim;
            auto key = std::make_pair(z.id, pass_current);
            auto tit = inc.table.find(key);
            if (tit == inc.table.end()) throw MissingIncidenceError(z.id, pass_current);
            entry.dim_intersection = tit->second;
            if (tit->second > z.dim)
                throw Error("inconsistent dims: intersection exceeds dim of " + z.id);
            if (tit->second == z.dim) {
                entry.rule = "sym-necessaire";
                entry.included = true;
                newly.push_back(z.id);
                in_current.insert(z.id);
            } else {
                auto rit = inc.refinement.find(key);
                if (rit == inc.refinement.end()) {
                    entry.rule = "refinement-missing";
                } else {
                    entry.rule = "refinement";
                    for (const auto& add : rit->second) {
                        if (add.dim >= z.dim)
                            throw Error("inconsistent dims: refinement of " + z.id +
                                        " not lower-dimensional");
                        if (!in_current.count(add.id)) {
                            bool known = false;
                            for (const auto& c : pool[add.dim]) known |= (c.id == add.id);
                            if (!known) pool[add.dim].push_back(add);
                            entry.added.push_back(add.id);
                        }
                    }
                }
            }
            res.audit.push_back(std::move(entry));
        }
        for (const auto& id : newly) current.push_back(id);
        current = sorted(current);
    }
    res.included_ids = current;
    return res;
}

bool replay_matches(const ArcSymIncidence& inc, const ClosureResult& recorded) {
    ClosureResult again = closure_algorithm(inc);
    if (again.included_ids != recorded.included_ids) return false;
    if (again.audit.size() != recorded.audit.size()) return false;
    for (std::size_t i = 0; i < again.audit.size(); ++i) {
        const auto& a = again.audit[i];
        const auto& b = recorded.audit[i];
        if (a.pass != b.pass || a.component != b.component || a.rule != b.rule ||
            a.included != b.included || a.added != b.added)
            return false;
    }
    return true;
}

} // namespace regulous
