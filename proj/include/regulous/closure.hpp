#pragma once

#include "regulous/rational.hpp"

#include <map>
#include <string>
#include <vector>

namespace regulous {

/// Labeled incidence data for the arc-symmetric constructible-closure
/// algorithm. Decompositions and Zariski-closure intersection dimensions are
/// user-supplied geometric facts; the algorithm is the exact combinatorial
/// fixpoint over them.
struct ArcSymIncidence {
    struct Component {
        std::string id;
        int dim = 0;
    };
    std::vector<Component> components;
    std::vector<std::string> top; // ids forming W (maximal dimension)

    // dim( Zar-closure(component) n union(current) ), keyed by (component,
    // sorted current id set); total on the queried pairs
    std::map<std::pair<std::string, std::vector<std::string>>, int> table;

    // step-(2) data: lower-dimensional components injected when the rule
    // fails for (component, current)
    std::map<std::pair<std::string, std::vector<std::string>>, std::vector<Component>> refinement;

    int dim_of(const std::string& id) const;
};

struct MissingIncidenceError : Error {
    MissingIncidenceError(const std::string& component, const std::vector<std::string>& current);
    std::string component;
    std::vector<std::string> current;
};

struct AuditEntry {
    int pass = 0;
    std::string component;
    std::string rule; // "sym-necessaire" | "refinement" | "refinement-missing"
    int dim_component = 0;
    int dim_intersection = -1;
    bool included = false;
    std::vector<std::string> added; // refinement components injected
};

struct ClosureResult {
    std::vector<std::string> included_ids; // W plus everything accreted
    std::vector<AuditEntry> audit;
    int passes = 0;
};

/// The necessary-condition test: dim(Zar-closure(z) n current) == dim(z).
bool sym_necessaire_test(const std::string& z, const std::vector<std::string>& current,
                         const ArcSymIncidence& inc);

/// Fixpoint over decreasing dimension: start from W; in the pass for
/// dimension d-j add every component passing the test against the
/// pass-start set, otherwise inject its refinement components; at most
/// d-1 effective passes.
ClosureResult closure_algorithm(const ArcSymIncidence& inc);

/// Deterministic replay: recompute and compare against a recorded audit.
bool replay_matches(const ArcSymIncidence& inc, const ClosureResult& recorded);

} // namespace regulous
