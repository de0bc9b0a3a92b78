#ifndef POLYMERLAB_PATH_SURGERY_HPP
#define POLYMERLAB_PATH_SURGERY_HPP

#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "polymerlab/paths.hpp"

namespace polymerlab::surgery {

// Violation of a documented transformation precondition; names the failing
// structural condition.
struct ContractError : std::runtime_error {
    explicit ContractError(const std::string& what, int condition = -1)
        : std::runtime_error(what), condition_index(condition) {}
    int condition_index;
};

// A guarantee of the transformation toolkit failed on valid input; indicates
// an implementation bug, never a property of the instance.
struct AlgorithmicFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class PathOrdering { first_above, second_above, equal, incomparable };

// partial order on paths induced by the northwest dominance order on
// vertices: first_above means every comparable vertex pair puts p strictly
// northwest of q, with at least one strictly comparable pair
PathOrdering path_order(const LatticePath& p, const LatticePath& q);

// p and q cross when some maximal common segment is run through left-to-right
// by one path and bottom-to-top by the other
bool is_crossing(const LatticePath& p, const LatticePath& q);

// intersecting paths are proper when neither path's endpoints lie on the
// other; disjoint pairs are vacuously proper
bool is_proper(const LatticePath& p, const LatticePath& q);
bool paths_intersect(const LatticePath& p, const LatticePath& q);

// unique smallest path from s to t inside the edge set, with respect to the
// dominance order; greedy rightmost-first walk with reachability pruning
LatticePath min_path(Vertex s, Vertex t, const std::set<GridEdge>& edges);

// Rearranges the tuple onto the same edge multiset so that no two paths
// cross and no later path sits strictly southeast of an earlier one.
// Endpoints are preserved as sets; the pairing may change.
PathTuple uncross(const PathTuple& tuple, int n);

// Per-round bookkeeping for the transformation pipeline: the reference tuple
// edits are measured against, the corridor path tau, and the column-one
// coverage watermark.
struct StageContext {
    PathTuple reference;
    LatticePath tau;
    int m = 0;  // (1,j) for j <= m must stay covered by exactly one path
    int n = 0;
    int k = 0;
};

// Structural conditions maintained stage to stage.
enum class TupleCondition {
    cleaned_suffix_disjoint = 1,   // top i paths intersect nothing
    index_order_consistent = 2,    // no later path strictly below an earlier one
    bounded_edge_loss = 3,         // |E(ref) \ E(now)| within budget
    edits_local_to_corridor = 4,   // edits and intersections near tau, few pieces
    first_column_coverage = 5,     // (1,j) coverage per the watermark
};

struct ConditionReport {
    bool ok = true;
    int failed_condition = 0;
    std::string detail;
    int edges_lost = 0;
    int symdiff_pieces = 0;
};

inline constexpr int kUnlimitedBudget = std::numeric_limits<int>::max();

ConditionReport check_conditions(const StageContext& ctx, const PathTuple& tuple, int stage,
                                 int budget = kUnlimitedBudget);

// Advances or relocates endpoints until every intersecting pair is proper.
// Throws ContractError if the stage preconditions fail.
PathTuple clean_proper(const PathTuple& tuple, const StageContext& ctx, int stage,
                       int budget = kUnlimitedBudget);

// Separates the stage pivot from the lower-indexed paths by rerouting them
// through the pivot's southeast shift; conditions then hold at stage + 1.
PathTuple push_away(const PathTuple& tuple, const StageContext& ctx, int stage,
                    int budget = kUnlimitedBudget);

struct RoundTrace {
    std::string label;
    LatticePath tau;
    int edges_lost_so_far = 0;
};

struct SurgeryReport {
    PathTuple input;
    PathTuple output;
    int removed_edges = 0;                  // |E(input) \ E(output)|
    std::vector<LatticePath> sym_diff_paths;
    std::vector<LatticePath> neighborhoods;  // corridor paths used
    int rounds = 0;
    std::vector<RoundTrace> trace;
};

// y(S) watermark: smallest i with (1,i) not a start; mirrored version for
// terminals against the last column
int start_order(const PathTuple& tuple);
int terminal_order(const PathTuple& tuple, int n);

bool at_corner_spec(const PathTuple& tuple, int n);

// Moves non-corner starts off the bottom k levels and non-corner terminals
// off the top k levels, editing only near the boundary.
std::pair<PathTuple, SurgeryReport> clear_boundary(const PathTuple& tuple, int n);

// Full pipeline: repeatedly reroot one missing corner endpoint through a
// simple corridor path and restore disjointness, until the tuple connects
// (1,1..k) to (n,n-k+1..n) with the identity pairing. Bounded number of
// rounds; edge loss is bounded independently of n.
std::pair<PathTuple, SurgeryReport> lift_to_corner(const PathTuple& tuple, int n);

// neighborhood radius around corridor paths
inline int corridor_radius(int k) { return 6 * k; }

// vertices within l1 distance r of the path
bool within_distance(const Vertex& v, const LatticePath& path, int r);

std::string tuple_to_json(const PathTuple& tuple);
std::string report_to_json(const SurgeryReport& report);

}  // namespace polymerlab::surgery

#endif
