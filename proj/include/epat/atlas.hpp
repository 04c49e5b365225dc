// Groupoid atlases in orbit-partition form: validation against the two
// atlas axioms, the standard constructions, and weak atlas morphisms.
#pragma once

#include <map>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "epat/common.hpp"
#include "epat/frame.hpp"

namespace epat {

// One coordinate: its patch and the orbit partition of the local groupoid
// restricted to that patch.
struct AtlasChart {
    std::string id;
    std::vector<std::string> patch;
    std::vector<std::vector<std::string>> orbits;
};

struct AtlasData {
    std::vector<std::string> points;
    std::vector<AtlasChart> charts;
    // Coordinate order; reflexive pairs are implied and need not be listed.
    std::vector<std::pair<std::string, std::string>> leq;
};

class GroupoidAtlas {
public:
    // Structural checks (unique ids, patches within the point set, orbits
    // partitioning their patch, leq over known coordinates) followed by the
    // two atlas axioms for every pair a <= b:
    //   (i)  patch(a) n patch(b) is a union of a-orbits;
    //   (ii) every a-orbit inside the intersection lies in one b-orbit.
    // Violations name the offending (a, b, orbit) triple.
    static GroupoidAtlas validate(const AtlasData& data);

    const std::vector<std::string>& points() const { return points_; }
    bool has_point(const std::string& p) const;
    int point_index(const std::string& p) const;  // throws for unknown points

    int chart_count() const { return static_cast<int>(charts_.size()); }
    const std::string& chart_id(int chart) const { return charts_[chart].id; }
    bool has_chart(const std::string& id) const;
    int chart_index(const std::string& id) const;

    const std::vector<int>& patch(int chart) const { return charts_[chart].patch; }
    const std::vector<std::vector<int>>& orbits(int chart) const {
        return charts_[chart].orbits;
    }
    // Orbit of a point within a chart, -1 when the point is outside the patch.
    int orbit_of(int chart, int point_index) const;

    // a <= b on chart indices; reflexive by definition.
    bool leq(int a, int b) const;
    // The non-reflexive pairs, sorted.
    const std::vector<std::pair<int, int>>& leq_pairs() const { return leq_; }

    // True iff the two points lie in one orbit of some coordinate.
    bool same_orbit_somewhere(int p, int q) const;

    AtlasData data() const;

private:
    GroupoidAtlas() = default;
    struct Chart {
        std::string id;
        std::vector<int> patch;                // sorted point indices
        std::vector<std::vector<int>> orbits;  // canonical partition of patch
        std::vector<int> orbit_of;             // per point, -1 outside patch
    };
    std::vector<std::string> points_;
    std::unordered_map<std::string, int> point_index_;
    std::vector<Chart> charts_;
    std::unordered_map<std::string, int> chart_index_;
    std::vector<std::pair<int, int>> leq_;  // non-reflexive, sorted, deduped
    std::vector<std::vector<bool>> leq_matrix_;
};

// One coordinate per agent, discrete order, every patch the whole world set,
// orbits the agent's partition.
GroupoidAtlas atlas_from_frame(const Frame& f);

// Canonical id for an agent set: "{1,2}".
std::string agent_set_id(const std::vector<int>& agents);

// Subdivision: coordinates are the non-empty agent subsets (ids "{1}",
// "{2}", "{1,2}", ... in bitmask order) ordered by reverse inclusion, every
// patch the whole world set, orbits the intersection of the members'
// partitions. Rejects frames with more than 12 agents.
GroupoidAtlas atlas_subdivided(const Frame& f);

// Finite window [a, b] of the line: one coordinate per n in [a, b-1] with
// patch {n, n+1} and a single orbit, plus a coordinate "-inf" below all
// others whose patch is every point with singleton orbits.
GroupoidAtlas line_window(long a, long b);

struct FiniteGroupAction {
    std::vector<std::string> elements;
    std::vector<std::vector<int>> table;       // table[i][j] = index of g_i * g_j
    std::vector<std::vector<int>> subgroups;   // element indices, sorted
    std::vector<std::pair<int, int>> inclusions;  // (i, j): subgroup i inside j

    // Checks the table is a group (identity, inverses, associativity), each
    // subgroup is closed under product and inverse, and each declared
    // inclusion holds.
    static FiniteGroupAction validate(
        const std::vector<std::string>& elements,
        const std::vector<std::vector<std::string>>& table,
        const std::vector<std::vector<std::string>>& subgroups,
        const std::vector<std::pair<int, int>>& inclusions_1based);

    int identity() const { return identity_; }
    int inverse(int g) const { return inverse_[g]; }

private:
    int identity_ = -1;
    std::vector<int> inverse_;
};

// Single-domain atlas: points are the group elements, one coordinate per
// subgroup ("H1", "H2", ...), orbits the right cosets H*g, order the given
// inclusions.
GroupoidAtlas atlas_from_group_action(const FiniteGroupAction& a);

// f preserves local frames: the image of every orbit of every source
// coordinate lies inside a single orbit of some target coordinate. Throws
// when f is not total on the source points or maps outside the target.
bool is_weak_atlas_morphism(const GroupoidAtlas& src, const GroupoidAtlas& dst,
                            const std::map<std::string, std::string>& f);

}  // namespace epat
