// Kripke equivalence frames, valuations, frame morphisms and the
// translations between frames and global state spaces.
#pragma once

#include <map>
#include <string>
#include <unordered_map>
#include <vector>

#include "epat/common.hpp"
#include "epat/sgs.hpp"

namespace epat {

// Raw frame input. Per agent, either a partition (list of blocks) or a pair
// list may be supplied; pair lists are closed reflexively, symmetrically and
// transitively at validation.
struct FrameData {
    std::vector<std::string> worlds;
    int agents = 0;
    // partitions[i]: blocks of agent i+1. Empty when relations[i] is used.
    std::vector<std::vector<std::vector<std::string>>> partitions;
    // relations[i]: related pairs of agent i+1. Empty when partitions[i] is used.
    std::vector<std::vector<std::pair<std::string, std::string>>> relations;
};

class Frame {
public:
    // Returns a frame iff every invariant holds: unique worlds, agents >= 1,
    // one partition per agent with pairwise disjoint blocks covering the
    // world set. Appends a warning when transitive closure of a pair list
    // added pairs.
    static Frame validate(const FrameData& data,
                          std::vector<std::string>* warnings = nullptr);

    int agent_count() const { return static_cast<int>(blocks_.size()); }
    const std::vector<std::string>& worlds() const { return worlds_; }

    bool has_world(const std::string& w) const;
    int world_index(const std::string& w) const;  // throws for unknown worlds

    // Blocks of agent i (1-based), canonical: members sorted by world index,
    // blocks ordered by first member.
    const std::vector<std::vector<int>>& blocks(int agent) const;
    int block_of(int agent, int world_index) const;

    // w ~_i v. Throws for agent out of range or unknown worlds.
    bool related(int agent, const std::string& w, const std::string& v) const;
    bool related_idx(int agent, int wi, int vi) const;

    bool operator==(const Frame& other) const;

private:
    Frame() = default;
    std::vector<std::string> worlds_;
    std::unordered_map<std::string, int> index_;
    std::vector<std::vector<std::vector<int>>> blocks_;  // [agent][block] -> indices
    std::vector<std::vector<int>> block_of_;             // [agent][world] -> block
};

// Truth sets for propositional variables; variables not listed are false
// everywhere. World lists are canonicalized (sorted by frame order, deduped)
// and checked against the frame.
struct Valuation {
    std::map<std::string, std::vector<std::string>> truth_sets;

    static Valuation validate(
        const std::map<std::string, std::vector<std::string>>& sets,
        const Frame& frame);
};

// A total function between world sets. Validation checks totality and that
// images are target worlds; agent counts are compared by the morphism checks.
struct FrameMap {
    Frame source;
    Frame target;
    std::map<std::string, std::string> map;

    static FrameMap validate(Frame source, Frame target,
                             std::map<std::string, std::string> map);
    const std::string& apply(const std::string& w) const;
};

// w ~_i v implies f(w) ~'_i f(v) for every agent. Throws on agent-count
// mismatch.
bool is_weak_morphism(const FrameMap& m);

// Weak morphism condition plus the back condition: every i-neighbour of
// f(u) is the image of an i-neighbour of u. Throws on agent-count mismatch.
bool is_bounded_morphism(const FrameMap& m);

// Canonical world name for a global state: "(a,b,...)".
std::string state_name(const State& s);

// Frame with the states as worlds; s ~_i t iff the i-th components agree.
Frame sgs_to_frame(const GlobalStateSpace& g);

struct SgsWithDelta {
    GlobalStateSpace sgs;
    // delta[k] is the image of worlds()[k]: the tuple of its block names.
    std::vector<State> delta;
};

// Local sets are the block sets of each relation (blocks named by their
// member list); the state set is the image of the diagonal map.
SgsWithDelta frame_to_sgs(const Frame& f);

}  // namespace epat
