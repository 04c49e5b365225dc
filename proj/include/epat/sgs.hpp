// Global state spaces of interpreted systems: reachability, components,
// hypercube intervals and runs.
#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "epat/common.hpp"

namespace epat {

// A global state: one local-state id per agent. The environment component is
// a fixed singleton and is not stored.
using State = std::vector<std::string>;

// Finite sequence of states; adjacent entries carry no constraint by
// themselves (see is_feasible_run).
struct Run {
    std::vector<State> states;
};

class GlobalStateSpace {
public:
    // Checks: at least one agent, non-empty local sets with unique ids,
    // states of the right arity with components drawn from the locals,
    // non-empty and duplicate-free state set.
    static GlobalStateSpace validate(std::vector<std::vector<std::string>> locals,
                                     std::vector<State> states);

    int agent_count() const { return static_cast<int>(locals_.size()); }
    const std::vector<std::vector<std::string>>& locals() const { return locals_; }
    const std::vector<State>& states() const { return states_; }

    bool has_state(const State& s) const;
    // Index into states(); throws ValidationError for unknown states.
    int state_index(const State& s) const;
    // Index of a local-state id within locals()[agent-1]; throws if unknown.
    int local_index(int agent, const std::string& id) const;

    bool operator==(const GlobalStateSpace& other) const;

private:
    GlobalStateSpace() = default;
    std::vector<std::vector<std::string>> locals_;
    std::vector<State> states_;
    std::map<State, int> index_;
};

// True iff the state set is the full product of the local sets.
bool is_hypercube(const GlobalStateSpace& g);

// Agents i with s_i = t_i (1-based, sorted). Empty means s and t are not
// directly related; s = t yields every agent.
std::vector<int> step(const GlobalStateSpace& g, const State& s, const State& t);

// Shortest path from s to t in the step graph, or nullopt if unreachable.
// Two-step paths prefer the midpoint that takes its first component from t
// and the rest from s, falling back to the first feasible midpoint in state
// order; longer paths come from BFS with canonical expansion order.
std::optional<std::vector<State>> reachable(const GlobalStateSpace& g,
                                            const State& s, const State& t);

// Connected components of the step graph, each listed in state order;
// components ordered by their first state.
std::vector<std::vector<State>> components(const GlobalStateSpace& g);

struct HypercubeInterval {
    std::vector<State> tuples;   // all 2^d tuples, lexicographic in local order
    bool contained = false;      // every tuple belongs to S
    std::vector<State> missing;  // tuples absent from S, same order
};

// All tuples whose components come from s or t, over the full product (not
// intersected with S).
HypercubeInterval hypercube_interval(const GlobalStateSpace& g,
                                     const State& s, const State& t);

// Checks every entry belongs to S.
Run validate_run(const GlobalStateSpace& g, std::vector<State> states);

// True iff every adjacent pair of the run is connected in the step graph.
bool is_feasible_run(const GlobalStateSpace& g, const Run& r);

}  // namespace epat
