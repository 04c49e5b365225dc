// Multiagent modal formulas: parsing, Kripke evaluation over equivalence
// frames, and per-frame validity checking.
#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "epat/frame.hpp"

namespace epat {

struct Formula;
using FormulaPtr = std::shared_ptr<const Formula>;

// Immutable AST. Possible/Knows carry a sorted 1-based agent set; `braced`
// records whether the source used the {..} group form (kept so formatting
// round-trips).
struct Formula {
    enum class Kind { False, True, Var, Not, And, Or, Implies, Possible, Knows };
    Kind kind;
    std::string name;          // Var
    std::vector<int> agents;   // Possible / Knows
    bool braced = false;
    FormulaPtr left, right;    // unary operators use left only
};

FormulaPtr f_false();
FormulaPtr f_true();
FormulaPtr f_var(const std::string& name);
FormulaPtr f_not(FormulaPtr a);
FormulaPtr f_and(FormulaPtr a, FormulaPtr b);
FormulaPtr f_or(FormulaPtr a, FormulaPtr b);
FormulaPtr f_implies(FormulaPtr a, FormulaPtr b);
FormulaPtr f_possible(std::vector<int> agents, FormulaPtr a, bool braced = false);
FormulaPtr f_knows(std::vector<int> agents, FormulaPtr a, bool braced = false);

// Grammar, loosest to tightest: `->` (right associative), `|`, `&`, then the
// unary layer `~`, `Mi.`, `Ki.`, `M{i,j}.`, `K{i,j}.`; atoms are variables,
// `true`, `false` and parenthesized formulas. Agent sets in braces are
// sorted and deduped. Throws ValidationError with the offending position.
FormulaPtr parse_formula(const std::string& text);

// Minimal-parentheses rendering; format_formula(parse_formula(s)) == s for
// canonically written s up to whitespace.
std::string format_formula(const FormulaPtr& f);

std::vector<std::string> formula_variables(const FormulaPtr& f);
int max_agent(const FormulaPtr& f);  // 0 when no modality occurs

// Replaces variables by formulas; variables without an entry stay.
FormulaPtr substitute(const FormulaPtr& f,
                      const std::map<std::string, FormulaPtr>& by);

// Truth value per world, aligned with frame.worlds(). M over an agent set
// uses the intersection relation: v ~_alpha w iff v ~_i w for every i in
// alpha; K is the dual. Throws when an agent exceeds the frame's count.
std::vector<bool> satisfying_mask(const Frame& frame, const Valuation& v,
                                  const FormulaPtr& f);
std::vector<std::string> satisfying_set(const Frame& frame, const Valuation& v,
                                        const FormulaPtr& f);
bool eval_formula(const Frame& frame, const Valuation& v,
                  const std::string& world, const FormulaPtr& f);

struct ValidityVerdict {
    enum class Kind { ProvenValid, Counterexample, SampledNoCounterexample };
    Kind kind = Kind::ProvenValid;
    std::string world;        // witness, when a counterexample was found
    Valuation valuation;      // witness valuation
    unsigned long long checked = 0;  // valuations examined
};

// Checks the formula at every world. Valuations are enumerated exhaustively
// when 2^(|vars|*|worlds|) fits the budget, otherwise `samples` random
// valuations are drawn (deterministic for a fixed seed). The first failing
// (valuation, world) in enumeration order is reported.
ValidityVerdict valid_on(const Frame& frame, const FormulaPtr& f,
                         unsigned long long exhaustive_budget = 1ull << 16,
                         int samples = 200, unsigned seed = 0x5eedu);

}  // namespace epat
