#ifndef LATWALK_STEP_SET_HPP
#define LATWALK_STEP_SET_HPP

#include <optional>
#include <string>
#include <vector>

#include "latwalk/rational.hpp"

namespace latwalk {

enum class WalkConstraint {
    Unconstrained,
    Bridge,
    Meander,
    Excursion,
    StrictlyPositive,
};

std::string to_string(WalkConstraint c);
WalkConstraint parse_constraint(const std::string& name);

struct Step {
    long jump;
    Rational weight;
};

/// A finite weighted step set for one-dimensional directed walks.
/// Immutable after construction; duplicate jumps are merged by summing
/// their weights.
class StepSet {
public:
    explicit StepSet(std::vector<Step> steps);

    const std::vector<Step>& steps() const { return steps_; }

    // c and d of the step polynomial: extreme downward/upward jump sizes.
    long down_span() const { return -min_jump_; }
    long up_span() const { return max_jump_; }
    long min_jump() const { return min_jump_; }
    long max_jump() const { return max_jump_; }

    /// Coefficient of u^jump in P(u); 0 if the jump is not in the set.
    Rational coeff(long jump) const;

    /// P(1), the total weight of one step.
    Rational total_weight() const;

    bool symmetric() const;     // P(u) == P(1/u)
    bool unit_weights() const;

    std::string to_json() const;
    static StepSet from_json(const std::string& text);

private:
    std::vector<Step> steps_;  // sorted by jump, weights > 0
    long min_jump_;
    long max_jump_;
};

/// Named step-set families.
///   dyck               {-1,+1}
///   motzkin            {-1,0,+1}
///   weighted_motzkin   {-1,0,+1} with weights (p_{-1}, p_0, p_1) from params
///   bicolored_motzkin  {-1,0,+1} with weight 2 on the 0-step
///   basketball         {-2,-1,+1,+2}
///   sym_with_zero      {0,±1,...,±h}
///   sym_no_zero        {±1,...,±h}
///   dary               {-1, d-1}            (d from h argument)
///   upto_dary          {-1,0,1,...,d-1}
///   d_dplus1           {-1, d-1, d}
///   luka_all           {-1,0,1,...,cap}     (capped all-steps family)
StepSet make_family(const std::string& name, long h = 1,
                    const std::vector<Rational>& params = {});

}  // namespace latwalk

#endif
