#ifndef LATWALK_ORACLE_HPP
#define LATWALK_ORACLE_HPP

#include <string>
#include <vector>

#include "latwalk/rational.hpp"
#include "latwalk/step_set.hpp"

namespace latwalk {

struct CountQuery {
    StepSet steps;
    long n = 0;           // walk length, >= 0
    long j = 0;           // start altitude
    long k = 0;           // end altitude
    WalkConstraint constraint = WalkConstraint::Excursion;
};

struct SequenceRecord {
    std::string name;
    std::string source;                 // provenance ("computed", or the fixture source)
    std::vector<std::string> values;    // exact decimal strings, index = n
};

namespace oracle {

/// Exact weighted count of walks satisfying the query, by dynamic
/// programming over a clipped altitude window.
///
/// StrictlyPositive constrains only the intermediate altitudes (after
/// steps 1..n-1) to be >= 1; both endpoints may be 0.
Rational count(const CountQuery& q);

/// count() for n = 0..n_max, in order.
SequenceRecord sequence(const StepSet& steps, WalkConstraint constraint,
                        long j, long k, long n_max, const std::string& name = "computed");

/// Meanders of length n ending anywhere (sum over all end altitudes >= 0).
Rational meander_total(const StepSet& steps, long n);

/// As sequence(), but summing the meander counts over all end altitudes.
SequenceRecord meander_total_sequence(const StepSet& steps, long n_max,
                                      const std::string& name = "computed");

}  // namespace oracle
}  // namespace latwalk

#endif
