#ifndef LATWALK_LINKS_HPP
#define LATWALK_LINKS_HPP

#include <memory>
#include <string>
#include <vector>

#include "latwalk/oracle.hpp"
#include "latwalk/rational.hpp"

namespace latwalk {
namespace links {

/// Rooted ordered tree; children are ordered left to right.
struct OrderedTree {
    std::vector<OrderedTree> children;

    long node_count() const {
        long n = 1;
        for (const auto& c : children) n += c.node_count();
        return n;
    }
};

/// Preorder degree sequence minus one per node, with the last step
/// dropped: a Lukasiewicz excursion.
std::vector<long> luka_tree_to_path(const OrderedTree& t);

/// Inverse of luka_tree_to_path.
OrderedTree luka_path_to_tree(const std::vector<long>& steps);

/// Parse a tree from nested parentheses, e.g. "((()())())".
/// The outermost pair is the root.
OrderedTree parse_tree(const std::string& text);
std::string tree_to_string(const OrderedTree& t);

/// Walks over the m-nomial-tree step set that start at 0, stay >= 0,
/// and are absorbed at -1 exactly at step n. For m = 2 (steps ±1) these
/// are counted by aerated Catalan numbers, m = 3 (steps 0,±1) by
/// Motzkin numbers, m = 4 (steps ±1,±2) by the basketball 0 -> 1
/// numbers; the expected identity is asserted.
Integer absorption_walk_count(long m, long n);

/// Increasing unary-binary trees on n labelled vertices; optionally only
/// those whose level-order permutation avoids the pattern 213.
/// Exhaustive enumeration, guard n <= 10.
long increasing_unary_binary(long n, bool avoid213);

/// t_n = number of increasing unary-binary trees on n vertices, from the
/// convolution recurrence implied by T' = 1 + T + T^2 on the exponential
/// generating function.
SequenceRecord total_increasing_trees(long n_max);

struct BracketingCounts {
    std::vector<Integer> zeros;  // z_n: bracketings of n zeroes evaluating to 0
    std::vector<Integer> ones;   // w_n: evaluating to 1
};

/// Convolution recurrences from W = W^2 + ZW + Z^2 and Z = z + ZW, for
/// bracketings of n zeroes under the rule (A B) = (B implies A):
/// value(A B) = 1 unless A = 0 and B = 1.
BracketingCounts bracketing_counts(long n_max);

/// Independent brute-force evaluator over all binary bracketings;
/// guard n <= 14.
BracketingCounts bracketing_counts_brute(long n_max);

}  // namespace links
}  // namespace latwalk

#endif
