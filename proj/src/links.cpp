#include "latwalk/links.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <stdexcept>

#include "latwalk/formulas.hpp"

namespace latwalk {
namespace links {

namespace {

void preorder_degrees(const OrderedTree& t, std::vector<long>& out) {
    out.push_back(static_cast<long>(t.children.size()));
    for (const auto& c : t.children) preorder_degrees(c, out);
}

}  // namespace

std::vector<long> luka_tree_to_path(const OrderedTree& t) {
    std::vector<long> deg;
    preorder_degrees(t, deg);
    std::vector<long> steps;
    for (long d : deg) steps.push_back(d - 1);
    steps.pop_back();  // the final -1 is implied
    return steps;
}

OrderedTree luka_path_to_tree(const std::vector<long>& steps) {
    std::vector<long> deg;
    for (long s : steps) {
        if (s < -1) throw std::invalid_argument("not a Lukasiewicz path");
        deg.push_back(s + 1);
    }
    deg.push_back(0);  // restore the dropped final -1 step
    size_t pos = 0;
    // Recursive descent over the preorder degree sequence.
    struct Builder {
        const std::vector<long>& deg;
        size_t& pos;
        OrderedTree build() {
            if (pos >= deg.size()) throw std::invalid_argument("truncated degree sequence");
            long d = deg[pos++];
            OrderedTree t;
            for (long i = 0; i < d; ++i) t.children.push_back(build());
            return t;
        }
    } builder{deg, pos};
    OrderedTree t = builder.build();
    if (pos != deg.size()) throw std::invalid_argument("trailing steps after the excursion ended");
    return t;
}

OrderedTree parse_tree(const std::string& text) {
    size_t pos = 0;
    struct Parser {
        const std::string& s;
        size_t& pos;
        OrderedTree parse() {
            if (pos >= s.size() || s[pos] != '(') throw std::invalid_argument("expected '('");
            ++pos;
            OrderedTree t;
            while (pos < s.size() && s[pos] == '(') t.children.push_back(parse());
            if (pos >= s.size() || s[pos] != ')') throw std::invalid_argument("expected ')'");
            ++pos;
            return t;
        }
    } parser{text, pos};
    OrderedTree t = parser.parse();
    if (pos != text.size()) throw std::invalid_argument("trailing characters after tree");
    return t;
}

std::string tree_to_string(const OrderedTree& t) {
    std::string s = "(";
    for (const auto& c : t.children) s += tree_to_string(c);
    return s + ")";
}

Integer absorption_walk_count(long m, long n) {
    if (m < 2 || m > 4) throw std::invalid_argument("absorption_walk_count supports m in {2,3,4}");
    if (n < 1) throw std::invalid_argument("n >= 1 required");
    StepSet steps = m == 2   ? make_family("sym_no_zero", 1)
                    : m == 3 ? make_family("sym_with_zero", 1)
                             : make_family("sym_no_zero", 2);
    // Absorbed at -1 exactly at step n: a meander of length n-1 ending at
    // altitude j, followed by the jump -(j+1) if available.
    Rational acc(0);
    const long span = steps.down_span();
    for (long j = 0; j + 1 <= span; ++j)
        acc += oracle::count({steps, n - 1, 0, j, WalkConstraint::Meander});
    if (!is_integer(acc)) throw std::logic_error("non-integer absorption count");
    Integer count = to_integer(acc);

    Integer expected;
    if (m == 2)
        expected = (n % 2) ? to_integer(formulas::table2_excursions("dyck", 0, {}, n - 1))
                           : Integer(0);
    else if (m == 3)
        expected = to_integer(formulas::table2_excursions("motzkin", 0, {}, n - 1));
    else
        expected = formulas::basketball_g01(n);
    if (count != expected)
        throw std::logic_error("absorption count does not match the classical sequence at n = " +
                               std::to_string(n));
    return count;
}

namespace {

struct LabeledTree {
    long label = 0;
    std::vector<LabeledTree> children;  // ordered, size <= 2
};

// All increasing unary-binary trees on n vertices, generated by
// attaching the next label to every available slot: one slot per leaf,
// two (left/right of the existing child) per unary node.
void enumerate_increasing(long n, LabeledTree& t, long next, std::vector<LabeledTree>& out) {
    if (next > n) {
        out.push_back(t);
        return;
    }
    // Walk the tree, trying every attachment point.
    struct Rec {
        long n, next;
        LabeledTree& root;
        std::vector<LabeledTree>& out;
        void visit(LabeledTree& node) {
            if (node.children.empty()) {
                node.children.push_back(LabeledTree{next, {}});
                enumerate_increasing(n, root, next + 1, out);
                node.children.pop_back();
            } else if (node.children.size() == 1) {
                node.children.insert(node.children.begin(), LabeledTree{next, {}});
                enumerate_increasing(n, root, next + 1, out);
                node.children.erase(node.children.begin());
                node.children.push_back(LabeledTree{next, {}});
                enumerate_increasing(n, root, next + 1, out);
                node.children.pop_back();
                visit(node.children[0]);
                return;
            }
            for (auto& c : node.children) visit(c);
        }
    } rec{n, next, t, out};
    rec.visit(t);
}

std::vector<long> level_order(const LabeledTree& t) {
    std::vector<long> perm;
    std::deque<const LabeledTree*> q{&t};
    while (!q.empty()) {
        const LabeledTree* cur = q.front();
        q.pop_front();
        perm.push_back(cur->label);
        for (const auto& c : cur->children) q.push_back(&c);
    }
    return perm;
}

bool contains_213(const std::vector<long>& p) {
    const size_t n = p.size();
    for (size_t a = 0; a < n; ++a)
        for (size_t b = a + 1; b < n; ++b) {
            if (p[b] >= p[a]) continue;
            for (size_t c = b + 1; c < n; ++c)
                if (p[c] > p[a]) return true;
        }
    return false;
}

}  // namespace

long increasing_unary_binary(long n, bool avoid213) {
    if (n < 1 || n > 10) throw std::invalid_argument("increasing_unary_binary guard: 1 <= n <= 10");
    std::vector<LabeledTree> all;
    LabeledTree root{1, {}};
    enumerate_increasing(n, root, 2, all);
    if (!avoid213) return static_cast<long>(all.size());
    long count = 0;
    for (const auto& t : all)
        if (!contains_213(level_order(t))) ++count;
    return count;
}

SequenceRecord total_increasing_trees(long n_max) {
    if (n_max < 1) throw std::invalid_argument("n_max >= 1 required");
    // c_n = t_n/n! with t_{n+1}/n! = [z^n](1 + T + T^2).
    std::vector<Rational> c(n_max + 1, Rational(0));
    SequenceRecord rec{"total_increasing_trees", "computed", {}};
    rec.values.push_back("0");  // t_0 = 0: trees here have at least one vertex
    Integer factorial(1);
    for (long n = 0; n < n_max; ++n) {
        Rational sq(0);
        for (long a = 0; a <= n; ++a) sq += c[a] * c[n - a];
        Rational tp = (n == 0 ? Rational(1) : Rational(0)) + c[n] + sq;  // t_{n+1}/n!
        c[n + 1] = tp / Rational(n + 1);
        factorial *= (n + 1);  // (n+1)!
        Rational tn1 = c[n + 1] * Rational(factorial);
        if (!is_integer(tn1)) throw std::logic_error("non-integer t_n from the EGF recurrence");
        rec.values.push_back(to_string(tn1));
    }
    return rec;
}

BracketingCounts bracketing_counts(long n_max) {
    if (n_max < 1) throw std::invalid_argument("n_max >= 1 required");
    BracketingCounts bc;
    bc.zeros.assign(n_max + 1, Integer(0));
    bc.ones.assign(n_max + 1, Integer(0));
    bc.zeros[1] = 1;
    for (long n = 2; n <= n_max; ++n) {
        Integer w(0), z(0);
        for (long a = 1; a < n; ++a) {
            const long b = n - a;
            // left ^ right evaluates to 0 only for 0 ^ 1.
            w += bc.ones[a] * bc.ones[b] + bc.ones[a] * bc.zeros[b] + bc.zeros[a] * bc.zeros[b];
            z += bc.zeros[a] * bc.ones[b];
        }
        bc.ones[n] = w;
        bc.zeros[n] = z;
    }
    return bc;
}

BracketingCounts bracketing_counts_brute(long n_max) {
    if (n_max < 1 || n_max > 14) throw std::invalid_argument("brute-force guard: 1 <= n <= 14");
    // values[n] lists the Boolean value of every bracketing of n zeroes.
    std::vector<std::vector<char>> values(n_max + 1);
    values[1] = {0};
    for (long n = 2; n <= n_max; ++n) {
        for (long a = 1; a < n; ++a)
            for (char va : values[a])
                for (char vb : values[n - a])
                    values[n].push_back(static_cast<char>(!(va == 0 && vb == 1)));
    }
    BracketingCounts bc;
    bc.zeros.assign(n_max + 1, Integer(0));
    bc.ones.assign(n_max + 1, Integer(0));
    for (long n = 1; n <= n_max; ++n)
        for (char v : values[n]) (v ? bc.ones[n] : bc.zeros[n]) += 1;
    return bc;
}

}  // namespace links
}  // namespace latwalk
