#ifndef KGRAPH_ALGEBRA_HPP
#define KGRAPH_ALGEBRA_HPP

#include <kgraph/alignment.hpp>
#include <kgraph/rational.hpp>

#include <map>
#include <vector>

namespace kgraph {

// One symbol s_left s_right^*. Symbols with range(left) != range(right)
// are zero in the algebra and may not be formed.
struct Term {
    Path left;
    Path right;

    Term(Path l, Path r);

    bool operator==(const Term& o) const { return left == o.left && right == o.right; }
    bool operator<(const Term& o) const {
        if (left != o.left) return left < o.left;
        return right < o.right;
    }
};

// Exact-coefficient linear combination of symbols s_l s_r^*; the
// computational model of span{s_l s_r^*}. Canonical: at most one entry
// per term, no zero coefficients, so equality is map equality. The zero
// element is the empty map. Immutable value semantics.
class FormalElement {
public:
    FormalElement() = default;

    static FormalElement gen(const Path& left, const Path& right, Rational coeff = 1);
    static FormalElement vertex(const Skeleton& sk, int v);

    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const std::map<Term, Rational>& terms() const { return terms_; }

    FormalElement operator+(const FormalElement& o) const;
    FormalElement operator-(const FormalElement& o) const;
    FormalElement scaled(const Rational& c) const;
    bool operator==(const FormalElement& o) const { return terms_ == o.terms_; }
    bool operator!=(const FormalElement& o) const { return terms_ != o.terms_; }

    void accumulate(const Term& t, const Rational& c);

private:
    std::map<Term, Rational> terms_;
};

// Bilinear extension of the term rule
//   (s_l s_m^*)(s_s s_t^*) = sum over m a = s b in MCE(m, s) of s_{la} s_{tb}^*,
// the finite form of Nica covariance. Associative; vertex projections act
// as units on elements with matching sources.
FormalElement multiply(const FormalElement& a, const FormalElement& b);

// Term-wise swap: (s_l s_r^*)^* = s_r s_l^*. Coefficients are rational,
// hence self-conjugate.
FormalElement adjoint(const FormalElement& a);

// Diagonal expectation: keeps terms with left = right, kills the rest.
FormalElement diag(const FormalElement& a);

// The orthogonalized range projection
//   Q_lambda = t_lambda t_lambda^* prod over lambda-extending mu in the
//   closure (t_{source(lambda)} - t_mu t_mu^*),
// fully expanded. Requires lambda to lie in the closure.
FormalElement q_projection(const Path& lambda, const VeeClosure& vee_f);

struct PartitionReport {
    VeeClosure closure;
    // sum of Q_lambda over the closure minus sum of source vertex
    // projections; the partition identity says this is zero.
    bool partition_holds = false;
    FormalElement partition_residual;
    // t_l t_l^* = sum of Q over closure members extending l, per member.
    bool range_identities_hold = false;
    std::vector<Path> range_failures;
};

// Requires every member's source vertex to be present in F.
PartitionReport partition_check(const std::vector<Path>& F);

// The unique maximal-degree member of the closure that is a prefix of
// gamma. Throws when no member is a prefix (cannot happen once the
// closure contains source(gamma)).
Path max_subpath(const Path& gamma, const VeeClosure& vee_g);

// Q_gamma: q_projection(gamma) further cut down so that compressing any
// off-diagonal s_l s_m^* (l != m distinct prefixes of gamma in the
// closure) by Q_gamma gives zero. The cutting factors range over the
// nonzero-degree tails sigma arising from MCE(l', m') where
// gamma = l l' = m m'; degree-zero tails would annihilate Q_gamma itself
// and are never needed for the compression identity.
FormalElement refine_projection(const Path& gamma, const VeeClosure& vee_f);

// Join over terms of d(left) v d(right); the zero element supports zero.
Degree degree_support(const FormalElement& a, const Skeleton& sk);

}  // namespace kgraph

#endif
