#include <kgraph/algebra.hpp>

#include <algorithm>
#include <set>

namespace kgraph {

Term::Term(Path l, Path r) : left(std::move(l)), right(std::move(r)) {
    if (&left.skeleton() != &right.skeleton())
        throw std::invalid_argument("term across different skeletons");
    if (left.range() != right.range())
        throw std::invalid_argument("term s_l s_r^* needs range(l) = range(r)");
}

FormalElement FormalElement::gen(const Path& left, const Path& right, Rational coeff) {
    FormalElement out;
    out.accumulate(Term(left, right), coeff);
    return out;
}

FormalElement FormalElement::vertex(const Skeleton& sk, int v) {
    Path p = Path::at_vertex(sk, v);
    return gen(p, p);
}

void FormalElement::accumulate(const Term& t, const Rational& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(t, c);
    if (!inserted) {
        it->second = it->second + c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

FormalElement FormalElement::operator+(const FormalElement& o) const {
    FormalElement out = *this;
    for (const auto& [t, c] : o.terms_) out.accumulate(t, c);
    return out;
}

FormalElement FormalElement::operator-(const FormalElement& o) const {
    FormalElement out = *this;
    for (const auto& [t, c] : o.terms_) out.accumulate(t, -c);
    return out;
}

FormalElement FormalElement::scaled(const Rational& c) const {
    FormalElement out;
    if (c.is_zero()) return out;
    for (const auto& [t, coeff] : terms_) out.accumulate(t, coeff * c);
    return out;
}

FormalElement multiply(const FormalElement& a, const FormalElement& b) {
    FormalElement out;
    for (const auto& [ta, ca] : a.terms()) {
        for (const auto& [tb, cb] : b.terms()) {
            Rational c = ca * cb;
            const Degree dm = ta.right.degree();
            const Degree ds = tb.left.degree();
            for (const Path& gamma : mce(ta.right, tb.left).extensions) {
                Path alpha = segment(gamma, dm, gamma.degree());
                Path beta = segment(gamma, ds, gamma.degree());
                auto l = compose(ta.left, alpha);
                auto r = compose(tb.right, beta);
                // The term invariant makes both compositions defined.
                out.accumulate(Term(std::move(*l), std::move(*r)), c);
            }
        }
    }
    return out;
}

FormalElement adjoint(const FormalElement& a) {
    FormalElement out;
    for (const auto& [t, c] : a.terms()) out.accumulate(Term(t.right, t.left), c);
    return out;
}

FormalElement diag(const FormalElement& a) {
    FormalElement out;
    for (const auto& [t, c] : a.terms())
        if (t.left == t.right) out.accumulate(t, c);
    return out;
}

FormalElement q_projection(const Path& lambda, const VeeClosure& vee_f) {
    if (!vee_f.contains(lambda))
        throw std::invalid_argument("q_projection: path is not in the given closure");
    const Skeleton& sk = lambda.skeleton();
    FormalElement acc = FormalElement::gen(lambda, lambda);
    FormalElement src = FormalElement::vertex(sk, lambda.source());
    for (const Path& mu : vee_f.closure) {
        if (mu == lambda || !has_prefix(mu, lambda)) continue;
        acc = multiply(acc, src - FormalElement::gen(mu, mu));
    }
    return acc;
}

PartitionReport partition_check(const std::vector<Path>& F) {
    if (F.empty()) throw std::invalid_argument("partition_check of an empty set");
    const Skeleton& sk = F.front().skeleton();

    std::set<int> sources;
    std::set<Path> members(F.begin(), F.end());
    for (const Path& p : F) sources.insert(p.source());
    for (int v : sources)
        if (!members.count(Path::at_vertex(sk, v)))
            throw std::invalid_argument("partition_check: source vertex '" + sk.vertex_id(v) +
                                        "' is missing from F");

    PartitionReport report;
    report.closure = vee(F);

    FormalElement sum;
    std::map<Path, FormalElement> qs;
    for (const Path& lambda : report.closure.closure) {
        FormalElement q = q_projection(lambda, report.closure);
        sum = sum + q;
        qs.emplace(lambda, std::move(q));
    }
    FormalElement target;
    for (int v : sources) target = target + FormalElement::vertex(sk, v);

    report.partition_residual = sum - target;
    report.partition_holds = report.partition_residual.is_zero();

    report.range_identities_hold = true;
    for (const Path& lambda : report.closure.closure) {
        FormalElement expect;
        for (const Path& mu : report.closure.closure)
            if (has_prefix(mu, lambda)) expect = expect + qs.at(mu);
        if (expect != FormalElement::gen(lambda, lambda)) {
            report.range_identities_hold = false;
            report.range_failures.push_back(lambda);
        }
    }
    return report;
}

Path max_subpath(const Path& gamma, const VeeClosure& vee_g) {
    const Skeleton& sk = gamma.skeleton();
    std::optional<Degree> join;
    for (const Path& mu : vee_g.closure) {
        if (!has_prefix(gamma, mu)) continue;
        join = join ? join->join(mu.degree()) : mu.degree();
    }
    if (!join)
        throw std::invalid_argument("max_subpath: no member of the closure is a prefix");
    Path best = segment(gamma, sk.zero_degree(), *join);
    if (!vee_g.contains(best))
        throw std::logic_error("max_subpath: prefix join is not attained in the closure; "
                               "the given set is not a vee closure");
    return best;
}

FormalElement refine_projection(const Path& gamma, const VeeClosure& vee_f) {
    if (!vee_f.contains(gamma))
        throw std::invalid_argument("refine_projection: path is not in the given closure");

    std::vector<Path> prefixes;
    for (const Path& p : vee_f.closure)
        if (has_prefix(gamma, p)) prefixes.push_back(p);

    std::set<Path> tails;
    for (std::size_t i = 0; i < prefixes.size(); ++i) {
        for (std::size_t j = i + 1; j < prefixes.size(); ++j) {
            Path lp = segment(gamma, prefixes[i].degree(), gamma.degree());
            Path mp = segment(gamma, prefixes[j].degree(), gamma.degree());
            for (const Path& delta : mce(lp, mp).extensions) {
                Path s1 = segment(delta, lp.degree(), delta.degree());
                Path s2 = segment(delta, mp.degree(), delta.degree());
                if (!s1.degree().is_zero()) tails.insert(s1);
                if (!s2.degree().is_zero()) tails.insert(s2);
            }
        }
    }

    FormalElement acc = q_projection(gamma, vee_f);
    FormalElement top = FormalElement::gen(gamma, gamma);
    for (const Path& sigma : tails) {
        auto ext = compose(gamma, sigma);
        acc = multiply(acc, top - FormalElement::gen(*ext, *ext));
    }
    return acc;
}

Degree degree_support(const FormalElement& a, const Skeleton& sk) {
    Degree d = sk.zero_degree();
    for (const auto& [t, c] : a.terms()) {
        (void)c;
        d = d.join(t.left.degree()).join(t.right.degree());
    }
    return d;
}

}  // namespace kgraph
