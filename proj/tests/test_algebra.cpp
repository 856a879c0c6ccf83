#include <doctest.h>

#include <kgraph/json_io.hpp>

#include "support.hpp"

using namespace kgraph;
using namespace kgraph::testing;

namespace {

const Skeleton& loops() {
    static Skeleton sk = Skeleton::load(fixture_loops(2));
    return sk;
}

FormalElement gen_lit(const Skeleton& sk, const std::string& l, const std::string& r) {
    return FormalElement::gen(parse_path_literal(sk, l), parse_path_literal(sk, r));
}

}  // namespace

TEST_CASE("generators and the term invariant") {
    const Skeleton& sk = loops();
    Path v = Path::at_vertex(sk, 0);
    CHECK(FormalElement::gen(v, v) == FormalElement::vertex(sk, 0));

    Skeleton ex = Skeleton::load(fixture_ex43(1));
    Path lam = parse_path_literal(ex, "lam");  // range 10
    Path be = parse_path_literal(ex, "be");    // range 01
    CHECK_THROWS_AS(FormalElement::gen(lam, be), std::invalid_argument);
}

TEST_CASE("projections are idempotent, vertex projections act as units") {
    const Skeleton& sk = loops();
    FormalElement p = gen_lit(sk, "a", "a");
    CHECK(multiply(p, p) == p);

    FormalElement v = FormalElement::vertex(sk, 0);
    FormalElement x = gen_lit(sk, "a.b", "b");
    CHECK(multiply(v, x) == x);
    CHECK(multiply(x, v) == x);
}

TEST_CASE("products of range projections expand over MCEs") {
    Skeleton sk = Skeleton::load(fixture_ex43(2));
    FormalElement lhs = multiply(gen_lit(sk, "lam", "lam"), gen_lit(sk, "be", "be"));
    FormalElement expect;
    for (const Path& g : mce(parse_path_literal(sk, "lam"), parse_path_literal(sk, "be")).extensions)
        expect.accumulate(Term(g, g), 1);
    CHECK(lhs == expect);
    CHECK(lhs.term_count() == 3);

    // distinct loops of equal degree annihilate
    const Skeleton& lp = loops();
    CHECK(multiply(gen_lit(lp, "a", "a"), gen_lit(lp, "b", "b")).is_zero());
}

TEST_CASE("multiply is bilinear over coefficients") {
    const Skeleton& sk = loops();
    FormalElement a = gen_lit(sk, "a", "a").scaled(Rational(2, 3)) + gen_lit(sk, "b", "b");
    FormalElement b = gen_lit(sk, "a", "b").scaled(Rational(-3));
    FormalElement lhs = multiply(a, b);
    FormalElement expect = gen_lit(sk, "a", "b").scaled(Rational(-2));
    CHECK(lhs == expect);
}

TEST_CASE("multiply is associative on random elements") {
    Rng rng(101);
    for (std::uint64_t seed = 0; seed < 6; ++seed) {
        Skeleton sk = Skeleton::load(fixture_random2(seed, 2));
        auto pool = enumerate_paths_up_to(sk, Degree({1, 1}));
        for (int trial = 0; trial < 6; ++trial) {
            FormalElement a = random_element(rng, pool, 3);
            FormalElement b = random_element(rng, pool, 3);
            FormalElement c = random_element(rng, pool, 3);
            CHECK(multiply(multiply(a, b), c) == multiply(a, multiply(b, c)));
        }
    }
}

TEST_CASE("adjoint is an involutive anti-homomorphism") {
    Rng rng(103);
    const Skeleton& sk = loops();
    auto pool = enumerate_paths_up_to(sk, Degree({2}));
    CHECK(adjoint(gen_lit(sk, "a", "b")) == gen_lit(sk, "b", "a"));
    for (int trial = 0; trial < 12; ++trial) {
        FormalElement a = random_element(rng, pool, 3);
        FormalElement b = random_element(rng, pool, 3);
        CHECK(adjoint(adjoint(a)) == a);
        CHECK(adjoint(multiply(a, b)) == multiply(adjoint(b), adjoint(a)));
    }
}

TEST_CASE("diagonal expectation") {
    const Skeleton& sk = loops();
    CHECK(diag(gen_lit(sk, "a", "b")).is_zero());
    CHECK(diag(gen_lit(sk, "a", "a")) == gen_lit(sk, "a", "a"));

    Rng rng(107);
    auto pool = enumerate_paths_up_to(sk, Degree({2}));
    for (int trial = 0; trial < 10; ++trial) {
        FormalElement a = random_element(rng, pool, 4);
        CHECK(diag(diag(a)) == diag(a));
        CHECK(diag(adjoint(a)) == adjoint(diag(a)));
        // faithfulness on positives: nonzero a has nonzero diag(a* a)
        if (!a.is_zero()) CHECK(!diag(multiply(adjoint(a), a)).is_zero());
    }
}

TEST_CASE("q_projection on the loops fixture") {
    const Skeleton& sk = loops();
    Path v = Path::at_vertex(sk, 0);
    Path a = parse_path_literal(sk, "a");
    Path b = parse_path_literal(sk, "b");
    VeeClosure closure = vee({v, a, b});

    FormalElement qv = q_projection(v, closure);
    FormalElement expect =
        FormalElement::vertex(sk, 0) - gen_lit(sk, "a", "a") - gen_lit(sk, "b", "b");
    CHECK(qv == expect);
    CHECK(q_projection(a, closure) == gen_lit(sk, "a", "a"));

    VeeClosure trivial = vee({v});
    CHECK(q_projection(v, trivial) == FormalElement::vertex(sk, 0));

    CHECK_THROWS_AS(q_projection(parse_path_literal(sk, "a.a"), closure), std::invalid_argument);
}

TEST_CASE("q_projections are idempotent, self-adjoint, and orthogonal") {
    Rng rng(109);
    for (std::uint64_t seed = 10; seed < 16; ++seed) {
        Skeleton sk = Skeleton::load(fixture_random2(seed, 2));
        auto pool = enumerate_paths_up_to(sk, Degree({1, 1}));
        for (int trial = 0; trial < 4; ++trial) {
            auto F = random_admissible_family(rng, sk, pool, 3);
            VeeClosure closure = vee(F);
            std::vector<FormalElement> qs;
            for (const Path& l : closure.closure) qs.push_back(q_projection(l, closure));
            for (std::size_t i = 0; i < qs.size(); ++i) {
                CHECK(multiply(qs[i], qs[i]) == qs[i]);
                CHECK(adjoint(qs[i]) == qs[i]);
                for (std::size_t j = i + 1; j < qs.size(); ++j)
                    CHECK(multiply(qs[i], qs[j]).is_zero());
            }
        }
    }
}

TEST_CASE("partition identity on hand fixtures") {
    const Skeleton& sk = loops();
    Path v = Path::at_vertex(sk, 0);

    auto single = partition_check({v});
    CHECK(single.partition_holds);
    CHECK(single.range_identities_hold);

    auto abv = partition_check({v, parse_path_literal(sk, "a"), parse_path_literal(sk, "b")});
    CHECK(abv.partition_holds);
    CHECK(abv.range_identities_hold);

    // precondition: sources must be present
    CHECK_THROWS_AS(partition_check({parse_path_literal(sk, "a")}), std::invalid_argument);
}

TEST_CASE("partition identity on random admissible families") {
    Rng rng(113);
    std::vector<Skeleton> fixtures;
    fixtures.push_back(Skeleton::load(fixture_loops(2)));
    fixtures.push_back(Skeleton::load(fixture_free(2, 2)));
    fixtures.push_back(Skeleton::load(fixture_ex43(2)));
    for (const Skeleton& sk : fixtures) {
        auto pool = enumerate_paths_up_to(
            sk, Degree(std::vector<int>(static_cast<std::size_t>(sk.k()), 2)));
        for (int trial = 0; trial < 8; ++trial) {
            auto F = random_admissible_family(rng, sk, pool, 3);
            auto report = partition_check(F);
            CHECK(report.partition_holds);
            CHECK(report.range_identities_hold);
        }
    }
}

TEST_CASE("max_subpath finds the maximal prefix in the closure") {
    const Skeleton& sk = loops();
    Path v = Path::at_vertex(sk, 0);
    Path a = parse_path_literal(sk, "a");
    Path aa = parse_path_literal(sk, "a.a");

    VeeClosure closure = vee({v, a, aa});
    CHECK(max_subpath(aa, closure) == aa);                                // member maps to itself
    CHECK(max_subpath(parse_path_literal(sk, "a.a.b"), closure) == aa);   // deepest prefix
    CHECK(max_subpath(parse_path_literal(sk, "b"), closure) == v);

    VeeClosure only_v = vee({v});
    CHECK(max_subpath(parse_path_literal(sk, "b.a"), only_v) == v);
}

TEST_CASE("max_subpath attains the join of candidate prefix degrees") {
    Rng rng(127);
    for (std::uint64_t seed = 20; seed < 26; ++seed) {
        Skeleton sk = Skeleton::load(fixture_random2(seed, 2));
        auto pool = enumerate_paths_up_to(sk, Degree({2, 2}));
        for (int trial = 0; trial < 5; ++trial) {
            auto F = random_admissible_family(rng, sk, pool, 3);
            VeeClosure closure = vee(F);
            const Path& gamma = rng.pick(pool);
            if (!closure.contains(Path::at_vertex(sk, gamma.source()))) continue;
            Path m = max_subpath(gamma, closure);
            CHECK(has_prefix(gamma, m));
            for (const Path& mu : closure.closure)
                if (has_prefix(gamma, mu)) CHECK(mu.degree().leq(m.degree()));
        }
    }
}

TEST_CASE("refine_projection on the loops fixture") {
    const Skeleton& sk = loops();
    Path v = Path::at_vertex(sk, 0);
    Path a = parse_path_literal(sk, "a");
    VeeClosure closure = vee({v, a, parse_path_literal(sk, "b")});

    // The pair (v, a) contributes the tail a, so Q_a carves the loop
    // continuation out of the range projection.
    FormalElement qa = refine_projection(a, closure);
    CHECK(qa == gen_lit(sk, "a", "a") - gen_lit(sk, "a.a", "a.a"));

    // No distinct prefix pairs at a vertex: Q_v stays the vee projection.
    CHECK(refine_projection(v, vee({v})) == q_projection(v, vee({v})));
}

TEST_CASE("refine_projection dominates and kills off-diagonal compressions") {
    Rng rng(131);
    for (std::uint64_t seed = 30; seed < 36; ++seed) {
        Skeleton sk = Skeleton::load(fixture_random2(seed, 2));
        auto pool = enumerate_paths_up_to(sk, Degree({1, 1}));
        for (int trial = 0; trial < 4; ++trial) {
            auto F = random_admissible_family(rng, sk, pool, 3);
            VeeClosure closure = vee(F);
            for (const Path& gamma : closure.closure) {
                FormalElement q_vee = q_projection(gamma, closure);
                FormalElement q = refine_projection(gamma, closure);
                CHECK(multiply(q, q_vee) == q);  // Q_gamma <= Q^veeF_gamma
                CHECK(multiply(q, q) == q);
                for (const Path& l : closure.closure) {
                    if (!has_prefix(gamma, l)) continue;
                    for (const Path& m : closure.closure) {
                        if (l == m || !has_prefix(gamma, m)) continue;
                        if (l.range() != m.range()) continue;
                        FormalElement off = FormalElement::gen(l, m);
                        CHECK(multiply(q, multiply(off, q)).is_zero());
                    }
                }
            }
        }
    }
}

TEST_CASE("removing one member relates the two projection families") {
    // For source-closed F, non-vertex lambda in F, G = F minus lambda:
    // Q^veeF_delta = Q^veeG_{mu_delta} t_delta t_delta^* on veeF minus veeG.
    Rng rng(137);
    for (std::uint64_t seed = 40; seed < 48; ++seed) {
        Skeleton sk = Skeleton::load(fixture_random2(seed, 2));
        auto pool = enumerate_paths_up_to(sk, Degree({1, 1}));
        for (int trial = 0; trial < 4; ++trial) {
            auto F = random_admissible_family(rng, sk, pool, 3);
            std::vector<Path> candidates;
            for (const Path& p : F)
                if (!p.is_vertex()) candidates.push_back(p);
            if (candidates.empty()) continue;
            Path lambda = rng.pick(candidates);
            std::vector<Path> G;
            for (const Path& p : F)
                if (p != lambda) G.push_back(p);
            if (G.empty()) continue;
            VeeClosure vee_f = vee(F);
            VeeClosure vee_g = vee(G);
            for (const Path& delta : vee_f.closure) {
                if (vee_g.contains(delta)) continue;
                FormalElement lhs = q_projection(delta, vee_f);
                FormalElement rhs = multiply(q_projection(max_subpath(delta, vee_g), vee_g),
                                             FormalElement::gen(delta, delta));
                CHECK(lhs == rhs);
            }
        }
    }
}

TEST_CASE("rational scalars normalize, parse, and refuse to wrap") {
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(3, -6) == Rational(-1, 2));
    CHECK(Rational(0, 7) == Rational(0));
    CHECK(Rational::parse("-7/3") == Rational(-7, 3));
    CHECK(Rational::parse("5") == Rational(5));
    CHECK(Rational::parse("5").to_string() == "5");
    CHECK(Rational(1, 3).to_string() == "1/3");
    CHECK_THROWS_AS(Rational(1, 0), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse("x"), std::invalid_argument);
    Rational huge(INT64_MAX / 2, 3);
    CHECK_THROWS_AS(huge * huge, std::overflow_error);
}

TEST_CASE("formal elements serialize to the wire format and back") {
    const Skeleton& sk = loops();
    FormalElement a = gen_lit(sk, "a", "b").scaled(Rational(2, 3)) +
                      FormalElement::vertex(sk, 0).scaled(Rational(-1));
    auto j = formal_element_to_json(a);
    CHECK(j.size() == 2);
    CHECK(formal_element_from_json(sk, j) == a);
    for (const auto& item : j) {
        CHECK(item.contains("left"));
        CHECK(item.contains("right"));
        CHECK(item.at("coeff").is_string());
    }
}
