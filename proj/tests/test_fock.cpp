#include <doctest.h>

#include "support.hpp"

using namespace kgraph;
using namespace kgraph::testing;

namespace {

bool status_ok(const RelationReport& r) {
    return r.status == "pass" || r.status == "interior-pass";
}

const RelationReport& find_report(const std::vector<RelationReport>& reports,
                                  const std::string& id) {
    for (const auto& r : reports)
        if (r.relation == id) return r;
    throw std::logic_error("no report " + id);
}

}  // namespace

TEST_CASE("fock generators act by prepending") {
    Skeleton sk = Skeleton::load(fixture_ex43(2));
    FockSpace sp(sk, Degree({2, 2}));
    Path lam = parse_path_literal(sk, "lam");
    FockOperator s_lam = fock_generator(sp, lam);

    // S_lam e_{r(lam)} = e_lam
    int col = sp.index_of(Path::at_vertex(sk, lam.range()));
    int row = sp.index_of(lam);
    CHECK(s_lam.at(row, col) == Rational(1));

    // zero on source mismatch: e_be has source 00 != 10 = r(lam)
    int be_col = sp.index_of(parse_path_literal(sk, "be"));
    for (const auto& [rc, v] : s_lam.entries()) {
        (void)v;
        CHECK(rc.second != be_col);
    }

    // S_v is the diagonal projection onto paths with source v
    int v00 = *sk.find_vertex("00");
    FockOperator sv = fock_generator(sp, Path::at_vertex(sk, v00));
    CHECK(sv.is_diagonal());
    for (int i = 0; i < static_cast<int>(sp.dim()); ++i)
        CHECK(sv.at(i, i) == (sp.basis_path(i).source() == v00 ? Rational(1) : Rational(0)));

    FockSpace narrow(sk, Degree({1, 0}));
    CHECK_THROWS_AS(fock_generator(narrow, *compose(lam, parse_path_literal(sk, "mu0"))),
                    std::invalid_argument);
}

TEST_CASE("evaluate: vertices, prefix projections, span elements") {
    Skeleton sk = Skeleton::load(fixture_loops(2));
    FockSpace sp(sk, Degree({3}));
    Path a = parse_path_literal(sk, "a");

    CHECK(evaluate(sp, FormalElement::vertex(sk, 0)) == fock_generator(sp, Path::at_vertex(sk, 0)));

    FockOperator proj = evaluate(sp, FormalElement::gen(a, a));
    CHECK(proj.is_diagonal());
    for (int i = 0; i < static_cast<int>(sp.dim()); ++i)
        CHECK(proj.at(i, i) == (has_prefix(sp.basis_path(i), a) ? Rational(1) : Rational(0)));

    // disjoint prefix projections annihilate, matching the symbolic zero
    Path b = parse_path_literal(sk, "b");
    CHECK((proj * evaluate(sp, FormalElement::gen(b, b))).is_zero());
}

TEST_CASE("evaluate is multiplicative on interiors") {
    Rng rng(211);
    for (std::uint64_t seed = 0; seed < 6; ++seed) {
        Skeleton sk = Skeleton::load(fixture_random2(seed, 2));
        FockSpace sp(sk, Degree({3, 3}));
        auto pool = enumerate_paths_up_to(sk, Degree({1, 1}));
        for (int trial = 0; trial < 6; ++trial) {
            FormalElement a = random_element(rng, pool, 4);
            FormalElement b = random_element(rng, pool, 4);
            Degree margin = degree_support(a, sk).plus(degree_support(b, sk));
            if (!margin.leq(sp.bound())) continue;
            FockOperator lhs = evaluate(sp, multiply(a, b));
            FockOperator rhs = evaluate(sp, a) * evaluate(sp, b);
            CHECK(lhs.equals_on_interior(rhs, margin));
        }
    }
}

TEST_CASE("nonzero elements stay visible on a large interior") {
    // Columns e_mu for right sides mu of a cannot cancel across distinct
    // rows, so a nonzero element evaluates to a nonzero operator once the
    // interior is wide enough. The converse (a vanishing evaluation with a
    // nonzero symbol) would be a linear-dependence red flag.
    Rng rng(229);
    for (std::uint64_t seed = 70; seed < 74; ++seed) {
        Skeleton sk = Skeleton::load(fixture_random2(seed, 2));
        FockSpace sp(sk, Degree({3, 3}));
        auto pool = enumerate_paths_up_to(sk, Degree({1, 1}));
        for (int trial = 0; trial < 5; ++trial) {
            FormalElement a = random_element(rng, pool, 4);
            if (a.is_zero()) continue;
            Degree margin = degree_support(a, sk);
            bool interior_nonzero = false;
            for (const auto& [rc, v] : evaluate(sp, a).entries()) {
                (void)v;
                if (sp.in_interior(rc.second, margin)) interior_nonzero = true;
            }
            CHECK(interior_nonzero);
        }
    }
}

TEST_CASE("relations on the loops fixture") {
    Skeleton sk = Skeleton::load(fixture_loops(2));
    FockSpace sp(sk, Degree({3}));
    auto reports = check_relations(sp);

    CHECK(find_report(reports, "(1)").status == "pass");
    CHECK(find_report(reports, "(2)").status == "pass");
    CHECK(status_ok(find_report(reports, "(3)")));
    CHECK(find_report(reports, "(4)").status == "pass");
    CHECK(status_ok(find_report(reports, "(5)")));

    int defects = 0;
    for (const auto& r : reports) {
        if (r.relation != "(6)") continue;
        CHECK(r.status == "fail");  // Toeplitz, never Cuntz-Pimsner here
        CHECK(r.matches_prediction);
        ++defects;
    }
    CHECK(defects == 3);  // degrees (1), (2), (3) at the single vertex
}

TEST_CASE("relation (5) explicitly for the ex43 generator pair") {
    Skeleton sk = Skeleton::load(fixture_ex43(2));
    FockSpace sp(sk, Degree({2, 2}));
    Path lam = parse_path_literal(sk, "lam");
    Path be = parse_path_literal(sk, "be");

    FockOperator lhs = fock_generator(sp, lam).transpose() * fock_generator(sp, be);
    auto extensions = mce(lam, be).extensions;
    REQUIRE(extensions.size() == 3);
    FockOperator rhs(sp);
    for (const Path& g : extensions) {
        Path alpha = segment(g, lam.degree(), g.degree());
        Path beta = segment(g, be.degree(), g.degree());
        rhs = rhs + fock_generator(sp, alpha) * fock_generator(sp, beta).transpose();
    }
    CHECK(lhs.equals_on_interior(rhs, lam.degree().join(be.degree())));
}

TEST_CASE("relations hold vacuously on the empty-edge skeleton") {
    SkeletonDoc doc;
    doc.k = 2;
    doc.vertices = {"u"};
    Skeleton sk = Skeleton::load(doc);
    FockSpace sp(sk, Degree({1, 1}));
    auto reports = check_relations(sp);
    int sink_instances = 0;
    for (const auto& r : reports) {
        if (r.relation == "(6)") {
            // every emission set is empty: the literal relation demands
            // s_v = 0 and the report flags the sink ambiguity
            CHECK(r.status == "fail");
            CHECK(r.matches_prediction);
            CHECK(r.detail.find("sink ambiguity") != std::string::npos);
            ++sink_instances;
        } else {
            CHECK(r.status == "pass");
        }
    }
    CHECK(sink_instances == 3);  // degrees (1,0), (0,1), (1,1)
}

TEST_CASE("relation (6) reports the sink ambiguity distinctly") {
    // one vertex emitting color-1 edges only: degree (0,1) has an empty
    // emission set and the literal relation would force S_v = 0
    SkeletonDoc doc;
    doc.k = 2;
    doc.vertices = {"u"};
    doc.edges.push_back({"a", 1, "u", "u"});
    Skeleton sk = Skeleton::load(doc);
    FockSpace sp(sk, Degree({1, 1}));
    bool saw_sink = false, saw_toeplitz = false;
    for (const auto& r : check_relations(sp)) {
        if (r.relation != "(6)") continue;
        CHECK(r.status == "fail");
        if (r.detail.find("sink ambiguity") != std::string::npos) saw_sink = true;
        if (r.detail.find("Toeplitz") != std::string::npos) saw_toeplitz = true;
    }
    CHECK(saw_sink);
    CHECK(saw_toeplitz);
}

TEST_CASE("nica covariance products") {
    Skeleton loops = Skeleton::load(fixture_loops(2));
    FockSpace spl(loops, Degree({3}));
    CHECK(check_nica_products(spl, Degree({1}), Degree({1})).status == "pass");
    CHECK(check_nica_products(spl, Degree({1}), Degree({0})).status == "pass");

    Skeleton ex = Skeleton::load(fixture_ex43(2));
    FockSpace spe(ex, Degree({1, 1}));
    CHECK(check_nica_products(spe, Degree({1, 0}), Degree({0, 1})).status == "pass");
    CHECK(check_nica_products(spe, Degree({1, 1}), Degree({0, 1})).status == "pass");
    CHECK_THROWS_AS(check_nica_products(spe, Degree({2, 0}), Degree({0, 1})),
                    std::invalid_argument);
}

TEST_CASE("faithfulness products survive at the vertex") {
    Skeleton sk = Skeleton::load(fixture_loops(3));
    FockSpace sp(sk, Degree({3}));
    int v = 0;

    auto empty = faithfulness_hypothesis(sp, v, {});
    CHECK(empty.nonzero);
    CHECK(empty.vertex_survives);
    CHECK(empty.support == static_cast<int>(sp.dim()));

    std::vector<std::pair<Degree, std::vector<Path>>> sets;
    sets.emplace_back(Degree({1}), std::vector<Path>{parse_path_literal(sk, "a")});
    sets.emplace_back(Degree({2}), std::vector<Path>{parse_path_literal(sk, "b.b"),
                                                     parse_path_literal(sk, "b.c")});
    auto report = faithfulness_hypothesis(sp, v, sets);
    CHECK(report.nonzero);
    CHECK(report.vertex_survives);
    CHECK(*report.witness == Path::at_vertex(sk, v));
    CHECK(report.generator_dominated);
    REQUIRE(report.generator_sets.size() == 1);
    CHECK(report.generator_sets[0].size() == 2);  // prefixes a and b

    std::vector<std::pair<Degree, std::vector<Path>>> bad;
    bad.emplace_back(Degree({1}), std::vector<Path>{parse_path_literal(sk, "b.b")});
    CHECK_THROWS_AS(faithfulness_hypothesis(sp, v, bad), std::invalid_argument);
}

TEST_CASE("the compressed product of lemma-style factors keeps e_lambda") {
    // t_l t_l^* prod (t_{s(l)} - t_{l m} t_{l m}^*) != 0, witnessed by e_l
    Skeleton sk = Skeleton::load(fixture_loops(2));
    FockSpace sp(sk, Degree({3}));
    Path l = parse_path_literal(sk, "a");
    FormalElement q = FormalElement::gen(l, l);
    FormalElement vsrc = FormalElement::vertex(sk, 0);
    for (const char* m : {"a", "b"}) {
        Path lm = *compose(l, parse_path_literal(sk, m));
        q = multiply(q, vsrc - FormalElement::gen(lm, lm));
    }
    FockOperator op = evaluate(sp, q);
    int il = sp.index_of(l);
    CHECK(op.at(il, il) == Rational(1));
}

TEST_CASE("operator norms") {
    Skeleton sk = Skeleton::load(fixture_loops(2));
    FockSpace sp(sk, Degree({3}));
    Path a = parse_path_literal(sk, "a");

    auto diag_norm = operator_norm(evaluate(sp, FormalElement::gen(a, a)), 1e-9);
    CHECK(diag_norm.diagonal_shortcut);
    CHECK(diag_norm.value == doctest::Approx(1.0));

    auto gen_norm = operator_norm(fock_generator(sp, a), 1e-9);
    CHECK(!gen_norm.diagonal_shortcut);
    CHECK(gen_norm.converged);
    CHECK(gen_norm.value == doctest::Approx(1.0).epsilon(1e-6));

    auto scaled = operator_norm(fock_generator(sp, a).scaled(Rational(-5, 2)), 1e-9);
    CHECK(scaled.value == doctest::Approx(2.5).epsilon(1e-6));

    CHECK(operator_norm(FockOperator(sp), 1e-9).value == 0.0);
    CHECK_THROWS_AS(operator_norm(FockOperator(sp), 0.0), std::invalid_argument);
}

TEST_CASE("diagonal compression agrees with the diagonal expectation") {
    Rng rng(223);
    Skeleton sk = Skeleton::load(fixture_free(2, 2));
    FockSpace sp(sk, Degree({2, 2}));
    auto pool = enumerate_paths_up_to(sk, Degree({1, 1}));
    for (int trial = 0; trial < 10; ++trial) {
        FormalElement a = random_element(rng, pool, 4);
        FockOperator lhs = evaluate(sp, diag(a));
        FockOperator rhs = evaluate(sp, a).apply_diagonal_compression();
        CHECK(lhs == rhs);
        auto na = operator_norm(evaluate(sp, a), 1e-9);
        auto nd = operator_norm(lhs, 1e-9);
        CHECK(nd.value <= na.value + 1e-6);
    }
}

TEST_CASE("norms of diagonal elements are attained on a vee partition") {
    Rng rng(227);
    Skeleton sk = Skeleton::load(fixture_loops(2));
    FockSpace sp(sk, Degree({3}));
    auto pool = enumerate_paths_up_to(sk, Degree({2}));
    for (int trial = 0; trial < 8; ++trial) {
        auto F = random_admissible_family(rng, sk, pool, 3);
        FormalElement a;
        std::map<Path, Rational> coeffs;
        for (const Path& l : F) {
            Rational c(rng.in_range(-3, 3));
            coeffs[l] = c;
            a = a + FormalElement::gen(l, l).scaled(c);
        }
        VeeClosure closure = vee(F);
        Rational best;
        for (const Path& gamma : closure.closure) {
            Rational sum;
            for (const Path& l : F)
                if (has_prefix(gamma, l)) sum = sum + coeffs[l];
            if (best < sum.abs()) best = sum.abs();
        }
        auto norm = operator_norm(evaluate(sp, a), 1e-9);
        CHECK(norm.value == doctest::Approx(best.to_double()).epsilon(1e-9));
    }
}

TEST_CASE("interior membership follows the margin arithmetic") {
    Skeleton sk = Skeleton::load(fixture_loops(2));
    FockSpace sp(sk, Degree({3}));
    int deep = sp.index_of(parse_path_literal(sk, "a.a.a"));
    int shallow = sp.index_of(parse_path_literal(sk, "a"));
    CHECK(sp.in_interior(deep, Degree({0})));
    CHECK(!sp.in_interior(deep, Degree({1})));
    CHECK(sp.in_interior(shallow, Degree({2})));
    CHECK(!sp.in_interior(shallow, Degree({4})));  // margin exceeding the bound
}
