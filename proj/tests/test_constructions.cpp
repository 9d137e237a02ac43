#include <doctest.h>

#include <set>

#include "gen.hpp"
#include "linord/coloured.hpp"
#include "linord/constructions.hpp"
#include "linord/parse.hpp"
#include "linord/relation.hpp"
#include "oracles/tail_compare.hpp"

using namespace linord;

namespace {
Term P(const char* s) { return parse_term(s); }
Ordinal O(const char* s) { return Ordinal::parse(s); }
EventuallyConstant seq(std::vector<Rational> p, Rational t) { return {std::move(p), t}; }
}  // namespace

TEST_CASE("phi_cong") {
    CHECK(phi_cong(Term::omega(), Term::eta()).str() == "(1+z*w+1)*q");
    const Term a = phi_cong(Term::omega(), Term::eta()), b = phi_cong(P("w+1"), Term::eta());
    CHECK(biembeds(ClassId::fin(), a, a).is_holds());
    CHECK(l_convex_embeds(ClassId::fin(), a, b).is_fails());
    // the same answer without the dedicated rule, from the normalized shuffle form
    CHECK(l_convex_embeds(ClassId::fin(), normalize(a), normalize(b)).is_fails());
}

TEST_CASE("phi_succ") {
    CHECK(normalize(phi_succ(Term::omega())) == normalize(P("w+1")));
    const ClassId c = ClassId::lt_ord(O("w+1"));
    CHECK(l_convex_embeds(c, phi_succ(P("z*3")), phi_succ(P("z+1+z*2"))).is_holds());
    // three pieces z, z, z+1 land on convex copies, so this holds as well
    CHECK(l_convex_embeds(c, phi_succ(P("z*3")), phi_succ(P("(z+1)*3"))).is_holds());
}

TEST_CASE("phi_succ matches the finite-index relation on decided pairs") {
    testgen::Rng rng(51);
    const ClassId lo = ClassId::lt_ord(Ordinal::omega()), hi = ClassId::lt_ord(O("w+1"));
    int decided = 0;
    for (int i = 0; i < 300; ++i) {
        const Term a = testgen::core_scattered(rng, 3), b = testgen::core_scattered(rng, 4);
        const Verdict x = l_convex_embeds(lo, a, b), y = l_convex_embeds(hi, phi_succ(a), phi_succ(b));
        if (!x.decided() || !y.decided()) continue;
        ++decided;
        CHECK_MESSAGE(x.status == y.status, a.str() << " -> " << b.str());
    }
    CHECK(decided > 100);
}

TEST_CASE("phi_fractal") {
    const Term t = phi_fractal(Term::omega(), Term::zeta(), O("w^2"));
    CHECK(t.str() == "(shuffle(w^2)+q+z+q)*w");
    const Term u = phi_fractal(P("w+1"), Term::zeta(), O("w^2"));
    CHECK(l_convex_embeds(ClassId::one(), t, u).is_holds());
    CHECK(l_convex_embeds(ClassId::one(), u, t).is_fails());
    CHECK(l_convex_embeds(ClassId::one(), P("w+1"), Term::omega()).is_fails());
    CHECK_THROWS_AS(phi_fractal(Term::omega(), P("w^2"), Ordinal::omega()), ConstructionError);
}

TEST_CASE("phi_threshold and phi_fin_zeta") {
    const Term t = phi_threshold(Term::omega(), Ordinal::omega());
    CHECK(t.str() == "threshold(w;w)");
    CHECK(normalize(threshold_summand(t, Ordinal{0})) == normalize(P("q+z*w")));
    CHECK(normalize(threshold_summand(t, Ordinal{2})) == normalize(P("shuffle(2)+z*w")));
    CHECK_THROWS_AS(phi_threshold(Term::omega(), O("w*2")), ConstructionError);
    CHECK_THROWS_AS(phi_threshold(Term::omega(), O("w^4")), ConstructionError);
    const Term f = phi_fin_zeta(Term::fin(2));
    CHECK(f.str() == "finzeta(2)");
    CHECK(normalize(fin_zeta_summand(f, 0)) == normalize(P("shuffle(1)+z*2")));
    // h is a bijection from Z onto the positive integers
    std::set<std::uint64_t> seen;
    for (std::int64_t z = -50; z <= 50; ++z) CHECK(seen.insert(fin_zeta_label(z)).second);
    for (std::uint64_t k = 1; k <= 101; ++k) CHECK(seen.count(k));
}

TEST_CASE("phi_coloured") {
    const Term t = phi_coloured(parse_colours("1,2"));
    CHECK(normalize(t) == normalize(P("shuffle(3)+q+shuffle(4)+q")));
    for (const auto& [a, b] : std::vector<std::pair<const char*, const char*>>{
             {"a", "b,a,b"}, {"a,b", "b,a"}, {"a,b", "a,c,b"}, {"a,b,a", "a,b,c,a"}, {"b,b", "b"}}) {
        for (const auto& c : {ClassId::one(), ClassId::fin()}) {
            const Verdict x = coloured_l_convex_embeds(c, parse_colours(a), parse_colours(b));
            const Verdict y = l_convex_embeds(c, phi_coloured(parse_colours(a)), phi_coloured(parse_colours(b)));
            CHECK_MESSAGE(x.status == y.status, c.str() << " " << a << " -> " << b);
        }
    }
    CHECK(coloured_l_convex_embeds(ClassId::fin(), parse_colours("a,b"), parse_colours("b,a")).is_fails());
}

TEST_CASE("e1 examples") {
    CHECK(e1_decide(seq({5}, 1), seq({7}, 1)).is_holds());
    CHECK(e1_decide(seq({1}, 2), seq({1}, 3)).is_fails());
    CHECK(e1_decide(seq({}, 1), seq({}, 1)).is_holds());
    const Verdict v = e1_decide(seq({5, 2}, 1), seq({7, 2}, 1));
    REQUIRE(v.is_holds());
    CHECK(v.witness->index_order == Term::fin(4));  // agreement from index 1: 2*1+2 pieces
    CHECK_THROWS_AS(phi_e1(seq({0}, 1)), ConstructionError);
    CHECK(phi_e1(seq({Rational(1, 2)}, 3)).str() == "e1(1/2;3)");
    CHECK(iso_check(e1_block(seq({Rational(1, 2)}, 3), 0), P("ishuffle(-1,0)+ishuffle(1/2,3/2)")).is_holds());
}

TEST_CASE("e1_decide is tail equality") {
    testgen::Rng rng(52);
    for (int i = 0; i < 100; ++i) {
        const auto r = [&] { return Rational(1 + static_cast<std::int64_t>(testgen::pick(rng, 3)), 1 + static_cast<std::int64_t>(testgen::pick(rng, 2))); };
        std::vector<Rational> xp, yp;
        for (std::size_t k = testgen::pick(rng, 9); k > 0; --k) xp.push_back(r());
        for (std::size_t k = testgen::pick(rng, 9); k > 0; --k) yp.push_back(r());
        const Rational xt = r(), yt = r();
        CHECK(e1_decide({xp, xt}, {yp, yt}).is_holds() == oracle::tails_equal(xp, xt, yp, yt));
    }
}

TEST_CASE("rational labelling is injective") {
    std::set<std::uint64_t> seen;
    for (std::int64_t p = -30; p <= 30; ++p)
        for (std::int64_t q = 1; q <= 12; ++q) {
            const Rational r(p, q);
            if (r.denominator() != q) continue;
            CHECK(seen.insert(rational_label(r)).second);
        }
}

TEST_CASE("generators") {
    const Term evens = gen_shuffle_family(LabelSet::periodic({}, {false, true}));
    const Term odds = gen_shuffle_family(LabelSet::periodic({}, {true, false}));
    CHECK(l_convex_embeds(ClassId::fin(), evens, odds).is_fails());
    CHECK_THROWS_AS(gen_shuffle_family(LabelSet::of({Term::fin(1)})), ConstructionError);
    CHECK(l_convex_embeds(ClassId::fin(), gen_interval_shuffle(0, 1), gen_interval_shuffle(0, 2)).is_holds());
    CHECK(l_convex_embeds(ClassId::fin(), gen_interval_shuffle(0, 2), gen_interval_shuffle(1, 3)).is_fails());
    CHECK_THROWS_AS(gen_interval_shuffle(1, 1), ConstructionError);

    testgen::Rng rng(53);
    for (int i = 0; i < 200; ++i) {
        const auto r = [&] { return Rational(static_cast<std::int64_t>(testgen::pick(rng, 9)) - 4, 1 + static_cast<std::int64_t>(testgen::pick(rng, 3))); };
        Rational a = r(), b = r(), c = r(), d = r();
        if (!(a < b) || !(c < d)) continue;
        CHECK(l_convex_embeds(ClassId::scat(), gen_interval_shuffle(a, b), gen_interval_shuffle(c, d)).is_holds() ==
              (c <= a && b <= d));
    }
}

TEST_CASE("constant-label shuffles over distinct scattered words form an antichain") {
    const std::vector<Term> labels{P("1"), P("2"), P("w"), P("w*"), P("z"), P("w+1"), P("z*2"), P("w^2")};
    for (const auto& c : {ClassId::one(), ClassId::fin(), ClassId::scat()})
        for (std::size_t i = 0; i < labels.size(); ++i)
            for (std::size_t j = 0; j < labels.size(); ++j) {
                if (i == j) continue;
                const Term a = Term::shuffle(LabelSet::of({labels[i]})), b = Term::shuffle(LabelSet::of({labels[j]}));
                CHECK(l_convex_embeds(c, a, b).is_fails());
            }
}
