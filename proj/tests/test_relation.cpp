#include <doctest.h>

#include "gen.hpp"
#include "linord/coloured.hpp"
#include "linord/parse.hpp"
#include "linord/relation.hpp"
#include "oracles/naive_coloured.hpp"

using namespace linord;

namespace {
Term P(const char* s) { return parse_term(s); }
const ClassId le2 = ClassId::le_n(2);
}  // namespace

TEST_CASE("embeds examples") {
    CHECK(embeds(Term::omega(), Term::zeta()).is_holds());
    CHECK(embeds(Term::omega_star(), Term::omega()).is_fails());
    CHECK(embeds(P("z*3"), Term::eta()).is_holds());
    CHECK(embeds(P("z*2"), P("w+z")).is_fails());
    CHECK(embeds(P("w+w*"), Term::zeta()).is_fails());
    CHECK(embeds(Term::eta(), P("z*5")).is_fails());
}

TEST_CASE("convex_embeds examples") {
    CHECK(convex_embeds(Term::zeta(), P("z+1")).is_holds());
    CHECK(convex_embeds(P("z*2"), P("z+1+z")).is_fails());
    CHECK(convex_embeds(Term::eta(), P("2*q")).is_fails());
    CHECK(convex_embeds(P("w"), P("w+1")).is_holds());
    CHECK(convex_embeds(P("w+1"), P("w")).is_fails());
}

TEST_CASE("class-convex embeddability: the non-transitive triple") {
    const Verdict ab = l_convex_embeds(le2, P("z*3"), P("z+1+z*2"));
    const Verdict bc = l_convex_embeds(le2, P("z+1+z*2"), P("(z+1)*3"));
    const Verdict ac = l_convex_embeds(le2, P("z*3"), P("(z+1)*3"));
    CHECK(ab.is_holds());
    CHECK(bc.is_holds());
    CHECK(ac.is_fails());
    REQUIRE(ab.witness);
    CHECK(verify_relation_witness(le2, P("z*3"), P("z+1+z*2"), *ab.witness).is_holds());
    CHECK(l_convex_embeds(ClassId::scat(), P("w*2"), Term::eta()).is_holds());
}

TEST_CASE("biembeds examples") {
    CHECK(biembeds(ClassId::fin(), Term::zeta(), Term::zeta()).is_holds());
    CHECK(biembeds(ClassId::one(), Term::omega(), P("w+1")).is_fails());
    CHECK(biembeds(le2, P("z*3"), P("(z+1)*3")).is_fails());
}

TEST_CASE("shuffle rules") {
    CHECK(l_convex_embeds(ClassId::fin(), P("ishuffle(0,1)"), P("ishuffle(0,2)")).is_holds());
    CHECK(l_convex_embeds(ClassId::fin(), P("ishuffle(0,2)"), P("ishuffle(1,3)")).is_fails());
    CHECK(l_convex_embeds(ClassId::fin(), P("shuffle(#/01)"), P("shuffle(#/10)")).is_fails());
    CHECK(l_convex_embeds(ClassId::fin(), P("shuffle(w)"), P("shuffle(w+1)")).is_fails());
}

TEST_CASE("transitivity probe on the three-word corpus") {
    const std::vector<Term> corpus{P("z*3"), P("z+1+z*2"), P("(z+1)*3")};
    const auto bad = transitivity_probe(le2, corpus);
    REQUIRE(bad.size() == 1);
    CHECK(bad[0].a == corpus[0]);
    CHECK(bad[0].b == corpus[1]);
    CHECK(bad[0].c == corpus[2]);
    CHECK(transitivity_probe(ClassId::fin(), corpus).empty());
}

TEST_CASE("coloured examples") {
    const auto C = parse_colours;
    CHECK(coloured_l_convex_embeds(ClassId::one(), C("a"), C("b,a,b")).is_holds());
    CHECK(coloured_l_convex_embeds(ClassId::one(), C("a,b"), C("a,c,b")).is_fails());
    const Verdict v = coloured_l_convex_embeds(ClassId::fin(), C("a,b"), C("a,c,b"));
    REQUIRE(v.is_holds());
    CHECK(v.witness->pieces.size() == 2);
    CHECK(*v.witness->embedding == std::vector<std::int64_t>{0, 2});
}

TEST_CASE("coloured decider agrees with brute force on orders up to size 4") {
    std::vector<std::vector<int>> all{{}};
    std::vector<std::vector<int>> words;
    for (int len = 1; len <= 4; ++len) {
        std::vector<std::vector<int>> next;
        for (const auto& w : all)
            for (int c = 1; c <= 3; ++c) {
                auto v = w;
                v.push_back(c);
                next.push_back(v);
            }
        all = std::move(next);
        words.insert(words.end(), all.begin(), all.end());
    }
    const std::vector<ClassId> classes{ClassId::one(), ClassId::fin(), ClassId::le_n(2), ClassId::le_n(3)};
    for (const auto& s : words)
        for (const auto& t : words) {
            const int k = oracle::naive_min_pieces(s, t);
            for (const auto& c : classes) {
                const bool expect = k > 0 && member(c, Term::fin(k)).is_holds();
                CHECK(coloured_l_convex_embeds(c, {s}, {t}).is_holds() == expect);
            }
        }
}

TEST_CASE("witnesses from the block search re-verify") {
    testgen::Rng rng(41);
    int verified = 0;
    for (int i = 0; i < 400; ++i) {
        const Term a = testgen::core_scattered(rng, 3), b = testgen::core_scattered(rng, 5);
        for (const auto& c : {ClassId::one(), ClassId::le_n(2), ClassId::fin(), ClassId::wo()}) {
            const Verdict v = l_convex_embeds(c, a, b);
            if (!v.is_holds() || !v.witness || v.witness->pieces.empty()) continue;
            ++verified;
            CHECK_MESSAGE(verify_relation_witness(c, a, b, *v.witness).is_holds(), a.str() << " -> " << b.str());
        }
    }
    CHECK(verified > 100);
}
