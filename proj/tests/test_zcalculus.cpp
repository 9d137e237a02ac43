#include <doctest.h>

#include "gen.hpp"
#include "linord/normalize.hpp"
#include "linord/parse.hpp"
#include "linord/relation.hpp"
#include "linord/zcalculus.hpp"

using namespace linord;

namespace {
Term P(const char* s) { return parse_term(s); }
const Ordinal w = Ordinal::omega();
}  // namespace

TEST_CASE("z_expand small powers") {
    CHECK(z_expand(Ordinal{0}) == Term::fin(1));
    CHECK(normalize(z_expand(Ordinal{1})) == Term::zeta());
    CHECK(iso_check(z_expand(Ordinal{2}), P("rev(z*w)+z+z*w")).is_holds());
    CHECK_THROWS_AS(z_expand(Ordinal{5}), ZError);
}

TEST_CASE("embeds_zpow examples") {
    CHECK(embeds_zpow(P("w*2"), Ordinal{1}).is_fails());
    CHECK(embeds_zpow(P("w*2"), Ordinal{2}).is_holds());
    CHECK(embeds_zpow(Term::zeta(), Ordinal{1}).is_holds());
    CHECK_THROWS_AS(embeds_zpow(Term::eta(), Ordinal{1}), ZError);
}

TEST_CASE("hausdorff_rank examples") {
    CHECK(hausdorff_rank(Term::fin(1)) == Ordinal{0});
    CHECK(hausdorff_rank(Term::zeta()) == Ordinal{1});
    CHECK(hausdorff_rank(P("w^2")) == Ordinal{2});
    CHECK(hausdorff_rank(P("zpow(2)")) == Ordinal{2});
}

TEST_CASE("rank of Z^g is g") {
    for (std::uint64_t g = 0; g <= 4; ++g) CHECK(hausdorff_rank(z_expand(Ordinal{g})) == Ordinal{g});
}

TEST_CASE("embeds_zpow is monotone in the exponent") {
    testgen::Rng rng(21);
    for (int i = 0; i < 300; ++i) {
        const Term t = testgen::block_term(rng, 4, false);
        bool held = false;
        for (std::uint64_t g = 0; g <= 4; ++g) {
            const Verdict v = embeds_zpow(t, Ordinal{g});
            if (held) CHECK_FALSE(v.is_fails());
            held = held || v.is_holds();
        }
    }
}

TEST_CASE("rank is monotone along embeddings of scattered words") {
    testgen::Rng rng(22);
    int decided = 0;
    for (int i = 0; i < 400; ++i) {
        const Term a = testgen::core_scattered(rng, 3), b = testgen::core_scattered(rng, 4);
        if (!embeds(a, b).is_holds()) continue;
        ++decided;
        CHECK(hausdorff_rank(a) <= hausdorff_rank(b));
    }
    CHECK(decided > 50);
}
