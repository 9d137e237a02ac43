// Acceptance suite: one PASS/FAIL line per criterion.

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <iostream>
#include <sstream>

#include "gen.hpp"
#include "linord/coloured.hpp"
#include "linord/constructions.hpp"
#include "linord/lclass.hpp"
#include "linord/parse.hpp"
#include "linord/relation.hpp"
#include "linord/zcalculus.hpp"
#include "oracles/naive_coloured.hpp"
#include "oracles/rewrite_oracle.hpp"
#include "oracles/tail_compare.hpp"

using namespace linord;

namespace {

Term P(const std::string& s) { return parse_term(s); }
Ordinal O(const char* s) { return Ordinal::parse(s); }

struct Outcome {
    bool ok = true;
    std::ostringstream detail;
    void fail(const std::string& why) {
        if (ok) detail << why;
        ok = false;
    }
};

int failures = 0;

void criterion(int id, const std::string& name, double limit_s, const std::function<void(Outcome&)>& body) {
    Outcome out;
    const auto t0 = std::chrono::steady_clock::now();
    try {
        body(out);
    } catch (const std::exception& e) {
        out.fail(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (limit_s > 0 && secs > limit_s) out.fail("took " + std::to_string(secs) + " s");
    if (!out.ok) ++failures;
    std::printf("%s %2d %-28s %7.2fs  %s\n", out.ok ? "PASS" : "FAIL", id, name.c_str(), secs, out.detail.str().c_str());
    std::fflush(stdout);
}

std::string zn(std::uint64_t k) { return "z*" + std::to_string(k); }

bool is_infinite(const Term& t) { return !finite_size(normal_word(t)).has_value(); }

}  // namespace

int main() {
    criterion(1, "non-transitive family", 5, [](Outcome& o) {
        for (std::uint64_t n = 2; n <= 5; ++n) {
            const ClassId c = ClassId::le_n(n);
            const Term a = P(zn(2 * n - 1));
            const Term b = P("(z+1)*" + std::to_string(n - 1) + "+" + zn(n));
            const Term d = P("(z+1)*" + std::to_string(2 * n - 1));
            const Verdict ab = l_convex_embeds(c, a, b), bd = l_convex_embeds(c, b, d), ad = l_convex_embeds(c, a, d);
            if (!ab.is_holds() || !bd.is_holds() || !ad.is_fails())
                o.fail("n=" + std::to_string(n) + ": " + status_name(ab.status) + "," + status_name(bd.status) + "," +
                       status_name(ad.status));
            for (const Verdict* v : {&ab, &bd})
                if (v->witness && !verify_relation_witness(c, v == &ab ? a : b, v == &ab ? b : d, *v->witness).is_holds())
                    o.fail("witness rejected at n=" + std::to_string(n));
        }
        const auto triples = transitivity_probe(ClassId::le_n(2), {P("z*3"), P("z+1+z*2"), P("(z+1)*3")});
        if (triples.size() != 1) o.fail("probe found " + std::to_string(triples.size()) + " triples");
        o.detail << "n=2..5 give (Holds, Holds, Fails)";
    });

    criterion(2, "finite-bound ccs witnesses", 0, [](Outcome& o) {
        for (std::uint64_t n = 2; n <= 6; ++n) {
            const ClassId c = ClassId::le_n(n);
            const Verdict v = ccs_check(c);
            if (!v.is_fails() || !v.witness || !v.witness->sum) {
                o.fail("n=" + std::to_string(n) + " not refuted");
                continue;
            }
            if (!verify_ccs_witness(c, *v.witness).is_holds()) o.fail("n=" + std::to_string(n) + " witness rejected");
            if (!(normalize(*v.witness->sum) == Term::fin(n + 1))) o.fail("n=" + std::to_string(n) + " sum differs");
        }
        o.detail << "sums n+1 verified for n=2..6";
    });

    criterion(3, "well-order class table", 10, [](Outcome& o) {
        const std::vector<std::pair<const char*, bool>> table{
            {"w", true},    {"w+1", true},   {"w*2", false}, {"w*2+1", false}, {"w^2", true},
            {"w^2+1", true}, {"w^2+w", false}, {"w^3", true},  {"w^3+1", true}};
        std::string row;
        for (const auto& [g, expect] : table) {
            const ClassId c = ClassId::lt_ord(O(g));
            const Verdict v = ccs_check(c);
            row += v.is_holds() ? "T" : v.is_fails() ? "F" : "?";
            if (v.is_holds() != expect || !v.decided()) o.fail(std::string("gamma=") + g);
            if (v.is_fails()) {
                if (!v.witness || !verify_ccs_witness(c, *v.witness).is_holds()) o.fail(std::string("witness at ") + g);
                const auto s = ordinal_value(normal_word(*v.witness->sum));
                if (!s || *s < O(g)) o.fail(std::string("sum below gamma at ") + g);
            }
        }
        o.detail << row;
    });

    criterion(4, "Z-power classes search", 0, [](Outcome& o) {
        for (std::uint64_t g = 0; g <= 2; ++g)
            if (ccs_witness_search(ClassId::le_zpow(Ordinal{g}), 10000)) o.fail("violation at gamma=" + std::to_string(g));
        o.detail << "no violation for gamma=0,1,2 within 10^4";
    });

    criterion(5, "coloured oracle equivalence", 60, [](Outcome& o) {
        std::vector<std::vector<int>> targets, level{{}};
        for (int len = 1; len <= 6; ++len) {
            std::vector<std::vector<int>> next;
            for (const auto& w : level)
                for (int c = 1; c <= 3; ++c) {
                    auto v = w;
                    v.push_back(c);
                    next.push_back(v);
                }
            level = std::move(next);
            targets.insert(targets.end(), level.begin(), level.end());
        }
        // sources up to renaming of colours: first occurrences appear as 1, 2, 3
        std::vector<std::vector<int>> sources;
        for (const auto& s : targets) {
            int next = 1;
            bool canon = true;
            for (int c : s) {
                if (c > next) canon = false;
                if (c == next) ++next;
            }
            if (canon) sources.push_back(s);
        }
        const std::vector<ClassId> classes{ClassId::one(), ClassId::fin(), ClassId::le_n(2), ClassId::le_n(3)};
        std::vector<bool> in_class[4];
        for (int k = 0; k < 4; ++k)
            for (int m = 0; m <= 6; ++m) in_class[k].push_back(m > 0 && member(classes[k], Term::fin(m)).is_holds());
        std::uint64_t comparisons = 0, mismatches = 0;
        for (const auto& s : sources)
            for (const auto& t : targets) {
                const int pieces = oracle::naive_min_pieces(s, t);
                for (int k = 0; k < 4; ++k) {
                    const bool expect = pieces > 0 && in_class[k][pieces];
                    const Verdict v = coloured_l_convex_embeds(classes[k], {s}, {t});
                    ++comparisons;
                    if (!v.decided() || v.is_holds() != expect) ++mismatches;
                }
            }
        if (mismatches) o.fail(std::to_string(mismatches) + " mismatches; ");
        o.detail << comparisons << " comparisons";
    });

    criterion(6, "invariant suites", 0, [](Outcome& o) {
        testgen::Rng rng(2024);
        const std::vector<ClassId> classes{ClassId::one(), ClassId::le_n(2), ClassId::fin(),
                                           ClassId::lt_ord(O("w+1")), ClassId::wo(), ClassId::scat()};
        std::ostringstream counts;
        // reflexivity
        for (int i = 0; i < 1000; ++i) {
            const Term t = testgen::block_term(rng, 4);
            for (const auto& c : classes)
                if (!l_convex_embeds(c, t, t).is_holds()) o.fail("reflexivity: " + t.str() + " over " + c.str() + "; ");
        }
        // class monotonicity, chain, basic fact
        std::uint64_t mono = 0, chain = 0, basic = 0;
        for (int i = 0; i < 1000; ++i) {
            const Term a = testgen::block_term(rng, 3), b = testgen::block_term(rng, 4);
            const Verdict e = embeds(a, b), cv = convex_embeds(a, b);
            std::vector<Verdict> vs;
            for (const auto& c : classes) vs.push_back(l_convex_embeds(c, a, b));
            for (std::size_t x = 0; x < classes.size(); ++x) {
                for (std::size_t y = 0; y < classes.size(); ++y) {
                    if (x == y || class_subset(classes[x], classes[y]) != Tri::True) continue;
                    if (vs[x].decided() && vs[y].decided()) ++mono;
                    if (vs[x].is_holds() && vs[y].is_fails())
                        o.fail("monotonicity: " + a.str() + " -> " + b.str() + " " + classes[x].str() + "/" +
                               classes[y].str() + "; ");
                }
                if (cv.decided() && vs[x].decided() && e.decided()) {
                    ++chain;
                    if ((cv.is_holds() && !vs[x].is_holds()) || (vs[x].is_holds() && !e.is_holds()))
                        o.fail("chain: " + a.str() + " -> " + b.str() + " over " + classes[x].str() + "; ");
                }
                if (member(classes[x], a).is_holds() && vs[x].decided() && e.decided()) {
                    ++basic;
                    if (vs[x].status != e.status) o.fail("member rule: " + a.str() + " -> " + b.str() + "; ");
                }
            }
        }
        // scattered sources into eta
        std::uint64_t into_eta = 0;
        for (int i = 0; i < 1000; ++i) {
            const Term t = testgen::block_term(rng, 4, false);
            for (const auto& c : classes) {
                const Verdict v = l_convex_embeds(c, t, Term::eta()), m = member(c, t);
                if (!v.decided() || !m.decided()) continue;
                ++into_eta;
                if (v.status != m.status) o.fail("eta rule: " + t.str() + " over " + c.str() + "; ");
            }
        }
        // {w, w*} basis
        std::uint64_t basis = 0;
        const std::vector<ClassId> with_omega{ClassId::lt_ord(O("w+1")), ClassId::wo(), ClassId::scat(),
                                              ClassId::le_zpow(Ordinal{1}), ClassId::lin()};
        for (int i = 0; i < 1000; ++i) {
            const Term t = testgen::block_term(rng, 4);
            if (!is_infinite(t)) continue;
            for (const auto& c : with_omega) {
                ++basis;
                if (!l_convex_embeds(c, Term::omega(), t).is_holds() && !l_convex_embeds(c, Term::omega_star(), t).is_holds())
                    o.fail("basis: " + t.str() + " over " + c.str() + "; ");
            }
        }
        // transitivity on ccs classes: 25 corpora of 40 terms
        std::uint64_t probed = 0;
        for (int r = 0; r < 25; ++r) {
            std::vector<Term> corpus;
            for (int i = 0; i < 40; ++i) corpus.push_back(testgen::block_term(rng, 3));
            probed += corpus.size();
            for (const auto& c : {ClassId::one(), ClassId::fin(), ClassId::scat()}) {
                const auto bad = transitivity_probe(c, corpus);
                if (!bad.empty())
                    o.fail("transitivity over " + c.str() + ": " + bad[0].a.str() + " | " + bad[0].b.str() + " | " +
                           bad[0].c.str() + "; ");
            }
        }
        o.detail << "decided: mono " << mono << ", chain " << chain << ", member " << basic << ", eta " << into_eta
                 << ", basis " << basis << ", probe terms " << probed;
    });

    criterion(7, "congruence map equivalence", 0, [](Outcome& o) {
        testgen::Rng rng(7);
        std::uint64_t decided = 0;
        for (int i = 0; decided < 400 && i < 5000; ++i) {
            const Term a = testgen::block_term(rng, 3, false);
            const Term b = i % 3 == 0 ? a : testgen::block_term(rng, 3, false);
            const Verdict iso = iso_check(a, b);
            if (!iso.decided()) continue;
            for (const auto& c : {ClassId::one(), ClassId::fin()}) {
                const Term x = phi_cong(a, Term::eta()), y = phi_cong(b, Term::eta());
                const Verdict r = l_convex_embeds(c, x, y), bi = biembeds(c, x, y);
                const Verdict rn = l_convex_embeds(c, normalize(x), normalize(y));
                if (!r.decided() || !bi.decided() || !rn.decided()) continue;
                ++decided;
                if (r.status != iso.status || bi.status != iso.status || rn.status != iso.status)
                    o.fail(a.str() + " vs " + b.str() + " over " + c.str() + "; ");
            }
        }
        if (decided < 200) o.fail("only " + std::to_string(decided) + " decided pairs; ");
        o.detail << decided << " decided (pair, class) instances";
    });

    criterion(8, "ordinal suite", 0, [](Outcome& o) {
        testgen::Rng rng(8);
        for (int i = 0; i < 10000; ++i) {
            const Ordinal a = testgen::ordinal_below(rng, 5), b = testgen::ordinal_below(rng, 5),
                          c = testgen::ordinal_below(rng, 5);
            if (!(hessenberg(a, b) == hessenberg(b, a))) o.fail("commutativity; ");
            if (!(hessenberg(hessenberg(a, b), c) == hessenberg(a, hessenberg(b, c)))) o.fail("associativity; ");
            if (hessenberg(a, b) < a + b) o.fail("below ordinal sum; ");
            if (!a.is_zero()) {
                std::map<Ordinal, Ordinal> mods;
                for (int j = 0; j < 3; ++j) {
                    const Ordinal pos = testgen::ordinal_below(rng, 5);
                    if (!(pos < a)) continue;
                    const Ordinal val = testgen::ordinal_below(rng, 3);
                    mods[pos] = val;
                }
                Ordinal sum_vals;
                for (const auto& [k, v] : mods) sum_vals = hessenberg(sum_vals, v);
                if (hessenberg(a, sum_vals) < sum_with_finite_support(a, mods)) o.fail("support bound; ");
            }
        }
        if (!(sum_with_finite_support(Ordinal::omega(), {{Ordinal{0}, Ordinal::omega()}}) == O("w*2")))
            o.fail("equality instance; ");
        // threshold by enumerating w^(w^xi) for xi < 4
        for (int i = 0; i < 2000; ++i) {
            const Ordinal g = testgen::ordinal_below(rng, 5) + Ordinal::omega();
            Ordinal best;
            for (std::uint64_t xi = 0; xi < 4; ++xi) {
                const Ordinal m = Ordinal::omega_pow(Ordinal::omega_pow(Ordinal{xi}));
                if (m <= g) best = m;
            }
            if (!(threshold(g) == best)) o.fail("threshold at " + g.str() + "; ");
        }
        o.detail << "10^4 random ordinals below w^5";
    });

    criterion(9, "rank suite", 0, [](Outcome& o) {
        for (std::uint64_t g = 0; g <= 4; ++g)
            if (!(hausdorff_rank(z_expand(Ordinal{g})) == Ordinal{g})) o.fail("rank of Z^" + std::to_string(g) + "; ");
        testgen::Rng rng(9);
        for (int i = 0; i < 1000; ++i) {
            const Ordinal a = testgen::ordinal_below(rng, 4), g{testgen::pick(rng, 4)};
            if (a.is_zero()) continue;
            const Verdict v = embeds_zpow(Term::ord(a), g);
            const bool expect = a <= Ordinal::omega_pow(g);
            if (!v.decided() || v.is_holds() != expect) o.fail(a.str() + " into Z^" + g.str() + "; ");
        }
        o.detail << "ranks 0..4 and 10^3 ordinal probes";
    });

    criterion(10, "tail-equality reduction", 0, [](Outcome& o) {
        testgen::Rng rng(10);
        for (int i = 0; i < 100; ++i) {
            const auto r = [&] {
                return Rational(1 + static_cast<std::int64_t>(testgen::pick(rng, 3)),
                                1 + static_cast<std::int64_t>(testgen::pick(rng, 2)));
            };
            std::vector<Rational> xp, yp;
            for (std::size_t k = testgen::pick(rng, 9); k > 0; --k) xp.push_back(r());
            yp = xp;
            if (testgen::pick(rng, 2)) {
                yp.clear();
                for (std::size_t k = testgen::pick(rng, 9); k > 0; --k) yp.push_back(r());
            }
            const Rational xt = r(), yt = testgen::pick(rng, 2) ? xt : r();
            if (e1_decide({xp, xt}, {yp, yt}).is_holds() != oracle::tails_equal(xp, xt, yp, yt)) o.fail("mismatch; ");
        }
        o.detail << "100 random pairs";
    });

    criterion(11, "normalizer exhaustive", 60, [](Outcome& o) {
        const std::vector<int> alphabet{1, oracle::W, oracle::WS, oracle::Z, oracle::Q};
        std::vector<oracle::Letters> level{{}};
        std::uint64_t words = 0;
        for (int len = 1; len <= 8; ++len) {
            std::vector<oracle::Letters> next;
            next.reserve(level.size() * alphabet.size());
            for (const auto& w : level)
                for (int x : alphabet) {
                    auto v = w;
                    v.push_back(x);
                    next.push_back(std::move(v));
                }
            level = std::move(next);
            for (const auto& w : level) {
                ++words;
                const auto nf = oracle::normal_forms(w);
                const Term t = P(oracle::letters_str(w));
                const Term n = normalize(t);
                if (nf.size() != 1) o.fail("rules not confluent at " + oracle::letters_str(w) + "; ");
                else if (n.str() != oracle::letters_str(*nf.begin())) o.fail("differs at " + oracle::letters_str(w) + "; ");
                if (!(normalize(n) == n)) o.fail("not idempotent at " + oracle::letters_str(w) + "; ");
            }
        }
        o.detail << words << " words";
    });

    std::printf("%s: %d criteria failed\n", failures ? "FAIL" : "PASS", failures);
    return failures ? 1 : 0;
}
