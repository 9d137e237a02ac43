#include "linord/zcalculus.hpp"

#include <algorithm>

namespace linord {

Term z_expand(const Ordinal& g, std::uint64_t bound) {
    if (g == Ordinal::omega()) return Term::zpow(g);
    const auto n = g.as_finite();
    if (!n || *n > bound)
        throw ZError(ZError::Kind::BoundExceeded, "Z-power expansion bound exceeded at " + g.str());
    if (*n == 0) return Term::fin(1);
    if (*n == 1) return Term::sum({Term::omega_star(), Term::fin(1), Term::omega()});
    const Term prev = normalize(z_expand(Ordinal{*n - 1}, bound));
    const Term prev_w = Term::product(prev, Term::omega());
    return Term::sum({Term::rev(prev_w), prev, prev_w});
}

namespace {

// How a letter can sit inside Z^(b+1) = sum over z of copies of Z^b:
// possible at all, with a finite index set, with an index bounded above, bounded below.
struct Flags {
    Tri possible = Tri::False, fin = Tri::False, bounded_above = Tri::False, bounded_below = Tri::False;
};

Flags all(Tri v) { return {v, v, v, v}; }
Flags mirror(Flags f) { return {f.possible, f.fin, f.bounded_below, f.bounded_above}; }
Flags index_omega() { return {Tri::True, Tri::False, Tri::False, Tri::True}; }
Flags index_omega_star() { return {Tri::True, Tri::False, Tri::True, Tri::False}; }
Flags index_zeta() { return {Tri::True, Tri::False, Tri::False, Tri::False}; }

std::optional<Ordinal> word_rank(const Word& w);

std::optional<Ordinal> letter_rank(const Term& x) {
    switch (letter_kind(x)) {
        case LetterKind::Fin: return Ordinal{x.as<FiniteChain>().n == 1 ? 0u : 1u};
        case LetterKind::Omega:
        case LetterKind::OmegaStar:
        case LetterKind::Zeta: return Ordinal{1};
        case LetterKind::Ord: return ordinal_rank(x.as<OrdTerm>().alpha);
        case LetterKind::OrdStar: return ordinal_rank(x.as<Rev>().inner.as<OrdTerm>().alpha);
        case LetterKind::ZetaTimes: {
            auto r = word_rank(zeta_index(x));
            if (!r) return std::nullopt;
            return Ordinal{1} + *r;  // rank(zW) = 1 + rank(W)
        }
        case LetterKind::Residue:
            if (x.is<ZPow>()) return x.as<ZPow>().gamma;
            if (x.is<Rev>()) return word_rank(normal_word(x.as<Rev>().inner));
            return std::nullopt;
        default: return std::nullopt;
    }
}

Flags word_flags(const Word& w, const Ordinal& b);

Flags letter_flags(const Term& x, const Ordinal& b) {
    const auto r = letter_rank(x);
    if (r && *r <= b) return all(Tri::True);
    const Ordinal next = b + Ordinal{1};
    switch (letter_kind(x)) {
        case LetterKind::Fin: return all(Tri::True);
        case LetterKind::Omega: return index_omega();
        case LetterKind::OmegaStar: return index_omega_star();
        case LetterKind::Zeta: return index_zeta();
        case LetterKind::Ord:
        case LetterKind::OrdStar: {
            const bool star = letter_kind(x) == LetterKind::OrdStar;
            const Ordinal& a = star ? x.as<Rev>().inner.as<OrdTerm>().alpha : x.as<OrdTerm>().alpha;
            const Ordinal top = Ordinal::omega_pow(next);
            if (a < top) return all(Tri::True);
            if (a == top) return star ? index_omega_star() : index_omega();
            return all(Tri::False);
        }
        case LetterKind::ZetaTimes: {
            // z*W inside Z^(b+1) = z * Z^b: reduce to W inside Z^b, needs b = c + 1.
            if (b.is_zero()) return all(Tri::False);
            if (!b.is_finite()) return all(Tri::Unknown);
            return word_flags(zeta_index(x), Ordinal{*b.as_finite() - 1});
        }
        case LetterKind::Residue: {
            if (x.is<ZPow>()) {
                const Ordinal& d = x.as<ZPow>().gamma;
                if (d == next) return index_zeta();
                return all(Tri::False);
            }
            if (x.is<Rev>()) return mirror(word_flags(normal_word(x.as<Rev>().inner), b));
            if (x.is<Product>()) {
                // A*B with every copy of A fitting one Z^b block: B is the index.
                const auto ra = word_rank(normal_word(x.as<Product>().left));
                if (!ra || !(*ra <= b)) return all(Tri::Unknown);
                const Flags f = word_flags(normal_word(x.as<Product>().right), Ordinal{0});
                if (f.possible == Tri::True) return f;
            }
            return all(Tri::Unknown);
        }
        default: return all(Tri::Unknown);
    }
}

Flags word_flags(const Word& w, const Ordinal& b) {
    std::vector<Flags> fs;
    for (const auto& x : w) fs.push_back(letter_flags(x, b));
    if (fs.size() == 1) return fs[0];
    Tri inner_fin = Tri::True;
    for (std::size_t i = 1; i + 1 < fs.size(); ++i) inner_fin = tri_and(inner_fin, fs[i].fin);
    Flags r;
    r.fin = tri_and(inner_fin, tri_and(fs.front().fin, fs.back().fin));
    r.bounded_above = tri_and(fs.front().bounded_above, tri_and(inner_fin, fs.back().fin));
    r.bounded_below = tri_and(fs.front().fin, tri_and(inner_fin, fs.back().bounded_below));
    r.possible = tri_and(fs.front().bounded_above, tri_and(inner_fin, fs.back().bounded_below));
    return r;
}

Tri word_embeds(const Word& w, const Ordinal& g);

std::optional<Ordinal> word_rank(const Word& w) {
    if (w.size() == 1 && w[0].is<FiniteChain>() && w[0].as<FiniteChain>().n == 1) return Ordinal{0};
    Ordinal r;
    for (const auto& x : w) {
        auto lr = letter_rank(x);
        if (!lr) return std::nullopt;
        r = std::max(r, *lr);
    }
    if (w.size() == 1) return r;
    switch (word_embeds(w, r)) {
        case Tri::True: return r;
        case Tri::False: return r + Ordinal{1};  // letters of rank <= r sum into Z^r * n
        default: return std::nullopt;
    }
}

Tri word_embeds(const Word& w, const Ordinal& g) {
    if (g.is_zero()) return w.size() == 1 && w[0].is<FiniteChain>() && w[0].as<FiniteChain>().n == 1 ? Tri::True
                                                                                                      : Tri::False;
    if (auto a = ordinal_value(w)) return *a <= Ordinal::omega_pow(g) ? Tri::True : Tri::False;
    if (auto a = reverse_ordinal_value(w)) return *a <= Ordinal::omega_pow(g) ? Tri::True : Tri::False;
    if (w.size() == 1) {
        if (auto r = letter_rank(w[0])) return *r <= g ? Tri::True : Tri::False;
    }
    if (g.is_successor()) {
        const Ordinal b = g.limit_part() + Ordinal{g.finite_part() - 1};
        return word_flags(w, b).possible;
    }
    // limit g: finite sums of letters of rank < g fit; any letter above g does not
    Tri all_below = Tri::True;
    for (const auto& x : w) {
        const auto r = letter_rank(x);
        if (!r) {
            all_below = tri_and(all_below, Tri::Unknown);
            continue;
        }
        if (*r > g) return Tri::False;
        all_below = tri_and(all_below, *r < g ? Tri::True : Tri::Unknown);
    }
    return all_below;
}

}  // namespace

Verdict embeds_zpow_word(const Word& w, const Ordinal& g) {
    const Tri s = scattered_word(w);
    if (s == Tri::False)
        throw ZError(ZError::Kind::NotScattered, "not scattered: " + word_term(w).str());
    if (s == Tri::Unknown) return Verdict::unknown("rank", "scatteredness undecided for " + word_term(w).str());
    const std::string what = word_term(w).str() + " into Z^" + g.str();
    if (ordinal_value(w) || reverse_ordinal_value(w)) {
        const Tri r = word_embeds(w, g);
        return r == Tri::True ? Verdict::holds("ordinal-bound", what + ": bounded by w^" + g.str())
                              : Verdict::fails("ordinal-bound", what + ": exceeds w^" + g.str());
    }
    switch (word_embeds(w, g)) {
        case Tri::True: return Verdict::holds("rank-split", what);
        case Tri::False: return Verdict::fails("rank-split", what + ": no bounded/cofinal split of the letters");
        default: return Verdict::unknown("rank-split", what + ": symbolic letters");
    }
}

Verdict embeds_zpow(const Term& t, const Ordinal& g) { return embeds_zpow_word(normal_word(t), g); }

Ordinal hausdorff_rank(const Term& t) {
    const Word w = normal_word(t);
    bool any_unknown = false;
    for (std::uint64_t g = 0; g <= kRankProbeCap; ++g) {
        const Verdict v = embeds_zpow_word(w, Ordinal{g});
        if (v.is_holds()) return Ordinal{g};
        if (v.is_unknown()) any_unknown = true;
    }
    if (!any_unknown) {
        if (auto r = word_rank(w); r && embeds_zpow_word(w, *r).is_holds()) return *r;
    }
    throw ZError(ZError::Kind::Undecided, "rank undecided for " + word_term(w).str());
}

}  // namespace linord
