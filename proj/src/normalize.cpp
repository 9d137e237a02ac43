#include "linord/normalize.hpp"

#include <algorithm>
#include <map>

namespace linord {

namespace {

constexpr std::uint64_t kMaxUnfold = 100000;

std::uint64_t fin_n(const Term& t) { return t.as<FiniteChain>().n; }

const Ordinal& ord_of(const Term& letter) {
    return letter.is<OrdTerm>() ? letter.as<OrdTerm>().alpha : letter.as<Rev>().inner.as<OrdTerm>().alpha;
}

Term ord_star(const Ordinal& a) { return Term::rev(Term::ord(a)); }

Term residue_product(const Word& a, const Term& b) { return Term::product(word_term(a), b); }

}  // namespace

LetterKind letter_kind(const Term& t) {
    switch (t.kind()) {
        case TermKind::Fin: return LetterKind::Fin;
        case TermKind::Omega: return LetterKind::Omega;
        case TermKind::OmegaStar: return LetterKind::OmegaStar;
        case TermKind::Zeta: return LetterKind::Zeta;
        case TermKind::Shuffle: return LetterKind::Shuffle;
        case TermKind::IShuffle: return LetterKind::IShuffle;
        case TermKind::Ord: return LetterKind::Ord;
        case TermKind::Rev:
            return t.as<Rev>().inner.is<OrdTerm>() ? LetterKind::OrdStar : LetterKind::Residue;
        case TermKind::Product:
            return t.as<Product>().left.is<Zeta>() ? LetterKind::ZetaTimes : LetterKind::Residue;
        default: return LetterKind::Residue;
    }
}

Term word_term(const Word& w) {
    if (w.empty()) throw TermError("empty word");
    return w.size() == 1 ? w[0] : Term::sum(w);
}

Word zeta_index(const Term& letter) { return normal_word(letter.as<Product>().right); }

Term zeta_times(const Word& w) { return Term::product(Term::zeta(), word_term(w)); }

namespace {

Word zeta_times_word(const Word& w) {
    if (auto n = finite_size(w)) {
        if (*n > kMaxUnfold) return {zeta_times(w)};
        return Word(*n, Term::zeta());
    }
    return {zeta_times(w)};
}

// Index word of a maximal run of z letters, when the letter is part of one.
std::optional<Word> zeta_part(const Term& t) {
    const auto k = letter_kind(t);
    if (k == LetterKind::Zeta) return Word{Term::fin(1)};
    if (k == LetterKind::ZetaTimes) return zeta_index(t);
    return std::nullopt;
}

// Pairwise absorption rules; each replaces a pair by an isomorphic word.
std::optional<Word> merge(const Term& a, const Term& b) {
    using K = LetterKind;
    const K ka = letter_kind(a), kb = letter_kind(b);
    switch (ka) {
        case K::Fin:
            if (kb == K::Fin) {
                std::uint64_t n;
                if (__builtin_add_overflow(fin_n(a), fin_n(b), &n)) return std::nullopt;
                return Word{Term::fin(n)};  // n + m
            }
            if (kb == K::Omega || kb == K::Ord) return Word{b};  // n + w = w, n + a = a
            break;
        case K::Omega:
            if (kb == K::Ord) return Word{b};  // w + a = a for a >= w^2
            break;
        case K::OmegaStar:
            if (kb == K::Fin) return Word{a};                   // w* + n = w*
            if (kb == K::Omega) return Word{Term::zeta()};     // w* + w = z
            if (kb == K::Ord) return Word{Term::zeta(), b};    // w* + a = z + a
            if (kb == K::OrdStar) return Word{ord_star(ord_of(b) + Ordinal::omega())};
            break;
        case K::Ord:
            if (kb == K::Omega) return Word{Term::ord(ord_of(a) + Ordinal::omega())};
            if (kb == K::Ord) return Word{Term::ord(ord_of(a) + ord_of(b))};
            break;
        case K::OrdStar:
            if (kb == K::Fin || kb == K::OmegaStar) return Word{a};
            if (kb == K::OrdStar) return Word{ord_star(ord_of(b) + ord_of(a))};
            if (kb == K::Omega) return Word{a, Term::zeta()};
            if (kb == K::Ord) return Word{a, Term::zeta(), b};
            break;
        case K::Zeta:
        case K::ZetaTimes:
            if ((ka == K::ZetaTimes || kb == K::ZetaTimes) && (kb == K::Zeta || kb == K::ZetaTimes)) {
                Word w = *zeta_part(a);
                const Word wb = *zeta_part(b);
                w.insert(w.end(), wb.begin(), wb.end());
                return Word{zeta_times(reduce(std::move(w)))};
            }
            break;
        case K::Shuffle:
            if (kb == K::Shuffle && a.as<Shuffle>().labels == b.as<Shuffle>().labels) return Word{a};
            break;
        default: break;
    }
    return std::nullopt;
}

void push(Word& st, const Term& x) {
    st.push_back(x);
    if (st.size() < 2) return;
    auto r = merge(st[st.size() - 2], st.back());
    if (!r) return;
    st.pop_back();
    st.pop_back();
    for (const auto& y : *r) push(st, y);
}

// s + w + s = s when the scattered run w between two equal shuffles is one of the labels.
bool shuffle_pass(Word& w) {
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (!w[i].is<Shuffle>()) continue;
        std::size_t j = i + 1;
        while (j < w.size() && !w[j].is<Shuffle>() && !w[j].is<IntervalShuffle>()) ++j;
        if (j >= w.size() || j == i + 1 || !w[j].is<Shuffle>()) continue;
        const auto& labels = w[i].as<Shuffle>().labels;
        if (!(labels == w[j].as<Shuffle>().labels)) continue;
        const Word run(w.begin() + static_cast<std::ptrdiff_t>(i) + 1, w.begin() + static_cast<std::ptrdiff_t>(j));
        bool member = false;
        if (labels.is_periodic()) {
            member = run.size() == 1 && run[0].is<FiniteChain>() && labels.contains_fin(fin_n(run[0]));
        } else {
            const Term rt = word_term(run);
            member = std::binary_search(labels.labels().begin(), labels.labels().end(), rt);
        }
        if (!member) continue;
        w.erase(w.begin() + static_cast<std::ptrdiff_t>(i) + 1, w.begin() + static_cast<std::ptrdiff_t>(j) + 1);
        return true;
    }
    return false;
}

Word mul_letter(const Word& a, const Term& b);

Word zpow_word(std::uint64_t n) {
    if (n == 0) return {Term::fin(1)};
    const Word z = zpow_word(n - 1);
    const Word zw = product_word(z, {Term::omega()});
    Word out = reverse_word(zw);
    out.insert(out.end(), z.begin(), z.end());
    out.insert(out.end(), zw.begin(), zw.end());
    return reduce(std::move(out));
}

std::optional<Word> zeta_form(const Word& a) {
    if (a.size() == 1 && letter_kind(a[0]) == LetterKind::ZetaTimes) return zeta_index(a[0]);
    if (std::all_of(a.begin(), a.end(), [](const Term& t) { return t.is<Zeta>(); }))
        return Word{Term::fin(a.size())};
    return std::nullopt;
}

Word mul_letter(const Word& a, const Term& b) {
    using K = LetterKind;
    const K kb = letter_kind(b);
    const auto fa = finite_size(a);
    if (kb == K::Fin) {
        const auto n = fin_n(b);
        if (fa) {
            std::uint64_t m;
            if (!__builtin_mul_overflow(*fa, n, &m)) return {Term::fin(m)};
            return {residue_product(a, b)};
        }
        if (n > kMaxUnfold || a.size() * n > kMaxUnfold) return {residue_product(a, b)};
        Word out;
        for (std::uint64_t i = 0; i < n; ++i) out.insert(out.end(), a.begin(), a.end());
        return out;
    }
    if (fa && *fa == 1) return {b};
    if (kb == K::Shuffle) {
        const auto& labels = b.as<Shuffle>().labels;
        if (labels.is_periodic() || scattered_word(a) != Tri::True) return {residue_product(a, b)};
        std::vector<Term> ls;
        for (const auto& l : labels.labels()) ls.push_back(word_term(product_word(a, normal_word(l))));
        return {Term::shuffle(LabelSet::of(std::move(ls)))};
    }
    if (kb == K::IShuffle || kb == K::Residue) return {residue_product(a, b)};
    if (auto v = zeta_form(a)) return zeta_times_word(product_word(*v, {b}));
    if (fa) return {b};  // n*w = w, n*z = z, n*a = a for infinite a
    if (auto oa = ordinal_value(a)) {
        if (kb == K::Omega) return expand_ordinal(*oa * Ordinal::omega());
        if (kb == K::Ord) return expand_ordinal(*oa * ord_of(b));
    }
    if (auto ra = reverse_ordinal_value(a)) {
        if (kb == K::OmegaStar) return reverse_word(expand_ordinal(*ra * Ordinal::omega()));
        if (kb == K::OrdStar) return reverse_word(expand_ordinal(*ra * ord_of(b)));
    }
    if (kb == K::Zeta) {
        Word out = mul_letter(a, Term::omega_star());
        const Word right = mul_letter(a, Term::omega());
        out.insert(out.end(), right.begin(), right.end());
        return out;
    }
    return {residue_product(a, b)};
}

}  // namespace

Word reduce(Word w) {
    while (true) {
        Word st;
        st.reserve(w.size());
        for (const auto& x : w) push(st, x);
        if (!shuffle_pass(st)) return st;
        w = std::move(st);
    }
}

Word join(const Word& a, const Word& b) {
    Word w = a;
    w.insert(w.end(), b.begin(), b.end());
    return reduce(std::move(w));
}

Word product_word(const Word& a, const Word& b) {
    Word out;
    for (const auto& x : b) {
        const Word part = mul_letter(a, x);
        out.insert(out.end(), part.begin(), part.end());
    }
    return reduce(std::move(out));
}

Word expand_ordinal(const Ordinal& a) {
    Word out;
    const Ordinal lim = a.limit_part();
    if (lim >= Ordinal::omega_pow(Ordinal{2})) {
        out.push_back(Term::ord(lim));
    } else if (!lim.is_zero()) {
        out.insert(out.end(), lim.cnf().front().coeff, Term::omega());
    }
    if (auto n = a.finite_part()) out.push_back(Term::fin(n));
    return out;
}

Term reverse_letter(const Term& t) {
    switch (letter_kind(t)) {
        case LetterKind::Fin:
        case LetterKind::Zeta: return t;
        case LetterKind::Omega: return Term::omega_star();
        case LetterKind::OmegaStar: return Term::omega();
        case LetterKind::Shuffle: {
            const auto& ls = t.as<Shuffle>().labels;
            if (ls.is_periodic()) return t;
            std::vector<Term> rl;
            for (const auto& l : ls.labels()) rl.push_back(reverse(l));
            return Term::shuffle(LabelSet::of(std::move(rl)));
        }
        case LetterKind::Ord: return Term::rev(t);
        case LetterKind::OrdStar: return t.as<Rev>().inner;
        case LetterKind::ZetaTimes: return word_term(zeta_times_word(reverse_word(zeta_index(t))));
        case LetterKind::IShuffle:
        case LetterKind::Residue:
            if (t.is<Rev>()) return t.as<Rev>().inner;
            if (t.is<ZPow>()) return t;
            return Term::rev(t);
    }
    return Term::rev(t);
}

Word reverse_word(const Word& w) {
    Word out;
    for (auto it = w.rbegin(); it != w.rend(); ++it) {
        if (letter_kind(*it) == LetterKind::ZetaTimes) {
            const Word part = zeta_times_word(reverse_word(zeta_index(*it)));
            out.insert(out.end(), part.begin(), part.end());
        } else {
            out.push_back(reverse_letter(*it));
        }
    }
    return reduce(std::move(out));
}

Word normal_word(const Term& t) {
    return std::visit(
        [&](const auto& x) -> Word {
            using T = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<T, Sum>) {
                Word out;
                for (const auto& p : x.parts) {
                    const Word w = normal_word(p);
                    out.insert(out.end(), w.begin(), w.end());
                }
                return reduce(std::move(out));
            } else if constexpr (std::is_same_v<T, Product>) {
                return product_word(normal_word(x.left), normal_word(x.right));
            } else if constexpr (std::is_same_v<T, OrdTerm>) {
                return expand_ordinal(x.alpha);
            } else if constexpr (std::is_same_v<T, ZPow>) {
                if (auto n = x.gamma.as_finite(); n && *n <= kZPowNormalizeBound) return zpow_word(*n);
                return {t};
            } else if constexpr (std::is_same_v<T, Rev>) {
                if (x.inner.template is<IntervalShuffle>() || x.inner.template is<Indexed>()) return {t};
                return reverse_word(normal_word(x.inner));
            } else {
                return {t};
            }
        },
        t.node().v);
}

Term normalize(const Term& t) { return word_term(normal_word(t)); }

Term reverse(const Term& t) {
    return std::visit(
        [&](const auto& x) -> Term {
            using T = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<T, Omega>) {
                return Term::omega_star();
            } else if constexpr (std::is_same_v<T, OmegaStar>) {
                return Term::omega();
            } else if constexpr (std::is_same_v<T, Shuffle>) {
                if (x.labels.is_periodic()) return t;
                std::vector<Term> rl;
                for (const auto& l : x.labels.labels()) rl.push_back(reverse(l));
                return Term::shuffle(LabelSet::of(std::move(rl)));
            } else if constexpr (std::is_same_v<T, Sum>) {
                std::vector<Term> parts;
                for (auto it = x.parts.rbegin(); it != x.parts.rend(); ++it) parts.push_back(reverse(*it));
                return Term::sum(std::move(parts));
            } else if constexpr (std::is_same_v<T, Product>) {
                return Term::product(reverse(x.left), reverse(x.right));
            } else if constexpr (std::is_same_v<T, Rev>) {
                return x.inner;
            } else if constexpr (std::is_same_v<T, FiniteChain> || std::is_same_v<T, Zeta> ||
                                 std::is_same_v<T, ZPow>) {
                return t;
            } else {
                return Term::rev(t);
            }
        },
        t.node().v);
}

bool canonical(const Word& w) {
    for (const auto& x : w) {
        switch (letter_kind(x)) {
            case LetterKind::IShuffle:
            case LetterKind::Residue: return false;
            case LetterKind::ZetaTimes:
                if (!canonical(zeta_index(x))) return false;
                break;
            case LetterKind::Shuffle: {
                const auto& ls = x.as<Shuffle>().labels;
                if (!ls.is_periodic())
                    for (const auto& l : ls.labels())
                        if (!canonical(normal_word(l))) return false;
                break;
            }
            default: break;
        }
    }
    return true;
}

namespace {

Tri scattered_residue(const Term& t) {
    if (t.is<Product>()) return tri_and(scattered(t.as<Product>().left), scattered(t.as<Product>().right));
    if (t.is<Rev>()) return scattered(t.as<Rev>().inner);
    if (t.is<ZPow>()) return Tri::True;
    if (t.is<Indexed>() || t.is<IntervalShuffle>()) return Tri::False;
    return Tri::Unknown;
}

}  // namespace

Tri scattered_word(const Word& w) {
    Tri r = Tri::True;
    for (const auto& x : w) {
        switch (letter_kind(x)) {
            case LetterKind::Shuffle:
            case LetterKind::IShuffle: return Tri::False;
            case LetterKind::ZetaTimes: r = tri_and(r, scattered_word(zeta_index(x))); break;
            case LetterKind::Residue: r = tri_and(r, scattered_residue(x)); break;
            default: break;
        }
        if (r == Tri::False) return r;
    }
    return r;
}

Tri scattered(const Term& t) { return scattered_word(normal_word(t)); }

std::optional<std::uint64_t> finite_size(const Word& w) {
    if (w.size() == 1 && w[0].is<FiniteChain>()) return fin_n(w[0]);
    return std::nullopt;
}

std::optional<Ordinal> ordinal_value(const Word& w) {
    Ordinal v;
    for (const auto& x : w) {
        switch (letter_kind(x)) {
            case LetterKind::Fin: v = v + Ordinal{fin_n(x)}; break;
            case LetterKind::Omega: v = v + Ordinal::omega(); break;
            case LetterKind::Ord: v = v + ord_of(x); break;
            default: return std::nullopt;
        }
    }
    return v;
}

std::optional<Ordinal> reverse_ordinal_value(const Word& w) {
    Ordinal v;
    for (auto it = w.rbegin(); it != w.rend(); ++it) {
        switch (letter_kind(*it)) {
            case LetterKind::Fin: v = v + Ordinal{fin_n(*it)}; break;
            case LetterKind::OmegaStar: v = v + Ordinal::omega(); break;
            case LetterKind::OrdStar: v = v + ord_of(*it); break;
            default: return std::nullopt;
        }
    }
    return v;
}

ColouredFinite denote_finite(const Term& t) {
    const Word w = normal_word(t);
    const auto n = finite_size(w);
    if (!n) throw InfiniteTerm("term is infinite: " + word_term(w).str());
    if (*n > kMaxUnfold) throw TermError("finite chain too long to list explicitly");
    return ColouredFinite{std::vector<int>(*n, 0)};
}

Verdict iso_check(const Term& a, const Term& b) {
    const Word wa = normal_word(a), wb = normal_word(b);
    if (wa == wb) return Verdict::holds("normal-form", "normal forms coincide: " + word_term(wa).str());
    if (canonical(wa) && canonical(wb)) {
        if (wa.size() != wb.size())
            return Verdict::fails("normal-form", "normal forms have " + std::to_string(wa.size()) + " vs " +
                                                     std::to_string(wb.size()) + " letters");
        std::map<Term, int> count;
        for (const auto& x : wa) ++count[x];
        for (const auto& x : wb) --count[x];
        for (const auto& [letter, c] : count)
            if (c != 0) return Verdict::fails("normal-form", "letter " + letter.str() + " occurs a different number of times");
        for (std::size_t i = 0; i < wa.size(); ++i)
            if (!(wa[i] == wb[i]))
                return Verdict::fails("normal-form", "first difference at letter " + std::to_string(i) + ": " +
                                                         wa[i].str() + " vs " + wb[i].str());
    }
    if (wa.size() == 1 && wb.size() == 1 && wa[0].is<IntervalShuffle>() && wb[0].is<IntervalShuffle>())
        return Verdict::fails("interval-shuffle", "distinct intervals give convex-incomparable shuffles");
    return Verdict::unknown("outside-fragment", "normal forms differ but contain symbolic letters");
}

}  // namespace linord
