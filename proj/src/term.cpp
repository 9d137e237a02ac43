#include "linord/term.hpp"

#include <algorithm>

#include "linord/normalize.hpp"

namespace linord {

std::string rational_str(const Rational& q) {
    if (q.denominator() == 1) return std::to_string(q.numerator());
    return std::to_string(q.numerator()) + "/" + std::to_string(q.denominator());
}

// ---- construction ----

Term Term::fin(std::uint64_t n) {
    if (n == 0) throw TermError("finite chain must have at least one element");
    return Term{std::make_shared<const Node>(Node{FiniteChain{n}})};
}
Term Term::omega() { return Term{std::make_shared<const Node>(Node{Omega{}})}; }
Term Term::omega_star() { return Term{std::make_shared<const Node>(Node{OmegaStar{}})}; }
Term Term::zeta() { return Term{std::make_shared<const Node>(Node{Zeta{}})}; }
Term Term::eta() { return shuffle(LabelSet::of({fin(1)})); }
Term Term::shuffle(LabelSet labels) {
    return Term{std::make_shared<const Node>(Node{Shuffle{std::move(labels)}})};
}
Term Term::ishuffle(const Rational& lo, const Rational& hi) {
    if (!(lo < hi)) throw TermError("interval shuffle needs lo < hi");
    return Term{std::make_shared<const Node>(Node{IntervalShuffle{lo, hi}})};
}
Term Term::sum(std::vector<Term> parts) {
    if (parts.empty()) throw TermError("empty sum");
    return Term{std::make_shared<const Node>(Node{Sum{std::move(parts)}})};
}
Term Term::product(const Term& left, const Term& right) {
    return Term{std::make_shared<const Node>(Node{Product{left, right}})};
}
Term Term::ord(const Ordinal& alpha) {
    if (alpha.is_zero()) throw TermError("the empty ordinal is not an order here");
    return Term{std::make_shared<const Node>(Node{OrdTerm{alpha}})};
}
Term Term::zpow(const Ordinal& gamma) { return Term{std::make_shared<const Node>(Node{ZPow{gamma}})}; }
Term Term::rev(const Term& inner) { return Term{std::make_shared<const Node>(Node{Rev{inner}})}; }
Term Term::indexed(Indexed ix) { return Term{std::make_shared<const Node>(Node{std::move(ix)})}; }

TermKind Term::kind() const noexcept { return static_cast<TermKind>(node_->v.index()); }

// ---- label sets ----

namespace {

// Minimal period, then shortest prefix.
Periodic canonical(Periodic p) {
    const auto n = p.period.size();
    for (std::size_t d = 1; d <= n; ++d) {
        if (n % d) continue;
        bool ok = true;
        for (std::size_t i = d; i < n && ok; ++i) ok = p.period[i] == p.period[i - d];
        if (ok) {
            p.period.resize(d);
            break;
        }
    }
    while (!p.prefix.empty() && p.prefix.back() == p.period.back()) {
        std::rotate(p.period.rbegin(), p.period.rbegin() + 1, p.period.rend());
        p.prefix.pop_back();
    }
    return p;
}

template <class Seq>
std::strong_ordering lex(const Seq& a, const Seq& b) {
    return std::lexicographical_compare_three_way(a.begin(), a.end(), b.begin(), b.end());
}

std::string bits(const std::vector<bool>& v) {
    std::string s;
    for (bool b : v) s += b ? '1' : '0';
    return s;
}

}  // namespace

LabelSet LabelSet::of(std::vector<Term> labels) {
    if (labels.empty()) throw TermError("label set must be nonempty");
    for (auto& l : labels) {
        l = normalize(l);
        if (scattered(l) == Tri::False) throw TermError("shuffle label is not scattered: " + l.str());
    }
    std::sort(labels.begin(), labels.end());
    labels.erase(std::unique(labels.begin(), labels.end()), labels.end());
    return LabelSet{std::move(labels)};
}

LabelSet LabelSet::periodic(std::vector<bool> prefix, std::vector<bool> period) {
    if (period.empty()) throw TermError("periodic label set needs a nonempty period");
    if (std::none_of(period.begin(), period.end(), [](bool b) { return b; })) {
        std::vector<Term> labels;
        for (std::size_t i = 0; i < prefix.size(); ++i)
            if (prefix[i]) labels.push_back(Term::fin(i + 1));
        return of(std::move(labels));
    }
    return LabelSet{canonical(Periodic{std::move(prefix), std::move(period)})};
}

bool LabelSet::contains_fin(std::uint64_t n) const {
    if (n == 0) return false;
    if (!is_periodic()) {
        const auto& ls = labels();
        return std::find(ls.begin(), ls.end(), Term::fin(n)) != ls.end();
    }
    const auto& p = pattern();
    const std::uint64_t i = n - 1;
    if (i < p.prefix.size()) return p.prefix[i];
    return p.period[(i - p.prefix.size()) % p.period.size()];
}

std::string LabelSet::str() const {
    if (is_periodic()) return "#" + bits(pattern().prefix) + "/" + bits(pattern().period);
    std::string s;
    for (const auto& l : labels()) {
        if (!s.empty()) s += ",";
        s += l.str();
    }
    return s;
}

std::strong_ordering operator<=>(const LabelSet& a, const LabelSet& b) {
    if (auto c = a.v_.index() <=> b.v_.index(); c != 0) return c;
    if (!a.is_periodic()) return lex(a.labels(), b.labels());
    if (auto c = lex(a.pattern().prefix, b.pattern().prefix); c != 0) return c;
    return lex(a.pattern().period, b.pattern().period);
}

bool operator==(const LabelSet& a, const LabelSet& b) { return (a <=> b) == 0; }

// ---- ordering ----

namespace {

std::strong_ordering cmp_rat(const Rational& a, const Rational& b) {
    if (a < b) return std::strong_ordering::less;
    if (b < a) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

struct PayloadCompare {
    template <class A, class B>
    std::strong_ordering operator()(const A&, const B&) const {
        return std::strong_ordering::equal;  // different kinds are handled before dispatch
    }
    std::strong_ordering operator()(const FiniteChain& a, const FiniteChain& b) const { return a.n <=> b.n; }
    std::strong_ordering operator()(const Shuffle& a, const Shuffle& b) const { return a.labels <=> b.labels; }
    std::strong_ordering operator()(const IntervalShuffle& a, const IntervalShuffle& b) const {
        if (auto c = cmp_rat(a.lo, b.lo); c != 0) return c;
        return cmp_rat(a.hi, b.hi);
    }
    std::strong_ordering operator()(const Sum& a, const Sum& b) const { return lex(a.parts, b.parts); }
    std::strong_ordering operator()(const Product& a, const Product& b) const {
        if (auto c = a.left <=> b.left; c != 0) return c;
        return a.right <=> b.right;
    }
    std::strong_ordering operator()(const OrdTerm& a, const OrdTerm& b) const { return a.alpha <=> b.alpha; }
    std::strong_ordering operator()(const ZPow& a, const ZPow& b) const { return a.gamma <=> b.gamma; }
    std::strong_ordering operator()(const Rev& a, const Rev& b) const { return a.inner <=> b.inner; }
    std::strong_ordering operator()(const Indexed& a, const Indexed& b) const {
        if (auto c = a.kind <=> b.kind; c != 0) return c;
        if (auto c = a.arg.has_value() <=> b.arg.has_value(); c != 0) return c;
        if (a.arg)
            if (auto c = *a.arg <=> *b.arg; c != 0) return c;
        if (auto c = a.gamma <=> b.gamma; c != 0) return c;
        if (auto c = a.prefix.size() <=> b.prefix.size(); c != 0) return c;
        for (std::size_t i = 0; i < a.prefix.size(); ++i)
            if (auto c = cmp_rat(a.prefix[i], b.prefix[i]); c != 0) return c;
        return cmp_rat(a.tail, b.tail);
    }
};

}  // namespace

std::strong_ordering operator<=>(const Term& a, const Term& b) {
    if (a.node_ == b.node_) return std::strong_ordering::equal;
    if (auto c = a.node_->v.index() <=> b.node_->v.index(); c != 0) return c;
    return std::visit(PayloadCompare{}, a.node_->v, b.node_->v);
}

bool operator==(const Term& a, const Term& b) { return (a <=> b) == 0; }

// ---- printing ----

namespace {

enum class Ctx { Top, SumPart, ProdLeft, ProdRight };

std::string print(const Term& t, Ctx ctx);

std::string paren_if(bool p, const std::string& s) { return p ? "(" + s + ")" : s; }

std::string print_ord(const Ordinal& a, Ctx ctx) {
    const bool small = a < Ordinal::omega_pow(Ordinal{2});
    return paren_if(small || ctx == Ctx::ProdLeft || ctx == Ctx::ProdRight, a.str());
}

std::string print(const Term& t, Ctx ctx) {
    const Node& n = t.node();
    return std::visit(
        [&](const auto& x) -> std::string {
            using T = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<T, FiniteChain>) {
                return std::to_string(x.n);
            } else if constexpr (std::is_same_v<T, Omega>) {
                return "w";
            } else if constexpr (std::is_same_v<T, OmegaStar>) {
                return "w*";
            } else if constexpr (std::is_same_v<T, Zeta>) {
                return "z";
            } else if constexpr (std::is_same_v<T, Shuffle>) {
                if (!x.labels.is_periodic() && x.labels.labels().size() == 1 &&
                    x.labels.labels()[0] == Term::fin(1))
                    return "q";
                return "shuffle(" + x.labels.str() + ")";
            } else if constexpr (std::is_same_v<T, IntervalShuffle>) {
                return "ishuffle(" + rational_str(x.lo) + "," + rational_str(x.hi) + ")";
            } else if constexpr (std::is_same_v<T, Sum>) {
                std::string s;
                for (const auto& p : x.parts) {
                    if (!s.empty()) s += "+";
                    s += print(p, Ctx::SumPart);
                }
                return paren_if(ctx != Ctx::Top, s);
            } else if constexpr (std::is_same_v<T, Product>) {
                const std::string s = print(x.left, Ctx::ProdLeft) + "*" + print(x.right, Ctx::ProdRight);
                return paren_if(ctx == Ctx::ProdRight, s);
            } else if constexpr (std::is_same_v<T, OrdTerm>) {
                return print_ord(x.alpha, ctx);
            } else if constexpr (std::is_same_v<T, ZPow>) {
                return "zpow(" + x.gamma.str() + ")";
            } else if constexpr (std::is_same_v<T, Rev>) {
                return "rev(" + print(x.inner, Ctx::Top) + ")";
            } else {
                switch (x.kind) {
                    case IndexedKind::Threshold:
                        return "threshold(" + print(*x.arg, Ctx::Top) + ";" + x.gamma.str() + ")";
                    case IndexedKind::FinZeta:
                        return "finzeta(" + print(*x.arg, Ctx::Top) + ")";
                    case IndexedKind::E1: {
                        std::string s;
                        for (const auto& q : x.prefix) s += (s.empty() ? "" : ",") + rational_str(q);
                        return "e1(" + s + ";" + rational_str(x.tail) + ")";
                    }
                }
                return "?";
            }
        },
        n.v);
}

}  // namespace

std::string Term::str() const { return print(*this, Ctx::Top); }

}  // namespace linord
