#include "linord/constructions.hpp"

#include "linord/relation.hpp"

namespace linord {

namespace {

Term eta_of(const Term& label) { return Term::shuffle(LabelSet::of({label})); }

Term zeta_copies(const Term& t) { return Term::product(Term::zeta(), t); }

const Indexed& indexed_of(const Term& phi, IndexedKind kind, const char* what) {
    if (!phi.is<Indexed>() || phi.as<Indexed>().kind != kind) throw ConstructionError(std::string("not a ") + what + " sum");
    return phi.as<Indexed>();
}

}  // namespace

Term phi_cong(const Term& t, const Term& m) {
    return Term::product(Term::sum({Term::fin(1), zeta_copies(t), Term::fin(1)}), m);
}

Term phi_succ(const Term& t) { return Term::sum({t, Term::fin(1)}); }

Term phi_fractal(const Term& t, const Term& t0, const Ordinal& alpha) {
    if (alpha.is_zero()) throw ConstructionError("alpha must be positive");
    const Verdict v = convex_embeds(Term::ord(alpha), t0);
    if (!v.is_fails())
        throw ConstructionError("alpha = " + alpha.str() + " must not convexly embed into " + t0.str() + " (" +
                                status_name(v.status) + ")");
    return Term::product(Term::sum({eta_of(Term::ord(alpha)), Term::eta(), t0, Term::eta()}), t);
}

Term phi_threshold(const Term& t, const Ordinal& gamma) {
    const bool indecomposable = !gamma.is_zero() && gamma.cnf().size() == 1 && gamma.cnf()[0].coeff == 1;
    if (!indecomposable || gamma > Ordinal::omega_pow(Ordinal{3}))
        throw ConstructionError("gamma must be a power of w between 1 and w^3, got " + gamma.str());
    return Term::indexed(Indexed{IndexedKind::Threshold, t, gamma, {}, {}});
}

Term phi_fin_zeta(const Term& t) { return Term::indexed(Indexed{IndexedKind::FinZeta, t, {}, {}, {}}); }

Term threshold_summand(const Term& phi, const Ordinal& alpha) {
    const Indexed& ix = indexed_of(phi, IndexedKind::Threshold, "threshold");
    if (!(alpha < ix.gamma)) throw ConstructionError("index " + alpha.str() + " is not below " + ix.gamma.str());
    const Term head = alpha.is_zero() ? Term::eta() : eta_of(Term::ord(alpha));
    return Term::sum({head, zeta_copies(*ix.arg)});
}

std::uint64_t fin_zeta_label(std::int64_t z) {
    return z >= 0 ? 2 * static_cast<std::uint64_t>(z) + 1 : 2 * static_cast<std::uint64_t>(-z);
}

Term fin_zeta_summand(const Term& phi, std::int64_t z) {
    const Indexed& ix = indexed_of(phi, IndexedKind::FinZeta, "fin-zeta");
    return Term::sum({eta_of(Term::fin(fin_zeta_label(z))), zeta_copies(*ix.arg)});
}

Term phi_coloured(const ColouredFinite& s) {
    if (s.colours.empty()) throw ConstructionError("empty coloured order");
    std::vector<Term> parts;
    for (int c : s.colours) {
        if (c < 0) throw ConstructionError("colours must be non-negative");
        parts.push_back(eta_of(Term::fin(static_cast<std::uint64_t>(c) + 2)));
        parts.push_back(Term::eta());
    }
    return Term::sum(std::move(parts));
}

std::uint64_t rational_label(const Rational& q) {
    // zigzag the numerator, then Cantor-pair with the denominator
    const std::int64_t p = q.numerator();
    const auto a = static_cast<std::uint64_t>(p >= 0 ? 2 * p : -2 * p - 1);
    const auto b = static_cast<std::uint64_t>(q.denominator());
    return (a + b) * (a + b + 1) / 2 + b + 1;
}

namespace {

void check_positive(const EventuallyConstant& x) {
    for (const auto& q : x.prefix)
        if (q <= 0) throw ConstructionError("entries must be positive, got " + rational_str(q));
    if (x.tail <= 0) throw ConstructionError("entries must be positive, got " + rational_str(x.tail));
}

Term eta_at(const Rational& r) { return Term::ishuffle(r, r + 1); }

}  // namespace

Term phi_e1(const EventuallyConstant& x) {
    check_positive(x);
    return Term::indexed(Indexed{IndexedKind::E1, std::nullopt, {}, x.prefix, x.tail});
}

Term e1_block(const EventuallyConstant& x, std::size_t n) {
    check_positive(x);
    return Term::sum({eta_at(Rational(-static_cast<std::int64_t>(n) - 1)), eta_at(x.at(n))});
}

Verdict e1_decide(const EventuallyConstant& x, const EventuallyConstant& y) {
    check_positive(x);
    check_positive(y);
    const std::size_t horizon = std::max(x.prefix.size(), y.prefix.size());
    if (x.tail != y.tail) {
        // past the prefixes the blocks eta_{x_n} and eta_{y_n} sit on different intervals
        const Rational a = x.tail, b = y.tail;
        const Rational lo = a < b ? a : std::max(a, b + 1);
        const Rational hi = a < b ? std::min(a + 1, b) : a + 1;
        return Verdict::fails("e1-interval", "for n >= " + std::to_string(horizon) + " the block on (" + rational_str(lo) +
                                                 "," + rational_str(hi) + ") has no convex copy in the other side");
    }
    std::size_t n0 = horizon;
    while (n0 > 0 && x.at(n0 - 1) == y.at(n0 - 1)) --n0;
    const std::uint64_t m = 2 * n0 + 2;
    Witness w{Term::fin(m), {}, {}, {}, {}};
    w.pieces.push_back({Piece::Kind::Block, "eta^f w*", "first " + std::to_string(2 * n0) + " copies skipped", "", ""});
    for (std::size_t i = 0; i < n0; ++i) {
        w.pieces.push_back({Piece::Kind::Block, "eta_" + rational_str(Rational(-static_cast<std::int64_t>(i) - 1)),
                            "copy " + std::to_string(2 * n0 - (2 * i + 1)) + " of eta^f w*", "", ""});
        w.pieces.push_back({Piece::Kind::Block, "eta_" + rational_str(x.at(i)),
                            "copy " + std::to_string(2 * n0 - (2 * i + 2)) + " of eta^f w*", "", ""});
    }
    w.pieces.push_back({Piece::Kind::Block, "blocks n >= " + std::to_string(n0), "identity on the common tail", "", ""});
    return Verdict::holds("e1-tail", "sequences agree from index " + std::to_string(n0) + ", " + std::to_string(m) +
                                         " pieces",
                          std::move(w));
}

Term gen_shuffle_family(const LabelSet& s) {
    if (!s.is_infinite()) throw ConstructionError("label set must be infinite");
    return Term::shuffle(s);
}

Term gen_interval_shuffle(const Rational& lo, const Rational& hi) {
    if (!(lo < hi)) throw ConstructionError("need lo < hi, got " + rational_str(lo) + " >= " + rational_str(hi));
    return Term::ishuffle(lo, hi);
}

}  // namespace linord
