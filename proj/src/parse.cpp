#include "linord/parse.hpp"

#include <cctype>
#include <limits>

namespace linord {

namespace {

constexpr std::size_t kMaxOrdinalWidth = 256;

bool is_digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }
bool is_alpha(char c) { return std::islower(static_cast<unsigned char>(c)) != 0; }

class Parser {
public:
    explicit Parser(std::string_view s) : s_(s) {}

    Term parse_all() {
        skip();
        if (p_ == s_.size()) throw ParseError(1, "empty input");
        Term t = sum();
        skip();
        if (p_ != s_.size()) fail("unexpected '" + std::string(1, s_[p_]) + "'");
        return t;
    }

    Rational rational_all() {
        Rational q = rational();
        skip();
        if (p_ != s_.size()) fail("trailing characters after rational");
        return q;
    }

private:
    std::string_view s_;
    std::size_t p_ = 0;

    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(p_ + 1, msg); }

    void skip() {
        while (p_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[p_]))) ++p_;
    }
    char peek() {
        skip();
        return p_ < s_.size() ? s_[p_] : '\0';
    }
    bool eat(char c) {
        if (peek() == c) {
            ++p_;
            return true;
        }
        return false;
    }
    void expect(char c) {
        if (!eat(c)) fail(std::string("expected '") + c + "'");
    }
    bool atom_start(char c) const { return is_digit(c) || is_alpha(c) || c == '('; }

    std::uint64_t nat() {
        skip();
        if (p_ >= s_.size() || !is_digit(s_[p_])) fail("expected a number");
        std::uint64_t v = 0;
        while (p_ < s_.size() && is_digit(s_[p_])) {
            const auto d = static_cast<std::uint64_t>(s_[p_] - '0');
            if (v > (std::numeric_limits<std::uint64_t>::max() - d) / 10) fail("number too large");
            v = v * 10 + d;
            ++p_;
        }
        return v;
    }

    std::string ident() {
        skip();
        const auto start = p_;
        while (p_ < s_.size() && is_alpha(s_[p_])) ++p_;
        return std::string(s_.substr(start, p_ - start));
    }

    Term sum() {
        std::vector<Term> parts{prod()};
        while (eat('+')) parts.push_back(prod());
        return parts.size() == 1 ? parts[0] : Term::sum(std::move(parts));
    }

    Term prod() {
        Term t = atom();
        while (eat('*')) t = Term::product(t, atom());
        return t;
    }

    Term atom() {
        const char c = peek();
        if (c == '\0') fail("unexpected end of input");
        if (c == '(') {
            ++p_;
            Term t = sum();
            expect(')');
            return t;
        }
        if (is_digit(c)) {
            const auto col = p_;
            const auto n = nat();
            if (n == 0) throw ParseError(col + 1, "finite chains are nonempty");
            return Term::fin(n);
        }
        if (!is_alpha(c)) fail("expected a term");
        const auto start = p_;
        const std::string id = ident();
        if (id == "w") return omega_atom(start);
        if (id == "z") return Term::zeta();
        if (id == "q") return Term::eta();
        if (id == "shuffle") return shuffle_atom();
        if (id == "ishuffle") {
            expect('(');
            const Rational lo = rational();
            expect(',');
            const Rational hi = rational();
            expect(')');
            if (!(lo < hi)) throw ParseError(start + 1, "ishuffle needs lo < hi");
            return Term::ishuffle(lo, hi);
        }
        if (id == "zpow") {
            expect('(');
            const Ordinal g = ordinal_expr();
            expect(')');
            return Term::zpow(g);
        }
        if (id == "rev") {
            expect('(');
            Term t = sum();
            expect(')');
            return Term::rev(t);
        }
        throw ParseError(start + 1, "unknown identifier '" + id + "'");
    }

    // After 'w': ordinal CNF, omega, or omega-star.
    Term omega_atom(std::size_t start) {
        const char c = peek();
        if (c == '^') {
            p_ = start;
            const Ordinal a = ordinal_cnf();
            if (a.str().size() > kMaxOrdinalWidth) throw ParseError(start + 1, "ordinal too wide");
            return Term::ord(a);
        }
        if (c == '*') {
            const auto save = p_;
            ++p_;
            const char next = peek();
            p_ = save;
            if (atom_start(next)) return Term::omega();
            ++p_;
            return Term::omega_star();
        }
        return Term::omega();
    }

    Term shuffle_atom() {
        expect('(');
        if (eat('#')) {
            std::vector<bool> prefix, period;
            while (peek() == '0' || peek() == '1') prefix.push_back(s_[p_++] == '1');
            expect('/');
            while (peek() == '0' || peek() == '1') period.push_back(s_[p_++] == '1');
            if (period.empty()) fail("periodic label set needs a nonempty period");
            expect(')');
            try {
                return Term::shuffle(LabelSet::periodic(std::move(prefix), std::move(period)));
            } catch (const TermError& e) {
                fail(e.what());
            }
        }
        std::vector<Term> labels{sum()};
        while (eat(',')) labels.push_back(sum());
        const auto end = p_;
        expect(')');
        try {
            return Term::shuffle(LabelSet::of(std::move(labels)));
        } catch (const TermError& e) {
            throw ParseError(end + 1, e.what());
        }
    }

    Rational rational() {
        skip();
        const bool neg = eat('-');
        const auto num = nat();
        std::uint64_t den = 1;
        if (eat('/')) den = nat();
        if (den == 0) fail("zero denominator");
        if (num > static_cast<std::uint64_t>(std::numeric_limits<std::int64_t>::max()) ||
            den > static_cast<std::uint64_t>(std::numeric_limits<std::int64_t>::max()))
            fail("rational out of range");
        const auto n = static_cast<std::int64_t>(num);
        return Rational(neg ? -n : n, static_cast<std::int64_t>(den));
    }

    // Full ordinal expression inside zpow(...): any sum of monomials.
    Ordinal ordinal_expr() {
        Ordinal r = monomial();
        while (eat('+')) r = r + monomial();
        return r;
    }

    // Greedy CNF run inside a term: stops before a '+' whose monomial is not smaller.
    Ordinal ordinal_cnf() {
        Ordinal r = monomial();
        Ordinal last_exp = r.lead_exp();
        while (true) {
            const auto save = p_;
            if (!eat('+')) break;
            const char c = peek();
            if (!(is_digit(c) || c == 'w')) {
                p_ = save;
                break;
            }
            const auto mstart = p_;
            Ordinal m;
            try {
                m = monomial();
            } catch (const ParseError&) {
                p_ = save;
                break;
            }
            const char after = peek();
            const bool word_follows = p_ < s_.size() && is_alpha(s_[p_]);
            if (after == '*' || after == '^' || word_follows || !(m.lead_exp() < last_exp) ||
                (c == 'w' && mstart + 1 < s_.size() && is_alpha(s_[mstart + 1]))) {
                p_ = save;
                break;
            }
            last_exp = m.lead_exp();
            r = r + m;
        }
        return r;
    }

    Ordinal monomial() {
        skip();
        if (is_digit(peek())) return Ordinal{nat()};
        if (!eat('w')) fail("expected an ordinal");
        Ordinal e{1};
        if (eat('^')) e = ordinal_atom();
        std::uint64_t coeff = 1;
        const auto save = p_;
        if (eat('*')) {
            if (is_digit(peek())) {
                coeff = nat();
                if (coeff == 0) fail("zero coefficient");
            } else {
                p_ = save;
            }
        }
        return Ordinal::omega_pow(e, coeff);
    }

    Ordinal ordinal_atom() {
        if (eat('(')) {
            Ordinal r = ordinal_expr();
            expect(')');
            return r;
        }
        if (eat('w')) {
            if (eat('^')) return Ordinal::omega_pow(ordinal_atom());
            return Ordinal::omega();
        }
        return Ordinal{nat()};
    }
};

}  // namespace

Term parse_term(std::string_view text) { return Parser{text}.parse_all(); }

Rational parse_rational(std::string_view text) { return Parser{text}.rational_all(); }

}  // namespace linord
