#include "linord/ordinal.hpp"

#include <cctype>

namespace linord {

namespace {

std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
    std::uint64_t r;
    if (__builtin_add_overflow(a, b, &r))
        throw OrdinalError(OrdinalError::Kind::Overflow, "ordinal coefficient overflow");
    return r;
}

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
    std::uint64_t r;
    if (__builtin_mul_overflow(a, b, &r))
        throw OrdinalError(OrdinalError::Kind::Overflow, "ordinal coefficient overflow");
    return r;
}

}  // namespace

Ordinal::Ordinal(std::uint64_t n) {
    if (n > 0) cnf_.push_back(Monomial{Ordinal{}, n});
}

Ordinal::Ordinal(std::vector<Monomial> cnf) : cnf_(std::move(cnf)) {}

Ordinal Ordinal::omega() { return omega_pow(Ordinal{1}); }

Ordinal Ordinal::omega_pow(const Ordinal& e, std::uint64_t coeff) {
    if (coeff == 0) return {};
    return Ordinal{std::vector<Monomial>{Monomial{e, coeff}}};
}

bool Ordinal::is_finite() const noexcept {
    return cnf_.empty() || (cnf_.size() == 1 && cnf_[0].exp.is_zero());
}

bool Ordinal::is_limit() const noexcept { return !cnf_.empty() && finite_part() == 0; }

std::uint64_t Ordinal::finite_part() const noexcept {
    if (cnf_.empty() || !cnf_.back().exp.is_zero()) return 0;
    return cnf_.back().coeff;
}

std::optional<std::uint64_t> Ordinal::as_finite() const noexcept {
    if (!is_finite()) return std::nullopt;
    return finite_part();
}

Ordinal Ordinal::lead_exp() const { return cnf_.empty() ? Ordinal{} : cnf_.front().exp; }

Ordinal Ordinal::limit_part() const {
    auto v = cnf_;
    if (!v.empty() && v.back().exp.is_zero()) v.pop_back();
    return Ordinal{std::move(v)};
}

Ordinal Ordinal::last_monomial() const {
    if (cnf_.empty()) return {};
    return Ordinal{std::vector<Monomial>{cnf_.back()}};
}

std::strong_ordering operator<=>(const Ordinal& a, const Ordinal& b) {
    const auto n = std::min(a.cnf_.size(), b.cnf_.size());
    for (std::size_t i = 0; i < n; ++i) {
        if (auto c = a.cnf_[i].exp <=> b.cnf_[i].exp; c != 0) return c;
        if (auto c = a.cnf_[i].coeff <=> b.cnf_[i].coeff; c != 0) return c;
    }
    return a.cnf_.size() <=> b.cnf_.size();
}

bool operator==(const Ordinal& a, const Ordinal& b) { return a.cnf_ == b.cnf_; }

Ordinal ord_add(const Ordinal& a, const Ordinal& b) {
    if (b.is_zero()) return a;
    const auto& lead = b.cnf_.front();
    std::vector<Ordinal::Monomial> out;
    std::uint64_t carry = 0;
    for (const auto& m : a.cnf_) {
        if (m.exp > lead.exp) out.push_back(m);
        else if (m.exp == lead.exp) carry = m.coeff;
        else break;
    }
    out.push_back({lead.exp, checked_add(lead.coeff, carry)});
    out.insert(out.end(), b.cnf_.begin() + 1, b.cnf_.end());
    return Ordinal{std::move(out)};
}

Ordinal ord_mul(const Ordinal& a, const Ordinal& b) {
    if (a.is_zero() || b.is_zero()) return {};
    Ordinal result;
    const auto& a_lead = a.cnf_.front();
    for (const auto& m : b.cnf_) {
        if (m.exp.is_zero()) {
            auto v = a.cnf_;
            v.front().coeff = checked_mul(a_lead.coeff, m.coeff);
            result = ord_add(result, Ordinal{std::move(v)});
        } else {
            result = ord_add(result, Ordinal::omega_pow(ord_add(a_lead.exp, m.exp), m.coeff));
        }
    }
    return result;
}

Ordinal ord_left_sub(const Ordinal& a, const Ordinal& b) {
    const auto underflow = [&] {
        return OrdinalError(OrdinalError::Kind::Underflow,
                            "left subtraction underflow: " + a.str() + " > " + b.str());
    };
    std::size_t i = 0;
    while (i < a.cnf_.size() && i < b.cnf_.size() && a.cnf_[i] == b.cnf_[i]) ++i;
    if (i == a.cnf_.size())
        return Ordinal{std::vector<Ordinal::Monomial>(b.cnf_.begin() + i, b.cnf_.end())};
    if (i == b.cnf_.size()) throw underflow();
    const auto& am = a.cnf_[i];
    const auto& bm = b.cnf_[i];
    std::vector<Ordinal::Monomial> out;
    if (am.exp == bm.exp) {
        if (am.coeff > bm.coeff) throw underflow();
        out.push_back({bm.exp, bm.coeff - am.coeff});
    } else if (am.exp < bm.exp) {
        out.push_back(bm);
    } else {
        throw underflow();
    }
    out.insert(out.end(), b.cnf_.begin() + i + 1, b.cnf_.end());
    return Ordinal{std::move(out)};
}

Ordinal hessenberg(const Ordinal& a, const Ordinal& b) {
    std::vector<Ordinal::Monomial> out;
    std::size_t i = 0, j = 0;
    while (i < a.cnf_.size() || j < b.cnf_.size()) {
        if (j == b.cnf_.size() || (i < a.cnf_.size() && a.cnf_[i].exp > b.cnf_[j].exp)) {
            out.push_back(a.cnf_[i++]);
        } else if (i == a.cnf_.size() || b.cnf_[j].exp > a.cnf_[i].exp) {
            out.push_back(b.cnf_[j++]);
        } else {
            out.push_back({a.cnf_[i].exp, checked_add(a.cnf_[i].coeff, b.cnf_[j].coeff)});
            ++i;
            ++j;
        }
    }
    return Ordinal{std::move(out)};
}

Indecomposability indecomposability(const Ordinal& g) {
    Indecomposability r;
    if (g.is_zero()) return r;
    const auto& cnf = g.cnf();
    r.additive = cnf.size() == 1 && cnf[0].coeff == 1;
    if (g == Ordinal{2}) {
        r.multiplicative = true;
    } else if (r.additive) {
        const auto& e = cnf[0].exp;
        r.multiplicative = e.cnf().size() == 1 && e.cnf()[0].coeff == 1;
    }
    return r;
}

Ordinal threshold(const Ordinal& g) {
    if (g.is_finite())
        throw OrdinalError(OrdinalError::Kind::TooSmall, "threshold needs an infinite ordinal");
    const Ordinal e = g.lead_exp();
    return Ordinal::omega_pow(Ordinal::omega_pow(e.lead_exp()));
}

Ordinal sum_with_finite_support(const Ordinal& alpha, const std::map<Ordinal, Ordinal>& mods) {
    Ordinal total;
    Ordinal cursor;  // first position not yet accounted for
    for (const auto& [pos, extra] : mods) {
        if (pos >= alpha)
            throw OrdinalError(OrdinalError::Kind::Position,
                               "support position " + pos.str() + " not below " + alpha.str());
        total = total + ord_left_sub(cursor, pos) + Ordinal{1} + extra;
        cursor = pos + Ordinal{1};
    }
    return total + ord_left_sub(cursor, alpha);
}

Ordinal ordinal_rank(const Ordinal& alpha) {
    if (alpha <= Ordinal{1}) return {};
    const auto& cnf = alpha.cnf();
    const Ordinal e = cnf.front().exp;
    if (cnf.size() == 1 && cnf[0].coeff == 1) return e;
    return e + Ordinal{1};
}

// ---- printing and parsing ----

namespace {

bool is_atomic_exponent(const Ordinal& e) {
    return e.is_finite() || (e.cnf().size() == 1 && e.cnf()[0].coeff == 1);
}

std::string print_exp(const Ordinal& e) {
    if (is_atomic_exponent(e)) return e.str();
    return "(" + e.str() + ")";
}

class OrdinalParser {
public:
    explicit OrdinalParser(std::string_view s) : s_(s) {}

    Ordinal parse_all() {
        Ordinal r = parse_sum();
        skip();
        if (p_ != s_.size()) fail("unexpected character");
        return r;
    }

private:
    std::string_view s_;
    std::size_t p_ = 0;

    [[noreturn]] void fail(const std::string& msg) const {
        throw OrdinalError(OrdinalError::Kind::Syntax,
                           "ordinal syntax error at column " + std::to_string(p_ + 1) + ": " + msg);
    }
    void skip() {
        while (p_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[p_]))) ++p_;
    }
    bool eat(char c) {
        skip();
        if (p_ < s_.size() && s_[p_] == c) {
            ++p_;
            return true;
        }
        return false;
    }
    std::uint64_t nat() {
        skip();
        if (p_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[p_]))) fail("expected number");
        std::uint64_t v = 0;
        while (p_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[p_])))
            v = checked_add(checked_mul(v, 10), static_cast<std::uint64_t>(s_[p_++] - '0'));
        return v;
    }
    Ordinal parse_sum() {
        Ordinal r = parse_mono();
        while (eat('+')) r = r + parse_mono();
        return r;
    }
    Ordinal parse_atom() {
        skip();
        if (eat('(')) {
            Ordinal r = parse_sum();
            if (!eat(')')) fail("expected ')'");
            return r;
        }
        if (eat('w')) {
            if (eat('^')) return Ordinal::omega_pow(parse_atom());
            return Ordinal::omega();
        }
        return Ordinal{nat()};
    }
    Ordinal parse_mono() {
        skip();
        if (p_ < s_.size() && s_[p_] == 'w') {
            ++p_;
            Ordinal e{1};
            if (eat('^')) e = parse_atom();
            std::uint64_t c = 1;
            if (eat('*')) c = nat();
            return Ordinal::omega_pow(e, c);
        }
        if (eat('(')) {
            Ordinal r = parse_sum();
            if (!eat(')')) fail("expected ')'");
            return r;
        }
        return Ordinal{nat()};
    }
};

}  // namespace

std::string Ordinal::str() const {
    if (cnf_.empty()) return "0";
    std::string out;
    for (const auto& m : cnf_) {
        if (!out.empty()) out += "+";
        if (m.exp.is_zero()) {
            out += std::to_string(m.coeff);
            continue;
        }
        out += "w";
        if (m.exp != Ordinal{1}) out += "^" + print_exp(m.exp);
        if (m.coeff != 1) out += "*" + std::to_string(m.coeff);
    }
    return out;
}

Ordinal Ordinal::parse(std::string_view text) { return OrdinalParser{text}.parse_all(); }

}  // namespace linord
