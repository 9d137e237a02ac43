#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace linord {

class OrdinalError : public std::runtime_error {
public:
    enum class Kind { Underflow, TooSmall, Overflow, Position, Syntax };
    OrdinalError(Kind k, const std::string& what) : std::runtime_error(what), kind_(k) {}
    Kind kind() const noexcept { return kind_; }

private:
    Kind kind_;
};

// Hereditary Cantor normal form below epsilon_0. Empty CNF is 0.
class Ordinal {
public:
    struct Monomial;

    Ordinal() = default;
    Ordinal(std::uint64_t n);  // NOLINT: finite ordinals convert implicitly

    static Ordinal omega();
    static Ordinal omega_pow(const Ordinal& e, std::uint64_t coeff = 1);
    static Ordinal parse(std::string_view text);

    const std::vector<Monomial>& cnf() const noexcept { return cnf_; }

    bool is_zero() const noexcept { return cnf_.empty(); }
    bool is_finite() const noexcept;
    bool is_limit() const noexcept;  // nonzero with zero finite part
    bool is_successor() const noexcept { return finite_part() > 0; }
    std::uint64_t finite_part() const noexcept;
    std::optional<std::uint64_t> as_finite() const noexcept;

    // Leading exponent; 0 for the ordinal 0.
    Ordinal lead_exp() const;
    // Infinite part with the trailing finite coefficient removed.
    Ordinal limit_part() const;
    // Drops the last monomial and returns it as an ordinal (omega^e * c).
    Ordinal last_monomial() const;

    std::string str() const;

    friend std::strong_ordering operator<=>(const Ordinal& a, const Ordinal& b);
    friend bool operator==(const Ordinal& a, const Ordinal& b);

private:
    explicit Ordinal(std::vector<Monomial> cnf);
    std::vector<Monomial> cnf_;

    friend Ordinal ord_add(const Ordinal&, const Ordinal&);
    friend Ordinal ord_mul(const Ordinal&, const Ordinal&);
    friend Ordinal ord_left_sub(const Ordinal&, const Ordinal&);
    friend Ordinal hessenberg(const Ordinal&, const Ordinal&);
};

struct Ordinal::Monomial {
    Ordinal exp;
    std::uint64_t coeff = 1;
    friend bool operator==(const Monomial&, const Monomial&) = default;
};

Ordinal ord_add(const Ordinal& a, const Ordinal& b);
Ordinal ord_mul(const Ordinal& a, const Ordinal& b);
// The unique c with a + c = b; throws Underflow when a > b.
Ordinal ord_left_sub(const Ordinal& a, const Ordinal& b);
Ordinal hessenberg(const Ordinal& a, const Ordinal& b);

inline Ordinal operator+(const Ordinal& a, const Ordinal& b) { return ord_add(a, b); }
inline Ordinal operator*(const Ordinal& a, const Ordinal& b) { return ord_mul(a, b); }

struct Indecomposability {
    bool additive = false;
    bool multiplicative = false;
    friend bool operator==(const Indecomposability&, const Indecomposability&) = default;
};

Indecomposability indecomposability(const Ordinal& g);

// Largest omega^(omega^xi) <= g, for g >= omega.
Ordinal threshold(const Ordinal& g);

// Order type of sum_{k < alpha} (1 + mods[k]), mods zero off its (finite) support.
Ordinal sum_with_finite_support(const Ordinal& alpha, const std::map<Ordinal, Ordinal>& mods);

// Least g with alpha <= omega^g.
Ordinal ordinal_rank(const Ordinal& alpha);

}  // namespace linord
