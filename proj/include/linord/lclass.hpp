#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "linord/normalize.hpp"
#include "linord/ordinal.hpp"
#include "linord/term.hpp"
#include "linord/verdict.hpp"

namespace linord {

// A downward closed family of countable orders.
struct ClassId {
    enum class Kind { One, Fin, LeN, LtOrd, LeZpow, WO, Scat, Lin, LeTerm, Custom };
    Kind kind = Kind::One;
    std::uint64_t n = 0;          // LeN
    Ordinal gamma;                // LtOrd, LeZpow
    std::optional<Term> term;     // LeTerm
    std::string name;             // Custom

    static ClassId make(Kind k) {
        ClassId c;
        c.kind = k;
        return c;
    }
    static ClassId one() { return make(Kind::One); }
    static ClassId fin() { return make(Kind::Fin); }
    static ClassId le_n(std::uint64_t n) {
        ClassId c = make(Kind::LeN);
        c.n = n;
        return c;
    }
    static ClassId lt_ord(const Ordinal& g) {
        ClassId c = make(Kind::LtOrd);
        c.gamma = g;
        return c;
    }
    static ClassId le_zpow(const Ordinal& g) {
        ClassId c = make(Kind::LeZpow);
        c.gamma = g;
        return c;
    }
    static ClassId wo() { return make(Kind::WO); }
    static ClassId scat() { return make(Kind::Scat); }
    static ClassId lin() { return make(Kind::Lin); }
    static ClassId le_term(const Term& t) {
        ClassId c = make(Kind::LeTerm);
        c.term = t;
        return c;
    }
    // Orders into which neither z*w nor z*w* embeds.
    static ClassId zeta_omega_free() {
        ClassId c = make(Kind::Custom);
        c.name = "zeta-omega";
        return c;
    }

    std::string str() const;
};

class ClassError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// "one", "fin", "le:n:3", "lt:ord:w*2", "le:zpow:2", "wo", "scat", "lin", "le:term:<term>", "custom:zeta-omega".
ClassId parse_class(std::string_view text);

Verdict member(const ClassId& c, const Term& t);
Verdict member_word(const ClassId& c, const Word& w);

// Sizes k <= n with the k-element chain in c.
std::vector<std::uint64_t> finite_members(const ClassId& c, std::uint64_t n);

// Known inclusion between registry classes: True/False when settled, Unknown otherwise.
Tri class_subset(const ClassId& a, const ClassId& b);

Verdict ccs_check(const ClassId& c);
std::optional<Witness> ccs_witness_search(const ClassId& c, std::uint64_t budget);

// Re-checks a ccs violation from scratch: Holds iff the witness is valid for c.
Verdict verify_ccs_witness(const ClassId& c, const Witness& w);

}  // namespace linord
