#pragma once

#include <stdexcept>
#include <vector>

#include "linord/normalize.hpp"
#include "linord/ordinal.hpp"
#include "linord/term.hpp"
#include "linord/verdict.hpp"

namespace linord {

class ConstructionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// (1 + zL + 1) M
Term phi_cong(const Term& t, const Term& m);

// L + 1
Term phi_succ(const Term& t);

// (alpha eta + eta + L0 + eta) L; alpha must not convexly embed into L0.
Term phi_fractal(const Term& t, const Term& t0, const Ordinal& alpha);

// Sum over alpha < gamma of (alpha eta + zL); gamma additively indecomposable, at most w^3.
Term phi_threshold(const Term& t, const Ordinal& gamma);
// Sum over z in Z of (h(z) eta + zL).
Term phi_fin_zeta(const Term& t);

// Summand at alpha of a threshold sum; alpha = 0 uses plain eta.
Term threshold_summand(const Term& phi, const Ordinal& alpha);
// Summand at z of a fin-zeta sum.
Term fin_zeta_summand(const Term& phi, std::int64_t z);
// The fixed bijection Z -> {1, 2, ...}.
std::uint64_t fin_zeta_label(std::int64_t z);

// Doubles the order (colour + 2, then a separator coloured 1) and turns colour k into eta^{k}.
Term phi_coloured(const ColouredFinite& s);

// Eventually constant sequence of positive rationals.
struct EventuallyConstant {
    std::vector<Rational> prefix;
    Rational tail;
    Rational at(std::size_t n) const { return n < prefix.size() ? prefix[n] : tail; }
};

Term phi_e1(const EventuallyConstant& x);
// Block n of the sum: eta_{-(n+1)} + eta_{x_n}, with eta_r the interval shuffle on (r, r+1).
Term e1_block(const EventuallyConstant& x, std::size_t n);
Verdict e1_decide(const EventuallyConstant& x, const EventuallyConstant& y);

// Injective labelling of the rationals by positive integers used by the interval shuffles.
std::uint64_t rational_label(const Rational& q);

Term gen_shuffle_family(const LabelSet& s);
Term gen_interval_shuffle(const Rational& lo, const Rational& hi);

}  // namespace linord
