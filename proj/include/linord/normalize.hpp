#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "linord/term.hpp"
#include "linord/verdict.hpp"

namespace linord {

// Block word: the letters of a normal form, left to right.
using Word = std::vector<Term>;

// Letter classes of a normal form. Ord/OrdStar carry limit ordinals >= w^2;
// ZetaTimes is z*W with W an infinite normal word; Residue is anything left symbolic.
enum class LetterKind { Fin, Omega, OmegaStar, Zeta, Shuffle, IShuffle, Ord, OrdStar, ZetaTimes, Residue };

inline constexpr std::uint64_t kZPowNormalizeBound = 6;

struct ColouredFinite {
    std::vector<int> colours;
    std::size_t size() const noexcept { return colours.size(); }
    friend bool operator==(const ColouredFinite&, const ColouredFinite&) = default;
};

class InfiniteTerm : public TermError {
public:
    using TermError::TermError;
};

LetterKind letter_kind(const Term& letter);

Word normal_word(const Term& t);
Term word_term(const Word& w);
Term normalize(const Term& t);

// Concatenation followed by reduction.
Word reduce(Word w);
Word join(const Word& a, const Word& b);
Word product_word(const Word& a, const Word& b);

Term reverse(const Term& t);
Word reverse_word(const Word& w);
Term reverse_letter(const Term& letter);

// Index word W of a ZetaTimes letter z*W.
Word zeta_index(const Term& letter);
Term zeta_times(const Word& w);  // z*W, unfolded into copies of z when W is finite
Word expand_ordinal(const Ordinal& a);

// Whether equality of normal forms decides isomorphism for this word.
bool canonical(const Word& w);

Tri scattered_word(const Word& w);
Tri scattered(const Term& t);

std::optional<std::uint64_t> finite_size(const Word& w);
std::optional<Ordinal> ordinal_value(const Word& w);          // w is a well-order
std::optional<Ordinal> reverse_ordinal_value(const Word& w);  // w is a reversed well-order

ColouredFinite denote_finite(const Term& t);

Verdict iso_check(const Term& a, const Term& b);

}  // namespace linord
