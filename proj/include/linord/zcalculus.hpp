#pragma once

#include <stdexcept>

#include "linord/normalize.hpp"
#include "linord/ordinal.hpp"
#include "linord/term.hpp"
#include "linord/verdict.hpp"

namespace linord {

class ZError : public std::runtime_error {
public:
    enum class Kind { BoundExceeded, NotScattered, Undecided };
    ZError(Kind k, const std::string& what) : std::runtime_error(what), kind_(k) {}
    Kind kind() const noexcept { return kind_; }

private:
    Kind kind_;
};

inline constexpr std::uint64_t kZExpandBound = 4;
inline constexpr std::uint64_t kRankProbeCap = 16;

// Z^g by the successor clause; g = w is returned as the symbolic power.
Term z_expand(const Ordinal& g, std::uint64_t bound = kZExpandBound);

// t embeds into Z^g.
Verdict embeds_zpow(const Term& t, const Ordinal& g);
Verdict embeds_zpow_word(const Word& w, const Ordinal& g);

// Least g with t embedding into Z^g.
Ordinal hausdorff_rank(const Term& t);

}  // namespace linord
