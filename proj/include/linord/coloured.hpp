#pragma once

#include <string_view>

#include "linord/lclass.hpp"
#include "linord/normalize.hpp"
#include "linord/verdict.hpp"

namespace linord {

// Exact decision for finite coloured orders: a convex partition of s into m pieces,
// m-chain in c, each piece mapped onto a colour-equal interval of t, images increasing.
Verdict coloured_l_convex_embeds(const ClassId& c, const ColouredFinite& s, const ColouredFinite& t);

// "a,b,a" or "[1,2,1]": letters a..z stand for 1..26, numbers for themselves.
ColouredFinite parse_colours(std::string_view text);

std::string colours_str(const ColouredFinite& s);

}  // namespace linord
