#pragma once

#include <vector>

#include "linord/lclass.hpp"
#include "linord/term.hpp"
#include "linord/verdict.hpp"

namespace linord {

// a embeds into b.
Verdict embeds(const Term& a, const Term& b);

// a embeds into b with convex range.
Verdict convex_embeds(const Term& a, const Term& b);

// a is c-convex embeddable into b: some K in c indexes a convex partition of a
// whose pieces land on convex subsets of b under one embedding.
Verdict l_convex_embeds(const ClassId& c, const Term& a, const Term& b);

// Both directions of l_convex_embeds.
Verdict biembeds(const ClassId& c, const Term& a, const Term& b);

struct Triple {
    Term a, b, c;
};

// Triples (a, b, c) of the corpus with a -> b and b -> c holding but a -> c failing.
std::vector<Triple> transitivity_probe(const ClassId& c, const std::vector<Term>& corpus);

// Re-checks a Holds witness produced by the block search: piece types, reassembly,
// index membership and target placement are recomputed from scratch.
Verdict verify_relation_witness(const ClassId& c, const Term& a, const Term& b, const Witness& w);

}  // namespace linord
