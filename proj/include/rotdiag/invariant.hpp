#pragma once
// The universal tangle invariant: beads from an XC-algebra are placed on the
// crossings and rotation marks of a rotational Morse word, multiplied along
// each open component (later beads multiply on the left, matching a
// right-to-left reading of the bead word), and summed over the term indices
// of R / Rbar, one index per crossing.  The result lives in the n-fold
// tensor power of the algebra, one factor per open component.

#include <vector>

#include "rotdiag/algebra.hpp"
#include "rotdiag/trace.hpp"

namespace rotdiag {

// Bead placement on one crossing or rotation mark, for inspection/tests:
// positive crossings carry (alpha over, beta under), negative crossings
// carry (alphaBar over, betaBar under), counterclockwise rotation marks
// carry kappa and clockwise ones kappaBar.
struct BeadPlacement {
  enum class Source { RPair, RbarPair, Kappa, KappaBar };
  int layer = 0;
  Source source = Source::Kappa;
};

// Per-layer bead table of a word (crossings and rotation marks only).
std::vector<BeadPlacement> bead_table(const MorseWord& w);

// Evaluates the invariant.  Preconditions: well-formed, rotational, no
// closed components; the algebra must pass its axiom check (verified once
// per algebra name, then cached).  `order`, when nonempty, is a permutation
// of the open-component ids: result slot s holds component order[s].
CanonTensor evaluate_invariant(const MorseWord& w, const AlgebraPtr& alg,
                               const std::vector<int>& order = {});

// Independent closed form for the "toy" algebra: component i evaluates to
// t^{e_i} k^{r_i mod 2} where e_i counts crossing signs whose over-strand
// lies on i and r_i is the signed rotation-mark count along i.
CanonTensor toy_closed_form(const MorseWord& w,
                            const std::vector<int>& order = {});

}  // namespace rotdiag
