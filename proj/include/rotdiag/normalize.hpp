#pragma once
// Canonical form for Morse words.  Two words that differ only by the order of
// layers acting on disjoint column spans (and by identity layers) present the
// same diagram; normalize() picks a unique representative of that class: the
// word that is lexicographically least when each layer is read as the tuple
// (column, kind, sign, orientations).  The word is first split into the
// independent side-by-side chunks whose layers share no strand; each chunk is
// canonicalized alone -- by front-first recursion, or by exhaustive orbit
// search when the chunk mixes cups with caps and layers can therefore be
// pocketed behind a pending merge -- and the chunks are then interleaved
// least-head-first.  A piece that never reaches the bottom row (a closed
// circle, or a piece hanging only from the top) can slide past entire chunks,
// so such words are canonicalized by one whole-word orbit search; a word
// whose orbit exceeds an internal bound makes normalize throw MorseError.
// The result is idempotent and constant on equivalence classes, so
// normal-form equality decides interchange equivalence.

#include "rotdiag/morse.hpp"

namespace rotdiag {

// If layers[i] and layers[i+1] act on disjoint column spans, swaps them in
// place -- renumbering columns to account for any width change the lower
// layer caused -- and returns true.  Returns false (word untouched) when the
// spans interact.
bool try_interchange(MorseWord& w, size_t i);

// Identity layers removed, columns untouched.
MorseWord strip_identities(const MorseWord& w);

// Canonical representative of the word's interchange class.
MorseWord normalize(const MorseWord& w);

// Convenience: normal forms equal.
bool equivalent(const MorseWord& a, const MorseWord& b);

}  // namespace rotdiag
