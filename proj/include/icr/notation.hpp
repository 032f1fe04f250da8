#pragma once

#include <cstdint>
#include <string>

#include "icr/canonical.hpp"
#include "icr/endo.hpp"
#include "icr/group.hpp"

namespace icr {

// Value-table notation for endomorphisms: digit form "(0220)" when every
// value is a single digit (order <= 10), bracket form "[0,2,2,0]" otherwise.
std::string format_endo(const Endomorphism& f);
std::string format_pair(const EndoPair& p);

// Accepts either notation; validates length and range against G (but not
// homomorphism-ness, which callers check where it matters).
Endomorphism parse_endo(const FiniteGroup& G, const std::string& text);

// Two endomorphisms separated by a comma: "(0220),(0101)" or
// "[0,2,2,0],[0,1,0,1]".
EndoPair parse_pair(const FiniteGroup& G, const std::string& text);

std::string format_triple(const CanonicalTriple& t);  // "(s,t1,t2)"
CanonicalTriple parse_triple(const std::string& text);  // "s,t1,t2" or "(s,t1,t2)"

// Element set of a mask: "{0,2,5}".
std::string format_mask(std::uint64_t mask);

}  // namespace icr
