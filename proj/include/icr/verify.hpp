#pragma once

#include <iosfwd>

namespace icr {

// Cross-validation battery. Every computational route in the library is
// checked against an independent route or a literal brute-force sweep:
// endomorphism enumeration against depth-first search, the structural law
// decision against the O(n^4) oracle (on valid tables and on mutated ones),
// property reads against full table sweeps, orbit counts against the
// fixed-point average, diagonalization bucket sizes against the closed
// formula, and ideals against a literal congruence test.
//
// Prints one line per check ("ok <name>" or "FAIL <name>: <detail>") plus a
// summary line, and returns the number of failed checks. `quick` skips the
// longest sweeps (the order-8 elementary group classification, the order-210
// tightness witness, and most table mutations).
int run_verification(std::ostream& out, bool quick);

}  // namespace icr
