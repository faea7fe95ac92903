#pragma once
// gamma_0 connection coefficients for single slots and for IS^(l,r).
#include "artifact/cyclo.hpp"
#include "artifact/sectors.hpp"

namespace artifact {

// Case table for one slot. Throws std::invalid_argument unless h in A(h0,h1,h2,h3) and hp in A(h0,h2,h1,h3).
Cyclo single_B(IS h0, IS h1, IS h2, IS h3, IS h, IS hp);

// Product over slots: single_B on the left, conjugated single_B on the right.
Cyclo multi_B_product(const Sector& s0, const Sector& s1, const Sector& s2, const Sector& s3, const Sector& lam,
                      const Sector& lamp);

// Closed form in terms of the words. l is the left length, all words have length l+r.
Cyclo multi_B_closed(int l, int r, uint32_t d0, uint32_t d1, uint32_t d2, uint32_t d3, uint32_t c0, uint32_t c1,
                     uint32_t c2, uint32_t c3, uint32_t c, uint32_t cp);
Cyclo multi_B_closed(const Sector& s0, const Sector& s1, const Sector& s2, const Sector& s3, const Sector& lam,
                     const Sector& lamp);

}  // namespace artifact
