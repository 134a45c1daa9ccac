#pragma once

namespace nlc {

// Largest period length accepted by the exhaustive (2^n) operations.
// Defaults to 20; override with the NLCSEQ_EXHAUSTIVE_LIMIT environment
// variable. Hard-capped at 62 so a period always fits a 64-bit word.
int exhaustive_limit();

}  // namespace nlc
