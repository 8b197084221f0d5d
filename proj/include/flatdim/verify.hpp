#pragma once

#include <ostream>

namespace flatdim {

struct VerifyOptions {
    // Caps the ambient-dimension upper end of every identity grid; 0 keeps
    // each grid's full default range. Golden-value suites always run.
    long long grid_max = 0;
};

// Runs every identity grid and golden-value suite, printing one line per
// suite. Returns the number of failed suites (0 = all passed).
int run_verify(const VerifyOptions& opts, std::ostream& out);

}  // namespace flatdim
