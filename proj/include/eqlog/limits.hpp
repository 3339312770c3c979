#pragma once

#include <cstddef>

namespace eqlog {

// Hard ceiling imposed by the 32-bit interpretation masks.
inline constexpr std::size_t kMaxVocabularyBits = 30;

// Knobs for the exhaustive enumeration backends. The default atom cap is 14
// (3^14 ~ 4.8M here-and-there interpretations), overridable per call or via
// the EQLOG_MAX_ATOMS environment variable.
struct Limits {
    std::size_t max_atoms = 14;

    // Reads EQLOG_MAX_ATOMS once per process.
    static Limits defaults();
};

// Throws CapExceededError when atom_count exceeds the cap or the hard ceiling.
void check_cap(std::size_t atom_count, const Limits& limits, const char* where);

} // namespace eqlog
