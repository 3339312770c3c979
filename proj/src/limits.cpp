#include "eqlog/limits.hpp"

#include <cstdlib>
#include <string>

#include "eqlog/errors.hpp"

namespace eqlog {

static std::size_t env_cap() {
    const char* raw = std::getenv("EQLOG_MAX_ATOMS");
    if (!raw || !*raw)
        return 14;
    char* end = nullptr;
    unsigned long value = std::strtoul(raw, &end, 10);
    if (!end || *end != '\0' || value == 0)
        return 14; // unparsable values fall back to the default
    return static_cast<std::size_t>(value);
}

Limits Limits::defaults() {
    static const std::size_t cap = env_cap();
    return Limits{cap};
}

void check_cap(std::size_t atom_count, const Limits& limits, const char* where) {
    if (atom_count > limits.max_atoms || atom_count > kMaxVocabularyBits) {
        throw CapExceededError(std::string(where) + ": " + std::to_string(atom_count) +
                               " atoms exceed the enumeration cap of " +
                               std::to_string(std::min(limits.max_atoms, kMaxVocabularyBits)));
    }
}

} // namespace eqlog
