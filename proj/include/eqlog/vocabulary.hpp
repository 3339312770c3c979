#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace eqlog {

// Set of atoms in an interpretation, one bit per vocabulary index.
using Mask = std::uint32_t;

// True iff name matches  ident ( "(" ident ("," ident)* ")" )?  with
// ident = [a-z][A-Za-z0-9_]* and no component equal to a reserved word.
bool is_valid_atom_name(std::string_view name);

// Reserved words of the concrete syntax; not usable as identifiers.
bool is_reserved_word(std::string_view word);

// An ordered finite set of atom names, sorted lexicographically and
// duplicate-free. Copies are cheap (shared storage).
class Vocabulary {
public:
    Vocabulary();
    // Sorts and dedupes; throws Error on invalid atom names.
    explicit Vocabulary(std::vector<std::string> names);

    std::size_t size() const { return names_->size(); }
    bool empty() const { return names_->empty(); }
    const std::string& name(std::size_t index) const { return (*names_)[index]; }

    std::optional<std::size_t> index_of(std::string_view name) const;
    bool contains(std::string_view name) const { return index_of(name).has_value(); }
    bool subset_of(const Vocabulary& other) const;

    Vocabulary united(const Vocabulary& other) const;
    Vocabulary intersected(const Vocabulary& other) const;
    // Names in *this that are not in other, sorted.
    std::vector<std::string> difference(const Vocabulary& other) const;

    // Mask with one bit per atom of *this that also occurs in `sub`.
    Mask mask_of(const Vocabulary& sub) const;
    // Projects a mask over *this onto `sub` (sub must be a subset).
    Mask project(Mask mask, const Vocabulary& sub) const;

    std::vector<std::string> names_of(Mask mask) const;

    auto begin() const { return names_->begin(); }
    auto end() const { return names_->end(); }

    bool operator==(const Vocabulary& other) const { return *names_ == *other.names_; }

private:
    std::shared_ptr<const std::vector<std::string>> names_;
};

} // namespace eqlog
