#include "eqlog/vocabulary.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cctype>

#include "eqlog/errors.hpp"

namespace eqlog {

bool is_reserved_word(std::string_view word) {
    static constexpr std::array<std::string_view, 5> kReserved = {"not", "bot", "top",
                                                                  "forall", "exists"};
    return std::find(kReserved.begin(), kReserved.end(), word) != kReserved.end();
}

static bool is_ident(std::string_view s) {
    if (s.empty() || s[0] < 'a' || s[0] > 'z')
        return false;
    for (char c : s.substr(1)) {
        if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_')
            return false;
    }
    return !is_reserved_word(s);
}

bool is_valid_atom_name(std::string_view name) {
    auto open = name.find('(');
    if (open == std::string_view::npos)
        return is_ident(name);
    if (name.back() != ')')
        return false;
    if (!is_ident(name.substr(0, open)))
        return false;
    std::string_view args = name.substr(open + 1, name.size() - open - 2);
    if (args.empty())
        return false;
    while (true) {
        auto comma = args.find(',');
        std::string_view arg = comma == std::string_view::npos ? args : args.substr(0, comma);
        if (!is_ident(arg))
            return false;
        if (comma == std::string_view::npos)
            return true;
        args.remove_prefix(comma + 1);
    }
}

static const std::shared_ptr<const std::vector<std::string>>& empty_names() {
    static const auto instance = std::make_shared<const std::vector<std::string>>();
    return instance;
}

Vocabulary::Vocabulary() : names_(empty_names()) {}

Vocabulary::Vocabulary(std::vector<std::string> names) {
    std::sort(names.begin(), names.end());
    names.erase(std::unique(names.begin(), names.end()), names.end());
    for (const auto& name : names) {
        if (!is_valid_atom_name(name))
            throw Error("invalid atom name: '" + name + "'");
    }
    names_ = std::make_shared<const std::vector<std::string>>(std::move(names));
}

std::optional<std::size_t> Vocabulary::index_of(std::string_view name) const {
    auto it = std::lower_bound(names_->begin(), names_->end(), name);
    if (it == names_->end() || *it != name)
        return std::nullopt;
    return static_cast<std::size_t>(it - names_->begin());
}

bool Vocabulary::subset_of(const Vocabulary& other) const {
    return std::includes(other.names_->begin(), other.names_->end(), names_->begin(),
                         names_->end());
}

Vocabulary Vocabulary::united(const Vocabulary& other) const {
    if (other.names_->empty() || names_ == other.names_)
        return *this;
    if (names_->empty())
        return other;
    std::vector<std::string> merged;
    merged.reserve(size() + other.size());
    std::set_union(names_->begin(), names_->end(), other.names_->begin(), other.names_->end(),
                   std::back_inserter(merged));
    return Vocabulary(std::move(merged));
}

Vocabulary Vocabulary::intersected(const Vocabulary& other) const {
    std::vector<std::string> common;
    std::set_intersection(names_->begin(), names_->end(), other.names_->begin(),
                          other.names_->end(), std::back_inserter(common));
    return Vocabulary(std::move(common));
}

std::vector<std::string> Vocabulary::difference(const Vocabulary& other) const {
    std::vector<std::string> out;
    std::set_difference(names_->begin(), names_->end(), other.names_->begin(),
                        other.names_->end(), std::back_inserter(out));
    return out;
}

Mask Vocabulary::mask_of(const Vocabulary& sub) const {
    Mask mask = 0;
    for (const auto& name : sub) {
        if (auto idx = index_of(name))
            mask |= Mask{1} << *idx;
    }
    return mask;
}

Mask Vocabulary::project(Mask mask, const Vocabulary& sub) const {
    Mask out = 0;
    for (std::size_t i = 0; i < sub.size(); ++i) {
        auto idx = index_of(sub.name(i));
        if (!idx)
            throw VocabularyError("projection target is not a sub-vocabulary: '" + sub.name(i) +
                                  "'");
        if (mask >> *idx & 1u)
            out |= Mask{1} << i;
    }
    return out;
}

std::vector<std::string> Vocabulary::names_of(Mask mask) const {
    std::vector<std::string> out;
    out.reserve(static_cast<std::size_t>(std::popcount(mask)));
    for (std::size_t i = 0; i < size(); ++i) {
        if (mask >> i & 1u)
            out.push_back(name(i));
    }
    return out;
}

} // namespace eqlog
