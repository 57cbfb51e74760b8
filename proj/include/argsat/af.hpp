// SPDX-License-Identifier: MIT
#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace argsat {

/// Zero-based position of an argument in declaration order.
using ArgIndex = std::uint32_t;
using Attack = std::pair<ArgIndex, ArgIndex>;

/// Largest framework the exhaustive predicates accept unless told otherwise.
inline constexpr std::size_t kDefaultSizeCap = 20;

class SizeCapExceeded : public std::runtime_error {
public:
    SizeCapExceeded(std::size_t size, std::size_t cap);
};

/// Finite attack graph over named arguments.
///
/// Argument order is the indexing used everywhere downstream (CNF variable
/// numbering, DIMACS comments, output ordering). Attacks are stored once,
/// sorted, together with per-argument attacker and attackee lists.
class ArgumentationFramework {
public:
    /// Throws std::invalid_argument on an empty argument list, malformed or
    /// repeated names, or attack endpoints out of range. Duplicate attacks
    /// collapse.
    ArgumentationFramework(std::vector<std::string> names, std::vector<Attack> attacks);

    std::size_t size() const noexcept { return names_.size(); }
    std::size_t num_attacks() const noexcept { return attacks_.size(); }

    const std::string& name(ArgIndex i) const;
    const std::vector<std::string>& names() const noexcept { return names_; }
    std::optional<ArgIndex> index_of(std::string_view name) const;

    /// Sorted by (attacker, target).
    const std::vector<Attack>& attacks() const noexcept { return attacks_; }

    /// Arguments j with (j, i) an attack, ascending.
    std::span<const ArgIndex> attackers(ArgIndex i) const;
    /// Arguments j with (i, j) an attack, ascending.
    std::span<const ArgIndex> attacked_by(ArgIndex i) const;

    bool attacks(ArgIndex from, ArgIndex to) const;

    friend bool operator==(const ArgumentationFramework& a, const ArgumentationFramework& b) {
        return a.names_ == b.names_ && a.attacks_ == b.attacks_;
    }

private:
    void check_index(ArgIndex i) const;

    std::vector<std::string> names_;
    std::unordered_map<std::string, ArgIndex> index_;
    std::vector<Attack> attacks_;
    std::vector<std::vector<ArgIndex>> attackers_;
    std::vector<std::vector<ArgIndex>> attacked_by_;
};

bool is_valid_argument_name(std::string_view name) noexcept;

/// A set of arguments, kept sorted and duplicate-free.
class Extension {
public:
    Extension() = default;
    explicit Extension(std::vector<ArgIndex> members);
    Extension(std::initializer_list<ArgIndex> members)
        : Extension(std::vector<ArgIndex>(members)) {}

    /// Members are the set bits of `mask` (bit i is argument i).
    static Extension from_mask(std::uint64_t mask);

    const std::vector<ArgIndex>& members() const noexcept { return members_; }
    std::size_t size() const noexcept { return members_.size(); }
    bool empty() const noexcept { return members_.empty(); }
    bool contains(ArgIndex a) const noexcept;
    bool is_subset_of(const Extension& other) const noexcept;
    std::vector<char> membership(std::size_t n) const;

    auto begin() const noexcept { return members_.begin(); }
    auto end() const noexcept { return members_.end(); }

    friend bool operator==(const Extension&, const Extension&) = default;
    friend auto operator<=>(const Extension&, const Extension&) = default;

private:
    std::vector<ArgIndex> members_;
};

enum class Label : std::uint8_t { In, Out, Undec };

std::string_view to_string(Label l) noexcept;

/// Total map from arguments to labels.
class Labelling {
public:
    Labelling() = default;
    explicit Labelling(std::vector<Label> labels) : labels_(std::move(labels)) {}
    Labelling(std::initializer_list<Label> labels) : labels_(labels) {}

    std::size_t size() const noexcept { return labels_.size(); }
    Label operator[](ArgIndex i) const { return labels_.at(i); }
    const std::vector<Label>& labels() const noexcept { return labels_; }

    friend bool operator==(const Labelling&, const Labelling&) = default;
    friend auto operator<=>(const Labelling&, const Labelling&) = default;

private:
    std::vector<Label> labels_;
};

// Semantics predicates. All throw std::invalid_argument when an extension
// mentions an argument the framework does not have.

bool is_conflict_free(const ArgumentationFramework& af, const Extension& s);
bool is_acceptable(const ArgumentationFramework& af, ArgIndex a, const Extension& s);
bool is_admissible(const ArgumentationFramework& af, const Extension& s);
bool is_complete(const ArgumentationFramework& af, const Extension& s);

/// Admissible and no strict superset is admissible. Exhaustive over the
/// supersets, so frameworks larger than `size_cap` are refused.
bool is_preferred(const ArgumentationFramework& af, const Extension& s,
                  std::size_t size_cap = kDefaultSizeCap);

/// Pointwise check of the three in/out/undec bi-conditions.
bool is_complete_labelling(const ArgumentationFramework& af, const Labelling& lab);

/// in = member, out = attacked by a member, undec otherwise.
Labelling labelling_from_extension(const ArgumentationFramework& af, const Extension& s);
Extension extension_from_labelling(const Labelling& lab);

} // namespace argsat
