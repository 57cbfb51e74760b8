// SPDX-License-Identifier: MIT
#include "argsat/af.hpp"

#include <algorithm>
#include <bit>

namespace argsat {

SizeCapExceeded::SizeCapExceeded(std::size_t size, std::size_t cap)
    : std::runtime_error("framework has " + std::to_string(size) +
                         " arguments, exhaustive check is capped at " + std::to_string(cap)) {}

bool is_valid_argument_name(std::string_view name) noexcept {
    if (name.empty()) return false;
    return std::all_of(name.begin(), name.end(), [](char c) {
        return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') ||
               c == '_';
    });
}

ArgumentationFramework::ArgumentationFramework(std::vector<std::string> names,
                                               std::vector<Attack> attacks)
    : names_(std::move(names)), attacks_(std::move(attacks)) {
    if (names_.empty()) throw std::invalid_argument("framework has no arguments");
    index_.reserve(names_.size());
    for (std::size_t i = 0; i < names_.size(); ++i) {
        if (!is_valid_argument_name(names_[i]))
            throw std::invalid_argument("invalid argument name '" + names_[i] + "'");
        if (!index_.emplace(names_[i], static_cast<ArgIndex>(i)).second)
            throw std::invalid_argument("duplicate argument '" + names_[i] + "'");
    }
    for (const auto& [from, to] : attacks_) {
        if (from >= names_.size() || to >= names_.size())
            throw std::invalid_argument("attack endpoint out of range");
    }
    std::sort(attacks_.begin(), attacks_.end());
    attacks_.erase(std::unique(attacks_.begin(), attacks_.end()), attacks_.end());

    attackers_.resize(names_.size());
    attacked_by_.resize(names_.size());
    // attacks_ is sorted by attacker, so attacked_by_ lists come out sorted;
    // attackers_ lists come out sorted because each target sees ascending
    // attackers in that same pass.
    for (const auto& [from, to] : attacks_) {
        attacked_by_[from].push_back(to);
        attackers_[to].push_back(from);
    }
}

void ArgumentationFramework::check_index(ArgIndex i) const {
    if (i >= names_.size())
        throw std::out_of_range("argument index " + std::to_string(i) + " out of range");
}

const std::string& ArgumentationFramework::name(ArgIndex i) const {
    check_index(i);
    return names_[i];
}

std::optional<ArgIndex> ArgumentationFramework::index_of(std::string_view name) const {
    auto it = index_.find(std::string(name));
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

std::span<const ArgIndex> ArgumentationFramework::attackers(ArgIndex i) const {
    check_index(i);
    return attackers_[i];
}

std::span<const ArgIndex> ArgumentationFramework::attacked_by(ArgIndex i) const {
    check_index(i);
    return attacked_by_[i];
}

bool ArgumentationFramework::attacks(ArgIndex from, ArgIndex to) const {
    check_index(from);
    check_index(to);
    const auto& out = attacked_by_[from];
    return std::binary_search(out.begin(), out.end(), to);
}

Extension::Extension(std::vector<ArgIndex> members) : members_(std::move(members)) {
    std::sort(members_.begin(), members_.end());
    members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

Extension Extension::from_mask(std::uint64_t mask) {
    std::vector<ArgIndex> m;
    m.reserve(static_cast<std::size_t>(std::popcount(mask)));
    while (mask != 0) {
        m.push_back(static_cast<ArgIndex>(std::countr_zero(mask)));
        mask &= mask - 1;
    }
    Extension e;
    e.members_ = std::move(m);
    return e;
}

bool Extension::contains(ArgIndex a) const noexcept {
    return std::binary_search(members_.begin(), members_.end(), a);
}

bool Extension::is_subset_of(const Extension& other) const noexcept {
    return std::includes(other.members_.begin(), other.members_.end(), members_.begin(),
                         members_.end());
}

std::vector<char> Extension::membership(std::size_t n) const {
    std::vector<char> in(n, 0);
    for (ArgIndex a : members_) {
        if (a >= n) throw std::invalid_argument("extension mentions unknown argument");
        in[a] = 1;
    }
    return in;
}

std::string_view to_string(Label l) noexcept {
    switch (l) {
    case Label::In: return "in";
    case Label::Out: return "out";
    case Label::Undec: return "undec";
    }
    return "?";
}

namespace {

bool conflict_free(const ArgumentationFramework& af, const std::vector<char>& in) {
    for (const auto& [from, to] : af.attacks())
        if (in[from] && in[to]) return false;
    return true;
}

// Every attacker of `a` is attacked by some member.
bool defended(const ArgumentationFramework& af, ArgIndex a, const std::vector<char>& in) {
    for (ArgIndex b : af.attackers(a)) {
        bool countered = false;
        for (ArgIndex c : af.attackers(b)) {
            if (in[c]) {
                countered = true;
                break;
            }
        }
        if (!countered) return false;
    }
    return true;
}

bool admissible(const ArgumentationFramework& af, const std::vector<char>& in) {
    if (!conflict_free(af, in)) return false;
    for (ArgIndex a = 0; a < af.size(); ++a)
        if (in[a] && !defended(af, a, in)) return false;
    return true;
}

} // namespace

bool is_conflict_free(const ArgumentationFramework& af, const Extension& s) {
    return conflict_free(af, s.membership(af.size()));
}

bool is_acceptable(const ArgumentationFramework& af, ArgIndex a, const Extension& s) {
    const auto in = s.membership(af.size());
    return defended(af, a, in);
}

bool is_admissible(const ArgumentationFramework& af, const Extension& s) {
    return admissible(af, s.membership(af.size()));
}

bool is_complete(const ArgumentationFramework& af, const Extension& s) {
    const auto in = s.membership(af.size());
    if (!admissible(af, in)) return false;
    for (ArgIndex a = 0; a < af.size(); ++a)
        if (!in[a] && defended(af, a, in)) return false;
    return true;
}

bool is_preferred(const ArgumentationFramework& af, const Extension& s, std::size_t size_cap) {
    if (af.size() > size_cap) throw SizeCapExceeded(af.size(), size_cap);
    auto in = s.membership(af.size());
    if (!admissible(af, in)) return false;

    std::vector<ArgIndex> outside;
    for (ArgIndex a = 0; a < af.size(); ++a)
        if (!in[a]) outside.push_back(a);

    // Every non-empty subset of the outside arguments, added to s.
    const std::uint64_t count = std::uint64_t{1} << outside.size();
    for (std::uint64_t mask = 1; mask < count; ++mask) {
        auto bigger = in;
        for (std::size_t j = 0; j < outside.size(); ++j)
            if (mask >> j & 1U) bigger[outside[j]] = 1;
        if (admissible(af, bigger)) return false;
    }
    return true;
}

bool is_complete_labelling(const ArgumentationFramework& af, const Labelling& lab) {
    if (lab.size() != af.size()) throw std::invalid_argument("labelling is not total");
    for (ArgIndex a = 0; a < af.size(); ++a) {
        bool all_out = true;
        bool some_in = false;
        bool some_undec = false;
        for (ArgIndex b : af.attackers(a)) {
            const Label l = lab[b];
            all_out = all_out && l == Label::Out;
            some_in = some_in || l == Label::In;
            some_undec = some_undec || l == Label::Undec;
        }
        if ((lab[a] == Label::In) != all_out) return false;
        if ((lab[a] == Label::Out) != some_in) return false;
        if ((lab[a] == Label::Undec) != (!some_in && some_undec)) return false;
    }
    return true;
}

Labelling labelling_from_extension(const ArgumentationFramework& af, const Extension& s) {
    const auto in = s.membership(af.size());
    std::vector<Label> labels(af.size(), Label::Undec);
    for (ArgIndex a = 0; a < af.size(); ++a) {
        if (in[a]) {
            labels[a] = Label::In;
            continue;
        }
        for (ArgIndex b : af.attackers(a)) {
            if (in[b]) {
                labels[a] = Label::Out;
                break;
            }
        }
    }
    return Labelling(std::move(labels));
}

Extension extension_from_labelling(const Labelling& lab) {
    std::vector<ArgIndex> members;
    for (ArgIndex a = 0; a < lab.size(); ++a)
        if (lab[a] == Label::In) members.push_back(a);
    return Extension(std::move(members));
}

} // namespace argsat
