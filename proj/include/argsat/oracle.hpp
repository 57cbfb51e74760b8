// SPDX-License-Identifier: MIT
#pragma once

#include "argsat/af.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace argsat {

/// Complete extensions by testing every subset against the definition.
/// Sorted ascending (Extension ordering).
std::vector<Extension> oracle_complete(const ArgumentationFramework& af,
                                       std::size_t size_cap = kDefaultSizeCap);

/// Inclusion-maximal admissible sets, by exhaustive scan. Sorted ascending.
std::vector<Extension> oracle_preferred(const ArgumentationFramework& af,
                                        std::size_t size_cap = kDefaultSizeCap);

/// Members of `sets` not strictly contained in another member.
std::vector<Extension> maximal_elements(std::vector<Extension> sets);

/// Every framework over arguments a, b, c, ... (k <= 4) with every possible
/// attack relation, in increasing attack-bitmask order.
std::vector<ArgumentationFramework> all_frameworks(std::size_t k);

/// All 3^k labellings of k arguments.
std::vector<Labelling> all_labellings(std::size_t k);

/// One of the six conjuncts that together define complete labellings.
/// "To" terms constrain what a label implies about the attackers, "From"
/// terms what the attackers imply about the label.
enum class ConstraintTerm : std::uint8_t { InTo, InFrom, OutTo, OutFrom, UndecTo, UndecFrom };

inline constexpr std::array<ConstraintTerm, 6> kAllTerms = {
    ConstraintTerm::InTo,    ConstraintTerm::InFrom,   ConstraintTerm::OutTo,
    ConstraintTerm::OutFrom, ConstraintTerm::UndecTo, ConstraintTerm::UndecFrom};

/// "in->", "in<-", "out->", "out<-", "undec->", "undec<-".
std::string_view to_string(ConstraintTerm t) noexcept;
std::optional<ConstraintTerm> parse_constraint_term(std::string_view s);

/// A set of constraint terms, stored as a 6-bit mask (bit = term order).
class ConstraintSubset {
public:
    constexpr ConstraintSubset() = default;
    constexpr explicit ConstraintSubset(std::uint8_t mask) : mask_(mask & 0x3F) {}
    ConstraintSubset(std::initializer_list<ConstraintTerm> terms);

    static constexpr std::size_t kCount = 64;

    constexpr std::uint8_t mask() const noexcept { return mask_; }
    constexpr bool contains(ConstraintTerm t) const noexcept {
        return (mask_ >> static_cast<unsigned>(t) & 1U) != 0;
    }
    std::size_t size() const noexcept;
    std::vector<ConstraintTerm> terms() const;
    constexpr bool is_subset_of(ConstraintSubset o) const noexcept {
        return (mask_ & ~o.mask_) == 0;
    }

    /// e.g. "{in->, out<-}"
    std::string to_string() const;

    friend constexpr bool operator==(ConstraintSubset, ConstraintSubset) = default;

private:
    std::uint8_t mask_ = 0;
};

/// Whether `lab` satisfies every term of `c` at every argument.
bool satisfies_terms(const ArgumentationFramework& af, const Labelling& lab, ConstraintSubset c);

/// The five inclusion-minimal subsets that characterize complete labellings.
std::span<const ConstraintSubset> minimal_correct_subsets() noexcept;

enum class Verdict { Weak, CorrectNonRedundant, Redundant };

std::string_view to_string(Verdict v) noexcept;

struct Witness {
    ArgumentationFramework af;
    Labelling labelling;
};

struct ClassificationVerdict {
    ConstraintSubset subset;
    Verdict verdict = Verdict::Weak;
    /// For weak subsets: a labelling that satisfies the subset without being
    /// complete.
    std::optional<Witness> witness;
    /// Set when no witness existed within the requested argument bound and
    /// the search had to go to 4 arguments.
    bool escalated = false;
};

class WitnessNotFound : public std::runtime_error {
public:
    explicit WitnessNotFound(ConstraintSubset c);
};

/// Analytic verdict from the five minimal correct subsets; weak verdicts get
/// a witness searched over all frameworks with 1..max_witness_args
/// arguments (then 4, flagged as escalated). Throws WitnessNotFound if the
/// search comes up empty.
ClassificationVerdict classify_subset(ConstraintSubset c, std::size_t max_witness_args = 3);

/// All 64 subsets in mask order.
std::vector<ClassificationVerdict> classify_all(std::size_t max_witness_args = 3);

} // namespace argsat
