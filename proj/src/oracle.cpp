// SPDX-License-Identifier: MIT
#include "argsat/oracle.hpp"

#include <algorithm>
#include <bit>

namespace argsat {

namespace {

// Bitmask view of a small framework: attackers_[a] has bit b set when b
// attacks a.
class MaskFramework {
public:
    MaskFramework(const ArgumentationFramework& af, std::size_t size_cap)
        : k_(af.size()), attackers_(af.size(), 0) {
        if (af.size() > size_cap) throw SizeCapExceeded(af.size(), size_cap);
        if (af.size() > 63) throw SizeCapExceeded(af.size(), 63);
        for (const auto& [from, to] : af.attacks()) attackers_[to] |= std::uint64_t{1} << from;
    }

    std::size_t size() const noexcept { return k_; }

    bool conflict_free(std::uint64_t s) const noexcept {
        for (std::uint64_t m = s; m != 0; m &= m - 1)
            if (attackers_[std::countr_zero(m)] & s) return false;
        return true;
    }

    bool defended(std::size_t a, std::uint64_t s) const noexcept {
        for (std::uint64_t m = attackers_[a]; m != 0; m &= m - 1)
            if ((attackers_[std::countr_zero(m)] & s) == 0) return false;
        return true;
    }

    bool admissible(std::uint64_t s) const noexcept {
        if (!conflict_free(s)) return false;
        for (std::uint64_t m = s; m != 0; m &= m - 1)
            if (!defended(static_cast<std::size_t>(std::countr_zero(m)), s)) return false;
        return true;
    }

    bool complete(std::uint64_t s) const noexcept {
        if (!admissible(s)) return false;
        for (std::size_t a = 0; a < k_; ++a)
            if (!(s >> a & 1U) && defended(a, s)) return false;
        return true;
    }

private:
    std::size_t k_;
    std::vector<std::uint64_t> attackers_;
};

std::vector<Extension> sorted(std::vector<Extension> v) {
    std::sort(v.begin(), v.end());
    return v;
}

} // namespace

std::vector<Extension> oracle_complete(const ArgumentationFramework& af, std::size_t size_cap) {
    const MaskFramework m(af, size_cap);
    std::vector<Extension> out;
    const std::uint64_t count = std::uint64_t{1} << m.size();
    for (std::uint64_t s = 0; s < count; ++s)
        if (m.complete(s)) out.push_back(Extension::from_mask(s));
    return sorted(std::move(out));
}

std::vector<Extension> oracle_preferred(const ArgumentationFramework& af, std::size_t size_cap) {
    const MaskFramework m(af, size_cap);
    std::vector<std::uint64_t> admissible;
    const std::uint64_t count = std::uint64_t{1} << m.size();
    for (std::uint64_t s = 0; s < count; ++s)
        if (m.admissible(s)) admissible.push_back(s);

    std::vector<Extension> out;
    for (std::uint64_t s : admissible) {
        const bool dominated = std::any_of(admissible.begin(), admissible.end(), [s](std::uint64_t t) {
            return t != s && (s & ~t) == 0;
        });
        if (!dominated) out.push_back(Extension::from_mask(s));
    }
    return sorted(std::move(out));
}

std::vector<Extension> maximal_elements(std::vector<Extension> sets) {
    std::sort(sets.begin(), sets.end());
    sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
    std::vector<Extension> out;
    for (const auto& s : sets) {
        const bool dominated = std::any_of(sets.begin(), sets.end(), [&](const Extension& t) {
            return t != s && s.is_subset_of(t);
        });
        if (!dominated) out.push_back(s);
    }
    return out;
}

std::vector<ArgumentationFramework> all_frameworks(std::size_t k) {
    if (k == 0 || k > 4) throw std::invalid_argument("all_frameworks supports 1..4 arguments");
    std::vector<std::string> names;
    for (std::size_t i = 0; i < k; ++i) names.emplace_back(1, static_cast<char>('a' + i));

    const std::size_t pairs = k * k;
    std::vector<ArgumentationFramework> out;
    out.reserve(std::size_t{1} << pairs);
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs); ++mask) {
        std::vector<Attack> attacks;
        for (std::size_t p = 0; p < pairs; ++p)
            if (mask >> p & 1U)
                attacks.emplace_back(static_cast<ArgIndex>(p / k), static_cast<ArgIndex>(p % k));
        out.emplace_back(names, std::move(attacks));
    }
    return out;
}

std::vector<Labelling> all_labellings(std::size_t k) {
    std::size_t total = 1;
    for (std::size_t i = 0; i < k; ++i) total *= 3;
    std::vector<Labelling> out;
    out.reserve(total);
    for (std::size_t code = 0; code < total; ++code) {
        std::vector<Label> labels(k);
        std::size_t c = code;
        for (std::size_t i = 0; i < k; ++i) {
            labels[i] = static_cast<Label>(c % 3);
            c /= 3;
        }
        out.emplace_back(std::move(labels));
    }
    return out;
}

std::string_view to_string(ConstraintTerm t) noexcept {
    switch (t) {
    case ConstraintTerm::InTo: return "in->";
    case ConstraintTerm::InFrom: return "in<-";
    case ConstraintTerm::OutTo: return "out->";
    case ConstraintTerm::OutFrom: return "out<-";
    case ConstraintTerm::UndecTo: return "undec->";
    case ConstraintTerm::UndecFrom: return "undec<-";
    }
    return "?";
}

std::optional<ConstraintTerm> parse_constraint_term(std::string_view s) {
    for (ConstraintTerm t : kAllTerms)
        if (to_string(t) == s) return t;
    return std::nullopt;
}

ConstraintSubset::ConstraintSubset(std::initializer_list<ConstraintTerm> terms) {
    for (ConstraintTerm t : terms) mask_ |= static_cast<std::uint8_t>(1U << static_cast<unsigned>(t));
}

std::size_t ConstraintSubset::size() const noexcept {
    return static_cast<std::size_t>(std::popcount(static_cast<unsigned>(mask_)));
}

std::vector<ConstraintTerm> ConstraintSubset::terms() const {
    std::vector<ConstraintTerm> out;
    for (ConstraintTerm t : kAllTerms)
        if (contains(t)) out.push_back(t);
    return out;
}

std::string ConstraintSubset::to_string() const {
    std::string out = "{";
    bool first = true;
    for (ConstraintTerm t : terms()) {
        if (!first) out += ", ";
        out += argsat::to_string(t);
        first = false;
    }
    return out + "}";
}

bool satisfies_terms(const ArgumentationFramework& af, const Labelling& lab, ConstraintSubset c) {
    if (lab.size() != af.size()) throw std::invalid_argument("labelling is not total");
    for (ArgIndex a = 0; a < af.size(); ++a) {
        bool all_out = true;
        bool some_in = false;
        bool some_undec = false;
        for (ArgIndex b : af.attackers(a)) {
            all_out = all_out && lab[b] == Label::Out;
            some_in = some_in || lab[b] == Label::In;
            some_undec = some_undec || lab[b] == Label::Undec;
        }
        const bool undec_cond = !some_in && some_undec;
        const Label l = lab[a];
        if (c.contains(ConstraintTerm::InTo) && l == Label::In && !all_out) return false;
        if (c.contains(ConstraintTerm::InFrom) && all_out && l != Label::In) return false;
        if (c.contains(ConstraintTerm::OutTo) && l == Label::Out && !some_in) return false;
        if (c.contains(ConstraintTerm::OutFrom) && some_in && l != Label::Out) return false;
        if (c.contains(ConstraintTerm::UndecTo) && l == Label::Undec && !undec_cond) return false;
        if (c.contains(ConstraintTerm::UndecFrom) && undec_cond && l != Label::Undec) return false;
    }
    return true;
}

std::span<const ConstraintSubset> minimal_correct_subsets() noexcept {
    using T = ConstraintTerm;
    static const ConstraintSubset sets[] = {
        {T::InTo, T::InFrom, T::OutTo, T::OutFrom},
        {T::OutTo, T::OutFrom, T::UndecTo, T::UndecFrom},
        {T::InTo, T::InFrom, T::UndecTo, T::UndecFrom},
        {T::InTo, T::OutTo, T::UndecTo},
        {T::InFrom, T::OutFrom, T::UndecFrom},
    };
    return sets;
}

std::string_view to_string(Verdict v) noexcept {
    switch (v) {
    case Verdict::Weak: return "weak";
    case Verdict::CorrectNonRedundant: return "correct_non_redundant";
    case Verdict::Redundant: return "redundant";
    }
    return "?";
}

WitnessNotFound::WitnessNotFound(ConstraintSubset c)
    : std::runtime_error("no witness found for weak constraint " + c.to_string()) {}

namespace {

std::optional<Witness> find_witness(ConstraintSubset c, std::size_t k) {
    const auto labellings = all_labellings(k);
    for (const auto& af : all_frameworks(k))
        for (const auto& lab : labellings)
            if (satisfies_terms(af, lab, c) && !is_complete_labelling(af, lab))
                return Witness{af, lab};
    return std::nullopt;
}

} // namespace

ClassificationVerdict classify_subset(ConstraintSubset c, std::size_t max_witness_args) {
    ClassificationVerdict v;
    v.subset = c;
    const auto minimal = minimal_correct_subsets();
    const bool is_minimal = std::find(minimal.begin(), minimal.end(), c) != minimal.end();
    const bool correct = std::any_of(minimal.begin(), minimal.end(),
                                     [c](ConstraintSubset m) { return m.is_subset_of(c); });
    if (is_minimal) {
        v.verdict = Verdict::CorrectNonRedundant;
        return v;
    }
    if (correct) {
        v.verdict = Verdict::Redundant;
        return v;
    }

    v.verdict = Verdict::Weak;
    const std::size_t bound = std::clamp<std::size_t>(max_witness_args, 1, 4);
    for (std::size_t k = 1; k <= bound && !v.witness; ++k) v.witness = find_witness(c, k);
    if (!v.witness && bound < 4) {
        v.witness = find_witness(c, 4);
        v.escalated = v.witness.has_value();
    }
    if (!v.witness) throw WitnessNotFound(c);
    return v;
}

std::vector<ClassificationVerdict> classify_all(std::size_t max_witness_args) {
    std::vector<ClassificationVerdict> out;
    out.reserve(ConstraintSubset::kCount);
    for (unsigned m = 0; m < ConstraintSubset::kCount; ++m)
        out.push_back(classify_subset(ConstraintSubset(static_cast<std::uint8_t>(m)), max_witness_args));
    return out;
}

} // namespace argsat
