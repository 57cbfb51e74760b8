// SPDX-License-Identifier: MIT
#pragma once

#include "argsat/af.hpp"

#include <array>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace argsat {

/// Truth values of variables 1..n, stored at index v-1.
using Model = std::vector<bool>;

/// Value of a DIMACS literal under `model`.
inline bool literal_true(const Model& model, int lit) {
    const bool v = model.at(static_cast<std::size_t>(lit > 0 ? lit : -lit) - 1);
    return lit > 0 ? v : !v;
}

/// Clause list over DIMACS literals. Clauses are normalized on insertion:
/// repeated literals collapse to their first occurrence, tautologies are
/// dropped. Literal order is otherwise kept.
class CnfFormula {
public:
    explicit CnfFormula(int num_vars = 0);

    int num_vars() const noexcept { return num_vars_; }
    std::size_t num_clauses() const noexcept { return clauses_.size(); }
    const std::vector<std::vector<int>>& clauses() const noexcept { return clauses_; }

    /// Returns false when the clause was a tautology and was dropped.
    /// Throws std::invalid_argument on an empty clause or a literal outside
    /// 1..num_vars.
    bool add_clause(std::vector<int> lits);
    bool add_clause(std::initializer_list<int> lits) { return add_clause(std::vector<int>(lits)); }

    bool satisfied_by(const Model& model) const;

    friend bool operator==(const CnfFormula&, const CnfFormula&) = default;

private:
    int num_vars_;
    std::vector<std::vector<int>> clauses_;
};

/// Variables I_i, O_i, U_i of argument i (0-based) are 3i+1, 3i+2, 3i+3.
struct VarLayout {
    std::size_t num_args;

    int num_vars() const noexcept { return static_cast<int>(3 * num_args); }
    static int in_var(ArgIndex i) noexcept { return static_cast<int>(3 * i + 1); }
    static int out_var(ArgIndex i) noexcept { return static_cast<int>(3 * i + 2); }
    static int undec_var(ArgIndex i) noexcept { return static_cast<int>(3 * i + 3); }
};

/// The six equivalent complete-labelling encodings.
enum class EncodingId { C1, C1a, C1b, C1c, C2, C3 };

inline constexpr std::array<EncodingId, 6> kAllEncodings = {
    EncodingId::C1, EncodingId::C1a, EncodingId::C1b,
    EncodingId::C1c, EncodingId::C2, EncodingId::C3};

std::string_view to_string(EncodingId e) noexcept;
std::optional<EncodingId> parse_encoding_id(std::string_view s);

/// Formula numbers (1..9) that make up an encoding, ascending.
///
///  1  exactly one label per argument
///  2  unattacked arguments are in
///  3  in if every attacker is out          6  out only if some attacker is in
///  4  in only if every attacker is out     7  undec if no attacker in and one undec
///  5  out if some attacker is in           8  undec only if no attacker in and one undec
///  9  at least one argument is in
std::span<const int> encoding_formulas(EncodingId e) noexcept;

/// Conjunction of the given formula numbers, in ascending formula order.
CnfFormula encode_formulas(const ArgumentationFramework& af, std::span<const int> formulas);

CnfFormula encode(const ArgumentationFramework& af, EncodingId e);

class ModelError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Reads labels off a model; throws ModelError unless exactly one of
/// I_i, O_i, U_i holds for each argument.
Labelling model_to_labelling(const VarLayout& layout, const Model& model);

/// Arguments whose I variable is true.
Extension in_arguments(const VarLayout& layout, const Model& model);

/// Comment lines describing the framework and variable map.
std::vector<std::string> dimacs_comments(const ArgumentationFramework& af, EncodingId e,
                                         std::string_view af_name);

std::string to_dimacs(const CnfFormula& f, std::span<const std::string> comments = {});

/// Strict DIMACS reader: one `p cnf` header, clauses terminated by 0.
CnfFormula parse_dimacs(std::string_view text);

/// Recovers the index/name map written by dimacs_comments, in index order.
std::vector<std::string> argument_names_from_dimacs(std::string_view text);

} // namespace argsat
