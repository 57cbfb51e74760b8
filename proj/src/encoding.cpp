// SPDX-License-Identifier: MIT
#include "argsat/cnf.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>

namespace argsat {

CnfFormula::CnfFormula(int num_vars) : num_vars_(num_vars) {
    if (num_vars < 0) throw std::invalid_argument("negative variable count");
}

bool CnfFormula::add_clause(std::vector<int> lits) {
    if (lits.empty()) throw std::invalid_argument("empty clause");
    for (int l : lits)
        if (l == 0 || std::abs(l) > num_vars_)
            throw std::invalid_argument("literal " + std::to_string(l) + " out of range");

    // Keep first occurrences in their original order.
    std::vector<int> out;
    out.reserve(lits.size());
    for (int l : lits) {
        if (std::find(out.begin(), out.end(), l) != out.end()) continue;
        if (std::find(out.begin(), out.end(), -l) != out.end()) return false;
        out.push_back(l);
    }
    clauses_.push_back(std::move(out));
    return true;
}

bool CnfFormula::satisfied_by(const Model& model) const {
    if (model.size() < static_cast<std::size_t>(num_vars_)) return false;
    return std::all_of(clauses_.begin(), clauses_.end(), [&](const std::vector<int>& c) {
        return std::any_of(c.begin(), c.end(), [&](int l) { return literal_true(model, l); });
    });
}

std::string_view to_string(EncodingId e) noexcept {
    switch (e) {
    case EncodingId::C1: return "C1";
    case EncodingId::C1a: return "C1a";
    case EncodingId::C1b: return "C1b";
    case EncodingId::C1c: return "C1c";
    case EncodingId::C2: return "C2";
    case EncodingId::C3: return "C3";
    }
    return "?";
}

std::optional<EncodingId> parse_encoding_id(std::string_view s) {
    for (EncodingId e : kAllEncodings)
        if (to_string(e) == s) return e;
    return std::nullopt;
}

std::span<const int> encoding_formulas(EncodingId e) noexcept {
    static constexpr int c1[] = {1, 2, 3, 4, 5, 6, 7, 8, 9};
    static constexpr int c1a[] = {1, 2, 3, 4, 5, 6, 9};
    static constexpr int c1b[] = {1, 2, 5, 6, 7, 8, 9};
    static constexpr int c1c[] = {1, 2, 3, 4, 7, 8, 9};
    static constexpr int c2[] = {1, 2, 4, 6, 8, 9};
    static constexpr int c3[] = {1, 2, 3, 5, 7, 9};
    switch (e) {
    case EncodingId::C1: return c1;
    case EncodingId::C1a: return c1a;
    case EncodingId::C1b: return c1b;
    case EncodingId::C1c: return c1c;
    case EncodingId::C2: return c2;
    case EncodingId::C3: return c3;
    }
    return {};
}

namespace {

using L = VarLayout;

void emit_formula(const ArgumentationFramework& af, int formula, CnfFormula& f) {
    const auto k = static_cast<ArgIndex>(af.size());
    switch (formula) {
    case 1:
        for (ArgIndex i = 0; i < k; ++i) {
            f.add_clause({L::in_var(i), L::out_var(i), L::undec_var(i)});
            f.add_clause({-L::in_var(i), -L::out_var(i)});
            f.add_clause({-L::in_var(i), -L::undec_var(i)});
            f.add_clause({-L::out_var(i), -L::undec_var(i)});
        }
        break;
    case 2:
        for (ArgIndex i = 0; i < k; ++i) {
            if (!af.attackers(i).empty()) continue;
            f.add_clause({L::in_var(i)});
            f.add_clause({-L::out_var(i)});
            f.add_clause({-L::undec_var(i)});
        }
        break;
    case 3:
        for (ArgIndex i = 0; i < k; ++i) {
            const auto att = af.attackers(i);
            if (att.empty()) continue;
            std::vector<int> c{L::in_var(i)};
            for (ArgIndex j : att) c.push_back(-L::out_var(j));
            f.add_clause(std::move(c));
        }
        break;
    case 4:
        for (ArgIndex i = 0; i < k; ++i)
            for (ArgIndex j : af.attackers(i)) f.add_clause({-L::in_var(i), L::out_var(j)});
        break;
    case 5:
        for (ArgIndex i = 0; i < k; ++i)
            for (ArgIndex j : af.attackers(i)) f.add_clause({-L::in_var(j), L::out_var(i)});
        break;
    case 6:
        for (ArgIndex i = 0; i < k; ++i) {
            const auto att = af.attackers(i);
            if (att.empty()) continue;
            std::vector<int> c{-L::out_var(i)};
            for (ArgIndex j : att) c.push_back(L::in_var(j));
            f.add_clause(std::move(c));
        }
        break;
    case 7:
        for (ArgIndex i = 0; i < k; ++i) {
            const auto att = af.attackers(i);
            for (ArgIndex other : att) {
                std::vector<int> c{L::undec_var(i), -L::undec_var(other)};
                for (ArgIndex j : att) c.push_back(L::in_var(j));
                // A self-attacker yields U_i or not U_i here, which is dropped.
                f.add_clause(std::move(c));
            }
        }
        break;
    case 8:
        for (ArgIndex i = 0; i < k; ++i) {
            const auto att = af.attackers(i);
            if (att.empty()) continue;
            for (ArgIndex j : att) f.add_clause({-L::undec_var(i), -L::in_var(j)});
            std::vector<int> c{-L::undec_var(i)};
            for (ArgIndex j : att) c.push_back(L::undec_var(j));
            f.add_clause(std::move(c));
        }
        break;
    case 9: {
        std::vector<int> c;
        c.reserve(k);
        for (ArgIndex i = 0; i < k; ++i) c.push_back(L::in_var(i));
        f.add_clause(std::move(c));
        break;
    }
    default:
        throw std::invalid_argument("no formula numbered " + std::to_string(formula));
    }
}

} // namespace

CnfFormula encode_formulas(const ArgumentationFramework& af, std::span<const int> formulas) {
    std::vector<int> order(formulas.begin(), formulas.end());
    std::sort(order.begin(), order.end());
    order.erase(std::unique(order.begin(), order.end()), order.end());
    CnfFormula f(VarLayout{af.size()}.num_vars());
    for (int n : order) emit_formula(af, n, f);
    return f;
}

CnfFormula encode(const ArgumentationFramework& af, EncodingId e) {
    return encode_formulas(af, encoding_formulas(e));
}

Labelling model_to_labelling(const VarLayout& layout, const Model& model) {
    if (model.size() < static_cast<std::size_t>(layout.num_vars()))
        throw ModelError("model does not cover every variable");
    std::vector<Label> labels(layout.num_args);
    for (ArgIndex i = 0; i < layout.num_args; ++i) {
        const bool in = model[L::in_var(i) - 1];
        const bool out = model[L::out_var(i) - 1];
        const bool undec = model[L::undec_var(i) - 1];
        if (in + out + undec != 1)
            throw ModelError("argument " + std::to_string(i + 1) +
                             " does not have exactly one label in the model");
        labels[i] = in ? Label::In : out ? Label::Out : Label::Undec;
    }
    return Labelling(std::move(labels));
}

Extension in_arguments(const VarLayout& layout, const Model& model) {
    std::vector<ArgIndex> members;
    for (ArgIndex i = 0; i < layout.num_args; ++i)
        if (model.at(L::in_var(i) - 1)) members.push_back(i);
    return Extension(std::move(members));
}

std::vector<std::string> dimacs_comments(const ArgumentationFramework& af, EncodingId e,
                                         std::string_view af_name) {
    std::vector<std::string> c;
    c.push_back("af " + std::string(af_name));
    c.push_back("encoding " + std::string(to_string(e)));
    c.push_back("arguments " + std::to_string(af.size()) + " attacks " +
                std::to_string(af.num_attacks()));
    c.push_back("layout argument i -> in 3i-2, out 3i-1, undec 3i");
    for (ArgIndex i = 0; i < af.size(); ++i)
        c.push_back("arg " + std::to_string(i + 1) + " " + af.name(i));
    return c;
}

std::string to_dimacs(const CnfFormula& f, std::span<const std::string> comments) {
    std::string out;
    for (const auto& c : comments) out += "c " + c + "\n";
    out += "p cnf " + std::to_string(f.num_vars()) + " " + std::to_string(f.num_clauses()) + "\n";
    for (const auto& clause : f.clauses()) {
        for (int l : clause) {
            out += std::to_string(l);
            out += ' ';
        }
        out += "0\n";
    }
    return out;
}

CnfFormula parse_dimacs(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line;
    std::optional<CnfFormula> f;
    std::size_t declared_clauses = 0;
    std::vector<int> pending;
    while (std::getline(in, line)) {
        std::istringstream ls(line);
        std::string first;
        if (!(ls >> first) || first == "c" || first[0] == 'c') continue;
        if (first == "p") {
            std::string fmt;
            long vars = -1;
            long clauses = -1;
            if (f || !(ls >> fmt >> vars >> clauses) || fmt != "cnf" || vars < 0 || clauses < 0)
                throw std::invalid_argument("bad DIMACS header: " + line);
            f.emplace(static_cast<int>(vars));
            declared_clauses = static_cast<std::size_t>(clauses);
            continue;
        }
        if (!f) throw std::invalid_argument("clause before DIMACS header");
        std::istringstream cs(line);
        long lit = 0;
        while (cs >> lit) {
            if (lit == 0) {
                f->add_clause(std::move(pending));
                pending.clear();
            } else {
                pending.push_back(static_cast<int>(lit));
            }
        }
        if (!cs.eof()) throw std::invalid_argument("bad DIMACS clause line: " + line);
    }
    if (!f) throw std::invalid_argument("missing DIMACS header");
    if (!pending.empty()) throw std::invalid_argument("unterminated DIMACS clause");
    // Tautologies are dropped on insertion, so only an excess is an error.
    if (f->num_clauses() > declared_clauses)
        throw std::invalid_argument("more clauses than the header declares");
    return std::move(*f);
}

std::vector<std::string> argument_names_from_dimacs(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line;
    std::vector<std::pair<long, std::string>> entries;
    while (std::getline(in, line)) {
        std::istringstream ls(line);
        std::string c;
        std::string tag;
        long idx = 0;
        std::string name;
        if (ls >> c >> tag >> idx >> name && c == "c" && tag == "arg")
            entries.emplace_back(idx, name);
    }
    std::sort(entries.begin(), entries.end());
    std::vector<std::string> names;
    for (std::size_t i = 0; i < entries.size(); ++i) {
        if (entries[i].first != static_cast<long>(i + 1))
            throw std::invalid_argument("argument map in DIMACS comments is not contiguous");
        names.push_back(entries[i].second);
    }
    return names;
}

} // namespace argsat
