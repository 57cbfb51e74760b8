// SPDX-License-Identifier: MIT
#include "argsat/af_io.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

namespace argsat {

ParseError::ParseError(std::size_t line, const std::string& what)
    : std::runtime_error(line == 0 ? what : "line " + std::to_string(line) + ": " + what),
      line_(line) {}

std::optional<AfFormat> parse_af_format(std::string_view name) {
    if (name == "apx") return AfFormat::Apx;
    if (name == "tgf") return AfFormat::Tgf;
    return std::nullopt;
}

std::string_view to_string(AfFormat f) noexcept {
    return f == AfFormat::Apx ? "apx" : "tgf";
}

namespace {

bool is_space(char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; }

bool is_name_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) != 0 || c == '_';
}

// Splits on '\n', tolerating '\r\n'. Line numbers are 1-based.
template <class Fn>
void for_each_line(std::string_view text, Fn&& fn) {
    std::size_t line_no = 0;
    while (!text.empty()) {
        ++line_no;
        const auto nl = text.find('\n');
        std::string_view line = text.substr(0, nl);
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        fn(line_no, line);
        if (nl == std::string_view::npos) break;
        text.remove_prefix(nl + 1);
    }
}

class LineCursor {
public:
    LineCursor(std::string_view s, std::size_t line) : s_(s), line_(line) {}

    void skip_ws() {
        while (pos_ < s_.size() && is_space(s_[pos_])) ++pos_;
    }
    bool at_end() {
        skip_ws();
        return pos_ == s_.size();
    }
    void expect(char c) {
        skip_ws();
        if (pos_ >= s_.size() || s_[pos_] != c)
            throw ParseError(line_, std::string("expected '") + c + "'");
        ++pos_;
    }
    std::string_view word() {
        skip_ws();
        const auto start = pos_;
        while (pos_ < s_.size() && is_name_char(s_[pos_])) ++pos_;
        if (start == pos_) throw ParseError(line_, "expected a name");
        return s_.substr(start, pos_ - start);
    }

private:
    std::string_view s_;
    std::size_t pos_ = 0;
    std::size_t line_;
};

class Builder {
public:
    void declare(std::size_t line, std::string_view name) {
        std::string n(name);
        if (!index_.emplace(n, static_cast<ArgIndex>(names_.size())).second)
            throw ParseError(line, "duplicate argument '" + n + "'");
        names_.push_back(std::move(n));
    }
    ArgIndex lookup(std::size_t line, std::string_view name) const {
        auto it = index_.find(std::string(name));
        if (it == index_.end())
            throw ParseError(line, "undeclared argument '" + std::string(name) + "'");
        return it->second;
    }
    void attack(ArgIndex from, ArgIndex to) { attacks_.emplace_back(from, to); }

    ArgumentationFramework build() && {
        if (names_.empty()) throw ParseError(0, "framework has no arguments");
        return ArgumentationFramework(std::move(names_), std::move(attacks_));
    }

private:
    std::vector<std::string> names_;
    std::unordered_map<std::string, ArgIndex> index_;
    std::vector<Attack> attacks_;
};

} // namespace

ArgumentationFramework parse_apx(std::string_view text) {
    Builder b;
    for_each_line(text, [&](std::size_t line_no, std::string_view line) {
        if (auto pct = line.find('%'); pct != std::string_view::npos) line = line.substr(0, pct);
        LineCursor cur(line, line_no);
        if (cur.at_end()) return;
        const auto head = cur.word();
        if (head == "arg") {
            cur.expect('(');
            const auto name = cur.word();
            cur.expect(')');
            cur.expect('.');
            if (!cur.at_end()) throw ParseError(line_no, "trailing characters");
            b.declare(line_no, name);
        } else if (head == "att") {
            cur.expect('(');
            const auto from = cur.word();
            cur.expect(',');
            const auto to = cur.word();
            cur.expect(')');
            cur.expect('.');
            if (!cur.at_end()) throw ParseError(line_no, "trailing characters");
            const ArgIndex src = b.lookup(line_no, from);
            b.attack(src, b.lookup(line_no, to));
        } else {
            throw ParseError(line_no, "expected arg(...) or att(...), got '" + std::string(head) + "'");
        }
    });
    return std::move(b).build();
}

ArgumentationFramework parse_tgf(std::string_view text) {
    Builder b;
    bool in_attacks = false;
    for_each_line(text, [&](std::size_t line_no, std::string_view line) {
        LineCursor cur(line, line_no);
        if (cur.at_end()) return;
        if (!in_attacks) {
            cur.skip_ws();
            if (line.find('#') != std::string_view::npos) {
                cur.expect('#');
                if (!cur.at_end()) throw ParseError(line_no, "trailing characters after '#'");
                in_attacks = true;
                return;
            }
            const auto name = cur.word();
            if (!cur.at_end()) throw ParseError(line_no, "expected one argument name per line");
            b.declare(line_no, name);
        } else {
            const auto from = cur.word();
            const auto to = cur.word();
            if (!cur.at_end()) throw ParseError(line_no, "expected 'from to'");
            const ArgIndex src = b.lookup(line_no, from);
            b.attack(src, b.lookup(line_no, to));
        }
    });
    if (!in_attacks) throw ParseError(0, "missing '#' separator");
    return std::move(b).build();
}

ArgumentationFramework parse_af(std::string_view text, AfFormat format) {
    return format == AfFormat::Apx ? parse_apx(text) : parse_tgf(text);
}

std::string to_apx(const ArgumentationFramework& af) {
    std::string out;
    for (const auto& n : af.names()) out += "arg(" + n + ").\n";
    for (const auto& [from, to] : af.attacks())
        out += "att(" + af.name(from) + "," + af.name(to) + ").\n";
    return out;
}

std::string to_tgf(const ArgumentationFramework& af) {
    std::string out;
    for (const auto& n : af.names()) out += n + "\n";
    out += "#\n";
    for (const auto& [from, to] : af.attacks()) out += af.name(from) + " " + af.name(to) + "\n";
    return out;
}

std::string serialize(const ArgumentationFramework& af, AfFormat format) {
    return format == AfFormat::Apx ? to_apx(af) : to_tgf(af);
}

std::string read_text_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_text_file(const std::filesystem::path& path, std::string_view text) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write " + path.string());
    out.write(text.data(), static_cast<std::streamsize>(text.size()));
    if (!out) throw std::runtime_error("error writing " + path.string());
}

} // namespace argsat
