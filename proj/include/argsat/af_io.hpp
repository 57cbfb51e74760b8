// SPDX-License-Identifier: MIT
#pragma once

#include "argsat/af.hpp"

#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace argsat {

class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, const std::string& what);
    /// 1-based; 0 when the problem is not tied to a line.
    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

enum class AfFormat { Apx, Tgf };

std::optional<AfFormat> parse_af_format(std::string_view name);
std::string_view to_string(AfFormat f) noexcept;

/// ASPARTIX facts: `arg(a).` and `att(a,b).`, one per line, `%` comments.
ArgumentationFramework parse_apx(std::string_view text);

/// Trivial graph format: argument names, a `#` line, then `from to` lines.
ArgumentationFramework parse_tgf(std::string_view text);

ArgumentationFramework parse_af(std::string_view text, AfFormat format);

std::string to_apx(const ArgumentationFramework& af);
std::string to_tgf(const ArgumentationFramework& af);
std::string serialize(const ArgumentationFramework& af, AfFormat format);

std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, std::string_view text);

} // namespace argsat
