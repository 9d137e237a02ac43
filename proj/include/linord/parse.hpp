#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "linord/term.hpp"

namespace linord {

class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t column, const std::string& msg)
        : std::runtime_error("syntax error at column " + std::to_string(column) + ": " + msg), column_(column) {}
    std::size_t column() const noexcept { return column_; }

private:
    std::size_t column_;
};

// Unnormalized term for the textual grammar; columns are 1-based.
Term parse_term(std::string_view text);

Rational parse_rational(std::string_view text);

}  // namespace linord
