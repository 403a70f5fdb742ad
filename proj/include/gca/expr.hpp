#pragma once

#include "gca/ring.hpp"

#include <stdexcept>

namespace gca {

struct ExprError : std::runtime_error {
    int line, col;
    ExprError(const std::string& msg, int line_, int col_)
        : std::runtime_error(msg + " (line " + std::to_string(line_) + ", column " +
                             std::to_string(col_) + ")"),
          line(line_), col(col_) {}
};

/// Shared expression syntax: rational literals (3, -1/2), coordinates
/// x1..xn (or declared names), t, exp(t) and exp(-t), operators + - * ^
/// with nonnegative integer exponents on symbols and integer exponents on
/// the exponentials, parentheses, whitespace insensitive. parse/str
/// round-trip: the canonical rendering reparses to an equal element.
RingElem parseExpr(const std::string& text, int nCoords,
                   const std::vector<std::string>* coordNames = nullptr);

} // namespace gca
