#pragma once

#include "classnum/integer.hpp"

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace classnum {

/* Parse failure with the 0-based offset of the offending character. */
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& message, std::size_t position)
        : std::runtime_error(message + " at position " + std::to_string(position)),
          position_(position)
    {
    }

    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

/*
 * One factor in the paper's notation, e.g. "(2^3.29+1)" or "7^2".
 * Grammar (exact, no whitespace):
 *   class   := item ( "." item )*
 *   item    := "(" product "+1" ")" ( "^" INT )? | INT ( "^" INT )?
 *   product := INT ( "^" INT )? ( "." INT ( "^" INT )? )*
 *   INT     := [0-9]+
 * Integer literals must be positive and exponents nonzero.
 */
struct FactorExpression {
    std::string source_text;
    Integer value;                /* evaluated, >= 1, includes outer exponent */
    bool is_plus_one_form = false;
    unsigned outer_exponent = 1;
};

/* Parses a full `class` production into its items. */
std::vector<FactorExpression> parse_class_expression(const std::string& text);

/*
 * Evaluates one expression string: a single item, a bare `product "+1"`
 * (the parenthesised form without its parentheses, as in "2^3.29+1"), or a
 * whole multi-item class expression (value = product of the items).
 */
FactorExpression evaluate_expression(const std::string& text);

} // namespace classnum
