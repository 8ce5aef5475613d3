#include "classnum/expression.hpp"

#include <cctype>

namespace classnum {

namespace {

/* Exponents feed mpz_pow_ui; cap them so a typo cannot demand gigabytes. */
constexpr unsigned long max_exponent = 1'000'000;

class Cursor {
public:
    explicit Cursor(const std::string& text) : s_(text) {}

    bool eof() const { return pos_ >= s_.size(); }
    char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
    std::size_t pos() const { return pos_; }

    bool eat(char c)
    {
        if (peek() != c)
            return false;
        ++pos_;
        return true;
    }

    void expect(char c, const char* what)
    {
        if (!eat(c))
            throw ParseError(std::string("expected ") + what, pos_);
    }

    Integer parse_int()
    {
        if (!std::isdigit(static_cast<unsigned char>(peek())))
            throw ParseError("expected an integer", pos_);
        std::size_t start = pos_;
        while (std::isdigit(static_cast<unsigned char>(peek())))
            ++pos_;
        Integer v(s_.substr(start, pos_ - start));
        if (v == 0)
            throw ParseError("integer literal must be positive", start);
        return v;
    }

    /* Optional "^INT"; 1 when absent. */
    unsigned long parse_exponent()
    {
        if (!eat('^'))
            return 1;
        std::size_t at = pos_;
        Integer e = parse_int();
        if (e > max_exponent)
            throw ParseError("exponent too large", at);
        return e.get_ui();
    }

    /* product := INT ("^" INT)? ("." INT ("^" INT)?)* */
    Integer parse_product()
    {
        Integer v = parse_powered_int();
        while (eat('.'))
            v *= parse_powered_int();
        return v;
    }

    FactorExpression parse_item()
    {
        std::size_t start = pos_;
        FactorExpression item;
        Integer base;
        if (eat('(')) {
            base = parse_product();
            expect('+', "'+1' before ')'");
            expect('1', "'+1' before ')'");
            if (std::isdigit(static_cast<unsigned char>(peek())))
                throw ParseError("expected ')'", pos_);
            expect(')', "')'");
            base += 1;
            item.is_plus_one_form = true;
        } else {
            base = parse_int();
        }
        unsigned long e = parse_exponent();
        item.outer_exponent = static_cast<unsigned>(e);
        mpz_pow_ui(item.value.get_mpz_t(), base.get_mpz_t(), e);
        item.source_text = s_.substr(start, pos_ - start);
        return item;
    }

private:
    Integer parse_powered_int()
    {
        Integer v = parse_int();
        unsigned long e = parse_exponent();
        Integer r;
        mpz_pow_ui(r.get_mpz_t(), v.get_mpz_t(), e);
        return r;
    }

    const std::string& s_;
    std::size_t pos_ = 0;
};

} // namespace

std::vector<FactorExpression> parse_class_expression(const std::string& text)
{
    Cursor c(text);
    std::vector<FactorExpression> items;
    items.push_back(c.parse_item());
    while (c.eat('.'))
        items.push_back(c.parse_item());
    if (!c.eof())
        throw ParseError("unexpected character", c.pos());
    return items;
}

FactorExpression evaluate_expression(const std::string& text)
{
    /* Bare "product+1" (the parenthesised form without its parentheses). */
    try {
        Cursor c(text);
        FactorExpression e;
        Integer v = c.parse_product();
        c.expect('+', "'+1'");
        c.expect('1', "'+1'");
        if (!c.eof())
            throw ParseError("unexpected character", c.pos());
        e.source_text = text;
        e.value = v + 1;
        e.is_plus_one_form = true;
        e.outer_exponent = 1;
        return e;
    } catch (const ParseError&) {
        /* fall through to the class grammar */
    }

    auto items = parse_class_expression(text);
    if (items.size() == 1) {
        items.front().source_text = text;
        return items.front();
    }
    FactorExpression whole;
    whole.source_text = text;
    whole.value = 1;
    for (const auto& item : items)
        whole.value *= item.value;
    whole.is_plus_one_form = false;
    whole.outer_exponent = 1;
    return whole;
}

} // namespace classnum
