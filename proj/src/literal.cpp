#include "klein/literal.hpp"

#include <cctype>
#include <numeric>

namespace klein {

namespace {

class Parser {
public:
    explicit Parser(std::string_view text) : text_(text) {}

    Cyclotomic parse()
    {
        Cyclotomic v = expr();
        skip_space();
        if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
        return v;
    }

private:
    [[noreturn]] void fail(const std::string& what) const
    {
        throw PreconditionError("bad scalar literal \"" + std::string(text_) + "\": " + what);
    }

    void skip_space()
    {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool peek(char c)
    {
        skip_space();
        return pos_ < text_.size() && text_[pos_] == c;
    }

    bool accept(char c)
    {
        if (!peek(c)) return false;
        ++pos_;
        return true;
    }

    void expect(char c)
    {
        if (!accept(c)) fail(std::string("expected '") + c + "'");
    }

    bool starts_primary()
    {
        skip_space();
        if (pos_ >= text_.size()) return false;
        const char c = text_[pos_];
        return std::isdigit(static_cast<unsigned char>(c)) || c == 'i' || c == 'z' || c == '(';
    }

    static std::pair<Cyclotomic, Cyclotomic> lift(const Cyclotomic& a, const Cyclotomic& b)
    {
        const int n = std::lcm(a.conductor(), b.conductor());
        return {a.promote(n), b.promote(n)};
    }

    Cyclotomic expr()
    {
        Cyclotomic v = term();
        for (;;) {
            if (accept('+')) {
                auto [a, b] = lift(v, term());
                v = a + b;
            } else if (accept('-')) {
                auto [a, b] = lift(v, term());
                v = a - b;
            } else {
                return v;
            }
        }
    }

    Cyclotomic term()
    {
        Cyclotomic v = unary();
        for (;;) {
            if (accept('*')) {
                auto [a, b] = lift(v, unary());
                v = a * b;
            } else if (accept('/')) {
                auto [a, b] = lift(v, unary());
                if (b.is_zero()) fail("division by zero");
                v = a / b;
            } else if (starts_primary()) {
                auto [a, b] = lift(v, power());
                v = a * b;
            } else {
                return v;
            }
        }
    }

    Cyclotomic unary()
    {
        if (accept('-')) return -unary();
        if (accept('+')) return unary();
        return power();
    }

    Cyclotomic power()
    {
        Cyclotomic base = primary();
        if (!accept('^')) return base;
        const bool negative = accept('-');
        const long long e = integer();
        if (negative && base.is_zero()) fail("division by zero");
        return base.pow(negative ? -e : e);
    }

    long long integer()
    {
        skip_space();
        const std::size_t start = pos_;
        long long v = 0;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            if (v > 1'000'000'000'000LL) fail("integer too large");
            v = v * 10 + (text_[pos_] - '0');
            ++pos_;
        }
        if (pos_ == start) fail("expected integer");
        return v;
    }

    Cyclotomic primary()
    {
        skip_space();
        if (pos_ >= text_.size()) fail("unexpected end of input");
        const char c = text_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            skip_space();
            const std::size_t start = pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
            return Cyclotomic(Rational(Integer(std::string(text_.substr(start, pos_ - start)))));
        }
        if (accept('(')) {
            Cyclotomic v = expr();
            expect(')');
            return v;
        }
        if (text_.substr(pos_, 4) == "zeta") {
            pos_ += 4;
            expect('(');
            const long long n = integer();
            expect(',');
            const bool negative = accept('-');
            const long long k = integer();
            expect(')');
            if (n < 1 || n > 720) fail("zeta order must be in [1, 720]");
            return Cyclotomic::root_of_unity(static_cast<int>(n), negative ? -k : k);
        }
        if (c == 'i') {
            ++pos_;
            return Cyclotomic::i();
        }
        fail("unexpected '" + std::string(1, c) + "'");
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

}  // namespace

Cyclotomic parse_scalar(std::string_view text)
{
    return Parser(text).parse();
}

}  // namespace klein
