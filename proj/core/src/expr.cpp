#include "qz/expr.hpp"

#include <cctype>
#include <sstream>

#include "qz/rationalfn.hpp"

namespace qz::expr {

namespace {

std::string var_name(const VarShape& shape, int slot, const RenderOptions& opts) {
    if (slot == 0) return opts.q_name;
    if (slot <= shape.t_arity) {
        if (shape.t_arity == 1) return opts.t_name;
        return opts.t_name + std::to_string(slot);
    }
    return shape.symbols[slot - 1 - shape.t_arity].name;
}

void render_power(std::ostringstream& os, const std::string& name, int exp) {
    os << name;
    if (exp != 1) os << "^" << exp;
}

}  // namespace

std::string render(const IntPoly& p, const RenderOptions& opts) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [key, c] : p.terms()) {
        Int abs_c = c < 0 ? -c : c;
        if (first) {
            if (c < 0) os << "-";
        } else {
            os << (c < 0 ? "-" : "+");
        }
        first = false;
        bool has_var = false;
        for (size_t i = 0; i < key.size(); ++i)
            if (key[i] != 0) has_var = true;
        bool printed = false;
        if (abs_c != 1 || !has_var) {
            os << abs_c.str();
            printed = true;
        }
        for (size_t i = 0; i < key.size(); ++i) {
            if (key[i] == 0) continue;
            if (printed) os << "*";
            render_power(os, var_name(p.shape(), static_cast<int>(i), opts), key[i]);
            printed = true;
        }
    }
    return os.str();
}

std::string render(const RationalFn& f, const RenderOptions& opts) {
    std::string num = render(f.num(), opts);
    bool den_is_one = f.den() == IntPoly::constant(1, f.den().shape());
    if (den_is_one) return num;
    std::ostringstream os;
    if (f.num().terms().size() > 1)
        os << "(" << num << ")";
    else
        os << num;
    os << "/";
    std::ostringstream ds;
    if (!f.den_factors().empty()) {
        const auto& factors = f.den_factors();
        size_t groups = 0;
        for (size_t i = 0; i < factors.size();) {
            size_t j = i;
            while (j < factors.size() && factors[j] == factors[i]) ++j;
            ds << "(" << render(factors[i], opts) << ")";
            if (j - i > 1) ds << "^" << (j - i);
            ++groups;
            i = j;
        }
        if (groups > 1)
            os << "(" << ds.str() << ")";
        else
            os << ds.str();
    } else {
        os << "(" << render(f.den(), opts) << ")";
    }
    return os.str();
}

namespace {

// Recursive-descent parser producing RationalFn values.
class Parser {
public:
    Parser(const std::string& src, int t_arity, std::vector<FrobeniusSymbol> symbols,
           std::vector<std::string> t1_aliases)
        : src_(src),
          shape_{t_arity, std::move(symbols)},
          t1_aliases_(std::move(t1_aliases)) {}

    RationalFn parse() {
        RationalFn v = expression();
        skip_ws();
        if (pos_ != src_.size())
            throw Error("parse error at position " + std::to_string(pos_) +
                        ": unexpected '" + src_.substr(pos_, 8) + "'");
        return v;
    }

private:
    const std::string& src_;
    VarShape shape_;
    std::vector<std::string> t1_aliases_;
    size_t pos_ = 0;

    void skip_ws() {
        while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_])))
            ++pos_;
    }
    char peek() {
        skip_ws();
        return pos_ < src_.size() ? src_[pos_] : '\0';
    }
    bool consume(char c) {
        if (peek() == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    RationalFn expression() {
        bool neg = false;
        if (consume('-'))
            neg = true;
        else
            consume('+');
        RationalFn acc = term();
        if (neg) acc = -acc;
        for (;;) {
            char c = peek();
            if (c == '+') {
                ++pos_;
                acc += term();
            } else if (c == '-') {
                ++pos_;
                acc = acc - term();
            } else {
                break;
            }
        }
        return acc;
    }

    // A term is a sequence of factors joined by '*', '/', or juxtaposition.
    RationalFn term() {
        RationalFn acc = factor();
        for (;;) {
            char c = peek();
            if (c == '*') {
                ++pos_;
                acc *= factor();
            } else if (c == '/') {
                ++pos_;
                acc = acc / factor();
            } else if (c == '(' || std::isdigit(static_cast<unsigned char>(c)) ||
                       std::isalpha(static_cast<unsigned char>(c)) || c == '|') {
                acc *= factor();  // implicit multiplication
            } else {
                break;
            }
        }
        return acc;
    }

    RationalFn factor() {
        RationalFn b = base();
        if (peek() == '^') {
            ++pos_;
            long e = exponent();
            if (e >= 0) return b.pow(static_cast<unsigned>(e));
            return b.inverse().pow(static_cast<unsigned>(-e));
        }
        return b;
    }

    long exponent() {
        bool paren = consume('(');
        bool neg = consume('-');
        skip_ws();
        if (pos_ >= src_.size() || !std::isdigit(static_cast<unsigned char>(src_[pos_])))
            throw Error("parse error: expected integer exponent at position " +
                        std::to_string(pos_));
        long v = 0;
        while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_])))
            v = v * 10 + (src_[pos_++] - '0');
        if (paren && !consume(')'))
            throw Error("parse error: expected ')' after exponent");
        return neg ? -v : v;
    }

    RationalFn base() {
        char c = peek();
        if (c == '(') {
            ++pos_;
            RationalFn v = expression();
            if (!consume(')')) throw Error("parse error: expected ')'");
            return v;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::string digits;
            while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_])))
                digits += src_[pos_++];
            return RationalFn::from_poly(IntPoly::constant(Int(digits), shape_));
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '|') return variable();
        throw Error("parse error at position " + std::to_string(pos_) + ": expected value");
    }

    RationalFn variable() {
        // Longest-match against declared symbol names first (they may be
        // multi-character, e.g. "|E|"), then q / t / t<k> / t1-aliases.
        for (const auto& s : shape_.symbols) {
            if (src_.compare(pos_, s.name.size(), s.name) == 0) {
                pos_ += s.name.size();
                return RationalFn::from_poly(IntPoly::symbol(s).promoted(shape_));
            }
        }
        for (const auto& a : t1_aliases_) {
            if (!a.empty() && src_.compare(pos_, a.size(), a) == 0) {
                if (shape_.t_arity < 1)
                    throw Error("parse error: variable '" + a + "' but t-arity is 0");
                pos_ += a.size();
                return RationalFn::from_poly(
                    IntPoly::t(1, shape_.t_arity).promoted(shape_));
            }
        }
        char c = src_[pos_];
        if (c == 'q') {
            ++pos_;
            return RationalFn::from_poly(IntPoly::q().promoted(shape_));
        }
        if (c == 't') {
            ++pos_;
            int index = 1;
            if (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
                index = 0;
                while (pos_ < src_.size() &&
                       std::isdigit(static_cast<unsigned char>(src_[pos_])))
                    index = index * 10 + (src_[pos_++] - '0');
            } else if (shape_.t_arity != 1) {
                throw Error("parse error: bare 't' requires t-arity 1 (have arity " +
                            std::to_string(shape_.t_arity) + ")");
            }
            if (index < 1 || index > shape_.t_arity)
                throw Error("parse error: t-index " + std::to_string(index) +
                            " out of range for arity " + std::to_string(shape_.t_arity));
            return RationalFn::from_poly(IntPoly::t(index, shape_.t_arity).promoted(shape_));
        }
        throw Error(std::string("parse error: unknown variable starting with '") + c + "'");
    }
};

}  // namespace

RationalFn parse_rational(const std::string& src, int t_arity,
                          const std::vector<FrobeniusSymbol>& symbols,
                          const std::vector<std::string>& t1_aliases) {
    Parser p(src, t_arity, symbols, t1_aliases);
    return p.parse();
}

}  // namespace qz::expr
