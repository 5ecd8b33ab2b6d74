#include "abp/exact/const_expr.hpp"

#include "abp/error.hpp"
#include "abp/exact/factor.hpp"

#include <cctype>
#include <sstream>

namespace abp::exact {

namespace {

using NodePtr = std::shared_ptr<const ConstExpr::Node>;

NodePtr make_node(ConstExpr::Kind kind, std::vector<NodePtr> children = {})
{
    auto n = std::make_shared<ConstExpr::Node>();
    n->kind = kind;
    n->children = std::move(children);
    return n;
}

class Parser {
public:
    explicit Parser(std::string_view text) : s_(text) {}

    NodePtr parse_all()
    {
        NodePtr e = expr();
        skip_ws();
        if (pos_ != s_.size())
            fail("unexpected '" + std::string(1, s_[pos_]) + "'");
        return e;
    }

    Polynomial poly_all()
    {
        Polynomial p = poly();
        skip_ws();
        if (pos_ != s_.size())
            fail("unexpected '" + std::string(1, s_[pos_]) + "' in polynomial");
        return p;
    }

private:
    [[noreturn]] void fail(const std::string& msg) const
    {
        throw Error(ErrorKind::ParseError, msg + " at column " + std::to_string(pos_ + 1) + " in \"" +
                                               std::string(s_) + "\"");
    }

    void skip_ws()
    {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_])))
            ++pos_;
    }

    bool accept(char c)
    {
        skip_ws();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    void expect(char c)
    {
        if (!accept(c))
            fail(std::string("expected '") + c + "'");
    }

    bool accept_word(std::string_view w)
    {
        skip_ws();
        if (s_.substr(pos_, w.size()) != w)
            return false;
        std::size_t end = pos_ + w.size();
        if (end < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[end])) || s_[end] == '_'))
            return false;
        pos_ = end;
        return true;
    }

    bool at_digit()
    {
        skip_ws();
        return pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]));
    }

    Integer digits()
    {
        if (!at_digit())
            fail("expected a number");
        std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
            ++pos_;
        return Integer(std::string(s_.substr(start, pos_ - start)));
    }

    // digits ('.' digits)?
    Rational decimal()
    {
        Integer whole = digits();
        if (pos_ < s_.size() && s_[pos_] == '.') {
            ++pos_;
            std::size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
                ++pos_;
            std::size_t len = pos_ - start;
            if (len == 0)
                fail("expected digits after '.'");
            Integer frac(std::string(s_.substr(start, len)));
            Integer scale;
            mpz_ui_pow_ui(scale.get_mpz_t(), 10, len);
            return make_rational(whole * scale + frac, scale);
        }
        return Rational(whole);
    }

    // Signed rational inside an interval: ('+'|'-')? decimal ('/' digits)?
    Rational interval_endpoint()
    {
        bool neg = false;
        if (accept('-'))
            neg = true;
        else
            accept('+');
        Rational q = decimal();
        if (accept('/')) {
            Integer den = digits();
            if (den == 0)
                fail("zero denominator");
            q /= Rational(den);
        }
        return neg ? Rational(-q) : q;
    }

    long exponent()
    {
        bool neg = false;
        if (accept('-'))
            neg = true;
        else
            accept('+');
        Integer e = digits();
        if (e > 1'000'000)
            fail("exponent too large");
        long v = e.get_si();
        return neg ? -v : v;
    }

    NodePtr expr()
    {
        NodePtr lhs = term();
        for (;;) {
            if (accept('+'))
                lhs = make_node(ConstExpr::Kind::Add, {lhs, term()});
            else if (accept('-'))
                lhs = make_node(ConstExpr::Kind::Sub, {lhs, term()});
            else
                return lhs;
        }
    }

    NodePtr term()
    {
        NodePtr lhs = factor();
        for (;;) {
            if (accept('*'))
                lhs = make_node(ConstExpr::Kind::Mul, {lhs, factor()});
            else if (accept('/'))
                lhs = make_node(ConstExpr::Kind::Div, {lhs, factor()});
            else
                return lhs;
        }
    }

    NodePtr factor()
    {
        NodePtr b = base();
        if (accept('^')) {
            auto n = std::make_shared<ConstExpr::Node>();
            n->kind = ConstExpr::Kind::Pow;
            n->exponent = exponent();
            n->children = {b};
            return n;
        }
        return b;
    }

    NodePtr base()
    {
        skip_ws();
        if (pos_ >= s_.size())
            fail("unexpected end of input");
        if (at_digit()) {
            auto n = std::make_shared<ConstExpr::Node>();
            n->kind = ConstExpr::Kind::Number;
            n->value = decimal();
            return n;
        }
        if (accept_word("phi"))
            return make_node(ConstExpr::Kind::Phi);
        if (accept_word("tribonacci"))
            return make_node(ConstExpr::Kind::Tribonacci);
        if (accept_word("sqrt")) {
            expect('(');
            NodePtr inner = expr();
            expect(')');
            return make_node(ConstExpr::Kind::Sqrt, {inner});
        }
        if (accept_word("root")) {
            expect('(');
            auto n = std::make_shared<ConstExpr::Node>();
            n->kind = ConstExpr::Kind::Root;
            n->poly = poly();
            expect(',');
            expect('[');
            n->lo = interval_endpoint();
            expect(',');
            n->hi = interval_endpoint();
            expect(']');
            expect(')');
            return n;
        }
        if (accept('(')) {
            NodePtr inner = expr();
            expect(')');
            return inner;
        }
        fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    }

    // poly := ('+'|'-')? monomial (('+'|'-') monomial)*
    // monomial := digits ('*'? 'x' ('^' digits)?)? | 'x' ('^' digits)?
    Polynomial poly()
    {
        std::vector<Rational> coeffs;
        bool any = false;
        for (;;) {
            int sign = 1;
            if (accept('-'))
                sign = -1;
            else if (!accept('+') && any)
                break;
            Integer c = 1;
            bool has_coeff = false;
            if (at_digit()) {
                c = digits();
                has_coeff = true;
            }
            if (has_coeff)
                accept('*');
            long deg = 0;
            if (accept('x')) {
                deg = 1;
                if (accept('^')) {
                    Integer e = digits();
                    if (e > 64)
                        fail("polynomial degree too large");
                    deg = e.get_si();
                }
            } else if (!has_coeff) {
                fail("expected a polynomial term");
            }
            if (coeffs.size() <= static_cast<std::size_t>(deg))
                coeffs.resize(static_cast<std::size_t>(deg) + 1);
            coeffs[static_cast<std::size_t>(deg)] += Rational(sign * c);
            any = true;
            skip_ws();
            if (pos_ >= s_.size() || (s_[pos_] != '+' && s_[pos_] != '-'))
                break;
        }
        Polynomial p(std::move(coeffs));
        if (p.is_zero())
            fail("zero polynomial");
        return p;
    }

    std::string_view s_;
    std::size_t pos_ = 0;
};

FieldElement combine(ConstExpr::Kind kind, FieldElement a, FieldElement b, int cap)
{
    std::vector<FieldElement> pair{std::move(a), std::move(b)};
    unify(pair, cap);
    switch (kind) {
    case ConstExpr::Kind::Add: return pair[0] + pair[1];
    case ConstExpr::Kind::Sub: return pair[0] - pair[1];
    case ConstExpr::Kind::Mul: return pair[0] * pair[1];
    case ConstExpr::Kind::Div:
        if (pair[1].is_zero())
            throw Error(ErrorKind::DomainError, "division by zero");
        return pair[0] / pair[1];
    default: break;
    }
    throw std::logic_error("not a binary operator");
}

FieldElement eval(const ConstExpr::Node& n, int cap)
{
    using K = ConstExpr::Kind;
    switch (n.kind) {
    case K::Number: return FieldElement::rational(n.value);
    case K::Phi: return FieldElement::generator(golden_field());
    case K::Tribonacci: return FieldElement::generator(tribonacci_field());
    case K::Sqrt: return sqrt(eval(*n.children[0], cap), cap);
    case K::Root: return real_root(n.poly, n.lo, n.hi);
    case K::Pow: {
        FieldElement b = eval(*n.children[0], cap);
        if (n.exponent < 0 && b.is_zero())
            throw Error(ErrorKind::DomainError, "negative power of zero");
        return b.pow(n.exponent);
    }
    default:
        return combine(n.kind, eval(*n.children[0], cap), eval(*n.children[1], cap), cap);
    }
}

int precedence(ConstExpr::Kind k)
{
    using K = ConstExpr::Kind;
    switch (k) {
    case K::Add:
    case K::Sub: return 1;
    case K::Mul:
    case K::Div: return 2;
    case K::Pow: return 3;
    default: return 4;
    }
}

std::string render(const ConstExpr::Node& n)
{
    using K = ConstExpr::Kind;
    auto wrap = [](const ConstExpr::Node& c, int min_prec) {
        std::string s = render(c);
        return precedence(c.kind) < min_prec ? "(" + s + ")" : s;
    };
    switch (n.kind) {
    case K::Number: {
        if (n.value.get_den() == 1)
            return n.value.get_str();
        return "(" + n.value.get_str() + ")";
    }
    case K::Phi: return "phi";
    case K::Tribonacci: return "tribonacci";
    case K::Sqrt: return "sqrt(" + render(*n.children[0]) + ")";
    case K::Root:
        return "root(" + n.poly.to_string("x") + ", [" + n.lo.get_str() + ", " + n.hi.get_str() + "])";
    case K::Pow: return wrap(*n.children[0], 4) + "^" + std::to_string(n.exponent);
    case K::Add: return wrap(*n.children[0], 1) + " + " + wrap(*n.children[1], 2);
    case K::Sub: return wrap(*n.children[0], 1) + " - " + wrap(*n.children[1], 2);
    case K::Mul: return wrap(*n.children[0], 2) + "*" + wrap(*n.children[1], 3);
    case K::Div: return wrap(*n.children[0], 2) + "/" + wrap(*n.children[1], 3);
    }
    return "?";
}

} // namespace

ConstExpr ConstExpr::parse(std::string_view text) { return ConstExpr(Parser(text).parse_all()); }

FieldElement ConstExpr::evaluate(int degree_cap) const { return eval(*root_, degree_cap); }

std::string ConstExpr::to_string() const { return render(*root_); }

FieldElement parse_constant(std::string_view text, int degree_cap)
{
    return ConstExpr::parse(text).evaluate(degree_cap);
}

std::vector<FieldElement> parse_constants(const std::vector<std::string>& texts, int degree_cap)
{
    std::vector<FieldElement> out;
    for (const auto& t : texts)
        out.push_back(parse_constant(t, degree_cap));
    unify(out, degree_cap);
    return out;
}

Polynomial parse_polynomial(std::string_view text) { return Parser(text).poly_all(); }

FieldElement real_root(const Polynomial& p, const Rational& lo, const Rational& hi)
{
    if (p.degree() < 1)
        throw Error(ErrorKind::NotIsolating, "constant polynomial has no roots");
    if (lo > hi)
        throw Error(ErrorKind::NotIsolating, "empty interval");
    int total = count_real_roots(p, lo, hi);
    if (total != 1)
        throw Error(ErrorKind::NotIsolating, "[" + lo.get_str() + ", " + hi.get_str() + "] contains " +
                                                 std::to_string(total) + " distinct real roots of " +
                                                 p.to_string("x"));
    for (const auto& f : factor(p)) {
        if (count_real_roots(f, lo, hi) != 1)
            continue;
        if (f.degree() == 1)
            return FieldElement::rational(-f.coeff(0) / f.coeff(1));
        return FieldElement::generator(NumberField::create(f, lo, hi));
    }
    throw std::logic_error("no factor carries the isolated root");
}

FieldPtr golden_field()
{
    static const FieldPtr f = NumberField::create(Polynomial{-1, -1, 1}, 1, 2);
    return f;
}

FieldPtr tribonacci_field()
{
    static const FieldPtr f = NumberField::create(Polynomial{-1, -1, -1, 1}, 1, 2);
    return f;
}

} // namespace abp::exact
