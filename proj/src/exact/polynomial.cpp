#include "abp/exact/polynomial.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace abp::exact {

RationalInterval operator+(const RationalInterval& a, const RationalInterval& b)
{
    return {a.lo + b.lo, a.hi + b.hi};
}

RationalInterval operator*(const RationalInterval& a, const RationalInterval& b)
{
    Rational p[4] = {a.lo * b.lo, a.lo * b.hi, a.hi * b.lo, a.hi * b.hi};
    auto [mn, mx] = std::minmax_element(std::begin(p), std::end(p));
    return {*mn, *mx};
}

RationalInterval operator*(const Rational& c, const RationalInterval& a)
{
    if (c >= 0)
        return {c * a.lo, c * a.hi};
    return {c * a.hi, c * a.lo};
}

Polynomial::Polynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

Polynomial::Polynomial(std::initializer_list<long> coeffs)
{
    for (long c : coeffs)
        coeffs_.emplace_back(c);
    trim();
}

Polynomial Polynomial::constant(const Rational& c) { return Polynomial(std::vector<Rational>{c}); }

Polynomial Polynomial::monomial(const Rational& c, int degree)
{
    std::vector<Rational> v(static_cast<std::size_t>(degree) + 1);
    v.back() = c;
    return Polynomial(std::move(v));
}

Polynomial Polynomial::from_integers(const std::vector<Integer>& coeffs)
{
    std::vector<Rational> v;
    v.reserve(coeffs.size());
    for (const auto& c : coeffs)
        v.emplace_back(c);
    return Polynomial(std::move(v));
}

void Polynomial::trim()
{
    while (!coeffs_.empty() && coeffs_.back() == 0)
        coeffs_.pop_back();
}

Rational Polynomial::coeff(int i) const
{
    if (i < 0 || i > degree())
        return 0;
    return coeffs_[static_cast<std::size_t>(i)];
}

Rational Polynomial::operator()(const Rational& x) const
{
    Rational acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
        acc = acc * x + *it;
    return acc;
}

RationalInterval Polynomial::evaluate(const RationalInterval& x) const
{
    RationalInterval acc{0, 0};
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc = acc * x;
        acc.lo += *it;
        acc.hi += *it;
    }
    return acc;
}

Polynomial Polynomial::derivative() const
{
    if (degree() < 1)
        return {};
    std::vector<Rational> v(coeffs_.size() - 1);
    for (std::size_t i = 1; i < coeffs_.size(); ++i)
        v[i - 1] = coeffs_[i] * static_cast<long>(i);
    return Polynomial(std::move(v));
}

Polynomial Polynomial::monic() const
{
    if (is_zero())
        return {};
    Rational inv = 1 / leading();
    return inv * *this;
}

std::vector<Integer> Polynomial::primitive_integer() const
{
    if (is_zero())
        return {};
    Integer l = 1;
    for (const auto& c : coeffs_)
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
    std::vector<Integer> out;
    out.reserve(coeffs_.size());
    Integer g = 0;
    for (const auto& c : coeffs_) {
        Integer v = c.get_num() * (l / c.get_den());
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
        out.push_back(std::move(v));
    }
    if (out.back() < 0)
        g = -g;
    for (auto& v : out)
        v /= g;
    return out;
}

Polynomial Polynomial::squarefree_part() const
{
    if (degree() < 1)
        return *this;
    Polynomial g = gcd(*this, derivative());
    return (*this / g).monic();
}

Polynomial operator+(const Polynomial& a, const Polynomial& b)
{
    std::vector<Rational> v(std::max(a.coeffs_.size(), b.coeffs_.size()));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
        v[i] += a.coeffs_[i];
    for (std::size_t i = 0; i < b.coeffs_.size(); ++i)
        v[i] += b.coeffs_[i];
    return Polynomial(std::move(v));
}

Polynomial operator-(const Polynomial& a)
{
    std::vector<Rational> v = a.coeffs_;
    for (auto& c : v)
        c = -c;
    return Polynomial(std::move(v));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }

Polynomial operator*(const Polynomial& a, const Polynomial& b)
{
    if (a.is_zero() || b.is_zero())
        return {};
    std::vector<Rational> v(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i] == 0)
            continue;
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
            v[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return Polynomial(std::move(v));
}

Polynomial operator*(const Rational& c, const Polynomial& a)
{
    std::vector<Rational> v = a.coeffs_;
    for (auto& x : v)
        x *= c;
    return Polynomial(std::move(v));
}

std::pair<Polynomial, Polynomial> Polynomial::divmod(const Polynomial& a, const Polynomial& b)
{
    if (b.is_zero())
        throw std::domain_error("polynomial division by zero");
    if (a.degree() < b.degree())
        return {Polynomial{}, a};
    std::vector<Rational> rem = a.coeffs_;
    std::vector<Rational> quot(static_cast<std::size_t>(a.degree() - b.degree()) + 1);
    const int db = b.degree();
    const Rational inv_lead = 1 / b.leading();
    for (int i = a.degree(); i >= db; --i) {
        const Rational& top = rem[static_cast<std::size_t>(i)];
        if (top == 0)
            continue;
        Rational q = top * inv_lead;
        for (int j = 0; j <= db; ++j)
            rem[static_cast<std::size_t>(i - db + j)] -= q * b.coeffs_[static_cast<std::size_t>(j)];
        quot[static_cast<std::size_t>(i - db)] = q;
    }
    rem.resize(static_cast<std::size_t>(db));
    return {Polynomial(std::move(quot)), Polynomial(std::move(rem))};
}

Polynomial Polynomial::gcd(const Polynomial& a, const Polynomial& b)
{
    Polynomial x = a;
    Polynomial y = b;
    while (!y.is_zero()) {
        Polynomial r = x % y;
        x = std::move(y);
        y = r.is_zero() ? r : r.monic();
    }
    return x.monic();
}

std::string Polynomial::to_string(const std::string& var) const
{
    if (is_zero())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        Rational c = coeffs_[static_cast<std::size_t>(i)];
        if (c == 0)
            continue;
        bool neg = c < 0;
        if (neg)
            c = -c;
        if (first)
            os << (neg ? "-" : "");
        else
            os << (neg ? " - " : " + ");
        first = false;
        if (i == 0) {
            os << c.get_str();
            continue;
        }
        if (c != 1)
            os << c.get_str() << "*";
        os << var;
        if (i > 1)
            os << "^" << i;
    }
    return os.str();
}

std::vector<Polynomial> sturm_chain(const Polynomial& p)
{
    std::vector<Polynomial> chain;
    if (p.is_zero())
        return chain;
    chain.push_back(p);
    Polynomial d = p.derivative();
    if (d.is_zero())
        return chain;
    chain.push_back(d);
    while (true) {
        Polynomial r = chain[chain.size() - 2] % chain.back();
        if (r.is_zero())
            break;
        // Positive rescaling keeps sign variations intact.
        Rational scale = abs(r.leading());
        chain.push_back((-1 / scale) * r);
    }
    return chain;
}

namespace {

int sign_variations(const std::vector<Polynomial>& chain, const Rational& x)
{
    int changes = 0;
    int last = 0;
    for (const auto& q : chain) {
        int s = q.sign_at(x);
        if (s == 0)
            continue;
        if (last != 0 && s != last)
            ++changes;
        last = s;
    }
    return changes;
}

} // namespace

int count_real_roots(const Polynomial& p, const Rational& lo, const Rational& hi)
{
    if (lo > hi || p.degree() < 1)
        return 0;
    Polynomial sf = p.squarefree_part();
    auto chain = sturm_chain(sf);
    // V(a) - V(b) counts roots in (a, b]; add a root sitting exactly at lo.
    int n = sign_variations(chain, lo) - sign_variations(chain, hi);
    if (sf.sign_at(lo) == 0)
        ++n;
    return n;
}

Rational root_bound(const Polynomial& p)
{
    Rational m = 0;
    for (int i = 0; i < p.degree(); ++i) {
        Rational r = abs(p.coeff(i) / p.leading());
        if (r > m)
            m = r;
    }
    return m + 1;
}

} // namespace abp::exact
