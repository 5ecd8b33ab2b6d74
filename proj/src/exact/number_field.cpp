#include "abp/exact/number_field.hpp"

#include "abp/error.hpp"
#include "abp/exact/factor.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace abp::exact {

namespace {

constexpr long kBaseBits = 128;
constexpr long kMaxBisections = 1'000'000;

Rational midpoint(const RationalInterval& iv) { return (iv.lo + iv.hi) / 2; }

// Shrinks an interval that brackets a simple root of p until its width is at
// most 2^-bits. Endpoints must not be roots.
RationalInterval bisect_to(const Polynomial& p, RationalInterval iv, long bits)
{
    const Rational target = pow2(-bits);
    const int s_lo = p.sign_at(iv.lo);
    long steps = 0;
    while (iv.width() > target) {
        if (++steps > kMaxBisections)
            throw std::logic_error("root refinement exceeded the bisection cap");
        Rational mid = midpoint(iv);
        int s = p.sign_at(mid);
        if (s == 0)
            return {mid, mid};
        if (s == s_lo)
            iv.lo = mid;
        else
            iv.hi = mid;
    }
    return iv;
}

std::vector<RationalInterval> powers_of(const RationalInterval& theta, int count)
{
    std::vector<RationalInterval> out;
    out.reserve(static_cast<std::size_t>(count));
    RationalInterval acc{1, 1};
    for (int i = 0; i < count; ++i) {
        out.push_back(acc);
        acc = acc * theta;
    }
    return out;
}

// Solves target = sum c_i basis_i over Q. Returns nullopt if target is not in
// the span. basis vectors need not be independent.
std::optional<std::vector<Rational>> solve_in_span(const std::vector<std::vector<Rational>>& basis,
                                                   const std::vector<Rational>& target)
{
    const std::size_t rows = target.size();
    const std::size_t cols = basis.size();
    // Augmented matrix: rows x (cols + 1).
    std::vector<std::vector<Rational>> m(rows, std::vector<Rational>(cols + 1));
    for (std::size_t r = 0; r < rows; ++r) {
        for (std::size_t c = 0; c < cols; ++c)
            m[r][c] = basis[c][r];
        m[r][cols] = target[r];
    }
    std::vector<std::size_t> pivot_col;
    std::size_t row = 0;
    for (std::size_t c = 0; c < cols && row < rows; ++c) {
        std::size_t p = row;
        while (p < rows && m[p][c] == 0)
            ++p;
        if (p == rows)
            continue;
        std::swap(m[p], m[row]);
        Rational inv = 1 / m[row][c];
        for (std::size_t k = c; k <= cols; ++k)
            m[row][k] *= inv;
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == row || m[r][c] == 0)
                continue;
            Rational f = m[r][c];
            for (std::size_t k = c; k <= cols; ++k)
                m[r][k] -= f * m[row][k];
        }
        pivot_col.push_back(c);
        ++row;
    }
    for (std::size_t r = row; r < rows; ++r)
        if (m[r][cols] != 0)
            return std::nullopt;
    std::vector<Rational> sol(cols);
    for (std::size_t r = 0; r < pivot_col.size(); ++r)
        sol[pivot_col[r]] = m[r][cols];
    return sol;
}

std::size_t rank_of(std::vector<std::vector<Rational>> vecs)
{
    std::size_t rank = 0;
    if (vecs.empty())
        return 0;
    const std::size_t n = vecs[0].size();
    for (std::size_t c = 0; c < n && rank < vecs.size(); ++c) {
        std::size_t p = rank;
        while (p < vecs.size() && vecs[p][c] == 0)
            ++p;
        if (p == vecs.size())
            continue;
        std::swap(vecs[p], vecs[rank]);
        for (std::size_t r = rank + 1; r < vecs.size(); ++r) {
            if (vecs[r][c] == 0)
                continue;
            Rational f = vecs[r][c] / vecs[rank][c];
            for (std::size_t k = c; k < n; ++k)
                vecs[r][k] -= f * vecs[rank][k];
        }
        ++rank;
    }
    return rank;
}

Rational rational_value(const Polynomial& linear)
{
    return -linear.coeff(0) / linear.coeff(1);
}

} // namespace

// ---------------------------------------------------------------------------
// NumberField

struct NumberField::Private {};

NumberField::NumberField(const Private&, Polynomial min_poly, RationalInterval interval)
    : min_poly_(min_poly.primitive()), monic_(min_poly.monic()), interval_(std::move(interval))
{
    const int d = degree();
    if (d == 1) {
        Rational r = rational_value(monic_);
        base_ = {r, r};
        base_bits_ = kBaseBits;
    } else {
        base_ = bisect_to(min_poly_, interval_, kBaseBits);
        base_bits_ = kBaseBits;
    }
    base_powers_ = powers_of(base_, d);

    // theta^(d+i) expressed in the power basis, i = 0 .. d-2.
    std::vector<Rational> cur(static_cast<std::size_t>(d));
    for (int i = 0; i < d; ++i)
        cur[static_cast<std::size_t>(i)] = -monic_.coeff(i);
    for (int i = 0; i + 1 < d; ++i) {
        reduction_.push_back(cur);
        std::vector<Rational> next(static_cast<std::size_t>(d));
        Rational top = cur.back();
        for (int k = d - 1; k >= 1; --k)
            next[static_cast<std::size_t>(k)] = cur[static_cast<std::size_t>(k - 1)];
        for (int k = 0; k < d; ++k)
            next[static_cast<std::size_t>(k)] -= top * monic_.coeff(k);
        cur = std::move(next);
    }
}

namespace {

FieldPtr make_field_unchecked(const Polynomial& g, const RationalInterval& iv);

} // namespace

FieldPtr NumberField::create(const Polynomial& min_poly, const Rational& lo, const Rational& hi)
{
    if (min_poly.degree() < 1)
        throw Error(ErrorKind::Reducible, "minimal polynomial must have degree >= 1");
    if (lo > hi)
        throw Error(ErrorKind::NotIsolating, "empty interval");
    if (!is_irreducible(min_poly))
        throw Error(ErrorKind::Reducible, min_poly.to_string() + " is not irreducible over Q");
    int roots = count_real_roots(min_poly, lo, hi);
    if (roots != 1)
        throw Error(ErrorKind::NotIsolating, "[" + lo.get_str() + ", " + hi.get_str() + "] contains " +
                                                 std::to_string(roots) + " real roots of " +
                                                 min_poly.to_string());
    return std::make_shared<const NumberField>(Private{}, min_poly, RationalInterval{lo, hi});
}

namespace {

FieldPtr make_field_unchecked(const Polynomial& g, const RationalInterval& iv)
{
    return std::make_shared<const NumberField>(NumberField::Private{}, g, iv);
}

} // namespace

FieldPtr NumberField::rationals()
{
    static const FieldPtr q =
        std::make_shared<const NumberField>(Private{}, Polynomial{0, 1}, RationalInterval{-1, 1});
    return q;
}

RationalInterval NumberField::enclosure(long bits) const
{
    if (bits <= base_bits_ || degree() == 1)
        return base_;
    return bisect_to(min_poly_, base_, bits);
}

std::vector<RationalInterval> NumberField::power_enclosures(long bits) const
{
    if (bits <= base_bits_ || degree() == 1)
        return base_powers_;
    return powers_of(enclosure(bits), degree());
}

bool NumberField::same_as(const NumberField& other) const
{
    if (this == &other)
        return true;
    if (degree() == 1 && other.degree() == 1)
        return true;
    if (!(min_poly_ == other.min_poly_))
        return false;
    Rational lo = std::max(interval_.lo, other.interval_.lo);
    Rational hi = std::min(interval_.hi, other.interval_.hi);
    return lo <= hi && count_real_roots(min_poly_, lo, hi) == 1;
}

std::string NumberField::describe() const
{
    return "root(" + min_poly_.to_string("x") + ", [" + interval_.lo.get_str() + ", " +
           interval_.hi.get_str() + "])";
}

// ---------------------------------------------------------------------------
// FieldElement

FieldElement::FieldElement() : FieldElement(NumberField::rationals(), Rational(0)) {}

FieldElement::FieldElement(FieldPtr field, std::vector<Rational> coeffs) : field_(std::move(field))
{
    reduce(std::move(coeffs));
}

FieldElement::FieldElement(FieldPtr field, const Rational& value) : field_(std::move(field))
{
    coeffs_.assign(static_cast<std::size_t>(field_->degree()), Rational(0));
    coeffs_[0] = value;
}

FieldElement FieldElement::rational(const Rational& q) { return FieldElement(NumberField::rationals(), q); }

FieldElement FieldElement::generator(FieldPtr field)
{
    std::vector<Rational> c{Rational(0), Rational(1)};
    return FieldElement(std::move(field), std::move(c));
}

void FieldElement::reduce(std::vector<Rational> full)
{
    const std::size_t d = static_cast<std::size_t>(field_->degree());
    if (full.size() <= d) {
        full.resize(d);
        coeffs_ = std::move(full);
        return;
    }
    if (full.size() <= 2 * d - 1) {
        coeffs_.assign(full.begin(), full.begin() + static_cast<std::ptrdiff_t>(d));
        for (std::size_t j = d; j < full.size(); ++j) {
            if (full[j] == 0)
                continue;
            const auto& row = field_->reduction_[j - d];
            for (std::size_t i = 0; i < d; ++i)
                coeffs_[i] += full[j] * row[i];
        }
        return;
    }
    Polynomial r = Polynomial(std::move(full)) % field_->monic_;
    coeffs_ = r.coeffs();
    coeffs_.resize(d);
}

bool FieldElement::is_zero() const
{
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return c == 0; });
}

bool FieldElement::is_rational() const
{
    return std::all_of(coeffs_.begin() + 1, coeffs_.end(), [](const Rational& c) { return c == 0; });
}

RationalInterval FieldElement::enclosure(long bits) const
{
    if (is_rational())
        return {coeffs_[0], coeffs_[0]};
    auto powers = field_->power_enclosures(bits);
    RationalInterval acc{coeffs_[0], coeffs_[0]};
    for (std::size_t i = 1; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0)
            continue;
        acc = acc + coeffs_[i] * powers[i];
    }
    return acc;
}

int FieldElement::sign() const
{
    if (is_rational())
        return sgn(coeffs_[0]);
    for (long bits = kBaseBits;; bits *= 2) {
        RationalInterval e = enclosure(bits);
        if (e.lo > 0)
            return 1;
        if (e.hi < 0)
            return -1;
        if (bits > kMaxBisections)
            throw std::logic_error("sign refinement did not terminate");
    }
}

Integer FieldElement::floor() const
{
    if (is_rational())
        return exact::floor(coeffs_[0]);
    for (long bits = kBaseBits;; bits *= 2) {
        RationalInterval e = enclosure(bits);
        Integer lo = exact::floor(e.lo);
        if (lo == exact::floor(e.hi))
            return lo;
        if (bits > kMaxBisections)
            throw std::logic_error("floor refinement did not terminate");
    }
}

FieldElement FieldElement::frac() const { return *this - Rational(floor()); }

FieldElement FieldElement::inverse() const
{
    if (is_zero())
        throw std::domain_error("inverse of zero");
    if (is_rational())
        return FieldElement(field_, Rational(1 / coeffs_[0]));
    Polynomial r0 = field_->monic_;
    Polynomial r1{std::vector<Rational>(coeffs_)};
    Polynomial s0, s1 = Polynomial::constant(1);
    while (!r1.is_zero()) {
        auto [q, r] = Polynomial::divmod(r0, r1);
        r0 = std::move(r1);
        r1 = std::move(r);
        Polynomial s = s0 - q * s1;
        s0 = std::move(s1);
        s1 = std::move(s);
    }
    // r0 is a nonzero constant since the minimal polynomial is irreducible.
    Polynomial inv = (1 / r0.coeff(0)) * s0;
    return FieldElement(field_, inv.coeffs());
}

FieldElement FieldElement::pow(long exponent) const
{
    if (exponent < 0)
        return inverse().pow(-exponent);
    FieldElement result(field_, Rational(1));
    FieldElement base = *this;
    while (exponent) {
        if (exponent & 1)
            result *= base;
        exponent >>= 1;
        if (exponent)
            base *= base;
    }
    return result;
}

FieldElement FieldElement::in_field(const FieldPtr& target) const
{
    if (field_ == target)
        return *this;
    if (is_rational())
        return FieldElement(target, coeffs_[0]);
    if (field_->same_as(*target)) {
        FieldElement copy = *this;
        copy.field_ = target;
        return copy;
    }
    throw std::invalid_argument("element does not belong to the target field");
}

void FieldElement::align(FieldElement& other)
{
    if (field_ == other.field_)
        return;
    if (other.is_rational() || field_->same_as(*other.field_)) {
        other = other.in_field(field_);
        return;
    }
    if (is_rational()) {
        *this = in_field(other.field_);
        return;
    }
    throw std::invalid_argument("arithmetic on elements of different number fields");
}

FieldElement& FieldElement::operator+=(const FieldElement& o)
{
    FieldElement b = o;
    align(b);
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        coeffs_[i] += b.coeffs_[i];
    return *this;
}

FieldElement& FieldElement::operator-=(const FieldElement& o)
{
    FieldElement b = o;
    align(b);
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        coeffs_[i] -= b.coeffs_[i];
    return *this;
}

FieldElement& FieldElement::operator*=(const FieldElement& o)
{
    FieldElement b = o;
    align(b);
    if (b.is_rational()) {
        for (auto& c : coeffs_)
            c *= b.coeffs_[0];
        return *this;
    }
    std::vector<Rational> full(2 * coeffs_.size() - 1);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0)
            continue;
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
            full[i + j] += coeffs_[i] * b.coeffs_[j];
    }
    reduce(std::move(full));
    return *this;
}

FieldElement& FieldElement::operator/=(const FieldElement& o)
{
    FieldElement b = o;
    align(b);
    return *this *= b.inverse();
}

FieldElement operator-(const FieldElement& a)
{
    FieldElement r = a;
    for (auto& c : r.coeffs_)
        c = -c;
    return r;
}

FieldElement operator*(const Rational& c, const FieldElement& a)
{
    FieldElement r = a;
    for (auto& x : r.coeffs_)
        x *= c;
    return r;
}

FieldElement operator+(const FieldElement& a, const Rational& c)
{
    FieldElement r = a;
    r.coeffs_[0] += c;
    return r;
}

FieldElement operator-(const FieldElement& a, const Rational& c)
{
    FieldElement r = a;
    r.coeffs_[0] -= c;
    return r;
}

FieldElement operator-(const Rational& c, const FieldElement& a) { return -a + c; }

bool operator==(const FieldElement& a, const FieldElement& b)
{
    FieldElement x = a, y = b;
    x.align(y);
    return x.coeffs_ == y.coeffs_;
}

std::string FieldElement::to_string(const std::string& var) const
{
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        Rational c = coeffs_[i];
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
    return first ? "0" : os.str();
}

// ---------------------------------------------------------------------------
// Minimal polynomials and field extensions

Polynomial minimal_polynomial(const FieldElement& x)
{
    const int d = x.degree();
    std::vector<std::vector<Rational>> powers;
    FieldElement p(x.field(), Rational(1));
    for (int k = 0; k <= d; ++k) {
        if (k > 0) {
            if (auto rel = solve_in_span(powers, p.coeffs())) {
                std::vector<Rational> c(static_cast<std::size_t>(k) + 1);
                for (int i = 0; i < k; ++i)
                    c[static_cast<std::size_t>(i)] = -(*rel)[static_cast<std::size_t>(i)];
                c[static_cast<std::size_t>(k)] = 1;
                return Polynomial(std::move(c)).primitive();
            }
        }
        powers.push_back(p.coeffs());
        p *= x;
    }
    throw std::logic_error("minimal polynomial degree exceeds field degree");
}

namespace {

using AlgebraElement = std::vector<FieldElement>; // coefficients of y^j over K

AlgebraElement algebra_mul(const AlgebraElement& a, const AlgebraElement& b,
                           const std::vector<FieldElement>& h)
{
    const std::size_t e = h.size() - 1;
    const FieldPtr& k = h[0].field();
    std::vector<FieldElement> full(2 * e - 1, FieldElement(k, Rational(0)));
    for (std::size_t i = 0; i < e; ++i) {
        if (a[i].is_zero())
            continue;
        for (std::size_t j = 0; j < e; ++j)
            full[i + j] += a[i] * b[j];
    }
    // h is monic: y^e = -sum h_i y^i
    for (std::size_t top = full.size(); top-- > e;) {
        if (full[top].is_zero())
            continue;
        FieldElement c = full[top];
        for (std::size_t i = 0; i < e; ++i)
            full[top - e + i] -= c * h[i];
    }
    full.resize(e);
    return full;
}

std::vector<Rational> flatten(const AlgebraElement& a)
{
    std::vector<Rational> out;
    for (const auto& x : a)
        out.insert(out.end(), x.coeffs().begin(), x.coeffs().end());
    return out;
}

RationalInterval sqrt_enclosure(const RationalInterval& v, long bits)
{
    Integer scale = 1;
    mpz_mul_2exp(scale.get_mpz_t(), scale.get_mpz_t(), static_cast<mp_bitcnt_t>(2 * bits));
    Integer lo_scaled = exact::floor(std::max(v.lo, Rational(0)) * Rational(scale));
    Integer hi_scaled = exact::ceil(std::max(v.hi, Rational(0)) * Rational(scale));
    Integer lo_root, hi_root;
    mpz_sqrt(lo_root.get_mpz_t(), lo_scaled.get_mpz_t());
    mpz_sqrt(hi_root.get_mpz_t(), hi_scaled.get_mpz_t());
    hi_root += 1;
    Rational denom = pow2(bits);
    return {Rational(lo_root) / denom, Rational(hi_root) / denom};
}

// If y (an element of L) lies in the subfield generated by gen (the image in
// L of K's generator), rewrite it as an element of K.
std::optional<FieldElement> pull_back(const FieldElement& y, const FieldElement& gen, const FieldPtr& k)
{
    std::vector<std::vector<Rational>> basis;
    FieldElement p(y.field(), Rational(1));
    for (int i = 0; i < k->degree(); ++i) {
        basis.push_back(p.coeffs());
        p *= gen;
    }
    auto sol = solve_in_span(basis, y.coeffs());
    if (!sol)
        return std::nullopt;
    return FieldElement(k, *sol);
}

// A short dyadic interval around iv still isolating the same root of g, so
// that describe() stays readable.
RationalInterval coarse_interval(const Polynomial& g, const RationalInterval& iv)
{
    for (long k = 0;; ++k) {
        Rational scale = pow2(k);
        Rational lo = Rational(exact::floor(iv.lo * scale)) / scale;
        Rational hi = Rational(exact::ceil(iv.hi * scale)) / scale;
        if (lo < hi && g.sign_at(lo) != 0 && g.sign_at(hi) != 0 && count_real_roots(g, lo, hi) == 1)
            return {lo, hi};
    }
}

// Adjoins a root y of the monic polynomial h (coefficients in K) to K, where
// y_enclosure(bits) encloses the real root meant.
Extension adjoin_root(const FieldPtr& k, const std::vector<FieldElement>& h,
                      const std::function<RationalInterval(long)>& y_enclosure, int cap)
{
    const int d = k->degree();
    const int e = static_cast<int>(h.size()) - 1;
    const int dim = d * e;
    if (dim > std::max(2 * cap, 16))
        throw Error(ErrorKind::FieldTooLarge, "intermediate algebra of dimension " + std::to_string(dim) +
                                                  " exceeds the supported size");

    AlgebraElement one(static_cast<std::size_t>(e), FieldElement(k, Rational(0)));
    one[0] = FieldElement(k, Rational(1));
    AlgebraElement theta_k = AlgebraElement(static_cast<std::size_t>(e), FieldElement(k, Rational(0)));
    theta_k[0] = FieldElement::generator(k);
    AlgebraElement y(static_cast<std::size_t>(e), FieldElement(k, Rational(0)));
    if (e > 1)
        y[1] = FieldElement(k, Rational(1));
    else
        y[0] = -h[0];

    for (long t = 1; t <= 40; ++t) {
        AlgebraElement prim = theta_k;
        for (int j = 0; j < e; ++j)
            prim[static_cast<std::size_t>(j)] += Rational(t) * y[static_cast<std::size_t>(j)];

        std::vector<std::vector<Rational>> powers;
        AlgebraElement p = one;
        std::optional<std::vector<Rational>> relation;
        int k_dep = 0;
        for (int i = 0; i <= dim; ++i) {
            auto flat = flatten(p);
            if (i > 0) {
                if (auto rel = solve_in_span(powers, flat)) {
                    relation = rel;
                    k_dep = i;
                    break;
                }
            }
            powers.push_back(std::move(flat));
            p = algebra_mul(p, prim, h);
        }
        if (!relation || k_dep < dim)
            continue; // not a primitive element of the algebra

        std::vector<Rational> m_coeffs(static_cast<std::size_t>(dim) + 1);
        for (int i = 0; i < dim; ++i)
            m_coeffs[static_cast<std::size_t>(i)] = -(*relation)[static_cast<std::size_t>(i)];
        m_coeffs[static_cast<std::size_t>(dim)] = 1;
        Polynomial m(std::move(m_coeffs));

        auto theta_coords = solve_in_span(powers, flatten(theta_k));
        if (!theta_coords)
            throw std::logic_error("generator not expressible in primitive power basis");

        auto factors = factor(m);
        std::optional<Polynomial> g;
        RationalInterval iv;
        for (long bits = 64;; bits *= 2) {
            RationalInterval ek = k->enclosure(bits);
            RationalInterval ey = y_enclosure(bits);
            iv = ek + Rational(t) * ey;
            int count = count_real_roots(m, iv.lo, iv.hi);
            if (count == 0)
                throw std::logic_error("enclosure lost the primitive element");
            if (count == 1) {
                for (const auto& f : factors)
                    if (count_real_roots(f, iv.lo, iv.hi) == 1)
                        g = f;
                break;
            }
            if (bits > 1'000'000)
                throw std::logic_error("could not isolate primitive element");
        }
        if (!g)
            throw std::logic_error("no factor vanishes at the primitive element");
        if (g->degree() > cap)
            throw Error(ErrorKind::FieldTooLarge, "field degree " + std::to_string(g->degree()) +
                                                      " exceeds cap " + std::to_string(cap));
        FieldPtr field = make_field_unchecked(*g, coarse_interval(*g, iv));
        FieldElement base(field, *theta_coords);
        FieldElement adjoined = (FieldElement::generator(field) - base) / FieldElement(field, Rational(t));
        return {field, base, adjoined};
    }
    throw std::logic_error("no primitive element found for the field extension");
}

} // namespace

FieldElement embed(const FieldElement& x, const Extension& ext)
{
    if (x.is_rational())
        return FieldElement(ext.field, x.rational_part());
    FieldElement acc(ext.field, Rational(0));
    const auto& c = x.coeffs();
    for (std::size_t i = c.size(); i-- > 0;) {
        acc *= ext.base_generator;
        acc = acc + c[i];
    }
    return acc;
}

namespace {

FieldElement evaluate_at(const FieldElement& x, const FieldElement& image_of_generator)
{
    if (x.is_rational())
        return FieldElement(image_of_generator.field(), x.rational_part());
    FieldElement acc(image_of_generator.field(), Rational(0));
    const auto& c = x.coeffs();
    for (std::size_t i = c.size(); i-- > 0;) {
        acc *= image_of_generator;
        acc = acc + c[i];
    }
    return acc;
}

} // namespace

Compositum compositum(const FieldPtr& a, const FieldPtr& b, int degree_cap)
{
    if (b->degree() == 1 || a->same_as(*b))
        return {a, FieldElement::generator(a), FieldElement::generator(b).in_field(a)};
    if (a->degree() == 1)
        return {b, FieldElement::generator(a).in_field(b), FieldElement::generator(b)};

    std::vector<FieldElement> h;
    const Polynomial monic_b = b->min_poly().monic();
    for (const auto& c : monic_b.coeffs())
        h.emplace_back(a, c);
    Extension ext = adjoin_root(a, h, [&](long bits) { return b->enclosure(bits); }, degree_cap);

    if (ext.field->degree() == a->degree()) {
        if (auto y = pull_back(ext.adjoined, ext.base_generator, a))
            return {a, FieldElement::generator(a), *y};
    }
    if (ext.field->degree() == b->degree()) {
        if (auto x = pull_back(ext.base_generator, ext.adjoined, b))
            return {b, *x, FieldElement::generator(b)};
    }
    return {ext.field, ext.base_generator, ext.adjoined};
}

FieldElement embed_first(const FieldElement& x, const Compositum& c)
{
    return evaluate_at(x, c.first_generator);
}

FieldElement embed_second(const FieldElement& x, const Compositum& c)
{
    return evaluate_at(x, c.second_generator);
}

void unify(std::vector<FieldElement>& elements, int degree_cap)
{
    if (elements.empty())
        return;
    FieldPtr field = NumberField::rationals();
    for (const auto& x : elements)
        if (!x.is_rational()) {
            field = x.field();
            break;
        }
    for (std::size_t i = 0; i < elements.size(); ++i) {
        FieldElement& x = elements[i];
        if (x.is_rational() || x.field()->same_as(*field)) {
            x = x.in_field(field);
            continue;
        }
        Compositum c = compositum(field, x.field(), degree_cap);
        for (std::size_t j = 0; j < i; ++j)
            elements[j] = embed_first(elements[j], c);
        x = embed_second(x, c);
        field = c.field;
    }
    for (auto& x : elements)
        x = x.in_field(field);
}

FieldElement sqrt(const FieldElement& x, int degree_cap)
{
    int s = x.sign();
    if (s < 0)
        throw Error(ErrorKind::DomainError, "square root of a negative number");
    if (s == 0)
        return x;
    if (x.is_rational()) {
        const Rational& q = x.rational_part();
        if (mpz_perfect_square_p(q.get_num_mpz_t()) && mpz_perfect_square_p(q.get_den_mpz_t())) {
            Integer n, dd;
            mpz_sqrt(n.get_mpz_t(), q.get_num_mpz_t());
            mpz_sqrt(dd.get_mpz_t(), q.get_den_mpz_t());
            return FieldElement(x.field(), make_rational(n, dd));
        }
    }
    const FieldPtr& k = x.field();
    std::vector<FieldElement> h{-x, FieldElement(k, Rational(0)), FieldElement(k, Rational(1))};
    auto y_enc = [&](long bits) {
        RationalInterval v = x.enclosure(bits + 8);
        return sqrt_enclosure(v, bits);
    };
    Extension ext = adjoin_root(k, h, y_enc, degree_cap);
    if (ext.field->degree() == k->degree()) {
        if (auto y = pull_back(ext.adjoined, ext.base_generator, k))
            return *y;
    }
    return ext.adjoined;
}

bool linearly_independent_with_one(const std::vector<FieldElement>& xs)
{
    std::vector<FieldElement> all{FieldElement::rational(1)};
    all.insert(all.end(), xs.begin(), xs.end());
    unify(all);
    std::vector<std::vector<Rational>> vecs;
    for (const auto& x : all)
        vecs.push_back(x.coeffs());
    return rank_of(vecs) == all.size();
}

// ---------------------------------------------------------------------------
// Decimal rendering

std::string to_decimal(const FieldElement& x, int significant_digits)
{
    int s = x.sign();
    if (s == 0)
        return "0";
    FieldElement a = s < 0 ? -x : x;
    // Locate exponent e with 10^e <= a < 10^(e+1).
    RationalInterval enc = a.enclosure(64);
    long e = 0;
    if (enc.hi > 0) {
        double approx = enc.hi.get_d();
        if (approx > 0 && std::isfinite(approx))
            e = static_cast<long>(std::floor(std::log10(approx)));
    }
    auto ten_pow = [](long k) {
        Integer p;
        mpz_ui_pow_ui(p.get_mpz_t(), 10, static_cast<unsigned long>(k < 0 ? -k : k));
        return k < 0 ? Rational(Integer(1), p) : Rational(p);
    };
    auto norm = [](Rational q) {
        q.canonicalize();
        return q;
    };
    while ((a - norm(ten_pow(e))).sign() < 0)
        --e;
    while ((a - norm(ten_pow(e + 1))).sign() >= 0)
        ++e;
    long shift = significant_digits - 1 - e;
    FieldElement scaled = norm(ten_pow(shift)) * a + Rational(1, 2);
    Integer n = scaled.floor();
    Integer limit;
    mpz_ui_pow_ui(limit.get_mpz_t(), 10, static_cast<unsigned long>(significant_digits));
    if (n >= limit) {
        n /= 10;
        ++e;
        --shift;
    }
    std::string digits = n.get_str();
    std::string out = s < 0 ? "-" : "";
    if (e >= -7 && e < 16) {
        if (shift <= 0) {
            out += digits + std::string(static_cast<std::size_t>(-shift), '0');
        } else if (static_cast<long>(digits.size()) > shift) {
            std::size_t int_len = digits.size() - static_cast<std::size_t>(shift);
            out += digits.substr(0, int_len) + "." + digits.substr(int_len);
        } else {
            out += "0." + std::string(static_cast<std::size_t>(shift) - digits.size(), '0') + digits;
        }
        return out;
    }
    out += digits.substr(0, 1);
    if (digits.size() > 1)
        out += "." + digits.substr(1);
    out += "e" + std::to_string(e);
    return out;
}

int delta(const FieldElement& s, const FieldElement& t)
{
    for (const FieldElement* x : {&s, &t})
        if (x->sign() < 0 || (*x - Rational(1)).sign() >= 0)
            throw Error(ErrorKind::DomainError, "delta expects arguments in [0, 1)");
    return (s + t - Rational(1)).sign() >= 0 ? 1 : 0;
}

double to_double(const FieldElement& x)
{
    RationalInterval e = x.enclosure(64);
    return Rational((e.lo + e.hi) / 2).get_d();
}

} // namespace abp::exact
