#include "abp/exact/factor.hpp"

#include "abp/error.hpp"

#include <algorithm>
#include <map>
#include <optional>

namespace abp::exact {

namespace {

using IntPoly = std::vector<Integer>; // low degree first

// ---------------------------------------------------------------------------
// Integer factorization (trial division + Pollard rho)

Integer pollard_rho(const Integer& n)
{
    if (mpz_even_p(n.get_mpz_t()))
        return 2;
    for (unsigned long c = 1;; ++c) {
        Integer x = 2, y = 2, d = 1;
        auto step = [&](Integer& v) {
            v = v * v + c;
            mpz_mod(v.get_mpz_t(), v.get_mpz_t(), n.get_mpz_t());
        };
        while (d == 1) {
            step(x);
            step(y);
            step(y);
            Integer diff = abs(x - y);
            mpz_gcd(d.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
        }
        if (d != n)
            return d;
    }
}

void prime_factors(Integer n, std::map<Integer, int>& out)
{
    if (n < 0)
        n = -n;
    if (n < 2)
        return;
    for (unsigned long p = 2; p < 1000; p += (p == 2 ? 1 : 2)) {
        while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
            out[Integer(p)]++;
            n /= p;
        }
    }
    if (n == 1)
        return;
    std::vector<Integer> stack{n};
    while (!stack.empty()) {
        Integer m = stack.back();
        stack.pop_back();
        if (m == 1)
            continue;
        if (mpz_probab_prime_p(m.get_mpz_t(), 30) > 0) {
            out[m]++;
            continue;
        }
        Integer d = pollard_rho(m);
        stack.push_back(d);
        stack.push_back(m / d);
    }
}

// ---------------------------------------------------------------------------
// Polynomials over F_p (p < 2^31), low degree first, trimmed.

using ModPoly = std::vector<std::uint64_t>;

void trim(ModPoly& a)
{
    while (!a.empty() && a.back() == 0)
        a.pop_back();
}

std::uint64_t inv_mod(std::uint64_t a, std::uint64_t p)
{
    std::uint64_t result = 1, base = a % p, e = p - 2;
    while (e) {
        if (e & 1)
            result = result * base % p;
        base = base * base % p;
        e >>= 1;
    }
    return result;
}

ModPoly mod_rem(ModPoly a, const ModPoly& b, std::uint64_t p)
{
    const std::size_t db = b.size() - 1;
    const std::uint64_t inv = inv_mod(b.back(), p);
    while (a.size() >= b.size()) {
        std::uint64_t q = a.back() * inv % p;
        std::size_t shift = a.size() - b.size();
        for (std::size_t j = 0; j <= db; ++j)
            a[shift + j] = (a[shift + j] + p - q * b[j] % p) % p;
        trim(a);
    }
    return a;
}

ModPoly mod_div(ModPoly a, const ModPoly& b, std::uint64_t p)
{
    if (a.size() < b.size())
        return {};
    ModPoly q(a.size() - b.size() + 1, 0);
    const std::uint64_t inv = inv_mod(b.back(), p);
    while (a.size() >= b.size()) {
        std::uint64_t c = a.back() * inv % p;
        std::size_t shift = a.size() - b.size();
        q[shift] = c;
        for (std::size_t j = 0; j < b.size(); ++j)
            a[shift + j] = (a[shift + j] + p - c * b[j] % p) % p;
        trim(a);
        if (a.size() < b.size())
            break;
    }
    trim(q);
    return q;
}

ModPoly mod_mul(const ModPoly& a, const ModPoly& b, const ModPoly& m, std::uint64_t p)
{
    if (a.empty() || b.empty())
        return {};
    ModPoly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            r[i + j] = (r[i + j] + a[i] * b[j]) % p;
    trim(r);
    return mod_rem(std::move(r), m, p);
}

ModPoly mod_gcd(ModPoly a, ModPoly b, std::uint64_t p)
{
    while (!b.empty()) {
        ModPoly r = mod_rem(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty()) {
        std::uint64_t inv = inv_mod(a.back(), p);
        for (auto& c : a)
            c = c * inv % p;
    }
    return a;
}

ModPoly reduce_mod(const IntPoly& f, std::uint64_t p)
{
    ModPoly r(f.size());
    for (std::size_t i = 0; i < f.size(); ++i) {
        Integer c;
        mpz_fdiv_r_ui(c.get_mpz_t(), f[i].get_mpz_t(), p);
        r[i] = c.get_ui();
    }
    trim(r);
    return r;
}

// Degrees of the irreducible factors of f mod p, or nullopt when p divides the
// leading coefficient or f is not squarefree mod p.
std::optional<std::vector<int>> factor_degrees_mod(const IntPoly& f, std::uint64_t p)
{
    ModPoly a = reduce_mod(f, p);
    if (a.size() != f.size())
        return std::nullopt;
    ModPoly da;
    for (std::size_t i = 1; i < a.size(); ++i)
        da.push_back(a[i] * (i % p) % p);
    trim(da);
    if (da.empty() || mod_gcd(a, da, p).size() != 1)
        return std::nullopt;
    std::uint64_t inv = inv_mod(a.back(), p);
    for (auto& c : a)
        c = c * inv % p;

    std::vector<int> degrees;
    const ModPoly x{0, 1};
    ModPoly h = mod_rem(x, a, p);
    for (int d = 1; 2 * d <= static_cast<int>(a.size()) - 1; ++d) {
        // h <- h^p mod a
        ModPoly base = h, acc{1};
        for (std::uint64_t e = p; e; e >>= 1) {
            if (e & 1)
                acc = mod_mul(acc, base, a, p);
            base = mod_mul(base, base, a, p);
        }
        h = acc;
        ModPoly hx = h;
        hx.resize(std::max<std::size_t>(hx.size(), 2), 0);
        hx[1] = (hx[1] + p - 1) % p;
        trim(hx);
        ModPoly g = mod_gcd(a, hx, p);
        if (g.size() > 1) {
            int count = static_cast<int>(g.size() - 1) / d;
            for (int i = 0; i < count; ++i)
                degrees.push_back(d);
            a = mod_div(a, g, p);
            h = mod_rem(h, a, p);
        }
    }
    if (a.size() > 1)
        degrees.push_back(static_cast<int>(a.size()) - 1);
    return degrees;
}

// ---------------------------------------------------------------------------
// Integer polynomial helpers

int deg(const IntPoly& f) { return static_cast<int>(f.size()) - 1; }

Integer eval(const IntPoly& f, const Integer& x)
{
    Integer acc = 0;
    for (auto it = f.rbegin(); it != f.rend(); ++it)
        acc = acc * x + *it;
    return acc;
}

std::optional<IntPoly> exact_quotient(const IntPoly& f, const IntPoly& g)
{
    if (deg(g) > deg(f) || g.empty())
        return std::nullopt;
    IntPoly rem = f;
    IntPoly quot(f.size() - g.size() + 1);
    for (int i = deg(f); i >= deg(g); --i) {
        const Integer& top = rem[static_cast<std::size_t>(i)];
        if (top == 0)
            continue;
        if (!mpz_divisible_p(top.get_mpz_t(), g.back().get_mpz_t()))
            return std::nullopt;
        Integer q = top / g.back();
        for (int j = 0; j <= deg(g); ++j)
            rem[static_cast<std::size_t>(i - deg(g) + j)] -= q * g[static_cast<std::size_t>(j)];
        quot[static_cast<std::size_t>(i - deg(g))] = q;
    }
    for (const auto& r : rem)
        if (r != 0)
            return std::nullopt;
    return quot;
}

IntPoly make_primitive(IntPoly f)
{
    Integer g = 0;
    for (const auto& c : f)
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (f.back() < 0)
        g = -g;
    for (auto& c : f)
        c /= g;
    return f;
}

std::set<int> subset_sums(const std::vector<int>& parts)
{
    std::set<int> sums{0};
    for (int d : parts) {
        std::set<int> next = sums;
        for (int s : sums)
            next.insert(s + d);
        sums = std::move(next);
    }
    return sums;
}

std::set<int> possible_degrees_int(const IntPoly& f)
{
    const int n = deg(f);
    std::set<int> allowed;
    for (int d = 0; d <= n; ++d)
        allowed.insert(d);
    static const std::uint64_t primes[] = {3,  5,  7,  11, 13, 17, 19, 23, 29, 31, 37, 41,
                                           43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97};
    int used = 0;
    for (std::uint64_t p : primes) {
        auto degrees = factor_degrees_mod(f, p);
        if (!degrees)
            continue;
        std::set<int> sums = subset_sums(*degrees);
        std::set<int> keep;
        std::set_intersection(allowed.begin(), allowed.end(), sums.begin(), sums.end(),
                              std::inserter(keep, keep.begin()));
        allowed = std::move(keep);
        if (++used == 8 || allowed.size() == 2)
            break;
    }
    return allowed;
}

class KroneckerSearch {
public:
    KroneckerSearch(const IntPoly& f, std::uint64_t& budget) : f_(f), budget_(budget) {}

    std::optional<IntPoly> find(int k)
    {
        if (!choose_nodes(k))
            return found_;
        table_.assign(nodes_.size(), {});
        if (dfs(0))
            return found_;
        return std::nullopt;
    }

private:
    // Picks k+1 integer nodes with small divisor counts. Returns false when an
    // integer root was hit (found_ is then the linear factor).
    bool choose_nodes(int k)
    {
        struct Candidate {
            Integer x, value;
        };
        std::vector<Candidate> cands;
        const long range = std::max(12, 3 * k + 6);
        for (long x = -range; x <= range; ++x) {
            Integer v = eval(f_, Integer(x));
            if (v == 0) {
                found_ = IntPoly{Integer(-x), Integer(1)};
                return false;
            }
            cands.push_back({Integer(x), v});
        }
        std::sort(cands.begin(), cands.end(),
                  [](const Candidate& a, const Candidate& b) { return abs(a.value) < abs(b.value); });
        cands.resize(std::min<std::size_t>(cands.size(), static_cast<std::size_t>(2 * k + 8)));
        std::vector<std::pair<std::size_t, std::size_t>> scored; // (divisor count, index)
        std::vector<std::vector<Integer>> divs(cands.size());
        for (std::size_t i = 0; i < cands.size(); ++i) {
            divs[i] = divisors(cands[i].value);
            scored.emplace_back(divs[i].size(), i);
        }
        std::sort(scored.begin(), scored.end());
        nodes_.clear();
        choices_.clear();
        for (int j = 0; j <= k; ++j) {
            std::size_t idx = scored[static_cast<std::size_t>(j)].second;
            nodes_.push_back(cands[idx].x);
            std::vector<Integer> signed_divs;
            for (const auto& d : divs[idx]) {
                signed_divs.push_back(d);
                if (j > 0)
                    signed_divs.push_back(-d);
            }
            choices_.push_back(std::move(signed_divs));
        }
        return true;
    }

    bool dfs(std::size_t j)
    {
        const std::size_t k = nodes_.size() - 1;
        for (const auto& y : choices_[j]) {
            if (budget_-- == 0)
                throw Error(ErrorKind::Reducible, "factorization search budget exhausted");
            std::vector<Integer>& row = table_[j];
            row.assign(j + 1, 0);
            row[0] = y;
            bool ok = true;
            for (std::size_t i = 1; i <= j; ++i) {
                Integer num = row[i - 1] - table_[j - 1][i - 1];
                Integer den = nodes_[j] - nodes_[j - i];
                if (!mpz_divisible_p(num.get_mpz_t(), den.get_mpz_t())) {
                    ok = false;
                    break;
                }
                mpz_divexact(row[i].get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
            }
            if (!ok)
                continue;
            if (j < k) {
                if (dfs(j + 1))
                    return true;
                continue;
            }
            const Integer& lead = row[k];
            if (lead == 0 || !mpz_divisible_p(f_.back().get_mpz_t(), lead.get_mpz_t()))
                continue;
            IntPoly g = newton_to_monomial();
            if (exact_quotient(f_, make_primitive(g))) {
                found_ = make_primitive(g);
                return true;
            }
        }
        return false;
    }

    IntPoly newton_to_monomial() const
    {
        const std::size_t k = nodes_.size() - 1;
        IntPoly g{table_[k][k]};
        for (std::size_t i = k; i-- > 0;) {
            // g <- g * (x - x_i) + c_i
            IntPoly next(g.size() + 1, 0);
            for (std::size_t t = 0; t < g.size(); ++t) {
                next[t + 1] += g[t];
                next[t] -= g[t] * nodes_[i];
            }
            next[0] += table_[i][i];
            g = std::move(next);
        }
        while (!g.empty() && g.back() == 0)
            g.pop_back();
        return g;
    }

    const IntPoly& f_;
    std::uint64_t& budget_;
    std::vector<Integer> nodes_;
    std::vector<std::vector<Integer>> choices_;
    std::vector<std::vector<Integer>> table_;
    std::optional<IntPoly> found_;
};

IntPoly to_int_poly(const Polynomial& p) { return p.primitive_integer(); }

} // namespace

std::vector<Integer> divisors(const Integer& n)
{
    std::map<Integer, int> pf;
    prime_factors(n, pf);
    std::vector<Integer> divs{Integer(1)};
    for (const auto& [prime, mult] : pf) {
        std::size_t current = divs.size();
        Integer pk = 1;
        for (int e = 1; e <= mult; ++e) {
            pk *= prime;
            for (std::size_t i = 0; i < current; ++i)
                divs.push_back(divs[i] * pk);
        }
    }
    std::sort(divs.begin(), divs.end());
    return divs;
}

std::set<int> possible_factor_degrees(const Polynomial& p)
{
    return possible_degrees_int(to_int_poly(p.squarefree_part()));
}

std::vector<Polynomial> factor(const Polynomial& p, std::uint64_t budget)
{
    std::vector<Polynomial> out;
    if (p.degree() < 1)
        return out;
    IntPoly f = to_int_poly(p.squarefree_part());
    std::vector<IntPoly> pending{f};
    while (!pending.empty()) {
        IntPoly g = pending.back();
        pending.pop_back();
        const int n = deg(g);
        if (n <= 1) {
            if (n == 1)
                out.push_back(Polynomial::from_integers(g));
            continue;
        }
        std::set<int> allowed = possible_degrees_int(g);
        std::optional<IntPoly> piece;
        for (int k = 1; 2 * k <= n && !piece; ++k) {
            if (!allowed.count(k))
                continue;
            KroneckerSearch search(g, budget);
            piece = search.find(k);
        }
        if (!piece) {
            out.push_back(Polynomial::from_integers(g));
            continue;
        }
        auto rest = exact_quotient(g, *piece);
        pending.push_back(*piece);
        pending.push_back(make_primitive(*rest));
    }
    std::sort(out.begin(), out.end(), [](const Polynomial& a, const Polynomial& b) {
        if (a.degree() != b.degree())
            return a.degree() < b.degree();
        return a.coeffs() < b.coeffs();
    });
    return out;
}

bool is_irreducible(const Polynomial& p)
{
    if (p.degree() < 1)
        return false;
    if (p.squarefree_part().degree() != p.degree())
        return false;
    return factor(p).size() == 1;
}

} // namespace abp::exact
