#include "fqt/factorization.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace fqt {

namespace {

// q-power Frobenius on F_q[t]/(f) as a matrix: row j holds t^{jq} mod f.
// Raising to the q-th power is F_q-linear, so (sum v_j t^j)^q = sum v_j row_j.
class FrobeniusMap {
public:
    explicit FrobeniusMap(const Polynomial& f) : field_(f.field()), n_(f.deg()), rows_(n_)
    {
        const Polynomial tq = powmod(Polynomial::t(field_), f.F().cardinality(), f);
        Polynomial row = Polynomial::constant(field_, 1);
        for (std::size_t j = 0; j < n_; ++j) {
            rows_[j] = row.coeffs();
            rows_[j].resize(n_, 0);
            if (j + 1 < n_) row = (row * tq) % f;
        }
    }

    // v^q mod f for v already reduced mod f.
    Polynomial apply(const Polynomial& v) const
    {
        const Field& k = *field_;
        std::vector<Code> out(n_, 0);
        const auto& c = v.coeffs();
        for (std::size_t j = 0; j < c.size(); ++j) {
            if (c[j] == 0) continue;
            const auto& row = rows_[j];
            for (std::size_t i = 0; i < n_; ++i)
                if (row[i] != 0) out[i] = k.add(out[i], k.mul(c[j], row[i]));
        }
        return {field_, std::move(out)};
    }

private:
    FieldPtr field_;
    std::size_t n_;
    std::vector<std::vector<Code>> rows_;
};

std::vector<unsigned> prime_divisors(unsigned n)
{
    std::vector<unsigned> out;
    for (unsigned d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

// f(t) = h(t)^p when f' = 0: coefficient of t^{kp} goes to t^k after a p-th root.
Polynomial pth_root(const Polynomial& f)
{
    const Field& k = f.F();
    const unsigned p = k.characteristic();
    std::vector<Code> out(f.deg() / p + 1, 0);
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = k.pth_root(f.coeff(i * p));
    return {f.field(), std::move(out)};
}

void squarefree_rec(const Polynomial& f, unsigned scale, std::map<unsigned, Polynomial>& acc)
{
    if (f.is_constant()) return;
    auto put = [&](const Polynomial& part, unsigned m) {
        auto it = acc.find(m);
        if (it == acc.end())
            acc.emplace(m, part);
        else
            it->second = it->second * part;
    };

    Polynomial c = gcd(f, f.derivative());
    Polynomial w = f / c;
    unsigned i = 1;
    while (!w.is_constant()) {
        Polynomial y = gcd(w, c);
        Polynomial z = w / y;
        if (!z.is_constant()) put(z.monic(), i * scale);
        ++i;
        w = std::move(y);
        c = c / w;
    }
    if (!c.is_constant()) squarefree_rec(pth_root(c.monic()), scale * f.F().characteristic(), acc);
}

// Splits a squarefree monic f into (degree, product of all its irreducible
// factors of that degree).
std::vector<std::pair<unsigned, Polynomial>> distinct_degree(const Polynomial& f)
{
    std::vector<std::pair<unsigned, Polynomial>> out;
    if (f.is_constant()) return out;
    const FrobeniusMap frob(f);
    const Polynomial t = Polynomial::t(f.field());
    Polynomial rest = f;
    Polynomial h = t % f;
    for (unsigned d = 1; 2 * d <= rest.deg(); ++d) {
        h = frob.apply(h);
        Polynomial g = gcd(h - t, rest);
        if (!g.is_one()) {
            rest = rest / g;
            out.emplace_back(d, std::move(g));
            if (rest.is_constant()) break;
        }
    }
    if (!rest.is_constant()) out.emplace_back(static_cast<unsigned>(rest.deg()), rest.monic());
    return out;
}

// Counter-based generator: each call mixes (key, counter) through splitmix64.
class SplitMix {
public:
    explicit SplitMix(std::uint64_t key) : key_(key) {}
    std::uint64_t next()
    {
        std::uint64_t z = key_ + 0x9e3779b97f4a7c15ULL * ++counter_;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

private:
    std::uint64_t key_;
    std::uint64_t counter_ = 0;
};

std::uint64_t hash_codes(const Polynomial& f)
{
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (Code c : f.coeffs()) {
        for (int b = 0; b < 4; ++b) {
            h ^= (c >> (8 * b)) & 0xff;
            h *= 0x100000001b3ULL;
        }
    }
    return h;
}

// Cantor-Zassenhaus on g, a product of distinct monic irreducibles of degree d.
void equal_degree(const Polynomial& g, unsigned d, const FrobeniusMap& frob, SplitMix& rng,
                  std::vector<Polynomial>& out)
{
    const std::size_t n = g.deg();
    if (n == d) {
        out.push_back(g);
        return;
    }
    const Field& k = g.F();
    const auto q = k.cardinality();
    while (true) {
        std::vector<Code> rnd(n);
        for (auto& c : rnd) c = static_cast<Code>(rng.next() % q);
        Polynomial a(g.field(), std::move(rnd));
        if (a.is_constant()) continue;

        Polynomial b = Polynomial::zero(g.field());
        if (k.odd()) {
            // a^{(q^d-1)/2} = (a^{1+q+...+q^{d-1}})^{(q-1)/2}
            Polynomial s = a, prod = a;
            for (unsigned i = 1; i < d; ++i) {
                s = frob.apply(s) % g;
                prod = (prod * s) % g;
            }
            b = powmod(prod, (q - 1) / 2, g) - Polynomial::constant(g.field(), 1);
        } else {
            // Absolute trace a + a^2 + ... + a^{2^{nu d - 1}}.
            Polynomial s = a;
            b = a;
            for (unsigned i = 1; i < k.extension_degree() * d; ++i) {
                s = (s * s) % g;
                b = b + s;
            }
        }
        if (b.is_zero()) continue;
        Polynomial split = gcd(b, g);
        if (split.is_one() || split.deg() == n) continue;
        equal_degree(split, d, frob, rng, out);
        equal_degree(g / split, d, frob, rng, out);
        return;
    }
}

bool canonical_less(const Polynomial& a, const Polynomial& b)
{
    if (a.deg() != b.deg()) return a.deg() < b.deg();
    return a.coeffs() < b.coeffs();
}

// (degree, multiplicity) of every distinct irreducible factor, without
// computing the factors themselves.
std::vector<std::pair<unsigned, unsigned>> factor_degrees(const Polynomial& f)
{
    std::vector<std::pair<unsigned, unsigned>> out;
    for (const auto& [part, mult] : squarefree_decomposition(f))
        for (const auto& [d, block] : distinct_degree(part))
            for (std::size_t i = 0; i < block.deg() / d; ++i) out.emplace_back(d, mult);
    return out;
}

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b)
{
    if (b != 0 && a > UINT64_MAX / b) throw PolynomialError("integer overflow in Euler phi");
    return a * b;
}

std::uint64_t ipow(std::uint64_t base, unsigned e)
{
    std::uint64_t r = 1;
    for (unsigned i = 0; i < e; ++i) r = checked_mul(r, base);
    return r;
}

}  // namespace

Polynomial Factorization::expand(const FieldPtr& field) const
{
    Polynomial r = Polynomial::constant(field, unit);
    for (const auto& f : factors)
        for (unsigned i = 0; i < f.multiplicity; ++i) r = r * f.poly;
    return r;
}

FactorizationType::FactorizationType(std::vector<unsigned> parts) : parts_(std::move(parts))
{
    std::sort(parts_.begin(), parts_.end(), std::greater<>());
    if (!parts_.empty() && parts_.back() == 0) throw PolynomialError("partition with a zero part");
    total_ = std::accumulate(parts_.begin(), parts_.end(), 0u);
}

std::string FactorizationType::to_string() const
{
    std::string s = "(";
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(parts_[i]);
    }
    return s + ")";
}

std::vector<FactorizationType> partitions_of(unsigned n)
{
    std::vector<FactorizationType> out;
    std::vector<unsigned> cur;
    auto rec = [&](auto&& self, unsigned remaining, unsigned max_part) -> void {
        if (remaining == 0) {
            out.emplace_back(cur);
            return;
        }
        for (unsigned part = std::min(remaining, max_part); part >= 1; --part) {
            cur.push_back(part);
            self(self, remaining - part, part);
            cur.pop_back();
        }
    };
    rec(rec, n, n);
    return out;
}

std::vector<std::pair<Polynomial, unsigned>> squarefree_decomposition(const Polynomial& f)
{
    if (f.is_zero()) throw PolynomialError("squarefree decomposition of the zero polynomial");
    std::map<unsigned, Polynomial> acc;
    squarefree_rec(f.monic(), 1, acc);
    std::vector<std::pair<Polynomial, unsigned>> out;
    for (auto& [m, part] : acc) out.emplace_back(std::move(part), m);
    return out;
}

bool is_irreducible(const Polynomial& f)
{
    if (f.is_zero() || f.is_constant()) throw PolynomialError("irreducibility of a constant polynomial");
    const unsigned n = static_cast<unsigned>(f.deg());
    if (n == 1) return true;
    const Polynomial g = f.monic();
    const FrobeniusMap frob(g);
    const Polynomial t = Polynomial::t(g.field());

    std::vector<Polynomial> powers;  // powers[i] = t^{q^i} mod g
    powers.reserve(n + 1);
    powers.push_back(t % g);
    for (unsigned i = 1; i <= n; ++i) powers.push_back(frob.apply(powers.back()));
    if (powers[n] != powers[0]) return false;
    for (unsigned l : prime_divisors(n))
        if (!gcd(powers[n / l] - t, g).is_one()) return false;
    return true;
}

Factorization factor(const Polynomial& f, std::uint64_t seed)
{
    if (f.is_zero()) throw PolynomialError("factorization of the zero polynomial");
    Factorization out{f.leading(), {}};
    if (f.is_constant()) return out;

    SplitMix rng(seed ^ hash_codes(f));
    for (const auto& [part, mult] : squarefree_decomposition(f)) {
        const FrobeniusMap frob(part);
        for (const auto& [d, block] : distinct_degree(part)) {
            std::vector<Polynomial> pieces;
            equal_degree(block, d, frob, rng, pieces);
            for (auto& piece : pieces) out.factors.push_back({piece.monic(), mult});
        }
    }
    std::sort(out.factors.begin(), out.factors.end(),
              [](const Factor& a, const Factor& b) { return canonical_less(a.poly, b.poly); });
    return out;
}

int mobius(const Polynomial& f, std::uint64_t)
{
    if (f.is_zero()) throw PolynomialError("mobius of the zero polynomial");
    if (f.is_constant()) return 1;
    const Polynomial g = f.monic();
    const Polynomial dg = g.derivative();
    if (dg.is_zero() || !gcd(g, dg).is_one()) return 0;
    std::size_t r = 0;
    for (const auto& [d, block] : distinct_degree(g)) r += block.deg() / d;
    return r % 2 == 0 ? 1 : -1;
}

int mobius_via_discriminant(const Polynomial& f)
{
    const Field& k = f.F();
    if (!k.odd()) throw PolynomialError("discriminant route needs odd q");
    if (f.is_constant()) throw PolynomialError("discriminant route needs deg f >= 1");
    if (!f.is_monic()) throw PolynomialError("discriminant route needs a monic polynomial");
    if (f.derivative().is_zero()) throw PolynomialError("inseparable input: f' = 0");
    const int chi = k.quadratic_character(discriminant(f));
    return f.deg() % 2 == 0 ? chi : -chi;
}

FactorizationType factorization_type(const Polynomial& f, std::uint64_t)
{
    if (f.is_zero() || f.is_constant()) throw PolynomialError("factorization type of a constant polynomial");
    std::vector<unsigned> parts;
    for (const auto& [d, mult] : factor_degrees(f))
        for (unsigned i = 0; i < mult; ++i) parts.push_back(d);
    return FactorizationType(std::move(parts));
}

std::optional<FactorizationType> frobenius_class(const Polynomial& f, std::uint64_t seed)
{
    if (f.is_zero() || f.is_constant()) throw PolynomialError("Frobenius class of a constant polynomial");
    const Polynomial df = f.derivative();
    if (df.is_zero() || !gcd(f, df).is_one()) return std::nullopt;
    return factorization_type(f, seed);
}

std::uint64_t euler_phi(const Polynomial& Q, std::uint64_t)
{
    if (Q.is_zero() || Q.is_constant()) throw PolynomialError("Euler phi of a constant polynomial");
    const std::uint64_t q = Q.F().cardinality();
    std::uint64_t phi = 1;
    for (const auto& [d, e] : factor_degrees(Q))
        phi = checked_mul(phi, ipow(q, d * e) - ipow(q, d * (e - 1)));
    return phi;
}

Rational cauchy_probability(const FactorizationType& tau, unsigned n)
{
    if (tau.total() != n)
        throw PolynomialError("partition " + tau.to_string() + " does not sum to " + std::to_string(n));
    std::map<unsigned, unsigned> counts;
    for (unsigned part : tau.parts()) ++counts[part];
    Rational r(1);
    for (const auto& [j, c] : counts) {
        std::int64_t den = 1;
        for (unsigned i = 0; i < c; ++i) den *= j;
        for (unsigned i = 2; i <= c; ++i) den *= i;
        r /= den;
    }
    return r;
}

}  // namespace fqt
