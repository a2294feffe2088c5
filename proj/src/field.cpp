#include "fqt/field.hpp"

#include <algorithm>
#include <sstream>

namespace fqt {

bool is_prime(std::uint64_t n)
{
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

namespace {

using Coeffs = std::vector<std::uint64_t>;

void trim(Coeffs& a)
{
    while (!a.empty() && a.back() == 0) a.pop_back();
}

std::uint64_t inv_mod(std::uint64_t a, std::uint64_t p)
{
    std::uint64_t r = 1, b = a % p, e = p - 2;
    while (e) {
        if (e & 1) r = r * b % p;
        b = b * b % p;
        e >>= 1;
    }
    return r;
}

// Remainder of a modulo b over F_p, b nonzero.
Coeffs rem_mod_p(Coeffs a, const Coeffs& b, std::uint64_t p)
{
    trim(a);
    const std::uint64_t lead_inv = inv_mod(b.back(), p);
    while (a.size() >= b.size()) {
        const std::uint64_t c = a.back() * lead_inv % p;
        const std::size_t shift = a.size() - b.size();
        for (std::size_t i = 0; i < b.size(); ++i)
            a[shift + i] = (a[shift + i] + (p - c) * b[i]) % p;
        trim(a);
    }
    return a;
}

// Trial division by every monic polynomial of degree <= deg/2.
bool irreducible_mod_p(const Coeffs& f, std::uint64_t p)
{
    const std::size_t n = f.size() - 1;
    if (n == 0) return false;
    for (std::size_t d = 1; d <= n / 2; ++d) {
        Coeffs cand(d + 1, 0);
        cand[d] = 1;
        std::uint64_t count = 1;
        for (std::size_t i = 0; i < d; ++i) count *= p;
        for (std::uint64_t k = 0; k < count; ++k) {
            std::uint64_t r = k;
            for (std::size_t i = 0; i < d; ++i) {
                cand[i] = r % p;
                r /= p;
            }
            if (rem_mod_p(f, cand, p).empty()) return false;
        }
    }
    return true;
}

std::vector<Code> smallest_irreducible(std::uint32_t p, unsigned nu)
{
    std::uint64_t count = 1;
    for (unsigned i = 0; i < nu; ++i) count *= p;
    // Numeric order of k equals lexicographic order on (c_{nu-1}, ..., c_0).
    for (std::uint64_t k = 0; k < count; ++k) {
        Coeffs f(nu + 1, 0);
        f[nu] = 1;
        std::uint64_t r = k;
        for (unsigned i = 0; i < nu; ++i) {
            f[i] = r % p;
            r /= p;
        }
        if (irreducible_mod_p(f, p)) return {f.begin(), f.end()};
    }
    throw FieldError("no irreducible polynomial found");  // unreachable
}

}  // namespace

std::shared_ptr<const Field> Field::make(std::uint64_t p, unsigned nu,
                                         std::optional<std::vector<Code>> modulus)
{
    if (!is_prime(p)) throw FieldError("characteristic " + std::to_string(p) + " is not prime");
    if (nu == 0) throw FieldError("extension degree must be at least 1");
    if (p >= max_prime) throw FieldError("characteristic too large");

    std::uint64_t q = 1;
    for (unsigned i = 0; i < nu; ++i) {
        q *= p;
        if (nu > 1 && q > max_extension_order)
            throw FieldError("field order " + std::to_string(p) + "^" + std::to_string(nu) +
                             " exceeds the supported range");
    }

    std::vector<Code> mod;
    if (modulus) {
        mod = *modulus;
        if (mod.size() != nu + 1 || mod.back() != 1)
            throw FieldError("modulus must be monic of degree " + std::to_string(nu));
        if (std::any_of(mod.begin(), mod.end(), [p](Code c) { return c >= p; }))
            throw FieldError("modulus coefficient out of range");
        if (!irreducible_mod_p({mod.begin(), mod.end()}, p))
            throw FieldError("modulus is not irreducible over F_" + std::to_string(p));
    } else if (nu == 1) {
        mod = {0, 1};
    } else {
        mod = smallest_irreducible(static_cast<std::uint32_t>(p), nu);
    }
    return std::shared_ptr<const Field>(new Field(static_cast<std::uint32_t>(p), nu, std::move(mod)));
}

std::shared_ptr<const Field> Field::of_order(std::uint64_t q)
{
    if (q < 2) throw FieldError("field order must be at least 2");
    std::uint64_t p = 2;
    while (q % p != 0) ++p;
    unsigned nu = 0;
    std::uint64_t r = q;
    while (r % p == 0) {
        r /= p;
        ++nu;
    }
    if (r != 1) throw FieldError(std::to_string(q) + " is not a prime power");
    return make(p, nu);
}

Field::Field(std::uint32_t p, unsigned nu, std::vector<Code> modulus)
    : p_(p), nu_(nu), q_(1), modulus_(std::move(modulus))
{
    for (unsigned i = 0; i < nu_; ++i) q_ *= p_;
    build_tables();
}

void Field::build_tables()
{
    if (nu_ > 1) {
        neg_table_.resize(q_);
        for (Code a = 0; a < q_; ++a) {
            auto c = coords(a);
            for (auto& x : c) x = x == 0 ? 0 : p_ - x;
            neg_table_[a] = from_coords(c);
        }
        if (std::uint64_t{q_} * q_ <= (1u << 16)) {
            add_table_.resize(std::size_t{q_} * q_);
            for (Code a = 0; a < q_; ++a)
                for (Code b = 0; b < q_; ++b) add_table_[std::size_t{a} * q_ + b] = add_digits(a, b);
        }

        // Find a generator of the multiplicative group by brute force.
        std::vector<std::uint64_t> prime_divisors;
        std::uint64_t m = q_ - 1;
        for (std::uint64_t d = 2; d * d <= m; ++d) {
            if (m % d == 0) {
                prime_divisors.push_back(d);
                while (m % d == 0) m /= d;
            }
        }
        if (m > 1) prime_divisors.push_back(m);

        auto slow_pow = [this](Code a, std::uint64_t e) {
            Code r = 1;
            while (e) {
                if (e & 1) r = mul_slow(r, a);
                a = mul_slow(a, a);
                e >>= 1;
            }
            return r;
        };
        Code gen = 0;
        for (Code g = 2; g < q_ && gen == 0; ++g) {
            bool ok = true;
            for (auto d : prime_divisors)
                if (slow_pow(g, (q_ - 1) / d) == 1) {
                    ok = false;
                    break;
                }
            if (ok) gen = g;
        }
        exp_.resize(q_ - 1);
        log_.assign(q_, 0);
        Code x = 1;
        for (std::uint32_t e = 0; e < q_ - 1; ++e) {
            exp_[e] = x;
            log_[x] = e;
            x = mul_slow(x, gen);
        }
    }

    if (p_ != 2 && q_ <= (1u << 20)) {
        chi_.assign(q_, -1);
        chi_[0] = 0;
        for (Code a = 1; a < q_; ++a) chi_[mul(a, a)] = 1;
    }
}

Code Field::add_digits(Code a, Code b) const
{
    Code result = 0, scale = 1;
    for (unsigned i = 0; i < nu_; ++i) {
        Code s = a % p_ + b % p_;
        if (s >= p_) s -= p_;
        result += s * scale;
        scale *= p_;
        a /= p_;
        b /= p_;
    }
    return result;
}

// Schoolbook product of coordinate vectors reduced modulo the modulus.
Code Field::mul_slow(Code a, Code b) const
{
    const auto ca = coords(a), cb = coords(b);
    std::vector<std::uint64_t> prod(2 * nu_ - 1, 0);
    for (unsigned i = 0; i < nu_; ++i)
        for (unsigned j = 0; j < nu_; ++j) prod[i + j] = (prod[i + j] + std::uint64_t{ca[i]} * cb[j]) % p_;
    for (std::size_t k = prod.size(); k-- > nu_;) {
        const std::uint64_t c = prod[k];
        if (c == 0) continue;
        for (unsigned i = 0; i <= nu_; ++i)
            prod[k - nu_ + i] = (prod[k - nu_ + i] + (p_ - c) * modulus_[i]) % p_;
    }
    std::vector<Code> out(prod.begin(), prod.begin() + nu_);
    return from_coords(out);
}

Code Field::inv(Code a) const
{
    if (a == 0) throw FieldError("inverse of zero");
    if (nu_ == 1) return static_cast<Code>(inv_mod(a, p_));
    return exp_[log_[a] == 0 ? 0 : q_ - 1 - log_[a]];
}

Code Field::pow(Code a, std::uint64_t e) const
{
    Code r = 1;
    while (e) {
        if (e & 1) r = mul(r, a);
        a = mul(a, a);
        e >>= 1;
    }
    return r;
}

Code Field::from_int(std::int64_t k) const
{
    std::int64_t r = k % static_cast<std::int64_t>(p_);
    if (r < 0) r += p_;
    return static_cast<Code>(r);
}

Code Field::times_int(Code a, std::int64_t k) const { return mul(a, from_int(k)); }

int Field::quadratic_character(Code a) const
{
    if (p_ == 2) throw FieldError("quadratic character undefined for even q");
    if (!chi_.empty()) return chi_[a];
    if (a == 0) return 0;
    return pow(a, (q_ - 1) / 2) == 1 ? 1 : -1;
}

Code Field::pth_root(Code a) const
{
    // Frobenius has order nu, so its inverse is the (nu-1)-th iterate.
    Code r = a;
    for (unsigned i = 1; i < nu_; ++i) r = pow(r, p_);
    return r;
}

std::vector<Code> Field::coords(Code a) const
{
    std::vector<Code> c(nu_);
    for (unsigned i = 0; i < nu_; ++i) {
        c[i] = a % p_;
        a /= p_;
    }
    return c;
}

Code Field::from_coords(std::span<const Code> coords) const
{
    if (coords.size() != nu_) throw FieldError("coordinate vector has wrong length");
    Code r = 0;
    for (std::size_t i = coords.size(); i-- > 0;) {
        if (coords[i] >= p_) throw FieldError("coordinate out of range");
        r = r * p_ + coords[i];
    }
    return r;
}

std::vector<Code> Field::elements() const
{
    std::vector<Code> v(q_);
    for (Code a = 0; a < q_; ++a) v[a] = a;
    return v;
}

Code Field::decode(std::uint64_t code) const
{
    if (code >= q_)
        throw FieldError("element code " + std::to_string(code) + " outside [0, " + std::to_string(q_) + ")");
    return static_cast<Code>(code);
}

bool Field::same_as(const Field& other) const
{
    return this == &other || (p_ == other.p_ && nu_ == other.nu_ && modulus_ == other.modulus_);
}

std::string Field::describe() const
{
    std::ostringstream os;
    os << "F_" << q_;
    if (nu_ > 1) {
        os << " = F_" << p_ << "[u]/(";
        bool first = true;
        for (std::size_t i = modulus_.size(); i-- > 0;) {
            if (modulus_[i] == 0) continue;
            if (!first) os << " + ";
            first = false;
            if (modulus_[i] != 1 || i == 0) os << modulus_[i];
            if (i >= 1) os << "u";
            if (i >= 2) os << "^" << i;
        }
        os << ")";
    }
    return os.str();
}

FieldElement::FieldElement(FieldPtr field, Code code) : field_(std::move(field)), code_(code)
{
    if (!field_) throw FieldError("element without a field");
    field_->decode(code);
}

void FieldElement::require_same(const FieldElement& o) const
{
    if (!field_->same_as(*o.field_)) throw FieldError("operands belong to different fields");
}

FieldElement FieldElement::operator+(const FieldElement& o) const
{
    require_same(o);
    return {field_, field_->add(code_, o.code_)};
}

FieldElement FieldElement::operator-(const FieldElement& o) const
{
    require_same(o);
    return {field_, field_->sub(code_, o.code_)};
}

FieldElement FieldElement::operator*(const FieldElement& o) const
{
    require_same(o);
    return {field_, field_->mul(code_, o.code_)};
}

FieldElement FieldElement::operator/(const FieldElement& o) const
{
    require_same(o);
    if (o.code_ == 0) throw FieldError("division by zero");
    return {field_, field_->div(code_, o.code_)};
}

FieldElement FieldElement::operator-() const { return {field_, field_->neg(code_)}; }

FieldElement FieldElement::inv() const { return {field_, field_->inv(code_)}; }

FieldElement FieldElement::pow(std::uint64_t e) const { return {field_, field_->pow(code_, e)}; }

bool FieldElement::operator==(const FieldElement& o) const
{
    return code_ == o.code_ && field_->same_as(*o.field_);
}

}  // namespace fqt
