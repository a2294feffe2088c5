#include "fqt/polynomial.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

#include "fqt/factorization.hpp"

namespace fqt {

Polynomial::Polynomial(FieldPtr field, std::vector<Code> coeffs)
    : field_(std::move(field)), coeffs_(std::move(coeffs))
{
    if (!field_) throw PolynomialError("polynomial without a field");
    for (Code c : coeffs_)
        if (!field_->contains(c)) throw PolynomialError("coefficient code outside the field");
    normalize();
}

Polynomial Polynomial::monomial(FieldPtr field, Code c, std::size_t k)
{
    std::vector<Code> v(k + 1, 0);
    v[k] = c;
    return {std::move(field), std::move(v)};
}

void Polynomial::normalize()
{
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

std::optional<std::size_t> Polynomial::degree() const
{
    if (coeffs_.empty()) return std::nullopt;
    return coeffs_.size() - 1;
}

std::size_t Polynomial::deg() const
{
    if (coeffs_.empty()) throw PolynomialError("degree of the zero polynomial");
    return coeffs_.size() - 1;
}

void Polynomial::require_same_field(const Polynomial& o) const
{
    if (field_ != o.field_ && !field_->same_as(*o.field_))
        throw PolynomialError("polynomials over different fields");
}

Polynomial Polynomial::operator+(const Polynomial& o) const
{
    require_same_field(o);
    const Field& k = *field_;
    std::vector<Code> r(std::max(coeffs_.size(), o.coeffs_.size()), 0);
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = k.add(coeff(i), o.coeff(i));
    Polynomial out = zero(field_);
    out.coeffs_ = std::move(r);
    out.normalize();
    return out;
}

Polynomial Polynomial::operator-() const
{
    Polynomial out = *this;
    for (auto& c : out.coeffs_) c = field_->neg(c);
    return out;
}

Polynomial Polynomial::operator-(const Polynomial& o) const
{
    require_same_field(o);
    const Field& k = *field_;
    std::vector<Code> r(std::max(coeffs_.size(), o.coeffs_.size()), 0);
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = k.sub(coeff(i), o.coeff(i));
    Polynomial out = zero(field_);
    out.coeffs_ = std::move(r);
    out.normalize();
    return out;
}

Polynomial Polynomial::operator*(const Polynomial& o) const
{
    require_same_field(o);
    if (is_zero() || o.is_zero()) return zero(field_);
    const Field& k = *field_;
    std::vector<Code> r(coeffs_.size() + o.coeffs_.size() - 1, 0);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < o.coeffs_.size(); ++j)
            r[i + j] = k.add(r[i + j], k.mul(coeffs_[i], o.coeffs_[j]));
    }
    Polynomial out = zero(field_);
    out.coeffs_ = std::move(r);
    out.normalize();
    return out;
}

Polynomial Polynomial::scalar_mul(Code c) const
{
    if (!field_->contains(c)) throw PolynomialError("scalar outside the field");
    Polynomial out = *this;
    for (auto& x : out.coeffs_) x = field_->mul(x, c);
    out.normalize();
    return out;
}

std::pair<Polynomial, Polynomial> Polynomial::divmod(const Polynomial& divisor) const
{
    require_same_field(divisor);
    if (divisor.is_zero()) throw PolynomialError("division by the zero polynomial");
    const Field& k = *field_;
    std::vector<Code> rem = coeffs_;
    const std::size_t db = divisor.coeffs_.size() - 1;
    if (rem.size() <= db) return {zero(field_), *this};

    std::vector<Code> quot(rem.size() - db, 0);
    const Code lead_inv = k.inv(divisor.leading());
    for (std::size_t i = rem.size(); i-- > db;) {
        const Code c = k.mul(rem[i], lead_inv);
        quot[i - db] = c;
        if (c == 0) continue;
        for (std::size_t j = 0; j <= db; ++j)
            rem[i - db + j] = k.sub(rem[i - db + j], k.mul(c, divisor.coeffs_[j]));
    }
    rem.resize(db);
    Polynomial q = zero(field_), r = zero(field_);
    q.coeffs_ = std::move(quot);
    r.coeffs_ = std::move(rem);
    q.normalize();
    r.normalize();
    return {std::move(q), std::move(r)};
}

Polynomial Polynomial::operator%(const Polynomial& o) const
{
    require_same_field(o);
    if (o.is_zero()) throw PolynomialError("division by the zero polynomial");
    const Field& k = *field_;
    const std::size_t db = o.coeffs_.size() - 1;
    if (coeffs_.size() <= db) return *this;
    std::vector<Code> rem = coeffs_;
    const Code lead_inv = k.inv(o.leading());
    for (std::size_t i = rem.size(); i-- > db;) {
        const Code c = k.mul(rem[i], lead_inv);
        if (c == 0) continue;
        for (std::size_t j = 0; j <= db; ++j) rem[i - db + j] = k.sub(rem[i - db + j], k.mul(c, o.coeffs_[j]));
    }
    rem.resize(db);
    Polynomial r = zero(field_);
    r.coeffs_ = std::move(rem);
    r.normalize();
    return r;
}

Polynomial Polynomial::monic() const
{
    if (is_zero()) throw PolynomialError("monic of the zero polynomial");
    if (is_monic()) return *this;
    return scalar_mul(field_->inv(leading()));
}

Polynomial Polynomial::derivative() const
{
    if (coeffs_.size() <= 1) return zero(field_);
    std::vector<Code> d(coeffs_.size() - 1);
    for (std::size_t i = 1; i < coeffs_.size(); ++i)
        d[i - 1] = field_->times_int(coeffs_[i], static_cast<std::int64_t>(i % field_->characteristic()));
    return {field_, std::move(d)};
}

Code Polynomial::evaluate(Code x) const
{
    const Field& k = *field_;
    Code acc = 0;
    for (std::size_t i = coeffs_.size(); i-- > 0;) acc = k.add(k.mul(acc, x), coeffs_[i]);
    return acc;
}

FieldElement Polynomial::evaluate(const FieldElement& x) const
{
    if (!field_->same_as(*x.field())) throw PolynomialError("evaluation point from a different field");
    return {field_, evaluate(x.code())};
}

bool Polynomial::operator==(const Polynomial& o) const
{
    return coeffs_ == o.coeffs_ && field_->same_as(*o.field_);
}

Polynomial gcd(const Polynomial& a, const Polynomial& b)
{
    a.require_same_field(b);
    if (a.is_zero() && b.is_zero()) throw PolynomialError("gcd of two zero polynomials");
    Polynomial x = a, y = b;
    while (!y.is_zero()) {
        Polynomial r = x % y;
        x = std::move(y);
        y = std::move(r);
    }
    return x.monic();
}

Polynomial powmod(const Polynomial& base, std::uint64_t e, const Polynomial& modulus)
{
    if (modulus.is_constant()) throw PolynomialError("powmod needs a nonconstant modulus");
    Polynomial result = Polynomial::constant(modulus.field(), 1);
    Polynomial b = base % modulus;
    while (e) {
        if (e & 1) result = (result * b) % modulus;
        e >>= 1;
        if (e) b = (b * b) % modulus;
    }
    return result;
}

std::uint64_t norm(const Polynomial& f)
{
    const std::size_t d = f.deg();
    const std::uint64_t q = f.F().cardinality();
    std::uint64_t r = 1;
    for (std::size_t i = 0; i < d; ++i) {
        if (r > UINT64_MAX / q) throw PolynomialError("norm overflows 64 bits");
        r *= q;
    }
    return r;
}

Code resultant(const Polynomial& f, const Polynomial& g)
{
    f.require_same_field(g);
    if (f.is_zero() && g.is_zero()) throw PolynomialError("resultant of two zero polynomials");
    if (f.is_zero() || g.is_zero()) return 0;
    const Field& k = f.F();

    // Res(a, b) = (-1)^{deg a deg b} lc(b)^{deg a - deg r} Res(b, r), r = a mod b.
    Code acc = 1;
    Polynomial a = f, b = g;
    while (true) {
        const std::size_t n = a.deg(), m = b.deg();
        if (m == 0) return k.mul(acc, k.pow(b.leading(), n));
        if (n == 0) return k.mul(acc, k.pow(a.leading(), m));
        Polynomial r = a % b;
        if (r.is_zero()) return 0;
        if ((n * m) % 2 == 1) acc = k.neg(acc);
        acc = k.mul(acc, k.pow(b.leading(), n - r.deg()));
        a = std::move(b);
        b = std::move(r);
    }
}

Code discriminant(const Polynomial& f)
{
    if (f.is_constant()) throw PolynomialError("discriminant of a constant polynomial");
    const Field& k = f.F();
    const Polynomial df = f.derivative();
    if (df.is_zero()) return 0;
    const std::size_t n = f.deg(), dd = df.deg();
    // Pad f' to formal degree n-1: Res_{n,n-1}(f, f') = lc(f)^{n-1-dd} Res(f, f').
    Code r = k.mul(resultant(f, df), k.pow(f.leading(), n - 1 - dd));
    r = k.div(r, f.leading());
    if ((n * (n - 1) / 2) % 2 == 1) r = k.neg(r);
    return r;
}

bool is_square(const Polynomial& f, SquareMode mode)
{
    if (f.is_zero()) throw PolynomialError("squareness of the zero polynomial");
    for (const auto& [part, mult] : squarefree_decomposition(f))
        if (mult % 2 != 0) return false;
    if (mode == SquareMode::exact_square) return f.F().is_square(f.leading());
    return true;
}

std::string to_literal(const Polynomial& f)
{
    std::string s;
    for (std::size_t i = 0; i < f.coeffs().size(); ++i) {
        if (i) s += ',';
        s += std::to_string(f.coeffs()[i]);
    }
    return s;
}

Polynomial parse_literal(const FieldPtr& field, std::string_view text)
{
    std::vector<Code> coeffs;
    auto is_space = [](char c) { return c == ' ' || c == '\t'; };
    while (!text.empty() && is_space(text.front())) text.remove_prefix(1);
    while (!text.empty() && is_space(text.back())) text.remove_suffix(1);
    if (text.empty()) return Polynomial::zero(field);

    std::size_t position = 0;
    while (true) {
        const auto comma = text.find(',');
        std::string_view token = text.substr(0, comma);
        while (!token.empty() && is_space(token.front())) token.remove_prefix(1);
        while (!token.empty() && is_space(token.back())) token.remove_suffix(1);
        std::uint64_t value = 0;
        const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
        if (token.empty() || ec != std::errc{} || ptr != token.data() + token.size())
            throw PolynomialError("token " + std::to_string(position) + " ('" + std::string(token) +
                                  "') is not a non-negative integer");
        if (value >= field->cardinality())
            throw PolynomialError("token " + std::to_string(position) + " (" + std::string(token) +
                                  ") is outside [0, " + std::to_string(field->cardinality()) + ")");
        coeffs.push_back(static_cast<Code>(value));
        if (comma == std::string_view::npos) break;
        text.remove_prefix(comma + 1);
        ++position;
    }
    return {field, std::move(coeffs)};
}

std::string to_string(const Polynomial& f)
{
    if (f.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = f.coeffs().size(); i-- > 0;) {
        const Code c = f.coeffs()[i];
        if (c == 0) continue;
        if (!first) os << " + ";
        first = false;
        if (c != 1 || i == 0) os << c;
        if (i >= 1) os << "t";
        if (i >= 2) os << "^" << i;
    }
    return os.str();
}

}  // namespace fqt
