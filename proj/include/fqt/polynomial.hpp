#ifndef FQT_POLYNOMIAL_HPP
#define FQT_POLYNOMIAL_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "fqt/field.hpp"

namespace fqt {

class PolynomialError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/**
 * Dense univariate polynomial over F_q, coefficients ascending by degree.
 *
 * The coefficient vector never ends in a zero; the zero polynomial is the
 * empty vector and has no integer degree (degree() returns nullopt).
 */
class Polynomial {
public:
    Polynomial(FieldPtr field, std::vector<Code> coeffs);

    static Polynomial zero(FieldPtr field) { return {std::move(field), {}}; }
    static Polynomial constant(FieldPtr field, Code c) { return {std::move(field), {c}}; }
    /// c * t^k
    static Polynomial monomial(FieldPtr field, Code c, std::size_t k);
    static Polynomial t(FieldPtr field) { return monomial(std::move(field), 1, 1); }

    const FieldPtr& field() const { return field_; }
    const Field& F() const { return *field_; }
    const std::vector<Code>& coeffs() const { return coeffs_; }

    bool is_zero() const { return coeffs_.empty(); }
    bool is_constant() const { return coeffs_.size() <= 1; }
    bool is_one() const { return coeffs_.size() == 1 && coeffs_[0] == 1; }
    bool is_monic() const { return !coeffs_.empty() && coeffs_.back() == 1; }
    std::optional<std::size_t> degree() const;
    /// Degree of a nonzero polynomial; throws PolynomialError on zero.
    std::size_t deg() const;
    Code leading() const { return coeffs_.empty() ? 0 : coeffs_.back(); }
    Code coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : 0; }

    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator-() const;
    Polynomial operator*(const Polynomial& o) const;
    Polynomial operator/(const Polynomial& o) const { return divmod(o).first; }
    Polynomial operator%(const Polynomial& o) const;
    Polynomial scalar_mul(Code c) const;

    /// (quotient, remainder) with *this = quotient * divisor + remainder.
    std::pair<Polynomial, Polynomial> divmod(const Polynomial& divisor) const;

    /// Divides by the leading coefficient; throws on zero.
    Polynomial monic() const;
    Polynomial derivative() const;
    Code evaluate(Code x) const;
    FieldElement evaluate(const FieldElement& x) const;

    bool operator==(const Polynomial& o) const;
    bool operator!=(const Polynomial& o) const { return !(*this == o); }

    void require_same_field(const Polynomial& o) const;

private:
    void normalize();

    FieldPtr field_;
    std::vector<Code> coeffs_;
};

/// Monic gcd; gcd(a, 0) = monic(a). Throws when both are zero.
Polynomial gcd(const Polynomial& a, const Polynomial& b);

/// base^e mod modulus, modulus nonconstant.
Polynomial powmod(const Polynomial& base, std::uint64_t e, const Polynomial& modulus);

/// #F_q[t]/(f) = q^{deg f}. Throws on the zero polynomial or on overflow.
std::uint64_t norm(const Polynomial& f);

/// Resultant by the Euclidean remainder chain. Zero when either argument is
/// the zero polynomial; throws when both are.
Code resultant(const Polynomial& f, const Polynomial& g);

/// (-1)^{n(n-1)/2} Res(f, f') / lc(f) with f' taken at formal degree n-1.
/// Returns 0 when f' = 0. Throws for constant f.
Code discriminant(const Polynomial& f);

enum class SquareMode { exact_square, square_up_to_constant };

/// f = H^2 (exact_square) or f = c H^2 (square_up_to_constant).
bool is_square(const Polynomial& f, SquareMode mode);

/// Comma-separated element codes, ascending by degree ("" is the zero polynomial).
std::string to_literal(const Polynomial& f);
/// Inverse of to_literal. Errors name the offending token position.
Polynomial parse_literal(const FieldPtr& field, std::string_view text);

/// Human-readable form, descending, e.g. "t^5 + 2t^3 + 1" (codes for coefficients).
std::string to_string(const Polynomial& f);

}  // namespace fqt

#endif
