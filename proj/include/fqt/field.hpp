#ifndef FQT_FIELD_HPP
#define FQT_FIELD_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace fqt {

/// Integer code of a field element: the base-p digits of the code are the
/// polynomial-basis coordinates, least significant first.
using Code = std::uint32_t;

class FieldError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

bool is_prime(std::uint64_t n);

/**
 * The finite field F_q, q = p^nu, realized as F_p[u]/(modulus).
 *
 * All arithmetic works on integer codes in [0, q). For nu > 1 the
 * multiplication goes through log/exp tables built from a primitive
 * element; small fields also get a full addition table. Instances are
 * immutable after construction and are shared through std::shared_ptr
 * by every polynomial living over them.
 */
class Field {
public:
    /// Largest prime field accepted; products of two codes stay in 64 bits.
    static constexpr std::uint64_t max_prime = std::uint64_t{1} << 31;
    /// Largest extension field accepted (bounded by the log/exp tables).
    static constexpr std::uint64_t max_extension_order = std::uint64_t{1} << 20;

    /// Builds F_{p^nu}. Without an explicit modulus the lexicographically
    /// smallest monic irreducible of degree nu is used (coefficients compared
    /// from t^{nu-1} down to t^0). A modulus is given ascending, including
    /// its leading 1.
    static std::shared_ptr<const Field> make(std::uint64_t p, unsigned nu = 1,
                                             std::optional<std::vector<Code>> modulus = {});

    /// Builds the field of the given cardinality (a prime power).
    static std::shared_ptr<const Field> of_order(std::uint64_t q);

    std::uint32_t characteristic() const { return p_; }
    unsigned extension_degree() const { return nu_; }
    std::uint32_t cardinality() const { return q_; }
    /// Ascending coefficients over F_p, monic, length nu + 1. For nu = 1 this is t.
    const std::vector<Code>& modulus() const { return modulus_; }
    bool odd() const { return p_ != 2; }

    bool same_as(const Field& other) const;
    std::string describe() const;

    bool contains(Code a) const { return a < q_; }
    Code zero() const { return 0; }
    Code one() const { return 1; }

    Code add(Code a, Code b) const {
        if (nu_ == 1) {
            const Code s = a + b;
            return s >= p_ ? s - p_ : s;
        }
        if (!add_table_.empty()) return add_table_[std::size_t{a} * q_ + b];
        return add_digits(a, b);
    }
    Code neg(Code a) const {
        if (nu_ == 1) return a == 0 ? 0 : p_ - a;
        return neg_table_[a];
    }
    Code sub(Code a, Code b) const { return add(a, neg(b)); }
    Code mul(Code a, Code b) const {
        if (nu_ == 1) return static_cast<Code>((std::uint64_t{a} * b) % p_);
        if (a == 0 || b == 0) return 0;
        std::uint32_t e = log_[a] + log_[b];
        if (e >= q_ - 1) e -= q_ - 1;
        return exp_[e];
    }
    /// Throws FieldError on a zero argument.
    Code inv(Code a) const;
    Code div(Code a, Code b) const { return mul(a, inv(b)); }
    Code pow(Code a, std::uint64_t e) const;
    /// Multiplies by the integer k reduced mod p.
    Code times_int(Code a, std::int64_t k) const;
    /// Embeds the integer k (mod p) into the prime subfield.
    Code from_int(std::int64_t k) const;

    /// Quadratic character: 0 at 0, 1 on nonzero squares, -1 otherwise.
    /// Throws FieldError for even q.
    int quadratic_character(Code a) const;
    bool is_square(Code a) const { return p_ == 2 || a == 0 || quadratic_character(a) == 1; }

    /// The unique b with b^p = a.
    Code pth_root(Code a) const;

    /// Digits of the code, least significant first, length nu.
    std::vector<Code> coords(Code a) const;
    Code from_coords(std::span<const Code> coords) const;

    /// All q elements in odometer order, first element 0.
    std::vector<Code> elements() const;

    /// Throws FieldError when the code is outside [0, q).
    Code decode(std::uint64_t code) const;

private:
    Field(std::uint32_t p, unsigned nu, std::vector<Code> modulus);

    Code add_digits(Code a, Code b) const;
    Code mul_slow(Code a, Code b) const;
    void build_tables();

    std::uint32_t p_;
    unsigned nu_;
    std::uint32_t q_;
    std::vector<Code> modulus_;
    std::vector<Code> add_table_;
    std::vector<Code> neg_table_;
    std::vector<std::uint32_t> log_;
    std::vector<Code> exp_;
    std::vector<std::int8_t> chi_;
};

using FieldPtr = std::shared_ptr<const Field>;

/// Checked element value: carries its field so that mixing fields is an
/// error rather than silently wrong arithmetic.
class FieldElement {
public:
    FieldElement(FieldPtr field, Code code);

    const FieldPtr& field() const { return field_; }
    Code code() const { return code_; }
    std::vector<Code> coords() const { return field_->coords(code_); }
    bool is_zero() const { return code_ == 0; }

    FieldElement operator+(const FieldElement& o) const;
    FieldElement operator-(const FieldElement& o) const;
    FieldElement operator*(const FieldElement& o) const;
    FieldElement operator/(const FieldElement& o) const;
    FieldElement operator-() const;
    FieldElement inv() const;
    FieldElement pow(std::uint64_t e) const;
    int chi() const { return field_->quadratic_character(code_); }

    bool operator==(const FieldElement& o) const;

private:
    void require_same(const FieldElement& o) const;

    FieldPtr field_;
    Code code_;
};

}  // namespace fqt

#endif
