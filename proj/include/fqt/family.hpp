#ifndef FQT_FAMILY_HPP
#define FQT_FAMILY_HPP

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "fqt/polynomial.hpp"

namespace fqt {

class FamilyError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// I(center, radius) = { center + sum_{j <= radius} A_j t^j }, q^{radius+1} members.
class ShortInterval {
public:
    /// Throws FamilyError unless center is monic with deg center > radius.
    ShortInterval(Polynomial center, unsigned radius);

    const Polynomial& center() const { return center_; }
    unsigned radius() const { return radius_; }
    const FieldPtr& field() const { return center_.field(); }
    /// q^{radius+1}; throws on 64-bit overflow.
    std::uint64_t size() const;
    /// Number of blocks obtained by fixing the top coordinate A_radius (= q).
    std::uint32_t block_count() const { return center_.F().cardinality(); }

    /// center + sum A_j t^j; A must have radius+1 entries.
    Polynomial member(std::span<const Code> A) const;

    /// Visits every tuple A in odometer order (A_0 fastest).
    void for_each_tuple(const std::function<void(std::span<const Code>)>& visit) const;
    /// Same, restricted to the tuples whose top coordinate equals block.
    void for_each_tuple_in_block(Code block, const std::function<void(std::span<const Code>)>& visit) const;

private:
    Polynomial center_;
    unsigned radius_;
};

std::vector<Polynomial> enumerate_interval(const ShortInterval& interval);

enum class Violation { f_zero, g_zero, not_coprime, g_not_monic, deg_order, fg_square, p_degree, q_even };

std::string label(Violation v);

/// Every violated admissibility condition; empty means the family can be built.
std::vector<Violation> check_admissible(const Polynomial& f, const Polynomial& g, const Polynomial& p,
                                        unsigned m);

/**
 * F(A, t) = f + g * (p + sum_j A_j t^j)^2 over the interval I(p, m).
 *
 * Every specialization is monic of degree n = deg g + 2 deg p because g and
 * the center p are monic and deg f < deg g.
 */
class QuadraticFamily {
public:
    /// Throws FamilyError listing every violated condition.
    QuadraticFamily(Polynomial f, Polynomial g, ShortInterval interval);

    const Polynomial& f() const { return f_; }
    const Polynomial& g() const { return g_; }
    const ShortInterval& interval() const { return interval_; }
    const Polynomial& center() const { return interval_.center(); }
    unsigned radius() const { return interval_.radius(); }
    const FieldPtr& field() const { return f_.field(); }
    /// f + g p^2
    const Polynomial& shifted() const { return f_tilde_; }
    unsigned degree() const { return n_; }

    Polynomial specialize(std::span<const Code> A) const;

    /// f_i g_j != f_j g_i
    bool non_associate(const QuadraticFamily& other) const;

private:
    Polynomial f_;
    Polynomial g_;
    ShortInterval interval_;
    Polynomial f_tilde_;
    unsigned n_;
};

/// Writes F as A a_0^2 + B a_0 + C with a_1..a_m fixed to partial and checks
/// B^2 - 4AC == -4fg as polynomials in t. partial has m entries.
bool verify_discriminant_identity(const QuadraticFamily& family, std::span<const Code> partial);

}  // namespace fqt

#endif
