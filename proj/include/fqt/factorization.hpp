#ifndef FQT_FACTORIZATION_HPP
#define FQT_FACTORIZATION_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fqt/polynomial.hpp"
#include "fqt/rational.hpp"

namespace fqt {

struct Factor {
    Polynomial poly;  // monic irreducible
    unsigned multiplicity;
};

/// unit * prod poly^multiplicity, factors sorted by degree then by
/// coefficient codes (ascending degree order, lexicographic).
struct Factorization {
    Code unit;
    std::vector<Factor> factors;

    Polynomial expand(const FieldPtr& field) const;
};

/// Partition of an integer, parts non-increasing. Labels the factorization
/// type of a polynomial and the cycle type of a permutation alike.
class FactorizationType {
public:
    FactorizationType() = default;
    explicit FactorizationType(std::vector<unsigned> parts);

    const std::vector<unsigned>& parts() const { return parts_; }
    unsigned total() const { return total_; }
    std::string to_string() const;  // "(4,1)"

    auto operator<=>(const FactorizationType&) const = default;

private:
    std::vector<unsigned> parts_;
    unsigned total_ = 0;
};

/// All partitions of n, in reverse lexicographic order: (n), (n-1,1), ...
std::vector<FactorizationType> partitions_of(unsigned n);

/// f = lc(f) * prod g_i^{m_i}: g_i squarefree, monic, pairwise coprime,
/// multiplicities distinct and ascending.
std::vector<std::pair<Polynomial, unsigned>> squarefree_decomposition(const Polynomial& f);

/// Frobenius-power criterion; throws for constants.
bool is_irreducible(const Polynomial& f);

/// Complete factorization. The seed only drives equal-degree splitting;
/// the canonical result does not depend on it.
Factorization factor(const Polynomial& f, std::uint64_t seed = 0);

/// Mobius function from the factorization structure. mu(c) = 1 for constants.
int mobius(const Polynomial& f, std::uint64_t seed = 0);

/// (-1)^{deg f} chi_2(disc f). Needs odd q and a monic nonconstant f with f' != 0.
int mobius_via_discriminant(const Polynomial& f);

FactorizationType factorization_type(const Polynomial& f, std::uint64_t seed = 0);

/// Conjugacy class of Frobenius in S_{deg f}; nullopt when f is not squarefree.
std::optional<FactorizationType> frobenius_class(const Polynomial& f, std::uint64_t seed = 0);

/// Number of units in F_q[t]/(Q).
std::uint64_t euler_phi(const Polynomial& Q, std::uint64_t seed = 0);

/// Proportion of S_n with cycle type tau: prod_j 1/(j^{c_j} c_j!).
Rational cauchy_probability(const FactorizationType& tau, unsigned n);

}  // namespace fqt

#endif
