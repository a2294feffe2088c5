#ifndef FQT_EXPERIMENTS_HPP
#define FQT_EXPERIMENTS_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "fqt/factorization.hpp"
#include "fqt/family.hpp"
#include "fqt/polynomial.hpp"
#include "fqt/rational.hpp"

namespace fqt {

class ExperimentError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Raised before any work when an enumeration would exceed the cap.
class BudgetExceeded : public ExperimentError {
public:
    BudgetExceeded(std::uint64_t needed, std::uint64_t cap);
    std::uint64_t needed;
    std::uint64_t cap;
};

struct RunOptions {
    unsigned threads = 1;
    std::uint64_t seed = 0;
    std::uint64_t budget = 10'000'000;
};

/// An error bound with an explicit constant, compared in squared form:
/// holds iff observed^2 <= squared.
struct BoundCheck {
    std::string formula;
    std::uint64_t squared;
    double value;  // sqrt(squared), display only
    bool holds;
};

/// An exact identity or consistency relation verified during a run.
struct Check {
    std::string name;
    bool holds;
};

struct ExperimentReport {
    std::string experiment;
    FieldPtr field;
    nlohmann::ordered_json parameters = nlohmann::ordered_json::object();
    std::int64_t observed = 0;
    Rational main_term{0};
    std::optional<BoundCheck> bound;
    Rational deviation{0};  // observed - main_term
    double elapsed_ms = 0;
    std::uint64_t seed = 0;
    std::uint64_t enumerated = 0;
    std::vector<Check> checks;
    nlohmann::ordered_json details = nlohmann::ordered_json::object();

    /// observed / main_term - 1, when main_term != 0.
    std::optional<double> normalized_deviation() const;
    /// False when a hard-asserted bound or exact check failed.
    bool correct() const;
};

ExperimentReport prime_count_total(const FieldPtr& field, unsigned n, const RunOptions& opts = {});

ExperimentReport prime_count_ap(const FieldPtr& field, unsigned n, const Polynomial& Q, const Polynomial& A,
                                const RunOptions& opts = {});

ExperimentReport count_primes_interval(const QuadraticFamily& family, const RunOptions& opts = {});

ExperimentReport frobenius_distribution(const QuadraticFamily& family, const RunOptions& opts = {});

ExperimentReport type_distribution_Mn(const FieldPtr& field, unsigned n, const RunOptions& opts = {});

ExperimentReport mobius_full_sum(const FieldPtr& field, unsigned n, const RunOptions& opts = {});

ExperimentReport mobius_interval_sum(const QuadraticFamily& family, const RunOptions& opts = {});

ExperimentReport chowla_interval(const std::vector<QuadraticFamily>& families, const std::vector<unsigned>& eps,
                                 const RunOptions& opts = {});

ExperimentReport chowla_classical(const FieldPtr& field, unsigned n, const std::vector<Polynomial>& shifts,
                                  const std::vector<unsigned>& eps, const RunOptions& opts = {});

ExperimentReport bateman_horn_count(const std::vector<QuadraticFamily>& families, const RunOptions& opts = {});

ExperimentReport weil_character_sum(const FieldPtr& field, const Polynomial& P, const RunOptions& opts = {});

/// (1/n) sum_{d | n} mu(d) q^{n/d}
std::uint64_t necklace_count(std::uint64_t q, unsigned n);

/// Classical integer Mobius function.
int integer_mobius(std::uint64_t n);

}  // namespace fqt

#endif
