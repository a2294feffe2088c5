#include "fqt/experiments.hpp"

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <map>

#include "fqt/parallel.hpp"

namespace fqt {

BudgetExceeded::BudgetExceeded(std::uint64_t needed_, std::uint64_t cap_)
    : ExperimentError("enumeration of " + std::to_string(needed_) + " polynomials exceeds the budget of " +
                      std::to_string(cap_) + " (raise --budget to run anyway)"),
      needed(needed_),
      cap(cap_)
{
}

std::optional<double> ExperimentReport::normalized_deviation() const
{
    if (main_term.numerator() == 0) return std::nullopt;
    return static_cast<double>(observed) / to_double(main_term) - 1.0;
}

bool ExperimentReport::correct() const
{
    if (bound && !bound->holds) return false;
    for (const auto& c : checks)
        if (!c.holds) return false;
    return true;
}

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start)
{
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

std::uint64_t checked_pow(std::uint64_t base, unsigned e)
{
    std::uint64_t r = 1;
    for (unsigned i = 0; i < e; ++i) {
        if (r > std::numeric_limits<std::uint64_t>::max() / base)
            throw ExperimentError(std::to_string(base) + "^" + std::to_string(e) + " overflows 64 bits");
        r *= base;
    }
    return r;
}

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b)
{
    if (b != 0 && a > std::numeric_limits<std::uint64_t>::max() / b)
        throw ExperimentError("bound overflows 64 bits");
    return a * b;
}

std::uint64_t space_size(std::uint64_t q, unsigned e, const RunOptions& opts)
{
    std::uint64_t size = 0;
    try {
        size = checked_pow(q, e);
    } catch (const ExperimentError&) {
        throw BudgetExceeded(std::numeric_limits<std::uint64_t>::max(), opts.budget);
    }
    if (size > opts.budget) throw BudgetExceeded(size, opts.budget);
    return size;
}

ExperimentReport start_report(const char* name, const FieldPtr& field, const RunOptions& opts)
{
    ExperimentReport r;
    r.experiment = name;
    r.field = field;
    r.seed = opts.seed;
    return r;
}

BoundCheck make_bound(std::string formula, std::uint64_t squared, std::int64_t observed)
{
    const std::uint64_t mag = static_cast<std::uint64_t>(std::llabs(observed));
    return {std::move(formula), squared, std::sqrt(static_cast<double>(squared)), checked_mul(mag, mag) <= squared};
}

void finish(ExperimentReport& r, Clock::time_point start)
{
    r.deviation = Rational(r.observed) - r.main_term;
    r.elapsed_ms = ms_since(start);
}

// Visits every monic polynomial of degree n whose t^{n-1} coefficient is
// `block` (all of M_0 = {1} when n = 0). Lower coefficients run in odometer order.
template <class Fn>
void for_each_monic_in_block(const FieldPtr& field, unsigned n, Code block, Fn&& visit)
{
    if (n == 0) {
        visit(Polynomial::constant(field, 1));
        return;
    }
    const Code q = field->cardinality();
    std::vector<Code> c(n + 1, 0);
    c[n] = 1;
    c[n - 1] = block;
    const std::size_t free = n - 1;
    while (true) {
        visit(Polynomial(field, c));
        std::size_t j = 0;
        while (j < free) {
            if (++c[j] < q) break;
            c[j] = 0;
            ++j;
        }
        if (j == free) return;
    }
}

std::size_t monic_blocks(const FieldPtr& field, unsigned n) { return n == 0 ? 1 : field->cardinality(); }

template <class T, class Fn>
std::vector<T> sweep_monic(const FieldPtr& field, unsigned n, const RunOptions& opts, Fn per_poly)
{
    return run_blocks<T>(monic_blocks(field, n), opts.threads, [&](std::size_t b) {
        T acc{};
        for_each_monic_in_block(field, n, static_cast<Code>(b), [&](const Polynomial& f) { per_poly(acc, f); });
        return acc;
    });
}

template <class T, class Fn>
std::vector<T> sweep_interval(const ShortInterval& interval, const RunOptions& opts, Fn per_tuple)
{
    return run_blocks<T>(interval.block_count(), opts.threads, [&](std::size_t b) {
        T acc{};
        interval.for_each_tuple_in_block(static_cast<Code>(b), [&](std::span<const Code> A) { per_tuple(acc, A); });
        return acc;
    });
}

nlohmann::ordered_json family_json(const QuadraticFamily& fam)
{
    return {{"f", to_literal(fam.f())},
            {"g", to_literal(fam.g())},
            {"center", to_literal(fam.center())},
            {"m", fam.radius()},
            {"n", fam.degree()}};
}

void require_shared_interval(const std::vector<QuadraticFamily>& families)
{
    if (families.empty()) throw ExperimentError("at least one family is required");
    for (const auto& fam : families) {
        if (fam.center() != families.front().center() || fam.radius() != families.front().radius())
            throw ExperimentError("families must share one interval");
    }
    for (std::size_t i = 0; i < families.size(); ++i)
        for (std::size_t j = i + 1; j < families.size(); ++j)
            if (!families[i].non_associate(families[j]))
                throw ExperimentError("families " + std::to_string(i) + " and " + std::to_string(j) +
                                      " are associated (f_i g_j = f_j g_i)");
}

void require_eps(const std::vector<unsigned>& eps, std::size_t r)
{
    if (eps.size() != r)
        throw ExperimentError("expected " + std::to_string(r) + " exponents, got " + std::to_string(eps.size()));
    bool all_even = true;
    for (unsigned e : eps) {
        if (e != 1 && e != 2) throw ExperimentError("exponents must be 1 or 2");
        if (e == 1) all_even = false;
    }
    if (all_even) throw ExperimentError("bound requires not all even exponents");
}

int mobius_power(int mu, unsigned e) { return e == 2 ? mu * mu : mu; }

nlohmann::ordered_json rational_json(const Rational& r) { return {{"num", r.numerator()}, {"den", r.denominator()}}; }

}  // namespace

int integer_mobius(std::uint64_t n)
{
    int mu = 1;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            n /= d;
            if (n % d == 0) return 0;
            mu = -mu;
        }
    }
    if (n > 1) mu = -mu;
    return mu;
}

std::uint64_t necklace_count(std::uint64_t q, unsigned n)
{
    if (n == 0) throw ExperimentError("necklace count needs n >= 1");
    std::int64_t total = 0;
    for (unsigned d = 1; d <= n; ++d)
        if (n % d == 0) total += integer_mobius(d) * static_cast<std::int64_t>(checked_pow(q, n / d));
    return static_cast<std::uint64_t>(total / n);
}

ExperimentReport prime_count_total(const FieldPtr& field, unsigned n, const RunOptions& opts)
{
    if (n == 0) throw ExperimentError("prime_count_total needs n >= 1");
    const auto start = Clock::now();
    const std::uint64_t q = field->cardinality();
    ExperimentReport r = start_report("prime_count_total", field, opts);
    r.enumerated = space_size(q, n, opts);
    r.parameters["n"] = n;

    const auto parts = sweep_monic<std::int64_t>(field, n, opts, [](std::int64_t& acc, const Polynomial& f) {
        if (is_irreducible(f)) ++acc;
    });
    for (auto c : parts) r.observed += c;

    const std::uint64_t necklace = necklace_count(q, n);
    r.main_term = Rational(static_cast<std::int64_t>(r.enumerated), n);
    r.details["necklace"] = necklace;
    r.checks.push_back({"necklace_agreement", static_cast<std::uint64_t>(r.observed) == necklace});
    finish(r, start);
    return r;
}

ExperimentReport prime_count_ap(const FieldPtr& field, unsigned n, const Polynomial& Q, const Polynomial& A,
                                const RunOptions& opts)
{
    if (n == 0) throw ExperimentError("prime_count_ap needs n >= 1");
    if (Q.is_zero() || Q.is_constant()) throw ExperimentError("modulus Q must have degree >= 1");
    if (A.is_zero() || !gcd(A, Q).is_one()) throw ExperimentError("gcd(A, Q) must be 1");
    const auto start = Clock::now();
    ExperimentReport r = start_report("prime_count_ap", field, opts);
    r.enumerated = space_size(field->cardinality(), n, opts);
    const Polynomial residue = A % Q;
    r.parameters["n"] = n;
    r.parameters["Q"] = to_literal(Q);
    r.parameters["A"] = to_literal(residue);

    struct Acc {
        std::int64_t in_class = 0;
        std::int64_t total = 0;
    };
    const auto parts = sweep_monic<Acc>(field, n, opts, [&](Acc& acc, const Polynomial& f) {
        if (!is_irreducible(f)) return;
        ++acc.total;
        if (f % Q == residue) ++acc.in_class;
    });
    std::int64_t total = 0;
    for (const auto& p : parts) {
        r.observed += p.in_class;
        total += p.total;
    }
    const std::uint64_t phi = euler_phi(Q, opts.seed);
    r.main_term = Rational(total, static_cast<std::int64_t>(phi));
    r.details["pi_total"] = total;
    r.details["euler_phi"] = phi;
    finish(r, start);
    return r;
}

ExperimentReport count_primes_interval(const QuadraticFamily& family, const RunOptions& opts)
{
    const auto start = Clock::now();
    const FieldPtr& field = family.field();
    ExperimentReport r = start_report("count_primes_interval", field, opts);
    r.enumerated = space_size(field->cardinality(), family.radius() + 1, opts);
    r.parameters = family_json(family);

    struct Acc {
        std::int64_t irreducible = 0;
        std::int64_t single_factor = 0;
    };
    const auto parts = sweep_interval<Acc>(family.interval(), opts, [&](Acc& acc, std::span<const Code> A) {
        const Polynomial F = family.specialize(A);
        if (is_irreducible(F)) ++acc.irreducible;
        const Factorization fac = factor(F, opts.seed);
        if (fac.factors.size() == 1 && fac.factors.front().multiplicity == 1) ++acc.single_factor;
    });
    std::int64_t via_factor = 0;
    for (const auto& p : parts) {
        r.observed += p.irreducible;
        via_factor += p.single_factor;
    }
    const auto n = family.degree();
    r.main_term = Rational(static_cast<std::int64_t>(r.enumerated), n);
    r.details["count_via_factorization"] = via_factor;
    r.details["normalized_deviation_abs"] =
        std::abs(static_cast<double>(n) * static_cast<double>(r.observed) / static_cast<double>(r.enumerated) - 1.0);
    r.checks.push_back({"factorization_agreement", via_factor == r.observed});
    finish(r, start);
    return r;
}

ExperimentReport frobenius_distribution(const QuadraticFamily& family, const RunOptions& opts)
{
    const auto start = Clock::now();
    const FieldPtr& field = family.field();
    ExperimentReport r = start_report("frobenius_distribution", field, opts);
    r.enumerated = space_size(field->cardinality(), family.radius() + 1, opts);
    r.parameters = family_json(family);
    const unsigned n = family.degree();

    struct Acc {
        std::map<FactorizationType, std::int64_t> classes;
        std::int64_t not_squarefree = 0;
    };
    const auto parts = sweep_interval<Acc>(family.interval(), opts, [&](Acc& acc, std::span<const Code> A) {
        const auto cls = frobenius_class(family.specialize(A), opts.seed);
        if (cls)
            ++acc.classes[*cls];
        else
            ++acc.not_squarefree;
    });
    std::map<FactorizationType, std::int64_t> classes;
    std::int64_t not_squarefree = 0;
    for (const auto& p : parts) {
        for (const auto& [k, v] : p.classes) classes[k] += v;
        not_squarefree += p.not_squarefree;
    }

    auto table = nlohmann::ordered_json::array();
    std::int64_t total = not_squarefree;
    for (const auto& tau : partitions_of(n)) {
        const auto it = classes.find(tau);
        const std::int64_t count = it == classes.end() ? 0 : it->second;
        total += count;
        const Rational expected = cauchy_probability(tau, n);
        table.push_back({{"class", tau.to_string()},
                         {"count", count},
                         {"expected_frequency", rational_json(expected)},
                         {"expected_count", to_double(expected) * static_cast<double>(r.enumerated)}});
    }
    const FactorizationType full({n});
    r.observed = classes.count(full) ? classes[full] : 0;
    r.main_term = Rational(static_cast<std::int64_t>(r.enumerated), n);
    r.details["classes"] = std::move(table);
    r.details["not_squarefree"] = not_squarefree;
    r.checks.push_back({"counts_sum_to_interval_size", static_cast<std::uint64_t>(total) == r.enumerated});
    finish(r, start);
    return r;
}

ExperimentReport type_distribution_Mn(const FieldPtr& field, unsigned n, const RunOptions& opts)
{
    if (n == 0) throw ExperimentError("type_distribution_Mn needs n >= 1");
    const auto start = Clock::now();
    ExperimentReport r = start_report("type_distribution_Mn", field, opts);
    r.enumerated = space_size(field->cardinality(), n, opts);
    r.parameters["n"] = n;

    using Counts = std::map<FactorizationType, std::int64_t>;
    const auto parts = sweep_monic<Counts>(field, n, opts, [&](Counts& acc, const Polynomial& f) {
        ++acc[factorization_type(f, opts.seed)];
    });
    Counts counts;
    for (const auto& p : parts)
        for (const auto& [k, v] : p) counts[k] += v;

    const auto size = static_cast<std::int64_t>(r.enumerated);
    auto table = nlohmann::ordered_json::array();
    Rational tv(0);
    std::int64_t total = 0;
    for (const auto& tau : partitions_of(n)) {
        const std::int64_t count = counts.count(tau) ? counts[tau] : 0;
        total += count;
        const Rational expected = cauchy_probability(tau, n);
        const Rational freq(count, size);
        tv += boost::abs(freq - expected);
        table.push_back({{"type", tau.to_string()},
                         {"count", count},
                         {"frequency", to_double(freq)},
                         {"cauchy", rational_json(expected)},
                         {"deviation", to_double(freq - expected)}});
    }
    tv /= 2;
    const FactorizationType full({n});
    r.observed = counts.count(full) ? counts[full] : 0;
    r.main_term = Rational(size, n);
    r.details["types"] = std::move(table);
    r.details["total_variation"] = rational_json(tv);
    r.details["total_variation_decimal"] = to_double(tv);
    r.checks.push_back({"counts_sum_to_q_pow_n", total == size});
    r.checks.push_back({"full_cycle_matches_necklace",
                        static_cast<std::uint64_t>(r.observed) == necklace_count(field->cardinality(), n)});
    finish(r, start);
    return r;
}

ExperimentReport mobius_full_sum(const FieldPtr& field, unsigned n, const RunOptions& opts)
{
    const auto start = Clock::now();
    ExperimentReport r = start_report("mobius_full_sum", field, opts);
    r.enumerated = space_size(field->cardinality(), n, opts);
    r.parameters["n"] = n;
    const auto parts = sweep_monic<std::int64_t>(field, n, opts, [&](std::int64_t& acc, const Polynomial& f) {
        acc += mobius(f, opts.seed);
    });
    for (auto s : parts) r.observed += s;
    const std::int64_t expected = n == 0 ? 1 : n == 1 ? -static_cast<std::int64_t>(field->cardinality()) : 0;
    r.main_term = Rational(expected);
    r.details["expected"] = expected;
    r.checks.push_back({"full_sum_identity", r.observed == expected});
    finish(r, start);
    return r;
}

ExperimentReport mobius_interval_sum(const QuadraticFamily& family, const RunOptions& opts)
{
    const auto start = Clock::now();
    const FieldPtr& field = family.field();
    ExperimentReport r = start_report("mobius_interval_sum", field, opts);
    r.enumerated = space_size(field->cardinality(), family.radius() + 1, opts);
    r.parameters = family_json(family);
    const auto parts = sweep_interval<std::int64_t>(family.interval(), opts, [&](std::int64_t& acc, std::span<const Code> A) {
        acc += mobius(family.specialize(A), opts.seed);
    });
    for (auto s : parts) r.observed += s;

    const std::uint64_t n = family.degree();
    const std::uint64_t c = n >= 2 ? n - 2 : 0;
    const std::uint64_t squared = checked_mul(c * c, checked_pow(field->cardinality(), 2 * family.radius() + 1));
    r.bound = make_bound("(n-2)^2 q^(2m+1)", squared, r.observed);
    r.checks.push_back({"trivial_bound", static_cast<std::uint64_t>(std::llabs(r.observed)) <= r.enumerated});
    finish(r, start);
    return r;
}

ExperimentReport chowla_interval(const std::vector<QuadraticFamily>& families, const std::vector<unsigned>& eps,
                                 const RunOptions& opts)
{
    require_shared_interval(families);
    require_eps(eps, families.size());
    const auto start = Clock::now();
    const FieldPtr& field = families.front().field();
    const ShortInterval& interval = families.front().interval();
    ExperimentReport r = start_report("chowla_interval", field, opts);
    r.enumerated = space_size(field->cardinality(), interval.radius() + 1, opts);
    auto fams = nlohmann::ordered_json::array();
    for (const auto& fam : families) fams.push_back(family_json(fam));
    r.parameters["families"] = std::move(fams);
    r.parameters["eps"] = eps;

    const auto parts = sweep_interval<std::int64_t>(interval, opts, [&](std::int64_t& acc, std::span<const Code> A) {
        int prod = 1;
        for (std::size_t i = 0; i < families.size() && prod != 0; ++i)
            prod *= mobius_power(mobius(families[i].specialize(A), opts.seed), eps[i]);
        acc += prod;
    });
    for (auto s : parts) r.observed += s;

    std::uint64_t degree_sum = 0;
    for (const auto& fam : families) degree_sum += fam.degree() - 1;
    const std::uint64_t c = 2 * degree_sum - 1;
    const std::uint64_t squared = checked_mul(c * c, checked_pow(field->cardinality(), 2 * interval.radius() + 1));
    r.bound = make_bound("(2 sum(n_i - 1) - 1)^2 q^(2m+1)", squared, r.observed);
    finish(r, start);
    return r;
}

ExperimentReport chowla_classical(const FieldPtr& field, unsigned n, const std::vector<Polynomial>& shifts,
                                  const std::vector<unsigned>& eps, const RunOptions& opts)
{
    if (n == 0) throw ExperimentError("chowla_classical needs n >= 1");
    if (shifts.empty()) throw ExperimentError("at least one shift is required");
    for (std::size_t i = 0; i < shifts.size(); ++i) {
        if (!shifts[i].is_zero() && shifts[i].deg() >= n)
            throw ExperimentError("shift " + std::to_string(i) + " has degree >= n");
        for (std::size_t j = i + 1; j < shifts.size(); ++j)
            if (shifts[i] == shifts[j]) throw ExperimentError("duplicate shifts");
    }
    require_eps(eps, shifts.size());
    const auto start = Clock::now();
    ExperimentReport r = start_report("chowla_classical", field, opts);
    r.enumerated = space_size(field->cardinality(), n, opts);
    r.parameters["n"] = n;
    auto lits = nlohmann::ordered_json::array();
    for (const auto& s : shifts) lits.push_back(to_literal(s));
    r.parameters["shifts"] = std::move(lits);
    r.parameters["eps"] = eps;

    const auto parts = sweep_monic<std::int64_t>(field, n, opts, [&](std::int64_t& acc, const Polynomial& f) {
        int prod = 1;
        for (std::size_t i = 0; i < shifts.size() && prod != 0; ++i)
            prod *= mobius_power(mobius(f + shifts[i], opts.seed), eps[i]);
        acc += prod;
    });
    for (auto s : parts) r.observed += s;

    const double q = field->cardinality();
    const double scale = static_cast<double>(shifts.size()) * n * std::pow(q, n - 0.5);
    r.details["ratio"] = std::abs(static_cast<double>(r.observed)) / scale;
    finish(r, start);
    return r;
}

ExperimentReport bateman_horn_count(const std::vector<QuadraticFamily>& families, const RunOptions& opts)
{
    require_shared_interval(families);
    const auto start = Clock::now();
    const FieldPtr& field = families.front().field();
    const ShortInterval& interval = families.front().interval();
    ExperimentReport r = start_report("bateman_horn_count", field, opts);
    r.enumerated = space_size(field->cardinality(), interval.radius() + 1, opts);
    auto fams = nlohmann::ordered_json::array();
    for (const auto& fam : families) fams.push_back(family_json(fam));
    r.parameters["families"] = std::move(fams);

    struct Acc {
        std::int64_t joint = 0;
        std::vector<std::int64_t> individual;
    };
    const auto parts = sweep_interval<Acc>(interval, opts, [&](Acc& acc, std::span<const Code> A) {
        acc.individual.resize(families.size(), 0);
        bool all = true;
        for (std::size_t i = 0; i < families.size(); ++i) {
            if (is_irreducible(families[i].specialize(A)))
                ++acc.individual[i];
            else
                all = false;
        }
        if (all) ++acc.joint;
    });
    std::vector<std::int64_t> individual(families.size(), 0);
    for (const auto& p : parts) {
        r.observed += p.joint;
        for (std::size_t i = 0; i < p.individual.size(); ++i) individual[i] += p.individual[i];
    }
    Rational main(static_cast<std::int64_t>(r.enumerated));
    for (const auto& fam : families) main /= static_cast<std::int64_t>(fam.degree());
    r.main_term = main;
    r.details["individual_counts"] = individual;
    std::int64_t min_individual = individual.front();
    for (auto c : individual) min_individual = std::min(min_individual, c);
    r.checks.push_back({"joint_at_most_min_individual", r.observed <= min_individual});
    if (families.size() == 1) r.checks.push_back({"single_family_equals_individual", r.observed == individual[0]});
    r.details["normalized_deviation_abs"] =
        std::abs(static_cast<double>(r.observed) / to_double(r.main_term) - 1.0);
    finish(r, start);
    return r;
}

ExperimentReport weil_character_sum(const FieldPtr& field, const Polynomial& P, const RunOptions& opts)
{
    if (!field->odd()) throw ExperimentError("quadratic character undefined for even q");
    if (P.is_zero() || P.is_constant()) throw ExperimentError("P must have degree >= 1");
    if (is_square(P, SquareMode::square_up_to_constant))
        throw ExperimentError("bound inapplicable: P is a constant times a square");
    const auto start = Clock::now();
    ExperimentReport r = start_report("weil_character_sum", field, opts);
    r.enumerated = field->cardinality();
    r.parameters["P"] = to_literal(P);
    for (Code b = 0; b < field->cardinality(); ++b) r.observed += field->quadratic_character(P.evaluate(b));
    const std::uint64_t c = P.deg() - 1;
    r.bound = make_bound("(deg P - 1)^2 q", checked_mul(c * c, field->cardinality()), r.observed);
    finish(r, start);
    return r;
}

}  // namespace fqt
