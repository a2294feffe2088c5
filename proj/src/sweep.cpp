#include "fqt/sweep.hpp"

#include <algorithm>
#include <charconv>

namespace fqt {

namespace {

std::vector<std::string> split(const std::string& s, char sep)
{
    std::vector<std::string> out;
    std::size_t start = 0;
    while (true) {
        const auto pos = s.find(sep, start);
        out.push_back(s.substr(start, pos - start));
        if (pos == std::string::npos) return out;
        start = pos + 1;
    }
}

const std::string& need(const std::map<std::string, std::string>& params, const std::string& key)
{
    const auto it = params.find(key);
    if (it == params.end()) throw ExperimentError("missing parameter --" + key);
    return it->second;
}

unsigned need_uint(const std::map<std::string, std::string>& params, const std::string& key)
{
    const std::string& s = need(params, key);
    unsigned v = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size())
        throw ExperimentError("--" + key + " expects a non-negative integer, got '" + s + "'");
    return v;
}

Polynomial need_poly(const std::map<std::string, std::string>& params, const std::string& key,
                     const FieldPtr& field)
{
    try {
        return parse_literal(field, need(params, key));
    } catch (const PolynomialError& e) {
        throw ExperimentError("--" + key + ": " + e.what());
    }
}

std::vector<unsigned> parse_eps(const std::string& s)
{
    std::vector<unsigned> out;
    for (const auto& tok : split(s, ',')) {
        if (tok == "1")
            out.push_back(1);
        else if (tok == "2")
            out.push_back(2);
        else
            throw ExperimentError("--eps entries must be 1 or 2, got '" + tok + "'");
    }
    return out;
}

}  // namespace

const std::vector<std::string>& experiment_names()
{
    static const std::vector<std::string> names = {
        "count-primes", "count-primes-ap", "interval-primes", "frobenius-dist", "type-dist",  "mobius-sum",
        "mobius-full-sum", "chowla", "chowla-classical", "bateman-horn", "weil-sum"};
    return names;
}

std::vector<QuadraticFamily> parse_families(const std::map<std::string, std::string>& params,
                                            const FieldPtr& field)
{
    const auto fs = split(need(params, "f"), ';');
    const auto gs = split(need(params, "g"), ';');
    if (gs.size() != 1 && gs.size() != fs.size())
        throw ExperimentError("--g must list one polynomial or as many as --f");
    const Polynomial center = need_poly(params, "center", field);
    const unsigned m = need_uint(params, "m");
    std::vector<QuadraticFamily> out;
    for (std::size_t i = 0; i < fs.size(); ++i) {
        try {
            Polynomial f = parse_literal(field, fs[i]);
            Polynomial g = parse_literal(field, gs.size() == 1 ? gs[0] : gs[i]);
            const auto violations = check_admissible(f, g, center, m);
            if (!violations.empty()) {
                std::string msg = "family " + std::to_string(i) + " is inadmissible:";
                for (auto v : violations) msg += " " + label(v);
                throw ExperimentError(msg);
            }
            out.emplace_back(std::move(f), std::move(g), ShortInterval(center, m));
        } catch (const PolynomialError& e) {
            throw ExperimentError("family " + std::to_string(i) + ": " + e.what());
        }
    }
    return out;
}

ExperimentReport run_experiment(const ExperimentDescriptor& d, const FieldPtr& field, const RunOptions& opts)
{
    const auto& p = d.params;
    const auto& names = experiment_names();
    if (std::find(names.begin(), names.end(), d.name) == names.end())
        throw ExperimentError("unknown experiment '" + d.name + "'");
    if (d.name == "count-primes") return prime_count_total(field, need_uint(p, "n"), opts);
    if (d.name == "count-primes-ap")
        return prime_count_ap(field, need_uint(p, "n"), need_poly(p, "qmod", field), need_poly(p, "residue", field),
                              opts);
    if (d.name == "type-dist") return type_distribution_Mn(field, need_uint(p, "n"), opts);
    if (d.name == "mobius-full-sum") return mobius_full_sum(field, need_uint(p, "n"), opts);
    if (d.name == "weil-sum") return weil_character_sum(field, need_poly(p, "poly", field), opts);
    if (d.name == "chowla-classical") {
        std::vector<Polynomial> shifts;
        for (const auto& s : split(need(p, "shifts"), ';')) shifts.push_back(parse_literal(field, s));
        return chowla_classical(field, need_uint(p, "n"), shifts, parse_eps(need(p, "eps")), opts);
    }

    const auto families = parse_families(p, field);
    if (d.name == "chowla") return chowla_interval(families, parse_eps(need(p, "eps")), opts);
    if (d.name == "bateman-horn") return bateman_horn_count(families, opts);
    if (families.size() != 1) throw ExperimentError(d.name + " takes a single family");
    if (d.name == "interval-primes") return count_primes_interval(families[0], opts);
    if (d.name == "frobenius-dist") return frobenius_distribution(families[0], opts);
    if (d.name == "mobius-sum") return mobius_interval_sum(families[0], opts);
    throw ExperimentError("unknown experiment '" + d.name + "'");
}

SweepResult sweep(const ExperimentDescriptor& descriptor, const std::vector<std::uint64_t>& q_grid,
                  const RunOptions& opts)
{
    SweepResult result;
    for (const auto q : q_grid) {
        try {
            result.reports.push_back(run_experiment(descriptor, Field::of_order(q), opts));
        } catch (const std::exception& e) {
            result.error = "q=" + std::to_string(q) + ": " + e.what();
            result.failed_q = q;
            break;
        }
    }
    return result;
}

}  // namespace fqt
