#include "fqt/report.hpp"

#include <cstdio>

namespace fqt {

namespace {

// Fixed-precision decimal so output never depends on locale or shortest-repr quirks.
std::string decimal(double v)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6f", v);
    return buf;
}

nlohmann::ordered_json rational_json(const Rational& r) { return {{"num", r.numerator()}, {"den", r.denominator()}}; }

}  // namespace

nlohmann::ordered_json field_json(const Field& field)
{
    return {{"p", field.characteristic()},
            {"nu", field.extension_degree()},
            {"modulus", to_literal(Polynomial(Field::make(field.characteristic()),
                                              std::vector<Code>(field.modulus().begin(), field.modulus().end())))},
            {"q", field.cardinality()}};
}

nlohmann::ordered_json to_json(const Factorization& fac)
{
    auto factors = nlohmann::ordered_json::array();
    for (const auto& f : fac.factors) factors.push_back({to_literal(f.poly), f.multiplicity});
    return {{"unit", fac.unit}, {"factors", std::move(factors)}};
}

nlohmann::ordered_json to_json(const ExperimentReport& r, const OutputOptions& out)
{
    nlohmann::ordered_json j;
    j["experiment"] = r.experiment;
    j["field"] = field_json(*r.field);
    j["parameters"] = r.parameters;
    j["observed"] = r.observed;
    j["main_term"] = rational_json(r.main_term);
    j["main_term_decimal"] = decimal(to_double(r.main_term));
    if (r.bound) {
        j["bound"] = {{"formula", r.bound->formula},
                      {"squared", r.bound->squared},
                      {"value", decimal(r.bound->value)},
                      {"holds", r.bound->holds}};
    } else {
        j["bound"] = nullptr;
    }
    j["deviation"] = rational_json(r.deviation);
    if (auto nd = r.normalized_deviation())
        j["normalized_deviation"] = decimal(*nd);
    else
        j["normalized_deviation"] = nullptr;
    j["elapsed_ms"] = out.timing ? r.elapsed_ms : 0.0;
    j["seed"] = r.seed;
    j["enumerated"] = r.enumerated;
    auto checks = nlohmann::ordered_json::object();
    for (const auto& c : r.checks) checks[c.name] = c.holds;
    j["checks"] = std::move(checks);
    j["details"] = r.details;
    return j;
}

std::string to_json_line(const ExperimentReport& report, const OutputOptions& out)
{
    return to_json(report, out).dump();
}

std::string csv_header() { return "experiment,q,observed,main_term_num,main_term_den,bound,deviation,elapsed_ms"; }

std::string to_csv_row(const ExperimentReport& r, const OutputOptions& out)
{
    std::string row = r.experiment;
    row += ',' + std::to_string(r.field->cardinality());
    row += ',' + std::to_string(r.observed);
    row += ',' + std::to_string(r.main_term.numerator());
    row += ',' + std::to_string(r.main_term.denominator());
    row += ',' + (r.bound ? decimal(r.bound->value) : std::string());
    row += ',' + decimal(to_double(r.deviation));
    row += ',' + decimal(out.timing ? r.elapsed_ms : 0.0);
    return row;
}

}  // namespace fqt
