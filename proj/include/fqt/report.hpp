#ifndef FQT_REPORT_HPP
#define FQT_REPORT_HPP

#include <string>

#include <json.hpp>

#include "fqt/experiments.hpp"
#include "fqt/factorization.hpp"

namespace fqt {

struct OutputOptions {
    /// Write elapsed_ms as 0 so that repeated runs are byte-identical.
    bool timing = true;
};

nlohmann::ordered_json field_json(const Field& field);

/// {"unit": code, "factors": [[literal, multiplicity], ...]}
nlohmann::ordered_json to_json(const Factorization& fac);

nlohmann::ordered_json to_json(const ExperimentReport& report, const OutputOptions& out = {});

/// Single-line JSON document.
std::string to_json_line(const ExperimentReport& report, const OutputOptions& out = {});

std::string csv_header();
/// experiment,q,observed,main_term_num,main_term_den,bound,deviation,elapsed_ms
std::string to_csv_row(const ExperimentReport& report, const OutputOptions& out = {});

}  // namespace fqt

#endif
