#include "fqt/cli.hpp"

#include <charconv>
#include <fstream>
#include <iostream>
#include <map>
#include <random>
#include <sstream>

#include <CLI11.hpp>

#include "fqt/factorization.hpp"
#include "fqt/report.hpp"
#include "fqt/sweep.hpp"

namespace fqt::cli {

namespace {

class CliError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

const std::vector<std::string>& command_names()
{
    static const std::vector<std::string> names = [] {
        std::vector<std::string> v = {"field-info", "factor", "mobius", "disc", "verify-identity", "sweep"};
        for (const auto& e : experiment_names()) v.push_back(e);
        return v;
    }();
    return names;
}

// Every flag takes a string value; typed parsing happens per command so that
// config-file values and flags go through the same path.
const std::vector<std::pair<std::string, std::string>>& flag_table()
{
    static const std::vector<std::pair<std::string, std::string>> flags = {
        {"p", "field characteristic"},
        {"ext", "extension degree nu (default 1)"},
        {"modulus", "modulus over F_p, ascending codes including the leading 1"},
        {"f", "family f literal(s), ';'-separated"},
        {"g", "family g literal(s), ';'-separated"},
        {"center", "interval center literal"},
        {"m", "interval radius"},
        {"n", "degree"},
        {"poly", "polynomial literal"},
        {"qmod", "modulus Q for count-primes-ap"},
        {"residue", "residue A for count-primes-ap"},
        {"q-grid", "comma list of field orders, e.g. 3,5,7,9 or 3^2"},
        {"experiment", "experiment run by sweep"},
        {"shifts", "';'-separated shift literals"},
        {"eps", "comma list of exponents in {1,2}"},
        {"seed", "64-bit seed (default 0)"},
        {"threads", "worker threads (default 1)"},
        {"output", "json or csv (default json)"},
        {"budget", "maximum enumerated polynomials (default 10000000)"},
        {"trials", "random partial specializations for verify-identity (default 100)"},
    };
    return flags;
}

std::map<std::string, std::string> read_config(const std::string& path)
{
    std::ifstream in(path);
    if (!in) throw CliError("cannot open config file '" + path + "'");
    std::map<std::string, std::string> values;
    std::string line;
    int lineno = 0;
    auto trim = [](std::string s) {
        const auto b = s.find_first_not_of(" \t\r");
        const auto e = s.find_last_not_of(" \t\r");
        if (b == std::string::npos) return std::string();
        s = s.substr(b, e - b + 1);
        if (s.size() >= 2 && s.front() == '"' && s.back() == '"') s = s.substr(1, s.size() - 2);
        return s;
    };
    while (std::getline(in, line)) {
        ++lineno;
        const std::string t = trim(line);
        if (t.empty() || t[0] == '#') continue;
        const auto eq = t.find('=');
        if (eq == std::string::npos)
            throw CliError(path + ":" + std::to_string(lineno) + ": expected key=value");
        std::string key = trim(t.substr(0, eq));
        if (key.rfind("--", 0) == 0) key = key.substr(2);
        values[key] = trim(t.substr(eq + 1));
    }
    return values;
}

template <class T>
T to_uint(const std::string& key, const std::string& s)
{
    T v{};
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size())
        throw CliError("--" + key + " expects a non-negative integer, got '" + s + "'");
    return v;
}

struct Settings {
    std::map<std::string, std::string> values;
    bool timing = true;

    bool has(const std::string& key) const { return values.count(key) != 0; }
    const std::string& get(const std::string& key) const
    {
        const auto it = values.find(key);
        if (it == values.end()) throw CliError("missing required flag --" + key);
        return it->second;
    }
    template <class T>
    T uint_or(const std::string& key, T fallback) const
    {
        return has(key) ? to_uint<T>(key, get(key)) : fallback;
    }
};

FieldPtr make_field(const Settings& s)
{
    const auto p = to_uint<std::uint64_t>("p", s.get("p"));
    const unsigned nu = s.uint_or<unsigned>("ext", 1);
    std::optional<std::vector<Code>> modulus;
    if (s.has("modulus")) {
        const auto prime = Field::make(p);
        const Polynomial m = parse_poly(s.get("modulus"), prime);
        modulus = m.coeffs();
    }
    return Field::make(p, nu, modulus);
}

RunOptions run_options(const Settings& s)
{
    RunOptions opts;
    opts.seed = s.uint_or<std::uint64_t>("seed", 0);
    opts.threads = s.uint_or<unsigned>("threads", 1);
    if (opts.threads == 0) throw CliError("--threads must be positive");
    opts.budget = s.uint_or<std::uint64_t>("budget", opts.budget);
    return opts;
}

bool csv_output(const Settings& s)
{
    const std::string mode = s.has("output") ? s.get("output") : "json";
    if (mode != "json" && mode != "csv") throw CliError("--output must be json or csv");
    return mode == "csv";
}

int emit(const std::vector<ExperimentReport>& reports, const Settings& s, std::ostream& out)
{
    const OutputOptions oo{s.timing};
    const bool csv = csv_output(s);
    if (csv) out << csv_header() << '\n';
    bool correct = true;
    for (const auto& r : reports) {
        out << (csv ? to_csv_row(r, oo) : to_json_line(r, oo)) << '\n';
        correct = correct && r.correct();
    }
    return correct ? ok : bound_violated;
}

ExperimentDescriptor descriptor_for(const std::string& name, const Settings& s)
{
    ExperimentDescriptor d{name, {}};
    for (const auto& [k, v] : s.values) d.params[k] = v;
    return d;
}

std::vector<std::uint64_t> parse_grid(const std::string& text)
{
    std::vector<std::uint64_t> grid;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) grid.push_back(parse_field_order(tok));
    if (grid.empty()) throw CliError("--q-grid is empty");
    return grid;
}

int verify_identity(const Settings& s, std::ostream& out)
{
    const FieldPtr field = make_field(s);
    const auto families = parse_families(s.values, field);
    if (families.size() != 1) throw CliError("verify-identity takes a single family");
    const auto& family = families.front();
    const unsigned trials = s.uint_or<unsigned>("trials", 100);
    const std::uint64_t seed = s.uint_or<std::uint64_t>("seed", 0);

    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<Code> coord(0, field->cardinality() - 1);
    unsigned passed = 0;
    std::vector<Code> partial(family.radius(), 0);
    for (unsigned i = 0; i < trials; ++i) {
        // first trial is the all-zero specialization
        if (i > 0)
            for (auto& a : partial) a = coord(rng);
        if (verify_discriminant_identity(family, partial)) ++passed;
    }
    nlohmann::ordered_json j;
    j["experiment"] = "verify_discriminant_identity";
    j["field"] = field_json(*field);
    j["parameters"] = {{"f", to_literal(family.f())},
                       {"g", to_literal(family.g())},
                       {"center", to_literal(family.center())},
                       {"m", family.radius()}};
    j["trials"] = trials;
    j["passed"] = passed;
    j["seed"] = seed;
    j["identity"] = to_literal((family.f() * family.g()).scalar_mul(field->from_int(-4)));
    out << j.dump() << '\n';
    return passed == trials ? ok : bound_violated;
}

int dispatch(const std::string& command, const Settings& s, std::ostream& out, std::ostream& err)
{
    if (command == "field-info") {
        const FieldPtr field = make_field(s);
        auto j = field_json(*field);
        j["description"] = field->describe();
        j["odd"] = field->odd();
        out << j.dump() << '\n';
        return ok;
    }
    if (command == "factor") {
        const FieldPtr field = make_field(s);
        const Polynomial f = parse_poly(s.get("poly"), field);
        out << to_json(factor(f, s.uint_or<std::uint64_t>("seed", 0))).dump() << '\n';
        return ok;
    }
    if (command == "mobius") {
        const FieldPtr field = make_field(s);
        out << mobius(parse_poly(s.get("poly"), field), s.uint_or<std::uint64_t>("seed", 0)) << '\n';
        return ok;
    }
    if (command == "disc") {
        const FieldPtr field = make_field(s);
        out << discriminant(parse_poly(s.get("poly"), field)) << '\n';
        return ok;
    }
    if (command == "verify-identity") return verify_identity(s, out);
    if (command == "sweep") {
        const std::string experiment = s.get("experiment");
        const auto grid = parse_grid(s.get("q-grid"));
        const SweepResult result = sweep(descriptor_for(experiment, s), grid, run_options(s));
        int code = emit(result.reports, s, out);
        if (result.error) {
            if (!csv_output(s)) {
                nlohmann::ordered_json j = {{"sweep_error", *result.error}, {"partial", true}};
                out << j.dump() << '\n';
            }
            err << "sweep aborted: " << *result.error << '\n';
            return usage_error;
        }
        return code;
    }
    // Remaining commands are experiments.
    const FieldPtr field = make_field(s);
    (void)err;
    return emit({run_experiment(descriptor_for(command, s), field, run_options(s))}, s, out);
}

}  // namespace

Polynomial parse_poly(std::string_view literal, const FieldPtr& field)
{
    try {
        return parse_literal(field, literal);
    } catch (const PolynomialError& e) {
        throw CliError(std::string("bad polynomial literal: ") + e.what());
    }
}

std::uint64_t parse_field_order(std::string_view text)
{
    std::string s(text);
    s.erase(0, s.find_first_not_of(" \t"));
    s.erase(s.find_last_not_of(" \t") + 1);
    const auto caret = s.find('^');
    if (caret == std::string::npos) return to_uint<std::uint64_t>("q-grid", s);
    const auto base = to_uint<std::uint64_t>("q-grid", s.substr(0, caret));
    const auto e = to_uint<unsigned>("q-grid", s.substr(caret + 1));
    std::uint64_t q = 1;
    for (unsigned i = 0; i < e; ++i) {
        if (q > UINT32_MAX) throw CliError("field order '" + s + "' is too large");
        q *= base;
    }
    return q;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Exact F_q[t] arithmetic and exhaustive checks of prime-count, Mobius and character-sum "
                 "statements.\nPolynomial literals are comma-separated element codes, constant term first."};
    app.name("fqt");

    std::string command;
    std::string config_path;
    bool no_timing = false;
    std::map<std::string, std::string> flag_values;
    std::string command_list;
    for (const auto& c : command_names()) command_list += (command_list.empty() ? "" : ", ") + c;
    app.add_option("command", command, "one of: " + command_list)->required();
    for (const auto& [name, help] : flag_table()) app.add_option("--" + name, flag_values[name], help);
    app.add_option("--config", config_path, "flat key=value file; flags override its values");
    app.add_flag("--no-timing", no_timing, "write elapsed_ms as 0 (byte-reproducible output)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return ok;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n\n" << app.help();
        return usage_error;
    }

    const auto& names = command_names();
    if (std::find(names.begin(), names.end(), command) == names.end()) {
        err << "error: unknown command '" << command << "'\n\n" << app.help();
        return usage_error;
    }

    try {
        Settings s;
        if (!config_path.empty()) {
            for (auto& [k, v] : read_config(config_path)) {
                if (k == "no-timing") {
                    no_timing = no_timing || v == "true" || v == "1";
                    continue;
                }
                if (!flag_values.count(k)) throw CliError("unknown key '" + k + "' in config file");
                s.values[k] = v;
            }
        }
        for (const auto& [name, help] : flag_table())
            if (app.count("--" + name) > 0) s.values[name] = flag_values[name];
        s.timing = !no_timing;
        return dispatch(command, s, out, err);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return usage_error;
    }
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    std::vector<const char*> argv = {"fqt"};
    for (const auto& a : args) argv.push_back(a.c_str());
    return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace fqt::cli
