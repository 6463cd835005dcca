#ifndef AHAT_CLI_HPP
#define AHAT_CLI_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <fstream>
#include <iomanip>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include <ahat/document.hpp>
#include <ahat/fixed_points.hpp>
#include <ahat/index.hpp>
#include <ahat/report_json.hpp>
#include <ahat/series.hpp>

namespace ahat::cli
{

enum class subcommand { weights, series, check, cross_validate };

enum class output_format { table, structured };

struct command_config {
    subcommand command = subcommand::weights;
    std::optional<std::int64_t> n;
    std::optional<std::vector<std::int64_t>> exponents;
    std::optional<std::string> input_path;
    std::optional<std::int64_t> order;
    output_format format = output_format::table;
    bool dense = false;
};

// Exit statuses. A NOT_SPIN verdict is a successful computation.
inline constexpr int exit_ok = 0;
inline constexpr int exit_disagreement = 1;
inline constexpr int exit_usage = 2;
inline constexpr int exit_invalid_input = 3;

struct command_result {
    int exit_code = exit_ok;
    std::string out;
    std::string err;
};

class usage_error : public std::invalid_argument
{
public:
    using std::invalid_argument::invalid_argument;
};

namespace detail
{

inline std::string read_file(const std::string &path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw invalid_data("cannot open input file '" + path + "'");
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline fixed_point_data load_data(const command_config &cfg)
{
    const int sources = int(cfg.n.has_value()) + int(cfg.exponents.has_value()) + int(cfg.input_path.has_value());
    if (sources != 1) {
        throw usage_error("exactly one of --n, --exponents, --input must be given");
    }
    if (cfg.n) {
        if (*cfg.n < 1) {
            throw usage_error("--n must be a positive integer");
        }
        return fixed_point_data_of(cp_standard_action(*cfg.n));
    }
    if (cfg.exponents) {
        try {
            return fixed_point_data_of(linear_action(*cfg.exponents));
        } catch (const std::invalid_argument &e) {
            throw usage_error(std::string("--exponents: ") + e.what());
        }
    }
    return parse_fixed_point_data(read_file(*cfg.input_path));
}

// Twice the largest weight sum plus one: shows each leading term and at
// least one further term of every geometric factor.
inline std::size_t default_order(const fixed_point_data &data)
{
    return static_cast<std::size_t>(2 * data.max_weight_sum() + 1);
}

inline std::size_t resolve_order(const command_config &cfg, const fixed_point_data &data)
{
    if (!cfg.order) {
        return default_order(data);
    }
    if (*cfg.order < 0) {
        throw usage_error("--order must be non-negative");
    }
    return static_cast<std::size_t>(*cfg.order);
}

inline std::string sign_symbol(orientation o)
{
    return o == orientation::positive ? "+" : "-";
}

inline std::string weight_list(const fixed_point &p)
{
    std::string s = "[";
    for (std::size_t i = 0; i < p.weights().size(); ++i) {
        if (i != 0) {
            s += ",";
        }
        s += std::to_string(p.weights()[i]);
    }
    return s + "]";
}

inline std::string term_text(const series_term<integer> &t)
{
    return t.coefficient.str() + " s^" + std::to_string(t.exponent);
}

inline void render_weights_table(std::ostream &os, const fixed_point_data &data)
{
    std::size_t label_width = 5;
    std::size_t weights_width = 7;
    for (const auto &p : data.points()) {
        label_width = std::max(label_width, p.label().size());
        weights_width = std::max(weights_width, weight_list(p).size());
    }
    os << std::left << std::setw(int(label_width)) << "label" << "  sign  " << std::setw(int(weights_width))
       << "weights" << "  sum\n";
    for (const auto &p : data.points()) {
        os << std::left << std::setw(int(label_width)) << p.label() << "  " << std::setw(4) << sign_symbol(p.sign())
           << "  " << std::setw(int(weights_width)) << weight_list(p) << "  " << p.weight_sum() << '\n';
    }
}

inline void render_series_table(std::ostream &os, const truncated_series &s, bool dense)
{
    os << "# equivariant A-hat series in s up to order " << s.order() << "; s^k stands for t^(k/2)\n";
    if (!dense && s.is_zero()) {
        os << "# all coefficients vanish up to order " << s.order() << '\n';
        return;
    }
    for (std::size_t k = 0; k <= s.order(); ++k) {
        if (dense || s[k] != 0) {
            os << "s^" << k << "  " << s[k].str() << '\n';
        }
    }
}

inline void render_report_table(std::ostream &os, const obstruction_report &r)
{
    const auto opt = [](const std::optional<std::int64_t> &v) { return v ? std::to_string(*v) : std::string("-"); };
    os << "verdict        " << to_string(r.outcome) << '\n';
    os << "witness        " << (r.witness ? *r.witness : std::string("-")) << '\n';
    os << "min_sum_plus   " << opt(r.min_sum_plus) << '\n';
    os << "min_sum_minus  " << opt(r.min_sum_minus) << '\n';
    os << "detail         " << r.detail << '\n';
}

inline std::string run_weights(const command_config &cfg)
{
    const auto data = load_data(cfg);
    if (cfg.format == output_format::structured) {
        return to_json(data, integer_style::decimal_string).dump(2) + "\n";
    }
    std::ostringstream os;
    render_weights_table(os, data);
    return os.str();
}

inline std::string run_series(const command_config &cfg)
{
    const auto data = load_data(cfg);
    const auto series = ahat_equivariant_series(data, resolve_order(cfg, data));
    if (cfg.format == output_format::structured) {
        auto obj = to_json(data, integer_style::decimal_string);
        append_series(obj, series);
        obj["lowest_term"] = term_to_json(series.lowest_term());
        return obj.dump(2) + "\n";
    }
    std::ostringstream os;
    render_series_table(os, series, cfg.dense);
    return os.str();
}

inline std::string run_check(const command_config &cfg)
{
    const auto data = load_data(cfg);
    const auto report = spin_obstruction_check(data);
    if (cfg.format == output_format::structured) {
        auto obj = to_json(data, integer_style::decimal_string);
        append_report(obj, report);
        append_series(obj, ahat_equivariant_series(data, resolve_order(cfg, data)));
        return obj.dump(2) + "\n";
    }
    std::ostringstream os;
    render_report_table(os, report);
    return os.str();
}

inline command_result run_cross_validate(const command_config &cfg)
{
    if (!cfg.n || cfg.exponents || cfg.input_path) {
        throw usage_error("cross-validate takes --n only");
    }
    if (*cfg.n < 1) {
        throw usage_error("--n must be a positive integer");
    }
    const auto order = resolve_order(cfg, fixed_point_data_of(cp_standard_action(*cfg.n)));
    const auto report = cross_validate(*cfg.n, order);

    command_result result;
    result.exit_code = report.consistent() ? exit_ok : exit_disagreement;
    if (cfg.format == output_format::structured) {
        result.out = to_json(report).dump(2) + "\n";
        return result;
    }
    std::ostringstream os;
    os << "CP^" << report.n << ", standard action, order " << report.order << '\n';
    os << "parity rule    " << (report.parity_spin ? "spin" : "not spin") << '\n';
    os << "series         "
       << (report.vanishing.is_zero ? std::string("zero")
                                    : "nonzero, lowest term " + term_text(*report.vanishing.lowest_term))
       << '\n';
    os << "obstruction    " << to_string(report.obstruction.outcome);
    if (report.obstruction.witness) {
        os << " (witness " << *report.obstruction.witness << ")";
    }
    os << '\n';
    os << "consistent     " << (report.consistent() ? "yes" : "no") << '\n';
    for (const auto &d : report.disagreements) {
        os << "disagreement   " << d << '\n';
    }
    result.out = os.str();
    return result;
}

} // namespace detail

inline command_result run(const command_config &cfg)
{
    command_result result;
    try {
        switch (cfg.command) {
            case subcommand::weights:
                result.out = detail::run_weights(cfg);
                break;
            case subcommand::series:
                result.out = detail::run_series(cfg);
                break;
            case subcommand::check:
                result.out = detail::run_check(cfg);
                break;
            case subcommand::cross_validate:
                return detail::run_cross_validate(cfg);
        }
    } catch (const usage_error &e) {
        result = {exit_usage, "", std::string("usage error: ") + e.what() + "\n"};
    } catch (const invalid_data &e) {
        result = {exit_invalid_input, "", std::string("invalid input: ") + e.what() + "\n"};
    }
    return result;
}

} // namespace ahat::cli

#endif
