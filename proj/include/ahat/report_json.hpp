#ifndef AHAT_REPORT_JSON_HPP
#define AHAT_REPORT_JSON_HPP

#include <string>

#include <json.hpp>

#include <ahat/document.hpp>
#include <ahat/index.hpp>
#include <ahat/series.hpp>

namespace ahat
{

// Report objects as JSON. Every integer is rendered as a decimal string so
// that big coefficients survive any JSON reader.

inline nlohmann::ordered_json coefficients_to_json(const truncated_series &s)
{
    auto arr = nlohmann::ordered_json::array();
    for (const auto &c : s.coefficients()) {
        arr.push_back(c.str());
    }
    return arr;
}

inline nlohmann::ordered_json term_to_json(const std::optional<series_term<integer>> &t)
{
    if (!t) {
        return nullptr;
    }
    return {{"exponent", std::to_string(t->exponent)}, {"coefficient", t->coefficient.str()}};
}

namespace detail
{

inline nlohmann::ordered_json optional_integer(const std::optional<std::int64_t> &v)
{
    if (!v) {
        return nullptr;
    }
    return std::to_string(*v);
}

} // namespace detail

// Report fields appended to obj.
inline void append_report(nlohmann::ordered_json &obj, const obstruction_report &r)
{
    obj["verdict"] = to_string(r.outcome);
    obj["witness"] = r.witness ? nlohmann::ordered_json(*r.witness) : nlohmann::ordered_json(nullptr);
    obj["min_sum_plus"] = detail::optional_integer(r.min_sum_plus);
    obj["min_sum_minus"] = detail::optional_integer(r.min_sum_minus);
    obj["detail"] = r.detail;
}

inline nlohmann::ordered_json to_json(const obstruction_report &r)
{
    nlohmann::ordered_json obj = nlohmann::ordered_json::object();
    append_report(obj, r);
    return obj;
}

inline void append_series(nlohmann::ordered_json &obj, const truncated_series &s)
{
    obj["order"] = std::to_string(s.order());
    obj["coefficients"] = coefficients_to_json(s);
}

inline nlohmann::ordered_json to_json(const cross_validation_report &r)
{
    nlohmann::ordered_json obj = nlohmann::ordered_json::object();
    obj["n"] = std::to_string(r.n);
    obj["order"] = std::to_string(r.order);
    obj["parity_spin"] = r.parity_spin;
    obj["series_zero"] = r.vanishing.is_zero;
    obj["lowest_term"] = term_to_json(r.vanishing.lowest_term);
    append_report(obj, r.obstruction);
    obj["consistent"] = r.consistent();
    obj["disagreements"] = r.disagreements;
    obj["coefficients"] = coefficients_to_json(r.vanishing.series);
    return obj;
}

} // namespace ahat

#endif
