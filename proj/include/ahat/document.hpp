#ifndef AHAT_DOCUMENT_HPP
#define AHAT_DOCUMENT_HPP

#include <charconv>
#include <cstdint>
#include <limits>
#include <string>
#include <string_view>
#include <system_error>
#include <utility>
#include <vector>

#include <json.hpp>

#include <ahat/fixed_points.hpp>

namespace ahat
{

// Fixed-point data document:
//
//   {"half_dim": 2,
//    "points": [{"label": "p_0", "sign": 1, "weights": [1, 2]}, ...]}
//
// Integers may be JSON numbers or decimal strings ("2", "+1", "-1"); the
// parser accepts both. Unknown keys are ignored so that report output, which
// embeds a document, parses back as well.

enum class integer_style { number, decimal_string };

namespace detail
{

inline std::int64_t parse_decimal(std::string_view text, const std::string &what)
{
    auto body = text;
    if (!body.empty() && body.front() == '+') {
        body.remove_prefix(1);
        if (!body.empty() && body.front() == '-') {
            throw invalid_data(what + ": malformed integer \"" + std::string(text) + "\"");
        }
    }
    std::int64_t value = 0;
    const auto [ptr, ec] = std::from_chars(body.data(), body.data() + body.size(), value);
    if (body.empty() || ec != std::errc{} || ptr != body.data() + body.size()) {
        throw invalid_data(what + ": malformed integer \"" + std::string(text) + "\"");
    }
    return value;
}

inline std::int64_t read_integer(const nlohmann::ordered_json &j, const std::string &what)
{
    if (j.is_number_integer()) {
        if (j.is_number_unsigned() && j.get<std::uint64_t>() > static_cast<std::uint64_t>(std::numeric_limits<std::int64_t>::max())) {
            throw invalid_data(what + ": integer out of range");
        }
        return j.get<std::int64_t>();
    }
    if (j.is_string()) {
        return parse_decimal(j.get_ref<const std::string &>(), what);
    }
    throw invalid_data(what + ": expected an integer, got " + std::string(j.type_name()));
}

inline const nlohmann::ordered_json &require_field(const nlohmann::ordered_json &obj, const char *key,
                                                   const std::string &where)
{
    const auto it = obj.find(key);
    if (it == obj.end()) {
        throw invalid_data(where + ": missing field \"" + key + "\"");
    }
    return *it;
}

template <typename Json>
Json render_integer(std::int64_t v, integer_style style)
{
    if (style == integer_style::decimal_string) {
        return Json(std::to_string(v));
    }
    return Json(v);
}

} // namespace detail

inline fixed_point_data fixed_point_data_from_json(const nlohmann::ordered_json &doc)
{
    if (!doc.is_object()) {
        throw invalid_data("document: expected an object at top level");
    }
    const auto half_dim = detail::read_integer(detail::require_field(doc, "half_dim", "document"), "half_dim");
    const auto &pts = detail::require_field(doc, "points", "document");
    if (!pts.is_array()) {
        throw invalid_data("points: expected an array");
    }
    std::vector<fixed_point> points;
    points.reserve(pts.size());
    for (std::size_t i = 0; i < pts.size(); ++i) {
        const auto where = "points[" + std::to_string(i) + "]";
        const auto &p = pts[i];
        if (!p.is_object()) {
            throw invalid_data(where + ": expected an object");
        }
        const auto &label = detail::require_field(p, "label", where);
        if (!label.is_string()) {
            throw invalid_data(where + ".label: expected a string");
        }
        const auto sign = orientation_from_int(detail::read_integer(detail::require_field(p, "sign", where), where + ".sign"));
        const auto &ws = detail::require_field(p, "weights", where);
        if (!ws.is_array()) {
            throw invalid_data(where + ".weights: expected an array");
        }
        std::vector<std::int64_t> weights;
        weights.reserve(ws.size());
        for (std::size_t k = 0; k < ws.size(); ++k) {
            weights.push_back(detail::read_integer(ws[k], where + ".weights[" + std::to_string(k) + "]"));
        }
        points.emplace_back(label.get<std::string>(), std::move(weights), sign);
    }
    return fixed_point_data(half_dim, std::move(points));
}

inline fixed_point_data parse_fixed_point_data(std::string_view text)
{
    nlohmann::ordered_json doc;
    try {
        doc = nlohmann::ordered_json::parse(text.begin(), text.end());
    } catch (const nlohmann::json::parse_error &e) {
        throw invalid_data(std::string("malformed document: ") + e.what());
    }
    return fixed_point_data_from_json(doc);
}

inline nlohmann::ordered_json to_json(const fixed_point_data &data, integer_style style = integer_style::number)
{
    using json = nlohmann::ordered_json;
    json points = json::array();
    for (const auto &p : data.points()) {
        json weights = json::array();
        for (auto w : p.weights()) {
            weights.push_back(detail::render_integer<json>(w, style));
        }
        json sign = style == integer_style::decimal_string
                        ? json(p.sign() == orientation::positive ? "+1" : "-1")
                        : json(to_int(p.sign()));
        points.push_back(json{{"label", p.label()}, {"sign", std::move(sign)}, {"weights", std::move(weights)}});
    }
    return json{{"half_dim", detail::render_integer<json>(data.half_dim(), style)}, {"points", std::move(points)}};
}

inline std::string serialize_fixed_point_data(const fixed_point_data &data, integer_style style = integer_style::number)
{
    return to_json(data, style).dump(2);
}

} // namespace ahat

#endif
