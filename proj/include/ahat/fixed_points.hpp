#ifndef AHAT_FIXED_POINTS_HPP
#define AHAT_FIXED_POINTS_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace ahat
{

// Raised when fixed-point data violates one of its invariants.
class invalid_data : public std::invalid_argument
{
public:
    using std::invalid_argument::invalid_argument;
};

// Raised when a linear action has repeated exponents, i.e. its fixed set
// contains a positive-dimensional component.
class non_isolated_fixed_points : public std::invalid_argument
{
public:
    using std::invalid_argument::invalid_argument;
};

// Orientation sign of a fixed point.
enum class orientation : int { positive = 1, negative = -1 };

inline int to_int(orientation o)
{
    return static_cast<int>(o);
}

inline orientation orientation_from_int(std::int64_t v)
{
    if (v == 1) {
        return orientation::positive;
    }
    if (v == -1) {
        return orientation::negative;
    }
    throw invalid_data("orientation sign must be +1 or -1, got " + std::to_string(v));
}

inline orientation opposite(orientation o)
{
    return o == orientation::positive ? orientation::negative : orientation::positive;
}

// An isolated fixed point: its positive rotation weights (kept sorted, since
// only the multiset matters) and its orientation sign.
class fixed_point
{
public:
    fixed_point(std::string label, std::vector<std::int64_t> weights, orientation sign)
        : m_label(std::move(label)), m_weights(std::move(weights)), m_sign(sign)
    {
        if (m_weights.empty()) {
            throw invalid_data("fixed point '" + m_label + "' has no weights");
        }
        for (auto w : m_weights) {
            if (w <= 0) {
                throw invalid_data("fixed point '" + m_label + "' has non-positive weight " + std::to_string(w));
            }
        }
        std::sort(m_weights.begin(), m_weights.end());
        std::int64_t total = 0;
        for (auto w : m_weights) {
            if (total > std::numeric_limits<std::int64_t>::max() - w) {
                throw invalid_data("weight sum of fixed point '" + m_label + "' overflows");
            }
            total += w;
        }
        m_weight_sum = total;
    }

    const std::string &label() const
    {
        return m_label;
    }
    const std::vector<std::int64_t> &weights() const
    {
        return m_weights;
    }
    orientation sign() const
    {
        return m_sign;
    }
    std::int64_t weight_sum() const
    {
        return m_weight_sum;
    }

    friend bool operator==(const fixed_point &, const fixed_point &) = default;

private:
    std::string m_label;
    std::vector<std::int64_t> m_weights;
    orientation m_sign;
    std::int64_t m_weight_sum = 0;
};

inline std::int64_t weight_sum(const fixed_point &p)
{
    return p.weight_sum();
}

// The fixed set of a circle action on a closed oriented 2n-manifold with
// isolated fixed points. Points keep their input order.
class fixed_point_data
{
public:
    fixed_point_data(std::int64_t half_dim, std::vector<fixed_point> points)
        : m_half_dim(half_dim), m_points(std::move(points))
    {
        if (m_half_dim < 1) {
            throw invalid_data("half_dim must be positive, got " + std::to_string(m_half_dim));
        }
        if (m_points.empty()) {
            throw invalid_data("fixed-point data needs at least one point");
        }
        std::set<std::string> seen;
        for (const auto &p : m_points) {
            if (static_cast<std::int64_t>(p.weights().size()) != m_half_dim) {
                throw invalid_data("fixed point '" + p.label() + "' has " + std::to_string(p.weights().size())
                                   + " weights but half_dim is " + std::to_string(m_half_dim));
            }
            if (!seen.insert(p.label()).second) {
                throw invalid_data("duplicate fixed point label '" + p.label() + "'");
            }
        }
    }

    std::int64_t half_dim() const
    {
        return m_half_dim;
    }
    const std::vector<fixed_point> &points() const
    {
        return m_points;
    }
    std::int64_t max_weight_sum() const
    {
        std::int64_t m = 0;
        for (const auto &p : m_points) {
            m = std::max(m, p.weight_sum());
        }
        return m;
    }

    friend bool operator==(const fixed_point_data &, const fixed_point_data &) = default;

private:
    std::int64_t m_half_dim;
    std::vector<fixed_point> m_points;
};

// g . [z_0 : ... : z_n] = [g^a_0 z_0 : ... : g^a_n z_n] on CP^n.
class linear_action
{
public:
    explicit linear_action(std::vector<std::int64_t> exponents) : m_exponents(std::move(exponents))
    {
        if (m_exponents.size() < 2u) {
            throw std::invalid_argument("a linear action on CP^n needs at least two exponents");
        }
        auto sorted = m_exponents;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
            throw non_isolated_fixed_points("repeated exponents give a non-isolated fixed set");
        }
    }

    const std::vector<std::int64_t> &exponents() const
    {
        return m_exponents;
    }

    // n, for an action on CP^n.
    std::int64_t dimension() const
    {
        return static_cast<std::int64_t>(m_exponents.size()) - 1;
    }

    friend bool operator==(const linear_action &, const linear_action &) = default;

private:
    std::vector<std::int64_t> m_exponents;
};

// Exponents (0, 1, ..., n).
inline linear_action cp_standard_action(std::int64_t n)
{
    if (n < 1) {
        throw std::invalid_argument("CP^n needs n >= 1, got " + std::to_string(n));
    }
    std::vector<std::int64_t> exps(static_cast<std::size_t>(n) + 1u);
    std::iota(exps.begin(), exps.end(), std::int64_t{0});
    return linear_action(std::move(exps));
}

namespace detail
{

inline std::int64_t checked_abs_difference(std::int64_t a, std::int64_t b)
{
    std::int64_t d = 0;
    if (__builtin_sub_overflow(a, b, &d) || d == std::numeric_limits<std::int64_t>::min()) {
        throw std::overflow_error("exponent difference overflows");
    }
    return d < 0 ? -d : d;
}

} // namespace detail

// The fixed points of a linear action are the coordinate points p_i. In the
// chart z_j / z_i the circle rotates with complex weight a_j - a_i. Reversing
// the orientation of each negatively rotated plane gives positive weights
// |a_j - a_i| and the sign (-1)^(number of j with a_j < a_i).
inline fixed_point_data fixed_point_data_of(const linear_action &action)
{
    const auto &a = action.exponents();
    std::vector<fixed_point> points;
    points.reserve(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        std::vector<std::int64_t> weights;
        weights.reserve(a.size() - 1u);
        std::size_t below = 0;
        for (std::size_t j = 0; j < a.size(); ++j) {
            if (j == i) {
                continue;
            }
            weights.push_back(detail::checked_abs_difference(a[j], a[i]));
            if (a[j] < a[i]) {
                ++below;
            }
        }
        points.emplace_back("p_" + std::to_string(i), std::move(weights),
                            below % 2u == 0u ? orientation::positive : orientation::negative);
    }
    return fixed_point_data(action.dimension(), std::move(points));
}

// Weight sum of p_(m+k) for the standard action on CP^(2m): m(m+1) + k^2.
inline std::int64_t cp_weight_sum_formula(std::int64_t m, std::int64_t k)
{
    if (m < 1) {
        throw std::out_of_range("m must be positive, got " + std::to_string(m));
    }
    if (k < -m || k > m) {
        throw std::out_of_range("|k| must not exceed m, got k = " + std::to_string(k) + ", m = " + std::to_string(m));
    }
    return m * (m + 1) + k * k;
}

} // namespace ahat

#endif
