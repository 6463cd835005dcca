#ifndef AHAT_SERIES_HPP
#define AHAT_SERIES_HPP

#include <algorithm>
#include <concepts>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace ahat
{

using integer = boost::multiprecision::cpp_int;

template <typename T>
concept series_coefficient = std::regular<T> && std::constructible_from<T, int> && requires(const T &a, const T &b) {
    { a + b } -> std::convertible_to<T>;
    { a - b } -> std::convertible_to<T>;
    { a * b } -> std::convertible_to<T>;
    { -a } -> std::convertible_to<T>;
};

// A nonzero term c * s^k of a series.
template <series_coefficient C>
struct series_term {
    std::size_t exponent;
    C coefficient;

    friend bool operator==(const series_term &, const series_term &) = default;
};

// Dense formal power series in one variable s, truncated at an inclusive
// order: the coefficients of s^0 ... s^order are exact, everything above is
// discarded. Binary operations take the smaller of the two orders.
//
// The localization formula uses half-integer powers of its variable t. All of
// them become integer powers after the substitution t = s^2, which is why the
// series here is in s and every exponent is non-negative.
template <series_coefficient C>
class basic_truncated_series
{
public:
    using coefficient_type = C;

    // Coefficients for s^0 ... s^(size - 1); the order is size - 1.
    explicit basic_truncated_series(std::vector<C> coeffs) : m_coeffs(std::move(coeffs))
    {
        if (m_coeffs.empty()) {
            throw std::invalid_argument("a truncated series needs at least one coefficient");
        }
    }

    basic_truncated_series(std::initializer_list<C> coeffs) : basic_truncated_series(std::vector<C>(coeffs)) {}

    static basic_truncated_series zero(std::size_t order)
    {
        return basic_truncated_series(std::vector<C>(order + 1, C(0)));
    }

    static basic_truncated_series one(std::size_t order)
    {
        return monomial(C(1), 0, order);
    }

    // c * s^k. Negative k is rejected along with k > order.
    static basic_truncated_series monomial(C c, std::int64_t k, std::size_t order)
    {
        if (k < 0) {
            throw std::out_of_range("negative exponent " + std::to_string(k) + " in a monomial");
        }
        if (static_cast<std::uint64_t>(k) > order) {
            throw std::out_of_range("monomial exponent " + std::to_string(k) + " exceeds the truncation order "
                                    + std::to_string(order));
        }
        auto retval = zero(order);
        retval.m_coeffs[static_cast<std::size_t>(k)] = std::move(c);
        return retval;
    }

    // 1 / (1 - s^(2w)) = 1 + s^(2w) + s^(4w) + ...
    static basic_truncated_series geometric(std::int64_t w, std::size_t order)
    {
        if (w <= 0) {
            throw std::invalid_argument("geometric series needs a positive weight, got " + std::to_string(w));
        }
        auto retval = zero(order);
        const auto step = 2u * static_cast<std::uint64_t>(w);
        for (std::uint64_t k = 0; k <= order; k += step) {
            retval.m_coeffs[static_cast<std::size_t>(k)] = C(1);
        }
        return retval;
    }

    std::size_t order() const
    {
        return m_coeffs.size() - 1u;
    }

    const std::vector<C> &coefficients() const
    {
        return m_coeffs;
    }

    const C &operator[](std::size_t k) const
    {
        return m_coeffs[k];
    }

    bool is_zero() const
    {
        return std::all_of(m_coeffs.begin(), m_coeffs.end(), [](const C &c) { return c == C(0); });
    }

    std::optional<series_term<C>> lowest_term() const
    {
        for (std::size_t k = 0; k < m_coeffs.size(); ++k) {
            if (m_coeffs[k] != C(0)) {
                return series_term<C>{k, m_coeffs[k]};
            }
        }
        return std::nullopt;
    }

    // Drop everything above new_order.
    basic_truncated_series truncate(std::size_t new_order) const
    {
        if (new_order > order()) {
            throw std::out_of_range("cannot truncate a series of order " + std::to_string(order()) + " to order "
                                    + std::to_string(new_order));
        }
        return basic_truncated_series(std::vector<C>(m_coeffs.begin(), m_coeffs.begin() + new_order + 1));
    }

    // Multiply by s^k, dropping what falls above the order.
    basic_truncated_series shift(std::size_t k) const
    {
        auto retval = zero(order());
        for (std::size_t i = 0; i + k <= order(); ++i) {
            retval.m_coeffs[i + k] = m_coeffs[i];
        }
        return retval;
    }

    friend basic_truncated_series add(const basic_truncated_series &a, const basic_truncated_series &b)
    {
        const auto n = std::min(a.order(), b.order());
        std::vector<C> out;
        out.reserve(n + 1);
        for (std::size_t k = 0; k <= n; ++k) {
            out.emplace_back(a.m_coeffs[k] + b.m_coeffs[k]);
        }
        return basic_truncated_series(std::move(out));
    }

    friend basic_truncated_series negate(const basic_truncated_series &a)
    {
        std::vector<C> out;
        out.reserve(a.m_coeffs.size());
        for (const auto &c : a.m_coeffs) {
            out.emplace_back(-c);
        }
        return basic_truncated_series(std::move(out));
    }

    // Truncated Cauchy product.
    friend basic_truncated_series mul(const basic_truncated_series &a, const basic_truncated_series &b)
    {
        const auto n = std::min(a.order(), b.order());
        auto retval = zero(n);
        for (std::size_t i = 0; i <= n; ++i) {
            if (a.m_coeffs[i] == C(0)) {
                continue;
            }
            for (std::size_t j = 0; i + j <= n; ++j) {
                if (b.m_coeffs[j] != C(0)) {
                    retval.m_coeffs[i + j] += a.m_coeffs[i] * b.m_coeffs[j];
                }
            }
        }
        return retval;
    }

    friend basic_truncated_series operator+(const basic_truncated_series &a, const basic_truncated_series &b)
    {
        return add(a, b);
    }

    friend basic_truncated_series operator-(const basic_truncated_series &a)
    {
        return negate(a);
    }

    friend basic_truncated_series operator-(const basic_truncated_series &a, const basic_truncated_series &b)
    {
        return add(a, negate(b));
    }

    friend basic_truncated_series operator*(const basic_truncated_series &a, const basic_truncated_series &b)
    {
        return mul(a, b);
    }

    friend bool operator==(const basic_truncated_series &, const basic_truncated_series &) = default;

private:
    std::vector<C> m_coeffs;
};

using truncated_series = basic_truncated_series<integer>;

} // namespace ahat

#endif
