#ifndef AHAT_INDEX_HPP
#define AHAT_INDEX_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <ahat/fixed_points.hpp>
#include <ahat/series.hpp>

namespace ahat
{

// Equivariant A-hat genus of a circle action with isolated fixed points,
// localized to the fixed set and expanded in s = t^(1/2):
//
//   sum_p sign(p) * prod_i s^(w_pi) / (1 - s^(2 w_pi))
//     = sum_p sign(p) * s^(sum_i w_pi) * prod_i (1 + s^(2 w_pi) + s^(4 w_pi) + ...)
//
// On a spin manifold this vanishes identically. Points whose weight sum
// exceeds the order contribute nothing at this truncation.
inline truncated_series ahat_equivariant_series(const fixed_point_data &data, std::size_t order)
{
    auto total = truncated_series::zero(order);
    for (const auto &p : data.points()) {
        const auto lead = p.weight_sum();
        if (static_cast<std::uint64_t>(lead) > order) {
            continue;
        }
        auto term = truncated_series::monomial(integer(to_int(p.sign())), lead, order);
        for (auto w : p.weights()) {
            term = mul(term, truncated_series::geometric(w, order));
        }
        total = add(total, term);
    }
    return total;
}

enum class verdict { not_spin, inconclusive };

inline const char *to_string(verdict v)
{
    return v == verdict::not_spin ? "NOT_SPIN" : "INCONCLUSIVE";
}

struct obstruction_report {
    verdict outcome = verdict::inconclusive;
    std::optional<std::string> witness;
    std::optional<std::int64_t> min_sum_plus;
    std::optional<std::int64_t> min_sum_minus;
    std::string detail;
};

// A fixed point q whose weight sum is strictly below the weight sum of every
// point of opposite sign contributes a lowest-order monomial that nothing can
// cancel, so the localized A-hat series is nonzero and the manifold is not
// spin. Equal minima across the two sign classes decide nothing.
inline obstruction_report spin_obstruction_check(const fixed_point_data &data)
{
    const fixed_point *best_plus = nullptr;
    const fixed_point *best_minus = nullptr;
    for (const auto &p : data.points()) {
        auto &best = p.sign() == orientation::positive ? best_plus : best_minus;
        if (best == nullptr || p.weight_sum() < best->weight_sum()) {
            best = &p;
        }
    }

    obstruction_report report;
    if (best_plus != nullptr) {
        report.min_sum_plus = best_plus->weight_sum();
    }
    if (best_minus != nullptr) {
        report.min_sum_minus = best_minus->weight_sum();
    }

    const auto sign_name = [](orientation o) { return o == orientation::positive ? std::string("+1") : std::string("-1"); };

    if (best_plus == nullptr || best_minus == nullptr) {
        const auto *q = best_plus != nullptr ? best_plus : best_minus;
        report.outcome = verdict::not_spin;
        report.witness = q->label();
        report.detail = "every fixed point has sign " + sign_name(q->sign()) + "; " + q->label() + " (weight sum "
                        + std::to_string(q->weight_sum())
                        + ") has no opposite-sign point to cancel its leading monomial, so the data admits no spin "
                          "structure";
        return report;
    }

    if (best_plus->weight_sum() == best_minus->weight_sum()) {
        report.outcome = verdict::inconclusive;
        report.detail = "both sign classes reach the minimal weight sum " + std::to_string(best_plus->weight_sum())
                        + "; the obstruction does not apply";
        return report;
    }

    const auto *q = best_plus->weight_sum() < best_minus->weight_sum() ? best_plus : best_minus;
    const auto *other = q == best_plus ? best_minus : best_plus;
    report.outcome = verdict::not_spin;
    report.witness = q->label();
    report.detail = q->label() + " (sign " + sign_name(q->sign()) + ", weight sum " + std::to_string(q->weight_sum())
                    + ") lies strictly below the minimal weight sum " + std::to_string(other->weight_sum())
                    + " of the sign " + sign_name(other->sign())
                    + " points; its leading monomial survives, so the data admits no spin structure";
    return report;
}

// CP^n is spin exactly when n is odd, since c_1(CP^n) = (n+1)x.
inline bool is_cpn_spin(std::int64_t n)
{
    if (n < 1) {
        throw std::invalid_argument("CP^n needs n >= 1, got " + std::to_string(n));
    }
    return n % 2 == 1;
}

struct vanishing_report {
    bool is_zero = true;
    std::optional<series_term<integer>> lowest_term;
    truncated_series series = truncated_series::zero(0);
};

inline vanishing_report verify_vanishing(const fixed_point_data &data, std::size_t order)
{
    vanishing_report report;
    report.series = ahat_equivariant_series(data, order);
    report.lowest_term = report.series.lowest_term();
    report.is_zero = !report.lowest_term.has_value();
    return report;
}

struct cross_validation_report {
    std::int64_t n = 0;
    std::size_t order = 0;
    bool parity_spin = false;
    vanishing_report vanishing;
    obstruction_report obstruction;
    std::vector<std::string> disagreements;

    bool consistent() const
    {
        return disagreements.empty();
    }
};

// Compares, for the standard action on CP^n, the parity rule, the vanishing
// of the localized series up to order and the obstruction verdict.
inline cross_validation_report cross_validate(std::int64_t n, std::size_t order)
{
    const auto data = fixed_point_data_of(cp_standard_action(n));

    cross_validation_report report;
    report.n = n;
    report.order = order;
    report.parity_spin = is_cpn_spin(n);
    report.vanishing = verify_vanishing(data, order);
    report.obstruction = spin_obstruction_check(data);

    if (report.parity_spin) {
        if (!report.vanishing.is_zero) {
            report.disagreements.emplace_back("parity says spin but the series has a nonzero term at s^"
                                              + std::to_string(report.vanishing.lowest_term->exponent));
        }
        if (report.obstruction.outcome == verdict::not_spin) {
            report.disagreements.emplace_back("parity says spin but the obstruction check reports NOT_SPIN");
        }
    } else {
        if (report.vanishing.is_zero) {
            report.disagreements.emplace_back("parity says not spin but the series vanishes up to order "
                                              + std::to_string(order));
        }
        if (report.obstruction.outcome != verdict::not_spin) {
            report.disagreements.emplace_back("parity says not spin but the obstruction check is inconclusive");
        }
    }
    return report;
}

} // namespace ahat

#endif
