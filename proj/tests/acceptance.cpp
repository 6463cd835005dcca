// Acceptance suite: one line per criterion, nonzero exit if any fails.
// All checks are exact; each criterion also has a wall-clock budget.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <cstdio>
#include <functional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include <ahat/fixed_points.hpp>
#include <ahat/index.hpp>
#include <ahat/series.hpp>

#include "oracles.hpp"

namespace
{

using namespace ahat;

struct criterion_failure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void expect(bool cond, const std::string &what)
{
    if (!cond) {
        throw criterion_failure(what);
    }
}

fixed_point_data standard(std::int64_t n)
{
    return fixed_point_data_of(cp_standard_action(n));
}

// 1. Generated standard CP^n data against chart enumeration and the closed forms.
void weight_sign_reproduction()
{
    for (std::int64_t n = 1; n <= 12; ++n) {
        const auto action = cp_standard_action(n);
        const auto data = fixed_point_data_of(action);
        const auto charts = ahat_test::enumerate_charts(action.exponents());
        expect(data.points().size() == static_cast<std::size_t>(n + 1), "point count for n=" + std::to_string(n));
        for (std::int64_t i = 0; i <= n; ++i) {
            const auto &p = data.points()[static_cast<std::size_t>(i)];
            const auto [w_enum, sign_enum] = ahat_test::oriented_from_chart(charts[static_cast<std::size_t>(i)]);
            std::vector<std::int64_t> w_closed;
            for (std::int64_t j = 0; j <= n; ++j) {
                if (j != i) {
                    w_closed.push_back(j > i ? j - i : i - j);
                }
            }
            std::sort(w_closed.begin(), w_closed.end());
            const int sign_closed = i % 2 == 0 ? 1 : -1;
            const auto where = "n=" + std::to_string(n) + " p_" + std::to_string(i);
            expect(p.weights() == w_enum && p.weights() == w_closed, "weights at " + where);
            expect(to_int(p.sign()) == sign_enum && sign_enum == sign_closed, "sign at " + where);
        }
    }
}

// 2. weight_sum(p_(m+k)) = m(m+1) + k^2 on CP^(2m).
void weight_sum_formula()
{
    for (std::int64_t m = 1; m <= 10; ++m) {
        const auto data = standard(2 * m);
        for (std::int64_t k = -m; k <= m; ++k) {
            const auto &p = data.points()[static_cast<std::size_t>(m + k)];
            std::int64_t direct = 0;
            for (auto w : p.weights()) {
                direct += w;
            }
            expect(direct == m * (m + 1) + k * k && cp_weight_sum_formula(m, k) == direct && weight_sum(p) == direct,
                   "m=" + std::to_string(m) + " k=" + std::to_string(k));
        }
    }
}

// 3. The series vanishes up to order 60 for odd n.
void odd_vanishing()
{
    for (std::int64_t n : {1, 3, 5, 7, 9, 11}) {
        const auto s = ahat_equivariant_series(standard(n), 60);
        expect(s.order() == 60u && s.is_zero(), "CP^" + std::to_string(n) + " series is nonzero");
    }
}

// 4. Even n = 2m: lowest term (m(m+1), (-1)^m), verdict NOT_SPIN at p_m.
void even_non_vanishing()
{
    for (std::int64_t m = 1; m <= 5; ++m) {
        const auto data = standard(2 * m);
        const auto order = static_cast<std::size_t>(2 * data.max_weight_sum() + 1);
        const auto lead = ahat_equivariant_series(data, order).lowest_term();
        const auto where = "CP^" + std::to_string(2 * m);
        expect(lead.has_value(), where + " series vanishes");
        expect(lead->exponent == static_cast<std::size_t>(m * (m + 1)), where + " lowest exponent");
        expect(lead->coefficient == (m % 2 == 0 ? 1 : -1), where + " lowest coefficient");
        const auto oracle = ahat_test::brute_force_ahat(ahat_test::raw_points(data), static_cast<std::int64_t>(order));
        expect(ahat_test::to_int64(ahat_equivariant_series(data, order)) == oracle, where + " brute-force mismatch");
        const auto report = spin_obstruction_check(data);
        expect(report.outcome == verdict::not_spin, where + " verdict");
        expect(report.witness == "p_" + std::to_string(m), where + " witness");
    }
}

// 5. Random abstract data with a unique minimal-sum point.
void synthetic_lemma()
{
    std::mt19937_64 rng(31337);
    for (int trial = 0; trial < 200; ++trial) {
        const auto data = ahat_test::random_unique_min_data(rng, 4, 6, 6);
        const auto report = spin_obstruction_check(data);
        const auto where = "dataset " + std::to_string(trial);
        expect(report.outcome == verdict::not_spin, where + " verdict");
        const auto &pts = data.points();
        const auto q = std::find_if(pts.begin(), pts.end(), [&](const auto &p) { return p.label() == *report.witness; });
        const auto order = 2 * data.max_weight_sum() + 1;
        const auto oracle = ahat_test::brute_force_ahat(ahat_test::raw_points(data), order);
        const auto first = std::find_if(oracle.begin(), oracle.end(), [](auto c) { return c != 0; });
        expect(first != oracle.end(), where + " oracle series vanishes");
        expect(first - oracle.begin() == q->weight_sum(), where + " lowest exponent != witness sum");
        expect(*first == to_int(q->sign()), where + " lowest coefficient != witness sign");
        const auto lead = ahat_equivariant_series(data, static_cast<std::size_t>(order)).lowest_term();
        expect(lead && lead->exponent == static_cast<std::size_t>(q->weight_sum()), where + " series lowest exponent");
    }
}

// 6. Ring laws, geometric inverse and truncation coherence.
void series_ring_properties()
{
    using ts = truncated_series;
    std::mt19937_64 rng(2718);
    std::uniform_int_distribution<std::size_t> order_dist(0, 30);
    int instances = 0;
    for (int trial = 0; trial < 300; ++trial, ++instances) {
        const auto n = order_dist(rng);
        const auto a = ahat_test::random_series(rng, n);
        const auto b = ahat_test::random_series(rng, n);
        const auto c = ahat_test::random_series(rng, n);
        expect(a + b == b + a && a * b == b * a, "commutativity");
        expect((a + b) + c == a + (b + c) && (a * b) * c == a * (b * c), "associativity");
        expect(a * (b + c) == a * b + a * c, "distributivity");
        expect(a * ts::one(n) == a, "unit");
        expect(ahat_test::to_int64(a * b) == ahat_test::naive_mul(ahat_test::to_int64(a), ahat_test::to_int64(b)),
               "Cauchy product against schoolbook oracle");
    }
    for (std::int64_t w = 1; w <= 10; ++w) {
        for (std::size_t n = 2 * static_cast<std::size_t>(w); n <= 60; ++n, ++instances) {
            expect(ts::geometric(w, n) * (ts::one(n) - ts::monomial(1, 2 * w, n)) == ts::one(n), "geometric inverse");
        }
    }
    for (int trial = 0; trial < 200; ++trial, ++instances) {
        const std::size_t big = 30;
        const auto small = std::uniform_int_distribution<std::size_t>(0, big - 1)(rng);
        const auto a = ahat_test::random_series(rng, big);
        const auto b = ahat_test::random_series(rng, big);
        const auto w = std::uniform_int_distribution<std::int64_t>(1, 8)(rng);
        expect((a + b).truncate(small) == a.truncate(small) + b.truncate(small), "truncation of add");
        expect((a * b).truncate(small) == a.truncate(small) * b.truncate(small), "truncation of mul");
        expect(negate(a).truncate(small) == negate(a.truncate(small)), "truncation of negate");
        expect(ts::geometric(w, big).truncate(small) == ts::geometric(w, small), "truncation of geometric");
    }
    expect(instances >= 500, "fewer than 500 instances");
}

// 7. Scaling and translation leave verdict and witness unchanged.
void verdict_invariances()
{
    for (std::int64_t n = 1; n <= 10; ++n) {
        const auto action = cp_standard_action(n);
        const auto base = spin_obstruction_check(fixed_point_data_of(action));
        const auto where = "CP^" + std::to_string(n);
        for (std::int64_t lambda : {2, 3}) {
            auto exps = action.exponents();
            for (auto &e : exps) {
                e *= lambda;
            }
            const auto r = spin_obstruction_check(fixed_point_data_of(linear_action(exps)));
            expect(r.outcome == base.outcome && r.witness == base.witness, where + " scaling by " + std::to_string(lambda));
        }
        for (std::int64_t shift : {-7, 5, 1000}) {
            auto exps = action.exponents();
            for (auto &e : exps) {
                e += shift;
            }
            const auto r = spin_obstruction_check(fixed_point_data_of(linear_action(exps)));
            expect(r.outcome == base.outcome && r.witness == base.witness, where + " translation by " + std::to_string(shift));
        }
    }
}

struct criterion {
    int id;
    const char *name;
    double budget_seconds;
    std::function<void()> body;
};

} // namespace

int main()
{
    const std::vector<criterion> criteria{
        {1, "weight/sign reproduction, CP^n for n <= 12", 1.0, weight_sign_reproduction},
        {2, "weight-sum formula m(m+1)+k^2, m <= 10", 1.0, weight_sum_formula},
        {3, "series vanishes to order 60 for odd n <= 11", 5.0, odd_vanishing},
        {4, "CP^(2m) lowest term (m(m+1), (-1)^m) and NOT_SPIN at p_m, m <= 5", 5.0, even_non_vanishing},
        {5, "obstruction on 200 random unique-minimum datasets", 10.0, synthetic_lemma},
        {6, "series ring properties on >= 500 instances", 5.0, series_ring_properties},
        {7, "verdict invariance under scaling and translation, n <= 10", 2.0, verdict_invariances},
    };

    int failures = 0;
    for (const auto &c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        std::string problem;
        try {
            c.body();
        } catch (const std::exception &e) {
            problem = e.what();
        }
        const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
        if (problem.empty() && elapsed.count() >= c.budget_seconds) {
            problem = "exceeded time budget of " + std::to_string(c.budget_seconds) + " s";
        }
        std::printf("[%s] %d. %s (%.3f s)%s%s\n", problem.empty() ? "PASS" : "FAIL", c.id, c.name, elapsed.count(),
                    problem.empty() ? "" : ": ", problem.c_str());
        failures += problem.empty() ? 0 : 1;
    }
    std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
    return failures == 0 ? 0 : 1;
}
