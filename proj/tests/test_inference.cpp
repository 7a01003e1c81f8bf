#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "wabl/inference.hpp"
#include "wabl/scenarios.hpp"

using namespace wabl;

namespace {

double term_value(const std::vector<std::pair<std::string, double>>& values,
                  const std::string& name) {
    for (const auto& [n, v] : values) {
        if (n == name) return v;
    }
    FAIL("no term ", name);
    return 0.0;
}

} // namespace

TEST_CASE("firing degrees of the conditioner") {
    const RuleBase rb = build_conditioner();

    SUBCASE("t = 22") {
        const auto degrees = firing_degrees(rb, {{"temperature", 22.0}});
        REQUIRE(degrees.size() == 3);
        CHECK(degrees[0] == 0.0);
        CHECK(degrees[1] == 0.8);
        CHECK(degrees[2] == 0.2);
    }
    SUBCASE("t = 35 sits on the higher plateau") {
        const auto degrees = firing_degrees(rb, {{"temperature", 35.0}});
        CHECK(degrees[0] == 0.0);
        CHECK(degrees[1] == 0.0);
        CHECK(degrees[2] == 1.0);
    }
    SUBCASE("t = 16 splits lower and middle evenly") {
        const auto degrees = firing_degrees(rb, {{"temperature", 16.0}});
        CHECK(degrees[0] == 0.5);
        CHECK(degrees[1] == 0.5);
        CHECK(degrees[2] == 0.0);
    }
    SUBCASE("missing input is a config error naming the variable") {
        CHECK_THROWS_WITH_AS(firing_degrees(rb, {}), doctest::Contains("temperature"),
                             ConfigError);
    }
    SUBCASE("out-of-universe input is a domain error naming the variable") {
        CHECK_THROWS_WITH_AS(firing_degrees(rb, {{"temperature", 70.0}}),
                             doctest::Contains("temperature"), DomainError);
    }
}

TEST_CASE("multi-antecedent rules combine by minimum") {
    const Interval u{0.0, 10.0};
    LinguisticVariable a("a", "", u, {{"low", triangular_mf(0.0, 0.0, 10.0, u)}});
    LinguisticVariable b("b", "", u, {{"low", triangular_mf(0.0, 0.0, 10.0, u)}});
    LinguisticVariable out("out", "", u, {{"x", triangular_mf(2.0, 5.0, 8.0, u)}});
    const RuleBase rb({a, b}, out, {{{{"a", "low"}, {"b", "low"}}, "x"}});

    const auto degrees = firing_degrees(rb, {{"a", 2.0}, {"b", 6.0}});
    CHECK(degrees[0] == doctest::Approx(0.4).epsilon(1e-12)); // min(0.8, 0.4)
}

TEST_CASE("term defuzzification of the conditioner output") {
    const RuleBase rb = build_conditioner();

    SUBCASE("symmetric weights, exponent 2") {
        const auto values = defuzzify_terms(rb, WablParams::symmetric(2.0));
        CHECK(term_value(values, "lower") == doctest::Approx(400.0 / 3.0).epsilon(1e-12));
        CHECK(term_value(values, "middle") == doctest::Approx(400.0).epsilon(1e-12));
        CHECK(term_value(values, "higher") == doctest::Approx(2300.0 / 3.0).epsilon(1e-12));
    }
    SUBCASE("left weight 1 isolates the left integral") {
        const auto values = defuzzify_terms(rb, WablParams::with_left_weight(1.0, 2.0));
        CHECK(term_value(values, "middle") == doctest::Approx(1000.0 / 3.0).epsilon(1e-12));
    }
}

TEST_CASE("singleton output terms defuzzify to themselves for any parameters") {
    const Interval u{0.0, 1000.0};
    LinguisticVariable in("x", "", {0.0, 10.0},
                          {{"low", triangular_mf(0.0, 0.0, 10.0, {0.0, 10.0})},
                           {"high", triangular_mf(0.0, 10.0, 10.0, {0.0, 10.0})}});
    LinguisticVariable out("y", "", u, {{"a", singleton_mf(100.0, u)}, {"b", singleton_mf(500.0, u)}});
    const RuleBase rb({in}, out, {{{{"x", "low"}}, "a"}, {{{"x", "high"}}, "b"}});

    for (double m : {0.3, 1.0, 2.0, 9.0}) {
        for (double c : {0.0, 0.5, 1.0}) {
            const auto values = defuzzify_terms(rb, WablParams::with_left_weight(c, m));
            CHECK(term_value(values, "a") == 100.0);
            CHECK(term_value(values, "b") == 500.0);
        }
    }
}

TEST_CASE("full deduction on the conditioner") {
    const RuleBase rb = build_conditioner();
    const WablParams params = WablParams::symmetric(2.0);

    SUBCASE("worked example at t = 22") {
        const InferenceResult r = infer(rb, {{"temperature", 22.0}}, params, false);
        CHECK(r.crisp_output == doctest::Approx(1420.0 / 3.0).epsilon(1e-12));
        CHECK(r.any_rule_fired);
        CHECK_FALSE(r.normalized);
    }
    SUBCASE("single rule at full degree") {
        CHECK(infer(rb, {{"temperature", 40.0}}, params, false).crisp_output ==
              doctest::Approx(2300.0 / 3.0).epsilon(1e-12));
        CHECK(infer(rb, {{"temperature", 5.0}}, params, false).crisp_output ==
              doctest::Approx(400.0 / 3.0).epsilon(1e-12));
    }
    SUBCASE("the conditioner terms form a partition of unity") {
        for (int j = 0; j <= 600; ++j) {
            const double t = 60.0 * j / 600.0;
            const auto degrees = firing_degrees(rb, {{"temperature", t}});
            double total = 0.0;
            for (double d : degrees) total += d;
            REQUIRE(std::abs(total - 1.0) < 1e-12);
            const double raw = infer(rb, {{"temperature", t}}, params, false).crisp_output;
            const double normalized = infer(rb, {{"temperature", t}}, params, true).crisp_output;
            REQUIRE(std::abs(raw - normalized) < 1e-12);
        }
    }
    SUBCASE("normalized output is a convex combination of fired term values") {
        const InferenceEngine engine(rb, params, true);
        for (double t : {3.0, 14.5, 21.0, 26.0, 44.0}) {
            const InferenceResult r = engine.infer({{"temperature", t}});
            double lo = 1e300, hi = -1e300;
            for (std::size_t k = 0; k < r.firing.size(); ++k) {
                if (r.firing[k] > 0.0) {
                    const double v = term_value(r.term_wabl, rb.rules()[k].then_term);
                    lo = std::min(lo, v);
                    hi = std::max(hi, v);
                }
            }
            CHECK(r.crisp_output >= lo - 1e-12);
            CHECK(r.crisp_output <= hi + 1e-12);
        }
    }
}

TEST_CASE("no-rule-fires handling") {
    const Interval u{0.0, 100.0};
    LinguisticVariable in("x", "", u, {{"near", triangular_mf(40.0, 50.0, 60.0, u)}});
    LinguisticVariable out("y", "", u, {{"t", triangular_mf(10.0, 20.0, 30.0, u)}});
    const RuleBase rb({in}, out, {{{{"x", "near"}}, "t"}});
    const WablParams params = WablParams::symmetric(2.0);

    CHECK_THROWS_AS(infer(rb, {{"x", 5.0}}, params, true), NoRuleFiresError);

    const InferenceResult raw = infer(rb, {{"x", 5.0}}, params, false);
    CHECK(raw.crisp_output == 0.0);
    CHECK_FALSE(raw.any_rule_fired);
}

TEST_CASE("rule-paired aggregation, not the all-pairs double sum, matches the worked example") {
    const RuleBase rb = build_conditioner();
    const WablParams params = WablParams::symmetric(2.0);
    const auto degrees = firing_degrees(rb, {{"temperature", 22.0}});
    const auto terms = defuzzify_terms(rb, params);

    // All-pairs reading: every output term weighted by every firing degree.
    double double_sum = 0.0;
    for (double d : degrees) {
        for (const auto& [name, value] : terms) double_sum += d * value;
    }
    // Rule-paired reading: each rule contributes its consequent term only.
    double paired = 0.0;
    for (std::size_t r = 0; r < degrees.size(); ++r) {
        paired += degrees[r] * term_value(terms, rb.rules()[r].then_term);
    }

    CHECK(paired == doctest::Approx(1420.0 / 3.0).epsilon(1e-12));
    CHECK(paired > 472.8);
    CHECK(paired < 473.4);
    // The literal double sum collapses to sum(degrees) * sum(term values)
    // = 1300 here and is nowhere near the expected output.
    CHECK(double_sum == doctest::Approx(1300.0).epsilon(1e-9));
    CHECK((double_sum < 472.8 || double_sum > 473.4));
    CHECK(infer(rb, {{"temperature", 22.0}}, params, false).crisp_output ==
          doctest::Approx(paired).epsilon(1e-15));
}

TEST_CASE("rule base validation") {
    const Interval u{0.0, 10.0};
    LinguisticVariable in("x", "", u, {{"low", triangular_mf(0.0, 0.0, 10.0, u)}});
    LinguisticVariable out("y", "", u, {{"t", triangular_mf(0.0, 5.0, 10.0, u)}});

    CHECK_THROWS_AS(RuleBase({in}, out, {}), ConfigError);
    CHECK_THROWS_AS(RuleBase({in}, out, {{{{"x", "nope"}}, "t"}}), UnknownTermError);
    CHECK_THROWS_AS(RuleBase({in}, out, {{{{"z", "low"}}, "t"}}), ConfigError);
    CHECK_THROWS_AS(RuleBase({in}, out, {{{{"x", "low"}}, "nope"}}), UnknownTermError);
    CHECK_THROWS_AS(RuleBase({in, in}, out, {{{{"x", "low"}}, "t"}}), ConfigError);
    CHECK_THROWS_AS(RuleBase({in}, out, {{{}, "t"}}), ConfigError);

    CHECK_THROWS_AS(LinguisticVariable("v", "", u,
                                       {{"a", triangular_mf(0.0, 5.0, 10.0, u)},
                                        {"a", triangular_mf(0.0, 5.0, 10.0, u)}}),
                    ConfigError);
}

TEST_CASE("engine caching matches one-shot inference") {
    const RuleBase rb = build_conditioner();
    const WablParams params = WablParams::with_left_weight(0.3, 1.5);
    const InferenceEngine engine(rb, params, false);
    for (double t : {0.0, 13.0, 22.0, 29.0, 60.0}) {
        CHECK(engine.crisp(t) == infer(rb, {{"temperature", t}}, params, false).crisp_output);
    }
}
