#ifndef WABL_INFERENCE_HPP_
#define WABL_INFERENCE_HPP_

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "wabl/defuzz.hpp"
#include "wabl/fuzzy_num.hpp"

namespace wabl {

/// A named variable with an ordered set of linguistic terms over a
/// common universe.
class LinguisticVariable {
public:
    using Term = std::pair<std::string, PiecewiseLinearMF>;

    LinguisticVariable(std::string name, std::string units, Interval universe,
                       std::vector<Term> terms);

    /// Throws UnknownTermError.
    const PiecewiseLinearMF& term(const std::string& term_name) const;
    bool has_term(const std::string& term_name) const;

    /// Degree of x in the named term; domain errors are annotated with the
    /// variable name.
    double membership(const std::string& term_name, double x) const;

    const std::string& name() const { return name_; }
    const std::string& units() const { return units_; }
    const Interval& universe() const { return universe_; }
    const std::vector<Term>& terms() const { return terms_; }

private:
    std::string name_;
    std::string units_;
    Interval universe_;
    std::vector<Term> terms_;
};

/// If every antecedent holds, the output takes `then_term`.
struct Rule {
    std::vector<std::pair<std::string, std::string>> antecedents; // (variable, term)
    std::string then_term;
};

/// Input variables, one output variable, and term-to-term rules.
class RuleBase {
public:
    RuleBase(std::vector<LinguisticVariable> inputs, LinguisticVariable output,
             std::vector<Rule> rules);

    const std::vector<LinguisticVariable>& inputs() const { return inputs_; }
    const LinguisticVariable& output() const { return output_; }
    const std::vector<Rule>& rules() const { return rules_; }

    /// Throws ConfigError when the variable is not declared.
    const LinguisticVariable& input(const std::string& name) const;

private:
    std::vector<LinguisticVariable> inputs_;
    LinguisticVariable output_;
    std::vector<Rule> rules_;
};

using Inputs = std::map<std::string, double>;

struct InferenceResult {
    double crisp_output = 0.0;
    std::vector<double> firing;                            // by rule index
    std::vector<std::pair<std::string, double>> term_wabl; // by output-term order
    bool normalized = false;
    bool any_rule_fired = false;
};

/// Per-rule firing degree: the minimum over antecedents of the input's
/// membership in the antecedent term. Throws ConfigError for a missing
/// input value, DomainError for an out-of-universe one.
std::vector<double> firing_degrees(const RuleBase& rb, const Inputs& x);

/// Defuzzified value of every output term (input-independent).
std::vector<std::pair<std::string, double>> defuzzify_terms(const RuleBase& rb,
                                                            const WablParams& params);

/// The full deduction: firing degrees, per-term defuzzification, and the
/// firing-weighted sum over rules of the consequent-term values. With
/// `normalize` the sum is divided by the total firing degree; all-zero
/// firing then raises NoRuleFiresError. Without it the raw weighted sum
/// is returned (0 with any_rule_fired = false when nothing fires).
InferenceResult infer(const RuleBase& rb, const Inputs& x, const WablParams& params,
                      bool normalize = false);

/// Rule base bound to fixed parameters with the per-term defuzzified
/// values precomputed, for inference loops. Immutable once constructed;
/// safe to share across threads.
class InferenceEngine {
public:
    InferenceEngine(RuleBase rb, WablParams params, bool normalize = false);

    InferenceResult infer(const Inputs& x) const;

    /// Convenience for single-input rule bases; throws ArgumentError when
    /// more than one input variable is declared.
    double crisp(double input_value) const;

    const RuleBase& rule_base() const { return rb_; }
    const WablParams& params() const { return params_; }
    bool normalize() const { return normalize_; }
    const std::vector<std::pair<std::string, double>>& term_values() const {
        return term_values_;
    }

private:
    RuleBase rb_;
    WablParams params_;
    bool normalize_;
    std::vector<std::pair<std::string, double>> term_values_;
    std::vector<std::size_t> consequent_index_; // rule index -> output-term index
};

} // namespace wabl

#endif
