#include "wabl/inference.hpp"

#include <algorithm>

namespace wabl {

LinguisticVariable::LinguisticVariable(std::string name, std::string units, Interval universe,
                                       std::vector<Term> terms)
    : name_(std::move(name)), units_(std::move(units)), universe_(universe),
      terms_(std::move(terms)) {
    if (terms_.empty()) {
        throw ConfigError("variable '" + name_ + "' declares no terms");
    }
    for (std::size_t i = 0; i < terms_.size(); ++i) {
        for (std::size_t j = i + 1; j < terms_.size(); ++j) {
            if (terms_[i].first == terms_[j].first) {
                throw ConfigError("variable '" + name_ + "' declares term '" + terms_[i].first +
                                  "' twice");
            }
        }
        const PiecewiseLinearMF& mf = terms_[i].second;
        if (mf.universe().lo != universe_.lo || mf.universe().hi != universe_.hi) {
            throw ConfigError("term '" + terms_[i].first + "' of variable '" + name_ +
                              "' uses a different universe");
        }
    }
}

const PiecewiseLinearMF& LinguisticVariable::term(const std::string& term_name) const {
    for (const Term& t : terms_) {
        if (t.first == term_name) return t.second;
    }
    throw UnknownTermError("variable '" + name_ + "' has no term '" + term_name + "'");
}

bool LinguisticVariable::has_term(const std::string& term_name) const {
    return std::any_of(terms_.begin(), terms_.end(),
                       [&](const Term& t) { return t.first == term_name; });
}

double LinguisticVariable::membership(const std::string& term_name, double x) const {
    try {
        return term(term_name).membership(x);
    } catch (const DomainError& e) {
        throw DomainError("variable '" + name_ + "': " + e.what());
    }
}

RuleBase::RuleBase(std::vector<LinguisticVariable> inputs, LinguisticVariable output,
                   std::vector<Rule> rules)
    : inputs_(std::move(inputs)), output_(std::move(output)), rules_(std::move(rules)) {
    if (inputs_.empty()) {
        throw ConfigError("rule base declares no input variables");
    }
    if (rules_.empty()) {
        throw ConfigError("rule base declares no rules");
    }
    for (std::size_t i = 0; i < inputs_.size(); ++i) {
        for (std::size_t j = i + 1; j < inputs_.size(); ++j) {
            if (inputs_[i].name() == inputs_[j].name()) {
                throw ConfigError("input variable '" + inputs_[i].name() + "' declared twice");
            }
        }
    }
    for (std::size_t r = 0; r < rules_.size(); ++r) {
        const Rule& rule = rules_[r];
        const std::string where = "rule " + std::to_string(r);
        if (rule.antecedents.empty()) {
            throw ConfigError(where + " has no antecedents");
        }
        for (const auto& [var, term] : rule.antecedents) {
            const LinguisticVariable& lv = input(var);
            if (!lv.has_term(term)) {
                throw UnknownTermError(where + ": variable '" + var + "' has no term '" + term +
                                       "'");
            }
        }
        if (!output_.has_term(rule.then_term)) {
            throw UnknownTermError(where + ": output variable '" + output_.name() +
                                   "' has no term '" + rule.then_term + "'");
        }
    }
}

const LinguisticVariable& RuleBase::input(const std::string& name) const {
    for (const LinguisticVariable& lv : inputs_) {
        if (lv.name() == name) return lv;
    }
    throw ConfigError("no input variable named '" + name + "'");
}

std::vector<double> firing_degrees(const RuleBase& rb, const Inputs& x) {
    for (const LinguisticVariable& lv : rb.inputs()) {
        if (x.find(lv.name()) == x.end()) {
            throw ConfigError("no value supplied for input variable '" + lv.name() + "'");
        }
    }
    std::vector<double> degrees;
    degrees.reserve(rb.rules().size());
    for (const Rule& rule : rb.rules()) {
        double degree = 1.0;
        for (const auto& [var, term] : rule.antecedents) {
            degree = std::min(degree, rb.input(var).membership(term, x.at(var)));
        }
        degrees.push_back(degree);
    }
    return degrees;
}

std::vector<std::pair<std::string, double>> defuzzify_terms(const RuleBase& rb,
                                                            const WablParams& params) {
    std::vector<std::pair<std::string, double>> values;
    values.reserve(rb.output().terms().size());
    for (const auto& [name, mf] : rb.output().terms()) {
        try {
            values.emplace_back(name, wabl_analytic(to_level_rep(mf), params));
        } catch (const RepresentationError& e) {
            throw RepresentationError("output term '" + name + "': " + e.what());
        }
    }
    return values;
}

InferenceResult infer(const RuleBase& rb, const Inputs& x, const WablParams& params,
                      bool normalize) {
    return InferenceEngine(rb, params, normalize).infer(x);
}

InferenceEngine::InferenceEngine(RuleBase rb, WablParams params, bool normalize)
    : rb_(std::move(rb)), params_(params), normalize_(normalize),
      term_values_(defuzzify_terms(rb_, params_)) {
    consequent_index_.reserve(rb_.rules().size());
    for (const Rule& rule : rb_.rules()) {
        const auto it = std::find_if(term_values_.begin(), term_values_.end(),
                                     [&](const auto& tv) { return tv.first == rule.then_term; });
        consequent_index_.push_back(static_cast<std::size_t>(it - term_values_.begin()));
    }
}

InferenceResult InferenceEngine::infer(const Inputs& x) const {
    InferenceResult result;
    result.firing = firing_degrees(rb_, x);
    result.term_wabl = term_values_;
    result.normalized = normalize_;

    double weighted = 0.0;
    double total = 0.0;
    for (std::size_t r = 0; r < result.firing.size(); ++r) {
        weighted += result.firing[r] * term_values_[consequent_index_[r]].second;
        total += result.firing[r];
    }
    result.any_rule_fired = total > 0.0;

    if (normalize_) {
        if (!result.any_rule_fired) {
            throw NoRuleFiresError("no rule fires for the given inputs; "
                                   "normalized output is undefined");
        }
        result.crisp_output = weighted / total;
    } else {
        result.crisp_output = weighted;
    }
    return result;
}

double InferenceEngine::crisp(double input_value) const {
    if (rb_.inputs().size() != 1) {
        throw ArgumentError("single-value inference needs a rule base with exactly one input");
    }
    return infer({{rb_.inputs().front().name(), input_value}}).crisp_output;
}

} // namespace wabl
