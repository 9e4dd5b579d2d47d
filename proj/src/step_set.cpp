#include "latwalk/step_set.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <map>
#include <stdexcept>

namespace latwalk {

std::string to_string(WalkConstraint c) {
    switch (c) {
        case WalkConstraint::Unconstrained: return "walk";
        case WalkConstraint::Bridge: return "bridge";
        case WalkConstraint::Meander: return "meander";
        case WalkConstraint::Excursion: return "excursion";
        case WalkConstraint::StrictlyPositive: return "positive";
    }
    return "?";
}

WalkConstraint parse_constraint(const std::string& name) {
    if (name == "walk" || name == "unconstrained") return WalkConstraint::Unconstrained;
    if (name == "bridge") return WalkConstraint::Bridge;
    if (name == "meander") return WalkConstraint::Meander;
    if (name == "excursion") return WalkConstraint::Excursion;
    if (name == "positive" || name == "strictly-positive" || name == "strictly_positive")
        return WalkConstraint::StrictlyPositive;
    throw std::invalid_argument("unknown walk class: '" + name + "'");
}

StepSet::StepSet(std::vector<Step> steps) {
    if (steps.empty()) throw std::invalid_argument("empty step set");
    std::map<long, Rational> merged;
    for (const auto& s : steps) {
        if (s.weight <= 0) throw std::invalid_argument("step weights must be positive");
        merged[s.jump] += s.weight;
    }
    steps_.reserve(merged.size());
    for (const auto& [jump, w] : merged) steps_.push_back({jump, w});
    min_jump_ = steps_.front().jump;
    max_jump_ = steps_.back().jump;
    if (min_jump_ >= 0 || max_jump_ <= 0)
        throw std::invalid_argument("step set needs at least one negative and one positive jump");
}

Rational StepSet::coeff(long jump) const {
    auto it = std::lower_bound(steps_.begin(), steps_.end(), jump,
                               [](const Step& s, long j) { return s.jump < j; });
    if (it != steps_.end() && it->jump == jump) return it->weight;
    return Rational(0);
}

Rational StepSet::total_weight() const {
    Rational sum(0);
    for (const auto& s : steps_) sum += s.weight;
    return sum;
}

bool StepSet::symmetric() const {
    for (const auto& s : steps_)
        if (coeff(-s.jump) != s.weight) return false;
    return true;
}

bool StepSet::unit_weights() const {
    for (const auto& s : steps_)
        if (s.weight != 1) return false;
    return true;
}

std::string StepSet::to_json() const {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& s : steps_)
        arr.push_back({{"jump", s.jump}, {"weight", to_string(s.weight)}});
    return nlohmann::json{{"steps", arr}}.dump();
}

StepSet StepSet::from_json(const std::string& text) {
    auto j = nlohmann::json::parse(text);
    std::vector<Step> steps;
    for (const auto& e : j.at("steps"))
        steps.push_back({e.at("jump").get<long>(),
                         parse_rational(e.at("weight").get<std::string>())});
    return StepSet(std::move(steps));
}

namespace {

StepSet range_set(long lo, long hi, bool with_zero) {
    std::vector<Step> steps;
    for (long j = lo; j <= hi; ++j) {
        if (j == 0 && !with_zero) continue;
        steps.push_back({j, Rational(1)});
    }
    return StepSet(std::move(steps));
}

}  // namespace

StepSet make_family(const std::string& name, long h,
                    const std::vector<Rational>& params) {
    if (h < 1) throw std::invalid_argument("family parameter must be >= 1");
    if (name == "dyck") return range_set(-1, 1, false);
    if (name == "motzkin") return range_set(-1, 1, true);
    if (name == "weighted_motzkin") {
        if (params.size() != 3)
            throw std::invalid_argument("weighted_motzkin needs (p_-1, p_0, p_1)");
        return StepSet({{-1, params[0]}, {0, params[1]}, {1, params[2]}});
    }
    if (name == "bicolored_motzkin")
        return StepSet({{-1, Rational(1)}, {0, Rational(2)}, {1, Rational(1)}});
    if (name == "basketball") return range_set(-2, 2, false);
    if (name == "sym_with_zero") return range_set(-h, h, true);
    if (name == "sym_no_zero") return range_set(-h, h, false);
    if (name == "dary") {
        if (h < 2) throw std::invalid_argument("dary needs d >= 2");
        return StepSet({{-1, Rational(1)}, {h - 1, Rational(1)}});
    }
    if (name == "upto_dary") {
        if (h < 2) throw std::invalid_argument("upto_dary needs d >= 2");
        return range_set(-1, h - 1, true);
    }
    if (name == "d_dplus1") {
        if (h < 2) throw std::invalid_argument("d_dplus1 needs d >= 2");
        return StepSet({{-1, Rational(1)}, {h - 1, Rational(1)}, {h, Rational(1)}});
    }
    if (name == "luka_all") return range_set(-1, h, true);
    throw std::invalid_argument("unknown family: '" + name + "'");
}

}  // namespace latwalk
