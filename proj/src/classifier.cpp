#include "wskdc/classifier.hpp"

#include <cmath>
#include <stdexcept>

namespace wskdc {

namespace {

void check_bound(const ConfidenceBound& bound) {
    if (!std::isfinite(bound.center) || !std::isfinite(bound.halfwidth) || bound.halfwidth < 0.0)
        throw std::invalid_argument("classifier: malformed confidence bound");
}

}  // namespace

int predicted_class(const ConfidenceBound& bound) {
    check_bound(bound);
    return bound.center >= 0.5 ? 1 : 0;
}

Label decide(const ConfidenceBound& bound, double tau) {
    check_bound(bound);
    if (!(tau > 0.0 && tau < 1.0)) throw std::invalid_argument("decide: tau must lie in (0,1)");
    if (bound.lower() > tau) return Label::Positive;
    if (bound.upper() < tau) return Label::Negative;
    return Label::Unknown;
}

double confidence(const ConfidenceBound& bound) {
    check_bound(bound);
    return bound.center >= 0.5 ? bound.lower() : bound.upper();
}

double ranking_score(const ConfidenceBound& bound) {
    check_bound(bound);
    return bound.center >= 0.5 ? bound.lower() : 1.0 - bound.upper();
}

SelectiveDecision classify(const ConfidenceBound& bound, double tau) {
    return SelectiveDecision{decide(bound, tau), confidence(bound), ranking_score(bound)};
}

std::string to_string(Label label) {
    switch (label) {
        case Label::Negative: return "negative";
        case Label::Positive: return "positive";
        case Label::Unknown: return "unknown";
    }
    throw std::invalid_argument("to_string: unknown label value");
}

}  // namespace wskdc
