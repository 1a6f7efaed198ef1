#pragma once

#include <string>

#include "wskdc/interval.hpp"

namespace wskdc {

enum class Label { Negative = 0, Positive = 1, Unknown = 2 };

/// Outcome for one instance: the selective label, the confidence assigned
/// to it, and the class-folded score used to order instances for rejection.
struct SelectiveDecision {
    Label label;
    double confidence;
    double ranking_score;
};

/// Predicted class from the interval midpoint; a midpoint of exactly 0.5
/// predicts the positive class.
int predicted_class(const ConfidenceBound& bound);

/// Three-way selective rule: Positive when the lower bound exceeds tau,
/// Negative when the upper bound is below tau, Unknown otherwise. Equality
/// with tau on either side abstains.
Label decide(const ConfidenceBound& bound, double tau);

/// Confidence in the predicted class: the interval's lower bound when the
/// midpoint predicts positive, the upper bound otherwise.
double confidence(const ConfidenceBound& bound);

/// Lower bound on the predicted class's own probability: confidence(bound)
/// for positive predictions, 1 - confidence(bound) for negative ones. A
/// single monotone key (higher = more certain) valid across both classes,
/// unlike the raw confidence, which sits near 0 for certain negatives.
double ranking_score(const ConfidenceBound& bound);

/// Bundles decide/confidence/ranking_score for one bound.
SelectiveDecision classify(const ConfidenceBound& bound, double tau);

std::string to_string(Label label);

}  // namespace wskdc
