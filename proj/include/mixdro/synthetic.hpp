#pragma once

#include "mixdro/hypothesis.hpp"
#include "mixdro/schema.hpp"

namespace mixdro {

// Planted-model generator: a linear model is sampled, features drawn, and
// outputs generated with bounded noise so the model explains most but not all
// of the variability.
struct SyntheticSpec {
    int N = 20;
    int Mx = 0;
    int K = 20;  // binary discrete features, one encoded column each
    Task task = Task::classification;
    unsigned seed = 0;
    double flip_rate = 0.15;   // classification: label flip probability
    double noise_sigma = 0.1;  // regression: residual std as a fraction of signal std
};

struct SyntheticResult {
    Dataset data;
    Hypothesis planted;
    int flipped = 0;     // classification: labels flipped by noise
    double sigma = 0.0;  // regression: residual std actually used
};

SyntheticResult generate_synthetic(const SyntheticSpec& spec);

// Fresh draw from an already-planted model, e.g. for out-of-sample evaluation.
Dataset synthetic_sample(const Hypothesis& planted, const SyntheticSpec& spec, unsigned seed);

}  // namespace mixdro
