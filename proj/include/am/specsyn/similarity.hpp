#pragma once

#include <string>
#include <vector>

#include "am/gateway/client.hpp"

namespace am::specsyn {

// Cosine similarity over lowercase word-frequency vectors after stripping
// punctuation. 1.0 iff the bags of words match; both-empty compares as 1,
// empty-vs-nonempty as 0.
double compute_similarity(const std::string& a, const std::string& b);

struct SimilarityReport {
    int k = 0;
    std::vector<std::vector<double>> matrix; // k x k, symmetric, unit diagonal
    double mean = 0.0;                       // over the strict upper triangle
};

// Generates the same prompt K times (run indices 0..K-1) and reports
// pairwise text similarity of the completions. K must be >= 2.
SimilarityReport stability_run(const gateway::Prompt& p, int k,
                               gateway::Gateway& gw);

} // namespace am::specsyn
