#include "am/specsyn/similarity.hpp"

#include <cmath>
#include <map>

#include "am/support/text.hpp"

namespace am::specsyn {

double compute_similarity(const std::string& a, const std::string& b) {
    std::map<std::string, int> fa, fb;
    for (const auto& w : word_bag(a)) ++fa[w];
    for (const auto& w : word_bag(b)) ++fb[w];
    if (fa.empty() && fb.empty()) return 1.0;
    if (fa.empty() || fb.empty()) return 0.0;

    double dot = 0.0, na = 0.0, nb = 0.0;
    for (const auto& [w, c] : fa) {
        na += static_cast<double>(c) * c;
        auto it = fb.find(w);
        if (it != fb.end()) dot += static_cast<double>(c) * it->second;
    }
    for (const auto& [w, c] : fb) nb += static_cast<double>(c) * c;
    return dot / (std::sqrt(na) * std::sqrt(nb));
}

SimilarityReport stability_run(const gateway::Prompt& p, int k,
                               gateway::Gateway& gw) {
    if (k < 2) throw ToolError("stability run requires K >= 2");

    std::vector<std::string> texts;
    texts.reserve(static_cast<size_t>(k));
    for (int i = 0; i < k; ++i) texts.push_back(gw.complete(p, i).text);

    SimilarityReport r;
    r.k = k;
    r.matrix.assign(static_cast<size_t>(k),
                    std::vector<double>(static_cast<size_t>(k), 0.0));
    double sum = 0.0;
    int pairs = 0;
    for (int i = 0; i < k; ++i) {
        r.matrix[i][i] = 1.0;
        for (int j = i + 1; j < k; ++j) {
            double s = compute_similarity(texts[static_cast<size_t>(i)],
                                          texts[static_cast<size_t>(j)]);
            r.matrix[static_cast<size_t>(i)][static_cast<size_t>(j)] = s;
            r.matrix[static_cast<size_t>(j)][static_cast<size_t>(i)] = s;
            sum += s;
            ++pairs;
        }
    }
    r.mean = pairs > 0 ? sum / pairs : 1.0;
    return r;
}

} // namespace am::specsyn
