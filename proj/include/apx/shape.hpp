#pragma once

#include <map>
#include <stdexcept>
#include <vector>

#include "apx/ap.hpp"
#include "apx/decision.hpp"
#include "apx/eap.hpp"
#include "apx/matrix.hpp"
#include "apx/params.hpp"

namespace apx {

/// Two-layer result. Layer 1 discovers potential local exemplars with the
/// penalty-relaxed engine (no exclusion constraints); layer 2 runs plain AP
/// over those exemplars to merge the ones that appeared too close together;
/// every assignment is then remapped through the layer-2 choice.
struct ShapeResult {
    ClusteringResult layer1;              // over all n points
    ClusteringResult layer2;              // over layer-1 exemplars, submatrix indices
    std::map<int, int> remap;             // layer-1 exemplar -> its layer-2 exemplar (global indices)
    ClusteringResult final;               // over all n points, exemplars from layer 2
    ConvergenceStatus layer1_status;
    ConvergenceStatus layer2_status;
};

inline ShapeResult shape_run(const SimilarityMatrix& s, const EngineParams& params) {
    params.validate();
    const int n = s.size();

    ShapeResult out;

    // layer 1: penalty-relaxed messages only, no exclusion constraints
    const Neighborhoods singles = singleton_neighborhoods(n);
    EngineRun run1 = eap_run(s, singles, PenaltyVector(n, params.q), params);
    out.layer1_status = run1.status;
    out.layer1 = decide(s, run1.beliefs);

    const std::vector<int>& e1 = out.layer1.exemplars;
    const int m = static_cast<int>(e1.size());

    // layer 2: plain AP on the restriction of s to the layer-1 exemplars
    SimilarityMatrix sub(m);
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b) sub(a, b) = s(e1[a], e1[b]);
    sub.set_preference(params.preference2);

    EngineParams p2 = params;
    p2.preference = params.preference2;
    EngineRun run2 = ap_run(sub, p2);
    out.layer2_status = run2.status;
    out.layer2 = ap_decide(sub, run2.beliefs);

    for (int a = 0; a < m; ++a) out.remap[e1[a]] = e1[out.layer2.exemplar_lists[a].front()];

    // remap layer-1 assignments and re-extract components
    out.final.n = n;
    out.final.H.assign(static_cast<size_t>(n) * n, 0);
    for (int i = 0; i < n; ++i)
        for (int j : out.layer1.exemplar_lists[i]) out.final.set_h(i, out.remap.at(j), 1);
    for (const auto& [from, to] : out.remap)
        if (from == to) out.final.exemplars.push_back(from);
    detail::extract_components(out.final);
    return out;
}

}  // namespace apx
