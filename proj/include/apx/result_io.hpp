#pragma once

#include <fstream>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"

#include "apx/decision.hpp"
#include "apx/metrics.hpp"
#include "apx/params.hpp"

namespace apx::io {

using ordered_json = nlohmann::ordered_json;

inline ordered_json clustering_to_json(const ClusteringResult& res) {
    ordered_json j;
    j["exemplars"] = res.exemplars;
    j["exemplar_lists"] = res.exemplar_lists;
    j["cluster_ids"] = res.cluster_ids;
    j["num_clusters"] = res.num_clusters();
    return j;
}

/// Rebuild a ClusteringResult from its serialized fields. H is implied by
/// the exemplar lists (columns outside the exemplar set are always zero).
inline ClusteringResult clustering_from_json(const ordered_json& j) {
    ClusteringResult res;
    res.exemplars = j.at("exemplars").get<std::vector<int>>();
    res.exemplar_lists = j.at("exemplar_lists").get<std::vector<std::vector<int>>>();
    res.cluster_ids = j.at("cluster_ids").get<std::vector<int>>();
    res.n = static_cast<int>(res.exemplar_lists.size());
    res.H.assign(static_cast<size_t>(res.n) * res.n, 0);
    for (int i = 0; i < res.n; ++i)
        for (int k : res.exemplar_lists[i]) res.set_h(i, k, 1);
    return res;
}

inline ordered_json scores_to_json(const ScoreTriple& sc) {
    ordered_json j;
    j["sn"] = sc.sn;
    j["ppv"] = sc.ppv;
    j["accuracy"] = sc.accuracy;
    return j;
}

inline ordered_json status_to_json(const ConvergenceStatus& st) {
    ordered_json j;
    j["converged"] = st.converged;
    j["iterations"] = st.iterations_run;
    return j;
}

inline void write_document(const ordered_json& doc, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write file: " + path);
    out << doc.dump(2) << "\n";
}

inline ordered_json read_document(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open file: " + path);
    ordered_json doc;
    in >> doc;
    return doc;
}

}  // namespace apx::io
