// apx: exemplar clustering via max-sum message passing.
// Subcommands: cluster, localview, eval, gen, suggest.

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "apx/ap.hpp"
#include "apx/dataset.hpp"
#include "apx/decision.hpp"
#include "apx/eap.hpp"
#include "apx/localview.hpp"
#include "apx/metrics.hpp"
#include "apx/neighborhood.hpp"
#include "apx/params.hpp"
#include "apx/result_io.hpp"
#include "apx/shape.hpp"

namespace {

constexpr int kExitUsage = 2;
constexpr int kExitInput = 3;
constexpr int kExitNonConvergence = 4;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

double parse_double(const std::string& text, const std::string& what) {
    if (text == "inf" || text == "+inf") return apx::kPosInf;
    if (text == "-inf") return apx::kNegInf;
    char* end = nullptr;
    const double v = std::strtod(text.c_str(), &end);
    if (end == text.c_str() || *end != '\0') throw UsageError("invalid value for " + what + ": '" + text + "'");
    return v;
}

// "lo:hi:steps" -> inclusive linear grid
std::vector<double> parse_grid(const std::string& text, const std::string& what) {
    const auto a = text.find(':');
    const auto b = text.rfind(':');
    if (a == std::string::npos || b == a) throw UsageError(what + " expects lo:hi:steps, got '" + text + "'");
    const double lo = parse_double(text.substr(0, a), what);
    const double hi = parse_double(text.substr(a + 1, b - a - 1), what);
    const long steps = std::strtol(text.c_str() + b + 1, nullptr, 10);
    if (steps < 1) throw UsageError(what + ": steps must be >= 1");
    std::vector<double> grid;
    grid.reserve(steps);
    for (long t = 0; t < steps; ++t)
        grid.push_back(steps == 1 ? lo : lo + (hi - lo) * static_cast<double>(t) / static_cast<double>(steps - 1));
    return grid;
}

std::string format_g(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

struct InputSpec {
    std::string points_path;
    std::string similarity_path;
    int label_col = -1;  // -1: none

    bool from_points() const { return !points_path.empty(); }

    void check() const {
        if (points_path.empty() == similarity_path.empty())
            throw UsageError("exactly one of --points or --similarity is required");
        if (!similarity_path.empty() && label_col >= 0)
            throw UsageError("--label-col applies to --points input only");
    }

    // Similarity with zero diagonal; the preference is applied per run.
    apx::SimilarityMatrix load(std::vector<int>* labels) const {
        if (from_points()) {
            const auto ps = apx::load_points(
                points_path, label_col >= 0 ? std::optional<int>(label_col) : std::nullopt);
            if (labels) *labels = ps.labels;
            return apx::similarity_from_points(ps, 0.0);
        }
        if (labels) labels->clear();
        return apx::load_similarity(similarity_path);
    }

    apx::io::ordered_json to_json() const {
        apx::io::ordered_json j;
        j["kind"] = from_points() ? "points" : "similarity";
        j["path"] = from_points() ? points_path : similarity_path;
        if (label_col >= 0) j["label_col"] = label_col;
        return j;
    }
};

// ---------------------------------------------------------------- cluster

struct ClusterOptions {
    std::string mode;
    InputSpec input;
    std::string preference_s, q_s, epsilon_s, p2_s;
    std::string sweep_preference, sweep_q, sweep_epsilon, sweep_p2;
    double percentile_q = -1.0, percentile_eps = -1.0;
    double damping = 0.5;
    int max_iters = 1000;
    int conv_window = 25;
    std::string out_path;
    bool strict = false;
};

struct SweepPoint {
    double preference = 0.0, q = 0.0, epsilon = 0.0, p2 = 0.0;
    apx::ClusteringResult result;
    apx::ConvergenceStatus status;
    std::optional<apx::ScoreTriple> scores;
};

std::vector<double> resolve_grid(const std::string& scalar, const std::string& sweep, const std::string& what) {
    if (!sweep.empty()) return parse_grid(sweep, "--sweep-" + what);
    if (!scalar.empty()) return {parse_double(scalar, "--" + what)};
    throw UsageError("--" + what + " (or --sweep-" + what + ") is required for this mode");
}

int run_cluster(const ClusterOptions& opt) {
    if (opt.mode != "ap" && opt.mode != "eap" && opt.mode != "shape")
        throw UsageError("--mode must be one of ap, eap, shape");
    opt.input.check();

    std::vector<int> labels;
    apx::SimilarityMatrix base = opt.input.load(&labels);
    const int n = base.size();
    const bool eap_like = opt.mode == "eap";
    const bool shape_like = opt.mode == "shape";

    const std::vector<double> pref_grid = resolve_grid(opt.preference_s, opt.sweep_preference, "preference");
    std::vector<double> q_grid{apx::kNegInf}, eps_grid{apx::kPosInf}, p2_grid{0.0};
    if (eap_like || shape_like) {
        if (!opt.sweep_q.empty() || !opt.q_s.empty())
            q_grid = resolve_grid(opt.q_s, opt.sweep_q, "q");
        else if (opt.percentile_q > 0.0)
            q_grid = {apx::suggest_q(base, opt.percentile_q)};
        else
            throw UsageError("mode " + opt.mode + " requires --q, --sweep-q or --percentile-q");
    }
    if (eap_like) {
        if (!opt.sweep_epsilon.empty() || !opt.epsilon_s.empty())
            eps_grid = resolve_grid(opt.epsilon_s, opt.sweep_epsilon, "epsilon");
        else if (opt.percentile_eps > 0.0)
            eps_grid = {apx::suggest_epsilon(base, opt.percentile_eps)};
        else
            throw UsageError("mode eap requires --epsilon, --sweep-epsilon or --percentile-eps");
    }
    if (shape_like) p2_grid = resolve_grid(opt.p2_s, opt.sweep_p2, "p2");

    bool warned_p2 = false;
    std::vector<SweepPoint> runs;
    for (double pref : pref_grid) {
        for (double q : q_grid) {
            for (double eps : eps_grid) {
                for (double p2 : p2_grid) {
                    apx::EngineParams params;
                    params.preference = pref;
                    params.q = q;
                    params.epsilon = eps;
                    params.preference2 = p2;
                    params.damping = opt.damping;
                    params.max_iters = opt.max_iters;
                    params.convergence_window = opt.conv_window;

                    apx::SimilarityMatrix s = base;
                    s.set_preference(pref);

                    SweepPoint pt;
                    pt.preference = pref;
                    pt.q = q;
                    pt.epsilon = eps;
                    pt.p2 = p2;
                    if (opt.mode == "ap") {
                        auto run = apx::ap_run(s, params);
                        pt.status = run.status;
                        pt.result = apx::ap_decide(s, run.beliefs);
                    } else if (eap_like) {
                        const auto nbr = apx::build_neighborhoods(s, eps);
                        auto run = apx::eap_run(s, nbr, params);
                        pt.status = run.status;
                        pt.result = apx::decide(s, run.beliefs);
                    } else {
                        if (p2 > pref && !warned_p2) {
                            std::cerr << "warning: second-layer preference " << p2
                                      << " exceeds first-layer preference " << pref << "\n";
                            warned_p2 = true;
                        }
                        auto run = apx::shape_run(s, params);
                        pt.status = run.layer1_status;
                        pt.result = run.final;
                    }
                    if (!labels.empty()) {
                        std::vector<int> est = pt.result.cluster_ids;
                        pt.scores = apx::score_labels(labels, est);
                    }
                    runs.push_back(std::move(pt));
                }
            }
        }
    }

    // best point: accuracy when labels exist, otherwise the point whose
    // cluster count agrees with the most grid neighbors
    size_t best = 0;
    if (!labels.empty()) {
        for (size_t r = 1; r < runs.size(); ++r)
            if (runs[r].scores->accuracy > runs[best].scores->accuracy) best = r;
    } else {
        const size_t np = pref_grid.size(), nq = q_grid.size(), ne = eps_grid.size(), n2 = p2_grid.size();
        auto index_of = [&](size_t ip, size_t iq, size_t ie, size_t i2) {
            return ((ip * nq + iq) * ne + ie) * n2 + i2;
        };
        int best_votes = -1;
        for (size_t ip = 0; ip < np; ++ip)
            for (size_t iq = 0; iq < nq; ++iq)
                for (size_t ie = 0; ie < ne; ++ie)
                    for (size_t i2 = 0; i2 < n2; ++i2) {
                        const size_t at = index_of(ip, iq, ie, i2);
                        const int k = runs[at].result.num_clusters();
                        int votes = 0;
                        auto visit = [&](size_t other) {
                            if (runs[other].result.num_clusters() == k) ++votes;
                        };
                        if (ip > 0) visit(index_of(ip - 1, iq, ie, i2));
                        if (ip + 1 < np) visit(index_of(ip + 1, iq, ie, i2));
                        if (iq > 0) visit(index_of(ip, iq - 1, ie, i2));
                        if (iq + 1 < nq) visit(index_of(ip, iq + 1, ie, i2));
                        if (ie > 0) visit(index_of(ip, iq, ie - 1, i2));
                        if (ie + 1 < ne) visit(index_of(ip, iq, ie + 1, i2));
                        if (i2 > 0) visit(index_of(ip, iq, ie, i2 - 1));
                        if (i2 + 1 < n2) visit(index_of(ip, iq, ie, i2 + 1));
                        if (votes > best_votes) {
                            best_votes = votes;
                            best = at;
                        }
                    }
    }

    const SweepPoint& pick = runs[best];
    const bool swept = runs.size() > 1;

    apx::io::ordered_json doc;
    doc["tool"] = "apx";
    doc["format"] = 1;
    apx::io::ordered_json cfg;
    cfg["mode"] = opt.mode;
    cfg["input"] = opt.input.to_json();
    cfg["preference"] = pick.preference;
    if (eap_like || shape_like) cfg["q"] = pick.q;
    if (eap_like) cfg["epsilon"] = pick.epsilon;
    if (shape_like) cfg["p2"] = pick.p2;
    cfg["damping"] = opt.damping;
    cfg["max_iters"] = opt.max_iters;
    cfg["conv_window"] = opt.conv_window;
    if (opt.percentile_q > 0.0) cfg["percentile_q"] = opt.percentile_q;
    if (opt.percentile_eps > 0.0) cfg["percentile_eps"] = opt.percentile_eps;
    doc["config"] = cfg;
    doc["n"] = n;
    doc["converged"] = pick.status.converged;
    doc["iterations"] = pick.status.iterations_run;
    const auto clustering = apx::io::clustering_to_json(pick.result);
    for (const auto& [key, value] : clustering.items()) doc[key] = value;
    if (pick.scores) doc["scores"] = apx::io::scores_to_json(*pick.scores);
    if (swept) {
        apx::io::ordered_json rows = apx::io::ordered_json::array();
        for (const auto& r : runs) {
            apx::io::ordered_json row;
            row["preference"] = r.preference;
            if (eap_like || shape_like) row["q"] = r.q;
            if (eap_like) row["epsilon"] = r.epsilon;
            if (shape_like) row["p2"] = r.p2;
            row["num_clusters"] = r.result.num_clusters();
            row["converged"] = r.status.converged;
            if (r.scores) row["accuracy"] = r.scores->accuracy;
            rows.push_back(std::move(row));
        }
        doc["sweep_results"] = std::move(rows);
        doc["best_index"] = best;
    }

    if (opt.out_path.empty())
        std::cout << doc.dump(2) << "\n";
    else
        apx::io::write_document(doc, opt.out_path);

    if (opt.strict && !pick.status.converged) {
        std::cerr << "error: message passing did not converge within " << opt.max_iters << " iterations\n";
        return kExitNonConvergence;
    }
    return 0;
}

// -------------------------------------------------------------- localview

struct LocalviewOptions {
    std::string result_path;
    int fanout = 0;
    int prune_threshold = -1;
    std::string out_base;
};

apx::SimilarityMatrix similarity_from_config(const apx::io::ordered_json& cfg) {
    const auto& input = cfg.at("input");
    const std::string kind = input.at("kind").get<std::string>();
    apx::SimilarityMatrix s;
    if (kind == "points") {
        std::optional<int> lc;
        if (input.contains("label_col")) lc = input.at("label_col").get<int>();
        const auto ps = apx::load_points(input.at("path").get<std::string>(), lc);
        s = apx::similarity_from_points(ps, 0.0);
    } else {
        s = apx::load_similarity(input.at("path").get<std::string>());
    }
    s.set_preference(cfg.at("preference").get<double>());
    return s;
}

std::string counts_table(const apx::ClusteringResult& res) {
    std::string out = "cluster\tcount\tfrequency\n";
    for (const auto& [key, freq] : apx::exemplar_count_histogram(res))
        out += std::to_string(key.first) + "\t" + std::to_string(key.second) + "\t" + std::to_string(freq) + "\n";
    return out;
}

std::string pairs_table(const apx::LocalViewReport& report) {
    std::string out = "exemplar_a\texemplar_b\tstrength\tcluster\n";
    for (const auto& [key, strength] : report.pair_strength)
        out += std::to_string(key.first) + "\t" + std::to_string(key.second) + "\t" + std::to_string(strength) +
               "\t" + std::to_string(report.cluster_of_exemplar.at(key.first)) + "\n";
    return out;
}

int run_localview(const LocalviewOptions& opt) {
    if (opt.fanout < 1) throw UsageError("--fanout must be >= 1");
    const auto doc = apx::io::read_document(opt.result_path);
    if (!doc.contains("exemplar_lists")) throw InputError("result document lacks an assignment matrix");
    const std::string mode = doc.at("config").at("mode").get<std::string>();
    if (mode != "eap" && mode != "shape")
        throw InputError("local view requires an eap or shape result document, got mode '" + mode + "'");

    const apx::ClusteringResult res = apx::io::clustering_from_json(doc);
    const apx::SimilarityMatrix s = similarity_from_config(doc.at("config"));
    if (s.size() != res.n) throw InputError("input referenced by the document no longer matches its size");

    const auto report = apx::pair_strengths(s, res, opt.fanout);
    const std::string counts = counts_table(res);
    const std::string pairs = pairs_table(report);

    std::optional<apx::io::ordered_json> pruned_doc;
    if (opt.prune_threshold >= 0) {
        if (opt.prune_threshold < 2) throw UsageError("--prune threshold must be >= 2");
        const apx::ClusteringResult pruned = apx::prune(s, res, opt.prune_threshold);
        apx::io::ordered_json pd = doc;
        const auto pruned_fields = apx::io::clustering_to_json(pruned);
        for (const auto& [key, value] : pruned_fields.items()) pd[key] = value;
        pd.erase("scores");
        pd["pruned_with"] = opt.prune_threshold;
        pruned_doc = std::move(pd);
    }

    if (opt.out_base.empty()) {
        std::cout << "# per-point exemplar counts\n" << counts;
        std::cout << "# exemplar pair strengths\n" << pairs;
        if (pruned_doc) std::cout << "# pruned clustering\n" << pruned_doc->dump(2) << "\n";
    } else {
        std::ofstream c(opt.out_base + ".counts.tsv");
        c << counts;
        std::ofstream p(opt.out_base + ".pairs.tsv");
        p << pairs;
        if (!c || !p) throw InputError("cannot write tables at " + opt.out_base);
        if (pruned_doc) apx::io::write_document(*pruned_doc, opt.out_base + ".pruned.json");
    }
    return 0;
}

// ------------------------------------------------------------------- eval

std::vector<int> load_truth_labels(const std::string& path, int label_col) {
    const auto rows = apx::detail::read_numeric_rows(path);
    if (rows.empty()) throw InputError("no rows in truth file: " + path);
    const int width = static_cast<int>(rows.front().size());
    const int col = label_col >= 0 ? label_col : width - 1;
    if (col >= width) throw InputError("label column out of range in truth file");
    std::vector<int> labels;
    labels.reserve(rows.size());
    for (size_t r = 0; r < rows.size(); ++r) {
        if (static_cast<int>(rows[r].size()) != width)
            throw InputError("ragged truth file at row " + std::to_string(r + 1));
        labels.push_back(static_cast<int>(rows[r][col]));
    }
    return labels;
}

int run_eval(const std::string& result_path, const std::string& truth_path, int label_col) {
    const auto doc = apx::io::read_document(result_path);
    const auto est = doc.at("cluster_ids").get<std::vector<int>>();
    const auto truth = load_truth_labels(truth_path, label_col);
    if (truth.size() != est.size())
        throw InputError("point count mismatch: " + std::to_string(truth.size()) + " truth labels vs " +
                         std::to_string(est.size()) + " clustered points");
    const auto sc = apx::score_labels(truth, est);
    std::printf("sn %.9f\nppv %.9f\naccuracy %.9f\n", sc.sn, sc.ppv, sc.accuracy);
    return 0;
}

// -------------------------------------------------------------------- gen

std::vector<std::vector<double>> parse_centers(const std::string& text) {
    std::vector<std::vector<double>> centers;
    std::string chunk;
    std::stringstream ss(text);
    while (std::getline(ss, chunk, ':')) {
        std::vector<double> c;
        std::string field;
        std::stringstream cs(chunk);
        while (std::getline(cs, field, ',')) c.push_back(parse_double(field, "--centers"));
        if (c.size() != 2) throw UsageError("--centers expects 2-D points like 0,0:10,10");
        centers.push_back(std::move(c));
    }
    if (centers.empty()) throw UsageError("--centers is empty");
    return centers;
}

std::vector<double> parse_list(const std::string& text, const std::string& what) {
    std::vector<double> out;
    std::string field;
    std::stringstream ss(text);
    while (std::getline(ss, field, ',')) out.push_back(parse_double(field, what));
    if (out.empty()) throw UsageError(what + " is empty");
    return out;
}

void write_points(const apx::PointSet& ps, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw InputError("cannot write file: " + path);
    for (int i = 0; i < ps.size(); ++i) {
        for (double x : ps.points[i]) out << format_g(x) << " ";
        out << ps.labels[i] << "\n";
    }
}

// ------------------------------------------------------------------- main

int dispatch(int argc, char** argv) {
    if (argc >= 3 && std::string(argv[1]) == "gen") {
        const std::string name = argv[2];
        if (name != "blobs" && name != "half-moons" && name != "--help" && name != "-h")
            throw UsageError("unknown generator '" + name + "' (available: blobs, half-moons)");
    }

    CLI::App app{"exemplar clustering via max-sum message passing"};
    app.require_subcommand(1);

    ClusterOptions cl;
    auto* cluster = app.add_subcommand("cluster", "cluster a point set or similarity matrix");
    cluster->add_option("--mode", cl.mode, "ap, eap or shape")->required();
    cluster->add_option("--points", cl.input.points_path, "point file, one point per line");
    cluster->add_option("--similarity", cl.input.similarity_path, "dense similarity matrix file");
    cluster->add_option("--label-col", cl.input.label_col, "ground-truth label column in the point file");
    cluster->add_option("--preference", cl.preference_s, "diagonal preference p");
    cluster->add_option("--q", cl.q_s, "penalty per additional exemplar (-inf recovers ap)");
    cluster->add_option("--epsilon", cl.epsilon_s, "neighborhood threshold (eap)");
    cluster->add_option("--p2", cl.p2_s, "second-layer preference (shape)");
    cluster->add_option("--percentile-q", cl.percentile_q, "derive q from this off-diagonal percentile");
    cluster->add_option("--percentile-eps", cl.percentile_eps, "derive epsilon from this off-diagonal percentile");
    cluster->add_option("--sweep-preference", cl.sweep_preference, "preference grid lo:hi:steps");
    cluster->add_option("--sweep-q", cl.sweep_q, "q grid lo:hi:steps");
    cluster->add_option("--sweep-epsilon", cl.sweep_epsilon, "epsilon grid lo:hi:steps");
    cluster->add_option("--sweep-p2", cl.sweep_p2, "p2 grid lo:hi:steps");
    cluster->add_option("--damping", cl.damping, "message damping factor")->default_val(0.5);
    cluster->add_option("--max-iters", cl.max_iters, "iteration cap")->default_val(1000);
    cluster->add_option("--conv-window", cl.conv_window, "stable sweeps required for convergence")->default_val(25);
    cluster->add_option("--out", cl.out_path, "write the result document here (default stdout)");
    cluster->add_flag("--strict", cl.strict, "exit 4 when message passing does not converge");

    LocalviewOptions lv;
    auto* localview = app.add_subcommand("localview", "per-point exemplar counts and pair strengths");
    localview->add_option("--result", lv.result_path, "result document from cluster")->required();
    localview->add_option("--fanout", lv.fanout, "compare each exemplar with its M most similar peers")->required();
    localview->add_option("--prune", lv.prune_threshold, "also prune pairs sharing fewer than N_T points");
    localview->add_option("--out", lv.out_base, "base path for .counts.tsv/.pairs.tsv/.pruned.json");

    std::string ev_result, ev_truth;
    int ev_label_col = -1;
    auto* eval = app.add_subcommand("eval", "score a result document against ground truth");
    eval->add_option("--result", ev_result, "result document from cluster")->required();
    eval->add_option("--truth", ev_truth, "label file (one label per line, or a labeled point file)")->required();
    eval->add_option("--label-col", ev_label_col, "label column in the truth file (default: last)");

    auto* gen = app.add_subcommand("gen", "generate a synthetic labeled point set");
    gen->require_subcommand(1);
    int gb_n = 0;
    std::string gb_centers, gb_stddevs, gb_out;
    uint64_t gb_seed = 0;
    auto* blobs = gen->add_subcommand("blobs", "gaussian blobs around 2-D centers");
    blobs->add_option("--n-per-blob", gb_n, "points per blob")->required();
    blobs->add_option("--centers", gb_centers, "blob centers, e.g. 0,0:10,10")->required();
    blobs->add_option("--stddevs", gb_stddevs, "per-blob standard deviations, e.g. 0.5,1.0")->required();
    blobs->add_option("--seed", gb_seed, "rng seed")->default_val(0);
    blobs->add_option("--out", gb_out, "output point file")->required();
    int hm_n = 0;
    double hm_noise = 0.0;
    std::string hm_out;
    uint64_t hm_seed = 0;
    auto* moons = gen->add_subcommand("half-moons", "two interleaved noisy crescents");
    moons->add_option("--n", hm_n, "total number of points")->required();
    moons->add_option("--noise", hm_noise, "gaussian noise stddev")->default_val(0.0);
    moons->add_option("--seed", hm_seed, "rng seed")->default_val(0);
    moons->add_option("--out", hm_out, "output point file")->required();

    InputSpec sg_input;
    double sg_pq = 95.0, sg_pe = 95.0;
    auto* suggest = app.add_subcommand("suggest", "suggest q and epsilon from similarity percentiles");
    suggest->add_option("--points", sg_input.points_path, "point file");
    suggest->add_option("--similarity", sg_input.similarity_path, "similarity matrix file");
    suggest->add_option("--label-col", sg_input.label_col, "label column in the point file");
    suggest->add_option("--percentile-q", sg_pq, "percentile for q")->default_val(95.0);
    suggest->add_option("--percentile-eps", sg_pe, "percentile for epsilon")->default_val(95.0);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    if (cluster->parsed()) return run_cluster(cl);
    if (localview->parsed()) return run_localview(lv);
    if (eval->parsed()) return run_eval(ev_result, ev_truth, ev_label_col);
    if (gen->parsed()) {
        if (blobs->parsed()) {
            write_points(apx::gen_blobs(gb_n, parse_centers(gb_centers), parse_list(gb_stddevs, "--stddevs"), gb_seed),
                         gb_out);
            return 0;
        }
        write_points(apx::gen_half_moons(hm_n, hm_noise, hm_seed), hm_out);
        return 0;
    }
    if (suggest->parsed()) {
        sg_input.check();
        const auto s = sg_input.load(nullptr);
        if (s.size() < 2) throw InputError("need at least 2 points to suggest parameters");
        std::printf("q %s\nepsilon %s\n", format_g(apx::suggest_q(s, sg_pq)).c_str(),
                    format_g(apx::suggest_epsilon(s, sg_pe)).c_str());
        return 0;
    }
    return kExitUsage;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return dispatch(argc, argv);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const apx::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    } catch (const InputError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    }
}
