#pragma once

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "apx/matrix.hpp"
#include "apx/random.hpp"

namespace apx {

/// Raised for malformed input files; message carries the offending row.
struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct PointSet {
    std::vector<std::vector<double>> points;  // all of identical dimension
    std::vector<int> labels;                  // empty or one per point

    int size() const { return static_cast<int>(points.size()); }
    int dim() const { return points.empty() ? 0 : static_cast<int>(points.front().size()); }
    bool has_labels() const { return !labels.empty(); }
};

namespace detail {

/// Split a line on commas and/or whitespace; '#' starts a comment.
inline std::vector<std::string> split_fields(const std::string& line) {
    std::vector<std::string> fields;
    std::string cur;
    for (char c : line) {
        if (c == '#') break;
        if (c == ',' || c == ' ' || c == '\t' || c == '\r') {
            if (!cur.empty()) {
                fields.push_back(cur);
                cur.clear();
            }
        } else {
            cur.push_back(c);
        }
    }
    if (!cur.empty()) fields.push_back(cur);
    return fields;
}

inline double parse_number(const std::string& field, int row) {
    char* end = nullptr;
    const double x = std::strtod(field.c_str(), &end);
    if (end == field.c_str() || *end != '\0')
        throw ParseError("parse error at row " + std::to_string(row) + ": non-numeric field '" + field + "'");
    return x;
}

inline std::vector<std::vector<double>> read_numeric_rows(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open file: " + path);
    std::vector<std::vector<double>> rows;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto fields = split_fields(line);
        if (fields.empty()) continue;  // blank or comment line
        std::vector<double> row;
        row.reserve(fields.size());
        for (const auto& f : fields) row.push_back(parse_number(f, lineno));
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace detail

/// Read a point set: one point per line, fields separated by commas or
/// whitespace, optional integer label column.
inline PointSet load_points(const std::string& path, std::optional<int> label_column = std::nullopt) {
    const auto rows = detail::read_numeric_rows(path);
    if (rows.empty()) throw ParseError("no points in file: " + path);

    const int width = static_cast<int>(rows.front().size());
    if (label_column && (*label_column < 0 || *label_column >= width))
        throw ParseError("label column " + std::to_string(*label_column) + " out of range for " +
                         std::to_string(width) + " fields");

    PointSet ps;
    ps.points.reserve(rows.size());
    if (label_column) ps.labels.reserve(rows.size());
    for (size_t r = 0; r < rows.size(); ++r) {
        if (static_cast<int>(rows[r].size()) != width)
            throw ParseError("parse error at row " + std::to_string(r + 1) + ": expected " +
                             std::to_string(width) + " fields, got " + std::to_string(rows[r].size()));
        std::vector<double> p;
        p.reserve(width - (label_column ? 1 : 0));
        for (int c = 0; c < width; ++c) {
            if (label_column && c == *label_column) {
                const double lab = rows[r][c];
                if (lab != std::floor(lab))
                    throw ParseError("parse error at row " + std::to_string(r + 1) + ": non-integer label");
                ps.labels.push_back(static_cast<int>(lab));
            } else {
                p.push_back(rows[r][c]);
            }
        }
        if (p.empty()) throw ParseError("no coordinate fields left after removing label column");
        ps.points.push_back(std::move(p));
    }
    return ps;
}

/// Read a dense n-by-n similarity matrix. The diagonal is kept as read;
/// callers overwrite it with the preference before running an engine.
inline SimilarityMatrix load_similarity(const std::string& path) {
    const auto rows = detail::read_numeric_rows(path);
    if (rows.empty()) throw ParseError("no rows in similarity file: " + path);
    const int n = static_cast<int>(rows.size());
    SimilarityMatrix s(n);
    for (int i = 0; i < n; ++i) {
        if (static_cast<int>(rows[i].size()) != n)
            throw ParseError("similarity matrix not square: " + std::to_string(n) + " rows but row " +
                             std::to_string(i + 1) + " has " + std::to_string(rows[i].size()) + " columns");
        for (int j = 0; j < n; ++j) s(i, j) = rows[i][j];
    }
    return s;
}

/// s(i,j) = -||x_i - x_j||_2 off the diagonal; s(i,i) = preference.
inline SimilarityMatrix similarity_from_points(const PointSet& ps, double preference) {
    if (ps.size() == 0) throw std::invalid_argument("empty point set");
    const int n = ps.size();
    const int d = ps.dim();
    SimilarityMatrix s(n);
    for (int i = 0; i < n; ++i) {
        s(i, i) = preference;
        for (int j = i + 1; j < n; ++j) {
            double sq = 0.0;
            for (int k = 0; k < d; ++k) {
                const double diff = ps.points[i][k] - ps.points[j][k];
                sq += diff * diff;
            }
            const double sim = -std::sqrt(sq);
            s(i, j) = sim;
            s(j, i) = sim;
        }
    }
    return s;
}

/// Gaussian blobs around the given 2-D centers; labels are blob indices.
inline PointSet gen_blobs(int n_per_blob, const std::vector<std::vector<double>>& centers,
                          const std::vector<double>& stddevs, uint64_t seed) {
    if (centers.size() != stddevs.size())
        throw std::invalid_argument("gen_blobs: centers and stddevs must have the same length");
    if (n_per_blob <= 0) throw std::invalid_argument("gen_blobs: n_per_blob must be positive");
    Rng rng(seed);
    PointSet ps;
    for (size_t b = 0; b < centers.size(); ++b) {
        const auto& c = centers[b];
        for (int i = 0; i < n_per_blob; ++i) {
            std::vector<double> p(c.size());
            for (size_t k = 0; k < c.size(); ++k) p[k] = c[k] + stddevs[b] * rng.normal();
            ps.points.push_back(std::move(p));
            ps.labels.push_back(static_cast<int>(b));
        }
    }
    return ps;
}

/// Two interleaved crescents with Gaussian noise; labels 0 (upper) and 1 (lower).
/// Upper arc: unit half-circle about the origin, y >= 0.
/// Lower arc: reflected unit half-circle offset by x+1, y-0.5, i.e. points
/// (1 - cos t, 0.5 - sin t) with t in [0, pi].
inline PointSet gen_half_moons(int n, double noise, uint64_t seed) {
    if (n < 2) throw std::invalid_argument("gen_half_moons: need n >= 2");
    const int n_lower = n / 2;
    const int n_upper = n - n_lower;
    const double pi = 3.14159265358979323846;
    Rng rng(seed);
    PointSet ps;
    ps.points.reserve(n);
    ps.labels.reserve(n);
    for (int i = 0; i < n_upper; ++i) {
        const double t = n_upper == 1 ? 0.0 : pi * i / (n_upper - 1);
        ps.points.push_back({std::cos(t) + noise * rng.normal(), std::sin(t) + noise * rng.normal()});
        ps.labels.push_back(0);
    }
    for (int i = 0; i < n_lower; ++i) {
        const double t = n_lower == 1 ? 0.0 : pi * i / (n_lower - 1);
        ps.points.push_back({1.0 - std::cos(t) + noise * rng.normal(), 0.5 - std::sin(t) + noise * rng.normal()});
        ps.labels.push_back(1);
    }
    return ps;
}

}  // namespace apx
