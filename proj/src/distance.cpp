#include "transclust/distance.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <stdexcept>

#include "transclust/error.hpp"
#include "transclust/parallel.hpp"

namespace transclust {

std::string to_string(Metric metric) {
    switch (metric) {
        case Metric::Euclidean: return "euclidean";
        case Metric::Manhattan: return "manhattan";
        case Metric::Cosine: return "cosine";
    }
    return "unknown";
}

Metric parse_metric(const std::string& text) {
    for (Metric m : {Metric::Euclidean, Metric::Manhattan, Metric::Cosine}) {
        if (text == to_string(m)) return m;
    }
    throw std::invalid_argument("unknown metric '" + text +
                                "' (expected euclidean, manhattan or cosine)");
}

namespace {

double norm(std::span<const double> a) {
    double s = 0.0;
    for (double v : a) s += v * v;
    return std::sqrt(s);
}

double cosine_distance(std::span<const double> a, std::span<const double> b, double na,
                       double nb) {
    double dot = 0.0;
    for (std::size_t c = 0; c < a.size(); ++c) dot += a[c] * b[c];
    return std::clamp(1.0 - dot / (na * nb), 0.0, 2.0);
}

}  // namespace

double pair_distance(std::span<const double> a, std::span<const double> b, Metric metric) {
    switch (metric) {
        case Metric::Euclidean: {
            double s = 0.0;
            for (std::size_t c = 0; c < a.size(); ++c) {
                double d = a[c] - b[c];
                s += d * d;
            }
            return std::sqrt(s);
        }
        case Metric::Manhattan: {
            double s = 0.0;
            for (std::size_t c = 0; c < a.size(); ++c) s += std::abs(a[c] - b[c]);
            return s;
        }
        case Metric::Cosine: return cosine_distance(a, b, norm(a), norm(b));
    }
    return 0.0;
}

DistanceMatrix build_distance_matrix(const DataSet& data, Metric metric, unsigned threads) {
    const std::size_t n = data.size();
    const Matrix& x = data.points();

    std::vector<double> norms;
    if (metric == Metric::Cosine) {
        norms.resize(n);
        for (std::size_t i = 0; i < n; ++i) {
            norms[i] = norm(x.row(i));
            if (norms[i] == 0.0) {
                throw data_error("cosine distance undefined: sample " + std::to_string(i) +
                                 " is the zero vector");
            }
        }
    }

    Matrix e(n, n, 0.0);
    parallel_for(0, n, threads, [&](std::size_t i) {
        auto a = x.row(i);
        for (std::size_t j = i + 1; j < n; ++j) {
            e(i, j) = metric == Metric::Cosine ? cosine_distance(a, x.row(j), norms[i], norms[j])
                                               : pair_distance(a, x.row(j), metric);
        }
    });
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) e(j, i) = e(i, j);
    }
    return {std::move(e), to_string(metric)};
}

DistanceMatrix make_distance_matrix(Matrix values, std::string metric) {
    if (values.rows() != values.cols()) throw std::invalid_argument("distance matrix must be square");
    const std::size_t n = values.rows();
    for (std::size_t i = 0; i < n; ++i) {
        if (values(i, i) != 0.0) throw std::invalid_argument("distance matrix diagonal must be zero");
        for (std::size_t j = i + 1; j < n; ++j) {
            double v = values(i, j);
            if (!(std::isfinite(v) && v >= 0.0)) {
                throw std::invalid_argument("distance matrix entries must be finite and >= 0");
            }
            if (values(j, i) != v) throw std::invalid_argument("distance matrix must be symmetric");
        }
    }
    return {std::move(values), std::move(metric)};
}

void write_matrix_text(const Matrix& m, std::ostream& out) {
    out << std::setprecision(17);
    for (std::size_t i = 0; i < m.rows(); ++i) {
        auto row = m.row(i);
        for (std::size_t j = 0; j < row.size(); ++j) {
            if (j) out << ' ';
            out << row[j];
        }
        out << '\n';
    }
}

void write_matrix_text(const Matrix& m, const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out) throw data_error("cannot write " + path.string());
    write_matrix_text(m, out);
}

}  // namespace transclust
