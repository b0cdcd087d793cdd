#include "transclust/dataset.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <limits>
#include <map>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "transclust/error.hpp"
#include "transclust/rng.hpp"

namespace transclust {

DataSet::DataSet(Matrix points, std::optional<Labels> labels, std::string name)
    : points_(std::move(points)), labels_(std::move(labels)), name_(std::move(name)) {
    if (points_.rows() == 0 || points_.cols() == 0) {
        throw std::invalid_argument("data set needs at least one sample and one feature");
    }
    for (std::size_t i = 0; i < points_.rows(); ++i) {
        for (double v : points_.row(i)) {
            if (!std::isfinite(v)) {
                throw data_error("sample " + std::to_string(i) + " has a non-finite coordinate");
            }
        }
    }
    if (labels_) {
        if (labels_->size() != points_.rows()) {
            throw std::invalid_argument("label count " + std::to_string(labels_->size()) +
                                        " does not match sample count " +
                                        std::to_string(points_.rows()));
        }
        if (!labels_contiguous(*labels_)) {
            throw std::invalid_argument("labels must cover {0..k-1} without gaps");
        }
        num_classes_ = count_labels(*labels_);
    }
}

const Labels& DataSet::labels() const {
    if (!labels_) throw data_error("data set '" + name_ + "' has no labels");
    return *labels_;
}

int count_labels(const Labels& labels) {
    int k = 0;
    for (int l : labels) k = std::max(k, l + 1);
    return k;
}

bool labels_contiguous(const Labels& labels) {
    if (labels.empty()) return true;
    if (*std::min_element(labels.begin(), labels.end()) < 0) return false;
    std::vector<bool> seen(static_cast<std::size_t>(count_labels(labels)), false);
    for (int l : labels) seen[static_cast<std::size_t>(l)] = true;
    return std::all_of(seen.begin(), seen.end(), [](bool b) { return b; });
}

Labels relabel_contiguous(const Labels& labels) {
    std::map<int, int> index;
    for (int l : labels) index.emplace(l, 0);
    int next = 0;
    for (auto& [key, value] : index) value = next++;
    Labels out;
    out.reserve(labels.size());
    for (int l : labels) out.push_back(index.at(l));
    return out;
}

// ---------------------------------------------------------------------------
// CSV

namespace {

std::string_view trim(std::string_view s) {
    auto is_space = [](char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\n'; };
    while (!s.empty() && is_space(s.front())) s.remove_prefix(1);
    while (!s.empty() && is_space(s.back())) s.remove_suffix(1);
    return s;
}

std::vector<std::string_view> split_row(std::string_view line) {
    std::vector<std::string_view> cells;
    std::size_t start = 0;
    while (true) {
        std::size_t comma = line.find(',', start);
        cells.push_back(trim(line.substr(start, comma - start)));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return cells;
}

std::optional<double> parse_real(std::string_view cell) {
    if (!cell.empty() && cell.front() == '+') cell.remove_prefix(1);
    double value = 0.0;
    auto [ptr, ec] = std::from_chars(cell.data(), cell.data() + cell.size(), value);
    if (ec != std::errc{} || ptr != cell.data() + cell.size() || cell.empty()) {
        return std::nullopt;
    }
    return value;
}

std::optional<long long> parse_integer(std::string_view cell) {
    long long value = 0;
    auto [ptr, ec] = std::from_chars(cell.data(), cell.data() + cell.size(), value);
    if (ec != std::errc{} || ptr != cell.data() + cell.size() || cell.empty()) {
        return std::nullopt;
    }
    return value;
}

}  // namespace

DataSet load_csv(const std::filesystem::path& path, const CsvOptions& options,
                 std::vector<std::string>* warnings) {
    std::ifstream in(path);
    if (!in) throw data_error("cannot open " + path.string());

    std::vector<std::vector<std::string>> rows;
    std::vector<std::size_t> line_numbers;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line_no == 1 && line.starts_with("\xEF\xBB\xBF")) line.erase(0, 3);
        if (trim(line).empty()) continue;
        std::vector<std::string> cells;
        for (auto cell : split_row(line)) cells.emplace_back(cell);
        rows.push_back(std::move(cells));
        line_numbers.push_back(line_no);
    }
    if (rows.empty()) throw data_error(path.string() + ": file contains no rows");

    const std::size_t arity = rows.front().size();
    const auto label_col = options.label_column;
    if (label_col && *label_col >= arity) {
        throw data_error(path.string() + ": label column " + std::to_string(*label_col) +
                         " out of range for " + std::to_string(arity) + " columns");
    }
    auto is_feature = [&](std::size_t c) { return !label_col || c != *label_col; };

    std::size_t first = 0;
    for (std::size_t c = 0; c < arity; ++c) {
        if (is_feature(c) && !parse_real(rows.front()[c])) {
            first = 1;  // header row
            break;
        }
    }
    if (first == rows.size()) throw data_error(path.string() + ": header but no data rows");

    const std::size_t n = rows.size() - first;
    const std::size_t dim = label_col ? arity - 1 : arity;
    if (dim == 0) throw data_error(path.string() + ": no feature columns");

    Matrix points(n, dim);
    std::vector<std::string> raw_labels;
    for (std::size_t r = first; r < rows.size(); ++r) {
        const auto& cells = rows[r];
        const std::string where = path.string() + ":" + std::to_string(line_numbers[r]);
        if (cells.size() != arity) {
            throw data_error(where + ": expected " + std::to_string(arity) + " columns, found " +
                             std::to_string(cells.size()));
        }
        std::size_t out_col = 0;
        for (std::size_t c = 0; c < arity; ++c) {
            if (!is_feature(c)) {
                raw_labels.push_back(cells[c]);
                continue;
            }
            auto value = parse_real(cells[c]);
            if (!value || !std::isfinite(*value)) {
                throw data_error(where + ": cell '" + cells[c] + "' in column " +
                                 std::to_string(c) + " is not a finite number");
            }
            points(r - first, out_col++) = *value;
        }
    }

    std::optional<Labels> labels;
    if (label_col) {
        Labels ints;
        bool numeric = true;
        for (const auto& s : raw_labels) {
            auto v = parse_integer(s);
            if (!v || *v < 0 || *v > std::numeric_limits<int>::max()) {
                numeric = false;
                break;
            }
            ints.push_back(static_cast<int>(*v));
        }
        if (numeric) {
            if (!labels_contiguous(ints)) {
                ints = relabel_contiguous(ints);
                if (warnings) {
                    warnings->push_back(path.string() +
                                        ": labels were not contiguous and were remapped to 0.." +
                                        std::to_string(count_labels(ints) - 1));
                }
            }
        } else {
            ints.clear();
            std::map<std::string, int> codes;
            std::vector<std::string> order;
            for (const auto& s : raw_labels) {
                auto [it, inserted] = codes.emplace(s, static_cast<int>(codes.size()));
                if (inserted) order.push_back(s);
                ints.push_back(it->second);
            }
            if (warnings) {
                std::string mapping;
                for (std::size_t i = 0; i < order.size(); ++i) {
                    mapping += (i ? ", " : "") + order[i] + "->" + std::to_string(i);
                }
                warnings->push_back(path.string() + ": string labels mapped as " + mapping);
            }
        }
        labels = std::move(ints);
    }
    return DataSet(std::move(points), std::move(labels), path.stem().string());
}

void write_csv(const DataSet& data, const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out) throw data_error("cannot write " + path.string());
    out << std::setprecision(17);
    for (std::size_t i = 0; i < data.size(); ++i) {
        auto row = data.point(i);
        for (std::size_t c = 0; c < row.size(); ++c) {
            if (c) out << ',';
            out << row[c];
        }
        if (data.has_labels()) out << ',' << data.labels()[i];
        out << '\n';
    }
}

// ---------------------------------------------------------------------------
// Generators

std::string to_string(Shape shape) {
    switch (shape) {
        case Shape::TwoMoon: return "twomoon";
        case Shape::MultiScaleGaussians: return "multiscale";
        case Shape::RingsWithNoise: return "rings";
        case Shape::GaussianMixture: return "gmm";
    }
    return "unknown";
}

Shape parse_shape(const std::string& text) {
    for (Shape s : {Shape::TwoMoon, Shape::MultiScaleGaussians, Shape::RingsWithNoise,
                    Shape::GaussianMixture}) {
        if (text == to_string(s)) return s;
    }
    throw std::invalid_argument("unknown shape '" + text +
                                "' (expected twomoon, multiscale, rings or gmm)");
}

SyntheticSpec SyntheticSpec::defaults(Shape shape, std::uint64_t seed) {
    SyntheticSpec spec;
    spec.shape = shape;
    spec.seed = seed;
    switch (shape) {
        case Shape::TwoMoon: spec.samples_per_cluster = {25, 25}; break;
        case Shape::MultiScaleGaussians: spec.samples_per_cluster = {80, 80, 40}; break;
        case Shape::RingsWithNoise: spec.samples_per_cluster = {100, 200}; break;
        case Shape::GaussianMixture: spec.samples_per_cluster = {67, 67, 66}; break;
    }
    return spec;
}

int SyntheticSpec::total() const {
    int sum = noise_count;
    for (int s : samples_per_cluster) sum += s;
    return sum;
}

namespace {

bool in_unit_box(double x, double y) { return x > 0.0 && x < 1.0 && y > 0.0 && y < 1.0; }

class PointSink {
public:
    explicit PointSink(std::size_t n) : points_(n, 2) { labels_.reserve(n); }

    void add(double x, double y, int label) {
        points_(labels_.size(), 0) = x;
        points_(labels_.size(), 1) = y;
        labels_.push_back(label);
    }

    DataSet finish(std::string name) {
        return DataSet(std::move(points_), std::move(labels_), std::move(name));
    }

private:
    Matrix points_;
    Labels labels_;
};

// Draws until the sample lands inside the unit square.
template <class Draw>
void add_in_box(PointSink& sink, int label, Draw&& draw) {
    for (;;) {
        auto [x, y] = draw();
        if (in_unit_box(x, y)) {
            sink.add(x, y, label);
            return;
        }
    }
}

// Isotropic Gaussian truncated at 2.5 sigma.
std::pair<double, double> truncated_gaussian(Rng& rng, double cx, double cy, double sigma) {
    for (;;) {
        double dx = rng.normal();
        double dy = rng.normal();
        if (dx * dx + dy * dy <= 6.25) return {cx + sigma * dx, cy + sigma * dy};
    }
}

void generate_two_moon(const SyntheticSpec& spec, Rng& rng, PointSink& sink) {
    const auto& p = spec.params;
    const double r = p.moon_radius;
    // Upper arc centred at (cx, cy) opening downwards; the lower arc is centred
    // at (cx + r, cy + r - gap) opening upwards, so the closest approach of the
    // noise-free arcs is `gap`.
    const double cx = 0.5 - r / 2.0;
    const double cy = 0.5 - (r - p.moon_gap) / 2.0;
    for (int c = 0; c < 2; ++c) {
        const int m = spec.samples_per_cluster[static_cast<std::size_t>(c)];
        for (int i = 0; i < m; ++i) {
            add_in_box(sink, c, [&] {
                // Stratified along the arc: one sample per slice of angle pi / m.
                double t = std::numbers::pi * (i + rng.uniform()) / m;
                double x = c == 0 ? cx + r * std::cos(t) : cx + r - r * std::cos(t);
                double y = c == 0 ? cy + r * std::sin(t) : cy + r - p.moon_gap - r * std::sin(t);
                return std::pair{x + p.moon_jitter * rng.normal(), y + p.moon_jitter * rng.normal()};
            });
        }
    }
}

void generate_multiscale(const SyntheticSpec& spec, Rng& rng, PointSink& sink) {
    const auto& p = spec.params;
    const double top = 0.5 + p.sparse_offset / 2.0;
    const double centres[3][2] = {
        {0.5 - p.dense_separation / 2.0, top},
        {0.5 + p.dense_separation / 2.0, top},
        {0.5, top - p.sparse_offset},
    };
    const double sigmas[3] = {p.dense_sigma, p.dense_sigma, p.sparse_sigma};
    for (std::size_t c = 0; c < 3; ++c) {
        for (int i = 0; i < spec.samples_per_cluster[c]; ++i) {
            add_in_box(sink, static_cast<int>(c), [&] {
                return truncated_gaussian(rng, centres[c][0], centres[c][1], sigmas[c]);
            });
        }
    }
}

void generate_rings(const SyntheticSpec& spec, Rng& rng, PointSink& sink) {
    const auto& p = spec.params;
    const std::size_t rings = spec.samples_per_cluster.size();
    for (std::size_t c = 0; c < rings; ++c) {
        const double radius = p.ring_radii[c];
        for (int i = 0; i < spec.samples_per_cluster[c]; ++i) {
            add_in_box(sink, static_cast<int>(c), [&] {
                double t = rng.uniform(0.0, 2.0 * std::numbers::pi);
                double rad = radius + p.ring_jitter * rng.normal();
                return std::pair{0.5 + rad * std::cos(t), 0.5 + rad * std::sin(t)};
            });
        }
    }
    for (int i = 0; i < spec.noise_count; ++i) {
        add_in_box(sink, static_cast<int>(rings),
                   [&] { return std::pair{rng.uniform(), rng.uniform()}; });
    }
}

void generate_mixture(const SyntheticSpec& spec, Rng& rng, PointSink& sink) {
    const auto& p = spec.params;
    const std::size_t k = spec.samples_per_cluster.size();
    const double margin = std::min(0.45, 2.5 * p.mixture_sigma);
    std::vector<std::pair<double, double>> centres;
    int attempts = 0;
    while (centres.size() < k) {
        if (++attempts > 100000) {
            throw std::invalid_argument("cannot place " + std::to_string(k) +
                                        " mixture centres with the requested separation");
        }
        double x = rng.uniform(margin, 1.0 - margin);
        double y = rng.uniform(margin, 1.0 - margin);
        bool ok = std::all_of(centres.begin(), centres.end(), [&](const auto& c) {
            return std::hypot(c.first - x, c.second - y) >= p.mixture_min_separation;
        });
        if (ok) centres.emplace_back(x, y);
    }
    for (std::size_t c = 0; c < k; ++c) {
        for (int i = 0; i < spec.samples_per_cluster[c]; ++i) {
            add_in_box(sink, static_cast<int>(c), [&] {
                return std::pair{rng.normal(centres[c].first, p.mixture_sigma),
                                 rng.normal(centres[c].second, p.mixture_sigma)};
            });
        }
    }
}

void validate(const SyntheticSpec& spec) {
    if (spec.samples_per_cluster.empty()) {
        throw std::invalid_argument("samples_per_cluster must list at least one cluster");
    }
    for (std::size_t c = 0; c < spec.samples_per_cluster.size(); ++c) {
        if (spec.samples_per_cluster[c] < 1) {
            throw std::invalid_argument("cluster " + std::to_string(c) +
                                        " must have at least one sample");
        }
    }
    if (spec.noise_count < 0) throw std::invalid_argument("noise_count must be >= 0");
    if (spec.noise_count > 0 && spec.shape != Shape::RingsWithNoise) {
        throw std::invalid_argument("noise points are only supported for the rings shape");
    }
    const std::size_t k = spec.samples_per_cluster.size();
    switch (spec.shape) {
        case Shape::TwoMoon:
            if (k != 2) throw std::invalid_argument("twomoon needs exactly 2 clusters");
            break;
        case Shape::MultiScaleGaussians:
            if (k != 3) throw std::invalid_argument("multiscale needs exactly 3 clusters");
            break;
        case Shape::RingsWithNoise:
            if (k > 2) throw std::invalid_argument("rings supports 1 or 2 rings");
            break;
        case Shape::GaussianMixture: break;
    }
}

}  // namespace

DataSet generate(const SyntheticSpec& spec) {
    validate(spec);
    Rng rng(spec.seed);
    PointSink sink(static_cast<std::size_t>(spec.total()));
    switch (spec.shape) {
        case Shape::TwoMoon: generate_two_moon(spec, rng, sink); break;
        case Shape::MultiScaleGaussians: generate_multiscale(spec, rng, sink); break;
        case Shape::RingsWithNoise: generate_rings(spec, rng, sink); break;
        case Shape::GaussianMixture: generate_mixture(spec, rng, sink); break;
    }
    return sink.finish(to_string(spec.shape) + "-" + std::to_string(spec.seed));
}

}  // namespace transclust
