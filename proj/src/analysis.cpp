#include "vqx/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <stdexcept>

namespace vqx {

void PairedSeries::validate(std::size_t min_len) const {
    if (x.size() != y.size()) throw std::invalid_argument("paired series length mismatch");
    if (x.size() < min_len)
        throw std::invalid_argument("paired series needs at least " +
                                    std::to_string(min_len) + " points");
    for (double v : x)
        if (!std::isfinite(v)) throw std::invalid_argument("non-finite value in series x");
    for (double v : y)
        if (!std::isfinite(v)) throw std::invalid_argument("non-finite value in series y");
}

namespace {

double mean_of(const std::vector<double>& v) {
    return std::accumulate(v.begin(), v.end(), 0.0) / static_cast<double>(v.size());
}

std::vector<double> midranks(const std::vector<double>& v) {
    const std::size_t n = v.size();
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return v[a] < v[b]; });
    std::vector<double> ranks(n);
    std::size_t i = 0;
    while (i < n) {
        std::size_t j = i;
        while (j + 1 < n && v[order[j + 1]] == v[order[i]]) ++j;
        const double r = 0.5 * static_cast<double>(i + j) + 1.0; // 1-based average rank
        for (std::size_t k = i; k <= j; ++k) ranks[order[k]] = r;
        i = j + 1;
    }
    return ranks;
}

} // namespace

double pearson(const std::vector<double>& x, const std::vector<double>& y) {
    if (x.size() != y.size() || x.size() < 3)
        throw std::invalid_argument("pearson needs matched series of length >= 3");
    const double mx = mean_of(x), my = mean_of(y);
    double sxy = 0.0, sxx = 0.0, syy = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        sxy += (x[i] - mx) * (y[i] - my);
        sxx += (x[i] - mx) * (x[i] - mx);
        syy += (y[i] - my) * (y[i] - my);
    }
    if (sxx == 0.0 || syy == 0.0) throw std::invalid_argument("pearson: zero variance");
    return sxy / std::sqrt(sxx * syy);
}

double spearman(const std::vector<double>& x, const std::vector<double>& y) {
    return pearson(midranks(x), midranks(y));
}

double kendall_tau(const std::vector<double>& x, const std::vector<double>& y) {
    if (x.size() != y.size() || x.size() < 3)
        throw std::invalid_argument("kendall_tau needs matched series of length >= 3");
    const long n = static_cast<long>(x.size());
    long concordant = 0, discordant = 0, ties_x = 0, ties_y = 0;
    for (long i = 0; i < n; ++i) {
        for (long j = i + 1; j < n; ++j) {
            const double dx = x[j] - x[i], dy = y[j] - y[i];
            if (dx == 0.0 && dy == 0.0) {
                ++ties_x;
                ++ties_y;
            } else if (dx == 0.0) {
                ++ties_x;
            } else if (dy == 0.0) {
                ++ties_y;
            } else if (dx * dy > 0.0) {
                ++concordant;
            } else {
                ++discordant;
            }
        }
    }
    const double n0 = 0.5 * static_cast<double>(n) * static_cast<double>(n - 1);
    const double denom = std::sqrt((n0 - static_cast<double>(ties_x)) *
                                   (n0 - static_cast<double>(ties_y)));
    if (denom == 0.0) throw std::invalid_argument("kendall_tau: all pairs tied");
    return static_cast<double>(concordant - discordant) / denom;
}

int default_mi_bins(std::size_t n) {
    return std::max(2, static_cast<int>(std::ceil(std::sqrt(static_cast<double>(n) / 5.0))));
}

double mutual_information(const std::vector<double>& x, const std::vector<double>& y,
                          int bins) {
    if (x.size() != y.size() || x.size() < 10)
        throw std::invalid_argument("mutual_information needs matched series of length >= 10");
    const std::size_t n = x.size();
    const int b = bins > 0 ? bins : default_mi_bins(n);

    auto bin_of = [&](const std::vector<double>& v) {
        const auto [mn_it, mx_it] = std::minmax_element(v.begin(), v.end());
        const double mn = *mn_it, mx = *mx_it;
        std::vector<int> out(n);
        if (mx == mn) return out; // degenerate marginal: everything in bin 0
        for (std::size_t i = 0; i < n; ++i) {
            int k = static_cast<int>((v[i] - mn) / (mx - mn) * b);
            out[i] = std::min(k, b - 1);
        }
        return out;
    };

    const auto bx = bin_of(x), by = bin_of(y);
    std::vector<double> joint(static_cast<std::size_t>(b) * b, 0.0);
    std::vector<double> px(b, 0.0), py(b, 0.0);
    const double w = 1.0 / static_cast<double>(n);
    for (std::size_t i = 0; i < n; ++i) {
        joint[static_cast<std::size_t>(bx[i]) * b + by[i]] += w;
        px[bx[i]] += w;
        py[by[i]] += w;
    }
    double info = 0.0;
    for (int i = 0; i < b; ++i)
        for (int j = 0; j < b; ++j) {
            const double p = joint[static_cast<std::size_t>(i) * b + j];
            if (p > 0.0) info += p * std::log(p / (px[i] * py[j]));
        }
    return std::max(0.0, info);
}

CorrelationReport correlation_report(const PairedSeries& series, int mi_bins) {
    series.validate(10);
    CorrelationReport r;
    r.pearson = pearson(series.x, series.y);
    r.spearman = spearman(series.x, series.y);
    r.kendall = kendall_tau(series.x, series.y);
    r.mutual_info = mutual_information(series.x, series.y, mi_bins);
    r.n = static_cast<long>(series.x.size());
    return r;
}

bool ClassKey::operator<(const ClassKey& o) const {
    if (problem_class != o.problem_class) return problem_class < o.problem_class;
    const int a = subclass ? static_cast<int>(*subclass) + 1 : 0;
    const int b = o.subclass ? static_cast<int>(*o.subclass) + 1 : 0;
    return a < b;
}

std::string ClassKey::name() const {
    std::string s = problem_class_name(problem_class);
    if (subclass)
        s += *subclass == GroundKind::BasisState ? "_basis" : "_superposition";
    return s;
}

std::vector<ClassAggregate> aggregate_by_class(const std::vector<InstanceReport>& reports) {
    if (reports.empty()) throw std::invalid_argument("no instance reports to aggregate");
    std::map<ClassKey, std::vector<const CorrelationReport*>> groups;
    for (const auto& r : reports) groups[r.key].push_back(&r.report);

    auto stats = [](const std::vector<const CorrelationReport*>& g, auto field) {
        double mean = 0.0;
        for (const auto* r : g) mean += r->*field;
        mean /= static_cast<double>(g.size());
        double var = 0.0;
        for (const auto* r : g) var += (r->*field - mean) * (r->*field - mean);
        var /= static_cast<double>(g.size());
        return std::make_pair(mean, std::sqrt(var));
    };

    std::vector<ClassAggregate> out;
    for (const auto& [key, group] : groups) {
        ClassAggregate agg;
        agg.key = key;
        agg.n_instances = static_cast<long>(group.size());
        std::tie(agg.pearson_mean, agg.pearson_std) = stats(group, &CorrelationReport::pearson);
        std::tie(agg.spearman_mean, agg.spearman_std) =
            stats(group, &CorrelationReport::spearman);
        std::tie(agg.kendall_mean, agg.kendall_std) = stats(group, &CorrelationReport::kendall);
        std::tie(agg.mi_mean, agg.mi_std) = stats(group, &CorrelationReport::mutual_info);
        out.push_back(agg);
    }
    return out;
}

} // namespace vqx
