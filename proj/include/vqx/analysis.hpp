#pragma once

#include <string>
#include <vector>

#include "vqx/hamiltonians.hpp"

namespace vqx {

struct PairedSeries {
    std::vector<double> x;
    std::vector<double> y;
    std::vector<std::string> labels;

    void validate(std::size_t min_len = 3) const;
};

struct CorrelationReport {
    double pearson = 0.0;
    double spearman = 0.0;
    double kendall = 0.0;
    double mutual_info = 0.0;
    long n = 0;
};

double pearson(const std::vector<double>& x, const std::vector<double>& y);
// Pearson on mid-ranks (ties get the average rank)
double spearman(const std::vector<double>& x, const std::vector<double>& y);
// tau-b, tie-corrected
double kendall_tau(const std::vector<double>& x, const std::vector<double>& y);
// plug-in estimator on an equal-width 2-D histogram, natural log;
// bins <= 0 selects ceil(sqrt(n/5))
double mutual_information(const std::vector<double>& x, const std::vector<double>& y,
                          int bins = 0);

int default_mi_bins(std::size_t n);

CorrelationReport correlation_report(const PairedSeries& series, int mi_bins = 0);

// --- Class aggregation --------------------------------------------------------

struct ClassKey {
    ProblemClass problem_class;
    // Heisenberg instances split by ground kind into two subclasses
    std::optional<GroundKind> subclass;

    bool operator<(const ClassKey& o) const;
    std::string name() const;
};

struct ClassAggregate {
    ClassKey key;
    long n_instances = 0;
    // population mean/std across instances of the class
    double pearson_mean = 0.0, pearson_std = 0.0;
    double spearman_mean = 0.0, spearman_std = 0.0;
    double kendall_mean = 0.0, kendall_std = 0.0;
    double mi_mean = 0.0, mi_std = 0.0;
};

struct InstanceReport {
    ClassKey key;
    std::string hamiltonian_id;
    CorrelationReport report;
};

std::vector<ClassAggregate> aggregate_by_class(const std::vector<InstanceReport>& reports);

} // namespace vqx
