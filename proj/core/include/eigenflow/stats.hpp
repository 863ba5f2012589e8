#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace eigenflow {

struct Summary {
    double mean = 0.0;
    double sd = 0.0;  // sample standard deviation
    std::size_t n = 0;

    double standard_error() const;
    double half_width_95() const;  // 1.96 * se
};

Summary summarize(std::span<const double> values);

double median(std::vector<double> values);  // by copy; averages middle pair

struct MomResult {
    double estimate = 0.0;    // median of block means
    double half_width = 0.0;  // normal-approx spread of the median
    double plain_mean = 0.0;
};

// Median-of-means over `blocks` contiguous blocks; robust for heavy tails.
MomResult median_of_means(std::span<const double> values, int blocks = 20);

}  // namespace eigenflow
