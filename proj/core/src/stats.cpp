#include "eigenflow/stats.hpp"

#include "eigenflow/errors.hpp"

#include <algorithm>
#include <cmath>

namespace eigenflow {

double Summary::standard_error() const {
    return n > 0 ? sd / std::sqrt(static_cast<double>(n)) : 0.0;
}

double Summary::half_width_95() const { return 1.96 * standard_error(); }

Summary summarize(std::span<const double> values) {
    Summary s;
    s.n = values.size();
    if (s.n == 0) return s;
    double sum = 0.0;
    for (double v : values) sum += v;
    s.mean = sum / static_cast<double>(s.n);
    if (s.n > 1) {
        double ss = 0.0;
        for (double v : values) ss += (v - s.mean) * (v - s.mean);
        s.sd = std::sqrt(ss / static_cast<double>(s.n - 1));
    }
    return s;
}

double median(std::vector<double> values) {
    if (values.empty()) throw DimensionError("median: empty input");
    const std::size_t mid = values.size() / 2;
    std::nth_element(values.begin(), values.begin() + mid, values.end());
    double hi = values[mid];
    if (values.size() % 2 == 1) return hi;
    std::nth_element(values.begin(), values.begin() + mid - 1, values.begin() + mid);
    return 0.5 * (values[mid - 1] + hi);
}

MomResult median_of_means(std::span<const double> values, int blocks) {
    if (values.empty()) throw DimensionError("median_of_means: empty input");
    if (blocks < 1) blocks = 1;
    if (static_cast<std::size_t>(blocks) > values.size()) {
        blocks = static_cast<int>(values.size());
    }
    const std::size_t per = values.size() / static_cast<std::size_t>(blocks);

    std::vector<double> block_means;
    block_means.reserve(static_cast<std::size_t>(blocks));
    for (int b = 0; b < blocks; ++b) {
        const std::size_t lo = static_cast<std::size_t>(b) * per;
        const std::size_t hi = (b == blocks - 1) ? values.size() : lo + per;
        double sum = 0.0;
        for (std::size_t i = lo; i < hi; ++i) sum += values[i];
        block_means.push_back(sum / static_cast<double>(hi - lo));
    }

    MomResult out;
    out.estimate = median(block_means);
    out.plain_mean = summarize(values).mean;
    // se of the sample median under normal approximation: 1.2533 sd / sqrt(B).
    const Summary bs = summarize(block_means);
    out.half_width = 1.96 * 1.2533 * bs.sd / std::sqrt(static_cast<double>(block_means.size()));
    return out;
}

}  // namespace eigenflow
