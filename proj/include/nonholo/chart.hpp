/**
 * @file chart.hpp
 * @brief Adapted coordinate charts: shape, symmetry-fiber, and constraint-fiber blocks.
 */
#pragma once

#include <random>
#include <string>
#include <vector>

namespace nonholo {

// Sampling interval and guard policy for one coordinate.  hard == true marks a
// coordinate-singularity boundary: integration must abort before crossing it.
struct coordinate_range {
    double lo = -1.0;
    double hi = 1.0;
    bool hard = false;
};

// Configuration chart split into three blocks, concatenated in the fixed order
// shape | h_fiber | gw_fiber.  The first two blocks survive the first
// reduction step; the gw block is the constraint fiber eliminated by it.
class adapted_chart {
public:
    adapted_chart() = default;
    adapted_chart(std::vector<std::string> shape_names, std::vector<std::string> h_names,
                  std::vector<std::string> gw_names, std::vector<coordinate_range> ranges);

    int n_shape() const { return static_cast<int>(shape_.size()); }
    int n_h() const { return static_cast<int>(h_.size()); }
    int n_gw() const { return static_cast<int>(gw_.size()); }
    int dim() const { return n_shape() + n_h() + n_gw(); }
    // dimension of the quotient configuration space after the first reduction
    int qbar_dim() const { return n_shape() + n_h(); }

    const std::vector<std::string>& shape_names() const { return shape_; }
    const std::vector<std::string>& h_names() const { return h_; }
    const std::vector<std::string>& gw_names() const { return gw_; }
    const std::vector<coordinate_range>& ranges() const { return ranges_; }

    // name of the idx-th coordinate in block order
    const std::string& name(int idx) const;
    // index of a named coordinate; -1 if absent
    int index_of(const std::string& name) const;

    // true when every hard-ranged entry of q sits at least margin inside its interval;
    // q may be a q-bar prefix (shape+h) or a full configuration point
    bool in_range(const std::vector<double>& q, double margin = 0.0) const;

    // uniform sample of the full configuration box, margin inside hard bounds
    std::vector<double> sample(std::mt19937_64& rng, double margin = 0.05) const;
    // uniform sample of the first qbar_dim coordinates
    std::vector<double> sample_qbar(std::mt19937_64& rng, double margin = 0.05) const;

private:
    std::vector<std::string> shape_, h_, gw_;
    std::vector<coordinate_range> ranges_;
};

}  // namespace nonholo
