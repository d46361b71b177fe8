#include "nonholo/chart.hpp"

#include <stdexcept>

namespace nonholo {

adapted_chart::adapted_chart(std::vector<std::string> shape_names, std::vector<std::string> h_names,
                             std::vector<std::string> gw_names,
                             std::vector<coordinate_range> ranges)
    : shape_(std::move(shape_names)),
      h_(std::move(h_names)),
      gw_(std::move(gw_names)),
      ranges_(std::move(ranges)) {
    if (static_cast<int>(ranges_.size()) != dim())
        throw std::invalid_argument("adapted_chart: one range per coordinate required");
}

const std::string& adapted_chart::name(int idx) const {
    int ns = n_shape(), nh = n_h();
    if (idx < ns) return shape_[idx];
    if (idx < ns + nh) return h_[idx - ns];
    return gw_[idx - ns - nh];
}

int adapted_chart::index_of(const std::string& name) const {
    for (int i = 0; i < dim(); ++i)
        if (this->name(i) == name) return i;
    return -1;
}

bool adapted_chart::in_range(const std::vector<double>& q, double margin) const {
    int count = static_cast<int>(q.size());
    for (int i = 0; i < count && i < dim(); ++i) {
        if (!ranges_[i].hard) continue;
        if (q[i] < ranges_[i].lo + margin || q[i] > ranges_[i].hi - margin) return false;
    }
    return true;
}

std::vector<double> adapted_chart::sample(std::mt19937_64& rng, double margin) const {
    std::vector<double> q(dim());
    for (int i = 0; i < dim(); ++i) {
        double lo = ranges_[i].lo, hi = ranges_[i].hi;
        if (ranges_[i].hard) {
            lo += margin;
            hi -= margin;
        }
        q[i] = std::uniform_real_distribution<double>(lo, hi)(rng);
    }
    return q;
}

std::vector<double> adapted_chart::sample_qbar(std::mt19937_64& rng, double margin) const {
    std::vector<double> q = sample(rng, margin);
    q.resize(qbar_dim());
    return q;
}

}  // namespace nonholo
