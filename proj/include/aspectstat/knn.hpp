#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace aspectstat {

/// Static kd-tree over row-major points, queried under the max-norm
/// (Chebyshev) distance. Holds a copy of the coordinates.
class ChebyshevKdTree {
public:
    ChebyshevKdTree(std::span<const double> coords, std::size_t dim);

    std::size_t size() const { return n_; }
    std::size_t dim() const { return dim_; }

    /// Distance from point `i` to its k-th nearest other point. Requires
    /// 1 <= k < size().
    double kth_neighbor_distance(std::size_t i, std::size_t k) const;

private:
    struct Node {
        std::size_t begin = 0, end = 0;  // range in perm_
        std::size_t split_dim = 0;
        double split = 0.0;
        int left = -1, right = -1;
    };

    int build(std::size_t begin, std::size_t end);
    void search(int node, const double* q, std::size_t self, std::size_t k, std::vector<double>& heap) const;
    const double* point(std::size_t idx) const { return coords_.data() + idx * dim_; }

    std::vector<double> coords_;
    std::size_t dim_;
    std::size_t n_;
    std::vector<std::size_t> perm_;
    std::vector<Node> nodes_;
};

/// k-th nearest-neighbour max-norm distance for every point (self excluded).
std::vector<double> kth_neighbor_distances(std::span<const double> coords, std::size_t dim, std::size_t k);

}  // namespace aspectstat
