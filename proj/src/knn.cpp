#include <aspectstat/knn.hpp>
#include <aspectstat/error.hpp>

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

namespace aspectstat {

namespace {
constexpr std::size_t kLeafSize = 12;
}

ChebyshevKdTree::ChebyshevKdTree(std::span<const double> coords, std::size_t dim)
    : coords_(coords.begin(), coords.end()), dim_(dim), n_(dim == 0 ? 0 : coords.size() / dim) {
    if (dim_ == 0 || coords.size() % dim_ != 0) {
        throw Error(ErrorCode::DomainError, "kd-tree: coordinate count is not a multiple of the dimension");
    }
    perm_.resize(n_);
    std::iota(perm_.begin(), perm_.end(), std::size_t{0});
    if (n_ > 0) {
        nodes_.reserve(2 * n_ / kLeafSize + 2);
        build(0, n_);
    }
}

int ChebyshevKdTree::build(std::size_t begin, std::size_t end) {
    const int id = static_cast<int>(nodes_.size());
    nodes_.push_back(Node{begin, end});
    if (end - begin <= kLeafSize) return id;

    std::size_t best_dim = 0;
    double best_spread = -1.0;
    for (std::size_t d = 0; d < dim_; ++d) {
        double lo = std::numeric_limits<double>::infinity();
        double hi = -lo;
        for (std::size_t i = begin; i < end; ++i) {
            const double v = point(perm_[i])[d];
            lo = std::min(lo, v);
            hi = std::max(hi, v);
        }
        if (hi - lo > best_spread) {
            best_spread = hi - lo;
            best_dim = d;
        }
    }
    // All points identical: keep as one (large) leaf.
    if (best_spread <= 0.0) return id;

    const std::size_t mid = begin + (end - begin) / 2;
    auto first = perm_.begin() + static_cast<std::ptrdiff_t>(begin);
    std::nth_element(first, perm_.begin() + static_cast<std::ptrdiff_t>(mid),
                     perm_.begin() + static_cast<std::ptrdiff_t>(end), [&](std::size_t a, std::size_t b) {
                         return point(a)[best_dim] < point(b)[best_dim];
                     });
    const double split = point(perm_[mid])[best_dim];
    const int left = build(begin, mid);
    const int right = build(mid, end);
    nodes_[static_cast<std::size_t>(id)].split_dim = best_dim;
    nodes_[static_cast<std::size_t>(id)].split = split;
    nodes_[static_cast<std::size_t>(id)].left = left;
    nodes_[static_cast<std::size_t>(id)].right = right;
    return id;
}

void ChebyshevKdTree::search(int node_id, const double* q, std::size_t self, std::size_t k,
                             std::vector<double>& heap) const {
    const Node& node = nodes_[static_cast<std::size_t>(node_id)];
    if (node.left < 0) {
        for (std::size_t i = node.begin; i < node.end; ++i) {
            const std::size_t idx = perm_[i];
            if (idx == self) continue;
            const double* p = point(idx);
            double dist = 0.0;
            for (std::size_t d = 0; d < dim_; ++d) dist = std::max(dist, std::abs(p[d] - q[d]));
            if (heap.size() < k) {
                heap.push_back(dist);
                std::push_heap(heap.begin(), heap.end());
            } else if (dist < heap.front()) {
                std::pop_heap(heap.begin(), heap.end());
                heap.back() = dist;
                std::push_heap(heap.begin(), heap.end());
            }
        }
        return;
    }
    const double diff = q[node.split_dim] - node.split;
    const int near = diff < 0.0 ? node.left : node.right;
    const int far = diff < 0.0 ? node.right : node.left;
    search(near, q, self, k, heap);
    const double worst = heap.size() < k ? std::numeric_limits<double>::infinity() : heap.front();
    if (std::abs(diff) < worst) search(far, q, self, k, heap);
}

double ChebyshevKdTree::kth_neighbor_distance(std::size_t i, std::size_t k) const {
    if (k < 1 || k >= n_ || i >= n_) throw Error(ErrorCode::DomainError, "kd-tree: k out of range");
    std::vector<double> heap;
    heap.reserve(k);
    search(0, point(i), i, k, heap);
    return heap.front();
}

std::vector<double> kth_neighbor_distances(std::span<const double> coords, std::size_t dim, std::size_t k) {
    ChebyshevKdTree tree(coords, dim);
    std::vector<double> out(tree.size());
    for (std::size_t i = 0; i < tree.size(); ++i) out[i] = tree.kth_neighbor_distance(i, k);
    return out;
}

}  // namespace aspectstat
