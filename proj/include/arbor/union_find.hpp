#pragma once

#include <vector>

#include "arbor/error.hpp"

namespace arbor {

// Union by size without path compression so merges can be undone in O(1);
// backtracking searches checkpoint and roll back instead of copying state.
class UnionFind {
public:
    explicit UnionFind(int n) : parent_(n), size_(n, 1) {
        for (int i = 0; i < n; ++i) parent_[i] = i;
    }

    int find(int x) const {
        while (parent_[x] != x) x = parent_[x];
        return x;
    }

    bool same(int a, int b) const { return find(a) == find(b); }

    // false when a and b were already connected (a merge would close a cycle)
    bool unite(int a, int b) {
        int ra = find(a), rb = find(b);
        if (ra == rb) return false;
        if (size_[ra] < size_[rb]) std::swap(ra, rb);
        parent_[rb] = ra;
        size_[ra] += size_[rb];
        log_.push_back(rb);
        return true;
    }

    int checkpoint() const { return static_cast<int>(log_.size()); }

    void rollback(int mark) {
        while (static_cast<int>(log_.size()) > mark) {
            int rb = log_.back();
            log_.pop_back();
            size_[parent_[rb]] -= size_[rb];
            parent_[rb] = rb;
        }
    }

private:
    std::vector<int> parent_;
    std::vector<int> size_;
    std::vector<int> log_;
};

}  // namespace arbor
