#include "golodlab/linalg.hpp"

#include <algorithm>

namespace golod {

SparseVec sv_scale(const SparseVec& v, const Rational& c) {
    if (c == 0) return {};
    SparseVec r;
    r.reserve(v.size());
    for (const auto& [i, x] : v) r.emplace_back(i, x * c);
    return r;
}

SparseVec sv_axpy(const SparseVec& a, const Rational& c, const SparseVec& b) {
    if (c == 0) return a;
    SparseVec r;
    r.reserve(a.size() + b.size());
    size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i].first < b[j].first) {
            r.push_back(a[i++]);
        } else if (a[i].first > b[j].first) {
            r.emplace_back(b[j].first, c * b[j].second);
            ++j;
        } else {
            Rational s = a[i].second + c * b[j].second;
            if (s != 0) r.emplace_back(a[i].first, std::move(s));
            ++i, ++j;
        }
    }
    for (; i < a.size(); ++i) r.push_back(a[i]);
    for (; j < b.size(); ++j) r.emplace_back(b[j].first, c * b[j].second);
    return r;
}

const Rational* sv_get(const SparseVec& v, int idx) {
    auto it = std::lower_bound(v.begin(), v.end(), idx,
                               [](const auto& p, int k) { return p.first < k; });
    if (it != v.end() && it->first == idx) return &it->second;
    return nullptr;
}

bool sv_is_zero(const SparseVec& v) { return v.empty(); }

SparseVec RowSpan::reduce(SparseVec v) const {
    for (const auto& row : rows_) {
        if (v.empty()) break;
        int pivot = row.front().first;
        if (v.front().first > pivot) continue;
        const Rational* c = sv_get(v, pivot);
        if (c) v = sv_axpy(v, -*c, row);  // row is monic at its pivot
    }
    return v;
}

bool RowSpan::insert(SparseVec v) {
    v = reduce(std::move(v));
    if (v.empty()) return false;
    SparseVec monic = sv_scale(v, 1 / v.front().second);
    auto at = std::lower_bound(rows_.begin(), rows_.end(), monic,
                               [](const SparseVec& a, const SparseVec& b) {
                                   return a.front().first < b.front().first;
                               });
    rows_.insert(at, std::move(monic));
    return true;
}

std::optional<SparseVec> Eliminator::add_column(SparseVec v) {
    SparseVec tag{{ncols_, Rational(1)}};
    ++ncols_;
    for (const auto& bc : basis_) {
        if (v.empty()) break;
        const Rational* c = sv_get(v, bc.col.front().first);
        if (c) {
            Rational mc = -*c;
            v = sv_axpy(v, mc, bc.col);
            tag = sv_axpy(tag, mc, bc.tag);
        }
    }
    if (v.empty()) {
        kernel_.push_back(tag);
        return tag;
    }
    Rational inv = 1 / v.front().second;
    basis_.push_back({sv_scale(v, inv), sv_scale(tag, inv)});
    std::sort(basis_.begin(), basis_.end(), [](const TaggedCol& a, const TaggedCol& b) {
        return a.col.front().first < b.col.front().first;
    });
    return std::nullopt;
}

std::optional<SparseVec> Eliminator::express(SparseVec target) const {
    SparseVec tag;
    for (const auto& bc : basis_) {
        if (target.empty()) break;
        const Rational* c = sv_get(target, bc.col.front().first);
        if (c) {
            Rational mc = -*c;
            target = sv_axpy(target, mc, bc.col);
            tag = sv_axpy(tag, mc, bc.tag);
        }
    }
    if (!target.empty()) return std::nullopt;
    return sv_scale(tag, Rational(-1));
}

}  // namespace golod
