#ifndef GOLODLAB_LINALG_HPP
#define GOLODLAB_LINALG_HPP

#include <optional>
#include <utility>
#include <vector>

#include "golodlab/base.hpp"

namespace golod {

// Sparse rational vector: (index, coefficient) pairs, indices strictly
// increasing, coefficients nonzero.
using SparseVec = std::vector<std::pair<int, Rational>>;

SparseVec sv_scale(const SparseVec& v, const Rational& c);
// a + c*b
SparseVec sv_axpy(const SparseVec& a, const Rational& c, const SparseVec& b);
const Rational* sv_get(const SparseVec& v, int idx);
bool sv_is_zero(const SparseVec& v);

// Incrementally built row span in echelon form: each row is monic with a
// distinct pivot (its smallest index). No back-substitution between rows;
// only membership and dimension queries are supported.
class RowSpan {
  public:
    // Reduces v against the current rows; returns the residue.
    SparseVec reduce(SparseVec v) const;
    // Adds v to the span. Returns true when v enlarged it.
    bool insert(SparseVec v);
    bool contains(const SparseVec& v) const { return sv_is_zero(reduce(v)); }
    int dim() const { return static_cast<int>(rows_.size()); }

  private:
    std::vector<SparseVec> rows_;  // sorted by pivot index
};

// Column elimination over Q with combination bookkeeping. Feed columns one by
// one; each reduced column remembers how it was formed from the inputs, which
// yields kernel vectors (when a column dies) and expression witnesses (when a
// target lies in the span).
class Eliminator {
  public:
    // Returns the kernel combination when v reduced to zero, otherwise
    // nullopt (v joined the basis). Combination indices refer to insertion
    // order of add_column calls.
    std::optional<SparseVec> add_column(SparseVec v);

    // Expresses target in the span of the added columns. Returns the
    // combination, or nullopt if target is outside the span.
    std::optional<SparseVec> express(SparseVec target) const;

    int rank() const { return static_cast<int>(basis_.size()); }
    int columns_seen() const { return ncols_; }

    // All kernel vectors found so far, in discovery order.
    const std::vector<SparseVec>& kernel() const { return kernel_; }

  private:
    struct TaggedCol {
        SparseVec col;  // monic, distinct pivot (smallest index)
        SparseVec tag;  // combination of original columns producing col
    };
    std::vector<TaggedCol> basis_;
    std::vector<SparseVec> kernel_;
    int ncols_ = 0;
};

}  // namespace golod

#endif
