#ifndef GOLODLAB_SERIES_HPP
#define GOLODLAB_SERIES_HPP

#include <optional>
#include <string>
#include <vector>

#include "golodlab/koszul.hpp"

namespace golod {

// Power series truncation: coefficients of t^0 .. t^N.
struct SeriesTruncation {
    std::string label;
    std::vector<Int> coeffs;
    bool complete = true;  // false when a work budget cut the computation short

    int order() const { return static_cast<int>(coeffs.size()) - 1; }
};

// Truncated quotient of integer polynomials num/den, den constant term 1.
std::vector<Int> series_divide(const std::vector<Int>& num, const std::vector<Int>& den, int N);

// (1+t)^n / (1 - sum_l dim H_l t^{l+1}) to order N; homology dimensions read
// off the resolution's Betti numbers.
SeriesTruncation serre_bound_series(const QuotientRing& R, const Resolution& res, int N);

// dim Tor_i over R = S/J of the residue field with itself, i = 0..N, by
// iterated minimal syzygies over R (computed through S-syzygies of lifted
// generators augmented with J-multiples of the basis). A budget abort yields
// the completed prefix with complete = false.
SeriesTruncation poincare_truncation(const QuotientRing& R, int N, WorkBudget* budget = nullptr);

struct SeriesComparison {
    bool equal = true;
    int first_difference = -1;  // index of the first differing coefficient
};

SeriesComparison compare_series(const SeriesTruncation& a, const SeriesTruncation& b);

}  // namespace golod

#endif
