#ifndef GOLODLAB_RESOLUTION_HPP
#define GOLODLAB_RESOLUTION_HPP

#include <map>
#include <string>
#include <vector>

#include "golodlab/groebner.hpp"

namespace golod {

// Graded free module: rank many basis elements with weighted-degree shifts.
struct FreeModule {
    std::vector<long> shifts;

    int rank() const { return static_cast<int>(shifts.size()); }
};

// Map F_i -> F_{i-1}, stored row-wise: row j lists the coordinates of the
// image of the j-th basis element of the source.
struct ChainMap {
    std::vector<ModuleVector> rows;  // size = source rank; each of target rank

    const Polynomial& entry(int j, int k) const { return rows[static_cast<size_t>(j)].comp[static_cast<size_t>(k)]; }
};

// Chain F_0 <- F_1 <- ... <- F_p of graded free modules over the ambient
// polynomial ring, resolving the cyclic quotient by the stored ideal.
struct Resolution {
    RingPtr ring;
    std::vector<Polynomial> ideal_gens;  // minimal generators, fixed order
    std::vector<FreeModule> modules;     // F_0 .. F_p
    std::vector<ChainMap> maps;          // maps[i] : F_{i+1} -> F_i

    int length() const { return static_cast<int>(modules.size()) - 1; }
    int rank(int i) const { return modules[static_cast<size_t>(i)].rank(); }
    long shift(int i, int j) const { return modules[static_cast<size_t>(i)].shifts[static_cast<size_t>(j)]; }
    // alpha^{(i)}: matrix of maps[i-1], i.e. F_i -> F_{i-1}, i >= 1.
    const ChainMap& map(int i) const { return maps[static_cast<size_t>(i - 1)]; }
};

// Minimal graded free resolution of S/J. Iterated syzygies, then unit
// entries cancelled by row/column operations until all entries have positive
// degree; bases sorted by shift ascending. Rejects the unit ideal and
// non-homogeneous generators.
Resolution minimal_free_resolution(const RingPtr& ring, const std::vector<Polynomial>& J);

// beta[{i, d}] = number of degree-d basis elements of F_i (zero entries absent).
using BettiTable = std::map<std::pair<int, long>, int>;
BettiTable betti_table(const Resolution& res);

struct ResolutionCheck {
    bool pass = true;
    std::vector<std::string> failures;
};

// Defense-in-depth: composition zero, no unit entries, graded compatibility
// of every entry, exactness at each stage (syzygy containment both ways),
// length at most the variable count.
ResolutionCheck verify_resolution(const Resolution& res);

}  // namespace golod

#endif
