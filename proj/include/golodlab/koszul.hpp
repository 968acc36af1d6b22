#ifndef GOLODLAB_KOSZUL_HPP
#define GOLODLAB_KOSZUL_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "golodlab/linalg.hpp"
#include "golodlab/resolution.hpp"

namespace golod {

// R = S/J with a fixed reduced Groebner basis of J for normal forms.
struct QuotientRing {
    RingPtr ring;
    GroebnerBasis J;  // rank 1, possibly empty (J = 0)
};

QuotientRing make_quotient(const RingPtr& ring, const std::vector<Polynomial>& J_gens);

// Index subsets of {0..n-1} as bitmasks, n <= 31.
using Mask = std::uint32_t;

int mask_size(Mask m);
long mask_weight(Mask m, const RingSpec& ring);
std::vector<int> mask_indices(Mask m);
Mask mask_from_indices(const std::vector<int>& idx, int nvars);

// Element of the exterior complex on e_0..e_{n-1} over R: components keyed
// by index subset, stored in normal form mod J, zeros dropped.
struct KoszulElement {
    const QuotientRing* R = nullptr;
    int level = 0;  // exterior degree; every key has this popcount
    std::map<Mask, Polynomial> comp;

    bool is_zero() const { return comp.empty(); }
};

KoszulElement kz_zero(const QuotientRing& R, int level);
// f * e_{i1} ^ ... ^ e_{il} for an ascending index list.
KoszulElement kz_term(const QuotientRing& R, const std::vector<int>& idx, Polynomial f);
KoszulElement kz_add(const KoszulElement& a, const KoszulElement& b);
KoszulElement kz_sub(const KoszulElement& a, const KoszulElement& b);
KoszulElement kz_scale(const KoszulElement& a, const Rational& c);
KoszulElement kz_mul_poly(const KoszulElement& a, const Polynomial& f);
bool kz_equal(const KoszulElement& a, const KoszulElement& b);

// Internal degree when homogeneous: deg(component) + weight of its subset,
// constant over components. Zero elements are homogeneous of every degree.
std::optional<long> kz_degree(const KoszulElement& z);

// d(f e_{i1}^...^e_{il}) = sum_t (-1)^{t+1} x_{it} f e_{...without it...}.
KoszulElement differential(const KoszulElement& z);

// (-1)^{l+1} z: the sign twist entering the Leibniz rule
// d(z1 ^ z2) = d(z1) ^ z2 - bar(z1) ^ d(z2).
KoszulElement bar(const KoszulElement& z);

KoszulElement wedge(const KoszulElement& a, const KoszulElement& b);

// K-basis of R_d: standard monomials (not divisible by any J lead), listed
// in descending term order. The same list ordering fixes all matrices below.
std::vector<Monomial> standard_monomials(const QuotientRing& R, long d);
std::vector<Monomial> monomials_of_degree(const RingSpec& ring, long d);

// Basis bookkeeping for the degree-d slice of level-l elements: pairs
// (mask, standard monomial of degree d - weight(mask)), masks ascending,
// monomials in descending term order within a mask.
struct KoszulSlice {
    const QuotientRing* R;
    int level;
    long degree;
    std::vector<std::pair<Mask, Monomial>> basis;

    int dim() const { return static_cast<int>(basis.size()); }
    int index_of(Mask m, const Monomial& mono) const;  // -1 if absent
};

KoszulSlice koszul_slice(const QuotientRing& R, int level, long degree);
SparseVec kz_coords(const KoszulElement& z, const KoszulSlice& slice);
KoszulElement kz_from_coords(const SparseVec& v, const KoszulSlice& slice);

struct HomologyBasis {
    int level = 0;
    // Per internal degree: cycle representatives whose classes are a basis.
    std::map<long, std::vector<KoszulElement>> reps;

    int dim(long d) const;
    int total_dim() const;
};

// Homology of the exterior complex at the given level, degree by degree.
// The resolution pins down which internal degrees can carry homology; the
// optional window scans every degree up to the given bound instead, as a
// cross-check that nothing lives outside the predicted degrees.
HomologyBasis homology_basis(int level, const QuotientRing& R, const Resolution& res,
                             std::optional<long> full_scan_limit = std::nullopt);

struct BoundaryResult {
    bool is_boundary = false;
    std::optional<KoszulElement> witness;  // w with d(w) = z when solvable
    int slice_rank = 0;                    // rank of d restricted to the slice above
};

// Decides solvability of d(w) = z in the internal degree of z. Rejects
// non-cycles up front.
BoundaryResult is_boundary(const KoszulElement& z);

// Every component, lifted to S, lies in I^m + J. With J a power of I this
// is containment of z in I^m K(R).
bool membership_in_power(const KoszulElement& z, const std::vector<Polynomial>& I_gens, int m);

}  // namespace golod

#endif
