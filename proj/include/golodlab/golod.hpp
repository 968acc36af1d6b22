#ifndef GOLODLAB_GOLOD_HPP
#define GOLODLAB_GOLOD_HPP

#include <optional>
#include <vector>

#include "golodlab/series.hpp"

namespace golod {

// det of the l x l matrix with (s,t) entry d(entries[s])/d(x_{vars[t]}).
Polynomial jacobian_determinant(const std::vector<Polynomial>& entries,
                                const std::vector<int>& vars);

struct JacobianSummand {
    Polynomial jac;       // determinant with a single factor in the last slot
    Polynomial cofactor;  // product of the remaining factors
};

// Expands the determinant whose last entry is the product of the given
// factors, one summand per factor: sum of jac*cofactor over the list equals
// the determinant taken on the multiplied-out last entry.
std::vector<JacobianSummand> jacobian_product_rule_expand(std::vector<Polynomial> head,
                                                          const std::vector<Polynomial>& factors,
                                                          const std::vector<int>& vars);

// Level-l cycle attached to basis row j1 of F_l: for each variable subset
// {i_1<...<i_l} and each chain (j_2..j_l) through the resolution matrices,
// the term  a_{i1}...a_{il} * c_chain * d(alpha^{(l)}[j1][j2], ...,
// alpha^{(1)}[jl][0]) / d(x_{i1}..x_{il}) * e_{i1}^...^e_{il}.  The chain
// coefficients c are solved from d(z) = 0.
struct JacobianCycle {
    int level = 0;
    int j1 = 0;                            // 0-based
    std::vector<std::vector<int>> chains;  // (j2..jl) tuples, lexicographic
    std::vector<Rational> coeffs;          // one per chain
    KoszulElement z;
};

// All chain tuples (j2..jl) for the given level, lexicographic.
std::vector<std::vector<int>> resolution_chains(const Resolution& res, int level);

// The cycle for one row, using the echelon-basis solution of d(z) = 0 with
// the earliest pivot pattern whose cycle is nonzero. Empty optional when the
// solution space contains no nonzero cycle.
std::optional<JacobianCycle> jacobian_chain_cycle(const Resolution& res, int level, int j1,
                                                  const QuotientRing& R);

// One representative per basis row of F_level, classes jointly independent
// in homology. Falls back to the plain homology basis when the Jacobian
// construction cannot reach independence.
struct LevelRepresentatives {
    int level = 0;
    bool fallback = false;
    std::vector<KoszulElement> reps;          // size = rank of F_level
    std::vector<JacobianCycle> cycles;        // parallel to reps unless fallback
};

LevelRepresentatives level_representatives(const Resolution& res, int level,
                                           const QuotientRing& R, const HomologyBasis& hom);

// One homology class representative in the certificate, with enough witness
// data for an external re-check: the membership witness expresses each
// component as an S-combination of the stored degree-(k-1) products mod J.
struct CertClass {
    int level = 0;
    int index = 0;  // row of F_level / position in the level's basis order
    long degree = 0;
    bool fallback = false;
    std::vector<std::vector<int>> chains;
    std::vector<Rational> chain_coeffs;
    KoszulElement gamma;
    std::map<Mask, std::vector<Polynomial>> membership_witness;
};

struct PairCheck {
    int a = 0, b = 0;  // indices into classes, a <= b
    bool zero = false;
    bool vacuous = false;  // combined level exceeds the variable count
};

struct GolodCertificate {
    RingPtr ring;
    std::vector<Polynomial> I_gens;
    int k = 2;
    int truncation = 5;

    std::vector<PowerProduct> J_gens;        // minimal generators of I^k, with tuples
    GroebnerBasis J_gb;                      // frozen basis all normal forms use
    // Owns the quotient every stored exterior element points into, keeping
    // those elements valid for as long as the certificate lives.
    std::shared_ptr<const QuotientRing> quotient;
    std::vector<PowerProduct> witness_products;  // all (k-1)-fold products of I

    BettiTable betti;
    std::map<std::pair<int, long>, int> homology_dims;  // from the complex itself

    std::vector<CertClass> classes;
    std::vector<PairCheck> pairs;

    bool dims_ok = false;        // homology dims match Betti numbers
    bool class_basis_ok = false; // classes independent, count matches total dim
    bool membership_ok = false;  // every class inside the (k-1) power
    bool products_ok = false;    // every pairwise wedge literally zero
    bool higher_ops_trivial = false;  // with all products zero, set to true
    bool fallback_used = false;

    SeriesTruncation poincare;
    SeriesTruncation serre;
    bool series_ok = false;

    bool pass = false;
};

GolodCertificate golod_certificate(const RingPtr& ring, const std::vector<Polynomial>& I_gens,
                                   int k, int N, WorkBudget* budget = nullptr);

struct TrivialMultResult {
    bool trivial = true;
    // Populated on failure: the first pair whose product is not a boundary.
    std::optional<KoszulElement> left, right, product;
};

TrivialMultResult trivial_multiplication_check(const QuotientRing& R, const Resolution& res);

}  // namespace golod

#endif
