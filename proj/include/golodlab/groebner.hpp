#ifndef GOLODLAB_GROEBNER_HPP
#define GOLODLAB_GROEBNER_HPP

#include <optional>
#include <vector>

#include "golodlab/polynomial.hpp"

namespace golod {

// Element of a free module R^r. Position-over-term order: component 0
// dominates, ties within a component by the ring's monomial order.
struct ModuleVector {
    std::vector<Polynomial> comp;

    int rank() const { return static_cast<int>(comp.size()); }
    bool is_zero() const;
    bool operator==(const ModuleVector& o) const { return comp == o.comp; }
};

ModuleVector mv_zero(const RingPtr& ring, int rank);
ModuleVector mv_unit(const RingPtr& ring, int rank, int pos);
ModuleVector mv_add(const ModuleVector& a, const ModuleVector& b);
ModuleVector mv_sub(const ModuleVector& a, const ModuleVector& b);
// v * c*m
ModuleVector mv_mul_term(const ModuleVector& v, const Monomial& m, const Rational& c);
ModuleVector mv_mul_poly(const ModuleVector& v, const Polynomial& f);

struct LeadTerm {
    int pos;
    Monomial mono;
    Rational coef;
};

LeadTerm mv_lead(const ModuleVector& v);  // requires v nonzero
int lead_cmp(const LeadTerm& a, const LeadTerm& b, const RingSpec& ring);

// Homogeneity of v as a graded module element with basis degree shifts:
// nonzero component j must be homogeneous with deg + shifts[j] constant.
std::optional<long> module_degree(const ModuleVector& v, const std::vector<long>& shifts);

struct GroebnerBasis {
    RingPtr ring;
    int rank = 1;
    std::vector<ModuleVector> elems;  // reduced: monic, tails irreducible, sorted by lead

    bool empty() const { return elems.empty(); }
};

// Counts S-pair reductions; shared across calls when threaded through a
// larger computation. A non-negative limit turns the counter into a cap.
struct WorkBudget {
    long limit = -1;
    long used = 0;

    bool exhausted() const { return limit >= 0 && used > limit; }
    void spend() { ++used; }
};

struct BudgetExhausted : Error {
    BudgetExhausted() : Error("work budget exhausted") {}
};

GroebnerBasis groebner_basis(const RingPtr& ring, const std::vector<Polynomial>& gens,
                             WorkBudget* budget = nullptr);
GroebnerBasis groebner_basis(const RingPtr& ring, int rank,
                             const std::vector<ModuleVector>& gens,
                             WorkBudget* budget = nullptr);

// Remainder of division by a reduced basis: no term of the result is
// divisible by any leading term (componentwise), f - result in the span.
Polynomial normal_form(const Polynomial& f, const GroebnerBasis& gb);
ModuleVector normal_form(const ModuleVector& v, const GroebnerBasis& gb);
// Also records how the subtracted part decomposes over gb.elems:
// v = sum quotient[i] * gb.elems[i] + result.
ModuleVector normal_form(const ModuleVector& v, const GroebnerBasis& gb,
                         std::vector<Polynomial>& quotient);

// Generators of {(c_1..c_m) : sum c_t f_t = 0}. Raw output: one vector per
// surviving S-pair of the tagged elimination run, unpruned.
std::vector<ModuleVector> syzygy_schreyer(const RingPtr& ring, int rank,
                                          const std::vector<ModuleVector>& f,
                                          WorkBudget* budget = nullptr);

// Same module, pruned: no returned vector lies in the span of the others.
std::vector<ModuleVector> syzygy_basis(const RingPtr& ring, int rank,
                                       const std::vector<ModuleVector>& f);

// Engine entry for pre-extended inputs of rank frank + tagrank: component
// blocks [0, frank) reduce, the rest is coefficient bookkeeping. Returns the
// tag blocks of all vectors whose reducing block died, in discovery order.
// Inputs with an empty tag block contribute relations without bookkeeping.
std::vector<ModuleVector> syzygy_schreyer_extended(const RingPtr& ring, int frank, int tagrank,
                                                   const std::vector<ModuleVector>& ext,
                                                   WorkBudget* budget = nullptr);

bool module_membership(const ModuleVector& v, const GroebnerBasis& gb);

// Coefficients a with v = sum a_t f_t, when v lies in the span.
std::optional<std::vector<Polynomial>> express_in_module(const ModuleVector& v,
                                                         const RingPtr& ring, int rank,
                                                         const std::vector<ModuleVector>& f);

// k-fold product of generators, tagged with its nondecreasing index tuple.
struct PowerProduct {
    std::vector<int> tuple;
    Polynomial poly;
};

// All products g_{j1}...g_{jk}, j1 <= ... <= jk, in lexicographic tuple order.
std::vector<PowerProduct> power_products(const std::vector<Polynomial>& gens, int k);

// Minimal generating subset of the k-fold products: greedy by increasing
// degree (ties by tuple), keeping a product only if it is outside the ideal
// generated by the kept others plus all products of strictly smaller degree.
std::vector<PowerProduct> ideal_power(const std::vector<Polynomial>& gens, int k);

}  // namespace golod

#endif
