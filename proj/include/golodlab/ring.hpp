#ifndef GOLODLAB_RING_HPP
#define GOLODLAB_RING_HPP

#include <memory>
#include <numeric>
#include <string>
#include <vector>

#include "golodlab/base.hpp"

namespace golod {

// Ambient weighted polynomial ring K[x_1..x_n], deg x_i = weights[i] > 0.
class RingSpec {
  public:
    RingSpec(std::vector<long> weights, std::vector<std::string> names = {});

    int nvars() const { return static_cast<int>(weights_.size()); }
    long weight(int i) const { return weights_[static_cast<size_t>(i)]; }
    const std::vector<long>& weights() const { return weights_; }
    const std::string& name(int i) const { return names_[static_cast<size_t>(i)]; }
    const std::vector<std::string>& names() const { return names_; }
    int var_index(const std::string& name) const;  // -1 if unknown

  private:
    std::vector<long> weights_;
    std::vector<std::string> names_;
};

using RingPtr = std::shared_ptr<const RingSpec>;

RingPtr make_ring(std::vector<long> weights, std::vector<std::string> names = {});

// Exponent vector of length nvars.
struct Monomial {
    std::vector<int> exp;

    bool operator==(const Monomial& o) const { return exp == o.exp; }
    bool operator!=(const Monomial& o) const { return exp != o.exp; }
    bool is_one() const {
        for (int e : exp)
            if (e) return false;
        return true;
    }
};

Monomial mono_one(int nvars);
Monomial mono_var(int nvars, int i);

long weighted_degree(const Monomial& m, const RingSpec& ring);
long total_degree(const Monomial& m);

Monomial mono_mul(const Monomial& a, const Monomial& b);
bool mono_divides(const Monomial& a, const Monomial& b);  // a | b
Monomial mono_div(const Monomial& a, const Monomial& b);  // a / b, requires b | a
Monomial mono_lcm(const Monomial& a, const Monomial& b);
bool mono_coprime(const Monomial& a, const Monomial& b);

// Weighted degree first, reverse-lexicographic tie-break. Returns <0, 0, >0;
// positive means a comes later in the order (a > b).
int mono_cmp(const Monomial& a, const Monomial& b, const RingSpec& ring);

}  // namespace golod

#endif
