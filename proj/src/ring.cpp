#include "golodlab/ring.hpp"

#include <algorithm>
#include <set>

namespace golod {

namespace {

std::vector<std::string> default_names(size_t n) {
    // x,y,z for small rings, x1..xn beyond
    static const char* short_names[] = {"x", "y", "z"};
    std::vector<std::string> names;
    names.reserve(n);
    if (n <= 3) {
        for (size_t i = 0; i < n; ++i) names.emplace_back(short_names[i]);
    } else {
        for (size_t i = 0; i < n; ++i) names.push_back("x" + std::to_string(i + 1));
    }
    return names;
}

}  // namespace

RingSpec::RingSpec(std::vector<long> weights, std::vector<std::string> names)
    : weights_(std::move(weights)), names_(std::move(names)) {
    if (weights_.empty()) throw InputError("ring needs at least one variable");
    for (long w : weights_)
        if (w <= 0) throw InputError("variable weights must be positive");
    if (names_.empty()) names_ = default_names(weights_.size());
    if (names_.size() != weights_.size())
        throw InputError("variable name count does not match weight count");
    std::set<std::string> seen;
    for (const auto& nm : names_) {
        if (nm.empty()) throw InputError("empty variable name");
        if (!seen.insert(nm).second) throw InputError("duplicate variable name: " + nm);
    }
}

int RingSpec::var_index(const std::string& name) const {
    for (size_t i = 0; i < names_.size(); ++i)
        if (names_[i] == name) return static_cast<int>(i);
    return -1;
}

RingPtr make_ring(std::vector<long> weights, std::vector<std::string> names) {
    return std::make_shared<const RingSpec>(std::move(weights), std::move(names));
}

Monomial mono_one(int nvars) { return Monomial{std::vector<int>(static_cast<size_t>(nvars), 0)}; }

Monomial mono_var(int nvars, int i) {
    Monomial m = mono_one(nvars);
    m.exp[static_cast<size_t>(i)] = 1;
    return m;
}

long weighted_degree(const Monomial& m, const RingSpec& ring) {
    if (static_cast<int>(m.exp.size()) != ring.nvars())
        throw Error("monomial/ring dimension mismatch");
    long d = 0;
    for (int i = 0; i < ring.nvars(); ++i) d += m.exp[static_cast<size_t>(i)] * ring.weight(i);
    return d;
}

long total_degree(const Monomial& m) {
    long d = 0;
    for (int e : m.exp) d += e;
    return d;
}

Monomial mono_mul(const Monomial& a, const Monomial& b) {
    Monomial r = a;
    for (size_t i = 0; i < r.exp.size(); ++i) r.exp[i] += b.exp[i];
    return r;
}

bool mono_divides(const Monomial& a, const Monomial& b) {
    for (size_t i = 0; i < a.exp.size(); ++i)
        if (a.exp[i] > b.exp[i]) return false;
    return true;
}

Monomial mono_div(const Monomial& a, const Monomial& b) {
    Monomial r = a;
    for (size_t i = 0; i < r.exp.size(); ++i) {
        r.exp[i] -= b.exp[i];
        if (r.exp[i] < 0) throw Error("monomial division with remainder");
    }
    return r;
}

Monomial mono_lcm(const Monomial& a, const Monomial& b) {
    Monomial r = a;
    for (size_t i = 0; i < r.exp.size(); ++i) r.exp[i] = std::max(a.exp[i], b.exp[i]);
    return r;
}

bool mono_coprime(const Monomial& a, const Monomial& b) {
    for (size_t i = 0; i < a.exp.size(); ++i)
        if (a.exp[i] > 0 && b.exp[i] > 0) return false;
    return true;
}

int mono_cmp(const Monomial& a, const Monomial& b, const RingSpec& ring) {
    long da = weighted_degree(a, ring), db = weighted_degree(b, ring);
    if (da != db) return da < db ? -1 : 1;
    // reverse lex: the last variable where the exponents differ decides;
    // the one with the smaller exponent there is the larger monomial
    for (size_t i = a.exp.size(); i-- > 0;) {
        if (a.exp[i] != b.exp[i]) return a.exp[i] > b.exp[i] ? -1 : 1;
    }
    return 0;
}

}  // namespace golod
