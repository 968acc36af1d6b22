#ifndef GOLODLAB_POLYNOMIAL_HPP
#define GOLODLAB_POLYNOMIAL_HPP

#include <iosfwd>
#include <optional>
#include <vector>

#include "golodlab/ring.hpp"

namespace golod {

struct Term {
    Monomial mono;
    Rational coef;
};

// Sparse multivariate polynomial over Q. Terms are kept canonical: no zero
// coefficients, sorted so iteration yields the leading term first (weighted
// degrevlex of the owning ring).
class Polynomial {
  public:
    Polynomial() = default;  // zero with no ring; adopts a ring on first mix
    explicit Polynomial(RingPtr ring) : ring_(std::move(ring)) {}

    static Polynomial constant(RingPtr ring, Rational c);
    static Polynomial variable(RingPtr ring, int i);
    static Polynomial term(RingPtr ring, Monomial m, Rational c);
    static Polynomial from_terms(RingPtr ring, std::vector<Term> terms);

    const RingPtr& ring() const { return ring_; }
    bool is_zero() const { return terms_.empty(); }
    const std::vector<Term>& terms() const { return terms_; }
    const Term& leading() const;

    Polynomial operator-() const;
    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(const Rational& c, const Polynomial& f);

    // f * c*m without building a one-term polynomial first.
    Polynomial mul_term(const Monomial& m, const Rational& c) const;
    Polynomial pow(int k) const;

    bool operator==(const Polynomial& o) const;
    bool operator!=(const Polynomial& o) const { return !(*this == o); }

  private:
    RingPtr ring_;
    std::vector<Term> terms_;

    void normalize(std::vector<Term> raw);
    friend Polynomial partial_derivative(const Polynomial& f, int i);
};

// Formal partial derivative with respect to x_i (0-based index).
Polynomial partial_derivative(const Polynomial& f, int i);

struct Homogeneity {
    enum Kind { Zero, Homogeneous, Mixed } kind = Zero;
    long degree = 0;  // meaningful for Homogeneous

    bool is_homogeneous() const { return kind != Mixed; }
};

Homogeneity homogeneity(const Polynomial& f);

// Sum a_i x_i df/dx_i; equals deg(f) * f for homogeneous f (weighted Euler
// identity). Throws InputError if f is not homogeneous.
Polynomial euler_apply(const Polynomial& f);

std::string to_string(const Polynomial& f);
std::ostream& operator<<(std::ostream& os, const Polynomial& f);

// Text grammar: rational literals p or p/q, ring variable names, ^ with
// non-negative integer exponents, * for products, + and -, parentheses.
// Whitespace insignificant; juxtaposition is not multiplication.
struct ParseError : InputError {
    int line, column;
    ParseError(const std::string& msg, int line_, int col_)
        : InputError(msg + " (line " + std::to_string(line_) + ", column " +
                     std::to_string(col_) + ")"),
          line(line_),
          column(col_) {}
};

Polynomial parse_polynomial(const std::string& text, const RingPtr& ring);

}  // namespace golod

#endif
