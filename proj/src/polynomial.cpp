#include "golodlab/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <ostream>
#include <sstream>

namespace golod {

namespace {

const RingPtr& common_ring(const RingPtr& a, const RingPtr& b) {
    if (!a) return b;
    if (!b) return a;
    if (a != b && a->weights() != b->weights())
        throw Error("mixing polynomials from different rings");
    return a;
}

}  // namespace

Polynomial Polynomial::constant(RingPtr ring, Rational c) {
    Polynomial f(std::move(ring));
    if (c != 0) f.terms_.push_back({mono_one(f.ring_->nvars()), std::move(c)});
    return f;
}

Polynomial Polynomial::variable(RingPtr ring, int i) {
    if (i < 0 || i >= ring->nvars()) throw Error("variable index out of range");
    Polynomial f(std::move(ring));
    f.terms_.push_back({mono_var(f.ring_->nvars(), i), Rational(1)});
    return f;
}

Polynomial Polynomial::term(RingPtr ring, Monomial m, Rational c) {
    Polynomial f(std::move(ring));
    if (static_cast<int>(m.exp.size()) != f.ring_->nvars())
        throw Error("monomial/ring dimension mismatch");
    if (c != 0) f.terms_.push_back({std::move(m), std::move(c)});
    return f;
}

Polynomial Polynomial::from_terms(RingPtr ring, std::vector<Term> terms) {
    Polynomial f(std::move(ring));
    f.normalize(std::move(terms));
    return f;
}

void Polynomial::normalize(std::vector<Term> raw) {
    const RingSpec& R = *ring_;
    std::sort(raw.begin(), raw.end(), [&R](const Term& a, const Term& b) {
        return mono_cmp(a.mono, b.mono, R) > 0;  // descending: leading first
    });
    terms_.clear();
    for (auto& t : raw) {
        if (t.coef == 0) continue;
        if (!terms_.empty() && terms_.back().mono == t.mono) {
            terms_.back().coef += t.coef;
            if (terms_.back().coef == 0) terms_.pop_back();
        } else {
            terms_.push_back(std::move(t));
        }
    }
}

const Term& Polynomial::leading() const {
    if (terms_.empty()) throw Error("leading term of zero polynomial");
    return terms_.front();
}

Polynomial Polynomial::operator-() const {
    Polynomial r = *this;
    for (auto& t : r.terms_) t.coef = -t.coef;
    return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
    if (o.terms_.empty()) return *this;
    RingPtr ring = common_ring(ring_, o.ring_);
    const RingSpec& R = *ring;
    std::vector<Term> merged;
    merged.reserve(terms_.size() + o.terms_.size());
    size_t i = 0, j = 0;
    while (i < terms_.size() && j < o.terms_.size()) {
        int c = mono_cmp(terms_[i].mono, o.terms_[j].mono, R);
        if (c > 0) {
            merged.push_back(std::move(terms_[i++]));
        } else if (c < 0) {
            merged.push_back(o.terms_[j++]);
        } else {
            Rational s = terms_[i].coef + o.terms_[j].coef;
            if (s != 0) merged.push_back({terms_[i].mono, std::move(s)});
            ++i, ++j;
        }
    }
    for (; i < terms_.size(); ++i) merged.push_back(std::move(terms_[i]));
    for (; j < o.terms_.size(); ++j) merged.push_back(o.terms_[j]);
    ring_ = ring;
    terms_ = std::move(merged);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) { return *this += -o; }

Polynomial Polynomial::mul_term(const Monomial& m, const Rational& c) const {
    Polynomial r(ring_);
    if (c == 0) return r;
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) r.terms_.push_back({mono_mul(t.mono, m), t.coef * c});
    return r;  // multiplication by a monomial preserves the term order
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    RingPtr ring = common_ring(a.ring_, b.ring_);
    Polynomial r(ring);
    if (a.terms_.empty() || b.terms_.empty()) return r;
    std::vector<Term> cross;
    cross.reserve(a.terms_.size() * b.terms_.size());
    for (const auto& s : a.terms_)
        for (const auto& t : b.terms_)
            cross.push_back({mono_mul(s.mono, t.mono), s.coef * t.coef});
    r.normalize(std::move(cross));
    return r;
}

Polynomial operator*(const Rational& c, const Polynomial& f) {
    Polynomial r(f.ring());
    if (c == 0) return r;
    return f.mul_term(mono_one(f.ring() ? f.ring()->nvars() : 0), c);
}

Polynomial Polynomial::pow(int k) const {
    if (k < 0) throw Error("negative polynomial power");
    if (!ring_) throw Error("pow on ringless zero polynomial");
    Polynomial r = Polynomial::constant(ring_, 1);
    for (int i = 0; i < k; ++i) r = r * *this;
    return r;
}

bool Polynomial::operator==(const Polynomial& o) const {
    if (terms_.size() != o.terms_.size()) return false;
    for (size_t i = 0; i < terms_.size(); ++i)
        if (terms_[i].mono != o.terms_[i].mono || terms_[i].coef != o.terms_[i].coef)
            return false;
    return true;
}

Polynomial partial_derivative(const Polynomial& f, int i) {
    if (!f.ring()) return f;
    if (i < 0 || i >= f.ring()->nvars()) throw InputError("derivative index out of range");
    Polynomial r(f.ring());
    for (const auto& t : f.terms()) {
        int e = t.mono.exp[static_cast<size_t>(i)];
        if (e == 0) continue;
        Term d{t.mono, t.coef * e};
        d.mono.exp[static_cast<size_t>(i)] = e - 1;
        r.terms_.push_back(std::move(d));
    }
    // dropping one exponent of a fixed variable keeps descending order
    return r;
}

Homogeneity homogeneity(const Polynomial& f) {
    if (f.is_zero()) return {Homogeneity::Zero, 0};
    const RingSpec& R = *f.ring();
    long d = weighted_degree(f.terms().front().mono, R);
    for (const auto& t : f.terms())
        if (weighted_degree(t.mono, R) != d) return {Homogeneity::Mixed, 0};
    return {Homogeneity::Homogeneous, d};
}

Polynomial euler_apply(const Polynomial& f) {
    Homogeneity h = homogeneity(f);
    if (!h.is_homogeneous()) throw InputError("euler_apply requires a homogeneous polynomial");
    if (h.kind == Homogeneity::Zero) return f;
    Polynomial sum(f.ring());
    for (int i = 0; i < f.ring()->nvars(); ++i) {
        Polynomial xi_di = partial_derivative(f, i).mul_term(mono_var(f.ring()->nvars(), i),
                                                             Rational(f.ring()->weight(i)));
        sum += xi_di;
    }
    return sum;
}

namespace {

void append_mono(std::string& out, const Monomial& m, const RingSpec& R) {
    bool first = true;
    for (int i = 0; i < R.nvars(); ++i) {
        int e = m.exp[static_cast<size_t>(i)];
        if (e == 0) continue;
        if (!first) out += "*";
        out += R.name(i);
        if (e > 1) out += "^" + std::to_string(e);
        first = false;
    }
}

}  // namespace

std::string to_string(const Polynomial& f) {
    if (f.is_zero()) return "0";
    const RingSpec& R = *f.ring();
    std::string out;
    bool first = true;
    for (const auto& t : f.terms()) {
        Rational c = t.coef;
        if (first) {
            if (c < 0) { out += "-"; c = -c; }
        } else {
            out += c < 0 ? " - " : " + ";
            if (c < 0) c = -c;
        }
        bool unit_mono = t.mono.is_one();
        if (c != 1 || unit_mono) {
            out += to_string(c);
            if (!unit_mono) out += "*";
        }
        if (!unit_mono) append_mono(out, t.mono, R);
        first = false;
    }
    return out;
}

std::ostream& operator<<(std::ostream& os, const Polynomial& f) { return os << to_string(f); }

// ---- parser ----

namespace {

struct Lexer {
    const std::string& text;
    size_t pos = 0;
    int line = 1, col = 1;

    explicit Lexer(const std::string& t) : text(t) {}

    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, line, col); }

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) {
            if (text[pos] == '\n') { ++line; col = 1; } else { ++col; }
            ++pos;
        }
    }

    bool eof() {
        skip_ws();
        return pos >= text.size();
    }

    char peek() {
        skip_ws();
        return pos < text.size() ? text[pos] : '\0';
    }

    char take() {
        char c = peek();
        ++pos;
        ++col;
        return c;
    }

    bool accept(char c) {
        if (peek() == c) { ++pos; ++col; return true; }
        return false;
    }

    std::string number() {
        skip_ws();
        std::string digits;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
            digits += text[pos++];
            ++col;
        }
        if (digits.empty()) fail("expected a number");
        return digits;
    }

    std::string name() {
        skip_ws();
        std::string id;
        while (pos < text.size() &&
               (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_')) {
            id += text[pos++];
            ++col;
        }
        if (id.empty()) fail("expected a name");
        return id;
    }
};

struct Parser {
    Lexer lex;
    const RingPtr& ring;

    Parser(const std::string& text, const RingPtr& r) : lex(text), ring(r) {}

    Polynomial run() {
        if (lex.eof()) lex.fail("empty polynomial");
        Polynomial f = expr();
        if (!lex.eof()) lex.fail("unexpected trailing input");
        return f;
    }

    Polynomial expr() {
        bool neg = false;
        if (lex.accept('-')) neg = true;
        else lex.accept('+');
        Polynomial acc = term();
        if (neg) acc = -acc;
        while (true) {
            char c = lex.peek();
            if (c == '+') { lex.take(); acc += term(); }
            else if (c == '-') { lex.take(); acc -= term(); }
            else break;
        }
        return acc;
    }

    Polynomial term() {
        Polynomial acc = factor();
        while (lex.accept('*')) acc = acc * factor();
        return acc;
    }

    Polynomial factor() {
        Polynomial base = atom();
        if (lex.accept('^')) {
            int ln = lex.line, cl = lex.col;
            std::string e = lex.number();
            long k = 0;
            try {
                k = std::stol(e);
            } catch (const std::exception&) {
                throw ParseError("exponent out of range", ln, cl);
            }
            if (k > 64) throw ParseError("exponent out of range", ln, cl);
            base = base.pow(static_cast<int>(k));
        }
        return base;
    }

    Polynomial atom() {
        char c = lex.peek();
        if (c == '(') {
            lex.take();
            Polynomial inner = expr();
            if (!lex.accept(')')) lex.fail("expected ')'");
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            Int num(lex.number());
            if (lex.accept('/')) {
                int ln = lex.line, cl = lex.col;
                Int den(lex.number());
                if (den == 0) throw ParseError("zero denominator", ln, cl);
                Rational q(num, den);
                q.canonicalize();
                return Polynomial::constant(ring, q);
            }
            return Polynomial::constant(ring, Rational(num));
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            int ln = lex.line, cl = lex.col;
            std::string id = lex.name();
            int idx = ring->var_index(id);
            if (idx < 0) throw ParseError("unknown variable '" + id + "'", ln, cl);
            return Polynomial::variable(ring, idx);
        }
        lex.fail(std::string("unexpected character '") + c + "'");
    }
};

}  // namespace

Polynomial parse_polynomial(const std::string& text, const RingPtr& ring) {
    return Parser(text, ring).run();
}

}  // namespace golod
