#include "golodlab/series.hpp"

#include <algorithm>

namespace golod {

std::vector<Int> series_divide(const std::vector<Int>& num, const std::vector<Int>& den, int N) {
    if (den.empty() || den[0] != 1) throw Error("series division needs constant term 1");
    std::vector<Int> q(static_cast<size_t>(N) + 1, Int(0));
    for (int i = 0; i <= N; ++i) {
        Int acc = i < static_cast<int>(num.size()) ? num[static_cast<size_t>(i)] : Int(0);
        for (int j = 1; j <= i && j < static_cast<int>(den.size()); ++j)
            acc -= den[static_cast<size_t>(j)] * q[static_cast<size_t>(i - j)];
        q[static_cast<size_t>(i)] = acc;
    }
    return q;
}

SeriesTruncation serre_bound_series(const QuotientRing& R, const Resolution& res, int N) {
    int n = R.ring->nvars();
    std::vector<Int> num(static_cast<size_t>(n) + 1);
    Int binom(1);
    for (int i = 0; i <= n; ++i) {
        num[static_cast<size_t>(i)] = binom;
        binom = binom * (n - i) / (i + 1);
    }
    std::vector<Int> den(static_cast<size_t>(std::max(res.length() + 2, 1)), Int(0));
    den[0] = 1;
    for (int l = 1; l <= res.length(); ++l)
        den[static_cast<size_t>(l) + 1] = -Int(res.rank(l));
    SeriesTruncation out;
    out.label = "serre-bound";
    out.coeffs = series_divide(num, den, N);
    return out;
}

namespace {

// coordinates of a homogeneous degree-d vector of R^r in the slice basis
// {(component c, standard monomial of degree d - shifts[c])}
struct FreeSlice {
    std::vector<std::pair<int, Monomial>> basis;

    int index_of(int c, const Monomial& m) const {
        for (size_t i = 0; i < basis.size(); ++i)
            if (basis[i].first == c && basis[i].second == m) return static_cast<int>(i);
        return -1;
    }
};

FreeSlice free_slice(const QuotientRing& R, const std::vector<long>& shifts, long d) {
    FreeSlice s;
    for (int c = 0; c < static_cast<int>(shifts.size()); ++c) {
        long rem = d - shifts[static_cast<size_t>(c)];
        if (rem < 0) continue;
        for (const auto& m : standard_monomials(R, rem)) s.basis.emplace_back(c, m);
    }
    return s;
}

SparseVec vector_coords(const ModuleVector& v, const FreeSlice& slice) {
    SparseVec out;
    for (int c = 0; c < v.rank(); ++c) {
        for (const auto& t : v.comp[static_cast<size_t>(c)].terms()) {
            int idx = slice.index_of(c, t.mono);
            if (idx < 0) throw Error("vector does not lie in the expected graded slice");
            out.emplace_back(idx, t.coef);
        }
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    return out;
}

ModuleVector nf_components(const ModuleVector& v, const GroebnerBasis& J) {
    ModuleVector r = v;
    for (auto& f : r.comp) f = normal_form(f, J);
    return r;
}

// the variables minimally generate m exactly when their residues stay
// independent modulo J + m^2
void check_variables_minimal(const QuotientRing& R) {
    const RingPtr& ring = R.ring;
    int n = ring->nvars();
    std::vector<Polynomial> gens;
    for (const auto& g : R.J.elems) gens.push_back(g.comp[0]);
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j)
            gens.push_back(Polynomial::term(ring, mono_mul(mono_var(n, i), mono_var(n, j)), Rational(1)));
    GroebnerBasis gb = groebner_basis(ring, gens);
    RowSpan span;
    for (int i = 0; i < n; ++i) {
        Polynomial nf = normal_form(Polynomial::variable(ring, i), gb);
        SparseVec coords;
        for (const auto& t : nf.terms()) {
            int idx = -1;
            for (int v = 0; v < n; ++v)
                if (t.mono == mono_var(n, v)) idx = v;
            if (idx < 0) throw Error("unexpected monomial in degree-one normal form");
            coords.emplace_back(idx, t.coef);
        }
        std::sort(coords.begin(), coords.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
        if (!span.insert(coords))
            throw InputError("the variables do not minimally generate the maximal ideal "
                             "(the ideal has a degree-one part)");
    }
}

}  // namespace

SeriesTruncation poincare_truncation(const QuotientRing& R, int N, WorkBudget* budget) {
    SeriesTruncation out;
    out.label = "poincare";
    out.coeffs.push_back(Int(1));
    if (N == 0) return out;
    check_variables_minimal(R);

    const RingPtr& ring = R.ring;
    int n = ring->nvars();
    std::vector<Polynomial> Jpolys;
    for (const auto& g : R.J.elems) Jpolys.push_back(g.comp[0]);

    // step state: minimal presentation matrix rows over R and their degrees
    std::vector<long> prev_shifts{0};
    std::vector<ModuleVector> rows;
    std::vector<long> shifts;
    for (int i = 0; i < n; ++i) {
        rows.push_back(ModuleVector{{Polynomial::variable(ring, i)}});
        shifts.push_back(ring->weight(i));
    }
    out.coeffs.push_back(Int(n));

    try {
        for (int step = 2; step <= N; ++step) {
            int rank = static_cast<int>(prev_shifts.size());
            int m = static_cast<int>(rows.size());
            // tagged block: the lifted rows; untagged: J times each basis vector
            std::vector<ModuleVector> ext;
            for (int j = 0; j < m; ++j) {
                ModuleVector w = mv_zero(ring, rank + m);
                for (int c = 0; c < rank; ++c) w.comp[static_cast<size_t>(c)] = rows[static_cast<size_t>(j)].comp[static_cast<size_t>(c)];
                w.comp[static_cast<size_t>(rank + j)] = Polynomial::constant(ring, 1);
                ext.push_back(std::move(w));
            }
            for (const auto& g : Jpolys) {
                for (int c = 0; c < rank; ++c) {
                    ModuleVector w = mv_zero(ring, rank + m);
                    w.comp[static_cast<size_t>(c)] = g;
                    ext.push_back(std::move(w));
                }
            }
            std::vector<ModuleVector> candidates;
            {
                std::vector<ModuleVector> harvested =
                    syzygy_schreyer_extended(ring, rank, m, ext, budget);
                for (auto& s : harvested) {
                    ModuleVector v = nf_components(s, R.J);
                    if (!v.is_zero()) candidates.push_back(std::move(v));
                }
            }
            // graded Nakayama: keep candidates independent modulo m*(syzygy module)
            std::vector<long> cand_deg(candidates.size());
            for (size_t t = 0; t < candidates.size(); ++t) {
                std::optional<long> d = module_degree(candidates[t], shifts);
                if (!d) throw Error("inhomogeneous syzygy candidate");
                cand_deg[t] = *d;
            }
            std::vector<int> order(candidates.size());
            for (size_t t = 0; t < candidates.size(); ++t) order[t] = static_cast<int>(t);
            std::stable_sort(order.begin(), order.end(),
                             [&](int a, int b) { return cand_deg[static_cast<size_t>(a)] < cand_deg[static_cast<size_t>(b)]; });
            std::vector<ModuleVector> kept;
            std::vector<long> kept_deg;
            size_t at = 0;
            while (at < order.size()) {
                long d = cand_deg[static_cast<size_t>(order[at])];
                FreeSlice slice = free_slice(R, shifts, d);
                RowSpan span;
                for (size_t t = 0; t < candidates.size(); ++t) {
                    if (cand_deg[t] >= d) continue;
                    for (const auto& u : monomials_of_degree(*ring, d - cand_deg[t])) {
                        ModuleVector mult = nf_components(
                            mv_mul_term(candidates[t], u, Rational(1)), R.J);
                        if (!mult.is_zero()) span.insert(vector_coords(mult, slice));
                    }
                }
                for (; at < order.size() && cand_deg[static_cast<size_t>(order[at])] == d; ++at) {
                    const ModuleVector& cand = candidates[static_cast<size_t>(order[at])];
                    if (span.insert(vector_coords(cand, slice))) {
                        kept.push_back(cand);
                        kept_deg.push_back(d);
                    }
                }
            }
            out.coeffs.push_back(Int(kept.size()));
            if (kept.empty()) {
                while (static_cast<int>(out.coeffs.size()) <= N) out.coeffs.push_back(Int(0));
                return out;
            }
            prev_shifts = shifts;
            shifts = std::move(kept_deg);
            rows = std::move(kept);
        }
    } catch (const BudgetExhausted&) {
        out.complete = false;
    }
    return out;
}

SeriesComparison compare_series(const SeriesTruncation& a, const SeriesTruncation& b) {
    SeriesComparison out;
    size_t len = std::min(a.coeffs.size(), b.coeffs.size());
    for (size_t i = 0; i < len; ++i) {
        if (a.coeffs[i] != b.coeffs[i]) {
            out.equal = false;
            out.first_difference = static_cast<int>(i);
            return out;
        }
    }
    if (a.coeffs.size() != b.coeffs.size()) {
        out.equal = false;
        out.first_difference = static_cast<int>(len);
    }
    return out;
}

}  // namespace golod
