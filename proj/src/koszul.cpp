#include "golodlab/koszul.hpp"

#include <algorithm>
#include <bit>

namespace golod {

QuotientRing make_quotient(const RingPtr& ring, const std::vector<Polynomial>& J_gens) {
    QuotientRing R;
    R.ring = ring;
    R.J = groebner_basis(ring, J_gens);
    Polynomial one = Polynomial::constant(ring, 1);
    if (normal_form(one, R.J).is_zero()) throw InputError("quotient by the unit ideal");
    return R;
}

int mask_size(Mask m) { return std::popcount(m); }

long mask_weight(Mask m, const RingSpec& ring) {
    long w = 0;
    for (int i = 0; i < ring.nvars(); ++i)
        if (m & (Mask(1) << i)) w += ring.weight(i);
    return w;
}

std::vector<int> mask_indices(Mask m) {
    std::vector<int> idx;
    for (int i = 0; i < 32; ++i)
        if (m & (Mask(1) << i)) idx.push_back(i);
    return idx;
}

Mask mask_from_indices(const std::vector<int>& idx, int nvars) {
    Mask m = 0;
    for (int i : idx) {
        if (i < 0 || i >= nvars) throw Error("basis index out of range");
        Mask bit = Mask(1) << i;
        if (m & bit) throw Error("repeated index in basis subset");
        m |= bit;
    }
    return m;
}

KoszulElement kz_zero(const QuotientRing& R, int level) {
    KoszulElement z;
    z.R = &R;
    z.level = level;
    return z;
}

namespace {

void kz_put(KoszulElement& z, Mask m, Polynomial f) {
    Polynomial nf = normal_form(f, z.R->J);
    if (!nf.is_zero()) {
        auto it = z.comp.find(m);
        if (it == z.comp.end()) {
            z.comp.emplace(m, std::move(nf));
        } else {
            it->second += nf;
            if (it->second.is_zero()) z.comp.erase(it);
        }
    }
}

}  // namespace

KoszulElement kz_term(const QuotientRing& R, const std::vector<int>& idx, Polynomial f) {
    for (size_t t = 1; t < idx.size(); ++t)
        if (idx[t - 1] >= idx[t]) throw Error("kz_term indices must be strictly ascending");
    KoszulElement z = kz_zero(R, static_cast<int>(idx.size()));
    kz_put(z, mask_from_indices(idx, R.ring->nvars()), std::move(f));
    return z;
}

KoszulElement kz_add(const KoszulElement& a, const KoszulElement& b) {
    if (a.R != b.R || a.level != b.level) {
        if (a.is_zero()) return b;
        if (b.is_zero()) return a;
        throw Error("adding incompatible exterior elements");
    }
    KoszulElement r = a;
    for (const auto& [m, f] : b.comp) {
        auto it = r.comp.find(m);
        if (it == r.comp.end()) {
            r.comp.emplace(m, f);
        } else {
            it->second += f;
            if (it->second.is_zero()) r.comp.erase(it);
        }
    }
    return r;
}

KoszulElement kz_scale(const KoszulElement& a, const Rational& c) {
    KoszulElement r = kz_zero(*a.R, a.level);
    if (c == 0) return r;
    r.comp = a.comp;
    for (auto& [m, f] : r.comp) f = c * f;
    return r;
}

KoszulElement kz_sub(const KoszulElement& a, const KoszulElement& b) {
    return kz_add(a, kz_scale(b, Rational(-1)));
}

KoszulElement kz_mul_poly(const KoszulElement& a, const Polynomial& f) {
    KoszulElement r = kz_zero(*a.R, a.level);
    for (const auto& [m, g] : a.comp) kz_put(r, m, g * f);
    return r;
}

bool kz_equal(const KoszulElement& a, const KoszulElement& b) {
    return kz_sub(a, b).is_zero();
}

std::optional<long> kz_degree(const KoszulElement& z) {
    if (z.is_zero()) throw Error("kz_degree of the zero element");
    std::optional<long> deg;
    for (const auto& [m, f] : z.comp) {
        Homogeneity h = homogeneity(f);
        if (h.kind != Homogeneity::Homogeneous) return std::nullopt;
        long d = h.degree + mask_weight(m, *z.R->ring);
        if (deg && *deg != d) return std::nullopt;
        deg = d;
    }
    return deg;
}

KoszulElement differential(const KoszulElement& z) {
    if (z.level < 1) throw Error("differential needs exterior degree at least 1");
    const RingPtr& ring = z.R->ring;
    KoszulElement r = kz_zero(*z.R, z.level - 1);
    for (const auto& [m, f] : z.comp) {
        int t = 0;
        for (int i = 0; i < ring->nvars(); ++i) {
            Mask bit = Mask(1) << i;
            if (!(m & bit)) continue;
            ++t;  // 1-based position of i inside the subset
            Rational sign((t % 2 == 1) ? 1 : -1);
            kz_put(r, m & ~bit, f.mul_term(mono_var(ring->nvars(), i), sign));
        }
    }
    return r;
}

KoszulElement bar(const KoszulElement& z) {
    return kz_scale(z, Rational(z.level % 2 == 0 ? -1 : 1));
}

namespace {

// (-1)^{inversions between T and U}: exponent counts pairs a in T, b in U
// with a > b, the transpositions interleaving the two ascending lists.
int shuffle_sign(Mask t, Mask u) {
    int inv = 0;
    for (int b = 0; b < 32; ++b) {
        if (u & (Mask(1) << b)) inv += std::popcount(t >> (b + 1));
    }
    return inv % 2 == 0 ? 1 : -1;
}

}  // namespace

KoszulElement wedge(const KoszulElement& a, const KoszulElement& b) {
    if (a.R != b.R) {
        if (!a.is_zero() && !b.is_zero()) throw Error("wedge of incompatible elements");
    }
    KoszulElement r = kz_zero(*a.R, a.level + b.level);
    for (const auto& [t, f] : a.comp) {
        for (const auto& [u, g] : b.comp) {
            if (t & u) continue;  // repeated basis vector
            kz_put(r, t | u, (Rational(shuffle_sign(t, u)) * f) * g);
        }
    }
    return r;
}

namespace {

void collect_monomials(const RingSpec& ring, int var, long remaining, Monomial& cur,
                       std::vector<Monomial>& out) {
    if (var == ring.nvars()) {
        if (remaining == 0) out.push_back(cur);
        return;
    }
    long w = ring.weight(var);
    for (long e = 0; e * w <= remaining; ++e) {
        cur.exp[static_cast<size_t>(var)] = static_cast<int>(e);
        collect_monomials(ring, var + 1, remaining - e * w, cur, out);
    }
    cur.exp[static_cast<size_t>(var)] = 0;
}

}  // namespace

std::vector<Monomial> monomials_of_degree(const RingSpec& ring, long d) {
    std::vector<Monomial> out;
    if (d < 0) return out;
    Monomial cur = mono_one(ring.nvars());
    collect_monomials(ring, 0, d, cur, out);
    std::sort(out.begin(), out.end(),
              [&](const Monomial& a, const Monomial& b) { return mono_cmp(a, b, ring) > 0; });
    return out;
}

std::vector<Monomial> standard_monomials(const QuotientRing& R, long d) {
    std::vector<Monomial> all = monomials_of_degree(*R.ring, d);
    std::vector<Monomial> out;
    for (const auto& m : all) {
        bool reducible = false;
        for (const auto& g : R.J.elems) {
            if (mono_divides(mv_lead(g).mono, m)) {
                reducible = true;
                break;
            }
        }
        if (!reducible) out.push_back(m);
    }
    return out;
}

int KoszulSlice::index_of(Mask m, const Monomial& mono) const {
    for (size_t i = 0; i < basis.size(); ++i)
        if (basis[i].first == m && basis[i].second == mono) return static_cast<int>(i);
    return -1;
}

KoszulSlice koszul_slice(const QuotientRing& R, int level, long degree) {
    KoszulSlice s{&R, level, degree, {}};
    if (level < 0 || level > R.ring->nvars() || degree < 0) return s;
    for (Mask m = 0; m < (Mask(1) << R.ring->nvars()); ++m) {
        if (mask_size(m) != level) continue;
        long w = mask_weight(m, *R.ring);
        if (w > degree) continue;
        for (const auto& mono : standard_monomials(R, degree - w)) s.basis.emplace_back(m, mono);
    }
    return s;
}

SparseVec kz_coords(const KoszulElement& z, const KoszulSlice& slice) {
    SparseVec v;
    for (const auto& [m, f] : z.comp) {
        for (const auto& t : f.terms()) {
            int idx = slice.index_of(m, t.mono);
            if (idx < 0) throw Error("element does not lie in the slice");
            v.emplace_back(idx, t.coef);
        }
    }
    std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    return v;
}

KoszulElement kz_from_coords(const SparseVec& v, const KoszulSlice& slice) {
    KoszulElement z = kz_zero(*slice.R, slice.level);
    for (const auto& [idx, c] : v) {
        const auto& [m, mono] = slice.basis[static_cast<size_t>(idx)];
        kz_put(z, m, Polynomial::term(slice.R->ring, mono, c));
    }
    return z;
}

int HomologyBasis::dim(long d) const {
    auto it = reps.find(d);
    return it == reps.end() ? 0 : static_cast<int>(it->second.size());
}

int HomologyBasis::total_dim() const {
    int n = 0;
    for (const auto& [d, v] : reps) n += static_cast<int>(v.size());
    return n;
}

namespace {

KoszulElement slice_basis_element(const QuotientRing& R, Mask m, const Monomial& mono) {
    return kz_term(R, mask_indices(m), Polynomial::term(R.ring, mono, Rational(1)));
}

// Cycles-modulo-boundaries representatives inside one internal degree.
std::vector<KoszulElement> degree_reps(const QuotientRing& R, int level, long d) {
    KoszulSlice dom = koszul_slice(R, level, d);
    KoszulSlice up = koszul_slice(R, level + 1, d);
    KoszulSlice down = koszul_slice(R, level - 1, d);
    Eliminator elim;
    std::vector<SparseVec> kernel;
    for (const auto& [m, mono] : dom.basis) {
        KoszulElement db = differential(slice_basis_element(R, m, mono));
        auto ker = elim.add_column(kz_coords(db, down));
        if (ker) kernel.push_back(*ker);
    }
    RowSpan boundaries;
    for (const auto& [m, mono] : up.basis)
        boundaries.insert(kz_coords(differential(slice_basis_element(R, m, mono)), dom));
    std::vector<KoszulElement> reps;
    for (const auto& v : kernel) {
        if (boundaries.insert(v)) reps.push_back(kz_from_coords(v, dom));
    }
    return reps;
}

}  // namespace

HomologyBasis homology_basis(int level, const QuotientRing& R, const Resolution& res,
                             std::optional<long> full_scan_limit) {
    if (level < 1) throw Error("homology level must be at least 1");
    {
        // the resolution must describe the same ideal the quotient reduces by
        GroebnerBasis check = groebner_basis(R.ring, res.ideal_gens);
        bool same = check.elems.size() == R.J.elems.size();
        for (size_t i = 0; same && i < check.elems.size(); ++i)
            same = check.elems[i] == R.J.elems[i];
        if (!same) throw Error("resolution does not match the quotient ideal");
    }
    BettiTable betti = betti_table(res);
    HomologyBasis out;
    out.level = level;
    std::vector<long> degrees;
    if (full_scan_limit) {
        for (long d = 0; d <= *full_scan_limit; ++d) degrees.push_back(d);
    } else {
        for (const auto& [key, count] : betti) {
            if (key.first == level && count > 0) degrees.push_back(key.second);
        }
    }
    for (long d : degrees) {
        std::vector<KoszulElement> reps = degree_reps(R, level, d);
        auto it = betti.find({level, d});
        int expect = it == betti.end() ? 0 : it->second;
        if (static_cast<int>(reps.size()) != expect)
            throw Error("homology dimension does not match the graded Betti number at level " +
                        std::to_string(level) + " degree " + std::to_string(d));
        if (!reps.empty()) out.reps[d] = std::move(reps);
    }
    return out;
}

BoundaryResult is_boundary(const KoszulElement& z) {
    BoundaryResult out;
    const QuotientRing& R = *z.R;
    if (z.is_zero()) {
        out.is_boundary = true;
        out.witness = kz_zero(R, z.level + 1);
        return out;
    }
    if (!differential(z).is_zero()) throw InputError("is_boundary requires a cycle");
    std::optional<long> d = kz_degree(z);
    if (!d) throw InputError("is_boundary requires a homogeneous element");
    KoszulSlice dom = koszul_slice(R, z.level, *d);
    KoszulSlice up = koszul_slice(R, z.level + 1, *d);
    Eliminator elim;
    for (const auto& [m, mono] : up.basis)
        elim.add_column(kz_coords(differential(slice_basis_element(R, m, mono)), dom));
    out.slice_rank = elim.rank();
    auto combo = elim.express(kz_coords(z, dom));
    if (!combo) return out;
    out.is_boundary = true;
    KoszulElement w = kz_zero(R, z.level + 1);
    for (const auto& [idx, c] : *combo) {
        const auto& [m, mono] = up.basis[static_cast<size_t>(idx)];
        w = kz_add(w, kz_term(R, mask_indices(m), Polynomial::term(R.ring, mono, c)));
    }
    out.witness = std::move(w);
    return out;
}

bool membership_in_power(const KoszulElement& z, const std::vector<Polynomial>& I_gens, int m) {
    if (m < 0) throw InputError("negative power in membership test");
    if (m == 0 || z.is_zero()) return true;
    std::vector<Polynomial> gens;
    for (const auto& p : power_products(I_gens, m)) gens.push_back(p.poly);
    for (const auto& g : z.R->J.elems) gens.push_back(g.comp[0]);
    GroebnerBasis gb = groebner_basis(z.R->ring, gens);
    for (const auto& [mask, f] : z.comp) {
        if (!normal_form(f, gb).is_zero()) return false;
    }
    return true;
}

}  // namespace golod
