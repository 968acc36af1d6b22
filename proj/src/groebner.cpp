#include "golodlab/groebner.hpp"

#include <algorithm>
#include <set>

namespace golod {

bool ModuleVector::is_zero() const {
    for (const auto& f : comp)
        if (!f.is_zero()) return false;
    return true;
}

ModuleVector mv_zero(const RingPtr& ring, int rank) {
    ModuleVector v;
    v.comp.assign(static_cast<size_t>(rank), Polynomial(ring));
    return v;
}

ModuleVector mv_unit(const RingPtr& ring, int rank, int pos) {
    ModuleVector v = mv_zero(ring, rank);
    v.comp[static_cast<size_t>(pos)] = Polynomial::constant(ring, 1);
    return v;
}

ModuleVector mv_add(const ModuleVector& a, const ModuleVector& b) {
    if (a.rank() != b.rank()) throw Error("module rank mismatch");
    ModuleVector r = a;
    for (int i = 0; i < r.rank(); ++i) r.comp[static_cast<size_t>(i)] += b.comp[static_cast<size_t>(i)];
    return r;
}

ModuleVector mv_sub(const ModuleVector& a, const ModuleVector& b) {
    if (a.rank() != b.rank()) throw Error("module rank mismatch");
    ModuleVector r = a;
    for (int i = 0; i < r.rank(); ++i) r.comp[static_cast<size_t>(i)] -= b.comp[static_cast<size_t>(i)];
    return r;
}

ModuleVector mv_mul_term(const ModuleVector& v, const Monomial& m, const Rational& c) {
    ModuleVector r = v;
    for (auto& f : r.comp) f = f.mul_term(m, c);
    return r;
}

ModuleVector mv_mul_poly(const ModuleVector& v, const Polynomial& f) {
    ModuleVector r = v;
    for (auto& g : r.comp) g = g * f;
    return r;
}

LeadTerm mv_lead(const ModuleVector& v) {
    for (int i = 0; i < v.rank(); ++i) {
        const Polynomial& f = v.comp[static_cast<size_t>(i)];
        if (!f.is_zero()) return {i, f.leading().mono, f.leading().coef};
    }
    throw Error("lead of zero module vector");
}

int lead_cmp(const LeadTerm& a, const LeadTerm& b, const RingSpec& ring) {
    if (a.pos != b.pos) return a.pos < b.pos ? 1 : -1;  // earlier component dominates
    return mono_cmp(a.mono, b.mono, ring);
}

std::optional<long> module_degree(const ModuleVector& v, const std::vector<long>& shifts) {
    std::optional<long> deg;
    for (int i = 0; i < v.rank(); ++i) {
        const Polynomial& f = v.comp[static_cast<size_t>(i)];
        if (f.is_zero()) continue;
        Homogeneity h = homogeneity(f);
        if (h.kind != Homogeneity::Homogeneous) return std::nullopt;
        long d = h.degree + shifts[static_cast<size_t>(i)];
        if (deg && *deg != d) return std::nullopt;
        deg = d;
    }
    return deg ? deg : std::optional<long>(0);
}

namespace {

// work -= c*m * g, touching only the components where g is nonzero
void subtract_multiple(ModuleVector& work, const ModuleVector& g, const Monomial& m,
                       const Rational& c) {
    for (int i = 0; i < g.rank(); ++i) {
        const Polynomial& gi = g.comp[static_cast<size_t>(i)];
        if (!gi.is_zero()) work.comp[static_cast<size_t>(i)] -= gi.mul_term(m, c);
    }
}

// Shared reduction core. Components 0..frank-1 participate in reduction;
// any further components ride along untouched (syzygy bookkeeping tags).
// Returns the fully reduced vector: no term of any reducing component is
// divisible by a basis lead in the same component. quotient, when given,
// accumulates the subtracted basis multiples (one polynomial per basis row).
ModuleVector reduce_vector(ModuleVector work, const std::vector<ModuleVector>& basis,
                           int frank, const RingPtr& ring,
                           std::vector<Polynomial>* quotient = nullptr) {
    // leads cached per basis element
    struct Red {
        int pos;
        const Monomial* mono;
        const Rational* coef;
        const ModuleVector* vec;
        int index;
    };
    std::vector<Red> reds;
    reds.reserve(basis.size());
    for (size_t t = 0; t < basis.size(); ++t) {
        const ModuleVector& g = basis[t];
        if (g.is_zero()) continue;
        LeadTerm lt = mv_lead(g);
        if (lt.pos >= frank) continue;  // pure-tag elements never reduce
        const Polynomial& lf = g.comp[static_cast<size_t>(lt.pos)];
        reds.push_back({lt.pos, &lf.leading().mono, &lf.leading().coef, &g, static_cast<int>(t)});
    }

    // walk terms from the position-over-term top; a reduction only disturbs
    // strictly later terms, so a (component, bound) cursor never backtracks
    int c = 0;
    bool have_bound = false;
    Monomial bound;
    while (c < frank) {
        const Polynomial& f = work.comp[static_cast<size_t>(c)];
        const Term* cur = nullptr;
        for (const auto& t : f.terms()) {
            if (!have_bound || mono_cmp(t.mono, bound, *ring) < 0) {
                cur = &t;
                break;
            }
        }
        if (!cur) {
            ++c;
            have_bound = false;
            continue;
        }
        const Red* hit = nullptr;
        for (const auto& rd : reds) {
            if (rd.pos == c && mono_divides(*rd.mono, cur->mono)) {
                hit = &rd;
                break;
            }
        }
        Monomial here = cur->mono;
        if (hit) {
            Monomial q = mono_div(here, *hit->mono);
            Rational coef = cur->coef / *hit->coef;
            subtract_multiple(work, *hit->vec, q, coef);
            if (quotient)
                (*quotient)[static_cast<size_t>(hit->index)] += Polynomial::term(ring, q, coef);
        }
        bound = here;
        have_bound = true;
    }
    return work;
}

struct SPair {
    long deg;  // weighted degree of the lead lcm
    int i, j;

    bool operator<(const SPair& o) const {
        if (deg != o.deg) return deg < o.deg;
        if (i != o.i) return i < o.i;
        return j < o.j;
    }
};

struct Engine {
    RingPtr ring;
    int frank;     // reducing block rank
    int ext_rank;  // full rank incl. tags
    bool tag_mode;
    WorkBudget* budget;

    std::vector<ModuleVector> G;
    std::vector<LeadTerm> leads;  // F-block leads, parallel to G
    std::set<SPair> pending;
    std::set<std::pair<int, int>> processed;
    std::vector<ModuleVector> syzygies;  // harvested pure-tag vectors (full ext rank)

    void add_member(ModuleVector v) {
        LeadTerm lt = mv_lead(v);
        if (lt.pos >= frank) {
            syzygies.push_back(std::move(v));
            return;
        }
        // monic by the F-lead; tags scale along, keeping their expressions valid
        Rational inv = 1 / lt.coef;
        for (auto& f : v.comp) f = f.mul_term(mono_one(ring->nvars()), inv);
        lt.coef = 1;
        int idx = static_cast<int>(G.size());
        for (int t = 0; t < idx; ++t) {
            if (leads[static_cast<size_t>(t)].pos != lt.pos) continue;
            Monomial l = mono_lcm(leads[static_cast<size_t>(t)].mono, lt.mono);
            pending.insert({weighted_degree(l, *ring), t, idx});
        }
        G.push_back(std::move(v));
        leads.push_back(lt);
    }

    bool product_criterion(const SPair& p) const {
        // coprime leads: valid for ideals only
        return frank == 1 && !tag_mode &&
               mono_coprime(leads[static_cast<size_t>(p.i)].mono, leads[static_cast<size_t>(p.j)].mono);
    }

    bool chain_criterion(const SPair& p) const {
        if (tag_mode) return false;
        const LeadTerm& li = leads[static_cast<size_t>(p.i)];
        const LeadTerm& lj = leads[static_cast<size_t>(p.j)];
        Monomial l = mono_lcm(li.mono, lj.mono);
        for (int t = 0; t < static_cast<int>(G.size()); ++t) {
            if (t == p.i || t == p.j) continue;
            const LeadTerm& lt = leads[static_cast<size_t>(t)];
            if (lt.pos != li.pos || !mono_divides(lt.mono, l)) continue;
            auto done = [&](int a, int b) {
                if (a > b) std::swap(a, b);
                return processed.count({a, b}) > 0;
            };
            // conservative: require both flanking pairs actually reduced
            if (done(p.i, t) && done(p.j, t)) return true;
        }
        return false;
    }

    void run() {
        while (!pending.empty()) {
            SPair p = *pending.begin();
            pending.erase(pending.begin());
            if (product_criterion(p) || chain_criterion(p)) {
                processed.insert({p.i, p.j});
                continue;
            }
            if (budget) {
                budget->spend();
                if (budget->exhausted()) throw BudgetExhausted();
            }
            const LeadTerm& li = leads[static_cast<size_t>(p.i)];
            const LeadTerm& lj = leads[static_cast<size_t>(p.j)];
            Monomial l = mono_lcm(li.mono, lj.mono);
            ModuleVector s = mv_sub(mv_mul_term(G[static_cast<size_t>(p.i)], mono_div(l, li.mono), Rational(1)),
                                    mv_mul_term(G[static_cast<size_t>(p.j)], mono_div(l, lj.mono), Rational(1)));
            ModuleVector r = reduce_vector(std::move(s), G, frank, ring);
            processed.insert({p.i, p.j});
            if (!r.is_zero()) add_member(std::move(r));
        }
    }
};

// minimize + tail-reduce + monic + sort: the unique reduced basis
std::vector<ModuleVector> reduce_basis(std::vector<ModuleVector> G, int rank, const RingPtr& ring) {
    std::vector<int> order(G.size());
    for (size_t t = 0; t < G.size(); ++t) order[t] = static_cast<int>(t);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        return lead_cmp(mv_lead(G[static_cast<size_t>(a)]), mv_lead(G[static_cast<size_t>(b)]), *ring) < 0;
    });
    std::vector<ModuleVector> kept;
    std::vector<LeadTerm> kept_leads;
    for (int idx : order) {
        LeadTerm lt = mv_lead(G[static_cast<size_t>(idx)]);
        bool redundant = false;
        for (const auto& kl : kept_leads) {
            if (kl.pos == lt.pos && mono_divides(kl.mono, lt.mono)) {
                redundant = true;
                break;
            }
        }
        if (!redundant) {
            kept.push_back(G[static_cast<size_t>(idx)]);
            kept_leads.push_back(lt);
        }
    }
    std::vector<ModuleVector> out;
    out.reserve(kept.size());
    for (size_t t = 0; t < kept.size(); ++t) {
        std::vector<ModuleVector> others;
        others.reserve(kept.size() - 1);
        for (size_t u = 0; u < kept.size(); ++u)
            if (u != t) others.push_back(kept[u]);
        out.push_back(reduce_vector(kept[t], others, rank, ring));
    }
    for (auto& v : out) {
        LeadTerm lt = mv_lead(v);
        Rational inv = 1 / lt.coef;
        for (auto& f : v.comp) f = f.mul_term(mono_one(ring->nvars()), inv);
    }
    std::sort(out.begin(), out.end(), [&](const ModuleVector& a, const ModuleVector& b) {
        return lead_cmp(mv_lead(a), mv_lead(b), *ring) < 0;
    });
    return out;
}

Engine run_engine(const RingPtr& ring, int frank, int trank,
                  const std::vector<ModuleVector>& inputs, WorkBudget* budget) {
    Engine e;
    e.ring = ring;
    e.frank = frank;
    e.ext_rank = frank + trank;
    e.tag_mode = trank > 0;
    e.budget = budget;
    for (const auto& v : inputs) {
        if (v.is_zero()) continue;
        e.add_member(v);
    }
    e.run();
    return e;
}

}  // namespace

GroebnerBasis groebner_basis(const RingPtr& ring, const std::vector<Polynomial>& gens,
                             WorkBudget* budget) {
    std::vector<ModuleVector> v;
    v.reserve(gens.size());
    for (const auto& g : gens) v.push_back(ModuleVector{{g}});
    return groebner_basis(ring, 1, v, budget);
}

GroebnerBasis groebner_basis(const RingPtr& ring, int rank,
                             const std::vector<ModuleVector>& gens, WorkBudget* budget) {
    for (const auto& g : gens)
        if (g.rank() != rank) throw Error("generator rank mismatch");
    Engine e = run_engine(ring, rank, 0, gens, budget);
    GroebnerBasis gb;
    gb.ring = ring;
    gb.rank = rank;
    gb.elems = reduce_basis(std::move(e.G), rank, ring);
    return gb;
}

Polynomial normal_form(const Polynomial& f, const GroebnerBasis& gb) {
    if (gb.rank != 1) throw Error("normal_form: scalar against module basis");
    if (f.is_zero() || gb.elems.empty()) return f;
    ModuleVector r = reduce_vector(ModuleVector{{f}}, gb.elems, 1, gb.ring);
    return r.comp[0];
}

ModuleVector normal_form(const ModuleVector& v, const GroebnerBasis& gb) {
    if (v.rank() != gb.rank) throw Error("normal_form: rank mismatch");
    return reduce_vector(v, gb.elems, gb.rank, gb.ring);
}

ModuleVector normal_form(const ModuleVector& v, const GroebnerBasis& gb,
                         std::vector<Polynomial>& quotient) {
    if (v.rank() != gb.rank) throw Error("normal_form: rank mismatch");
    quotient.assign(gb.elems.size(), Polynomial(gb.ring));
    return reduce_vector(v, gb.elems, gb.rank, gb.ring, &quotient);
}

namespace {

std::vector<ModuleVector> extend_with_tags(const RingPtr& ring, int rank,
                                           const std::vector<ModuleVector>& f) {
    std::vector<ModuleVector> ext;
    int m = static_cast<int>(f.size());
    ext.reserve(f.size());
    for (int j = 0; j < m; ++j) {
        if (f[static_cast<size_t>(j)].rank() != rank) throw Error("syzygy input rank mismatch");
        ModuleVector w = mv_zero(ring, rank + m);
        for (int c = 0; c < rank; ++c) w.comp[static_cast<size_t>(c)] = f[static_cast<size_t>(j)].comp[static_cast<size_t>(c)];
        w.comp[static_cast<size_t>(rank + j)] = Polynomial::constant(ring, 1);
        ext.push_back(std::move(w));
    }
    return ext;
}

ModuleVector tag_block(const ModuleVector& w, int rank, int m, const RingPtr& ring) {
    ModuleVector s = mv_zero(ring, m);
    for (int j = 0; j < m; ++j) s.comp[static_cast<size_t>(j)] = w.comp[static_cast<size_t>(rank + j)];
    return s;
}

}  // namespace

std::vector<ModuleVector> syzygy_schreyer(const RingPtr& ring, int rank,
                                          const std::vector<ModuleVector>& f,
                                          WorkBudget* budget) {
    return syzygy_schreyer_extended(ring, rank, static_cast<int>(f.size()),
                                    extend_with_tags(ring, rank, f), budget);
}

std::vector<ModuleVector> syzygy_schreyer_extended(const RingPtr& ring, int frank, int tagrank,
                                                   const std::vector<ModuleVector>& ext,
                                                   WorkBudget* budget) {
    for (const auto& w : ext)
        if (w.rank() != frank + tagrank) throw Error("extended input rank mismatch");
    Engine e = run_engine(ring, frank, tagrank, ext, budget);
    std::vector<ModuleVector> out;
    out.reserve(e.syzygies.size());
    for (const auto& w : e.syzygies) out.push_back(tag_block(w, frank, tagrank, ring));
    return out;
}

std::vector<ModuleVector> syzygy_basis(const RingPtr& ring, int rank,
                                       const std::vector<ModuleVector>& f) {
    std::vector<ModuleVector> syz = syzygy_schreyer(ring, rank, f);
    int m = static_cast<int>(f.size());
    // prune back to front so the low-degree early relations survive
    for (size_t t = syz.size(); t-- > 0;) {
        std::vector<ModuleVector> others;
        others.reserve(syz.size() - 1);
        for (size_t u = 0; u < syz.size(); ++u)
            if (u != t) others.push_back(syz[u]);
        if (others.empty()) break;
        GroebnerBasis gb = groebner_basis(ring, m, others);
        if (normal_form(syz[t], gb).is_zero()) syz.erase(syz.begin() + static_cast<long>(t));
    }
    return syz;
}

bool module_membership(const ModuleVector& v, const GroebnerBasis& gb) {
    return normal_form(v, gb).is_zero();
}

std::optional<std::vector<Polynomial>> express_in_module(const ModuleVector& v,
                                                         const RingPtr& ring, int rank,
                                                         const std::vector<ModuleVector>& f) {
    int m = static_cast<int>(f.size());
    Engine e = run_engine(ring, rank, m, extend_with_tags(ring, rank, f), nullptr);
    ModuleVector target = mv_zero(ring, rank + m);
    for (int c = 0; c < rank; ++c) target.comp[static_cast<size_t>(c)] = v.comp[static_cast<size_t>(c)];
    ModuleVector r = reduce_vector(std::move(target), e.G, rank, ring);
    for (int c = 0; c < rank; ++c)
        if (!r.comp[static_cast<size_t>(c)].is_zero()) return std::nullopt;
    std::vector<Polynomial> coeffs;
    coeffs.reserve(static_cast<size_t>(m));
    for (int j = 0; j < m; ++j) coeffs.push_back(-r.comp[static_cast<size_t>(rank + j)]);
    return coeffs;
}

std::vector<PowerProduct> power_products(const std::vector<Polynomial>& gens, int k) {
    if (k < 1) throw InputError("power must be at least 1");
    if (gens.empty()) throw InputError("empty generator list");
    std::vector<PowerProduct> out;
    std::vector<int> tuple(static_cast<size_t>(k), 0);
    int m = static_cast<int>(gens.size());
    while (true) {
        Polynomial p = gens[static_cast<size_t>(tuple[0])];
        for (int t = 1; t < k; ++t) p = p * gens[static_cast<size_t>(tuple[static_cast<size_t>(t)])];
        out.push_back({tuple, p});
        // next nondecreasing tuple, lexicographic
        int t = k - 1;
        while (t >= 0 && tuple[static_cast<size_t>(t)] == m - 1) --t;
        if (t < 0) break;
        int v = tuple[static_cast<size_t>(t)] + 1;
        for (int u = t; u < k; ++u) tuple[static_cast<size_t>(u)] = v;
    }
    return out;
}

std::vector<PowerProduct> ideal_power(const std::vector<Polynomial>& gens, int k) {
    std::vector<PowerProduct> prods = power_products(gens, k);
    const RingPtr& ring = gens.front().ring();
    std::vector<long> degs(prods.size(), 0);
    for (size_t t = 0; t < prods.size(); ++t) {
        Homogeneity h = homogeneity(prods[t].poly);
        if (h.kind == Homogeneity::Mixed) throw InputError("ideal generators must be homogeneous");
        degs[t] = h.degree;
    }
    std::vector<int> order(prods.size());
    for (size_t t = 0; t < prods.size(); ++t) order[t] = static_cast<int>(t);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        if (degs[static_cast<size_t>(a)] != degs[static_cast<size_t>(b)])
            return degs[static_cast<size_t>(a)] < degs[static_cast<size_t>(b)];
        return prods[static_cast<size_t>(a)].tuple < prods[static_cast<size_t>(b)].tuple;
    });
    std::vector<PowerProduct> kept;
    for (int idx : order) {
        const PowerProduct& cand = prods[static_cast<size_t>(idx)];
        if (cand.poly.is_zero()) continue;
        bool redundant = false;
        if (!kept.empty()) {
            std::vector<Polynomial> polys;
            polys.reserve(kept.size());
            for (const auto& kp : kept) polys.push_back(kp.poly);
            GroebnerBasis gb = groebner_basis(ring, polys);
            redundant = normal_form(cand.poly, gb).is_zero();
        }
        if (!redundant) kept.push_back(cand);
    }
    return kept;
}

}  // namespace golod
