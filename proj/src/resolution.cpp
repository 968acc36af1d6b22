#include "golodlab/resolution.hpp"

#include <algorithm>
#include <numeric>

namespace golod {

namespace {

bool is_unit_entry(const Polynomial& f) {
    return !f.is_zero() && f.terms().size() >= 1 && f.leading().mono.is_one();
}

// Raw chain of iterated syzygies: exact but possibly non-minimal.
void build_chain(Resolution& res) {
    const RingPtr& ring = res.ring;
    int cap = ring->nvars() + 10;
    while (true) {
        const FreeModule& top = res.modules.back();
        const FreeModule& below = res.modules[res.modules.size() - 2];
        std::vector<ModuleVector> syz = syzygy_basis(ring, below.rank(), res.maps.back().rows);
        if (syz.empty()) break;
        FreeModule next;
        for (const auto& s : syz) {
            std::optional<long> d = module_degree(s, top.shifts);
            if (!d) throw Error("inhomogeneous syzygy in resolution chain");
            next.shifts.push_back(*d);
        }
        res.maps.push_back(ChainMap{std::move(syz)});
        res.modules.push_back(std::move(next));
        if (res.length() > cap) throw Error("resolution chain failed to terminate");
    }
}

std::vector<ModuleVector>& map_rows(Resolution& res, int i) { return res.maps[static_cast<size_t>(i - 1)].rows; }

// Cancel u = entry (j,k) of the map F_i -> F_{i-1}: clear column k by row
// operations, then drop basis element j of F_i and k of F_{i-1}. The matrix
// one step up loses column j unchanged; one step down loses row k unchanged
// (the composite-zero identity forces the adjusted row to vanish).
void cancel_unit(Resolution& res, int i, int j, int k) {
    auto& rows = map_rows(res, i);
    Rational u = rows[static_cast<size_t>(j)].comp[static_cast<size_t>(k)].leading().coef;
    for (int j2 = 0; j2 < static_cast<int>(rows.size()); ++j2) {
        if (j2 == j) continue;
        const Polynomial& e = rows[static_cast<size_t>(j2)].comp[static_cast<size_t>(k)];
        if (e.is_zero()) continue;
        Polynomial c = (Rational(1) / u) * e;
        rows[static_cast<size_t>(j2)] =
            mv_sub(rows[static_cast<size_t>(j2)], mv_mul_poly(rows[static_cast<size_t>(j)], c));
    }
    // drop row j, then column k everywhere in this map
    rows.erase(rows.begin() + j);
    for (auto& r : rows) r.comp.erase(r.comp.begin() + k);
    res.modules[static_cast<size_t>(i)].shifts.erase(res.modules[static_cast<size_t>(i)].shifts.begin() + j);
    res.modules[static_cast<size_t>(i - 1)].shifts.erase(res.modules[static_cast<size_t>(i - 1)].shifts.begin() + k);
    if (i + 1 <= res.length()) {
        for (auto& r : map_rows(res, i + 1)) r.comp.erase(r.comp.begin() + j);
    }
    if (i >= 2) {
        auto& below = map_rows(res, i - 1);
        below.erase(below.begin() + k);
    }
}

void minimalize(Resolution& res) {
    while (true) {
        bool found = false;
        for (int i = 1; i <= res.length() && !found; ++i) {
            const ChainMap& m = res.maps[static_cast<size_t>(i - 1)];
            for (int j = 0; j < static_cast<int>(m.rows.size()) && !found; ++j) {
                for (int k = 0; k < m.rows[static_cast<size_t>(j)].rank() && !found; ++k) {
                    if (is_unit_entry(m.entry(j, k))) {
                        cancel_unit(res, i, j, k);
                        found = true;
                    }
                }
            }
        }
        if (!found) break;
    }
    while (res.length() >= 1 && res.modules.back().rank() == 0) {
        res.modules.pop_back();
        res.maps.pop_back();
    }
}

void sort_bases(Resolution& res) {
    for (int i = 1; i <= res.length(); ++i) {
        auto& shifts = res.modules[static_cast<size_t>(i)].shifts;
        std::vector<int> order(shifts.size());
        std::iota(order.begin(), order.end(), 0);
        std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
            return shifts[static_cast<size_t>(a)] < shifts[static_cast<size_t>(b)];
        });
        std::vector<long> new_shifts;
        std::vector<ModuleVector> new_rows;
        auto& rows = map_rows(res, i);
        for (int idx : order) {
            new_shifts.push_back(shifts[static_cast<size_t>(idx)]);
            new_rows.push_back(rows[static_cast<size_t>(idx)]);
        }
        shifts = std::move(new_shifts);
        rows = std::move(new_rows);
        if (i + 1 <= res.length()) {
            for (auto& r : map_rows(res, i + 1)) {
                std::vector<Polynomial> nc;
                nc.reserve(r.comp.size());
                for (int idx : order) nc.push_back(r.comp[static_cast<size_t>(idx)]);
                r.comp = std::move(nc);
            }
        }
    }
}

}  // namespace

Resolution minimal_free_resolution(const RingPtr& ring, const std::vector<Polynomial>& J) {
    Resolution res;
    res.ring = ring;
    for (const auto& g : J) {
        if (g.is_zero()) continue;
        Homogeneity h = homogeneity(g);
        if (h.kind != Homogeneity::Homogeneous)
            throw InputError("ideal generator is not homogeneous: " + to_string(g));
        res.ideal_gens.push_back(g);
    }
    {
        GroebnerBasis gb = groebner_basis(ring, res.ideal_gens);
        Polynomial one = Polynomial::constant(ring, 1);
        if (normal_form(one, gb).is_zero()) throw InputError("unit ideal has no resolution");
    }
    res.modules.push_back(FreeModule{{0}});
    if (!res.ideal_gens.empty()) {
        FreeModule f1;
        std::vector<ModuleVector> rows;
        for (const auto& g : res.ideal_gens) {
            f1.shifts.push_back(homogeneity(g).degree);
            rows.push_back(ModuleVector{{g}});
        }
        res.modules.push_back(std::move(f1));
        res.maps.push_back(ChainMap{std::move(rows)});
        build_chain(res);
        minimalize(res);
        sort_bases(res);
    }
    if (res.length() > ring->nvars()) throw Error("resolution longer than variable count");
    return res;
}

BettiTable betti_table(const Resolution& res) {
    BettiTable t;
    for (int i = 0; i <= res.length(); ++i)
        for (long d : res.modules[static_cast<size_t>(i)].shifts) ++t[{i, d}];
    return t;
}

ResolutionCheck verify_resolution(const Resolution& res) {
    ResolutionCheck out;
    auto fail = [&](const std::string& msg) {
        out.pass = false;
        out.failures.push_back(msg);
    };
    const RingPtr& ring = res.ring;
    if (res.modules.empty() || res.modules[0].rank() != 1 || res.modules[0].shifts[0] != 0)
        fail("F_0 must be free of rank 1 with shift 0");
    if (res.length() > ring->nvars()) fail("length exceeds variable count");

    for (int i = 1; i <= res.length(); ++i) {
        const ChainMap& m = res.map(i);
        if (static_cast<int>(m.rows.size()) != res.rank(i)) {
            fail("map " + std::to_string(i) + " has wrong row count");
            continue;
        }
        for (int j = 0; j < res.rank(i); ++j) {
            const ModuleVector& row = m.rows[static_cast<size_t>(j)];
            if (row.rank() != res.rank(i - 1)) {
                fail("map " + std::to_string(i) + " row " + std::to_string(j) + " has wrong rank");
                continue;
            }
            for (int k = 0; k < res.rank(i - 1); ++k) {
                const Polynomial& e = m.entry(j, k);
                if (e.is_zero()) continue;
                if (is_unit_entry(e))
                    fail("unit entry at map " + std::to_string(i) + " (" + std::to_string(j) +
                         "," + std::to_string(k) + ")");
                Homogeneity h = homogeneity(e);
                if (h.kind != Homogeneity::Homogeneous ||
                    h.degree != res.shift(i, j) - res.shift(i - 1, k))
                    fail("entry degree mismatch at map " + std::to_string(i) + " (" +
                         std::to_string(j) + "," + std::to_string(k) + ")");
            }
        }
    }
    // composition zero
    for (int i = 2; i <= res.length(); ++i) {
        const ChainMap& hi = res.map(i);
        const ChainMap& lo = res.map(i - 1);
        for (int r = 0; r < res.rank(i); ++r) {
            ModuleVector acc = mv_zero(ring, res.rank(i - 2));
            for (int j = 0; j < res.rank(i - 1); ++j) {
                const Polynomial& e = hi.entry(r, j);
                if (!e.is_zero()) acc = mv_add(acc, mv_mul_poly(lo.rows[static_cast<size_t>(j)], e));
            }
            if (!acc.is_zero())
                fail("composition not zero at level " + std::to_string(i) + " row " + std::to_string(r));
        }
    }
    // exactness: kernel of each map generated by the rows of the next
    for (int i = 1; i <= res.length(); ++i) {
        std::vector<ModuleVector> syz = syzygy_basis(ring, res.rank(i - 1), res.map(i).rows);
        if (i < res.length()) {
            GroebnerBasis img = groebner_basis(ring, res.rank(i), res.map(i + 1).rows);
            for (const auto& s : syz) {
                if (!module_membership(s, img)) {
                    fail("exactness failure at stage " + std::to_string(i));
                    break;
                }
            }
        } else if (!syz.empty()) {
            fail("leftmost map is not injective");
        }
    }
    return out;
}

}  // namespace golod
