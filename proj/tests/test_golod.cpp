#include <filesystem>

#include "doctest.h"
#include "generators.hpp"
#include "oracles.hpp"

#include "golodlab/golod.hpp"
#include "golodlab/problem.hpp"

using namespace golod;

namespace {

Polynomial P(const char* s, const RingPtr& r) { return parse_polynomial(s, r); }

std::vector<Rational> QV(std::initializer_list<int> xs) {
    std::vector<Rational> out;
    for (int x : xs) out.emplace_back(x);
    return out;
}

std::vector<Polynomial> effective_gens(const ProblemSpec& spec) {
    if (spec.power == 1) return spec.ideal;
    std::vector<Polynomial> out;
    for (const auto& p : ideal_power(spec.ideal, spec.power)) out.push_back(p.poly);
    return out;
}

}  // namespace

TEST_SUITE("golod") {

TEST_CASE("determinants of derivative matrices") {
    RingPtr r = make_ring({1, 1});
    CHECK(jacobian_determinant({P("x^2*y", r)}, {1}) == P("x^2", r));
    CHECK(jacobian_determinant({P("x^2", r), P("y^3", r)}, std::vector<int>{0, 1}) ==
          P("6*x*y^2", r));
    CHECK(jacobian_determinant({P("x*y", r), P("x^2", r)}, std::vector<int>{0, 1}) ==
          P("-2*x^2", r));
    CHECK_THROWS_AS(jacobian_determinant({P("x", r), P("y", r)}, {0}), Error);
    CHECK_THROWS_AS(jacobian_determinant({P("x", r), P("y", r)}, std::vector<int>{1, 0}),
                    Error);
    CHECK_THROWS_AS(jacobian_determinant({P("x", r), P("y", r)}, std::vector<int>{0, 0}),
                    Error);
}

TEST_CASE("the determinant is linear in each entry row") {
    testgen::Rng rng(501);
    RingPtr r = make_ring({1, 1, 1});
    for (int i = 0; i < 200; ++i) {
        int l = rng.uniform(1, 3);
        std::vector<int> pool{0, 1, 2};
        std::shuffle(pool.begin(), pool.end(), rng.engine());
        std::vector<int> vars(pool.begin(), pool.begin() + l);
        std::sort(vars.begin(), vars.end());
        std::vector<Polynomial> entries;
        for (int s = 0; s < l; ++s) entries.push_back(rng.polynomial(r, 3, 2));
        int slot = rng.uniform(0, l - 1);
        Polynomial f = rng.polynomial(r, 3, 2);
        Polynomial g = rng.polynomial(r, 3, 2);
        Rational a = rng.rational(), b = rng.rational();

        auto with = [&](const Polynomial& h) {
            std::vector<Polynomial> e = entries;
            e[static_cast<size_t>(slot)] = h;
            return jacobian_determinant(e, vars);
        };
        Polynomial comb = a * f + b * g;
        CHECK(with(comb) == a * with(f) + b * with(g));
    }
}

TEST_CASE("expanding a product in the last slot") {
    testgen::Rng rng(502);
    for (int i = 0; i < 220; ++i) {
        RingPtr r = rng.ring();
        int n = r->nvars();
        int l = rng.uniform(1, std::min(3, n));
        std::vector<int> pool(static_cast<size_t>(n));
        for (int v = 0; v < n; ++v) pool[static_cast<size_t>(v)] = v;
        std::shuffle(pool.begin(), pool.end(), rng.engine());
        std::vector<int> vars(pool.begin(), pool.begin() + l);
        std::sort(vars.begin(), vars.end());

        std::vector<Polynomial> head;
        for (int s = 0; s < l - 1; ++s) head.push_back(rng.polynomial(r, 2, 2));
        int k = rng.uniform(1, 3);
        std::vector<Polynomial> factors;
        Polynomial prod = Polynomial::constant(r, 1);
        for (int t = 0; t < k; ++t) {
            factors.push_back(rng.nonzero_polynomial(r, 2, 2));
            prod = prod * factors.back();
        }

        std::vector<JacobianSummand> terms = jacobian_product_rule_expand(head, factors, vars);
        REQUIRE(terms.size() == factors.size());
        Polynomial sum(r);
        for (const auto& t : terms) sum += t.jac * t.cofactor;
        std::vector<Polynomial> full = head;
        full.push_back(prod);
        CHECK(sum == jacobian_determinant(full, vars));
    }
}

TEST_CASE("chain tuples walk the resolution ranks") {
    RingPtr r = make_ring({1, 1, 1});
    std::vector<Polynomial> J;
    for (const auto& p : ideal_power({P("x", r), P("y", r), P("z", r)}, 2)) J.push_back(p.poly);
    Resolution res = minimal_free_resolution(r, J);
    REQUIRE(res.length() == 3);
    REQUIRE(res.rank(1) == 6);
    REQUIRE(res.rank(2) == 8);
    REQUIRE(res.rank(3) == 3);

    std::vector<std::vector<int>> c1 = resolution_chains(res, 1);
    REQUIRE(c1.size() == 1);
    CHECK(c1[0].empty());

    std::vector<std::vector<int>> c2 = resolution_chains(res, 2);
    REQUIRE(c2.size() == 6);
    CHECK(c2.front() == std::vector<int>{0});
    CHECK(c2.back() == std::vector<int>{5});

    std::vector<std::vector<int>> c3 = resolution_chains(res, 3);
    REQUIRE(c3.size() == 48);  // 8 * 6, lexicographic
    CHECK((c3.front() == std::vector<int>{0, 0}));
    CHECK((c3[1] == std::vector<int>{0, 1}));
    CHECK((c3.back() == std::vector<int>{7, 5}));
    for (size_t t = 1; t < c3.size(); ++t) CHECK(c3[t - 1] < c3[t]);
}

TEST_CASE("derivative cycles of the squared maximal ideal") {
    RingPtr r = make_ring({1, 1});
    std::vector<Polynomial> I{P("x", r), P("y", r)};
    std::vector<Polynomial> J;
    for (const auto& p : ideal_power(I, 2)) J.push_back(p.poly);
    Resolution res = minimal_free_resolution(r, J);
    QuotientRing R = make_quotient(r, J);

    // level 1: the Euler-type cycles of the three quadric generators
    std::vector<KoszulElement> want1{
        kz_term(R, {0}, P("2*x", r)),
        kz_add(kz_term(R, {0}, P("y", r)), kz_term(R, {1}, P("x", r))),
        kz_term(R, {1}, P("2*y", r)),
    };
    for (int j1 = 0; j1 < 3; ++j1) {
        auto cyc = jacobian_chain_cycle(res, 1, j1, R);
        REQUIRE(cyc.has_value());
        CHECK(cyc->chains.size() == 1);
        CHECK(cyc->coeffs == QV({1}));
        CHECK(kz_equal(cyc->z, want1[static_cast<size_t>(j1)]));
        CHECK(differential(cyc->z).is_zero());
    }

    // level 2: one chain per first-syzygy row, echelon coefficient choice
    auto c20 = jacobian_chain_cycle(res, 2, 0, R);
    REQUIRE(c20.has_value());
    CHECK((c20->chains == std::vector<std::vector<int>>{{0}, {1}, {2}}));
    CHECK(c20->coeffs == QV({1, 0, 0}));
    CHECK(kz_equal(c20->z, kz_term(R, {0, 1}, P("-2*x", r))));

    auto c21 = jacobian_chain_cycle(res, 2, 1, R);
    REQUIRE(c21.has_value());
    CHECK(c21->coeffs == QV({0, 1, 0}));
    CHECK(kz_equal(c21->z, kz_term(R, {0, 1}, P("-y", r))));
}

TEST_CASE("chain cycles across the sample problems") {
    namespace fs = std::filesystem;
    for (const auto& entry : fs::directory_iterator(GOLODLAB_CORPUS_DIR)) {
        if (entry.path().extension() != ".golod") continue;
        ProblemSpec spec = load_problem(entry.path().string());
        if (spec.command.value_or("golod-certify") != "golod-certify") continue;
        CAPTURE(entry.path().filename().string());

        std::vector<Polynomial> J = effective_gens(spec);
        Resolution res = minimal_free_resolution(spec.ring, J);
        QuotientRing R = make_quotient(spec.ring, J);
        for (int level = 1; level <= res.length(); ++level) {
            for (int j1 = 0; j1 < res.rank(level); ++j1) {
                auto cyc = jacobian_chain_cycle(res, level, j1, R);
                REQUIRE(cyc.has_value());
                CHECK(!cyc->z.is_zero());
                CHECK(differential(cyc->z).is_zero());
                // internal degree telescopes to the shift of the chosen row
                std::optional<long> d = kz_degree(cyc->z);
                REQUIRE(d.has_value());
                CHECK(*d == res.shift(level, j1));
                if (spec.power >= 2)
                    CHECK(membership_in_power(cyc->z, spec.ideal, spec.power - 1));
            }
        }
    }
}

TEST_CASE("one independent representative per resolution row") {
    RingPtr r = make_ring({1, 1});
    for (int k : {2, 3}) {
        std::vector<Polynomial> J;
        for (const auto& p : ideal_power({P("x", r), P("y", r)}, k)) J.push_back(p.poly);
        Resolution res = minimal_free_resolution(r, J);
        QuotientRing R = make_quotient(r, J);
        for (int level = 1; level <= res.length(); ++level) {
            HomologyBasis hom = homology_basis(level, R, res);
            LevelRepresentatives lr = level_representatives(res, level, R, hom);
            CHECK(!lr.fallback);
            REQUIRE(static_cast<int>(lr.reps.size()) == res.rank(level));
            REQUIRE(lr.cycles.size() == lr.reps.size());
            for (const auto& z : lr.reps) {
                CHECK(differential(z).is_zero());
                CHECK(!is_boundary(z).is_boundary);
            }
        }
    }
}

TEST_CASE("certificate for the squared maximal ideal") {
    RingPtr r = make_ring({1, 1});
    std::vector<Polynomial> I{P("x", r), P("y", r)};
    GolodCertificate cert = golod_certificate(r, I, 2, 5);

    CHECK(cert.pass);
    CHECK(cert.dims_ok);
    CHECK(cert.class_basis_ok);
    CHECK(cert.membership_ok);
    CHECK(cert.products_ok);
    CHECK(cert.higher_ops_trivial);
    CHECK(cert.series_ok);
    CHECK(!cert.fallback_used);

    REQUIRE(cert.J_gens.size() == 3);
    CHECK((cert.J_gens[0].tuple == std::vector<int>{0, 0}));
    CHECK((cert.J_gens[1].tuple == std::vector<int>{0, 1}));
    CHECK((cert.J_gens[2].tuple == std::vector<int>{1, 1}));
    REQUIRE(cert.witness_products.size() == 2);  // 1-fold products: the generators
    CHECK(cert.witness_products[0].poly == I[0]);

    REQUIRE(cert.classes.size() == 5);
    std::vector<long> degrees;
    for (const auto& cc : cert.classes) degrees.push_back(cc.degree);
    CHECK((degrees == std::vector<long>{2, 2, 2, 3, 3}));
    REQUIRE(cert.quotient != nullptr);
    const QuotientRing& R = *cert.quotient;
    CHECK(kz_equal(cert.classes[0].gamma, kz_term(R, {0}, P("2*x", r))));
    CHECK(kz_equal(cert.classes[3].gamma, kz_term(R, {0, 1}, P("-2*x", r))));
    CHECK(cert.classes[3].chain_coeffs == QV({1, 0, 0}));

    REQUIRE(cert.pairs.size() == 15);  // all unordered pairs of 5 classes
    for (const auto& pc : cert.pairs) {
        CHECK(pc.zero);
        int lsum = cert.classes[static_cast<size_t>(pc.a)].level +
                   cert.classes[static_cast<size_t>(pc.b)].level;
        CHECK(pc.vacuous == (lsum > 2));
    }

    // stored membership witnesses really reconstruct each component mod I^2
    std::vector<Polynomial> Jpolys;
    for (const auto& p : cert.J_gens) Jpolys.push_back(p.poly);
    for (const auto& cc : cert.classes) {
        for (const auto& [mask, f] : cc.gamma.comp) {
            REQUIRE(cc.membership_witness.count(mask) == 1);
            const auto& coeffs = cc.membership_witness.at(mask);
            REQUIRE(coeffs.size() == cert.witness_products.size());
            Polynomial rebuilt(r);
            for (size_t t = 0; t < coeffs.size(); ++t)
                rebuilt += coeffs[t] * cert.witness_products[t].poly;
            CHECK(normal_form(f - rebuilt, cert.J_gb).is_zero());
        }
    }

    std::vector<Int> expect{Int(1), Int(2), Int(4), Int(8), Int(16), Int(32)};
    CHECK(cert.poincare.coeffs == expect);
    CHECK(cert.serre.coeffs == expect);
    CHECK(cert.poincare.complete);
}

TEST_CASE("a cut budget yields an honest failure") {
    RingPtr r = make_ring({1, 1});
    std::vector<Polynomial> I{P("x", r), P("y", r)};
    WorkBudget tiny;
    tiny.limit = 0;
    GolodCertificate cert = golod_certificate(r, I, 2, 5, &tiny);
    CHECK(!cert.pass);
    CHECK(!cert.series_ok);
    CHECK(!cert.poincare.complete);
    CHECK(cert.products_ok);  // the structural checks still ran
    REQUIRE(cert.poincare.coeffs.size() == 2);
    CHECK(cert.poincare.coeffs[0] == 1);
    CHECK(cert.poincare.coeffs[1] == 2);
}

TEST_CASE("certificate input validation") {
    RingPtr r = make_ring({1, 1});
    std::vector<Polynomial> I{P("x", r), P("y", r)};
    CHECK_THROWS_AS(golod_certificate(r, I, 1, 5), InputError);
    CHECK_THROWS_AS(golod_certificate(r, {}, 2, 5), InputError);
    CHECK_THROWS_AS(golod_certificate(r, {Polynomial(r)}, 2, 5), InputError);
    CHECK_THROWS_AS(golod_certificate(r, {P("x + x^2", r)}, 2, 5), InputError);
    CHECK_THROWS_AS(golod_certificate(r, {P("3", r)}, 2, 5), InputError);
}

TEST_CASE("multiplication triviality check") {
    RingPtr r = make_ring({1, 1});

    std::vector<Polynomial> ci{P("x^2", r), P("y^2", r)};
    Resolution res_ci = minimal_free_resolution(r, ci);
    QuotientRing R_ci = make_quotient(r, ci);
    TrivialMultResult bad = trivial_multiplication_check(R_ci, res_ci);
    CHECK(!bad.trivial);
    REQUIRE(bad.left.has_value());
    REQUIRE(bad.right.has_value());
    REQUIRE(bad.product.has_value());
    CHECK(kz_equal(*bad.left, kz_term(R_ci, {0}, P("x", r))));
    CHECK(kz_equal(*bad.right, kz_term(R_ci, {1}, P("y", r))));
    CHECK(kz_equal(*bad.product, kz_term(R_ci, {0, 1}, P("x*y", r))));

    std::vector<Polynomial> J;
    for (const auto& p : ideal_power({P("x", r), P("y", r)}, 2)) J.push_back(p.poly);
    Resolution res_m = minimal_free_resolution(r, J);
    QuotientRing R_m = make_quotient(r, J);
    TrivialMultResult good = trivial_multiplication_check(R_m, res_m);
    CHECK(good.trivial);
    CHECK(!good.left.has_value());
}

}  // TEST_SUITE
