#include "golodlab/report.hpp"

#include <chrono>
#include <set>
#include <sstream>

namespace golod {

const char* const kToolName = "golodlab";
const char* const kToolVersion = "0.1.0";

namespace {

Json ring_to_json(const RingSpec& ring) {
    Json j;
    j["variables"] = ring.names();
    j["weights"] = ring.weights();
    return j;
}

Json int_list(const std::vector<Int>& v) {
    Json j = Json::array();
    for (const auto& x : v) j.push_back(x.get_str());
    return j;
}

Json rational_list(const std::vector<Rational>& v) {
    Json j = Json::array();
    for (const auto& x : v) j.push_back(x.get_str());
    return j;
}

Json poly_list(const std::vector<Polynomial>& v) {
    Json j = Json::array();
    for (const auto& f : v) j.push_back(to_string(f));
    return j;
}

Json products_to_json(const std::vector<PowerProduct>& ps) {
    Json j = Json::array();
    for (const auto& p : ps) j.push_back(Json{{"tuple", p.tuple}, {"poly", to_string(p.poly)}});
    return j;
}

Json homology_dims_to_json(const std::map<std::pair<int, long>, int>& dims) {
    Json j = Json::array();
    for (const auto& [key, dim] : dims)
        j.push_back(Json{{"level", key.first}, {"degree", key.second}, {"dim", dim}});
    return j;
}

}  // namespace

Json polynomial_to_json(const Polynomial& f) { return to_string(f); }

Json koszul_element_to_json(const KoszulElement& z) {
    Json terms = Json::array();
    for (const auto& [m, f] : z.comp)
        terms.push_back(Json{{"vars", mask_indices(m)}, {"poly", to_string(f)}});
    return Json{{"level", z.level}, {"terms", std::move(terms)}};
}

Json series_to_json(const SeriesTruncation& s) {
    return Json{{"label", s.label}, {"coeffs", int_list(s.coeffs)}, {"complete", s.complete}};
}

Json resolution_to_json(const Resolution& res) {
    Json modules = Json::array();
    for (const auto& m : res.modules)
        modules.push_back(Json{{"rank", m.rank()}, {"shifts", m.shifts}});
    Json maps = Json::array();
    for (const auto& cm : res.maps) {
        Json rows = Json::array();
        for (const auto& row : cm.rows) rows.push_back(poly_list(row.comp));
        maps.push_back(std::move(rows));
    }
    return Json{{"length", res.length()},
                {"ideal", poly_list(res.ideal_gens)},
                {"modules", std::move(modules)},
                {"maps", std::move(maps)}};
}

Json betti_to_json(const BettiTable& betti) {
    Json j = Json::array();
    for (const auto& [key, count] : betti)
        j.push_back(Json{{"level", key.first}, {"degree", key.second}, {"count", count}});
    return j;
}

Json certificate_to_json(const GolodCertificate& cert) {
    Json j;
    j["ring"] = ring_to_json(*cert.ring);
    j["ideal"] = poly_list(cert.I_gens);
    j["power"] = cert.k;
    j["truncation"] = cert.truncation;
    j["power_generators"] = products_to_json(cert.J_gens);
    Json gb = Json::array();
    for (const auto& e : cert.J_gb.elems) gb.push_back(to_string(e.comp[0]));
    j["quotient_groebner"] = std::move(gb);
    j["witness_products"] = products_to_json(cert.witness_products);
    j["betti"] = betti_to_json(cert.betti);
    j["homology_dims"] = homology_dims_to_json(cert.homology_dims);

    Json classes = Json::array();
    for (const auto& cc : cert.classes) {
        Json c;
        c["level"] = cc.level;
        c["index"] = cc.index;
        c["degree"] = cc.degree;
        c["construction"] = cc.fallback ? "fallback" : "jacobian";
        if (!cc.fallback) {
            c["chains"] = cc.chains;
            c["chain_coefficients"] = rational_list(cc.chain_coeffs);
        }
        c["cycle"] = koszul_element_to_json(cc.gamma);
        Json wit = Json::array();
        for (const auto& [m, coeffs] : cc.membership_witness)
            wit.push_back(Json{{"vars", mask_indices(m)}, {"coefficients", poly_list(coeffs)}});
        c["membership_witness"] = std::move(wit);
        classes.push_back(std::move(c));
    }
    j["classes"] = std::move(classes);

    Json pairs = Json::array();
    for (const auto& pc : cert.pairs)
        pairs.push_back(
            Json{{"a", pc.a}, {"b", pc.b}, {"zero", pc.zero}, {"vacuous", pc.vacuous}});
    j["pairs"] = std::move(pairs);

    j["checks"] = Json{{"homology_dims_match_betti", cert.dims_ok},
                       {"class_basis", cert.class_basis_ok},
                       {"power_membership", cert.membership_ok},
                       {"products_vanish", cert.products_ok},
                       {"higher_operations_vanish", cert.higher_ops_trivial},
                       {"fallback_used", cert.fallback_used},
                       {"series_match", cert.series_ok}};
    j["poincare"] = series_to_json(cert.poincare);
    j["serre_bound"] = series_to_json(cert.serre);
    j["verdict"] = cert.pass ? "pass" : "fail";
    return j;
}

namespace {

Json input_to_json(const ProblemSpec& spec, int truncate) {
    Json j;
    j["ring"] = ring_to_json(*spec.ring);
    j["ideal"] = poly_list(spec.ideal);
    j["power"] = spec.power;
    j["truncate"] = truncate;
    return j;
}

// The effective quotient ideal: the input generators themselves for power 1,
// otherwise a minimal generating set of their power.
std::vector<Polynomial> effective_ideal(const ProblemSpec& spec) {
    if (spec.power == 1) return spec.ideal;
    std::vector<Polynomial> out;
    for (const auto& p : ideal_power(spec.ideal, spec.power)) out.push_back(p.poly);
    return out;
}

std::string series_line(const SeriesTruncation& s) {
    std::ostringstream os;
    os << s.label << ":";
    for (const auto& c : s.coeffs) os << " " << c.get_str();
    if (!s.complete) os << " (cut short by the work budget)";
    return os.str();
}

}  // namespace

RunResult run_command(const ProblemSpec& spec, const RunOptions& opt) {
    auto t0 = std::chrono::steady_clock::now();
    WorkBudget budget;
    budget.limit = opt.step_budget;
    WorkBudget* bp = opt.step_budget >= 0 ? &budget : nullptr;

    RunResult out;
    Json canonical;
    canonical["input"] = input_to_json(spec, opt.truncate);
    std::ostringstream summary;

    if (opt.command == "resolve") {
        std::vector<Polynomial> J = effective_ideal(spec);
        Resolution res = minimal_free_resolution(spec.ring, J);
        ResolutionCheck check = verify_resolution(res);
        canonical["resolution"] = resolution_to_json(res);
        canonical["betti"] = betti_to_json(betti_table(res));
        canonical["check"] = Json{{"pass", check.pass}, {"failures", check.failures}};
        summary << "minimal free resolution, length " << res.length() << ", ranks";
        for (int i = 0; i <= res.length(); ++i) summary << " " << res.rank(i);
        summary << "\n";
        if (!check.pass) {
            summary << "resolution check FAILED\n";
            out.exit_code = 1;
        }
    } else if (opt.command == "koszul") {
        std::vector<Polynomial> J = effective_ideal(spec);
        Resolution res = minimal_free_resolution(spec.ring, J);
        QuotientRing R = make_quotient(spec.ring, J);
        std::optional<long> scan_limit;
        if (opt.full_degree_scan) {
            long top = 0;
            for (const auto& m : res.modules)
                for (long s : m.shifts) top = std::max(top, s);
            scan_limit = top;
        }
        Json levels = Json::array();
        for (int level = 1; level <= res.length(); ++level) {
            HomologyBasis h = homology_basis(level, R, res, scan_limit);
            Json degrees = Json::array();
            summary << "H_" << level << ":";
            for (const auto& [d, reps] : h.reps) {
                Json cls = Json::array();
                for (const auto& r : reps) cls.push_back(koszul_element_to_json(r));
                degrees.push_back(
                    Json{{"degree", d}, {"dim", reps.size()}, {"classes", std::move(cls)}});
                summary << " dim " << reps.size() << " in degree " << d << ";";
            }
            summary << " total " << h.total_dim() << "\n";
            levels.push_back(Json{{"level", level}, {"degrees", std::move(degrees)}});
        }
        canonical["betti"] = betti_to_json(betti_table(res));
        canonical["homology"] = std::move(levels);
        canonical["dims_match_betti"] = true;  // homology_basis rejects mismatches
        canonical["full_degree_scan"] = opt.full_degree_scan;
    } else if (opt.command == "golod-certify") {
        GolodCertificate cert =
            golod_certificate(spec.ring, spec.ideal, spec.power, opt.truncate, bp);
        canonical["certificate"] = certificate_to_json(cert);
        summary << "power: " << cert.k << ", classes: " << cert.classes.size()
                << ", pairwise products: " << cert.pairs.size() << "\n";
        summary << series_line(cert.poincare) << "\n" << series_line(cert.serre) << "\n";
        summary << "verdict: " << (cert.pass ? "pass" : "fail") << "\n";
        out.exit_code = cert.pass ? 0 : 1;
    } else if (opt.command == "poincare") {
        std::vector<Polynomial> J = effective_ideal(spec);
        Resolution res = minimal_free_resolution(spec.ring, J);
        QuotientRing R = make_quotient(spec.ring, J);
        SeriesTruncation p = poincare_truncation(R, opt.truncate, bp);
        SeriesTruncation s = serre_bound_series(R, res, opt.truncate);
        SeriesComparison cmp = compare_series(p, s);
        canonical["poincare"] = series_to_json(p);
        canonical["serre_bound"] = series_to_json(s);
        canonical["equal"] = cmp.equal;
        canonical["first_difference"] = cmp.equal ? Json(nullptr) : Json(cmp.first_difference);
        summary << series_line(p) << "\n" << series_line(s) << "\n";
        if (cmp.equal)
            summary << "series agree to order " << p.order() << "\n";
        else
            summary << "first difference at t^" << cmp.first_difference << "\n";
    } else {
        throw InputError("unknown command: " + opt.command);
    }

    double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    out.report["schema"] = kSchemaVersion;
    out.report["tool"] = Json{{"name", kToolName}, {"version", kToolVersion}};
    out.report["command"] = opt.command;
    out.report["canonical"] = std::move(canonical);
    out.report["timing"] = Json{{"seconds", seconds}};
    out.summary = summary.str();
    return out;
}

namespace {

// Shared state for the re-verification: everything rebuilt from the stored
// document, never from a fresh pipeline run.
struct VerifyContext {
    RingPtr ring;
    QuotientRing R;
    std::vector<Polynomial> ideal;
    int k = 0;
    std::vector<Polynomial> witness_polys;
};

void fail(VerifyResult& vr, const std::string& msg) {
    vr.pass = false;
    vr.failures.push_back(msg);
}

Polynomial parse_or_throw(const Json& j, const RingPtr& ring) {
    return parse_polynomial(j.get<std::string>(), ring);
}

KoszulElement element_from_json(const Json& j, const QuotientRing& R) {
    int level = j.at("level").get<int>();
    KoszulElement z = kz_zero(R, level);
    for (const auto& t : j.at("terms")) {
        std::vector<int> vars = t.at("vars").get<std::vector<int>>();
        if (static_cast<int>(vars.size()) != level)
            throw InputError("stored term does not match the element level");
        z = kz_add(z, kz_term(R, vars, parse_or_throw(t.at("poly"), R.ring)));
    }
    return z;
}

}  // namespace

VerifyResult verify_certificate_json(const Json& cert) {
    VerifyResult vr;
    VerifyContext cx;
    try {
        const Json& ring_j = cert.at("ring");
        cx.ring = make_ring(ring_j.at("weights").get<std::vector<long>>(),
                            ring_j.at("variables").get<std::vector<std::string>>());
        for (const auto& g : cert.at("ideal")) cx.ideal.push_back(parse_or_throw(g, cx.ring));
        cx.k = cert.at("power").get<int>();
        if (cx.k < 2) {
            fail(vr, "stored power is below 2");
            return vr;
        }

        // The stored basis is taken at face value as the normal-form oracle;
        // the only structural check is that it is monic and homogeneous.
        GroebnerBasis gb;
        gb.ring = cx.ring;
        gb.rank = 1;
        for (const auto& s : cert.at("quotient_groebner")) {
            Polynomial f = parse_or_throw(s, cx.ring);
            if (f.is_zero() || f.leading().coef != 1)
                fail(vr, "stored basis element is zero or not monic: " + s.get<std::string>());
            if (!homogeneity(f).is_homogeneous())
                fail(vr, "stored basis element is not homogeneous: " + s.get<std::string>());
            gb.elems.push_back(ModuleVector{{std::move(f)}});
        }
        cx.R = QuotientRing{cx.ring, std::move(gb)};

        // Stored products must multiply out from the ideal generators, and
        // the power generators must vanish in the quotient.
        auto check_products = [&](const Json& list, int expected_len, const char* what,
                                  std::vector<Polynomial>* keep) {
            for (const auto& p : list) {
                std::vector<int> tuple = p.at("tuple").get<std::vector<int>>();
                Polynomial stored = parse_or_throw(p.at("poly"), cx.ring);
                if (static_cast<int>(tuple.size()) != expected_len)
                    fail(vr, std::string(what) + ": tuple length is not " +
                                 std::to_string(expected_len));
                Polynomial prod = Polynomial::constant(cx.ring, 1);
                for (int t : tuple) {
                    if (t < 0 || t >= static_cast<int>(cx.ideal.size())) {
                        fail(vr, std::string(what) + ": tuple index out of range");
                        prod = Polynomial(cx.ring);
                        break;
                    }
                    prod = prod * cx.ideal[static_cast<size_t>(t)];
                }
                if (prod != stored)
                    fail(vr, std::string(what) + ": stored polynomial is not the product of its tuple");
                if (keep) keep->push_back(std::move(stored));
            }
        };
        check_products(cert.at("power_generators"), cx.k, "power generator", nullptr);
        check_products(cert.at("witness_products"), cx.k - 1, "witness product",
                       &cx.witness_polys);
        for (const auto& p : cert.at("power_generators")) {
            Polynomial f = parse_or_throw(p.at("poly"), cx.ring);
            if (!normal_form(f, cx.R.J).is_zero())
                fail(vr, "power generator does not reduce to zero in the quotient");
        }

        // Classes: cycle condition, degree, membership through the witness.
        std::vector<KoszulElement> gammas;
        std::vector<int> levels;
        int n = cx.ring->nvars();
        for (const auto& c : cert.at("classes")) {
            int idx = static_cast<int>(gammas.size());
            KoszulElement z = element_from_json(c.at("cycle"), cx.R);
            if (z.is_zero())
                fail(vr, "class " + std::to_string(idx) + ": stored cycle is zero");
            if (!differential(z).is_zero())
                fail(vr, "class " + std::to_string(idx) + ": not a cycle");
            std::optional<long> d = kz_degree(z);
            if (!d || *d != c.at("degree").get<long>())
                fail(vr, "class " + std::to_string(idx) + ": stored degree is wrong");

            std::map<Mask, std::vector<Polynomial>> witness;
            for (const auto& w : c.at("membership_witness")) {
                Mask m = mask_from_indices(w.at("vars").get<std::vector<int>>(), n);
                std::vector<Polynomial> coeffs;
                for (const auto& s : w.at("coefficients"))
                    coeffs.push_back(parse_or_throw(s, cx.ring));
                witness.emplace(m, std::move(coeffs));
            }
            for (const auto& [m, f] : z.comp) {
                auto it = witness.find(m);
                if (it == witness.end() || it->second.size() != cx.witness_polys.size()) {
                    fail(vr, "class " + std::to_string(idx) + ": membership witness missing");
                    continue;
                }
                Polynomial diff = f;
                for (size_t t = 0; t < cx.witness_polys.size(); ++t)
                    diff -= it->second[t] * cx.witness_polys[t];
                if (!normal_form(diff, cx.R.J).is_zero())
                    fail(vr, "class " + std::to_string(idx) +
                                 ": component is not a combination of the witness products");
            }
            levels.push_back(c.at("level").get<int>());
            gammas.push_back(std::move(z));
        }

        // Pairs: full coverage, every product literally zero under wedge.
        std::set<std::pair<int, int>> seen;
        for (const auto& p : cert.at("pairs")) {
            int a = p.at("a").get<int>(), b = p.at("b").get<int>();
            if (a < 0 || b < a || b >= static_cast<int>(gammas.size())) {
                fail(vr, "pair indices out of range");
                continue;
            }
            if (!seen.insert({a, b}).second) fail(vr, "duplicate pair");
            KoszulElement w = wedge(gammas[static_cast<size_t>(a)], gammas[static_cast<size_t>(b)]);
            bool zero = w.is_zero();
            if (zero != p.at("zero").get<bool>())
                fail(vr, "pair (" + std::to_string(a) + "," + std::to_string(b) +
                             "): stored product flag does not match the wedge");
            if (!zero)
                fail(vr, "pair (" + std::to_string(a) + "," + std::to_string(b) +
                             "): product is not zero");
            bool vac = levels[static_cast<size_t>(a)] + levels[static_cast<size_t>(b)] > n;
            if (vac != p.at("vacuous").get<bool>())
                fail(vr, "pair (" + std::to_string(a) + "," + std::to_string(b) +
                             "): vacuity flag is wrong");
        }
        int nc = static_cast<int>(gammas.size());
        if (static_cast<int>(seen.size()) != nc * (nc + 1) / 2)
            fail(vr, "pair list does not cover every unordered pair");

        // Series: the stored lists must agree coefficientwise and be complete.
        const Json& pj = cert.at("poincare");
        const Json& sj = cert.at("serre_bound");
        if (pj.at("coeffs") != sj.at("coeffs"))
            fail(vr, "stored series disagree");
        if (!pj.at("complete").get<bool>())
            fail(vr, "stored numerator series is incomplete");
        int N = cert.at("truncation").get<int>();
        if (static_cast<int>(pj.at("coeffs").size()) != N + 1)
            fail(vr, "stored series length does not match the truncation order");

        if (cert.at("verdict").get<std::string>() != "pass")
            fail(vr, "stored verdict is fail");
        const Json& checks = cert.at("checks");
        for (const char* key : {"homology_dims_match_betti", "class_basis", "power_membership",
                                "products_vanish", "higher_operations_vanish", "series_match"})
            if (!checks.at(key).get<bool>())
                fail(vr, std::string("stored check flag is false: ") + key);
    } catch (const Json::exception& e) {
        fail(vr, std::string("malformed certificate document: ") + e.what());
    } catch (const Error& e) {
        fail(vr, std::string("certificate data rejected: ") + e.what());
    }
    return vr;
}

}  // namespace golod
