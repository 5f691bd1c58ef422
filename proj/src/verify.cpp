#include "cpar/verify.hpp"

#include <chrono>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "cpar/algebra.hpp"
#include "cpar/characters.hpp"
#include "cpar/fixtures.hpp"
#include "cpar/groupoid.hpp"
#include "cpar/modules_rep.hpp"
#include "cpar/ribbon.hpp"
#include "cpar/rs.hpp"

namespace cpar {

namespace {

CriterionResult start(int id, const std::string& name) {
    CriterionResult r;
    r.id = id;
    r.name = name;
    return r;
}

std::string label(const SetBlock& b) {
    std::string s = "{";
    for (size_t i = 0; i < b.size(); ++i) s += (i ? "," : "") + std::to_string(b[i]);
    return s + "}";
}

fixtures::Grid grid_of(const Tableau& t) {
    fixtures::Grid g;
    for (const auto& row : t) {
        std::vector<std::string> out;
        for (const auto& c : row) out.push_back(label(c));
        g.push_back(std::move(out));
    }
    return g;
}

std::vector<std::string> row_of(const std::vector<SetBlock>& row) {
    std::vector<std::string> out;
    for (const auto& c : row) out.push_back(label(c));
    return out;
}

// S(n, j) by the triangle recurrence
std::vector<Integer> stirling_row(int n) {
    std::vector<std::vector<Integer>> s(n + 1, std::vector<Integer>(n + 1, 0));
    s[0][0] = 1;
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= i; ++j) s[i][j] = s[i - 1][j - 1] + Integer(j) * s[i - 1][j];
    return s[n];
}

Integer stirling_sum(int n, int r) {
    Integer total = 0, pw = 1;
    auto row = stirling_row(n);
    for (int j = 0; j <= n; ++j) {
        total += row[j] * pw;
        pw *= r;
    }
    return total;
}

CriterionResult composition_example() {
    CriterionResult res = start(1, "composition worked example");
    auto ex = fixtures::composition();
    Composite c = compose(ex.d1, ex.d2);
    const bool diagram = c.d == ex.expected;
    const bool mono = c.m == ex.monomial;
    res.pass = diagram && mono;
    std::ostringstream os;
    os << "monomial " << (mono ? "x2*x3^2" : "differs") << ", diagram " << (diagram ? "equal" : "differs")
       << "; drawn label on {3,4} is zeta^" << ex.drawn_color_34 << ", composition keeps zeta^1 from d1";
    res.detail = os.str();
    return res;
}

CriterionResult counting() {
    CriterionResult res = start(2, "counting");
    std::ostringstream os;
    bool ok = true;
    for (auto [k, r] : std::vector<std::pair<int, int>>{{1, 1}, {1, 2}, {1, 3}, {2, 2}, {2, 3}, {3, 2}}) {
        const Integer B = count_bell(2 * k, r);
        const Integer n = static_cast<long>(enumerate_monoid(k, r).size());
        const Integer st = stirling_sum(2 * k, r);
        if (B != n || B != st) ok = false;
        os << "(" << k << "," << r << ")=" << n.get_str() << " ";
    }
    for (int r = 1; r <= 4; ++r) {
        auto egf = egf_coefficients(r, 10);
        for (int k = 0; k <= 10; ++k)
            if (egf[k] != count_bell(k, r) || egf[k] != stirling_sum(k, r)) ok = false;
    }
    os << "egf k<=10 r<=4 checked";
    res.pass = ok;
    res.detail = os.str();
    return res;
}

CriterionResult presentation() {
    CriterionResult res = start(3, "presentation");
    bool ok = true;
    int instances = 0;
    std::string first;
    for (int k = 1; k <= 4; ++k)
        for (int r = 1; r <= 4; ++r) {
            auto rep = check_presentation(k, r);
            instances += rep.instances;
            if (!rep.ok()) {
                ok = false;
                if (first.empty())
                    first = "relation " + std::to_string(rep.failures[0].relation) + " at k=" + std::to_string(k) +
                            " r=" + std::to_string(r);
            }
        }
    std::ostringstream os;
    os << instances << " relation instances";
    for (auto [k, r] : std::vector<std::pair<int, int>>{{2, 3}, {3, 2}}) {
        auto cl = generated_closure(k, r);
        std::set<Diagram> a(cl.begin(), cl.end());
        auto all = enumerate_monoid(k, r);
        std::set<Diagram> b(all.begin(), all.end());
        if (a != b) ok = false;
        os << ", closure(" << k << "," << r << ")=" << a.size();
    }
    if (!first.empty()) os << "; first failure " << first;
    res.pass = ok;
    res.detail = os.str();
    return res;
}

CriterionResult psi_criterion(const VerifyConfig& cfg) {
    CriterionResult res = start(4, "groupoid isomorphism");
    bool ok = true;
    std::ostringstream os;
    for (int r = 1; r <= 3; ++r) {
        auto rep = psi_hom_check(cfg.psi_samples, 4, r, cfg.seed);
        if (!rep.ok()) {
            ok = false;
            os << "r=" << r << " homomorphism failures " << rep.failures << "; ";
        }
    }
    auto ex = fixtures::psi();
    const bool fig = psi(ex.d) == ex.image;
    ok = ok && fig;
    os << "8-term image " << (fig ? "equal" : "differs");
    int dims = 0;
    for (int r = 1; r <= 3; ++r)
        for (int k = 0; k <= 3; ++k)
            for (int l = k; l <= 3; ++l) {
                auto d = psi_dimension_check(k, l, r);
                ++dims;
                if (d.colored != d.groupoid || d.rank != d.colored) {
                    ok = false;
                    os << "; dimension mismatch at k=" << k << " l=" << l << " r=" << r;
                }
            }
    os << "; " << dims << " hom-spaces";
    res.pass = ok;
    res.detail = os.str();
    return res;
}

CriterionResult triangular() {
    CriterionResult res = start(5, "triangular factorization");
    const int k = 3, r = 2;
    bool ok = true;
    long n = 0;
    for_each_diagram(r, k, k, [&](const Diagram& d) {
        ++n;
        Triangular t = factor_triangular(d);
        if (!is_normal_upward(t.up) || !is_colored_permutation(t.perm) || !is_normal_downward(t.down)) ok = false;
        if (mul(mul(t.up, t.perm), t.down) != d) ok = false;
    });
    // Uniqueness: products over all admissible triples are pairwise distinct and cover the monoid.
    std::set<Diagram> seen;
    long triples = 0;
    for (int m = 0; m <= k; ++m) {
        std::vector<Diagram> ups, perms, downs;
        for_each_diagram(r, k, m, [&](const Diagram& d) {
            if (is_normal_upward(d)) ups.push_back(d);
        });
        for_each_diagram(r, m, m, [&](const Diagram& d) {
            if (is_colored_permutation(d)) perms.push_back(d);
        });
        for_each_diagram(r, m, k, [&](const Diagram& d) {
            if (is_normal_downward(d)) downs.push_back(d);
        });
        for (const auto& u : ups)
            for (const auto& p : perms) {
                Diagram up = mul(u, p);
                for (const auto& w : downs) {
                    ++triples;
                    seen.insert(mul(up, w));
                }
            }
    }
    if (static_cast<long>(seen.size()) != triples || triples != n) ok = false;
    auto ex = fixtures::triangular();
    Triangular t = factor_triangular(ex.d);
    const bool fig = t.up == ex.up && t.perm == ex.perm && t.down == ex.down;
    ok = ok && fig;
    std::ostringstream os;
    os << n << " diagrams, " << triples << " triples, " << seen.size() << " distinct products; example "
       << (fig ? "equal" : "differs");
    res.pass = ok;
    res.detail = os.str();
    return res;
}

CriterionResult rs_criterion() {
    CriterionResult res = start(6, "RS bijection");
    bool ok = true;
    long n = 0, bad = 0;
    for (auto [k, r] : std::vector<std::pair<int, int>>{{1, 1}, {2, 1}, {3, 1}, {1, 2}, {2, 2}, {3, 2}, {1, 3}, {2, 3}})
        for_each_diagram(r, k, k, [&](const Diagram& d) {
            ++n;
            if (rs_inverse(rs_forward(d), k, r) != d) ++bad;
        });
    if (bad) ok = false;
    Diagram d = fixtures::rs_diagram();
    auto x = rs_forward(d);
    auto e = fixtures::rs_expected();
    bool fig = x.P.size() == 5 && x.Q.size() == 5;
    for (int c = 0; fig && c < 5; ++c)
        fig = grid_of(x.P[c]) == e.P[c] && grid_of(x.Q[c]) == e.Q[c] && row_of(x.S[c]) == e.S[c] &&
              row_of(x.T[c]) == e.T[c];
    fig = fig && rs_inverse(x, 11, 5) == d;
    ok = ok && fig;
    std::ostringstream os;
    os << n << " roundtrips, " << bad << " failures; example " << (fig ? "equal" : "differs");
    res.pass = ok;
    res.detail = os.str();
    return res;
}

struct SWSteps {
    std::vector<fixtures::Grid> P, Q;
    fixtures::Grid S, T;
};

SWSteps sw_steps(const Diagram& d, RibbonOrder order) {
    SWSteps out;
    const int r = d.r();
    RibbonTableau P{r, {}}, Q{r, {}};
    Shape s;
    for (const auto& col : colored_array(d)) {
        P = insert(P, col.color, col.bot, order);
        Shape ns = P.shape();
        Q.entries.push_back({col.top, skew(ns, s)});
        s = ns;
        out.P.push_back(P.grid());
        out.Q.push_back(Q.grid());
    }
    SWPair x = sw_forward_diagram(d, order);
    out.S = x.S.grid();
    out.T = x.T.grid();
    return out;
}

std::string compare_steps(const SWSteps& got, const fixtures::SWExpected& e) {
    std::string diff;
    auto note = [&](const std::string& what) { diff += (diff.empty() ? "" : ",") + what; };
    for (size_t j = 0; j < e.P.size(); ++j) {
        if (j >= got.P.size() || got.P[j] != e.P[j]) note("P" + std::to_string(j));
        if (j >= got.Q.size() || got.Q[j] != e.Q[j]) note("Q" + std::to_string(j));
    }
    if (got.S != e.S) note("S");
    if (got.T != e.T) note("T");
    return diff;
}

CriterionResult sw_criterion() {
    CriterionResult res = start(7, "SW bijection");
    auto e = fixtures::sw_expected();
    Diagram d = fixtures::rs_diagram();
    const std::string ne = compare_steps(sw_steps(d, RibbonOrder::NorthEast), e);
    const std::string sw = compare_steps(sw_steps(d, RibbonOrder::SouthWest), e);
    bool inj = true;
    std::ostringstream os;
    for (int r = 1; r <= 3; ++r)
        for (int n = 1; n <= 4; ++n) {
            std::set<std::pair<RibbonTableau, RibbonTableau>> img;
            long count = 0;
            std::vector<int> s(n);
            std::iota(s.begin(), s.end(), 1);
            do {
                std::vector<int> c(n, 0);
                while (true) {
                    auto g = sw_forward_group(c, s, r);
                    img.insert({g.P, g.Q});
                    ++count;
                    int i = 0;
                    while (i < n && ++c[i] == r) c[i++] = 0;
                    if (i == n) break;
                }
            } while (std::next_permutation(s.begin(), s.end()));
            if (static_cast<long>(img.size()) != count) inj = false;
        }
    for (auto [k, r] : std::vector<std::pair<int, int>>{{1, 1}, {2, 1}, {1, 2}, {2, 2}}) {
        std::set<SWPair> img;
        for_each_diagram(r, k, k, [&](const Diagram& x) { img.insert(sw_forward_diagram(x)); });
        if (Integer(static_cast<long>(img.size())) != count_bell(2 * k, r)) inj = false;
    }
    res.pass = inj && ne.empty();
    os << "injectivity and image counts " << (inj ? "hold" : "fail") << "; example differs at "
       << (ne.empty() ? "nothing" : ne) << "; mirrored candidate choice differs at " << (sw.empty() ? "nothing" : sw)
       << " and is not injective";
    res.detail = os.str();
    return res;
}

CriterionResult green() {
    CriterionResult res = start(8, "Green's relations");
    bool ok = true;
    long pairs = 0, mism = 0;
    for (auto [k, r] : std::vector<std::pair<int, int>>{{2, 2}, {1, 3}}) {
        auto el = enumerate_monoid(k, r);
        for (Green g : {Green::L, Green::R, Green::J}) {
            auto cls = green_classes(el, g);
            for (size_t i = 0; i < el.size(); ++i)
                for (size_t j = 0; j < el.size(); ++j) {
                    ++pairs;
                    if ((cls[i] == cls[j]) != green_characterize(el[i], el[j], g)) ++mism;
                }
        }
    }
    if (mism) ok = false;
    res.pass = ok;
    res.detail = std::to_string(pairs) + " pairs, " + std::to_string(mism) + " mismatches";
    return res;
}

CriterionResult formula() {
    CriterionResult res = start(9, "coefficient identity");
    auto ex = fixtures::coefficient();
    auto fc = theorem_formula_check(ex.lambda, ex.mu, ex.nu);
    bool ok = fc.equal && fc.lhs == 1 && fc.rhs == 1;
    long tot = 0, bad = 0;
    for (int a = 0; a <= 2; ++a)
        for (int b = 0; b <= 2; ++b)
            for (int c = 0; c <= 2; ++c)
                for (auto& x : multipartitions(2, a))
                    for (auto& y : multipartitions(2, b))
                        for (auto& z : multipartitions(2, c)) {
                            ++tot;
                            if (!theorem_formula_check(x, y, z).equal) ++bad;
                        }
    if (bad) ok = false;
    std::ostringstream os;
    os << "example lhs=" << fc.lhs << " rhs=" << fc.rhs << "; " << tot << " triples, " << bad << " disagreements";
    res.pass = ok;
    res.detail = os.str();
    return res;
}

CriterionResult multiplicity() {
    CriterionResult res = start(10, "permutation module multiplicities");
    long tot = 0, bad = 0;
    for (int l = 0; l <= 2; ++l)
        for (int m = 0; m <= 2; ++m)
            for (int n = 0; n <= 2; ++n)
                for (auto ad : admissible_set(l, m, n))
                    for (auto& x : multipartitions(2, l))
                        for (auto& y : multipartitions(2, m))
                            for (auto& z : multipartitions(2, n)) {
                                ++tot;
                                if (xt_multiplicity_oracle(l, m, n, ad.t, x, y, z) != xt_formula(ad.t, x, y, z)) ++bad;
                            }
    res.pass = bad == 0 && tot > 0;
    res.detail = std::to_string(tot) + " cases, " + std::to_string(bad) + " disagreements";
    return res;
}

CriterionResult cartan() {
    CriterionResult res = start(11, "Cartan matrix");
    auto chk = cartan_tensor_check(2, 2);
    const long long b = cartan_entry({{1}, {}}, {{}, {}}, 2);
    res.pass = chk.ok() && b == 1;
    std::ostringstream os;
    os << "unitriangular " << (chk.unitriangular ? "yes" : "no") << ", tensor " << (chk.tensor ? "yes" : "no")
       << ", B[((1),()),((),())]=" << b;
    if (!chk.first_failure.empty()) os << "; " << chk.first_failure;
    res.detail = os.str();
    return res;
}

CriterionResult semisimplicity() {
    CriterionResult res = start(12, "semisimplicity");
    const int r2 = 2;
    auto y = [&](int i) { return MPoly::var(r2, i); };
    bool ok = true;
    std::ostringstream os;
    auto g0 = gram_matrix(1, {{}, {}}, r2).G;
    auto g1 = gram_matrix(1, {{1}, {}}, r2).G;
    auto g2 = gram_matrix(1, {{}, {1}}, r2).G;
    const PolyMatrix want0 = {{y(0), y(1)}, {y(1), y(0)}};
    const PolyMatrix one = {{MPoly::constant(r2, 1)}};
    const bool k1 = g0 == want0 && g1 == one && g2 == one;
    ok = ok && k1;
    os << "k=1 r=2 Gram data " << (k1 ? "equal" : "differs");
    int lead_bad = 0, lead_tot = 0;
    for (int r = 1; r <= 3; ++r)
        for (int k = 1; k <= 2; ++k) {
            Integer sum = 0;
            for (int i = 0; i <= k; ++i) {
                const long cross = static_cast<long>(enumerate_cross_section(k, i, r).size());
                for (const auto& lam : multipartitions(r, i)) {
                    ++lead_tot;
                    auto [deg, coef] = gram_det(k, lam, r).leading_coeff_in(0);
                    (void)deg;
                    if (coef != MPoly::constant(r, 1)) ++lead_bad;
                    Integer d = Integer(cross) * MatrixRep::get(lam, r).dim();
                    sum += d * d;
                }
            }
            if (sum != count_bell(2 * k, r)) {
                ok = false;
                os << "; dimension identity fails at k=" << k << " r=" << r;
            }
        }
    if (lead_bad) ok = false;
    os << "; leading coefficient 1 for " << (lead_tot - lead_bad) << "/" << lead_tot;
    auto at = [&](long a, long b) {
        return semisimplicity_certificate(1, r2, {Cyc(r2, a), Cyc(r2, b)});
    };
    const bool s21 = at(2, 1).semisimple, s11 = at(1, 1).semisimple;
    if (!s21 || s11) ok = false;
    os << "; x=(2,1) " << (s21 ? "semisimple" : "not semisimple") << ", x=(1,1) "
       << (s11 ? "semisimple" : "not semisimple");
    res.pass = ok;
    res.detail = os.str();
    return res;
}

}  // namespace

std::vector<int> criterion_ids() {
    std::vector<int> ids(12);
    std::iota(ids.begin(), ids.end(), 1);
    return ids;
}

CriterionResult run_criterion(int id, const VerifyConfig& cfg) {
    const auto t0 = std::chrono::steady_clock::now();
    CriterionResult res;
    try {
        switch (id) {
            case 1: res = composition_example(); break;
            case 2: res = counting(); break;
            case 3: res = presentation(); break;
            case 4: res = psi_criterion(cfg); break;
            case 5: res = triangular(); break;
            case 6: res = rs_criterion(); break;
            case 7: res = sw_criterion(); break;
            case 8: res = green(); break;
            case 9: res = formula(); break;
            case 10: res = multiplicity(); break;
            case 11: res = cartan(); break;
            case 12: res = semisimplicity(); break;
            default: throw std::out_of_range("unknown criterion " + std::to_string(id));
        }
    } catch (const std::out_of_range&) {
        throw;
    } catch (const std::exception& e) {
        res.id = id;
        res.pass = false;
        res.detail = std::string("exception: ") + e.what();
    }
    res.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return res;
}

std::vector<CriterionResult> run_all(const VerifyConfig& cfg, const std::function<void(const CriterionResult&)>& on_result) {
    std::vector<CriterionResult> out;
    for (int id : criterion_ids()) {
        out.push_back(run_criterion(id, cfg));
        if (on_result) on_result(out.back());
    }
    return out;
}

}  // namespace cpar
