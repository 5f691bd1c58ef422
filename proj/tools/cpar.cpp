#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include <CLI11.hpp>

#include "cpar/algebra.hpp"
#include "cpar/characters.hpp"
#include "cpar/groupoid.hpp"
#include "cpar/json_io.hpp"
#include "cpar/modules_rep.hpp"
#include "cpar/ribbon.hpp"
#include "cpar/rs.hpp"
#include "cpar/verify.hpp"

using namespace cpar;

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

Caps caps_from_env() {
    Caps caps;
    if (const char* v = std::getenv("CPAR_CAP_MONOID")) caps.monoid_size = std::atoll(v);
    if (const char* v = std::getenv("CPAR_CAP_CLOSURE")) caps.closure_products = std::atoll(v);
    if (caps.monoid_size <= 0 || caps.closure_products <= 0) throw UsageError("caps must be positive");
    return caps;
}

json read_input(const std::string& path) {
    std::string text;
    if (path == "-") {
        text.assign(std::istreambuf_iterator<char>(std::cin), {});
    } else {
        std::ifstream in(path);
        if (!in) throw UsageError("cannot open " + path);
        text.assign(std::istreambuf_iterator<char>(in), {});
    }
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw JsonError(e.what());
    }
}

json parse_arg(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw JsonError("argument '" + text + "': " + e.what());
    }
}

std::vector<Cyc> parse_point(const std::string& text, int r) {
    std::vector<Cyc> x;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        try {
            x.emplace_back(r, Rational(tok));
        } catch (const std::invalid_argument&) {
            throw UsageError("bad parameter value '" + tok + "'");
        }
    }
    if (static_cast<int>(x.size()) != r) throw UsageError("--x needs exactly r values");
    return x;
}

json result_json(const CriterionResult& r) {
    return {{"id", r.id}, {"name", r.name}, {"pass", r.pass}, {"detail", r.detail}, {"seconds", r.seconds}};
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Colored partition category toolkit"};
    app.require_subcommand(1);
    std::string format = "json";
    app.add_option("--format", format, "Output format")->check(CLI::IsMember({"json"}));

    int k = 1, r = 1, samples = 100, maxweight = 2;
    unsigned long long seed = 0;
    std::string input = "-", rel = "L", shape, xs, lam, mu, nu, example, suite = "all", cap = "default";
    int maxw_thm = 2;

    auto* compose_cmd = app.add_subcommand("compose", "Compose two diagrams {\"d1\":..,\"d2\":..}");
    compose_cmd->add_option("--input", input, "JSON file, - for stdin");

    auto* count_cmd = app.add_subcommand("count", "Number of colored set partitions of k points");
    count_cmd->add_option("--k", k)->required()->check(CLI::NonNegativeNumber);
    count_cmd->add_option("--r", r)->required()->check(CLI::PositiveNumber);

    auto* present_cmd = app.add_subcommand("present-check", "Check the defining relations");
    present_cmd->add_option("--k", k)->required()->check(CLI::PositiveNumber);
    present_cmd->add_option("--r", r)->required()->check(CLI::PositiveNumber);

    auto* green_cmd = app.add_subcommand("green", "Green's classes of the monoid");
    green_cmd->add_option("--k", k)->required()->check(CLI::PositiveNumber);
    green_cmd->add_option("--r", r)->required()->check(CLI::PositiveNumber);
    green_cmd->add_option("--rel", rel)->check(CLI::IsMember({"L", "R", "J"}));

    auto* rs_cmd = app.add_subcommand("rs", "Set-partition RS correspondence");
    bool forward = false, inverse = false;
    rs_cmd->add_flag("--forward", forward);
    rs_cmd->add_flag("--inverse", inverse);
    rs_cmd->add_option("--input", input);
    rs_cmd->add_option("--k", k);
    rs_cmd->add_option("--r", r);

    auto* sw_cmd = app.add_subcommand("sw", "Ribbon tableau correspondence");
    bool group = false, diagram = false, mirrored = false;
    sw_cmd->add_flag("--group", group, "input {\"r\",\"colors\",\"sigma\"}");
    sw_cmd->add_flag("--diagram", diagram, "input diagram");
    sw_cmd->add_flag("--mirrored", mirrored, "take the southwesternmost candidate ribbon");
    sw_cmd->add_option("--input", input);

    auto* psi_cmd = app.add_subcommand("psi-check", "Homomorphism check of the groupoid map");
    psi_cmd->add_option("--k", k)->required()->check(CLI::NonNegativeNumber);
    psi_cmd->add_option("--r", r)->required()->check(CLI::PositiveNumber);
    psi_cmd->add_option("--samples", samples)->check(CLI::PositiveNumber);
    psi_cmd->add_option("--seed", seed);

    auto* gram_cmd = app.add_subcommand("gram", "Gram matrix of a cell module");
    gram_cmd->add_option("--k", k)->required()->check(CLI::NonNegativeNumber);
    gram_cmd->add_option("--r", r)->required()->check(CLI::PositiveNumber);
    gram_cmd->add_option("--shape", shape, "multipartition as JSON, e.g. [[1],[]]")->required();

    auto* ss_cmd = app.add_subcommand("semisimple", "Semisimplicity certificate at a parameter point");
    ss_cmd->add_option("--k", k)->required()->check(CLI::NonNegativeNumber);
    ss_cmd->add_option("--r", r)->required()->check(CLI::PositiveNumber);
    ss_cmd->add_option("--x", xs, "comma separated rationals")->required();

    auto* cartan_cmd = app.add_subcommand("cartan", "Cartan matrix up to a weight");
    cartan_cmd->add_option("--r", r)->required()->check(CLI::PositiveNumber);
    cartan_cmd->add_option("--maxweight", maxweight)->check(CLI::Range(0, 3));

    auto* rk_cmd = app.add_subcommand("reduced-kronecker", "Reduced Kronecker coefficient");
    rk_cmd->add_option("--lambda", lam)->required();
    rk_cmd->add_option("--mu", mu)->required();
    rk_cmd->add_option("--nu", nu)->required();

    auto* rc_cmd = app.add_subcommand("r-coeff", "Stable tensor product multiplicity");
    rc_cmd->add_option("--r", r)->required()->check(CLI::PositiveNumber);
    rc_cmd->add_option("--lambda", lam)->required();
    rc_cmd->add_option("--mu", mu)->required();
    rc_cmd->add_option("--nu", nu)->required();

    auto* thm_cmd = app.add_subcommand("thm-check", "Compare both sides of the coefficient formula");
    thm_cmd->add_option("--r", r)->required()->check(CLI::PositiveNumber);
    thm_cmd->add_option("--maxweight", maxw_thm)->check(CLI::Range(0, 3));
    thm_cmd->add_option("--example", example)->check(CLI::IsMember({"paper"}));

    auto* verify_cmd = app.add_subcommand("verify", "Run the acceptance suite");
    verify_cmd->add_option("--suite", suite, "all or a criterion number");
    verify_cmd->add_option("--cap", cap)->check(CLI::IsMember({"default"}));
    verify_cmd->add_option("--seed", seed);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    auto emit = [](const json& j) { std::cout << j.dump() << "\n"; };
    try {
        const Caps caps = caps_from_env();
        if (*compose_cmd) {
            json in = read_input(input);
            if (!in.contains("d1") || !in.contains("d2")) throw JsonError("expected fields d1 and d2");
            Diagram a = diagram_from_json(in["d1"]), b = diagram_from_json(in["d2"]);
            if (a.r() != b.r() || a.l() != b.k()) throw UsageError("diagrams are not composable");
            Composite c = compose(a, b);
            emit({{"d", to_json(c.d)}, {"monomial", c.m}, {"rank", rank(c.d)}});
        } else if (*count_cmd) {
            emit({{"B", count_bell(k, r).get_str()}});
        } else if (*present_cmd) {
            auto rep = check_presentation(k, r);
            json fails = json::array();
            for (const auto& f : rep.failures)
                fails.push_back({{"relation", f.relation}, {"instance", f.instance}, {"lhs", f.lhs}, {"rhs", f.rhs}});
            json per = json::object();
            for (const auto& [rel_id, n] : rep.per_relation) per[std::to_string(rel_id)] = n;
            emit({{"k", k}, {"r", r}, {"instances", rep.instances}, {"per_relation", per}, {"failures", fails},
                  {"ok", rep.ok()}});
            return rep.ok() ? 0 : 1;
        } else if (*green_cmd) {
            auto el = enumerate_monoid(k, r, caps);
            const Green g = rel == "L" ? Green::L : rel == "R" ? Green::R : Green::J;
            auto cls = green_classes(el, g);
            std::map<int, int> sizes;
            for (int c : cls) sizes[c]++;
            long mism = 0;
            for (size_t i = 0; i < el.size(); ++i)
                for (size_t j = 0; j < el.size(); ++j)
                    if ((cls[i] == cls[j]) != green_characterize(el[i], el[j], g)) ++mism;
            json sz = json::array();
            for (const auto& [c, n] : sizes) sz.push_back(n);
            emit({{"elements", el.size()}, {"classes", sizes.size()}, {"class_sizes", sz},
                  {"tableau_mismatches", mism}});
            return mism ? 1 : 0;
        } else if (*rs_cmd) {
            if (forward == inverse) throw UsageError("give exactly one of --forward, --inverse");
            json in = read_input(input);
            if (forward) {
                emit(to_json(rs_forward(diagram_from_json(in))));
            } else {
                if (!rs_cmd->count("--k") || !rs_cmd->count("--r")) throw UsageError("--inverse needs --k and --r");
                emit(to_json(rs_inverse(rs_from_json(in), k, r)));
            }
        } else if (*sw_cmd) {
            if (group == diagram) throw UsageError("give exactly one of --group, --diagram");
            const RibbonOrder order = mirrored ? RibbonOrder::SouthWest : RibbonOrder::NorthEast;
            json in = read_input(input);
            if (group) {
                const int rr = in.at("r").get<int>();
                auto colors = in.at("colors").get<std::vector<int>>();
                auto sigma = in.at("sigma").get<std::vector<int>>();
                if (colors.size() != sigma.size()) throw UsageError("colors and sigma differ in length");
                auto g = sw_forward_group(colors, sigma, rr, order);
                emit({{"P", to_json(g.P)}, {"Q", to_json(g.Q)}});
            } else {
                emit(to_json(sw_forward_diagram(diagram_from_json(in), order)));
            }
        } else if (*psi_cmd) {
            auto rep = psi_hom_check(samples, k, r, seed);
            emit({{"samples", rep.samples}, {"failures", rep.failures}, {"first_failure", rep.first_failure},
                  {"ok", rep.ok()}});
            return rep.ok() ? 0 : 1;
        } else if (*gram_cmd) {
            Multipartition m = multipartition_from_json(parse_arg(shape));
            if (static_cast<int>(m.size()) != r) throw UsageError("--shape must have r components");
            auto g = gram_matrix(k, m, r);
            MPoly d = det(g.G, r);
            auto [deg, lead] = d.leading_coeff_in(0);
            json cross = json::array();
            for (const auto& c : g.cross) cross.push_back(to_json(c));
            emit({{"matrix", to_json(g.G)}, {"det", d.str()}, {"leading_y0", {{"degree", deg}, {"coeff", lead.str()}}},
                  {"cross_section", cross}});
        } else if (*ss_cmd) {
            auto rep = semisimplicity_certificate(k, r, parse_point(xs, r));
            json dets = json::array();
            for (const auto& [m, v] : rep.dets) dets.push_back({{"shape", to_json(m)}, {"det", v.str()}});
            emit({{"semisimple", rep.semisimple}, {"dets", dets}, {"dim_sum", rep.dim_sum.get_str()},
                  {"bell", rep.bell.get_str()}, {"dims_ok", rep.dims_ok()}});
        } else if (*cartan_cmd) {
            auto t = cartan_matrix(maxweight, r);
            auto chk = cartan_tensor_check(maxweight, r);
            json idx = json::array();
            for (const auto& m : t.index) idx.push_back(to_json(m));
            emit({{"index", idx}, {"B", t.B}, {"unitriangular", chk.unitriangular}, {"tensor", chk.tensor}});
            return chk.ok() ? 0 : 1;
        } else if (*rk_cmd) {
            auto res = reduced_kronecker_detail(partition_from_json(parse_arg(lam)), partition_from_json(parse_arg(mu)),
                                                partition_from_json(parse_arg(nu)));
            emit({{"value", res.value}, {"n_start", res.n_start}, {"n_stable", res.n_stable}});
        } else if (*rc_cmd) {
            Multipartition a = multipartition_from_json(parse_arg(lam)), b = multipartition_from_json(parse_arg(mu)),
                           c = multipartition_from_json(parse_arg(nu));
            for (const auto* m : {&a, &b, &c})
                if (static_cast<int>(m->size()) != r) throw UsageError("multipartitions must have r components");
            emit({{"R", r_coefficient(a, b, c)}});
        } else if (*thm_cmd) {
            if (!example.empty()) {
                if (r != 3) throw UsageError("the worked example has r = 3");
                auto fc = theorem_formula_check({{}, {1, 1}, {}}, {{}, {2}, {}}, {{}, {2}, {}});
                emit({{"lhs", fc.lhs}, {"rhs", fc.rhs}, {"equal", fc.equal}});
                return fc.equal ? 0 : 1;
            }
            long tot = 0, bad = 0;
            json fails = json::array();
            for (int a = 0; a <= maxw_thm; ++a)
                for (int b = 0; b <= maxw_thm; ++b)
                    for (int c = 0; c <= maxw_thm; ++c)
                        for (auto& x : multipartitions(r, a))
                            for (auto& y : multipartitions(r, b))
                                for (auto& z : multipartitions(r, c)) {
                                    ++tot;
                                    auto fc = theorem_formula_check(x, y, z);
                                    if (!fc.equal) {
                                        ++bad;
                                        fails.push_back({{"lambda", x}, {"mu", y}, {"nu", z}, {"lhs", fc.lhs},
                                                         {"rhs", fc.rhs}});
                                    }
                                }
            emit({{"triples", tot}, {"failures", fails}, {"equal", bad == 0}});
            return bad ? 1 : 0;
        } else if (*verify_cmd) {
            VerifyConfig cfg;
            cfg.seed = seed;
            std::vector<CriterionResult> results;
            if (suite == "all") {
                results = run_all(cfg);
            } else {
                int id = 0;
                try {
                    id = std::stoi(suite);
                } catch (const std::exception&) {
                    throw UsageError("--suite must be all or 1..12");
                }
                if (id < 1 || id > 12) throw UsageError("--suite must be all or 1..12");
                results.push_back(run_criterion(id, cfg));
            }
            json arr = json::array();
            int passed = 0;
            for (const auto& res : results) {
                arr.push_back(result_json(res));
                passed += res.pass;
            }
            emit({{"criteria", arr}, {"passed", passed}, {"total", results.size()}});
            return passed == static_cast<int>(results.size()) ? 0 : 1;
        }
    } catch (const CapExceeded& e) {
        std::cerr << json{{"error", "cap exceeded"}, {"message", e.what()}}.dump() << "\n";
        return 2;
    } catch (const JsonError& e) {
        std::cerr << json{{"error", "malformed json"}, {"message", e.what()}}.dump() << "\n";
        return 2;
    } catch (const json::exception& e) {
        std::cerr << json{{"error", "malformed json"}, {"message", e.what()}}.dump() << "\n";
        return 2;
    } catch (const UsageError& e) {
        std::cerr << json{{"error", "usage"}, {"message", e.what()}}.dump() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << json{{"error", "invalid input"}, {"message", e.what()}}.dump() << "\n";
        return 2;
    }
    return 0;
}
