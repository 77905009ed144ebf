// Copyright 2026 The tcalc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "thompson/cli.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <map>

#include "CLI11.hpp"
#include "thompson/construct.hpp"
#include "thompson/core2.hpp"
#include "thompson/golan.hpp"
#include "thompson/groupcalc.hpp"
#include "thompson/repro.hpp"
#include "thompson/serialize.hpp"
#include "thompson/treepair.hpp"

namespace thompson {

namespace {

using nlohmann::json;

std::optional<int64_t> parse_int(std::string_view text) {
    int64_t value = 0;
    const char *first = text.data();
    const char *last = first + text.size();
    if (!text.empty() && text.front() == '+') {
        first++;
    }
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || ptr != last || first == last) {
        return std::nullopt;
    }
    return value;
}

std::optional<PLMap> named_element(const std::string &name) {
    static const std::map<std::string, std::function<PLMap()>> table{
        {"identity", [] { return PLMap::identity(); }},
        {"id", [] { return PLMap::identity(); }},
        {"zeta", standard::zeta},
        {"ζ", standard::zeta},
        {"kappa0", standard::zeta},
        {"κ₀", standard::zeta},
        {"k0", standard::zeta},
        {"kappa1", [] { return prop_finite_data('a').kappa1; }},
        {"κ₁", [] { return prop_finite_data('a').kappa1; }},
        {"k1", [] { return prop_finite_data('a').kappa1; }},
        {"case-a-alpha", [] { return prop_finite_data('a').alpha; }},
        {"case-b-alpha", [] { return prop_finite_data('b').alpha; }},
        {"kappa1-c", [] { return prop_finite_data('c').kappa1; }},
        {"kappa0-c-tau", [] { return *prop_finite_data('c').kappa0_tau; }},
        {"kappa1-c-tau", [] { return *prop_finite_data('c').kappa1_tau; }},
    };
    if (auto it = table.find(name); it != table.end()) {
        return it->second();
    }
    if (name.size() > 1 && name[0] == 'x') {
        if (auto n = parse_int(name.substr(1)); n && *n >= 0 && std::isdigit(static_cast<unsigned char>(name[1]))) {
            return standard::x(static_cast<int>(*n));
        }
    }
    const std::string torsion = "torsion-";
    if (name.starts_with(torsion)) {
        if (auto n = parse_int(name.substr(torsion.size()))) {
            return standard::torsion_rep(static_cast<int>(*n));
        }
    }
    const std::string case_c = "case-c-alpha-";
    if (name.starts_with(case_c)) {
        if (auto p = parse_int(name.substr(case_c.size()))) {
            return prop_finite_data('c', static_cast<int>(*p)).alpha;
        }
    }
    return std::nullopt;
}

std::string trim(const std::string &text) {
    size_t lo = text.find_first_not_of(" \t\n");
    if (lo == std::string::npos) {
        return "";
    }
    size_t hi = text.find_last_not_of(" \t\n");
    return text.substr(lo, hi - lo + 1);
}

std::string render(const PLMap &f) { return from_plmap(f).str(); }

std::string status(bool pass) { return pass ? "PASS" : "FAIL"; }

void print_checks(std::ostream &out, const std::vector<Check> &checks) {
    for (const Check &c : checks) {
        out << status(c.pass) << "  " << c.name;
        if (!c.pass && !c.detail.empty()) {
            out << "  [" << c.detail << "]";
        }
        out << "\n";
    }
}

// Label for a generator in witness words: the name it was given by, or gI.
std::vector<std::string> generator_names(const std::vector<std::string> &args) {
    std::vector<std::string> names;
    for (size_t i = 0; i < args.size(); i++) {
        std::string a = trim(args[i]);
        names.push_back(!a.empty() && a.front() != '(' ? a : "g" + std::to_string(i));
    }
    return names;
}

struct Runner {
    CliConfig config;
    std::ostream &out;

    bool wants_json() const { return config.output == OutputFormat::Json; }

    void emit(const std::string &command, json result) { out << report(command, std::move(result)).dump(2) << "\n"; }

    void require_not_dot(const std::string &command) const {
        if (config.output == OutputFormat::Dot) {
            throw PreconditionError("--output dot is only available for core and generates, not " + command);
        }
    }

    void element(const std::string &command, const PLMap &f) {
        require_not_dot(command);
        if (wants_json()) {
            emit(command, to_json(f));
        } else {
            out << render(f) << "\n";
        }
    }

    int eval(const std::string &elem, const std::string &point) {
        require_not_dot("eval");
        PLMap f = resolve_element(elem);
        Dyadic x = Dyadic::parse(point);
        if (f.carrier() == Carrier::Interval && (x < Dyadic(0) || x > Dyadic(1))) {
            throw PreconditionError("point " + x.str() + " lies outside [0, 1]");
        }
        Dyadic y = f.eval(x);
        if (wants_json()) {
            emit("eval", {{"point", x.str()}, {"image", y.str()}});
        } else {
            out << y << "\n";
        }
        return kExitOk;
    }

    int show(const std::string &elem) {
        require_not_dot("show");
        PLMap f = resolve_element(elem);
        OrderResult order = order_of(f, config.order_bound);
        if (wants_json()) {
            json r = to_json(f);
            r["support"] = to_json(static_cast<const ArcUnion &>(support(f)));
            r["fixed"] = to_json(fixed_points(f));
            r["order"] = order.str();
            emit("show", r);
            return kExitOk;
        }
        out << "notation:    " << render(f) << "\n"
            << "carrier:     " << carrier_name(f.carrier()) << "\n"
            << "lift:        " << f.lift().str() << "\n"
            << "support:     " << support(f).str() << "\n"
            << "fixed:       " << fixed_points(f).str() << "\n"
            << "order:       " << order.str() << "\n";
        return kExitOk;
    }

    int order(const std::string &elem) {
        require_not_dot("order");
        OrderResult r = order_of(resolve_element(elem), config.order_bound);
        if (wants_json()) {
            emit("order", {{"order", r.str()}});
        } else {
            out << r.str() << "\n";
        }
        return kExitOk;
    }

    int rotation(const std::string &elem) {
        require_not_dot("rotation-number");
        auto r = rotation_number(resolve_element(elem), config.order_bound);
        if (!r) {
            throw PreconditionError("no fixed point and no finite order within " +
                                    std::to_string(config.order_bound));
        }
        if (wants_json()) {
            emit("rotation-number", {{"rotation_number", r->str()}});
        } else {
            out << r->str() << "\n";
        }
        return kExitOk;
    }

    int support_cmd(const std::string &elem) {
        require_not_dot("support");
        SupportSet s = support(resolve_element(elem));
        if (wants_json()) {
            emit("support", to_json(static_cast<const ArcUnion &>(s)));
        } else {
            out << s.str() << "\n";
        }
        return kExitOk;
    }

    int fixed_cmd(const std::string &elem) {
        require_not_dot("fixed");
        FixedSet s = fixed_points(resolve_element(elem));
        if (wants_json()) {
            emit("fixed", to_json(s));
        } else {
            out << s.str() << "\n";
        }
        return kExitOk;
    }

    int hops(const std::string &elem, const std::string &point, int k) {
        require_not_dot("hops");
        HopResult r = admits_hops(resolve_element(elem), CirclePoint(Dyadic::parse(point)), k);
        if (wants_json()) {
            json j{{"k", k}, {"admits", static_cast<bool>(r)}};
            if (r) {
                json orbit = json::array();
                for (const CirclePoint &p : r.certificate->orbit) {
                    orbit.push_back(p.str());
                }
                j["orbit"] = orbit;
            } else {
                j["overlap"] = {r.first, r.second};
            }
            emit("hops", j);
        } else if (r) {
            out << "yes:";
            for (const CirclePoint &p : r.certificate->orbit) {
                out << " " << p;
            }
            out << "\n";
        } else {
            out << "no: arcs " << r.first << " and " << r.second << " overlap\n";
        }
        return kExitOk;
    }

    int factor(const std::string &elem, const std::vector<std::string> &pts) {
        require_not_dot("factor");
        std::vector<Dyadic> v;
        for (const std::string &p : pts) {
            v.push_back(Dyadic::parse(p));
        }
        Factorisation f = factor_over_cover(resolve_element(elem), v[0], v[1], v[2], v[3]);
        if (wants_json()) {
            emit("factor", {{"alpha", to_json(f.alpha)},
                            {"beta", to_json(f.beta)},
                            {"order", f.beta_first ? "beta alpha" : "alpha beta"}});
        } else {
            out << "alpha = " << render(f.alpha) << "\n"
                << "beta  = " << render(f.beta) << "\n"
                << "gamma = " << (f.beta_first ? "beta alpha" : "alpha beta") << "\n";
        }
        return kExitOk;
    }

    int core(const std::vector<std::string> &elems, bool stages, std::ostream &err) {
        std::vector<PLMap> gens;
        for (const std::string &e : elems) {
            gens.push_back(resolve_element(e));
        }
        CoreResult r = build_core(gens);
        for (const std::string &w : r.warnings) {
            err << "warning: " << w << "\n";
        }
        if (wants_json()) {
            emit("core", to_json(r));
            return kExitOk;
        }
        if (stages) {
            out << r.initial.class_count() << " initial classes, " << r.final.class_count() << " final classes\n";
        }
        out << to_dot(r.graph);
        return kExitOk;
    }

    int generates(const std::vector<std::string> &elems) {
        std::vector<PLMap> gens;
        for (const std::string &e : elems) {
            gens.push_back(resolve_element(e));
        }
        std::vector<std::string> names = generator_names(elems);
        GenVerdict v = generates_F(gens, config.search_depth);
        if (config.output == OutputFormat::Dot) {
            if (!v.core) {
                throw PreconditionError("no core graph was computed");
            }
            out << to_dot(*v.core);
            return kExitOk;
        }
        if (wants_json()) {
            emit("generates", to_json(v, names));
            return kExitOk;
        }
        out << verdict_name(v.verdict);
        if (!v.failed_condition.empty()) {
            out << " (" << v.failed_condition << ")";
        }
        out << "\n";
        const Witnesses &w = v.witnesses;
        if (w.mu) {
            out << "mu = " << word_str(*w.mu, names) << "\n";
        }
        if (w.nu) {
            out << "nu = " << word_str(*w.nu, names) << "\n";
        }
        if (w.xi) {
            out << "xi = " << word_str(*w.xi, names) << "\n";
        }
        if (w.x) {
            out << "x  = " << *w.x << "\n";
        }
        return kExitOk;
    }

    int pipeline(const std::string &alpha, const std::string &zeta, const std::string &a, const std::string &base) {
        require_not_dot("pipeline");
        std::optional<CirclePoint> pa, pb;
        if (!a.empty()) {
            pa = CirclePoint(Dyadic::parse(a));
        }
        if (!base.empty()) {
            pb = CirclePoint(Dyadic::parse(base));
        }
        PipelineState st = prop_infinite_pipeline(resolve_element(alpha), resolve_element(zeta), pa, pb);
        bool pass = all_pass(st.checks);
        if (wants_json()) {
            emit("pipeline", {{"pass", pass},
                              {"a", st.a.str()},
                              {"zeta_base", st.zeta_base.str()},
                              {"r", st.r.str()},
                              {"s", st.s.str()},
                              {"alpha_inverted", st.alpha_inverted},
                              {"gamma", to_json(st.gamma)},
                              {"checks", to_json(st.checks)}});
        } else {
            out << "a = " << st.a << ", zeta base = " << st.zeta_base << ", r = " << st.r << ", s = " << st.s
                << "\n";
            print_checks(out, st.checks);
            out << "gamma = " << render(st.gamma) << "\n" << status(pass) << "\n";
        }
        return pass ? kExitOk : kExitMismatch;
    }

    int repro(const std::string &suite) {
        require_not_dot("repro");
        ReproOptions opt;
        opt.seed = config.seed;
        opt.depth = config.search_depth;
        std::vector<SuiteReport> reports = run_repro(suite, opt);
        bool pass = std::all_of(reports.begin(), reports.end(), [](const SuiteReport &r) { return r.pass(); });
        if (wants_json()) {
            json suites = json::array();
            for (const SuiteReport &r : reports) {
                suites.push_back({{"suite", r.suite}, {"pass", r.pass()}, {"checks", to_json(r.checks)}});
            }
            emit("repro", {{"seed", config.seed}, {"pass", pass}, {"suites", suites}});
        } else {
            for (const SuiteReport &r : reports) {
                out << "[" << r.suite << "]\n";
                print_checks(out, r.checks);
                size_t ok = static_cast<size_t>(
                    std::count_if(r.checks.begin(), r.checks.end(), [](const Check &c) { return c.pass; }));
                out << r.suite << ": " << status(r.pass()) << " (" << ok << "/" << r.checks.size() << ")\n\n";
            }
            out << status(pass) << "\n";
        }
        return pass ? kExitOk : kExitMismatch;
    }
};

}  // namespace

PLMap resolve_element(const std::string &text) {
    std::string t = trim(text);
    if (t.empty()) {
        throw ParseError("empty element", 0);
    }
    if (t.front() == '(') {
        return to_plmap(parse_element(t));
    }
    std::string name = t;
    int64_t exponent = 1;
    if (size_t caret = t.rfind('^'); caret != std::string::npos) {
        auto e = parse_int(t.substr(caret + 1));
        if (!e) {
            throw ParseError("bad exponent in '" + t + "'", caret + 1);
        }
        name = t.substr(0, caret);
        exponent = *e;
    }
    auto f = named_element(name);
    if (!f) {
        throw ParseError("unknown element '" + name + "'", 0);
    }
    return exponent == 1 ? *f : power(*f, exponent);
}

const std::vector<std::string> &element_names() {
    static const std::vector<std::string> names{
        "identity",     "zeta (ζ, kappa0, κ₀, k0)", "x0, x1, xN",     "kappa1 (κ₁, k1)",
        "case-a-alpha", "case-b-alpha",             "case-c-alpha-P", "kappa1-c",
        "kappa0-c-tau", "kappa1-c-tau",             "torsion-N"};
    return names;
}

int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    CLI::App app{"Exact calculator for Thompson's groups F and T"};
    app.name("tcalc");
    app.require_subcommand(1);
    app.fallthrough();

    CliConfig config;
    std::string output = "text";
    app.add_option("--output", output, "text, json or dot")
        ->check(CLI::IsMember({"text", "json", "dot"}));
    app.add_option("--depth", config.search_depth, "word length bound for witness search")
        ->check(CLI::PositiveNumber);
    app.add_option("--order-bound", config.order_bound, "orbit length bound for order computations")
        ->check(CLI::PositiveNumber);
    app.add_option("--seed", config.seed, "seed for the randomized suites");

    std::string elem, elem2, point, by, suite, base_a, zeta_base;
    std::vector<std::string> elems, points;
    bool with_inverse = false, stages = false;
    int k = 1;

    std::string names_help = "element: tree pair notation or one of ";
    for (const std::string &n : element_names()) {
        names_help += (names_help.back() == ' ' ? "" : ", ") + n;
    }
    names_help += ", with optional ^n";

    auto *eval = app.add_subcommand("eval", "image of a point");
    eval->add_option("element", elem, names_help)->required();
    eval->add_option("point", point)->required();
    auto *compose_cmd = app.add_subcommand("compose", "product, applied left to right");
    compose_cmd->add_option("elements", elems, names_help)->required();
    compose_cmd->add_flag("--with-inverse-of-self", with_inverse, "append the inverse of the product");
    auto *inverse_cmd = app.add_subcommand("inverse", "inverse element");
    inverse_cmd->add_option("element", elem, names_help)->required();
    auto *conjugate_cmd = app.add_subcommand("conjugate", "g^-1 f g");
    conjugate_cmd->add_option("element", elem, names_help)->required();
    conjugate_cmd->add_option("--by", by, "conjugating element")->required();
    auto *show = app.add_subcommand("show", "notation, lift, support, fixed set and order");
    show->add_option("element", elem, names_help)->required();
    auto *order = app.add_subcommand("order", "order of an element");
    order->add_option("element", elem, names_help)->required();
    auto *rot = app.add_subcommand("rotation-number", "rotation number");
    rot->add_option("element", elem, names_help)->required();
    auto *supp = app.add_subcommand("support", "support as a union of open arcs");
    supp->add_option("element", elem, names_help)->required();
    auto *fixed = app.add_subcommand("fixed", "fixed point set");
    fixed->add_option("element", elem, names_help)->required();
    auto *hops = app.add_subcommand("hops", "whether the first k orbit arcs at a point are disjoint");
    hops->add_option("element", elem, names_help)->required();
    hops->add_option("point", point)->required();
    hops->add_option("k", k)->required()->check(CLI::PositiveNumber);
    auto *factor = app.add_subcommand("factor", "split an element of F_[a,d] over [a,c] and [b,d]");
    factor->add_option("element", elem, names_help)->required();
    factor->add_option("points", points, "a < b < c < d")->required()->expected(4);
    auto *core = app.add_subcommand("core", "core graph of the generated subgroup of F");
    core->add_option("elements", elems, names_help);
    core->add_flag("--stages", stages, "also print the class counts before and after coarsening");
    auto *gen = app.add_subcommand("generates", "decide whether elements generate F");
    gen->add_option("elements", elems, names_help);
    auto *pipe = app.add_subcommand("pipeline", "conjugator making <alpha, zeta^gamma> = T, with checks");
    pipe->add_option("alpha", elem, names_help)->required();
    pipe->add_option("zeta", elem2, names_help)->required();
    pipe->add_option("--a", base_a, "base point in a support component of alpha");
    pipe->add_option("--zeta-base", zeta_base, "point where zeta admits enough hops");
    auto *repro = app.add_subcommand("repro", "run reproduction suites");
    std::vector<std::string> suites = suite_names();
    suites.push_back("all");
    repro->add_option("suite", suite)->required()->check(CLI::IsMember(suites));

    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
        app.parse(rev);
    } catch (const CLI::ParseError &e) {
        int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitParse;
    }
    config.output = output == "json" ? OutputFormat::Json : output == "dot" ? OutputFormat::Dot : OutputFormat::Text;

    Runner run{config, out};
    try {
        if (*eval) {
            return run.eval(elem, point);
        }
        if (*compose_cmd) {
            std::vector<PLMap> factors;
            for (const std::string &e : elems) {
                factors.push_back(resolve_element(e));
            }
            PLMap p = product(factors);
            run.element("compose", with_inverse ? compose(p, inverse(p)) : p);
            return kExitOk;
        }
        if (*inverse_cmd) {
            run.element("inverse", inverse(resolve_element(elem)));
            return kExitOk;
        }
        if (*conjugate_cmd) {
            run.element("conjugate", conjugate(resolve_element(elem), resolve_element(by)));
            return kExitOk;
        }
        if (*show) {
            return run.show(elem);
        }
        if (*order) {
            return run.order(elem);
        }
        if (*rot) {
            return run.rotation(elem);
        }
        if (*supp) {
            return run.support_cmd(elem);
        }
        if (*fixed) {
            return run.fixed_cmd(elem);
        }
        if (*hops) {
            return run.hops(elem, point, k);
        }
        if (*factor) {
            return run.factor(elem, points);
        }
        if (*core) {
            return run.core(elems, stages, err);
        }
        if (*gen) {
            return run.generates(elems);
        }
        if (*pipe) {
            return run.pipeline(elem, elem2, base_a, zeta_base);
        }
        if (*repro) {
            return run.repro(suite);
        }
    } catch (const ParseError &e) {
        err << "parse error: " << e.what() << "\n";
        return kExitParse;
    } catch (const PreconditionError &e) {
        err << "precondition failed: " << e.what() << "\n";
        return kExitPrecondition;
    } catch (const std::exception &e) {
        err << "error: " << e.what() << "\n";
        return kExitFailure;
    }
    return kExitFailure;
}

}  // namespace thompson
