// supvar: command-line front end

#include "document.hpp"
#include "verify.hpp"

#include "supvar/koszul.hpp"
#include "supvar/may.hpp"
#include "supvar/varieties.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <iostream>
#include <sstream>

using nlohmann::ordered_json;
using namespace supvar;
using namespace supvar::cli;

namespace {

enum Exit { ok = 0, failure = 1, parse_error = 2, resource = 3 };

struct Common {
    std::string input;
    std::string algebra;
    std::string field;
    std::string format = "json";
    std::uint64_t seed = 1;
    bool timing = false;
};

struct Loaded {
    Document doc;
    LieSuperalgebra& g() { return *doc.algebra; }
};

Loaded load(const Common& c)
{
    std::optional<Field> f;
    if (!c.field.empty())
        f = parse_field(c.field);
    Loaded l;
    if (!c.input.empty())
        l.doc = load_document(c.input == "-" ? "/dev/stdin" : c.input, f);
    else if (f)
        l.doc.field = *f;
    if (!c.algebra.empty())
        l.doc.algebra = builder_algebra(c.algebra, l.doc.field);
    if (!l.doc.algebra)
        throw ParseError("no algebra: pass an input document or --algebra");
    return l;
}

Supermodule pick_module(Loaded& l, const std::string& name)
{
    auto it = l.doc.modules.find(name);
    if (it != l.doc.modules.end())
        return it->second;
    return named_module(l.g(), name);
}

std::string csv_vector(const Vector& v)
{
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i)
        s += (i ? "," : "") + v[i].str();
    return s;
}

ordered_json json_vector(const Vector& v)
{
    ordered_json a = ordered_json::array();
    for (const auto& x : v)
        a.push_back(x.str());
    return a;
}

std::vector<std::string> odd_names(const LieSuperalgebra& g)
{
    std::vector<std::string> out;
    for (auto i : g.odd_indices())
        out.push_back(g.name(i));
    return out;
}

std::string csv_header(const std::vector<std::string>& names)
{
    std::string s;
    for (std::size_t i = 0; i < names.size(); ++i)
        s += (i ? "," : "") + names[i];
    return s;
}

ordered_json header(const std::string& command, const Common& c, const Field& f)
{
    ordered_json r;
    r["command"] = command;
    if (!c.input.empty())
        r["input"] = c.input;
    if (!c.algebra.empty())
        r["algebra"] = c.algebra;
    r["field"] = f.name();
    return r;
}

int emit(const Common& c, ordered_json report, const std::string& csv, bool pass,
         std::chrono::steady_clock::time_point t0)
{
    if (c.timing)
        report["seconds"] = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (c.format == "csv")
        std::cout << csv;
    else
        std::cout << report.dump(2) << "\n";
    return pass ? ok : failure;
}

int cmd_check(const Common& c)
{
    auto t0 = std::chrono::steady_clock::now();
    Loaded l = load(c);
    auto r = header("check", c, l.doc.field);
    std::ostringstream csv;
    csv << "object,violation\n";
    auto rep = validate(l.g());
    bool pass = rep.ok();
    r["algebra_violations"] = rep.violations;
    for (const auto& v : rep.violations)
        csv << "algebra," << v << "\n";
    ordered_json mods = ordered_json::object();
    for (const auto& [name, M] : l.doc.modules) {
        auto mr = check_supermodule(l.g(), M);
        pass = pass && mr.ok();
        mods[name] = mr.violations;
        for (const auto& v : mr.violations)
            csv << name << "," << v << "\n";
    }
    r["module_violations"] = mods;
    r["pass"] = pass;
    return emit(c, r, csv.str(), pass, t0);
}

int cmd_cohomology(const Common& c, const std::string& which, const std::string& module, int max_degree)
{
    auto t0 = std::chrono::steady_clock::now();
    Loaded l = load(c);
    const auto& g = l.g();
    const int p = static_cast<int>(g.field().characteristic());
    const int top = max_degree >= 0 ? max_degree : (p ? 2 * p + 2 : 6);
    std::vector<std::size_t> dims;
    ordered_json r = header("cohomology", c, g.field());
    r["which"] = which;
    if (which == "lie") {
        auto M = pick_module(l, module);
        dims = cohomology(g, M, top + 1).dims;
        r["module"] = module;
    } else if (which == "vg") {
        if (module != "trivial")
            throw ParseError("V(g) cohomology is computed with trivial coefficients");
        dims = vg_cohomology(g, top).dims;
        r["truncation"] = top + 2;
    } else {
        throw ParseError("--which must be lie or vg");
    }
    r["max_degree"] = top;
    r["dims"] = dims;
    std::ostringstream csv;
    csv << "degree,dim\n";
    for (std::size_t n = 0; n < dims.size(); ++n)
        csv << n << "," << dims[n] << "\n";
    return emit(c, r, csv.str(), true, t0);
}

std::vector<Vector> default_test_vectors(const Field& f, std::size_t d)
{
    if (f.is_prime())
        return all_points(f, d);
    std::vector<Vector> out{zero_vector(f, d)};
    std::vector<int> idx(d, -2);
    while (true) {
        Vector v;
        for (int x : idx)
            v.push_back(Scalar(f, x));
        if (!is_zero(v))
            out.push_back(v);
        std::size_t k = 0;
        while (k < d && idx[k] == 2)
            idx[k++] = -2;
        if (k == d)
            break;
        ++idx[k];
    }
    return out;
}

int cmd_variety(const Common& c, const std::string& kind, std::size_t r_index, const std::string& module,
                std::size_t bound)
{
    auto t0 = std::chrono::steady_clock::now();
    Loaded l = load(c);
    const auto& g = l.g();
    ordered_json r = header("variety", c, g.field());
    r["kind"] = kind;
    r["bound"] = bound;
    std::ostringstream csv;
    const auto names = odd_names(g);
    if (kind == "cone") {
        auto pts = enumerate_cone(g, bound);
        csv << csv_header(names) << "\n";
        ordered_json list = ordered_json::array();
        for (const auto& v : pts) {
            list.push_back(json_vector(v));
            csv << csv_vector(v) << "\n";
        }
        r["basis"] = names;
        r["count"] = pts.size();
        r["points"] = list;
    } else if (kind == "support") {
        auto rep = support_points(g, pick_module(l, module), bound);
        csv << csv_header(names) << "\n";
        ordered_json list = ordered_json::array();
        for (const auto& v : rep.members) {
            list.push_back(json_vector(v));
            csv << csv_vector(v) << "\n";
        }
        r["module"] = module;
        r["basis"] = names;
        r["tested_points"] = rep.tested_points;
        r["count"] = rep.members.size();
        r["is_zero_only"] = rep.is_zero_only;
        if (rep.dimension_estimate)
            r["dimension_estimate"] = *rep.dimension_estimate;
        r["dimension_exact"] = rep.dimension_exact;
        r["points"] = list;
    } else if (kind == "cr") {
        auto rep = enumerate_cr(g, r_index, bound);
        std::vector<std::string> cols;
        for (std::size_t i = 0; i < r_index; ++i)
            for (std::size_t k = 0; k < g.dim(); ++k)
                cols.push_back("alpha" + std::to_string(i) + "." + g.name(k));
        for (std::size_t k = 0; k < g.dim(); ++k)
            cols.push_back("beta." + g.name(k));
        csv << csv_header(cols) << "\n";
        ordered_json list = ordered_json::array();
        for (const auto& t : rep.points) {
            ordered_json e;
            ordered_json al = ordered_json::array();
            std::string row;
            for (const auto& a : t.alphas) {
                al.push_back(json_vector(a));
                row += csv_vector(a) + ",";
            }
            e["alphas"] = al;
            e["beta"] = json_vector(t.beta);
            list.push_back(e);
            csv << row << csv_vector(t.beta) << "\n";
        }
        r["r"] = r_index;
        r["basis"] = g.names();
        r["tested"] = rep.tested;
        r["count"] = rep.count();
        r["points"] = list;
    } else if (kind == "char0-support") {
        SmashModule S{pick_module(l, module), l.doc.group_on_v, {}};
        if (auto it = l.doc.group_on_m.find(module); it != l.doc.group_on_m.end())
            S.group_on_m = it->second;
        if (S.group_on_m.size() != S.group_on_v.size())
            throw ParseError("group needs one matrix on the module per generator");
        auto tv = l.doc.test_vectors.empty() ? default_test_vectors(g.field(), g.dim()) : l.doc.test_vectors;
        auto rep = char0_support(S, tv);
        csv << csv_header(names) << ",orbit,member\n";
        ordered_json orbits = ordered_json::array();
        for (std::size_t i = 0; i < rep.orbits.size(); ++i) {
            ordered_json o;
            o["representative"] = json_vector(rep.representatives[i]);
            o["size"] = rep.orbits[i].size();
            o["member"] = static_cast<bool>(rep.member[i]);
            orbits.push_back(o);
            for (const auto& v : rep.orbits[i])
                csv << csv_vector(v) << "," << i << "," << (rep.member[i] ? 1 : 0) << "\n";
        }
        r["module"] = module;
        r["group_order"] = rep.group_order;
        r["orbits"] = orbits;
    } else {
        throw ParseError("--kind must be cone, support, cr or char0-support");
    }
    return emit(c, r, csv.str(), true, t0);
}

int cmd_verify(const Common& c, const std::string& example, std::uint32_t p)
{
    auto t0 = std::chrono::steady_clock::now();
    std::vector<std::string> ids;
    if (example == "all")
        ids = golden_ids();
    else
        ids = {example};
    ordered_json r;
    r["command"] = "verify-paper";
    r["p"] = p;
    r["seed"] = c.seed;
    ordered_json list = ordered_json::array();
    std::ostringstream csv;
    csv << "example,check,expected,computed,pass\n";
    bool pass = true;
    for (const auto& id : ids) {
        GoldenReport g;
        try {
            g = run_golden(id, p, c.seed);
        } catch (const std::invalid_argument& e) {
            throw ParseError(e.what());
        }
        ordered_json e;
        e["example"] = id;
        ordered_json checks = ordered_json::array();
        for (const auto& ch : g.checks) {
            checks.push_back({{"check", ch.name}, {"expected", ch.expected}, {"computed", ch.computed}, {"pass", ch.pass}});
            csv << id << ",\"" << ch.name << "\",\"" << ch.expected << "\",\"" << ch.computed << "\","
                << (ch.pass ? "true" : "false") << "\n";
        }
        e["checks"] = checks;
        e["pass"] = g.pass();
        pass = pass && g.pass();
        list.push_back(e);
    }
    r["results"] = list;
    r["pass"] = pass;
    return emit(c, r, csv.str(), pass, t0);
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"supvar: cohomology and support varieties of restricted Lie superalgebras"};
    app.require_subcommand(1);
    app.fallthrough();
    Common c;
    app.add_option("--format", c.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
    app.add_option("--seed", c.seed, "seed for randomized suites");
    app.add_flag("--timing", c.timing, "add wall-clock seconds to JSON reports");

    auto common = [&](CLI::App* s) {
        s->add_option("input", c.input, "input document (JSON), - for stdin");
        s->add_option("--algebra", c.algebra, "builder: gl:m:n, odd_abelian:d, ex_3_1_2, ex_5_3_1, ex_5_3_2, "
                                              "ex_5_3_3:n:a0:...:an, even_line");
        s->add_option("--field", c.field, "prime p, or 0 for Q");
    };

    auto* check = app.add_subcommand("check", "validate the algebra and modules");
    common(check);

    std::string which = "lie", module = "trivial";
    int max_degree = -1;
    auto* coh = app.add_subcommand("cohomology", "cohomology dimension table");
    common(coh);
    coh->add_option("--which", which, "lie or vg")->check(CLI::IsMember({"lie", "vg"}));
    coh->add_option("--module", module, "module name (document or trivial/natural/adjoint/coadjoint)");
    coh->add_option("--max-degree", max_degree, "highest degree (default 2p+2)")->check(CLI::NonNegativeNumber);

    std::string kind = "cone";
    std::size_t r_index = 1, bound = default_point_bound;
    auto* var = app.add_subcommand("variety", "rational points of cones, supports and C_r");
    common(var);
    var->add_option("--kind", kind, "cone, support, cr or char0-support")
        ->check(CLI::IsMember({"cone", "support", "cr", "char0-support"}));
    var->add_option("--r", r_index, "r for C_r")->check(CLI::PositiveNumber);
    var->add_option("--module", module, "module name");
    var->add_option("--bound", bound, "maximum number of points");

    std::string example;
    std::uint32_t p = 3;
    auto* ver = app.add_subcommand("verify-paper", "run a golden example");
    ver->add_option("--example", example, "3.1.1, 3.1.2, 5.3.1, 5.3.2, 5.3.3, f1, f2, nilradical, tensor, "
                                          "divisibility, complexity or all")
        ->required();
    ver->add_option("--p", p, "odd prime");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? ok : parse_error;
    }

    try {
        if (*check)
            return cmd_check(c);
        if (*coh)
            return cmd_cohomology(c, which, module, max_degree);
        if (*var)
            return cmd_variety(c, kind, r_index, module, bound);
        if (*ver) {
            parse_field(std::to_string(p));
            return cmd_verify(c, example, p);
        }
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return parse_error;
    } catch (const ResourceBound& e) {
        std::cerr << "resource bound: " << e.what() << "\n";
        return resource;
    } catch (const ScopeError& e) {
        std::cerr << "out of scope: " << e.what() << "\n";
        return resource;
    } catch (const std::out_of_range& e) {
        std::cerr << "truncation: " << e.what() << "\n";
        return resource;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return failure;
    }
    return failure;
}
