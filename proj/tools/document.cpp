#include "document.hpp"

#include "supvar/catalog.hpp"

#include <fstream>
#include <sstream>

namespace supvar::cli {

using nlohmann::json;

Field parse_field(const std::string& text)
{
    if (text == "0" || text == "Q" || text == "char0")
        return Field::rationals();
    try {
        std::size_t used = 0;
        long p = std::stol(text, &used);
        if (used != text.size() || p <= 0)
            throw ParseError("bad field \"" + text + "\"");
        return Field::prime(static_cast<std::uint32_t>(p));
    } catch (const FieldError& e) {
        throw ParseError(e.what());
    } catch (const std::logic_error&) {
        throw ParseError("bad field \"" + text + "\"");
    }
}

Scalar parse_scalar(const Field& f, const json& j)
{
    if (j.is_number_integer())
        return Scalar(f, j.get<std::int64_t>());
    if (j.is_string()) {
        try {
            return Scalar::parse(f, j.get<std::string>());
        } catch (const std::exception& e) {
            throw ParseError("bad scalar " + j.dump() + ": " + e.what());
        }
    }
    throw ParseError("scalars are integers or \"a/b\" strings, got " + j.dump());
}

Matrix parse_matrix(const Field& f, const json& j)
{
    if (!j.is_array())
        throw ParseError("matrix must be a list of rows");
    const std::size_t r = j.size();
    const std::size_t c = r ? j[0].size() : 0;
    Matrix m(f, r, c);
    for (std::size_t i = 0; i < r; ++i) {
        if (!j[i].is_array() || j[i].size() != c)
            throw ParseError("ragged matrix");
        for (std::size_t k = 0; k < c; ++k)
            m(i, k) = parse_scalar(f, j[i][k]);
    }
    return m;
}

namespace {

std::vector<std::string> split(const std::string& s, char sep)
{
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string part;
    while (std::getline(ss, part, sep))
        out.push_back(part);
    return out;
}

std::int64_t to_int(const std::string& s)
{
    try {
        std::size_t used = 0;
        auto v = std::stoll(s, &used);
        if (used != s.size())
            throw ParseError("bad integer \"" + s + "\"");
        return v;
    } catch (const std::logic_error&) {
        throw ParseError("bad integer \"" + s + "\"");
    }
}

std::size_t basis_index(const LieSuperalgebra& g, const json& j)
{
    if (j.is_number_unsigned() && j.get<std::size_t>() < g.dim())
        return j.get<std::size_t>();
    if (j.is_string())
        if (auto i = g.index_of(j.get<std::string>()))
            return *i;
    throw ParseError("unknown basis element " + j.dump());
}

Vector parse_element(const LieSuperalgebra& g, const json& j)
{
    Vector v = g.zero();
    if (!j.is_object())
        throw ParseError("Lie elements are objects {basis name: coefficient}");
    for (const auto& [k, c] : j.items())
        v[basis_index(g, json(k))] = parse_scalar(g.field(), c);
    return v;
}

LieSuperalgebra explicit_algebra(const json& j, const Field& f)
{
    if (!j.contains("basis") || !j["basis"].is_array())
        throw ParseError("algebra needs a basis list");
    std::vector<std::string> names;
    std::vector<int> par;
    for (const auto& b : j["basis"]) {
        if (!b.is_object() || !b.contains("name") || !b.contains("parity"))
            throw ParseError("basis entries are {\"name\", \"parity\"}");
        names.push_back(b["name"].get<std::string>());
        int p = b["parity"].get<int>();
        if (p != 0 && p != 1)
            throw ParseError("parity must be 0 or 1");
        par.push_back(p);
    }
    LieSuperalgebra g(f, names, par);
    const json brackets = j.value("brackets", json::array());
    for (const auto& br : brackets) {
        if (!br.is_array() || br.size() != 3)
            throw ParseError("brackets are [a, b, {c: coefficient}]");
        g.set_bracket_antisym(basis_index(g, br[0]), basis_index(g, br[1]), parse_element(g, br[2]));
    }
    if (j.contains("pmap")) {
        std::vector<Vector> im(g.dim(), g.zero());
        for (const auto& [k, v] : j["pmap"].items())
            im[basis_index(g, json(k))] = parse_element(g, v);
        g.set_pmap(im);
    }
    if (j.contains("realization")) {
        const auto& r = j["realization"];
        std::vector<Matrix> mats;
        for (const auto& n : names) {
            if (!r["matrices"].contains(n))
                throw ParseError("realization is missing " + n);
            mats.push_back(parse_matrix(f, r["matrices"][n]));
        }
        g.set_realization(mats, r.value("even_rows", std::size_t{0}));
    }
    return g;
}

Supermodule explicit_module(const LieSuperalgebra& g, const json& j)
{
    const std::size_t de = j.value("even", std::size_t{0}), dd = j.value("odd", std::size_t{0});
    std::vector<Matrix> rho;
    for (std::size_t a = 0; a < g.dim(); ++a) {
        if (j.contains("rho") && j["rho"].contains(g.name(a)))
            rho.push_back(parse_matrix(g.field(), j["rho"][g.name(a)]));
        else
            rho.push_back(Matrix(g.field(), de + dd, de + dd));
    }
    try {
        return Supermodule(g.field(), de, dd, rho);
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what());
    }
}

}  // namespace

LieSuperalgebra builder_algebra(const std::string& spec, const Field& f)
{
    auto parts = split(spec, ':');
    if (parts.empty())
        throw ParseError("empty algebra name");
    std::vector<std::int64_t> params;
    for (std::size_t i = 1; i < parts.size(); ++i)
        params.push_back(to_int(parts[i]));
    try {
        if (parts[0] == "gl") {
            if (params.size() != 2 || params[0] < 0 || params[1] < 0)
                throw ParseError("gl needs gl:m:n");
            return build_gl(std::size_t(params[0]), std::size_t(params[1]), f);
        }
        return build_example(parts[0], f, params);
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what());
    }
}

Supermodule named_module(const LieSuperalgebra& g, const std::string& name)
{
    if (name == "trivial")
        return trivial_module(g);
    if (name == "natural") {
        if (!g.has_realization())
            throw ParseError("algebra has no matrix realization");
        return natural_module(g);
    }
    if (name == "adjoint")
        return adjoint_module(g);
    if (name == "coadjoint")
        return coadjoint_module(g);
    throw ParseError("unknown module \"" + name + "\"");
}

Document parse_document(const json& j, std::optional<Field> field_override)
{
    if (!j.is_object())
        throw ParseError("document must be an object");
    Document d;
    if (field_override)
        d.field = *field_override;
    else if (j.contains("field"))
        d.field = parse_field(j["field"].is_string() ? j["field"].get<std::string>() : j["field"].dump());
    try {
        if (j.contains("algebra")) {
            const auto& a = j["algebra"];
            d.algebra = a.is_string() ? builder_algebra(a.get<std::string>(), d.field) : explicit_algebra(a, d.field);
        }
        if (j.contains("modules")) {
            if (!d.algebra)
                throw ParseError("modules need an algebra");
            for (const auto& [name, m] : j["modules"].items())
                d.modules.emplace(name, m.is_string() ? named_module(*d.algebra, m.get<std::string>())
                                                      : explicit_module(*d.algebra, m));
        }
        if (j.contains("group")) {
            const json on_v = j["group"].value("on_v", json::array());
            const json on_m = j["group"].value("on_m", json::object());
            for (const auto& m : on_v)
                d.group_on_v.push_back(parse_matrix(d.field, m));
            for (const auto& [name, mats] : on_m.items())
                for (const auto& m : mats)
                    d.group_on_m[name].push_back(parse_matrix(d.field, m));
        }
        const json tv = j.value("test_vectors", json::array());
        for (const auto& v : tv) {
            Vector x;
            for (const auto& c : v)
                x.push_back(parse_scalar(d.field, c));
            d.test_vectors.push_back(x);
        }
    } catch (const json::exception& e) {
        throw ParseError(e.what());
    }
    return d;
}

Document load_document(const std::string& path, std::optional<Field> field_override)
{
    std::ifstream in(path);
    if (!in)
        throw ParseError("cannot open " + path);
    json j;
    try {
        j = json::parse(in);
    } catch (const json::parse_error& e) {
        throw ParseError(e.what());
    }
    return parse_document(j, field_override);
}

}  // namespace supvar::cli
