#include "curvop/algebra_io.hpp"

#include "curvop/errors.hpp"

#include <nlohmann/json.hpp>

#include <fstream>
#include <sstream>

namespace curvop {

namespace {

using json = nlohmann::ordered_json;

Rational coefficient_of(const json& j, const std::string& where) {
    if (j.is_number_integer()) return Rational(j.get<long>());
    if (j.is_string()) return parse_rational(j.get<std::string>());
    throw ParseError(where + ": coefficient must be an integer or a rational string");
}

MultilinearMap parse_map(const json& entries, const SpacePtr& space, int arity, int degree, const std::string& where) {
    if (!entries.is_array()) throw ParseError(where + " must be a list of entries");
    MultilinearMap m(space, arity, degree);
    for (const json& e : entries) {
        if (!e.is_object() || !e.contains("inputs") || !e.contains("output") || !e.contains("coefficient"))
            throw ParseError(where + ": entries need inputs, output and coefficient");
        MultilinearMap::Inputs in;
        for (const json& name : e.at("inputs")) in.push_back(space->index(name.get<std::string>()));
        if (static_cast<int>(in.size()) != arity)
            throw ParseError(where + ": expected " + std::to_string(arity) + " inputs per entry");
        m.add(in, space->index(e.at("output").get<std::string>()), coefficient_of(e.at("coefficient"), where));
    }
    return m;
}

json write_map(const MultilinearMap& m) {
    json arr = json::array();
    for (const auto& [in, row] : m.entries())
        for (const auto& [out, c] : row) {
            json e;
            json names = json::array();
            for (std::size_t i : in) names.push_back(m.space().name(i));
            e["inputs"] = names;
            e["output"] = m.space().name(out);
            e["coefficient"] = to_string(c);
            arr.push_back(e);
        }
    return arr;
}

}  // namespace

AlgebraStructure parse_algebra_manifest(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("algebra manifest is not valid JSON: ") + e.what());
    }
    try {
        AlgebraStructure s;
        const std::string kind = j.value("kind", "cAinf");
        if (kind == "cAinf")
            s.kind = AlgebraKind::cAinf;
        else if (kind == "cLinf")
            s.kind = AlgebraKind::cLinf;
        else
            throw ParseError("unknown algebra kind '" + kind + "'");

        std::vector<BasisVector> basis;
        for (const json& b : j.at("basis")) basis.push_back({b.at("name").get<std::string>(), b.at("degree").get<int>()});
        s.space = std::make_shared<const GradedSpace>(std::move(basis));

        s.d_A = j.contains("differential") ? parse_map(j.at("differential"), s.space, 1, -1, "differential")
                                           : MultilinearMap(s.space, 1, -1);
        if (j.contains("ops"))
            for (const auto& [key, entries] : j.at("ops").items()) {
                int n = 0;
                try {
                    n = std::stoi(key);
                } catch (const std::exception&) {
                    throw ParseError("op arity '" + key + "' is not a number");
                }
                if (n < 0) throw ParseError("negative op arity");
                MultilinearMap m = parse_map(entries, s.space, n, -1, "ops." + key);
                if (!m.is_zero()) s.ops.emplace(n, std::move(m));
            }
        s.nilpotency_bound = j.value("nilpotency_bound", 0);
        if (s.nilpotency_bound < 0) throw ParseError("nilpotency_bound must be non-negative");
        if (j.contains("elements"))
            for (const auto& [name, coords] : j.at("elements").items()) {
                std::map<std::string, Rational> c;
                for (const auto& [b, v] : coords.items()) c[b] = coefficient_of(v, "elements." + name);
                s.elements.emplace(name, make_element(*s.space, c));
            }
        return s;
    } catch (const json::exception& e) {
        throw ParseError(std::string("malformed algebra manifest: ") + e.what());
    }
}

AlgebraStructure load_algebra_manifest(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InvalidArgument("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_algebra_manifest(ss.str());
}

std::string write_algebra_manifest(const AlgebraStructure& s) {
    json j;
    j["kind"] = s.kind == AlgebraKind::cAinf ? "cAinf" : "cLinf";
    json basis = json::array();
    for (const BasisVector& b : s.space->basis()) basis.push_back({{"name", b.name}, {"degree", b.degree}});
    j["basis"] = basis;
    j["differential"] = write_map(s.d_A);
    json ops = json::object();
    for (const auto& [n, m] : s.ops)
        if (!m.is_zero()) ops[std::to_string(n)] = write_map(m);
    j["ops"] = ops;
    j["nilpotency_bound"] = s.nilpotency_bound;
    json elements = json::object();
    for (const auto& [name, e] : s.elements) {
        json coords = json::object();
        for (std::size_t i = 0; i < e.coords.size(); ++i)
            if (e.coords[i] != 0) coords[s.space->name(i)] = to_string(e.coords[i]);
        elements[name] = coords;
    }
    j["elements"] = elements;
    return j.dump(2) + "\n";
}

}  // namespace curvop
