#include "curvop/manifest.hpp"

#include "curvop/errors.hpp"
#include "curvop/parse.hpp"

#include <fstream>
#include <map>
#include <sstream>

namespace curvop {

namespace {

std::string trim(std::string_view s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string_view::npos) return {};
    const auto e = s.find_last_not_of(" \t\r");
    return std::string(s.substr(b, e - b + 1));
}

struct Line {
    int number;
    std::string text;
};

struct RawManifest {
    std::map<std::string, std::string> header;
    std::map<std::string, std::vector<Line>> sections;

    const std::vector<Line>& section(const std::string& name) const {
        static const std::vector<Line> empty;
        auto it = sections.find(name);
        return it == sections.end() ? empty : it->second;
    }
    std::optional<std::string> get(const std::string& key) const {
        auto it = header.find(key);
        if (it == header.end()) return std::nullopt;
        return it->second;
    }
    std::string require(const std::string& key) const {
        auto v = get(key);
        if (!v) throw ParseError("manifest is missing the '" + key + "' header");
        return *v;
    }
};

RawManifest read_raw(std::string_view text, std::initializer_list<const char*> allowed_sections) {
    RawManifest m;
    std::string current;
    std::istringstream in{std::string(text)};
    std::string raw;
    int number = 0;
    while (std::getline(in, raw)) {
        ++number;
        if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
        const std::string line = trim(raw);
        if (line.empty()) continue;
        if (line.back() == ':' && line.find('=') == std::string::npos) {
            current = trim(std::string_view(line).substr(0, line.size() - 1));
            bool ok = false;
            for (const char* s : allowed_sections) ok = ok || current == s;
            if (!ok) throw ParseError("line " + std::to_string(number) + ": unknown section '" + current + "'");
            if (m.sections.count(current))
                throw ParseError("line " + std::to_string(number) + ": repeated section '" + current + "'");
            m.sections[current];
            continue;
        }
        if (current.empty()) {
            const auto eq = line.find('=');
            if (eq == std::string::npos)
                throw ParseError("line " + std::to_string(number) + ": expected 'key = value'");
            const std::string key = trim(std::string_view(line).substr(0, eq));
            if (!m.header.emplace(key, trim(std::string_view(line).substr(eq + 1))).second)
                throw ParseError("line " + std::to_string(number) + ": repeated key '" + key + "'");
        } else {
            m.sections[current].push_back({number, line});
        }
    }
    return m;
}

int parse_int(const std::string& s, const std::string& what) {
    try {
        std::size_t used = 0;
        const int v = std::stoi(s, &used);
        if (used == s.size()) return v;
    } catch (const std::exception&) {
    }
    throw ParseError(what + ": '" + s + "' is not an integer");
}

std::vector<Generator> parse_generators(const std::vector<Line>& lines) {
    std::vector<Generator> out;
    for (const Line& l : lines) {
        std::istringstream ws(l.text);
        std::vector<std::string> words;
        for (std::string w; ws >> w;) words.push_back(w);
        const std::string where = "line " + std::to_string(l.number);
        if (words.size() < 3 || words.size() > 4) throw ParseError(where + ": expected 'name arity degree [symmetry]'");
        Generator g{words[0], parse_int(words[1], where), parse_int(words[2], where), Symmetry::planar};
        if (g.arity < 0) throw ParseError(where + ": negative arity");
        if (words.size() == 4) {
            if (words[3] == "invariant")
                g.symmetry = Symmetry::invariant;
            else if (words[3] != "planar")
                throw ParseError(where + ": unknown symmetry '" + words[3] + "'");
        }
        for (const Generator& h : out)
            if (h.name == g.name) throw NameCollision(where + ": generator '" + g.name + "' declared twice");
        out.push_back(std::move(g));
    }
    return out;
}

std::map<std::string, Element> parse_values(const std::vector<Line>& lines, Mode mode, std::span<const Generator> domain,
                                            std::span<const Generator> codomain) {
    std::map<std::string, Element> out;
    for (const Line& l : lines) {
        const auto eq = l.text.find('=');
        const std::string where = "line " + std::to_string(l.number);
        if (eq == std::string::npos) throw ParseError(where + ": expected 'generator = expression'");
        const std::string name = trim(std::string_view(l.text).substr(0, eq));
        const Generator* g = find_generator(domain, name);
        if (!g) throw UnknownGenerator(where + ": '" + name + "'");
        Element v;
        try {
            v = parse_element(trim(std::string_view(l.text).substr(eq + 1)), mode, codomain, g->arity);
        } catch (const Error& e) {
            throw ParseError(where + ": " + e.what());
        }
        if (v.arity() != g->arity)
            throw ArityMismatch(where + ": value of " + name + " has arity " + std::to_string(v.arity()));
        if (!out.emplace(name, std::move(v)).second) throw ParseError(where + ": repeated value for " + name);
    }
    return out;
}

void write_generators(std::ostringstream& os, const char* section, const std::vector<Generator>& gens) {
    os << section << ":\n";
    for (const Generator& g : gens)
        os << "  " << g.name << ' ' << g.arity << ' ' << g.degree << ' '
           << (g.symmetry == Symmetry::invariant ? "invariant" : "planar") << '\n';
}

// Values in generator order; zero values are omitted.
void write_values(std::ostringstream& os, const char* section, const std::vector<Generator>& order,
                  const std::map<std::string, Element>& values) {
    os << section << ":\n";
    for (const Generator& g : order) {
        auto it = values.find(g.name);
        if (it != values.end() && !it->second.is_zero()) os << "  " << g.name << " = " << it->second << '\n';
    }
}

void write_common_header(std::ostringstream& os, const std::string& name, Mode mode, int arity_bound,
                         int alpha_truncation) {
    if (!name.empty()) os << "name = " << name << '\n';
    os << "mode = " << to_string(mode) << '\n';
    os << "arity_bound = " << arity_bound << '\n';
    os << "alpha_truncation = " << alpha_truncation << '\n';
}

int optional_int(const RawManifest& m, const std::string& key, int fallback) {
    auto v = m.get(key);
    return v ? parse_int(*v, key) : fallback;
}

void check_keys(const RawManifest& m, std::initializer_list<const char*> keys) {
    for (const auto& [k, v] : m.header) {
        bool ok = false;
        for (const char* a : keys) ok = ok || k == a;
        if (!ok) throw ParseError("unknown header key '" + k + "'");
    }
}

}  // namespace

std::string write_presentation(const Presentation& p) {
    std::ostringstream os;
    write_common_header(os, p.name, p.mode(), p.arity_bound, p.alpha_truncation);
    if (p.kappa) os << "kappa = " << *p.kappa << '\n';
    if (!p.inexact.empty()) {
        os << "inexact = ";
        bool first = true;
        for (const std::string& s : p.inexact) {
            os << (first ? "" : ", ") << s;
            first = false;
        }
        os << '\n';
    }
    write_generators(os, "generators", p.generators());
    write_values(os, "d", p.generators(), p.d.values());
    return os.str();
}

Presentation parse_presentation(std::string_view text) {
    const RawManifest m = read_raw(text, {"generators", "d"});
    check_keys(m, {"name", "mode", "arity_bound", "alpha_truncation", "kappa", "inexact"});
    Presentation p;
    p.name = m.get("name").value_or("");
    const Mode mode = parse_mode(m.require("mode"));
    const std::vector<Generator> gens = parse_generators(m.section("generators"));
    p.d = Derivation(mode, gens, parse_values(m.section("d"), mode, gens, gens));
    p.arity_bound = optional_int(m, "arity_bound", -1);
    p.alpha_truncation = optional_int(m, "alpha_truncation", -1);
    if (auto k = m.get("kappa")) {
        if (!find_generator(gens, *k)) throw UnknownGenerator("kappa '" + *k + "' is not declared");
        p.kappa = *k;
    }
    if (auto in = m.get("inexact")) {
        std::istringstream ss(*in);
        for (std::string s; std::getline(ss, s, ',');)
            if (!trim(s).empty()) p.inexact.insert(trim(s));
    }
    return p;
}

std::string write_curv(const CurvObject& q) {
    std::ostringstream os;
    write_common_header(os, q.name, q.mode, q.arity_bound, q.alpha_truncation);
    os << "kappa = " << q.kappa << '\n';
    write_generators(os, "generators", q.generators);
    write_values(os, "d0", q.generators, q.d0.values());
    write_values(os, "d1", q.generators, q.d1.values());
    return os.str();
}

CurvObject parse_curv(std::string_view text) {
    const RawManifest m = read_raw(text, {"generators", "d0", "d1"});
    check_keys(m, {"name", "mode", "arity_bound", "alpha_truncation", "kappa"});
    CurvObject q;
    q.name = m.get("name").value_or("");
    q.mode = parse_mode(m.require("mode"));
    q.generators = parse_generators(m.section("generators"));
    q.kappa = m.require("kappa");
    if (!find_generator(q.generators, q.kappa)) throw UnknownGenerator("kappa '" + q.kappa + "' is not declared");
    q.d0 = Derivation(q.mode, q.generators, parse_values(m.section("d0"), q.mode, q.generators, q.generators));
    q.d1 = Derivation(q.mode, q.generators, parse_values(m.section("d1"), q.mode, q.generators, q.generators));
    q.arity_bound = optional_int(m, "arity_bound", -1);
    q.alpha_truncation = optional_int(m, "alpha_truncation", -1);
    return q;
}

std::string write_morphism(const Morphism& f) {
    std::ostringstream os;
    os << "mode = " << to_string(f.mode()) << '\n';
    os << "precision = " << f.precision() << '\n';
    write_generators(os, "source", f.source());
    write_generators(os, "target", f.target());
    write_values(os, "images", f.source(), f.images());
    return os.str();
}

Morphism parse_morphism(std::string_view text) {
    const RawManifest m = read_raw(text, {"source", "target", "images"});
    check_keys(m, {"mode", "precision"});
    const Mode mode = parse_mode(m.require("mode"));
    const std::vector<Generator> source = parse_generators(m.section("source"));
    const std::vector<Generator> target = parse_generators(m.section("target"));
    Morphism f(mode, source, target, optional_int(m, "precision", -1));
    for (auto& [name, v] : parse_values(m.section("images"), mode, source, target)) f.set_image(name, std::move(v));
    return f;
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InvalidArgument("cannot read '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace curvop
