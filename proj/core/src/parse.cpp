#include "curvop/parse.hpp"

#include "curvop/errors.hpp"

#include <cctype>

namespace curvop {

const Generator* find_generator(std::span<const Generator> gens, std::string_view name) {
    for (const Generator& g : gens)
        if (g.name == name) return &g;
    return nullptr;
}

namespace {

class Parser {
public:
    Parser(std::string_view text, std::span<const Generator> gens) : s_(text), gens_(gens) {}

    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    bool at_end() {
        skip();
        return pos_ >= s_.size();
    }
    char peek() {
        skip();
        return pos_ < s_.size() ? s_[pos_] : '\0';
    }
    bool accept(char c) {
        if (peek() != c) return false;
        ++pos_;
        return true;
    }
    void expect(char c) {
        if (!accept(c)) fail(std::string("expected '") + c + "'");
    }
    [[noreturn]] void fail(const std::string& what) const {
        throw ParseError(what + " at offset " + std::to_string(pos_) + " in '" + std::string(s_) + "'");
    }

    std::string_view digits() {
        skip();
        const std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        return s_.substr(start, pos_ - start);
    }

    std::string_view identifier() {
        skip();
        const std::size_t start = pos_;
        while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
        return s_.substr(start, pos_ - start);
    }

    Tree tree() {
        if (std::isdigit(static_cast<unsigned char>(peek()))) {
            const std::string_view d = digits();
            const int label = std::stoi(std::string(d));
            if (label <= 0) fail("leaf labels must be positive");
            return Tree::leaf(label);
        }
        const std::string_view name = identifier();
        if (name.empty()) fail("expected a generator name or leaf label");
        const Generator* g = find_generator(gens_, name);
        if (!g) throw UnknownGenerator("'" + std::string(name) + "'");
        std::vector<Tree> kids;
        if (accept('(')) {
            if (!accept(')')) {
                do kids.push_back(tree());
                while (accept(','));
                expect(')');
            }
        }
        if (static_cast<int>(kids.size()) != g->arity)
            throw ArityMismatch(g->name + " has arity " + std::to_string(g->arity) + " but was given " +
                                std::to_string(kids.size()) + " children");
        return Tree::vertex(*g, std::move(kids));
    }

    // [digits [/ digits] *] tree  |  digits [/ digits]   (the latter only for "0")
    std::pair<Rational, std::optional<Tree>> term() {
        Rational c = 1;
        skip();
        const std::size_t save = pos_;
        if (std::isdigit(static_cast<unsigned char>(peek()))) {
            std::string num(digits());
            std::string den = "1";
            if (accept('/')) {
                den = std::string(digits());
                if (den.empty()) fail("expected a denominator");
            }
            if (accept('*')) {
                c = parse_rational(num + "/" + den);
            } else if (den != "1" || at_end() || peek() == '+' || peek() == '-') {
                Rational q = parse_rational(num + "/" + den);
                if (q != 0) fail("a bare coefficient must be followed by '* tree'");
                return {q, std::nullopt};
            } else {
                pos_ = save;
            }
        }
        return {c, tree()};
    }

    std::size_t pos_ = 0;

private:
    std::string_view s_;
    std::span<const Generator> gens_;
};

}  // namespace

Tree parse_tree(std::string_view text, std::span<const Generator> gens) {
    Parser p(text, gens);
    Tree t = p.tree();
    if (!p.at_end()) p.fail("trailing input");
    return t;
}

Element parse_element(std::string_view text, Mode mode, std::span<const Generator> gens, int zero_arity) {
    Parser p(text, gens);
    std::vector<std::pair<Rational, Tree>> parsed;
    bool first = true;
    while (!p.at_end()) {
        int sign = 1;
        if (p.accept('-')) {
            sign = -1;
        } else if (!p.accept('+') && !first) {
            p.fail("expected '+' or '-'");
        }
        first = false;
        auto [c, t] = p.term();
        if (t) parsed.emplace_back(sign < 0 ? Rational(-c) : c, std::move(*t));
    }
    if (first) p.fail("empty expression");
    if (parsed.empty()) return Element(mode, zero_arity);
    Element e(mode, parsed.front().second.arity());
    for (const auto& [c, t] : parsed) e += Element::from_tree(mode, t, c);
    return e;
}

}  // namespace curvop
