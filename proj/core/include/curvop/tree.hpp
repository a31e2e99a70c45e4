#pragma once

#include "curvop/permutation.hpp"

#include <compare>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace curvop {

enum class Mode { nonsymmetric, symmetric };

/// planar: no symmetry. invariant: mu^sigma = mu for every sigma (only
/// meaningful for symmetric operads).
enum class Symmetry { planar, invariant };

std::string_view to_string(Mode m);
Mode parse_mode(std::string_view s);

struct Generator {
    std::string name;
    int arity = 0;
    int degree = 0;
    Symmetry symmetry = Symmetry::planar;

    auto operator<=>(const Generator&) const = default;
};

/// A decorated rooted tree: every vertex carries a generator and has exactly
/// arity-many children, each either a subtree or an external leaf labelled by
/// a positive integer. Immutable once built; arity, degree and least leaf
/// label are cached at construction.
class Tree {
public:
    static Tree leaf(int label);
    static Tree vertex(Generator g, std::vector<Tree> children = {});

    bool is_leaf() const { return label_ > 0; }
    int label() const { return label_; }
    const Generator& generator() const { return gen_; }
    const std::vector<Tree>& children() const { return children_; }

    /// Number of external leaves.
    int arity() const { return arity_; }
    /// Sum of the vertex degrees.
    int degree() const { return degree_; }
    /// Least external-leaf label, 0 if there are none.
    int min_leaf() const { return min_leaf_; }
    int vertex_count() const;
    /// Number of vertices labelled by the named generator.
    int count(std::string_view generator_name) const;
    bool contains(std::string_view generator_name) const { return count(generator_name) > 0; }

    /// Leaf labels in left-to-right order.
    std::vector<int> leaf_labels() const;
    /// Vertices in left-to-right depth-first (pre-)order.
    void for_each_vertex(const std::function<void(const Tree&)>& f) const;

    std::string to_string() const;

    friend std::strong_ordering operator<=>(const Tree& a, const Tree& b);
    friend bool operator==(const Tree& a, const Tree& b) { return (a <=> b) == 0; }

private:
    int label_ = 0;
    Generator gen_;
    std::vector<Tree> children_;
    int arity_ = 0;
    int degree_ = 0;
    int min_leaf_ = 0;
};

struct SignedTree {
    Tree tree;
    Sign sign;
};

/// Replaces the external leaf labelled j of `outer` by blocks[j-1]. The sign
/// is the Koszul sign of moving the vertices from the order
/// (outer vertices, blocks[0], blocks[1], ...) into depth-first order of the
/// result.
SignedTree graft_all(const Tree& outer, std::span<const Tree> blocks);

/// Applies f to every external leaf label.
Tree relabel(const Tree& t, const std::function<int(int)>& f);

/// Replaces every vertex labelled `from` by a vertex labelled `to` (same arity).
Tree rename_vertices(const Tree& t, std::string_view from, const Generator& to);

/// Symmetric-mode normal form: children of invariant vertices sorted by least
/// leaf, nullary children after the others in tree order. Returns false when
/// the tree is zero (two equal odd nullary siblings under an invariant vertex).
bool canonical_form(const Tree& t, SignedTree& out);

}  // namespace curvop
