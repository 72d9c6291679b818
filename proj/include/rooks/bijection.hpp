#pragma once

#include "rooks/errors.hpp"
#include "rooks/multivariate.hpp"
#include "rooks/tree.hpp"

#include <functional>
#include <utility>
#include <vector>

namespace rooks {

/// Injective f: [n-1] -> [kn]; a maximal rook placement on the (n-1) x kn board.
struct FlatPlacement {
    int n = 0;
    int k = 0;
    std::vector<int> f;  // f[i-1] = f(i)

    /// Throws InvalidArgument unless f is injective with values in [kn].
    void validate() const;
    friend bool operator==(const FlatPlacement&, const FlatPlacement&) = default;
};

/// A cell (a, b) of [n] x [k]: column a, colour b.
struct ColoredCell {
    int column = 0;
    int color = 0;
    friend bool operator==(const ColoredCell&, const ColoredCell&) = default;
    friend auto operator<=>(const ColoredCell&, const ColoredCell&) = default;
};

/// Injective g: [n-1] -> [n] x [k].
struct ColoredPlacement {
    int n = 0;
    int k = 0;
    std::vector<ColoredCell> g;  // g[i-1] = g(i)

    void validate() const;
    friend bool operator==(const ColoredPlacement&, const ColoredPlacement&) = default;
};

/// f(i) -> (f(i) - n floor((f(i)-1)/n), ceil(f(i)/n)).
ColoredPlacement phi(const FlatPlacement& f);
/// (a, b) -> a + (b-1) n.
FlatPlacement phi_inverse(const ColoredPlacement& g);

struct ExcSub {
    WeakComposition exc;  // exc[j-1]: positions i with g(i) = (a, j), a > i
    WeakComposition sub;  // sub[j-1]: positions i with g(i) = (a, j), a <= i
};

ExcSub exc_sub(const ColoredPlacement& g);

/// Functional digraph of g: edge i -> g(i).column labeled g(i).color. Vertex n
/// has no outgoing edge.
class DecoratedDigraph {
public:
    explicit DecoratedDigraph(const ColoredPlacement& g);

    int n() const noexcept { return n_; }
    int target(int vertex) const { return target_[static_cast<std::size_t>(vertex)]; }
    int label(int vertex) const { return label_[static_cast<std::size_t>(vertex)]; }

    /// Each directed cycle as a vertex list starting from its largest element,
    /// sorted by that element.
    std::vector<std::vector<int>> cycles() const;
    /// Number of weakly connected components.
    int component_count() const;

private:
    int n_ = 0;
    std::vector<int> target_;  // index 1..n; target_[n] = 0
    std::vector<int> label_;
};

/// Colored placement -> plane k-ary tree. Components of the digraph are
/// ordered by the largest vertex on their cycle; each cycle is opened at that
/// vertex and the pieces are chained onto the spine that ends at n.
PlaneKaryTree psi(const ColoredPlacement& g);

/// Inverse of psi, driven by the left-to-right maxima of the spine.
ColoredPlacement psi_inverse(const PlaneKaryTree& tree);

/// |F~_{n,k}| = (kn)(kn-1)...(kn-n+2).
BigInt colored_placement_count(int n, int k);

/// Visits every element of F~_{n,k} in lexicographic order of (g(1), ..., g(n-1)).
void for_each_colored_placement(int n, int k, const std::function<void(const ColoredPlacement&)>& visit,
                                const Limits& limits = {});

/// Sum over F~_{n,k} of u^exc v^sub.
MultivariatePolynomial gessel_polynomial(int n, int k, const Limits& limits = {});

}  // namespace rooks
