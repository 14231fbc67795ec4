#ifndef HYPERHOPF_CHARACTER_HPP
#define HYPERHOPF_CHARACTER_HPP

#include <functional>
#include <map>
#include <memory>

#include "hyperhopf/lincomb.hpp"

namespace hyperhopf {

/// Algebra morphism F[H] -> K: defined by a rule on connected hypergraphs and
/// extended multiplicatively, with 1 on the empty hypergraph. Values are
/// memoized on canonical connected components.
class Character {
public:
    Character() = default;

    /// rule is only ever called on connected nonempty hypergraphs.
    explicit Character(std::function<mpq_class(const Hypergraph&)> rule);

    mpq_class operator()(const Hypergraph& g) const;
    mpq_class operator()(const Canonical& c) const { return (*this)(to_hypergraph(c)); }

    /// Linear extension to degree-1 formal sums.
    mpq_class operator()(const HgSum& s) const;

private:
    std::function<mpq_class(const Hypergraph&)> rule_;
    std::shared_ptr<std::map<Canonical, mpq_class>> memo_ =
        std::make_shared<std::map<Canonical, mpq_class>>();
};

/// The constant character lambda_0(G) = 1.
Character lambda_zero();

/// Counit of delta as a character: 1 iff E^+(G) is empty.
Character epsilon_delta_character();

/// Convolution (f * g)(G) = sum over admissible partitions of
/// f(G/~) g(G|~), for the contraction coproduct of the given mode.
Character convolve(const Character& f, const Character& g, RestrictMode delta_mode);

/// Inverse for the convolution product; requires z(T_1) != 0.
/// Computed by the graded recursion on deg(G) = |V(G)| - cc(G).
Character character_inverse(const Character& z, RestrictMode delta_mode);

}  // namespace hyperhopf

#endif
