#include <stdexcept>

#include "hyperhopf/character.hpp"
#include "hyperhopf/lincomb.hpp"

namespace hyperhopf {

Canonical canonical_product(const Canonical& a, const Canonical& b) {
    return canonical_form(disjoint_union(to_hypergraph(a), to_hypergraph(b)));
}

HgSum as_sum(const Hypergraph& g) { return HgSum::term({canonical_form(g)}); }

TensorWord unit_word(size_t k) { return TensorWord(k, Canonical{}); }

Character::Character(std::function<mpq_class(const Hypergraph&)> rule)
    : rule_(std::move(rule)) {}

mpq_class Character::operator()(const Hypergraph& g) const {
    if (!rule_) throw std::logic_error("uninitialized character");
    mpq_class out = 1;
    for (const Hypergraph& comp : connected_components(g)) {
        Canonical key = canonical_form(comp);
        auto it = memo_->find(key);
        if (it == memo_->end()) it = memo_->emplace(key, rule_(comp)).first;
        out *= it->second;
    }
    return out;
}

mpq_class Character::operator()(const HgSum& s) const {
    mpq_class out = 0;
    for (const auto& [w, c] : s.terms()) {
        if (w.size() != 1) throw std::invalid_argument("character expects degree-1 sums");
        out += c * (*this)(w[0]);
    }
    return out;
}

Character lambda_zero() {
    return Character([](const Hypergraph&) { return mpq_class(1); });
}

Character epsilon_delta_character() {
    return Character([](const Hypergraph& g) {
        return mpq_class(g.has_nontrivial_edge() ? 0 : 1);
    });
}

Character convolve(const Character& f, const Character& g, RestrictMode delta_mode) {
    return Character([f, g, delta_mode](const Hypergraph& h) {
        mpq_class out = 0;
        for (const SetPartition& p : admissible_partitions(h, delta_mode))
            out += f(quotient(h, p)) * g(partition_restrict(h, p, delta_mode));
        return out;
    });
}

Character character_inverse(const Character& z, RestrictMode delta_mode) {
    Hypergraph t1({"x"});
    mpq_class z1 = z(t1);
    if (z1 == 0)
        throw std::invalid_argument("character_inverse: z(T_1) = 0, not invertible");

    // Solve inv * z = eps_delta degreewise: the discrete partition isolates
    // inv(G) z(T_1)^n; every other admissible partition strictly lowers
    // deg = |V| - cc of the contracted factor.
    auto memo = std::make_shared<std::map<Canonical, mpq_class>>();
    auto self = std::make_shared<std::function<mpq_class(const Hypergraph&)>>();
    *self = [z, z1, delta_mode, memo, self](const Hypergraph& g) -> mpq_class {
        mpq_class out = 1;
        for (const Hypergraph& comp : connected_components(g)) {
            Canonical key = canonical_form(comp);
            auto it = memo->find(key);
            if (it == memo->end()) {
                int n = comp.num_vertices();
                mpq_class acc = comp.has_nontrivial_edge() ? 0 : 1;  // eps_delta
                for (const SetPartition& p : admissible_partitions(comp, delta_mode)) {
                    if (p.is_discrete()) continue;
                    acc -= (*self)(quotient(comp, p)) * z(partition_restrict(comp, p, delta_mode));
                }
                mpq_class denom = 1;
                for (int i = 0; i < n; ++i) denom *= z1;
                it = memo->emplace(key, acc / denom).first;
            }
            out *= it->second;
        }
        return out;
    };
    return Character([self](const Hypergraph& g) { return (*self)(g); });
}

}  // namespace hyperhopf
