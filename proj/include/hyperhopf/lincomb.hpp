#ifndef HYPERHOPF_LINCOMB_HPP
#define HYPERHOPF_LINCOMB_HPP

#include <gmpxx.h>

#include <map>
#include <stdexcept>
#include <vector>

#include "hyperhopf/hypergraph.hpp"

namespace hyperhopf {

/// Formal sum of tensor words over some canonical key type with rational
/// coefficients. Zero coefficients are never stored; all stored words share
/// one tensor degree.
template <typename Key>
class FormalSum {
public:
    using Word = std::vector<Key>;

    FormalSum() = default;

    static FormalSum term(Word w, mpq_class coeff = 1) {
        FormalSum s;
        s.add(std::move(w), std::move(coeff));
        return s;
    }

    void add(Word w, mpq_class coeff) {
        if (coeff == 0) return;
        if (!terms_.empty() && w.size() != degree())
            throw std::invalid_argument("tensor degree mismatch");
        auto it = terms_.find(w);
        if (it == terms_.end()) {
            terms_.emplace(std::move(w), std::move(coeff));
        } else {
            it->second += coeff;
            if (it->second == 0) terms_.erase(it);
        }
    }

    size_t degree() const { return terms_.empty() ? 0 : terms_.begin()->first.size(); }
    bool is_zero() const { return terms_.empty(); }
    size_t num_terms() const { return terms_.size(); }
    const std::map<Word, mpq_class>& terms() const { return terms_; }

    mpq_class coeff(const Word& w) const {
        auto it = terms_.find(w);
        return it == terms_.end() ? mpq_class(0) : it->second;
    }

    FormalSum operator+(const FormalSum& o) const {
        FormalSum s = *this;
        for (const auto& [w, c] : o.terms_) s.add(w, c);
        return s;
    }

    FormalSum operator-(const FormalSum& o) const { return *this + o * mpq_class(-1); }

    FormalSum operator*(const mpq_class& c) const {
        FormalSum s;
        if (c == 0) return s;
        for (const auto& [w, k] : terms_) s.terms_.emplace(w, k * c);
        return s;
    }

    bool operator==(const FormalSum& o) const { return terms_ == o.terms_; }

    /// Tensor concatenation of every pair of words.
    FormalSum tensor(const FormalSum& o) const {
        FormalSum s;
        for (const auto& [w1, c1] : terms_)
            for (const auto& [w2, c2] : o.terms_) {
                Word w = w1;
                w.insert(w.end(), w2.begin(), w2.end());
                s.add(std::move(w), c1 * c2);
            }
        return s;
    }

    /// Componentwise product of words (multiplication in each tensor leg),
    /// using the supplied product on keys.
    template <typename Mul>
    FormalSum multiply(const FormalSum& o, Mul mul) const {
        FormalSum s;
        for (const auto& [w1, c1] : terms_)
            for (const auto& [w2, c2] : o.terms_) {
                if (w1.size() != w2.size())
                    throw std::invalid_argument("tensor degree mismatch in multiply");
                Word w;
                w.reserve(w1.size());
                for (size_t i = 0; i < w1.size(); ++i) w.push_back(mul(w1[i], w2[i]));
                s.add(std::move(w), c1 * c2);
            }
        return s;
    }

    /// Rearranges the tensor legs of every word.
    FormalSum permute_legs(const std::vector<int>& perm) const {
        FormalSum s;
        for (const auto& [w, c] : terms_) {
            Word out(w.size());
            for (size_t i = 0; i < w.size(); ++i) out[i] = w[perm[i]];
            s.add(std::move(out), c);
        }
        return s;
    }

    /// Replaces leg `leg` of every word by the image sum of `fn`, splicing
    /// the produced word in place. fn: Key -> FormalSum.
    template <typename Fn>
    FormalSum map_leg(size_t leg, Fn fn) const {
        FormalSum s;
        for (const auto& [w, c] : terms_) {
            FormalSum img = fn(w[leg]);
            for (const auto& [iw, ic] : img.terms_) {
                Word out(w.begin(), w.begin() + leg);
                out.insert(out.end(), iw.begin(), iw.end());
                out.insert(out.end(), w.begin() + leg + 1, w.end());
                s.add(std::move(out), c * ic);
            }
        }
        return s;
    }

    /// Merges legs [lo, hi) of every word into one by the supplied product.
    template <typename Mul>
    FormalSum merge_legs(size_t lo, size_t hi, Mul mul) const {
        FormalSum s;
        for (const auto& [w, c] : terms_) {
            Key merged = w[lo];
            for (size_t i = lo + 1; i < hi; ++i) merged = mul(merged, w[i]);
            Word out(w.begin(), w.begin() + lo);
            out.push_back(std::move(merged));
            out.insert(out.end(), w.begin() + hi, w.end());
            s.add(std::move(out), c);
        }
        return s;
    }

private:
    std::map<Word, mpq_class> terms_;
};

/// Tensor word over canonical hypergraphs; length 1 for elements of F[H].
using TensorWord = std::vector<Canonical>;

/// Elements of F[H] and its tensor powers.
using HgSum = FormalSum<Canonical>;

/// Product of two canonical hypergraphs: canonicalized disjoint union.
Canonical canonical_product(const Canonical& a, const Canonical& b);

/// Degree-1 sum holding a single hypergraph.
HgSum as_sum(const Hypergraph& g);

/// The empty-hypergraph word of tensor degree k (the unit of F[H]^{⊗k}).
TensorWord unit_word(size_t k);

}  // namespace hyperhopf

#endif
