#ifndef KOCHENLAB_MPOLY_HPP
#define KOCHENLAB_MPOLY_HPP

#include <map>
#include <string>
#include <vector>

#include "kochenlab/rat.hpp"

namespace kochenlab {

// Sparse multivariate polynomial over Q. Terms map exponent vectors
// (length == arity) to nonzero coefficients; the map order makes every
// traversal deterministic.
class MPoly {
  public:
    using Exps = std::vector<int>;

    MPoly() : arity_(0) {}
    explicit MPoly(int arity) : arity_(arity) {
        if (arity < 0) throw input_error("MPoly: negative arity");
    }

    static MPoly constant(int arity, const Rat& c);
    static MPoly variable(int arity, int index);

    int arity() const { return arity_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<Exps, Rat>& terms() const { return terms_; }

    void add_term(const Exps& e, const Rat& c);
    Rat coeff(const Exps& e) const;

    MPoly operator+(const MPoly& o) const;
    MPoly operator-(const MPoly& o) const;
    MPoly operator-() const;
    MPoly operator*(const MPoly& o) const;
    MPoly operator*(const Rat& c) const;
    bool operator==(const MPoly& o) const { return arity_ == o.arity_ && terms_ == o.terms_; }

    MPoly pow(unsigned n) const;

    int total_degree() const; // 0 for the zero polynomial
    Int height() const;       // max over coefficient heights, 0 for zero

    // Reinterpret in a larger variable space: variable i becomes map[i].
    MPoly remap(int new_arity, const std::vector<int>& map) const;

    // Substitute constants for the variables with index >= keep;
    // result has arity == keep.
    MPoly substitute_tail(int keep, const std::vector<Rat>& values) const;

    // Evaluate at a full point over any commutative ring. Ring must
    // provide: Elem, zero(), one(), from_rat(Rat), add, mul.
    template <class Ring>
    typename Ring::Elem eval(const Ring& R, const std::vector<typename Ring::Elem>& x) const {
        if (static_cast<int>(x.size()) != arity_)
            throw input_error("MPoly::eval: point arity mismatch");
        auto acc = R.zero();
        for (const auto& [e, c] : terms_) {
            auto t = R.from_rat(c);
            for (int i = 0; i < arity_; ++i)
                for (int j = 0; j < e[i]; ++j) t = R.mul(t, x[i]);
            acc = R.add(acc, t);
        }
        return acc;
    }

    Rat eval_rat(const std::vector<Rat>& x) const;

    std::string str(const std::vector<std::string>& names = {}) const;

  private:
    int arity_;
    std::map<Exps, Rat> terms_;
};

// Randomized coprimality check over Q[X_1..X_n] (Schwartz–Zippel style
// specializations; deterministic seed). Sound when it answers true.
bool mpoly_coprime(const MPoly& f, const MPoly& g);

} // namespace kochenlab

#endif
