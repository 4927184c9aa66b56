#include "kochenlab/brauer.hpp"

#include <algorithm>
#include <cstdlib>

#include "kochenlab/errors.hpp"

namespace kochenlab {

namespace {

Rat p_power(const Int& p, long long e) {
    Rat r = 1;
    for (long long i = 0; i < std::llabs(e); ++i) r *= Rat(p);
    return e >= 0 ? r : Rat(1) / r;
}

int legendre_unit(const Rat& u, const Int& p) {
    Int n = u.get_num(), d = u.get_den();
    return mpz_legendre(n.get_mpz_t(), p.get_mpz_t()) *
           mpz_legendre(d.get_mpz_t(), p.get_mpz_t());
}

// class mod 8 of an odd 2-adic unit; odd d has d^{-1} = d mod 8
long mod8(const Rat& u) {
    Int n = u.get_num() % 8, d = u.get_den() % 8;
    Int m = (n * d) % 8;
    if (m < 0) m += 8;
    return m.get_si();
}

int eps8(long m) { return m % 4 == 3 ? 1 : 0; }
int omega8(long m) { return (m == 3 || m == 5) ? 1 : 0; }

std::set<Int> odd_prime_support(const Rat& x) {
    std::set<Int> out;
    for (Int n : {Int(abs(x.get_num())), Int(x.get_den())}) {
        while (n % 2 == 0) n /= 2;
        for (Int d = 3; d * d <= n; d += 2)
            while (n % d == 0) {
                out.insert(d);
                n /= d;
            }
        if (n > 1) out.insert(n);
    }
    return out;
}

} // namespace

std::string Place::str() const { return finite ? p.get_str() : "real"; }

int hilbert_symbol(const Rat& a, const Rat& b, const Place& v) {
    if (a == 0 || b == 0) throw input_error("hilbert_symbol: arguments must be nonzero");
    if (!v.finite) return (a < 0 && b < 0) ? -1 : +1;
    if (!is_prime(v.p)) throw input_error("hilbert_symbol: finite place must be a prime");
    const long long al = val_p(a, v.p).value(), be = val_p(b, v.p).value();
    const Rat u = a / p_power(v.p, al), w = b / p_power(v.p, be);
    if (v.p != 2) {
        int s = 1;
        if (al % 2 != 0 && be % 2 != 0) {
            Int minus_one(-1);
            s *= mpz_legendre(minus_one.get_mpz_t(), v.p.get_mpz_t());
        }
        if (be % 2 != 0) s *= legendre_unit(u, v.p);
        if (al % 2 != 0) s *= legendre_unit(w, v.p);
        return s;
    }
    const long um = mod8(u), wm = mod8(w);
    long e = eps8(um) * eps8(wm);
    if (al % 2 != 0) e += omega8(wm);
    if (be % 2 != 0) e += omega8(um);
    return e % 2 != 0 ? -1 : +1;
}

std::set<Place> ramification_set(const QuaternionAlgebra& A) {
    if (A.a == 0 || A.b == 0)
        throw input_error("ramification_set: algebra generators must be nonzero");
    std::set<Place> candidates{Place::real(), Place::at(2)};
    for (const Int& q : odd_prime_support(A.a)) candidates.insert(Place::at(q));
    for (const Int& q : odd_prime_support(A.b)) candidates.insert(Place::at(q));
    std::set<Place> out;
    for (const Place& v : candidates)
        if (hilbert_symbol(A.a, A.b, v) == -1) out.insert(v);
    if (out.size() % 2 != 0)
        throw invariant_violation("ramification_set: odd cardinality breaks reciprocity");
    return out;
}

QuaternionAlgebra quaternion_with_ramification(const std::set<Place>& S, long aux_bound) {
    if (S.size() % 2 != 0)
        throw input_error("quaternion_with_ramification: ramification sets have even size");
    std::set<Int> prime_pool;
    for (const Place& v : S)
        if (v.finite) prime_pool.insert(v.p);
    for (Int q = 2; q <= aux_bound; ++q)
        if (is_prime(q)) prime_pool.insert(q);
    std::vector<Int> primes(prime_pool.begin(), prime_pool.end());
    // signed products of at most two distinct pool primes, smallest first
    std::vector<Rat> values;
    std::vector<Int> magnitudes{Int(1)};
    for (size_t i = 0; i < primes.size(); ++i) {
        magnitudes.push_back(primes[i]);
        for (size_t j = i + 1; j < primes.size(); ++j)
            magnitudes.push_back(primes[i] * primes[j]);
    }
    std::sort(magnitudes.begin(), magnitudes.end());
    for (const Int& m : magnitudes) {
        values.push_back(Rat(m));
        values.push_back(Rat(-m));
    }
    for (const Rat& a : values)
        for (const Rat& b : values)
            if (ramification_set(QuaternionAlgebra{a, b}) == S) return QuaternionAlgebra{a, b};
    throw not_found_error("quaternion_with_ramification: search bound exhausted, raise the bound");
}

std::pair<QuaternionAlgebra, QuaternionAlgebra> construct_AB(const Int& p, const Int& q1,
                                                             const Int& q2, long aux_bound) {
    for (const Int& q : {p, q1, q2})
        if (!is_prime(q)) throw input_error("construct_AB: arguments must be primes");
    if (p == q1 || p == q2 || q1 == q2)
        throw input_error("construct_AB: arguments must be distinct primes");
    QuaternionAlgebra A = quaternion_with_ramification({Place::at(p), Place::at(q1)}, aux_bound);
    QuaternionAlgebra B = quaternion_with_ramification({Place::at(p), Place::at(q2)}, aux_bound);
    return {A, B};
}

BrauerClass brauer_class_prescribe(long ell, const std::map<Place, Rat>& assignments) {
    if (ell < 2 || !is_prime(Int(ell)))
        throw input_error("brauer_class_prescribe: ell must be a prime");
    BrauerClass cls;
    cls.ell = ell;
    Rat total = 0;
    for (const auto& [v, raw] : assignments) {
        if (v.finite && !is_prime(v.p))
            throw input_error("brauer_class_prescribe: finite place must be a prime");
        Rat val = raw;
        Int fl = val.get_num() / val.get_den(); // floor for canonical positive den
        if (val < 0 && val.get_den() != 1) fl -= 1;
        val -= Rat(fl);
        if (val.get_den() != 1 && val.get_den() != ell)
            throw input_error("brauer_class_prescribe: invariant denominator must divide ell");
        if (!v.finite && val != 0 && val != Rat(1) / 2)
            throw input_error("brauer_class_prescribe: real invariant must be 0 or 1/2");
        total += val;
        if (val != 0) cls.invariants[v] = val;
    }
    if (total.get_den() != 1)
        throw input_error("brauer_class_prescribe: invariants do not sum to zero (reciprocity)");
    if (ell == 2) {
        std::set<Place> support;
        for (const auto& [v, val] : cls.invariants) support.insert(v);
        cls.realization = quaternion_with_ramification(support);
    }
    return cls;
}

Quat qmul(const QuaternionAlgebra& A, const Quat& x, const Quat& y) {
    const Rat &a = A.a, &b = A.b;
    return Quat{x[0] * y[0] + a * x[1] * y[1] + b * x[2] * y[2] - a * b * x[3] * y[3],
                x[0] * y[1] + x[1] * y[0] - b * x[2] * y[3] + b * x[3] * y[2],
                x[0] * y[2] + x[2] * y[0] + a * x[1] * y[3] - a * x[3] * y[1],
                x[0] * y[3] + x[3] * y[0] + x[1] * y[2] - x[2] * y[1]};
}

Rat nrd(const QuaternionAlgebra& A, const Quat& x) {
    return x[0] * x[0] - A.a * x[1] * x[1] - A.b * x[2] * x[2] + A.a * A.b * x[3] * x[3];
}

Rat trd(const QuaternionAlgebra& A, const Quat& x) {
    (void)A;
    return 2 * x[0];
}

std::map<Rat, TraceWitness, std::less<Rat>> sample_T_witnessed(const QuaternionAlgebra& A,
                                                               long H) {
    if (H < 1) throw input_error("sample_T: height bound must be >= 1");
    if (A.a == 0 || A.b == 0) throw input_error("sample_T: algebra generators must be nonzero");
    std::map<Rat, Quat> traces;
    for (long d = 1; d <= H; ++d)
        for (long n0 = -H; n0 <= H; ++n0)
            for (long n1 = 0; n1 <= H; ++n1)
                for (long n2 = 0; n2 <= H; ++n2) {
                    Rat x0 = Rat(n0) / Rat(d), x1 = Rat(n1) / Rat(d), x2 = Rat(n2) / Rat(d);
                    Rat sq = (Rat(1) - x0 * x0 + A.a * x1 * x1 + A.b * x2 * x2) / (A.a * A.b);
                    if (sq < 0) continue;
                    Int num = sq.get_num(), den = sq.get_den();
                    if (!mpz_perfect_square_p(num.get_mpz_t()) ||
                        !mpz_perfect_square_p(den.get_mpz_t()))
                        continue;
                    Int rn, rd;
                    mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
                    mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
                    traces.emplace(2 * x0, Quat{x0, x1, x2, Rat(rn) / Rat(rd)});
                }
    std::map<Rat, TraceWitness, std::less<Rat>> out;
    for (const auto& [s, xq] : traces)
        for (const auto& [s2, yq] : traces) out.emplace(s - s2, TraceWitness{xq, yq});
    return out;
}

std::set<Rat> sample_T(const QuaternionAlgebra& A, long H) {
    std::set<Place> ram = ramification_set(A);
    std::set<Rat> out;
    for (const auto& [v, wit] : sample_T_witnessed(A, H)) {
        for (const Place& q : ram)
            if (q.finite && v != 0 && val_p(v, q.p) < ExtInt(0))
                throw invariant_violation("sample_T: value with a pole at a ramified place");
        out.insert(v);
    }
    return out;
}

namespace {

// reduced norm as a polynomial in four consecutive variables
MPoly nrd_poly(const QuaternionAlgebra& A, int arity, int off) {
    auto v = [&](int i) { return MPoly::variable(arity, off + i); };
    return v(0) * v(0) - v(1) * v(1) * A.a - v(2) * v(2) * A.b + v(3) * v(3) * (A.a * A.b);
}

// w is a value of the operator iff for some u, w t ((u^{q^f}-u)^2-1)^e =
// (u^{q^f}-u)^e with the pole factor invertible
DiophFamily gamma_value_family(const KochenParams& params) {
    Int qfI = params.qf();
    if (!qfI.fits_ulong_p() || qfI.get_ui() > 4096)
        throw resource_error("gamma_value_family: q^f too large");
    const unsigned qf = static_cast<unsigned>(qfI.get_ui());
    const unsigned e = static_cast<unsigned>(params.tau.e);
    MPoly w = MPoly::variable(3, 0), u = MPoly::variable(3, 1), inv = MPoly::variable(3, 2);
    MPoly D = u.pow(qf) - u;
    MPoly E2 = D * D - MPoly::constant(3, 1);
    return DiophFamily{1, 2, {w * params.t() * E2.pow(e) - D.pow(e), inv * E2 - MPoly::constant(3, 1)}};
}

} // namespace

DiophFamily compile_T_family(const QuaternionAlgebra& A) {
    if (A.a == 0 || A.b == 0)
        throw input_error("compile_T_family: algebra generators must be nonzero");
    const int arity = 9;
    MPoly z = MPoly::variable(arity, 0);
    MPoly x0 = MPoly::variable(arity, 1), y0 = MPoly::variable(arity, 5);
    MPoly one = MPoly::constant(arity, 1);
    DiophFamily out{1, 8, {}};
    out.polys.push_back(nrd_poly(A, arity, 1) - one);
    out.polys.push_back(nrd_poly(A, arity, 5) - one);
    out.polys.push_back(z - x0 * Rat(2) + y0 * Rat(2));
    return out;
}

DiophFamily compile_D_family(const KochenParams& params, const QuaternionAlgebra& A,
                             const QuaternionAlgebra& B) {
    if (params.tau.e != 1 || params.tau.f != 1)
        throw unsupported_error(
            "compile_D_family: requires tau = (1, 1); quaternions force ef = 1");
    DiophFamily TA = compile_T_family(A), TB = compile_T_family(B);
    DiophFamily P = family_product(
        family_product(family_product(family_product(TA, TB), TA), TB),
        gamma_value_family(params));
    auto X = [](int i) { return MPoly::variable(5, i); };
    RatFunc f;
    f.num = X(0) + X(1);
    f.den = MPoly::constant(5, 1) +
            X(4).pow(static_cast<unsigned>(params.tau.e + 1)) * (X(2) + X(3)) * params.t();
    return rational_image(P, {f});
}

MembershipVerdict d_family_member_Q(const KochenParams& params, const QuaternionAlgebra& A,
                                    const QuaternionAlgebra& B, const Rat& x, long H) {
    DiophFamily D = compile_D_family(params, A, B);
    MembershipVerdict v;
    if (val_p(x, params.p) < ExtInt(0)) {
        v.verdict = Verdict::NonMember;
        v.obstruction = Obstruction{true, Int(0)};
        return v;
    }
    auto wa = sample_T_witnessed(A, H), wb = sample_T_witnessed(B, H);
    for (const auto& [va, wita] : wa) {
        auto itb = wb.find(x - va);
        if (itb == wb.end()) continue;
        std::vector<Rat> pt(D.n + D.m, Rat(0));
        pt[0] = x;                        // image value
        pt[1] = va;                       // x-part from T_A
        pt[2] = x - va;                   // x-part from T_B
        auto put_quat = [&](long off, const Quat& q) {
            for (int i = 0; i < 4; ++i) pt[off + i] = q[i];
        };
        put_quat(6, wita.x);
        put_quat(10, wita.y);
        put_quat(14, itb->second.x);
        put_quat(18, itb->second.y);
        const Quat id{Rat(1), Rat(0), Rat(0), Rat(0)};
        put_quat(22, id); // y-part of T_A is 0 = trd(1) - trd(1)
        put_quat(26, id);
        put_quat(30, id); // y-part of T_B is 0
        put_quat(34, id);
        // operator value 0 at argument 0; pole factor is -1
        pt[38] = Rat(0);
        pt[39] = Rat(-1);
        pt[40] = Rat(1); // denominator 1 + t * 0 * y inverts to 1
        for (const MPoly& g : D.polys)
            if (g.eval_rat(pt) != 0)
                throw invariant_violation("d_family_member_Q: assembled witness failed");
        v.verdict = Verdict::Member;
        return v;
    }
    v.verdict = Verdict::Unknown;
    v.height_bound = H;
    return v;
}

} // namespace kochenlab
