#include "kochenlab/maximalorder.hpp"

#include <algorithm>
#include <random>

namespace kochenlab {

namespace {

using QMat = std::vector<std::vector<Rat>>; // rows
using QVec = std::vector<Rat>;
using PMat = std::vector<std::vector<Int>>; // entries mod p
using PVec = std::vector<Int>;

QMat qmat_identity(int n) {
    QMat m(n, QVec(n, Rat(0)));
    for (int i = 0; i < n; ++i) m[i][i] = 1;
    return m;
}

// inverse of a square rational matrix (rows), Gauss-Jordan
QMat qmat_inverse(QMat a) {
    int n = static_cast<int>(a.size());
    QMat inv = qmat_identity(n);
    for (int col = 0; col < n; ++col) {
        int piv = -1;
        for (int r = col; r < n; ++r)
            if (a[r][col] != 0) { piv = r; break; }
        if (piv < 0) throw invariant_violation("qmat_inverse: singular basis matrix");
        std::swap(a[col], a[piv]);
        std::swap(inv[col], inv[piv]);
        Rat d = a[col][col];
        for (int j = 0; j < n; ++j) {
            a[col][j] /= d;
            inv[col][j] /= d;
        }
        for (int r = 0; r < n; ++r) {
            if (r == col || a[r][col] == 0) continue;
            Rat c = a[r][col];
            for (int j = 0; j < n; ++j) {
                a[r][j] -= c * a[col][j];
                inv[r][j] -= c * inv[col][j];
            }
        }
    }
    return inv;
}

QVec qmat_apply(const QMat& m, const QVec& v) { // v * m (row vector times rows-matrix)
    int n = static_cast<int>(m.size());
    QVec r(m[0].size(), Rat(0));
    for (int i = 0; i < n; ++i)
        for (size_t j = 0; j < m[i].size(); ++j) r[j] += v[i] * m[i][j];
    return r;
}

// row Hermite form of the lattice spanned by the rows; returns n independent rows
std::vector<std::vector<Int>> hnf_rows(std::vector<std::vector<Int>> rows, int n) {
    int m = static_cast<int>(rows.size());
    int r = 0;
    for (int col = 0; col < n && r < m; ++col) {
        // clear the column below r by gcd steps; smallest pivot plus floor
        // division keeps every remainder strictly smaller in absolute value
        while (true) {
            int piv = -1;
            for (int i = r; i < m; ++i) {
                if (rows[i][col] == 0) continue;
                if (piv < 0 || mpz_cmpabs(rows[i][col].get_mpz_t(), rows[piv][col].get_mpz_t()) < 0)
                    piv = i;
            }
            if (piv < 0) break;
            std::swap(rows[r], rows[piv]);
            if (rows[r][col] < 0)
                for (int j = 0; j < n; ++j) rows[r][j] = -rows[r][j];
            bool done = true;
            for (int i = r + 1; i < m; ++i) {
                if (rows[i][col] == 0) continue;
                Int q;
                mpz_fdiv_q(q.get_mpz_t(), rows[i][col].get_mpz_t(), rows[r][col].get_mpz_t());
                for (int j = 0; j < n; ++j) rows[i][j] -= q * rows[r][j];
                if (rows[i][col] != 0) done = false;
            }
            if (done) break;
        }
        if (rows[r][col] != 0) {
            if (rows[r][col] < 0)
                for (int j = 0; j < n; ++j) rows[r][j] = -rows[r][j];
            ++r;
        }
    }
    rows.resize(r);
    if (r != n) throw invariant_violation("hnf_rows: lattice is not full rank");
    return rows;
}

PVec pvec_reduce(QVec v, const Int& p) {
    PVec r;
    for (Rat& c : v) {
        Int den = c.get_den(), di;
        if (mpz_invert(di.get_mpz_t(), den.get_mpz_t(), p.get_mpz_t()) == 0)
            throw invariant_violation("pvec_reduce: denominator vanishes mod p");
        Int x = c.get_num() * di % p;
        if (x < 0) x += p;
        r.push_back(x);
    }
    return r;
}

// kernel basis of the F_p-linear map given by columns (map of column vectors)
std::vector<PVec> pmat_kernel(PMat a, const Int& p, int ncols) {
    int nrows = static_cast<int>(a.size());
    std::vector<int> pivot_col(nrows, -1);
    int rank = 0;
    for (int col = 0; col < ncols && rank < nrows; ++col) {
        int piv = -1;
        for (int r = rank; r < nrows; ++r)
            if (a[r][col] % p != 0) { piv = r; break; }
        if (piv < 0) continue;
        std::swap(a[rank], a[piv]);
        Int inv;
        mpz_invert(inv.get_mpz_t(), a[rank][col].get_mpz_t(), p.get_mpz_t());
        for (int j = 0; j < ncols; ++j) a[rank][j] = a[rank][j] * inv % p;
        for (int r = 0; r < nrows; ++r) {
            if (r == rank) continue;
            Int c = a[r][col] % p;
            if (c == 0) continue;
            for (int j = 0; j < ncols; ++j) {
                a[r][j] = (a[r][j] - c * a[rank][j]) % p;
                if (a[r][j] < 0) a[r][j] += p;
            }
        }
        pivot_col[rank] = col;
        ++rank;
    }
    std::vector<bool> is_pivot(ncols, false);
    for (int r = 0; r < rank; ++r) is_pivot[pivot_col[r]] = true;
    std::vector<PVec> kernel;
    for (int col = 0; col < ncols; ++col) {
        if (is_pivot[col]) continue;
        PVec v(ncols, Int(0));
        v[col] = 1;
        for (int r = 0; r < rank; ++r) {
            Int c = a[r][col] % p;
            if (c != 0) v[pivot_col[r]] = (p - c) % p;
        }
        kernel.push_back(std::move(v));
    }
    return kernel;
}

// An order given by a basis in theta-coordinates (rows / common denominator).
struct Order {
    const NumberField* L;
    QMat basis;   // rows: basis elements as theta-coordinates
    QMat inverse; // cached inverse of basis

    explicit Order(const NumberField* field) : L(field) {
        basis = qmat_identity(field->degree());
        inverse = basis;
    }

    int n() const { return L->degree(); }

    QVec elem(const PVec& coords_mod_p) const { // O-coords -> theta-coords
        QVec c;
        for (const Int& x : coords_mod_p) c.emplace_back(x);
        return qmat_apply(basis, c);
    }

    QVec mul_theta(const QVec& a, const QVec& b) const { // product in theta-coords
        UPoly pa{std::vector<Rat>(a)}, pb{std::vector<Rat>(b)};
        UPoly r = (pa * pb).divmod(L->h()).second;
        QVec out(n(), Rat(0));
        for (int i = 0; i <= r.degree(); ++i) out[i] = r.coeff(i);
        return out;
    }

    QVec to_order_coords(const QVec& theta_coords) const {
        return qmat_apply(inverse, theta_coords);
    }
};

// Matrix of the F_p-linear map x -> x^{p^m} on O/pO with p^m >= n.
PMat frobenius_power_matrix(const Order& O, const Int& p) {
    int n = O.n();
    int m = 1;
    Int pm = p;
    while (pm < n) {
        pm *= p;
        ++m;
    }
    PMat cols;
    for (int i = 0; i < n; ++i) {
        // w_i^{p^m} computed by repeated p-th powers in L
        QVec cur(n, Rat(0));
        for (int j = 0; j < n; ++j) cur[j] = O.basis[i][j];
        for (int step = 0; step < m; ++step) {
            QVec acc(n, Rat(0));
            acc[0] = 1;
            Int e = p;
            QVec base = cur;
            while (e > 0) {
                if (mpz_odd_p(e.get_mpz_t())) acc = O.mul_theta(acc, base);
                base = O.mul_theta(base, base);
                e >>= 1;
            }
            cur = acc;
        }
        cols.push_back(pvec_reduce(O.to_order_coords(cur), p));
    }
    // transpose into row-major map matrix acting on column vectors
    PMat mat(n, PVec(n, Int(0)));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) mat[j][i] = cols[i][j];
    return mat;
}

// one round-two enlargement; returns false when O is already p-maximal
bool enlarge_at_p(Order& O, const Int& p) {
    int n = O.n();
    PMat frob = frobenius_power_matrix(O, p);
    std::vector<PVec> rad = pmat_kernel(frob, p, n);

    // I = pO + radical lifts, as a sublattice of O (integer O-coordinates)
    std::vector<std::vector<Int>> gens;
    for (int i = 0; i < n; ++i) {
        std::vector<Int> row(n, Int(0));
        row[i] = p;
        gens.push_back(std::move(row));
    }
    for (const PVec& v : rad) gens.push_back(std::vector<Int>(v.begin(), v.end()));
    auto N = hnf_rows(std::move(gens), n);

    // O-coordinates -> I-coordinates transform
    QMat Nq(n, QVec(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) Nq[i][j] = Rat(N[i][j]);
    QMat Ninv = qmat_inverse(Nq);

    // multiplier condition: y = sum c_i w_i with (y * b_k) in p*I for all k,
    // i.e. the I-coordinates of w_i b_k pair against c to 0 mod p
    PMat cond; // rows: one condition per (k, coordinate); columns: i
    for (int k = 0; k < n; ++k) {
        // b_k in theta-coords
        QVec bk(n, Rat(0));
        for (int i = 0; i < n; ++i) bk[i] = Rat(N[k][i]);
        QVec bk_theta = qmat_apply(O.basis, bk);
        std::vector<PVec> prod_coords;
        for (int i = 0; i < n; ++i) {
            QVec wi(O.basis[i]);
            QVec prod = O.mul_theta(wi, bk_theta);
            QVec in_O = O.to_order_coords(prod);
            QVec in_I = qmat_apply(Ninv, in_O);
            prod_coords.push_back(pvec_reduce(in_I, p)); // integral: I is an ideal
        }
        for (int coord = 0; coord < n; ++coord) {
            PVec row(n);
            for (int i = 0; i < n; ++i) row[i] = prod_coords[i][coord];
            cond.push_back(std::move(row));
        }
    }
    std::vector<PVec> mult = pmat_kernel(std::move(cond), p, n);
    if (mult.empty()) return false;

    // new order: O-rows plus (c . W)/p rows; clear denominators before HNF
    Int den = 1;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Int d = O.basis[i][j].get_den();
            mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), d.get_mpz_t());
        }
    Int den2 = den * p;
    std::vector<std::vector<Int>> rows;
    for (int i = 0; i < n; ++i) {
        std::vector<Int> row(n);
        for (int j = 0; j < n; ++j) {
            Rat v = O.basis[i][j] * Rat(den2);
            row[j] = v.get_num();
        }
        rows.push_back(std::move(row));
    }
    for (const PVec& c : mult) {
        QVec cq;
        for (const Int& x : c) cq.emplace_back(x);
        QVec theta = qmat_apply(O.basis, cq); // c . W
        std::vector<Int> row(n);
        for (int j = 0; j < n; ++j) {
            Rat v = theta[j] * Rat(den); // divided by p via den2
            row[j] = v.get_num();
        }
        rows.push_back(std::move(row));
    }
    auto H = hnf_rows(std::move(rows), n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) O.basis[i][j] = Rat(H[i][j]) / Rat(den2);
    O.inverse = qmat_inverse(O.basis);
    return true;
}

// commutative F_p-algebra with an explicit multiplication table
struct Algebra {
    Int p;
    int dim;
    std::vector<PMat> mul; // mul[i]: matrix of multiplication by basis element i
    PVec one;

    PVec apply(const PMat& m, const PVec& v) const {
        PVec r(dim, Int(0));
        for (int i = 0; i < dim; ++i) {
            for (int j = 0; j < dim; ++j) r[i] += m[i][j] * v[j];
            r[i] %= p;
        }
        return r;
    }
    PVec multiply(const PVec& a, const PVec& b) const {
        PVec r(dim, Int(0));
        for (int i = 0; i < dim; ++i) {
            if (a[i] == 0) continue;
            PVec t = apply(mul[i], b);
            for (int j = 0; j < dim; ++j) r[j] = (r[j] + a[i] * t[j]) % p;
        }
        return r;
    }
    PVec power(PVec a, Int e) const {
        PVec acc = one;
        while (e > 0) {
            if (mpz_odd_p(e.get_mpz_t())) acc = multiply(acc, a);
            a = multiply(a, a);
            e >>= 1;
        }
        return acc;
    }
};

Algebra algebra_mod_p(const Order& O, const Int& p) {
    Algebra A;
    A.p = p;
    A.dim = O.n();
    for (int i = 0; i < A.dim; ++i) {
        PMat m(A.dim, PVec(A.dim, Int(0)));
        for (int j = 0; j < A.dim; ++j) {
            QVec prod = O.mul_theta(QVec(O.basis[i]), QVec(O.basis[j]));
            PVec c = pvec_reduce(O.to_order_coords(prod), p);
            for (int r = 0; r < A.dim; ++r) m[r][j] = c[r];
        }
        A.mul.push_back(std::move(m));
    }
    QVec onev(A.dim, Rat(0));
    onev[0] = 1; // theta-coords of 1
    A.one = pvec_reduce(O.to_order_coords(onev), p);
    return A;
}

// minimal polynomial of x relative to the subalgebra spanned by span_basis
// (x in ambient coordinates, identity elem given); returns coefficient list
PrimePoly min_poly_in_algebra(const Algebra& A, const PVec& x, const PVec& id) {
    std::vector<PVec> pows;
    PVec cur = id;
    for (int d = 0; d <= A.dim; ++d) {
        pows.push_back(cur);
        // solve for a dependency among pows
        PMat m; // rows: coordinates; columns: powers
        for (int coord = 0; coord < A.dim; ++coord) {
            PVec row;
            for (const PVec& pw : pows) row.push_back(pw[coord]);
            m.push_back(std::move(row));
        }
        auto ker = pmat_kernel(std::move(m), A.p, static_cast<int>(pows.size()));
        if (!ker.empty()) {
            // normalize so the top coefficient is 1
            PVec c = ker.back();
            int top = static_cast<int>(c.size()) - 1;
            while (top >= 0 && c[top] % A.p == 0) --top;
            if (top < 0) throw invariant_violation("min_poly_in_algebra: zero dependency");
            return PrimePoly(A.p, std::vector<Int>(c.begin(), c.begin() + top + 1)).monic();
        }
        cur = A.multiply(cur, x);
    }
    throw invariant_violation("min_poly_in_algebra: no dependency found");
}


PVec eval_upoly_in_algebra(const Algebra& A, const PrimePoly& f, const PVec& x, const PVec& id) {
    PVec acc(A.dim, Int(0));
    for (int i = f.degree(); i >= 0; --i) {
        acc = A.multiply(acc, x);
        Int c = f.coeff(i);
        for (int j = 0; j < A.dim; ++j) acc[j] = (acc[j] + c * id[j]) % A.p;
    }
    return acc;
}

// rank of the multiplication-by-u map restricted to the whole algebra
int rank_of_component(const Algebra& A, const PVec& u) {
    PMat m;
    for (int coord = 0; coord < A.dim; ++coord) m.push_back(PVec(A.dim, Int(0)));
    for (int j = 0; j < A.dim; ++j) {
        PVec ej(A.dim, Int(0));
        ej[j] = 1;
        PVec col = A.multiply(u, ej);
        for (int coord = 0; coord < A.dim; ++coord) m[coord][j] = col[coord];
    }
    auto ker = pmat_kernel(std::move(m), A.p, A.dim);
    return A.dim - static_cast<int>(ker.size());
}

// inverse of a square matrix over F_p (rows)
PMat pmat_inverse(PMat a, const Int& p) {
    int n = static_cast<int>(a.size());
    PMat inv(n, PVec(n, Int(0)));
    for (int i = 0; i < n; ++i) inv[i][i] = 1;
    for (int col = 0; col < n; ++col) {
        int piv = -1;
        for (int r = col; r < n; ++r)
            if (a[r][col] % p != 0) { piv = r; break; }
        if (piv < 0) throw invariant_violation("pmat_inverse: singular matrix");
        std::swap(a[col], a[piv]);
        std::swap(inv[col], inv[piv]);
        Int d;
        mpz_invert(d.get_mpz_t(), a[col][col].get_mpz_t(), p.get_mpz_t());
        for (int j = 0; j < n; ++j) {
            a[col][j] = a[col][j] * d % p;
            inv[col][j] = inv[col][j] * d % p;
        }
        for (int r = 0; r < n; ++r) {
            if (r == col) continue;
            Int c = a[r][col] % p;
            if (c == 0) continue;
            for (int j = 0; j < n; ++j) {
                a[r][j] = ((a[r][j] - c * a[col][j]) % p + p) % p;
                inv[r][j] = ((inv[r][j] - c * inv[col][j]) % p + p) % p;
            }
        }
    }
    return inv;
}

// quotient of A by its radical, with projection/lift maps
struct Quotient {
    Algebra S;
    std::vector<PVec> lift_basis; // basis of the complement inside A
    PMat change_inv;              // inverse of [radical; complement] rows
    int rad_dim;

    PVec project(const Algebra& A, const PVec& v) const {
        // coordinates in the [radical; complement] basis; keep the tail
        PVec full(A.dim, Int(0));
        for (int i = 0; i < A.dim; ++i) {
            for (int j = 0; j < A.dim; ++j) full[i] += change_inv[j][i] * v[j];
            full[i] %= A.p;
            if (full[i] < 0) full[i] += A.p;
        }
        return PVec(full.begin() + rad_dim, full.end());
    }
    PVec lift(const Algebra& A, const PVec& v) const {
        PVec out(A.dim, Int(0));
        for (int i = 0; i < S.dim; ++i)
            for (int j = 0; j < A.dim; ++j)
                out[j] = (out[j] + v[i] * lift_basis[i][j]) % A.p;
        return out;
    }
};

// Frobenius-power kernel of A equals the radical for these algebras
std::vector<PVec> algebra_radical(const Algebra& A) {
    int m = 1;
    Int pm = A.p;
    while (pm < A.dim) {
        pm *= A.p;
        ++m;
    }
    PMat frob(A.dim, PVec(A.dim, Int(0)));
    for (int i = 0; i < A.dim; ++i) {
        PVec ei(A.dim, Int(0));
        ei[i] = 1;
        PVec v = ei;
        for (int s = 0; s < m; ++s) v = A.power(v, A.p);
        for (int coord = 0; coord < A.dim; ++coord) frob[coord][i] = v[coord];
    }
    return pmat_kernel(std::move(frob), A.p, A.dim);
}

Quotient quotient_by_radical(const Algebra& A) {
    std::vector<PVec> rad = algebra_radical(A);
    int s = static_cast<int>(rad.size());
    int t = A.dim - s;
    // extend the radical to a full basis with unit vectors
    std::vector<PVec> rows = rad;
    std::vector<int> used;
    for (int cand = 0; cand < A.dim && static_cast<int>(rows.size()) < A.dim; ++cand) {
        PVec e(A.dim, Int(0));
        e[cand] = 1;
        rows.push_back(e);
        // rank check
        PMat m;
        for (int coord = 0; coord < A.dim; ++coord) {
            PVec row;
            for (const PVec& r : rows) row.push_back(r[coord]);
            m.push_back(std::move(row));
        }
        if (!pmat_kernel(std::move(m), A.p, static_cast<int>(rows.size())).empty())
            rows.pop_back();
        else
            used.push_back(cand);
    }
    if (static_cast<int>(rows.size()) != A.dim)
        throw invariant_violation("quotient_by_radical: basis completion failed");

    Quotient Q;
    Q.rad_dim = s;
    Q.lift_basis.assign(rows.begin() + s, rows.end());
    PMat change(A.dim, PVec(A.dim, Int(0)));
    for (int i = 0; i < A.dim; ++i)
        for (int j = 0; j < A.dim; ++j) change[i][j] = rows[i][j];
    Q.change_inv = pmat_inverse(std::move(change), A.p);
    // transpose convention: want coords alpha with v = sum alpha_i rows_i,
    // i.e. alpha = v * rows^{-1} in row-vector form
    Q.S.p = A.p;
    Q.S.dim = t;
    for (int i = 0; i < t; ++i) {
        PMat m(t, PVec(t, Int(0)));
        for (int j = 0; j < t; ++j) {
            PVec prod = A.multiply(Q.lift_basis[i], Q.lift_basis[j]);
            PVec pc = Q.project(A, prod);
            for (int r = 0; r < t; ++r) m[r][j] = pc[r];
        }
        Q.S.mul.push_back(std::move(m));
    }
    Q.S.one = Q.project(A, A.one);
    return Q;
}

} // namespace

std::vector<PrimeType> prime_types_above(const NumberField& L, const Int& p) {
    try {
        std::vector<PrimeType> out;
        for (const NFPrime& P : primes_above(L, p)) out.push_back({P.e, P.f});
        std::sort(out.begin(), out.end(), [](const PrimeType& a, const PrimeType& b) {
            return a.e != b.e ? a.e < b.e : a.f < b.f;
        });
        return out;
    } catch (const unsupported_error&) {
        // the generator order is not p-maximal; compute one that is
    }
    if (!is_prime(p)) throw input_error("prime_types_above: p is not prime");
    int n = L.degree();

    Order O(&L);
    int guard = 0;
    while (enlarge_at_p(O, p)) {
        if (++guard > 64) throw resource_error("prime_types_above: order enlargement did not stabilize");
    }

    Algebra A = algebra_mod_p(O, p);
    Quotient Q = quotient_by_radical(A);
    const Algebra& S = Q.S;

    // Berlekamp subalgebra: fixed points of Frobenius on the semisimple
    // quotient span exactly the component idempotents
    PMat fix(S.dim, PVec(S.dim, Int(0)));
    for (int i = 0; i < S.dim; ++i) {
        PVec ei(S.dim, Int(0));
        ei[i] = 1;
        PVec v = S.power(ei, p);
        for (int coord = 0; coord < S.dim; ++coord) {
            Int d = (v[coord] - ei[coord]) % p;
            if (d < 0) d += p;
            fix[coord][i] = d;
        }
    }
    std::vector<PVec> fixed = pmat_kernel(std::move(fix), p, S.dim);
    size_t k = fixed.size(); // number of primes above p

    std::vector<PVec> idems = {S.one};
    for (const PVec& b : fixed) {
        if (idems.size() == k) break;
        std::vector<PVec> refined;
        for (const PVec& u : idems) {
            PVec x = S.multiply(u, b);
            PrimePoly mu = min_poly_in_algebra(S, x, u);
            // x lies in the Berlekamp algebra, so mu splits into distinct
            // linear factors; each root gives a sub-idempotent
            auto roots_fac = factor_mod_p(mu);
            if (roots_fac.size() == 1) {
                refined.push_back(u);
                continue;
            }
            for (const auto& [lin, mult] : roots_fac) {
                if (lin.degree() != 1 || mult != 1)
                    throw invariant_violation("prime_types_above: Berlekamp element not split semisimple");
                PrimePoly rest = mu.divmod(lin).first;
                // scale rest so it is 1 at the root of lin
                Int root = (p - lin.coeff(0)) % p;
                Int val = rest.eval(root);
                Int vi;
                if (mpz_invert(vi.get_mpz_t(), val.get_mpz_t(), p.get_mpz_t()) == 0)
                    throw invariant_violation("prime_types_above: repeated root in Berlekamp split");
                PrimePoly epoly = rest.scale(vi);
                PVec e = eval_upoly_in_algebra(S, epoly, x, u);
                refined.push_back(S.multiply(e, u));
            }
        }
        idems = std::move(refined);
    }
    if (idems.size() != k)
        throw invariant_violation("prime_types_above: Berlekamp refinement incomplete");

    int total = 0;
    std::vector<PrimeType> out;
    for (const PVec& u : idems) {
        int f = rank_of_component(S, u);
        // lift the idempotent to A to measure the local dimension e*f
        PVec e = Q.lift(A, u);
        for (int it = 0; it < 8; ++it) {
            PVec e2 = A.multiply(e, e);
            PVec e3 = A.multiply(e2, e);
            for (int j = 0; j < A.dim; ++j) {
                e[j] = ((3 * e2[j] - 2 * e3[j]) % p + p) % p;
            }
        }
        PVec esq = A.multiply(e, e);
        if (!(esq == e))
            throw invariant_violation("prime_types_above: idempotent lifting failed");
        int dim = rank_of_component(A, e);
        if (f <= 0 || dim % f != 0)
            throw invariant_violation("prime_types_above: component dimension not divisible by residue degree");
        out.push_back({dim / f, f});
        total += dim;
    }
    if (total != n) throw invariant_violation("prime_types_above: component dimensions miss the degree");
    std::sort(out.begin(), out.end(), [](const PrimeType& a, const PrimeType& b) {
        return a.e != b.e ? a.e < b.e : a.f < b.f;
    });
    return out;
}

} // namespace kochenlab
