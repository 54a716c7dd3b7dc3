#include "repdim/qpoly.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace repdim::qpoly {

int degree(const QPoly& f) { return static_cast<int>(f.size()) - 1; }

void trim(QPoly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

bool is_zero(const QPoly& f) { return f.empty(); }

bool equal(const QPoly& f, const QPoly& g) { return f == g; }

QPoly from_ints(std::vector<long> coeffs) {
    QPoly f;
    f.reserve(coeffs.size());
    for (long c : coeffs) f.emplace_back(c);
    trim(f);
    return f;
}

QPoly constant(const mpq_class& c) {
    QPoly f;
    if (c != 0) f.push_back(c);
    return f;
}

QPoly add(const QPoly& f, const QPoly& g) {
    QPoly r(std::max(f.size(), g.size()), mpq_class(0));
    for (size_t i = 0; i < f.size(); ++i) r[i] = f[i];
    for (size_t i = 0; i < g.size(); ++i) r[i] += g[i];
    trim(r);
    return r;
}

QPoly sub(const QPoly& f, const QPoly& g) {
    QPoly r(std::max(f.size(), g.size()), mpq_class(0));
    for (size_t i = 0; i < f.size(); ++i) r[i] = f[i];
    for (size_t i = 0; i < g.size(); ++i) r[i] -= g[i];
    trim(r);
    return r;
}

QPoly mul(const QPoly& f, const QPoly& g) {
    if (f.empty() || g.empty()) return {};
    QPoly r(f.size() + g.size() - 1, mpq_class(0));
    for (size_t i = 0; i < f.size(); ++i)
        for (size_t j = 0; j < g.size(); ++j) r[i + j] += f[i] * g[j];
    trim(r);
    return r;
}

QPoly scale(const QPoly& f, const mpq_class& c) {
    if (c == 0) return {};
    QPoly r = f;
    for (auto& x : r) x *= c;
    return r;
}

std::pair<QPoly, QPoly> divrem(const QPoly& f, const QPoly& g) {
    if (g.empty()) throw std::invalid_argument("qpoly::divrem: division by zero");
    QPoly q, r = f;
    trim(r);
    int dg = degree(g);
    const mpq_class& lg = g.back();
    while (degree(r) >= dg) {
        int shift = degree(r) - dg;
        mpq_class c = r.back() / lg;
        if (static_cast<int>(q.size()) < shift + 1) q.resize(shift + 1, mpq_class(0));
        q[shift] += c;
        for (int i = 0; i <= dg; ++i) r[shift + i] -= c * g[i];
        trim(r);
    }
    trim(q);
    return {q, r};
}

QPoly monic(const QPoly& f) {
    if (f.empty()) return f;
    return scale(f, mpq_class(1) / f.back());
}

QPoly gcd(const QPoly& f, const QPoly& g) {
    QPoly a = f, b = g;
    trim(a);
    trim(b);
    while (!b.empty()) {
        QPoly r = divrem(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return monic(a);
}

ExtGcd ext_gcd(const QPoly& f, const QPoly& g) {
    QPoly r0 = f, r1 = g;
    QPoly s0 = constant(1), s1;
    QPoly t0, t1 = constant(1);
    while (!r1.empty()) {
        auto [q, r] = divrem(r0, r1);
        r0 = std::move(r1);
        r1 = std::move(r);
        QPoly s2 = sub(s0, mul(q, s1));
        s0 = std::move(s1);
        s1 = std::move(s2);
        QPoly t2 = sub(t0, mul(q, t1));
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    if (!r0.empty()) {
        mpq_class inv = mpq_class(1) / r0.back();
        r0 = scale(r0, inv);
        s0 = scale(s0, inv);
        t0 = scale(t0, inv);
    }
    return {r0, s0, t0};
}

QPoly derivative(const QPoly& f) {
    QPoly r;
    for (size_t i = 1; i < f.size(); ++i) r.push_back(f[i] * mpq_class(static_cast<long>(i)));
    trim(r);
    return r;
}

mpq_class eval(const QPoly& f, const mpq_class& x) {
    mpq_class acc(0);
    for (auto it = f.rbegin(); it != f.rend(); ++it) acc = acc * x + *it;
    return acc;
}

// --- integer polynomial helpers ----------------------------------------

namespace {

using ZPoly = std::vector<mpz_class>;

int zdeg(const ZPoly& f) { return static_cast<int>(f.size()) - 1; }

void ztrim(ZPoly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

ZPoly zmul(const ZPoly& f, const ZPoly& g) {
    if (f.empty() || g.empty()) return {};
    ZPoly r(f.size() + g.size() - 1, mpz_class(0));
    for (size_t i = 0; i < f.size(); ++i)
        for (size_t j = 0; j < g.size(); ++j) r[i + j] += f[i] * g[j];
    ztrim(r);
    return r;
}

mpz_class zcontent(const ZPoly& f) {
    mpz_class c(0);
    for (const auto& x : f) mpz_gcd(c.get_mpz_t(), c.get_mpz_t(), x.get_mpz_t());
    return c;
}

// does g divide f exactly over Z?
bool zdivides(const ZPoly& f, const ZPoly& g, ZPoly* quot) {
    ZPoly r = f, q;
    int dg = zdeg(g);
    const mpz_class& lg = g.back();
    while (zdeg(r) >= dg) {
        mpz_class c, rem;
        mpz_tdiv_qr(c.get_mpz_t(), rem.get_mpz_t(), r.back().get_mpz_t(), lg.get_mpz_t());
        if (rem != 0) return false;
        int shift = zdeg(r) - dg;
        if (static_cast<int>(q.size()) < shift + 1) q.resize(shift + 1, mpz_class(0));
        q[shift] += c;
        for (int i = 0; i <= dg; ++i) r[shift + i] -= c * g[i];
        ztrim(r);
    }
    if (!r.empty()) return false;
    if (quot) {
        ztrim(q);
        *quot = q;
    }
    return true;
}

// rational poly -> primitive integer poly with positive leading coefficient
ZPoly primitive_part(const QPoly& f, mpq_class& unit) {
    mpz_class den(1);
    for (const auto& c : f) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den().get_mpz_t());
    ZPoly z;
    z.reserve(f.size());
    for (const auto& c : f) {
        mpq_class scaled = c * mpq_class(den);
        z.push_back(scaled.get_num());
    }
    mpz_class cont = zcontent(z);
    if (cont == 0) {
        unit = 0;
        return {};
    }
    if (z.back() < 0) cont = -cont;
    for (auto& x : z) x /= cont;
    unit = mpq_class(cont) / mpq_class(den);
    unit.canonicalize();
    return z;
}

QPoly to_qpoly(const ZPoly& z) {
    QPoly f;
    f.reserve(z.size());
    for (const auto& c : z) f.emplace_back(c);
    return f;
}

// --- F_p arithmetic -----------------------------------------------------

std::uint64_t p_add(std::uint64_t a, std::uint64_t b, std::uint64_t p) { return (a + b) % p; }
std::uint64_t p_sub(std::uint64_t a, std::uint64_t b, std::uint64_t p) { return (a + p - b % p) % p; }
std::uint64_t p_mul(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
}
std::uint64_t p_pow(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
    std::uint64_t r = 1 % p;
    a %= p;
    while (e) {
        if (e & 1) r = p_mul(r, a, p);
        a = p_mul(a, a, p);
        e >>= 1;
    }
    return r;
}
std::uint64_t p_inv(std::uint64_t a, std::uint64_t p) { return p_pow(a % p, p - 2, p); }

void ptrim(PPoly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

int pdeg(const PPoly& f) { return static_cast<int>(f.size()) - 1; }

PPoly pmul(const PPoly& f, const PPoly& g, std::uint64_t p) {
    if (f.empty() || g.empty()) return {};
    PPoly r(f.size() + g.size() - 1, 0);
    for (size_t i = 0; i < f.size(); ++i) {
        if (f[i] == 0) continue;
        for (size_t j = 0; j < g.size(); ++j) r[i + j] = p_add(r[i + j], p_mul(f[i], g[j], p), p);
    }
    ptrim(r);
    return r;
}

PPoly pmod(PPoly f, const PPoly& g, std::uint64_t p) {
    int dg = pdeg(g);
    std::uint64_t linv = p_inv(g.back(), p);
    ptrim(f);
    while (pdeg(f) >= dg) {
        std::uint64_t c = p_mul(f.back(), linv, p);
        int shift = pdeg(f) - dg;
        for (int i = 0; i <= dg; ++i) f[shift + i] = p_sub(f[shift + i], p_mul(c, g[i], p), p);
        ptrim(f);
    }
    return f;
}

PPoly pdiv_exact(const PPoly& f, const PPoly& g, std::uint64_t p) {
    PPoly q, r = f;
    ptrim(r);
    int dg = pdeg(g);
    std::uint64_t linv = p_inv(g.back(), p);
    while (pdeg(r) >= dg) {
        std::uint64_t c = p_mul(r.back(), linv, p);
        int shift = pdeg(r) - dg;
        if (static_cast<int>(q.size()) < shift + 1) q.resize(shift + 1, 0);
        q[shift] = p_add(q[shift], c, p);
        for (int i = 0; i <= dg; ++i) r[shift + i] = p_sub(r[shift + i], p_mul(c, g[i], p), p);
        ptrim(r);
    }
    ptrim(q);
    return q;
}

PPoly pmonic(PPoly f, std::uint64_t p) {
    ptrim(f);
    if (f.empty()) return f;
    std::uint64_t inv = p_inv(f.back(), p);
    for (auto& c : f) c = p_mul(c, inv, p);
    return f;
}

PPoly pgcd(PPoly a, PPoly b, std::uint64_t p) {
    ptrim(a);
    ptrim(b);
    while (!b.empty()) {
        PPoly r = pmod(std::move(a), b, p);
        a = std::move(b);
        b = std::move(r);
    }
    return pmonic(std::move(a), p);
}

PPoly pderiv(const PPoly& f, std::uint64_t p) {
    PPoly r;
    for (size_t i = 1; i < f.size(); ++i) r.push_back(p_mul(f[i], i % p, p));
    ptrim(r);
    return r;
}

PPoly ppowmod(PPoly base, mpz_class e, const PPoly& m, std::uint64_t p) {
    PPoly r{1};
    base = pmod(std::move(base), m, p);
    while (e > 0) {
        if (mpz_odd_p(e.get_mpz_t())) r = pmod(pmul(r, base, p), m, p);
        base = pmod(pmul(base, base, p), m, p);
        e >>= 1;
    }
    return r;
}

// Berlekamp factorization of a squarefree monic polynomial over F_p.
void berlekamp_squarefree(const PPoly& f, std::uint64_t p, std::vector<PPoly>& out) {
    int n = pdeg(f);
    if (n <= 1) {
        out.push_back(f);
        return;
    }
    // Petr-Berlekamp matrix: column i holds x^(p*i) - x^i mod f
    std::vector<std::vector<std::uint64_t>> m(n, std::vector<std::uint64_t>(n, 0));
    PPoly xp = ppowmod(PPoly{0, 1}, mpz_class(static_cast<unsigned long>(p)), f, p);
    PPoly cur{1};
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < static_cast<int>(cur.size()); ++j) m[j][i] = cur[j];
        m[i][i] = p_sub(m[i][i], 1, p);
        cur = pmod(pmul(cur, xp, p), f, p);
    }
    // nullspace over F_p
    std::vector<int> pivot_col;
    int rank = 0;
    for (int col = 0; col < n && rank < n; ++col) {
        int pr = -1;
        for (int r = rank; r < n; ++r)
            if (m[r][col] != 0) {
                pr = r;
                break;
            }
        if (pr < 0) continue;
        std::swap(m[rank], m[pr]);
        std::uint64_t inv = p_inv(m[rank][col], p);
        for (int c = 0; c < n; ++c) m[rank][c] = p_mul(m[rank][c], inv, p);
        for (int r = 0; r < n; ++r) {
            if (r == rank || m[r][col] == 0) continue;
            std::uint64_t c0 = m[r][col];
            for (int c = 0; c < n; ++c) m[r][c] = p_sub(m[r][c], p_mul(c0, m[rank][c], p), p);
        }
        pivot_col.push_back(col);
        ++rank;
    }
    std::vector<PPoly> basis;
    std::vector<bool> is_pivot(n, false);
    for (int c : pivot_col) is_pivot[c] = true;
    for (int col = 0; col < n; ++col) {
        if (is_pivot[col]) continue;
        PPoly v(n, 0);
        v[col] = 1;
        for (int r = 0; r < rank; ++r) v[pivot_col[r]] = p_sub(0, m[r][col], p);
        ptrim(v);
        basis.push_back(v);
    }
    size_t nfactors = basis.size();
    std::vector<PPoly> factors{f};
    for (const PPoly& v : basis) {
        if (factors.size() >= nfactors) break;
        if (pdeg(v) < 1) continue;
        std::vector<PPoly> next;
        for (PPoly& g : factors) {
            if (pdeg(g) == 1) {
                next.push_back(std::move(g));
                continue;
            }
            PPoly rem = std::move(g);
            for (std::uint64_t s = 0; s < p && pdeg(rem) > 0; ++s) {
                PPoly vs = v;
                vs[0] = p_sub(vs[0], s, p);
                ptrim(vs);
                if (vs.empty()) continue;
                PPoly d = pgcd(rem, vs, p);
                if (pdeg(d) > 0 && pdeg(d) < pdeg(rem)) {
                    next.push_back(d);
                    rem = pmonic(pdiv_exact(rem, d, p), p);
                }
            }
            if (pdeg(rem) > 0) next.push_back(std::move(rem));
        }
        factors = std::move(next);
    }
    for (PPoly& g : factors) {
        if (static_cast<size_t>(1) == factors.size() || pdeg(g) == 1 || factors.size() == nfactors)
            out.push_back(std::move(g));
        else
            berlekamp_squarefree(g, p, out);  // rare: finish splitting recursively
    }
}

// --- Hensel lifting + recombination over Z ------------------------------

// lift a monic factorization of monic G from mod p to mod >= bound
std::vector<ZPoly> hensel_lift(const ZPoly& G, const std::vector<PPoly>& uf, std::uint64_t p,
                               const mpz_class& bound, mpz_class& modulus_out) {
    size_t r = uf.size();
    int n = zdeg(G);
    // w_i = (prod_{j != i} u_j)^(-1) mod u_i over F_p
    std::vector<PPoly> w(r);
    for (size_t i = 0; i < r; ++i) {
        PPoly prod{1};
        for (size_t j = 0; j < r; ++j)
            if (j != i) prod = pmod(pmul(prod, uf[j], p), uf[i], p);
        mpz_class e;
        mpz_ui_pow_ui(e.get_mpz_t(), static_cast<unsigned long>(p),
                      static_cast<unsigned long>(pdeg(uf[i])));
        e -= 2;
        w[i] = ppowmod(prod, e, uf[i], p);
    }
    std::vector<ZPoly> u(r);
    for (size_t i = 0; i < r; ++i) {
        u[i].assign(uf[i].size(), mpz_class(0));
        for (size_t c = 0; c < uf[i].size(); ++c)
            u[i][c] = mpz_class(static_cast<unsigned long>(uf[i][c]));
    }
    mpz_class modulus(static_cast<unsigned long>(p));
    const mpz_class pz(static_cast<unsigned long>(p));
    while (modulus <= bound) {
        ZPoly prod{mpz_class(1)};
        for (size_t i = 0; i < r; ++i) prod = zmul(prod, u[i]);
        PPoly ep(n, 0);
        bool nonzero = false;
        for (int c = 0; c < n; ++c) {
            mpz_class gc = (c < static_cast<int>(G.size())) ? G[c] : mpz_class(0);
            mpz_class pc = (c < static_cast<int>(prod.size())) ? prod[c] : mpz_class(0);
            mpz_class quot = (gc - pc) / modulus;  // exact by the lifting invariant
            mpz_class m0 = quot % pz;
            if (m0 < 0) m0 += pz;
            ep[c] = m0.get_ui();
            nonzero |= (ep[c] != 0);
        }
        ptrim(ep);
        if (nonzero && !ep.empty()) {
            for (size_t i = 0; i < r; ++i) {
                PPoly di = pmod(pmul(ep, w[i], p), uf[i], p);
                for (size_t c = 0; c < di.size(); ++c)
                    u[i][c] += modulus * mpz_class(static_cast<unsigned long>(di[c]));
            }
        }
        modulus *= pz;
    }
    modulus_out = modulus;
    return u;
}

void center_mod(ZPoly& f, const mpz_class& m) {
    mpz_class half = m / 2;
    for (auto& c : f) {
        c %= m;
        if (c < 0) c += m;
        if (c > half) c -= m;
    }
    ztrim(f);
}

// factor a primitive squarefree integer polynomial with positive lc
std::vector<ZPoly> factor_squarefree_z(const ZPoly& F) {
    int n = zdeg(F);
    if (n <= 1) return {F};
    const mpz_class lc = F.back();
    // monic substitution: G(y) = lc^(n-1) * F(y/lc), monic with integer coefficients
    ZPoly G(n + 1, mpz_class(0));
    for (int i = 0; i <= n; ++i) {
        if (i == n) {
            G[i] = 1;
        } else {
            mpz_class e;
            mpz_pow_ui(e.get_mpz_t(), lc.get_mpz_t(), static_cast<unsigned long>(n - 1 - i));
            G[i] = F[i] * e;
        }
    }
    static const std::uint64_t primes[] = {3,   5,   7,   11,  13,  17,  19,  23,  29,  31,  37,
                                           41,  43,  47,  53,  59,  61,  67,  71,  73,  79,  83,
                                           89,  97,  101, 103, 107, 109, 113, 127, 131, 137, 139,
                                           149, 151, 157, 163, 167, 173, 179, 181, 191, 193, 197};
    std::uint64_t p = 0;
    PPoly gp;
    for (std::uint64_t cand : primes) {
        mpz_class pz(static_cast<unsigned long>(cand));
        PPoly g(n + 1, 0);
        for (int i = 0; i <= n; ++i) {
            mpz_class c = G[i] % pz;
            if (c < 0) c += pz;
            g[i] = c.get_ui();
        }
        ptrim(g);
        if (pdeg(g) != n) continue;
        PPoly d = pgcd(g, pderiv(g, cand), cand);
        if (pdeg(d) == 0) {
            p = cand;
            gp = pmonic(std::move(g), cand);
            break;
        }
    }
    if (p == 0) throw std::runtime_error("qpoly::factor: no squarefree reduction prime found");
    std::vector<PPoly> modular;
    berlekamp_squarefree(gp, p, modular);
    if (modular.size() == 1) return {F};
    // coefficient bound for monic factors of G
    mpz_class norm(0);
    for (const auto& c : G) norm += abs(c);
    mpz_class two_n;
    mpz_ui_pow_ui(two_n.get_mpz_t(), 2, static_cast<unsigned long>(n + 1));
    mpz_class bound = norm * two_n;
    mpz_class modulus;
    std::vector<ZPoly> lifted = hensel_lift(G, modular, p, bound * 2, modulus);

    std::vector<ZPoly> result_monic;
    std::vector<int> alive(lifted.size());
    for (size_t i = 0; i < lifted.size(); ++i) alive[i] = static_cast<int>(i);
    ZPoly rem = G;
    size_t subset_size = 1;
    while (2 * subset_size <= alive.size()) {
        bool found = false;
        std::vector<int> comb(subset_size);
        for (size_t i = 0; i < subset_size; ++i) comb[i] = static_cast<int>(i);
        while (true) {
            ZPoly prod{mpz_class(1)};
            for (size_t i = 0; i < subset_size; ++i) prod = zmul(prod, lifted[alive[comb[i]]]);
            for (auto& c : prod) {
                c %= modulus;
                if (c < 0) c += modulus;
            }
            center_mod(prod, modulus);
            ZPoly q;
            if (!prod.empty() && zdivides(rem, prod, &q)) {
                result_monic.push_back(prod);
                rem = q;
                std::vector<int> na;
                for (size_t i = 0, k = 0; i < alive.size(); ++i) {
                    if (k < subset_size && static_cast<int>(i) == comb[k]) {
                        ++k;
                        continue;
                    }
                    na.push_back(alive[i]);
                }
                alive = std::move(na);
                found = true;
                break;
            }
            int i = static_cast<int>(subset_size) - 1;
            while (i >= 0 && comb[i] == static_cast<int>(alive.size() - subset_size + i)) --i;
            if (i < 0) break;
            ++comb[i];
            for (size_t j = i + 1; j < subset_size; ++j) comb[j] = comb[j - 1] + 1;
        }
        if (!found) ++subset_size;
    }
    if (zdeg(rem) > 0) result_monic.push_back(rem);

    // undo the substitution: factor of F = primitive part of H(lc * x)
    std::vector<ZPoly> result;
    for (const ZPoly& H : result_monic) {
        ZPoly f(H.size());
        mpz_class pw(1);
        for (size_t i = 0; i < H.size(); ++i) {
            f[i] = H[i] * pw;
            pw *= lc;
        }
        mpz_class cont = zcontent(f);
        if (f.back() < 0) cont = -cont;
        for (auto& c : f) c /= cont;
        result.push_back(std::move(f));
    }
    return result;
}

}  // namespace

FactorList factor(const QPoly& fin) {
    QPoly f = fin;
    trim(f);
    if (f.empty()) throw std::invalid_argument("qpoly::factor: zero polynomial");
    FactorList out;
    out.unit = f.back();
    if (degree(f) == 0) return out;
    QPoly fm = monic(f);
    // Yun squarefree decomposition
    std::vector<QPoly> sqf;  // sqf[i] has multiplicity i+1 in fm
    {
        QPoly b = derivative(fm);
        QPoly c = gcd(fm, b);
        if (degree(c) == 0) {
            sqf.push_back(fm);
        } else {
            QPoly w = divrem(fm, c).first;
            QPoly y = divrem(b, c).first;
            QPoly z = sub(y, derivative(w));
            while (!is_zero(z)) {
                QPoly g = gcd(w, z);
                sqf.push_back(g);
                w = divrem(w, g).first;
                y = divrem(z, g).first;
                z = sub(y, derivative(w));
            }
            sqf.push_back(w);
        }
    }
    for (size_t mult = 0; mult < sqf.size(); ++mult) {
        if (degree(sqf[mult]) < 1) continue;
        mpq_class u;
        auto F = primitive_part(sqf[mult], u);
        for (const auto& zfac : factor_squarefree_z(F))
            out.factors.emplace_back(monic(to_qpoly(zfac)), static_cast<int>(mult + 1));
    }
    std::sort(out.factors.begin(), out.factors.end(), [](const auto& x, const auto& y) {
        if (x.first.size() != y.first.size()) return x.first.size() < y.first.size();
        for (size_t i = x.first.size(); i-- > 0;)
            if (x.first[i] != y.first[i]) return x.first[i] < y.first[i];
        return x.second < y.second;
    });
    return out;
}

bool is_irreducible(const QPoly& f) {
    if (degree(f) < 1) return false;
    auto fl = factor(f);
    return fl.factors.size() == 1 && fl.factors[0].second == 1;
}

QPoly cyclotomic(unsigned n) {
    if (n == 0) throw std::invalid_argument("cyclotomic: n must be positive");
    QPoly num(n + 1, mpq_class(0));
    num[0] = -1;
    num[n] = 1;
    for (unsigned d = 1; d < n; ++d)
        if (n % d == 0) num = divrem(num, cyclotomic(d)).first;
    return num;
}

PFactorList factor_mod_p(const PPoly& fin, std::uint64_t p) {
    PPoly f = fin;
    ptrim(f);
    if (f.empty()) throw std::invalid_argument("factor_mod_p: zero polynomial");
    PFactorList out;
    out.unit = f.back() % p;
    f = pmonic(std::move(f), p);
    while (pdeg(f) > 0) {
        PPoly g = f;
        PPoly d = pderiv(g, p);
        while (d.empty() && pdeg(g) > 0) {
            // g = h(x^p) = h(x)^p
            PPoly h(static_cast<size_t>(pdeg(g) / p) + 1, 0);
            for (size_t i = 0; i < h.size(); ++i) h[i] = g[i * p];
            g = std::move(h);
            d = pderiv(g, p);
        }
        if (pdeg(g) <= 0) break;
        PPoly sq = pgcd(g, d, p);
        PPoly u = (pdeg(sq) == 0) ? g : pmonic(pdiv_exact(g, sq, p), p);
        std::vector<PPoly> irr;
        berlekamp_squarefree(u, p, irr);
        for (const PPoly& q : irr) {
            int m = 0;
            while (pmod(f, q, p).empty()) {
                f = pmonic(pdiv_exact(f, q, p), p);
                ++m;
            }
            if (m > 0) out.factors.emplace_back(q, m);
        }
    }
    std::sort(out.factors.begin(), out.factors.end(), [](const auto& x, const auto& y) {
        if (x.first.size() != y.first.size()) return x.first.size() < y.first.size();
        return x.first < y.first;
    });
    return out;
}

}  // namespace repdim::qpoly
