#include "folkit/factor.hpp"

#include <algorithm>
#include <cassert>
#include <cstdint>
#include <numeric>
#include <optional>
#include <random>

#include "folkit/errors.hpp"

namespace folkit {
namespace {

// ---------------------------------------------------------------------------
// Arithmetic mod a small odd prime p (p < 2^31). Polynomials are coefficient
// vectors, lowest first, trimmed.
// ---------------------------------------------------------------------------

using ZpPoly = std::vector<uint64_t>;

uint64_t mulmod(uint64_t a, uint64_t b, uint64_t p) {
    return static_cast<uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
}

uint64_t powmod(uint64_t a, uint64_t e, uint64_t p) {
    uint64_t r = 1;
    a %= p;
    while (e) {
        if (e & 1) r = mulmod(r, a, p);
        a = mulmod(a, a, p);
        e >>= 1;
    }
    return r;
}

uint64_t invmod(uint64_t a, uint64_t p) { return powmod(a, p - 2, p); }

void zp_trim(ZpPoly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

ZpPoly zp_mul(const ZpPoly& a, const ZpPoly& b, uint64_t p) {
    if (a.empty() || b.empty()) return {};
    ZpPoly c(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i) {
        if (!a[i]) continue;
        for (size_t j = 0; j < b.size(); ++j)
            c[i + j] = (c[i + j] + mulmod(a[i], b[j], p)) % p;
    }
    zp_trim(c);
    return c;
}

ZpPoly zp_sub(ZpPoly a, const ZpPoly& b, uint64_t p) {
    a.resize(std::max(a.size(), b.size()), 0);
    for (size_t i = 0; i < b.size(); ++i) a[i] = (a[i] + p - b[i]) % p;
    zp_trim(a);
    return a;
}

std::pair<ZpPoly, ZpPoly> zp_divmod(ZpPoly a, const ZpPoly& b, uint64_t p) {
    ZpPoly q;
    if (a.size() >= b.size()) q.assign(a.size() - b.size() + 1, 0);
    uint64_t lcinv = invmod(b.back(), p);
    while (a.size() >= b.size() && !a.empty()) {
        uint64_t t = mulmod(a.back(), lcinv, p);
        size_t off = a.size() - b.size();
        q[off] = t;
        for (size_t j = 0; j < b.size(); ++j)
            a[off + j] = (a[off + j] + p - mulmod(t, b[j], p)) % p;
        a.pop_back();
        zp_trim(a);
        if (a.size() < b.size()) break;
    }
    zp_trim(q);
    return {std::move(q), std::move(a)};
}

ZpPoly zp_mod(const ZpPoly& a, const ZpPoly& b, uint64_t p) {
    if (a.size() < b.size()) return a;
    return zp_divmod(a, b, p).second;
}

ZpPoly zp_gcd(ZpPoly a, ZpPoly b, uint64_t p) {
    while (!b.empty()) {
        ZpPoly r = zp_mod(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty() && a.back() != 1) {
        uint64_t s = invmod(a.back(), p);
        for (auto& v : a) v = mulmod(v, s, p);
    }
    return a;
}

ZpPoly zp_powmod(ZpPoly a, Int e, const ZpPoly& f, uint64_t p) {
    ZpPoly r = {1};
    a = zp_mod(a, f, p);
    while (sgn(e) > 0) {
        if (mpz_odd_p(e.get_mpz_t())) r = zp_mod(zp_mul(r, a, p), f, p);
        a = zp_mod(zp_mul(a, a, p), f, p);
        e >>= 1;
    }
    return r;
}

ZpPoly zp_derivative(const ZpPoly& f, uint64_t p) {
    if (f.size() <= 1) return {};
    ZpPoly d(f.size() - 1);
    for (size_t i = 1; i < f.size(); ++i) d[i - 1] = mulmod(f[i], i % p, p);
    zp_trim(d);
    return d;
}

// Cantor-Zassenhaus equal-degree splitting: f monic squarefree, all
// irreducible factors of degree d.
void zp_equal_degree(const ZpPoly& f, int d, uint64_t p, std::mt19937_64& rng,
                     std::vector<ZpPoly>& out) {
    int n = static_cast<int>(f.size()) - 1;
    if (n == d) {
        out.push_back(f);
        return;
    }
    Int pd = 1;
    for (int i = 0; i < d; ++i) pd *= static_cast<unsigned long>(p);
    Int exp = (pd - 1) / 2;
    while (true) {
        ZpPoly r(static_cast<size_t>(n), 0);
        for (auto& v : r) v = rng() % p;
        zp_trim(r);
        if (r.size() <= 1) continue;
        ZpPoly g = zp_gcd(f, r, p);
        if (g.size() <= 1 || g.size() >= f.size()) {
            ZpPoly h = zp_powmod(r, exp, f, p);
            if (h.empty()) continue;
            h.resize(std::max<size_t>(h.size(), 1), 0);
            h[0] = (h[0] + p - 1) % p;
            zp_trim(h);
            g = zp_gcd(f, h, p);
        }
        if (g.size() > 1 && g.size() < f.size()) {
            zp_equal_degree(g, d, p, rng, out);
            zp_equal_degree(zp_divmod(f, g, p).first, d, p, rng, out);
            return;
        }
    }
}

// Distinct-degree + equal-degree factorization of a monic squarefree f mod p.
std::vector<ZpPoly> zp_factor_squarefree(ZpPoly f, uint64_t p) {
    std::vector<ZpPoly> out;
    std::mt19937_64 rng(0x5eed5eedULL);
    ZpPoly xp = {0, 1};
    int d = 0;
    while (static_cast<int>(f.size()) - 1 > 0) {
        ++d;
        if (2 * d > static_cast<int>(f.size()) - 1) {
            out.push_back(f);
            break;
        }
        xp = zp_powmod(xp, Int(static_cast<unsigned long>(p)), f, p);
        ZpPoly g = zp_gcd(f, zp_sub(xp, ZpPoly{0, 1}, p), p);
        if (g.size() > 1) {
            zp_equal_degree(g, d, p, rng, out);
            f = zp_divmod(f, g, p).first;
            xp = zp_mod(xp, f, p);
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// Integer polynomials (vector<Int>, lowest first) and Z/m arithmetic with
// symmetric representatives; m is an arbitrary-precision modulus.
// ---------------------------------------------------------------------------

using ZPoly = std::vector<Int>;

void z_trim(ZPoly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

ZPoly z_mul(const ZPoly& a, const ZPoly& b) {
    if (a.empty() || b.empty()) return {};
    ZPoly c(a.size() + b.size() - 1, Int(0));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
    z_trim(c);
    return c;
}

ZPoly z_sub(ZPoly a, const ZPoly& b) {
    a.resize(std::max(a.size(), b.size()), Int(0));
    for (size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
    z_trim(a);
    return a;
}

void zm_reduce(ZPoly& f, const Int& m) {
    Int half = m / 2;
    for (auto& v : f) {
        v %= m;
        if (v > half) v -= m;
        if (v < -half) v += m;
    }
    z_trim(f);
}

ZPoly zm_mul(const ZPoly& a, const ZPoly& b, const Int& m) {
    ZPoly c = z_mul(a, b);
    zm_reduce(c, m);
    return c;
}

// Division with remainder by a monic divisor, mod m.
std::pair<ZPoly, ZPoly> zm_divmod_monic(ZPoly a, const ZPoly& b, const Int& m) {
    assert(!b.empty() && b.back() == 1);
    zm_reduce(a, m);
    ZPoly q;
    if (a.size() >= b.size()) q.assign(a.size() - b.size() + 1, Int(0));
    while (a.size() >= b.size() && !a.empty()) {
        Int t = a.back();
        size_t off = a.size() - b.size();
        q[off] = t;
        for (size_t j = 0; j < b.size(); ++j) a[off + j] -= t * b[j];
        a.pop_back();
        zm_reduce(a, m);
        if (a.size() < b.size()) break;
    }
    zm_reduce(q, m);
    zm_reduce(a, m);
    return {std::move(q), std::move(a)};
}

ZPoly z_from_zp(const ZpPoly& f, uint64_t p) {
    ZPoly r(f.size());
    for (size_t i = 0; i < f.size(); ++i) {
        r[i] = static_cast<unsigned long>(f[i]);
        if (f[i] > p / 2) r[i] -= static_cast<unsigned long>(p);
    }
    z_trim(r);
    return r;
}

ZpPoly zp_from_z(const ZPoly& f, uint64_t p) {
    ZpPoly r(f.size());
    for (size_t i = 0; i < f.size(); ++i) {
        Int v = f[i] % static_cast<unsigned long>(p);
        if (v < 0) v += static_cast<unsigned long>(p);
        r[i] = v.get_ui();
    }
    zp_trim(r);
    return r;
}

Int z_content(const ZPoly& f) {
    Int g(0);
    for (const auto& v : f) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    return g;
}

std::optional<ZPoly> z_divide_exact(ZPoly a, const ZPoly& b) {
    if (b.empty()) return std::nullopt;
    if (a.empty()) return ZPoly{};
    if (a.size() < b.size()) return std::nullopt;
    ZPoly q(a.size() - b.size() + 1, Int(0));
    while (a.size() >= b.size() && !a.empty()) {
        Int t = a.back() / b.back();
        if (t * b.back() != a.back()) return std::nullopt;
        size_t off = a.size() - b.size();
        q[off] = t;
        for (size_t j = 0; j < b.size(); ++j) a[off + j] -= t * b[j];
        if (!a.empty() && a.back() != 0) return std::nullopt;
        a.pop_back();
        z_trim(a);
        if (a.size() < b.size()) break;
    }
    if (!a.empty()) return std::nullopt;
    z_trim(q);
    return q;
}

// One quadratic Hensel step (von zur Gathen & Gerhard, Alg. 15.10):
// f = g*h (mod m), s*g + t*h = 1 (mod m), g monic -> same relations mod m^2.
void hensel_step(const ZPoly& f, ZPoly& g, ZPoly& h, ZPoly& s, ZPoly& t, const Int& m) {
    Int m2 = m * m;
    ZPoly e = z_sub(f, z_mul(g, h));
    zm_reduce(e, m2);
    auto [q, r] = zm_divmod_monic(zm_mul(t, e, m2), g, m2);
    ZPoly g1 = g;
    g1.resize(std::max(g1.size(), r.size()), Int(0));
    for (size_t i = 0; i < r.size(); ++i) g1[i] += r[i];
    zm_reduce(g1, m2);
    if (g1.size() < g.size() || g1.back() != 1) {
        // monicity must be preserved; pad back (reduce may have trimmed a 1)
        g1.resize(g.size(), Int(0));
        g1.back() = 1;
    }
    ZPoly se = zm_mul(s, e, m2);
    ZPoly qh = zm_mul(q, h, m2);
    ZPoly h1 = h;
    h1.resize(std::max({h1.size(), se.size(), qh.size()}), Int(0));
    for (size_t i = 0; i < se.size(); ++i) h1[i] += se[i];
    for (size_t i = 0; i < qh.size(); ++i) h1[i] += qh[i];
    zm_reduce(h1, m2);

    ZPoly b = z_sub(z_mul(s, g1), ZPoly{Int(1)});
    {
        ZPoly th = z_mul(t, h1);
        b.resize(std::max(b.size(), th.size()), Int(0));
        for (size_t i = 0; i < th.size(); ++i) b[i] += th[i];
    }
    zm_reduce(b, m2);
    auto [c, d] = zm_divmod_monic(zm_mul(t, b, m2), g1, m2);
    ZPoly t1 = z_sub(t, d);
    zm_reduce(t1, m2);
    ZPoly s1 = z_sub(z_sub(s, zm_mul(s, b, m2)), zm_mul(c, h1, m2));
    zm_reduce(s1, m2);

    g = std::move(g1);
    h = std::move(h1);
    s = std::move(s1);
    t = std::move(t1);
}

// Lift the mod-p factorization f = lc(f) * prod f_i (f_i monic) to monic
// factors mod p^(2^k) >= target. Returns factors and the final modulus.
std::vector<ZPoly> hensel_lift_all(const ZPoly& f, const std::vector<ZpPoly>& facs, uint64_t p,
                                   const Int& target, Int& modulus_out) {
    std::vector<ZPoly> lifted;
    ZPoly rest = f;
    Int modulus(static_cast<unsigned long>(p));
    while (modulus < target) modulus *= modulus;
    modulus_out = modulus;
    for (size_t idx = 0; idx < facs.size(); ++idx) {
        if (idx + 1 == facs.size()) {
            ZPoly g = rest;
            zm_reduce(g, modulus);
            Int lcinv;
            if (mpz_invert(lcinv.get_mpz_t(), g.back().get_mpz_t(), modulus.get_mpz_t()) == 0)
                throw Error("hensel: leading coefficient not invertible");
            for (auto& v : g) v = v * lcinv;
            zm_reduce(g, modulus);
            g.back() = 1;
            lifted.push_back(std::move(g));
            break;
        }
        ZpPoly gz = facs[idx];
        ZpPoly hz = zp_divmod(zp_from_z(rest, p), gz, p).first;
        // Bezout s*g + t*h = 1 mod p
        ZpPoly r0 = gz, r1 = hz, s0 = {1}, s1 = {}, t0 = {}, t1 = {1};
        while (!r1.empty()) {
            auto [q, r] = zp_divmod(r0, r1, p);
            ZpPoly s2 = zp_sub(s0, zp_mul(q, s1, p), p);
            ZpPoly t2 = zp_sub(t0, zp_mul(q, t1, p), p);
            r0 = std::move(r1); r1 = std::move(r);
            s0 = std::move(s1); s1 = std::move(s2);
            t0 = std::move(t1); t1 = std::move(t2);
        }
        if (r0.size() != 1) throw Error("hensel: factors not coprime mod p");
        uint64_t cinv = invmod(r0[0], p);
        for (auto& v : s0) v = mulmod(v, cinv, p);
        for (auto& v : t0) v = mulmod(v, cinv, p);
        ZPoly G = z_from_zp(gz, p), H = z_from_zp(hz, p);
        ZPoly S = z_from_zp(s0, p), T = z_from_zp(t0, p);
        Int m(static_cast<unsigned long>(p));
        while (m < modulus) {
            hensel_step(rest, G, H, S, T, m);
            m *= m;
        }
        zm_reduce(G, modulus);
        if (G.empty() || G.back() != 1) {
            G.resize(static_cast<size_t>(gz.size()), Int(0));
            G.back() = 1;
        }
        zm_reduce(H, modulus);
        lifted.push_back(G);
        rest = H;
    }
    return lifted;
}

// ---------------------------------------------------------------------------
// Zassenhaus: factor a primitive squarefree polynomial in Z[x] with positive
// leading coefficient into primitive irreducible integer polynomials.
// ---------------------------------------------------------------------------

std::vector<ZPoly> factor_squarefree_z(ZPoly F) {
    std::vector<ZPoly> out;
    if (F.size() <= 2) {
        if (F.size() == 2) out.push_back(F);
        return out;
    }
    if (F[0] == 0) {
        out.push_back(ZPoly{Int(0), Int(1)});
        F.erase(F.begin());
        z_trim(F);
        auto rest = factor_squarefree_z(std::move(F));
        out.insert(out.end(), rest.begin(), rest.end());
        return out;
    }
    static const uint64_t primes[] = {3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47,
                                      53, 59, 61, 67, 71, 73, 79, 83, 89, 97, 101, 103};
    uint64_t p = 0;
    ZpPoly fp;
    for (uint64_t cand : primes) {
        if (F.back() % static_cast<unsigned long>(cand) == 0) continue;
        fp = zp_from_z(F, cand);
        if (zp_gcd(fp, zp_derivative(fp, cand), cand).size() == 1) {
            p = cand;
            break;
        }
    }
    if (p == 0) throw Error("no suitable prime found for modular factorization");
    uint64_t lcinv = invmod(fp.back(), p);
    for (auto& v : fp) v = mulmod(v, lcinv, p);
    std::vector<ZpPoly> modular = zp_factor_squarefree(fp, p);
    std::sort(modular.begin(), modular.end());
    if (modular.size() == 1) {
        out.push_back(std::move(F));
        return out;
    }
    // coefficient bound for factors of F (Landau-Mignotte flavoured)
    Int maxc(0);
    for (const auto& v : F) {
        Int a = abs(v);
        if (a > maxc) maxc = a;
    }
    int n = static_cast<int>(F.size()) - 1;
    Int bound = maxc * abs(F.back()) * static_cast<unsigned long>(n + 2);
    mpz_mul_2exp(bound.get_mpz_t(), bound.get_mpz_t(), static_cast<mp_bitcnt_t>(n + 2));
    Int modulus;
    std::vector<ZPoly> lifted = hensel_lift_all(F, modular, p, 2 * bound + 1, modulus);

    std::vector<size_t> avail(lifted.size());
    std::iota(avail.begin(), avail.end(), 0);
    ZPoly rest = F;
    size_t card = 1;
    while (2 * card <= avail.size()) {
        bool found = false;
        std::vector<size_t> idx(card);
        std::iota(idx.begin(), idx.end(), 0);
        while (true) {
            ZPoly cand = {rest.back()};
            for (size_t j : idx) cand = zm_mul(cand, lifted[avail[j]], modulus);
            Int c = z_content(cand);
            if (c != 0)
                for (auto& v : cand) v /= c;
            if (!cand.empty() && cand.back() < 0)
                for (auto& v : cand) v = -v;
            auto q = z_divide_exact(z_mul(ZPoly{rest.back()}, rest), cand);
            if (q) {
                out.push_back(cand);
                std::vector<size_t> keep;
                for (size_t i = 0; i < avail.size(); ++i)
                    if (std::find(idx.begin(), idx.end(), i) == idx.end())
                        keep.push_back(avail[i]);
                avail = std::move(keep);
                Int qc = z_content(*q);
                for (auto& v : *q) v /= qc;
                if (!q->empty() && q->back() < 0)
                    for (auto& v : *q) v = -v;
                rest = std::move(*q);
                found = true;
                break;
            }
            // next cardinality-card combination of {0,...,avail.size()-1}
            size_t k = card;
            bool done = true;
            while (k-- > 0) {
                if (idx[k] != k + avail.size() - card) {
                    ++idx[k];
                    for (size_t j = k + 1; j < card; ++j) idx[j] = idx[j - 1] + 1;
                    done = false;
                    break;
                }
            }
            if (done) break;
        }
        if (!found) ++card;
    }
    if (rest.size() > 1) out.push_back(std::move(rest));
    return out;
}

// ---------------------------------------------------------------------------
// Field-level drivers.
// ---------------------------------------------------------------------------

FieldPtr coeff_field(const UPoly& p) {
    FieldPtr K;
    for (const auto& c : p.coeffs()) K = common_field(K, c.field());
    return K;
}

std::vector<UPoly> factor_over_q_squarefree(const UPoly& f) {
    Int den(1);
    for (const auto& c : f.coeffs())
        mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.rational().get_den().get_mpz_t());
    ZPoly F(f.coeffs().size());
    for (size_t i = 0; i < F.size(); ++i) {
        Rat v = f.coeffs()[i].rational() * Rat(den);
        F[i] = v.get_num();
    }
    Int c = z_content(F);
    if (c != 0)
        for (auto& v : F) v /= c;
    if (F.back() < 0)
        for (auto& v : F) v = -v;
    std::vector<UPoly> out;
    for (ZPoly& g : factor_squarefree_z(std::move(F))) {
        std::vector<FieldElem> coeffs(g.size());
        for (size_t i = 0; i < g.size(); ++i) coeffs[i] = FieldElem(Rat(g[i]));
        out.push_back(UPoly(std::move(coeffs)).monic());
    }
    return out;
}

// Norm of f from K down to K->base(), by interpolation through pointwise
// norms (the minimal polynomial is monic, so the resultant is the norm).
UPoly norm_down_poly(const UPoly& f, const FieldPtr& K) {
    int d = K->degree();
    int target_deg = d * f.degree();
    std::vector<FieldElem> xs(static_cast<size_t>(target_deg + 1));
    std::vector<FieldElem> dd(static_cast<size_t>(target_deg + 1));
    for (int i = 0; i <= target_deg; ++i) {
        FieldElem x(static_cast<long>(i));
        FieldElem val = f.eval(x);
        FieldElem nrm = same_field(val.field(), K) ? val.norm_down() : val.pow(d);
        xs[static_cast<size_t>(i)] = x;
        dd[static_cast<size_t>(i)] = nrm;
    }
    for (int j = 1; j <= target_deg; ++j)
        for (int i = target_deg; i >= j; --i)
            dd[static_cast<size_t>(i)] =
                (dd[static_cast<size_t>(i)] - dd[static_cast<size_t>(i - 1)]) /
                (xs[static_cast<size_t>(i)] - xs[static_cast<size_t>(i - j)]);
    UPoly result = UPoly::constant(dd[static_cast<size_t>(target_deg)]);
    for (int i = target_deg - 1; i >= 0; --i)
        result = result * UPoly({-xs[static_cast<size_t>(i)], FieldElem(1)}) +
                 UPoly::constant(dd[static_cast<size_t>(i)]);
    return result;
}

std::vector<UPoly> factor_squarefree_field(const UPoly& f, const FieldPtr& K, int bound);

// Trager's method over the extension K (f squarefree, monic, deg >= 2).
std::vector<UPoly> factor_trager(const UPoly& f, const FieldPtr& K, int bound) {
    FieldElem theta = FieldElem::generator(K);
    for (long s_abs = 0; s_abs <= 4 * K->degree() * f.degree() + 4; ++s_abs) {
        for (long sign : {1L, -1L}) {
            if (s_abs == 0 && sign == -1) continue;
            long s = sign * s_abs;
            UPoly fs = f.shift(theta * FieldElem(-s)); // f(x - s*theta)
            UPoly norm = norm_down_poly(fs, K);
            if (UPoly::gcd(norm, norm.derivative()).degree() > 0) continue;
            std::vector<UPoly> out;
            for (const UPoly& ni : factor_squarefree_field(norm.monic(), K->base(), bound)) {
                UPoly h = UPoly::gcd(fs, ni);
                if (h.degree() > 0) out.push_back(h.shift(theta * FieldElem(s)).monic());
            }
            return out;
        }
    }
    throw Error("trager: no separating shift found");
}

std::vector<UPoly> factor_squarefree_field(const UPoly& f, const FieldPtr& K, int bound) {
    if (f.degree() <= 0) return {};
    if (f.degree() == 1) return {f.monic()};
    if (!K) return factor_over_q_squarefree(f);
    return factor_trager(f, K, bound);
}

} // namespace

std::vector<std::pair<UPoly, int>> factor_univariate(const UPoly& p, FieldPtr ambient,
                                                     int max_total_degree) {
    if (p.is_zero()) throw Error("cannot factor the zero polynomial");
    FieldPtr K = common_field(ambient, coeff_field(p));
    std::vector<std::pair<UPoly, int>> out;
    if (p.degree() == 0) return out;
    for (auto& [sf, mult] : UPoly::squarefree_decomposition(p))
        for (const UPoly& irr : factor_squarefree_field(sf, K, max_total_degree))
            out.emplace_back(irr, mult);
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        if (a.first.degree() != b.first.degree()) return a.first.degree() < b.first.degree();
        return a.first.str() < b.first.str();
    });
    return out;
}

bool is_irreducible(const UPoly& p, FieldPtr ambient, int max_total_degree) {
    if (p.degree() <= 0) return false;
    auto f = factor_univariate(p, std::move(ambient), max_total_degree);
    return f.size() == 1 && f[0].second == 1;
}

FieldElem some_root_of_irreducible(const UPoly& q, FieldPtr ambient, int max_total_degree) {
    if (q.degree() == 1) return -q.coeff(0) / q.coeff(1);
    FieldPtr base = common_field(std::move(ambient), coeff_field(q));
    // coefficients must actually live in `base` for a valid tower step; the
    // canonical form guarantees they sit at or below it
    FieldPtr ext = NumberField::extend(base, q.monic().coeffs(), max_total_degree);
    return FieldElem::generator(ext);
}

std::vector<std::pair<FieldElem, int>> all_roots(const UPoly& p, FieldPtr ambient,
                                                 int max_total_degree) {
    std::vector<std::pair<FieldElem, int>> roots;
    struct Item {
        UPoly poly;
        int mult;
        FieldPtr field;
    };
    std::vector<Item> work;
    FieldPtr K0 = common_field(ambient, nullptr);
    for (auto& [f, m] : factor_univariate(p, K0, max_total_degree)) work.push_back({f, m, K0});
    while (!work.empty()) {
        Item it = std::move(work.front());
        work.erase(work.begin());
        if (it.poly.degree() == 1) {
            roots.emplace_back(-it.poly.coeff(0) / it.poly.coeff(1), it.mult);
            continue;
        }
        FieldElem r = some_root_of_irreducible(it.poly, it.field, max_total_degree);
        roots.emplace_back(r, it.mult);
        UPoly rest = it.poly.divide_exact(UPoly({-r, FieldElem(1)}));
        for (auto& [f, m] : factor_univariate(rest, r.field(), max_total_degree))
            work.push_back({f, m * it.mult, r.field()});
    }
    return roots;
}

} // namespace folkit
