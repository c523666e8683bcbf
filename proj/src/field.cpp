#include "qmds/field.hpp"

#include <algorithm>
#include <numeric>
#include <utility>

namespace qmds {
namespace {

constexpr uint32_t kMaxQ = 1024;  // table-backed contexts; desk scale only

bool is_prime(uint32_t n) {
    if (n < 2) return false;
    for (uint32_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

std::vector<uint32_t> prime_factors(uint32_t n) {
    std::vector<uint32_t> out;
    for (uint32_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

// Polynomials over GF(p), little-endian coefficient vectors.
using Poly = std::vector<uint32_t>;

uint32_t degree(const Poly& a) {
    for (size_t i = a.size(); i-- > 0;)
        if (a[i] != 0) return static_cast<uint32_t>(i);
    return 0;
}

Poly poly_mul(const Poly& a, const Poly& b, uint32_t p) {
    Poly c(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j)
            c[i + j] = (c[i + j] + a[i] * b[j]) % p;
    }
    return c;
}

// Remainder of a modulo monic divisor d.
Poly poly_rem(Poly a, const Poly& d, uint32_t p) {
    const uint32_t dd = degree(d);
    for (size_t i = a.size(); i-- > dd;) {
        uint32_t c = a[i];
        if (c == 0) continue;
        a[i] = 0;
        for (uint32_t j = 0; j < dd; ++j) {
            uint32_t t = (c * d[j]) % p;
            a[i - dd + j] = (a[i - dd + j] + p - t) % p;
        }
    }
    a.resize(dd == 0 ? 1 : dd);
    return a;
}

bool poly_is_zero(const Poly& a) {
    return std::all_of(a.begin(), a.end(), [](uint32_t c) { return c == 0; });
}

// Monic poly of degree deg whose low coefficients are the base-p digits of
// r with c_0 taken from the most significant digit -- this enumerates
// candidates in the canonical (ascending-degree lexicographic) order as r
// counts up.
Poly candidate_poly(uint64_t r, uint32_t deg, uint32_t p) {
    Poly f(deg + 1, 0);
    f[deg] = 1;
    for (uint32_t j = 0; j < deg; ++j) {
        uint64_t place = 1;
        for (uint32_t t = 0; t + 1 < deg - j; ++t) place *= p;
        f[j] = static_cast<uint32_t>((r / place) % p);
    }
    return f;
}

// Trial division by every monic polynomial of degree 1..deg/2.
bool irreducible_over_prime(const Poly& f, uint32_t p) {
    const uint32_t deg = degree(f);
    for (uint32_t dd = 1; dd <= deg / 2; ++dd) {
        uint64_t count = 1;
        for (uint32_t t = 0; t < dd; ++t) count *= p;
        for (uint64_t r = 0; r < count; ++r) {
            Poly d(dd + 1, 0);
            d[dd] = 1;
            uint64_t rr = r;
            for (uint32_t j = 0; j < dd; ++j) {
                d[j] = static_cast<uint32_t>(rr % p);
                rr /= p;
            }
            if (poly_is_zero(poly_rem(f, d, p))) return false;
        }
    }
    return true;
}

uint32_t poly_to_index(const Poly& a, uint32_t p, uint32_t m) {
    uint32_t v = 0;
    for (uint32_t j = m; j-- > 0;) v = v * p + (j < a.size() ? a[j] : 0);
    return v;
}

Poly index_to_poly(uint32_t v, uint32_t p, uint32_t m) {
    Poly a(m, 0);
    for (uint32_t j = 0; j < m; ++j) {
        a[j] = v % p;
        v /= p;
    }
    return a;
}

struct Pair {
    uint32_t a0, a1;
};

}  // namespace

void FieldContext::check_size(uint32_t p, uint32_t m) {
    if (!is_prime(p)) throw FieldError("p = " + std::to_string(p) + " is not prime");
    if (m < 1) throw FieldError("m must be >= 1");
    uint64_t q = 1;
    for (uint32_t i = 0; i < m; ++i) {
        q *= p;
        if (q > kMaxQ)
            throw FieldError("q = p^m exceeds the supported bound " + std::to_string(kMaxQ));
    }
    if (q < 3) throw FieldError("q = p^m must be at least 3");
}

FieldContext FieldContext::make(uint32_t p, uint32_t m) {
    check_size(p, m);
    FieldContext F;
    F.p_ = p;
    F.m_ = m;
    F.q_ = 1;
    for (uint32_t i = 0; i < m; ++i) F.q_ *= p;

    // First irreducible monic degree-m polynomial in canonical order.
    uint64_t count = 1;
    for (uint32_t i = 0; i < m; ++i) count *= p;
    for (uint64_t r = 0; r < count; ++r) {
        Poly f = candidate_poly(r, m, p);
        if (irreducible_over_prime(f, p)) {
            F.base_mod_ = f;
            break;
        }
    }
    F.build_base_tables();

    // First monic quadratic y^2 + e1*y + e0 over GF(q), scanning (e0, e1)
    // in canonical order, that has no root in GF(q).
    bool found = false;
    for (uint32_t r0 = 0; r0 < F.q_ && !found; ++r0) {
        Fq e0 = F.subfield_at_rank(r0);
        for (uint32_t r1 = 0; r1 < F.q_ && !found; ++r1) {
            Fq e1 = F.subfield_at_rank(r1);
            bool has_root = false;
            for (uint32_t x = 0; x < F.q_ && !has_root; ++x) {
                Fq xx{x};
                Fq val = F.add(F.add(F.mul(xx, xx), F.mul(e1, xx)), e0);
                has_root = (val.v == 0);
            }
            if (!has_root) {
                F.ext_mod_ = {e0, e1, Fq{1}};
                found = true;
            }
        }
    }
    F.build_extension();
    return F;
}

FieldContext FieldContext::with_moduli(uint32_t p, uint32_t m,
                                       const std::vector<uint32_t>& base_modulus,
                                       const std::array<Fq, 3>& ext_modulus) {
    check_size(p, m);
    if (base_modulus.size() != m + 1)
        throw FieldError("base modulus must have m+1 coefficients");
    for (uint32_t c : base_modulus)
        if (c >= p) throw FieldError("base modulus coefficient not reduced mod p");
    if (base_modulus[m] != 1) throw FieldError("base modulus must be monic");
    if (!irreducible_over_prime(base_modulus, p))
        throw FieldError("base modulus is reducible over GF(p)");

    FieldContext F;
    F.p_ = p;
    F.m_ = m;
    F.q_ = 1;
    for (uint32_t i = 0; i < m; ++i) F.q_ *= p;
    F.base_mod_ = base_modulus;
    F.build_base_tables();

    for (const Fq& e : ext_modulus)
        if (e.v >= F.q_) throw FieldError("extension modulus coefficient out of range");
    if (ext_modulus[2].v != 1) throw FieldError("extension modulus must be monic");
    for (uint32_t x = 0; x < F.q_; ++x) {
        Fq xx{x};
        Fq val = F.add(F.add(F.mul(xx, xx), F.mul(ext_modulus[1], xx)), ext_modulus[0]);
        if (val.v == 0) throw FieldError("extension modulus has a root in GF(q)");
    }
    F.ext_mod_ = ext_modulus;
    F.build_extension();
    return F;
}

void FieldContext::build_base_tables() {
    const uint32_t q = q_, p = p_, m = m_;
    addq_.assign(uint64_t(q) * q, 0);
    subq_.assign(uint64_t(q) * q, 0);
    mulq_.assign(uint64_t(q) * q, 0);
    negq_.assign(q, 0);
    invq_.assign(q, 0);

    for (uint32_t a = 0; a < q; ++a) {
        Poly pa = index_to_poly(a, p, m);
        for (uint32_t j = 0; j < m; ++j) pa[j] = (p - pa[j]) % p;
        negq_[a] = poly_to_index(pa, p, m);
    }
    for (uint32_t a = 0; a < q; ++a) {
        Poly pa = index_to_poly(a, p, m);
        for (uint32_t b = 0; b < q; ++b) {
            Poly pb = index_to_poly(b, p, m);
            Poly s(m, 0);
            for (uint32_t j = 0; j < m; ++j) s[j] = (pa[j] + pb[j]) % p;
            addq_[uint64_t(a) * q + b] = poly_to_index(s, p, m);
            Poly prod = poly_rem(poly_mul(pa, pb, p), base_mod_, p);
            mulq_[uint64_t(a) * q + b] = poly_to_index(prod, p, m);
        }
    }
    for (uint32_t a = 0; a < q; ++a)
        for (uint32_t b = 0; b < q; ++b) subq_[uint64_t(a) * q + b] = addq_[uint64_t(a) * q + negq_[b]];
    for (uint32_t a = 1; a < q; ++a)
        for (uint32_t b = 1; b < q; ++b)
            if (mulq_[uint64_t(a) * q + b] == 1) {
                invq_[a] = b;
                break;
            }

    // Canonical rank of a GF(q) index: digit-reversed base-p value, which
    // realizes lexicographic comparison of ascending-degree coefficients.
    rankq_.assign(q, 0);
    byrankq_.assign(q, 0);
    for (uint32_t a = 0; a < q; ++a) {
        uint32_t v = a, r = 0;
        for (uint32_t j = 0; j < m; ++j) {
            r = r * p + v % p;
            v /= p;
        }
        rankq_[a] = r;
        byrankq_[r] = a;
    }
}

void FieldContext::build_extension() {
    const uint32_t q = q_;
    q2_ = q * q;
    ord_ = q2_ - 1;

    lo_.assign(q2_, 0);
    hi_.assign(q2_, 0);
    for (uint32_t v = 0; v < q2_; ++v) {
        lo_[v] = v % q;
        hi_[v] = v / q;
    }
    rank2_.assign(q2_, 0);
    byrank2_.assign(q2_, 0);
    for (uint32_t v = 0; v < q2_; ++v) {
        uint32_t r = rankq_[lo_[v]] * q + rankq_[hi_[v]];
        rank2_[v] = r;
        byrank2_[r] = v;
    }

    // Multiplication of coordinate pairs, reducing y^2 = -(e0 + e1*y).
    const uint32_t e0 = ext_mod_[0].v, e1 = ext_mod_[1].v;
    auto pmul = [&](Pair a, Pair b) -> Pair {
        uint32_t a0b0 = mulq_[uint64_t(a.a0) * q + b.a0];
        uint32_t a0b1 = mulq_[uint64_t(a.a0) * q + b.a1];
        uint32_t a1b0 = mulq_[uint64_t(a.a1) * q + b.a0];
        uint32_t a1b1 = mulq_[uint64_t(a.a1) * q + b.a1];
        uint32_t c0 = subq_[uint64_t(a0b0) * q + mulq_[uint64_t(e0) * q + a1b1]];
        uint32_t c1 =
            subq_[uint64_t(addq_[uint64_t(a0b1) * q + a1b0]) * q + mulq_[uint64_t(e1) * q + a1b1]];
        return {c0, c1};
    };
    auto ppow = [&](Pair a, uint64_t e) -> Pair {
        Pair r{1, 0};
        while (e) {
            if (e & 1) r = pmul(r, a);
            a = pmul(a, a);
            e >>= 1;
        }
        return r;
    };

    // First element in canonical order with multiplicative order q^2-1.
    const std::vector<uint32_t> factors = prime_factors(ord_);
    for (uint32_t r = 0; r < q2_; ++r) {
        uint32_t v = byrank2_[r];
        if (v == 0) continue;
        Pair x{lo_[v], hi_[v]};
        bool primitive = true;
        for (uint32_t f : factors) {
            Pair y = ppow(x, ord_ / f);
            if (y.a0 == 1 && y.a1 == 0) {
                primitive = false;
                break;
            }
        }
        if (primitive) {
            g_ = Fq2{v};
            break;
        }
    }

    exp_.assign(2 * uint64_t(ord_) - 1, 0);
    log_.assign(q2_, 0);
    Pair cur{1, 0};
    Pair gp{lo_[g_.v], hi_[g_.v]};
    for (uint32_t j = 0; j < ord_; ++j) {
        uint32_t v = cur.a0 + q * cur.a1;
        exp_[j] = v;
        log_[v] = j;
        cur = pmul(cur, gp);
    }
    for (uint32_t j = ord_; j < 2 * ord_ - 1; ++j) exp_[j] = exp_[j - ord_];

    frob_.assign(q2_, 0);
    normv_.assign(q2_, 0);
    for (uint32_t j = 0; j < ord_; ++j) {
        uint32_t v = exp_[j];
        frob_[v] = exp_[(uint64_t(j) * q) % ord_];
        uint32_t nv = exp_[(uint64_t(j) * (q + 1)) % ord_];
        normv_[v] = nv;  // lies in GF(q), so nv < q
    }

    normroot_.assign(q, 0);
    for (uint32_t r = 0; r < q2_; ++r) {
        uint32_t v = byrank2_[r];
        if (v == 0) continue;
        uint32_t c = normv_[v];
        if (normroot_[c] == 0) normroot_[c] = v;
    }
}

Fq FieldContext::inv(Fq a) const {
    if (a.v == 0) throw FieldError("division by zero");
    return Fq{invq_[a.v]};
}

Fq2 FieldContext::pow(Fq2 a, int64_t e) const {
    if (a.v == 0) {
        if (e == 0) return one();
        if (e < 0) throw FieldError("zero raised to a negative power");
        return {};
    }
    int64_t r = e % static_cast<int64_t>(ord_);
    if (r < 0) r += ord_;
    uint64_t le = (uint64_t(log_[a.v]) * static_cast<uint64_t>(r)) % ord_;
    return Fq2{exp_[le]};
}

Fq2 FieldContext::solve_norm(Fq c) const {
    if (c.v == 0) throw FieldError("solve_norm requires a nonzero element of GF(q)");
    if (c.v >= q_) throw FieldError("solve_norm argument out of range");
    return Fq2{normroot_[c.v]};
}

Fq2 FieldContext::root_of_unity(uint64_t t) const {
    if (t == 0 || ord_ % t != 0)
        throw FieldError("t = " + std::to_string(t) + " does not divide q^2-1 = " +
                         std::to_string(ord_));
    return Fq2{exp_[ord_ / t]};
}

uint64_t FieldContext::mul_order(Fq2 a) const {
    if (a.v == 0) throw FieldError("multiplicative order of zero is undefined");
    return ord_ / std::gcd<uint64_t>(ord_, log_[a.v]);
}

std::vector<uint32_t> FieldContext::digits(Fq2 a) const {
    std::vector<uint32_t> d(2 * m_, 0);
    uint32_t v0 = lo_[a.v], v1 = hi_[a.v];
    for (uint32_t j = 0; j < m_; ++j) {
        d[j] = v0 % p_;
        v0 /= p_;
        d[m_ + j] = v1 % p_;
        v1 /= p_;
    }
    return d;
}

Fq2 FieldContext::from_digits(std::span<const uint32_t> d) const {
    if (d.size() != 2 * m_) throw FieldError("element must have 2m digits");
    uint32_t v0 = 0, v1 = 0;
    for (uint32_t j = m_; j-- > 0;) {
        if (d[j] >= p_ || d[m_ + j] >= p_) throw FieldError("digit not reduced mod p");
        v0 = v0 * p_ + d[j];
        v1 = v1 * p_ + d[m_ + j];
    }
    return Fq2{v0 + q_ * v1};
}

std::string FieldContext::to_string(Fq2 a) const {
    std::string s;
    for (uint32_t d : digits(a)) {
        if (!s.empty()) s += ',';
        s += std::to_string(d);
    }
    return s;
}

}  // namespace qmds
