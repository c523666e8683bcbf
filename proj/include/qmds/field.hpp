#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "qmds/errors.hpp"

namespace qmds {

// Element of the subfield GF(q). The index encodes the residue polynomial
// over GF(p): index = sum b_j * p^j with b_j the coefficient of x^j, so
// indices 0..p-1 are the prime-subfield constants.
struct Fq {
    uint32_t v = 0;
    friend bool operator==(Fq, Fq) = default;
};

// Element of GF(q^2) = GF(q)[y]/(ext_modulus), stored as a0 + q*a1 where
// a0, a1 are GF(q) indices. Subfield elements are exactly the indices < q.
// Note: index order is not the canonical element order; use
// FieldContext::canonical_rank for that.
struct Fq2 {
    uint32_t v = 0;
    friend bool operator==(Fq2, Fq2) = default;
};

// Exact arithmetic in the tower GF(p) < GF(q) < GF(q^2), table-backed.
// Construction is deterministic: moduli and the primitive element are the
// first candidates under the canonical element order (lexicographic on the
// coefficient vector over GF(p), ascending degree). Immutable once built,
// safe to share across threads.
class FieldContext {
public:
    // Canonical context for q = p^m. Throws FieldError for p not prime,
    // p^m < 3, or p^m beyond the table-size bound.
    static FieldContext make(uint32_t p, uint32_t m);

    // Context with explicitly given moduli (e.g. read back from a matrix
    // file). base_modulus: m+1 coefficients over GF(p), ascending degree,
    // monic. ext_modulus: 3 coefficients over GF(q), ascending, monic.
    // Both are validated for irreducibility.
    static FieldContext with_moduli(uint32_t p, uint32_t m,
                                    const std::vector<uint32_t>& base_modulus,
                                    const std::array<Fq, 3>& ext_modulus);

    uint32_t p() const { return p_; }
    uint32_t m() const { return m_; }
    uint32_t q() const { return q_; }
    uint32_t q2() const { return q2_; }
    const std::vector<uint32_t>& base_modulus() const { return base_mod_; }
    const std::array<Fq, 3>& ext_modulus() const { return ext_mod_; }
    Fq2 generator() const { return g_; }

    Fq2 zero() const { return {}; }
    Fq2 one() const { return Fq2{1}; }

    // ---- GF(q) arithmetic ----
    Fq add(Fq a, Fq b) const { return Fq{addq_[a.v * q_ + b.v]}; }
    Fq sub(Fq a, Fq b) const { return Fq{subq_[a.v * q_ + b.v]}; }
    Fq mul(Fq a, Fq b) const { return Fq{mulq_[a.v * q_ + b.v]}; }
    Fq neg(Fq a) const { return Fq{negq_[a.v]}; }
    Fq inv(Fq a) const;

    // ---- GF(q^2) arithmetic ----
    Fq2 add(Fq2 a, Fq2 b) const {
        return Fq2{addq_[lo_[a.v] * q_ + lo_[b.v]] + q_ * addq_[hi_[a.v] * q_ + hi_[b.v]]};
    }
    Fq2 sub(Fq2 a, Fq2 b) const {
        return Fq2{subq_[lo_[a.v] * q_ + lo_[b.v]] + q_ * subq_[hi_[a.v] * q_ + hi_[b.v]]};
    }
    Fq2 neg(Fq2 a) const { return Fq2{negq_[lo_[a.v]] + q_ * negq_[hi_[a.v]]}; }
    Fq2 mul(Fq2 a, Fq2 b) const {
        if (a.v == 0 || b.v == 0) return {};
        return Fq2{exp_[log_[a.v] + log_[b.v]]};
    }
    Fq2 inv(Fq2 a) const {
        if (a.v == 0) throw FieldError("division by zero");
        return Fq2{exp_[ord_ - log_[a.v]]};
    }
    Fq2 div(Fq2 a, Fq2 b) const { return mul(a, inv(b)); }

    // a^e for any integer e; negative exponents require a != 0. 0^0 = 1.
    Fq2 pow(Fq2 a, int64_t e) const;

    // a^q. Applying twice is the identity; fixes exactly GF(q).
    Fq2 frobenius(Fq2 a) const { return Fq2{frob_[a.v]}; }

    // a^(q+1), always in GF(q).
    Fq norm(Fq2 a) const { return Fq{normv_[a.v]}; }

    // First x in canonical order with x^(q+1) = c, for c in GF(q)^*.
    Fq2 solve_norm(Fq c) const;

    // zeta_t = g^((q^2-1)/t); requires t | q^2-1. Multiplicative order is
    // exactly t.
    Fq2 root_of_unity(uint64_t t) const;

    uint64_t mul_order(Fq2 a) const;

    // ---- tower structure ----
    Fq2 embed(Fq a) const { return Fq2{a.v}; }
    bool in_subfield(Fq2 a) const { return a.v < q_; }
    Fq project(Fq2 a) const {
        if (!in_subfield(a)) throw FieldError("element is not in GF(q)");
        return Fq{a.v};
    }
    Fq lo(Fq2 a) const { return Fq{lo_[a.v]}; }
    Fq hi(Fq2 a) const { return Fq{hi_[a.v]}; }
    Fq2 from_pair(Fq a0, Fq a1) const { return Fq2{a0.v + q_ * a1.v}; }

    // (n mod p) copies of 1 -- embeds prime-subfield integers.
    Fq2 from_int(int64_t n) const {
        int64_t r = n % static_cast<int64_t>(p_);
        if (r < 0) r += p_;
        return Fq2{static_cast<uint32_t>(r)};
    }

    // ---- canonical order ----
    uint32_t canonical_rank(Fq2 a) const { return rank2_[a.v]; }
    Fq2 element_at_rank(uint32_t r) const { return Fq2{byrank2_[r]}; }
    uint32_t canonical_rank(Fq a) const { return rankq_[a.v]; }
    Fq subfield_at_rank(uint32_t r) const { return Fq{byrankq_[r]}; }

    // ---- text encoding: 2m base-p digits, degree 0 first ----
    std::vector<uint32_t> digits(Fq2 a) const;
    Fq2 from_digits(std::span<const uint32_t> d) const;
    std::string to_string(Fq2 a) const;  // digits joined with ','

private:
    FieldContext() = default;
    void build_base_tables();
    void build_extension();
    static void check_size(uint32_t p, uint32_t m);

    uint32_t p_ = 0, m_ = 0, q_ = 0, q2_ = 0;
    uint32_t ord_ = 0;  // q^2 - 1
    std::vector<uint32_t> base_mod_;
    std::array<Fq, 3> ext_mod_{};
    Fq2 g_{};

    std::vector<uint32_t> addq_, subq_, mulq_, negq_, invq_;
    std::vector<uint32_t> rankq_, byrankq_;
    std::vector<uint32_t> lo_, hi_;
    std::vector<uint32_t> exp_;   // g^j for j in [0, 2*ord-1), doubled for mul
    std::vector<uint32_t> log_;   // inverse of exp_ on [0, ord)
    std::vector<uint32_t> frob_, normv_;
    std::vector<uint32_t> normroot_;  // first canonical preimage per GF(q)* value
    std::vector<uint32_t> rank2_, byrank2_;
};

}  // namespace qmds
