#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "invkit/errors.hpp"

namespace invkit {

class Field;
using FieldPtr = std::shared_ptr<const Field>;

/// A small finite field GF(p^a), elements encoded as integers in [0, p^a):
/// the code sum c_k p^k stands for the polynomial sum c_k x^k in the basis
/// 1, x, ..., x^(a-1) over GF(p).
///
/// The defining polynomial comes from a fixed table of lexicographically
/// least primitive polynomials (p in {2,3,5,7}, degree <= 12), so x itself
/// generates the multiplicative group and log/exp tables drive mul and inv.
/// The table choice is recorded in run metadata (see runrecord.hpp) so that
/// results are reproducible bit for bit.
class Field {
public:
    using Elt = std::uint32_t;

    /// Shared, cached instance for GF(p^a). Throws usage_error for
    /// unsupported (p, a) or fields too large to tabulate.
    static FieldPtr get(int p, int a);

    int p() const { return p_; }
    int a() const { return a_; }
    std::uint64_t q() const { return q_; }
    bool char2() const { return p_ == 2; }

    /// Defining polynomial, little-endian coefficients, length a+1, monic.
    const std::vector<int>& poly() const { return poly_; }

    Elt zero() const { return 0; }
    Elt one() const { return 1; }
    /// A fixed primitive element: x for a > 1, the table root for a == 1.
    Elt gen() const { return gen_; }

    Elt add(Elt x, Elt y) const {
        if (p_ == 2) return x ^ y;
        return add_table_.empty() ? add_slow(x, y) : add_table_[x * q_ + y];
    }
    Elt neg(Elt x) const {
        if (p_ == 2) return x;
        return neg_table_[x];
    }
    Elt sub(Elt x, Elt y) const { return add(x, neg(y)); }

    Elt mul(Elt x, Elt y) const {
        if (x == 0 || y == 0) return 0;
        std::uint64_t s = static_cast<std::uint64_t>(log_[x]) + log_[y];
        if (s >= q_ - 1) s -= q_ - 1;
        return exp_[s];
    }

    /// Multiplicative inverse; inverting zero is a domain error.
    Elt inv(Elt x) const {
        if (x == 0) throw domain_error("field inverse of zero");
        return exp_[(q_ - 1 - log_[x]) % (q_ - 1)];
    }

    Elt pow(Elt x, long long e) const;

    /// x -> x^p.
    Elt frobenius(Elt x) const { return frob_[x]; }
    /// x -> x^(p^k).
    Elt frobenius_iter(Elt x, int k) const;

    /// Log with respect to the primitive element; x must be nonzero.
    std::uint32_t log(Elt x) const {
        if (x == 0) throw domain_error("field log of zero");
        return log_[x];
    }
    Elt exp(std::uint64_t e) const { return exp_[e % (q_ - 1)]; }

    /// Polynomial-basis rendering in the generator symbol "x", e.g. "x^2+x+1".
    std::string to_string(Elt x) const;

    /// Number of bits needed to store one element code.
    int bits() const { return bits_; }

    /// Look up the table polynomial for (p, a) without constructing the field.
    static std::vector<int> table_poly(int p, int a);

private:
    Field(int p, int a);
    Elt add_slow(Elt x, Elt y) const;
    Elt mul_slow(Elt x, Elt y) const; // shift-add with reduction; used to build tables

    int p_ = 0, a_ = 0;
    std::uint64_t q_ = 0;
    int bits_ = 0;
    Elt gen_ = 0;
    std::vector<int> poly_;
    std::vector<Elt> exp_;          // exp_[k] = x^k, k in [0, q-1)
    std::vector<std::uint32_t> log_; // log_[e], e nonzero
    std::vector<Elt> frob_;
    std::vector<Elt> neg_table_;
    std::vector<Elt> add_table_;    // q*q when q small and p odd
    std::vector<std::uint64_t> ppow_; // powers of p for digit arithmetic
};

} // namespace invkit
