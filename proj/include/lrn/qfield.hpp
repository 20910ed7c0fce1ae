#pragma once

#include "lrn/core.hpp"

#include <string>
#include <vector>

namespace lrn::qfield {

/// alpha = (U + V sqrt(-d)) / 2 in the ring of integers of Q(sqrt(-d)).
/// Coordinates are always stored doubled; when d != 3 (mod 4) both must be
/// even. d need not be squarefree (orders of the form Z[(1 + sqrt(-d))/2]
/// for d = 3 mod 4 behave the same way).
class QuadInt {
public:
    /// Throws std::invalid_argument unless the half-coordinate invariants hold.
    static QuadInt from_half(unsigned long d, Int U, Int V);
    /// alpha = u + v sqrt(-d).
    static QuadInt from_integral(unsigned long d, const Int& u, const Int& v);

    unsigned long d() const { return d_; }
    const Int& U() const { return U_; }
    const Int& V() const { return V_; }
    /// True when the coordinates are genuinely halves (U, V odd).
    bool is_half() const { return mpz_odd_p(U_.get_mpz_t()) != 0; }

    std::string to_string() const;

    friend bool operator==(const QuadInt& a, const QuadInt& b)
    {
        return a.d_ == b.d_ && a.U_ == b.U_ && a.V_ == b.V_;
    }

private:
    QuadInt(unsigned long d, Int U, Int V) : d_(d), U_(std::move(U)), V_(std::move(V)) {}

    unsigned long d_;
    Int U_;
    Int V_;
};

/// Mixed-d operands throw std::invalid_argument.
QuadInt quad_mul(const QuadInt& a, const QuadInt& b);
QuadInt quad_pow(const QuadInt& a, unsigned long p);
QuadInt quad_conj(const QuadInt& a);
Int quad_norm(const QuadInt& a);
inline Int quad_trace(const QuadInt& a) { return a.U(); }

inline QuadInt operator*(const QuadInt& a, const QuadInt& b) { return quad_mul(a, b); }

struct Form {
    long a = 0;
    long b = 0;
    long c = 0;
    friend bool operator==(const Form&, const Form&) = default;
};

struct ClassNumberResult {
    unsigned long d = 0;
    long discriminant = 0;  // -d if d = 3 (mod 4), else -4d
    unsigned long h = 0;
    std::vector<Form> forms;  // the reduced primitive forms
};

long field_discriminant(unsigned long d);

/// Counts reduced primitive forms (a, b, c) of the field discriminant:
/// |b| <= a <= c, b >= 0 when |b| = a or a = c. d must be squarefree.
ClassNumberResult class_number(unsigned long d);

/// 4 for d = 1, 6 for d = 3, otherwise 2.
unsigned unit_group_order(unsigned long d);

/// True iff the unit group order is 2 or 4, hence coprime to every p >= 5.
bool descent_units_check(unsigned long d);

}  // namespace lrn::qfield
