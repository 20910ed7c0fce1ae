#include "lrn/qfield.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace lrn::qfield {

namespace {

void require_same_field(const QuadInt& a, const QuadInt& b)
{
    if (a.d() != b.d())
        throw std::invalid_argument("QuadInt operands from different fields");
}

Int exact_half(const Int& v)
{
    if (mpz_odd_p(v.get_mpz_t()))
        throw std::logic_error("QuadInt arithmetic left the ring");
    return v / 2;
}

}  // namespace

QuadInt QuadInt::from_half(unsigned long d, Int U, Int V)
{
    if (d == 0)
        throw std::invalid_argument("QuadInt: d must be positive");
    const bool u_odd = mpz_odd_p(U.get_mpz_t()) != 0;
    const bool v_odd = mpz_odd_p(V.get_mpz_t()) != 0;
    if (u_odd != v_odd)
        throw std::invalid_argument("QuadInt: U and V must have equal parity");
    if (u_odd && d % 4 != 3)
        throw std::invalid_argument("QuadInt: half coordinates need d = 3 (mod 4)");
    return QuadInt(d, std::move(U), std::move(V));
}

QuadInt QuadInt::from_integral(unsigned long d, const Int& u, const Int& v)
{
    return from_half(d, 2 * u, 2 * v);
}

std::string QuadInt::to_string() const
{
    std::ostringstream os;
    if (is_half())
        os << '(' << U_ << (V_ < 0 ? " - " : " + ") << abs(V_) << "*sqrt(-" << d_ << "))/2";
    else
        os << U_ / 2 << (V_ < 0 ? " - " : " + ") << abs(V_) / 2 << "*sqrt(-" << d_ << ')';
    return os.str();
}

QuadInt quad_mul(const QuadInt& a, const QuadInt& b)
{
    require_same_field(a, b);
    Int u = a.U() * b.U() - Int(a.d()) * a.V() * b.V();
    Int v = a.U() * b.V() + b.U() * a.V();
    return QuadInt::from_half(a.d(), exact_half(u), exact_half(v));
}

QuadInt quad_pow(const QuadInt& a, unsigned long p)
{
    QuadInt result = QuadInt::from_half(a.d(), 2, 0);
    QuadInt base = a;
    while (p != 0) {
        if (p & 1)
            result = quad_mul(result, base);
        p >>= 1;
        if (p != 0)
            base = quad_mul(base, base);
    }
    return result;
}

QuadInt quad_conj(const QuadInt& a)
{
    return QuadInt::from_half(a.d(), a.U(), -a.V());
}

Int quad_norm(const QuadInt& a)
{
    Int n = a.U() * a.U() + Int(a.d()) * a.V() * a.V();
    return n / 4;
}

long field_discriminant(unsigned long d)
{
    return d % 4 == 3 ? -static_cast<long>(d) : -4 * static_cast<long>(d);
}

ClassNumberResult class_number(unsigned long d)
{
    if (!is_squarefree(d))
        throw std::invalid_argument("class_number: d must be squarefree");
    ClassNumberResult r;
    r.d = d;
    r.discriminant = field_discriminant(d);
    const long absd = -r.discriminant;
    for (long a = 1; 3 * a * a <= absd; ++a) {
        for (long b = -a; b <= a; ++b) {
            const long num = b * b + absd;
            if (num % (4 * a) != 0)
                continue;
            const long c = num / (4 * a);
            if (c < a)
                continue;
            if (b < 0 && (-b == a || a == c))
                continue;
            if (std::gcd(std::gcd(a, std::labs(b)), c) != 1)
                continue;
            r.forms.push_back({a, b, c});
        }
    }
    r.h = r.forms.size();
    return r;
}

unsigned unit_group_order(unsigned long d)
{
    if (d == 1)
        return 4;
    if (d == 3)
        return 6;
    return 2;
}

bool descent_units_check(unsigned long d)
{
    const unsigned w = unit_group_order(d);
    return w == 2 || w == 4;
}

}  // namespace lrn::qfield
