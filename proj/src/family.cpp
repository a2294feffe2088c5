#include "fqt/family.hpp"

#include "fqt/factorization.hpp"

namespace fqt {

ShortInterval::ShortInterval(Polynomial center, unsigned radius) : center_(std::move(center)), radius_(radius)
{
    if (center_.is_zero() || !center_.is_monic()) throw FamilyError("interval center must be monic");
    if (center_.deg() <= radius_) throw FamilyError("interval center must have degree > radius");
}

std::uint64_t ShortInterval::size() const
{
    const std::uint64_t q = center_.F().cardinality();
    std::uint64_t s = 1;
    for (unsigned i = 0; i <= radius_; ++i) {
        if (s > UINT64_MAX / q) throw FamilyError("interval size overflows 64 bits");
        s *= q;
    }
    return s;
}

Polynomial ShortInterval::member(std::span<const Code> A) const
{
    if (A.size() != radius_ + 1)
        throw FamilyError("tuple has " + std::to_string(A.size()) + " entries, expected " +
                          std::to_string(radius_ + 1));
    const Field& k = center_.F();
    std::vector<Code> c = center_.coeffs();
    for (std::size_t j = 0; j < A.size(); ++j) {
        if (!k.contains(A[j])) throw FamilyError("tuple entry outside the field");
        c[j] = k.add(c[j], A[j]);
    }
    return {center_.field(), std::move(c)};
}

namespace {

// Odometer over coordinates [0, fixed_from), A_0 fastest.
void odometer(std::vector<Code>& A, std::size_t free_count, Code q,
              const std::function<void(std::span<const Code>)>& visit)
{
    while (true) {
        visit(A);
        std::size_t j = 0;
        while (j < free_count) {
            if (++A[j] < q) break;
            A[j] = 0;
            ++j;
        }
        if (j == free_count) return;
    }
}

}  // namespace

void ShortInterval::for_each_tuple(const std::function<void(std::span<const Code>)>& visit) const
{
    std::vector<Code> A(radius_ + 1, 0);
    odometer(A, A.size(), center_.F().cardinality(), visit);
}

void ShortInterval::for_each_tuple_in_block(Code block, const std::function<void(std::span<const Code>)>& visit) const
{
    std::vector<Code> A(radius_ + 1, 0);
    A[radius_] = block;
    odometer(A, radius_, center_.F().cardinality(), visit);
}

std::vector<Polynomial> enumerate_interval(const ShortInterval& interval)
{
    std::vector<Polynomial> out;
    out.reserve(interval.size());
    interval.for_each_tuple([&](std::span<const Code> A) { out.push_back(interval.member(A)); });
    return out;
}

std::string label(Violation v)
{
    switch (v) {
    case Violation::f_zero: return "f_zero";
    case Violation::g_zero: return "g_zero";
    case Violation::not_coprime: return "not_coprime";
    case Violation::g_not_monic: return "g_not_monic";
    case Violation::deg_order: return "deg_order";
    case Violation::fg_square: return "fg_square";
    case Violation::p_degree: return "p_degree";
    case Violation::q_even: return "q_even";
    }
    return "unknown";
}

std::vector<Violation> check_admissible(const Polynomial& f, const Polynomial& g, const Polynomial& p, unsigned m)
{
    std::vector<Violation> out;
    if (f.is_zero()) out.push_back(Violation::f_zero);
    if (g.is_zero()) out.push_back(Violation::g_zero);
    if (!f.is_zero() && !g.is_zero()) {
        if (!gcd(f, g).is_one()) out.push_back(Violation::not_coprime);
        if (f.deg() >= g.deg()) out.push_back(Violation::deg_order);
        if (is_square(f * g, SquareMode::exact_square)) out.push_back(Violation::fg_square);
    }
    if (!g.is_zero() && !g.is_monic()) out.push_back(Violation::g_not_monic);
    // The interval also needs a monic center; a non-monic or zero p is
    // reported under p_degree together with deg p <= m.
    if (p.is_zero() || p.deg() <= m || !p.is_monic()) out.push_back(Violation::p_degree);
    if (!f.F().odd()) out.push_back(Violation::q_even);
    return out;
}

QuadraticFamily::QuadraticFamily(Polynomial f, Polynomial g, ShortInterval interval)
    : f_(std::move(f)), g_(std::move(g)), interval_(std::move(interval)), f_tilde_(f_), n_(0)
{
    f_.require_same_field(g_);
    f_.require_same_field(interval_.center());
    const auto violations = check_admissible(f_, g_, interval_.center(), interval_.radius());
    if (!violations.empty()) {
        std::string msg = "inadmissible family:";
        for (auto v : violations) msg += " " + label(v);
        throw FamilyError(msg);
    }
    const Polynomial& p = interval_.center();
    f_tilde_ = f_ + g_ * p * p;
    n_ = static_cast<unsigned>(g_.deg() + 2 * p.deg());
}

Polynomial QuadraticFamily::specialize(std::span<const Code> A) const
{
    const Polynomial h = interval_.member(A);
    return f_ + g_ * (h * h);
}

bool QuadraticFamily::non_associate(const QuadraticFamily& other) const
{
    return f_ * other.g_ != other.f_ * g_;
}

bool verify_discriminant_identity(const QuadraticFamily& family, std::span<const Code> partial)
{
    const unsigned m = family.radius();
    if (partial.size() != m)
        throw FamilyError("partial specialization has " + std::to_string(partial.size()) + " entries, expected " +
                          std::to_string(m));
    const FieldPtr& field = family.field();
    const Field& k = *field;
    std::vector<Code> l1_coeffs(m + 1, 0);
    for (unsigned j = 1; j <= m; ++j) l1_coeffs[j] = k.decode(partial[j - 1]);
    const Polynomial l1(field, std::move(l1_coeffs));
    const Polynomial& g = family.g();
    const Polynomial& p = family.center();

    const Polynomial A = g;
    const Polynomial B = (g * (l1 + p)).scalar_mul(k.from_int(2));
    const Polynomial C = family.shifted() + g * (l1 * l1 + (p * l1).scalar_mul(k.from_int(2)));
    const Polynomial lhs = B * B - (A * C).scalar_mul(k.from_int(4));
    const Polynomial rhs = (family.f() * g).scalar_mul(k.from_int(-4));
    return lhs == rhs;
}

}  // namespace fqt
