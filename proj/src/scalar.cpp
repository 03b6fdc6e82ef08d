#include "cellalg/scalar.hpp"

#include <utility>

namespace cellalg {

namespace {

// p < 2^31 keeps products of residues inside 64 bits.
constexpr std::uint64_t kMaxModulus = (std::uint64_t{1} << 31) - 1;

std::uint64_t mod_pow(std::uint64_t base, std::uint64_t exp, std::uint64_t p) {
    std::uint64_t acc = 1 % p;
    base %= p;
    while (exp > 0) {
        if (exp & 1) acc = acc * base % p;
        base = base * base % p;
        exp >>= 1;
    }
    return acc;
}

} // namespace

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (std::uint64_t d = 3; d * d <= n; d += 2) {
        if (n % d == 0) return false;
    }
    return true;
}

FieldId FieldId::prime_field(std::uint64_t p) {
    if (p > kMaxModulus)
        throw ValidationError("prime-field modulus too large: " + std::to_string(p));
    if (!is_prime(p))
        throw ValidationError("modulus is not prime: " + std::to_string(p));
    FieldId f;
    f.p = p;
    return f;
}

std::string FieldId::str() const {
    return is_rational() ? "Q" : "Fp:" + std::to_string(p);
}

FieldId FieldId::parse(const std::string& text) {
    if (text == "Q") return rationals();
    if (text.rfind("Fp:", 0) == 0) {
        const std::string digits = text.substr(3);
        if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos)
            throw ParseError("bad field spec: " + text);
        return prime_field(std::stoull(digits));
    }
    throw ParseError("bad field spec: " + text + " (expected Q or Fp:<p>)");
}

Scalar Scalar::of_int(long v, FieldId f) {
    if (f.is_rational()) return Scalar(mpq_class(v));
    long r = v % static_cast<long>(f.p);
    if (r < 0) r += static_cast<long>(f.p);
    return Scalar(Fp{static_cast<std::uint64_t>(r), f.p});
}

Scalar Scalar::rational(mpq_class q) {
    q.canonicalize();
    return Scalar(std::move(q));
}

Scalar Scalar::mod_p(std::uint64_t v, FieldId f) {
    if (f.is_rational()) throw DimensionMismatch("mod_p scalar requested over Q");
    return Scalar(Fp{v % f.p, f.p});
}

Scalar Scalar::parse(const std::string& text, FieldId f) {
    const auto bad = [&] { return ParseError("bad scalar \"" + text + "\" for field " + f.str()); };
    if (text.empty()) throw bad();
    if (f.is_rational()) {
        const std::string digits_ok = "0123456789/-";
        if (text.find_first_not_of(digits_ok) != std::string::npos) throw bad();
        mpq_class q;
        if (q.set_str(text, 10) != 0) throw bad();
        if (q.get_den() == 0) throw bad();
        q.canonicalize();
        return Scalar(std::move(q));
    }
    std::string head = text;
    const auto mod_pos = text.find(" mod ");
    if (mod_pos != std::string::npos) {
        const std::string mod_str = text.substr(mod_pos + 5);
        if (mod_str != std::to_string(f.p))
            throw ValidationError("scalar \"" + text + "\" has modulus " + mod_str +
                                  " but the field is " + f.str());
        head = text.substr(0, mod_pos);
    }
    if (head.empty()) throw bad();
    std::size_t start = head[0] == '-' ? 1 : 0;
    if (start == head.size() ||
        head.find_first_not_of("0123456789", start) != std::string::npos)
        throw bad();
    // Reduce through GMP so arbitrarily long digit strings are accepted.
    mpz_class z(head, 10);
    mpz_class r = z % static_cast<unsigned long>(f.p);
    if (r < 0) r += static_cast<unsigned long>(f.p);
    return Scalar(Fp{r.get_ui(), f.p});
}

FieldId Scalar::field() const {
    if (std::holds_alternative<mpq_class>(rep_)) return FieldId::rationals();
    FieldId f;
    f.p = std::get<Fp>(rep_).p;
    return f;
}

bool Scalar::is_zero() const {
    if (const auto* q = std::get_if<mpq_class>(&rep_)) return sgn(*q) == 0;
    return std::get<Fp>(rep_).v == 0;
}

bool Scalar::is_one() const {
    if (const auto* q = std::get_if<mpq_class>(&rep_)) return *q == 1;
    const auto& f = std::get<Fp>(rep_);
    return f.v == 1 % f.p;
}

bool Scalar::is_integer() const {
    if (const auto* q = std::get_if<mpq_class>(&rep_)) return q->get_den() == 1;
    return true;
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw Error("inverse of zero");
    if (const auto* q = std::get_if<mpq_class>(&rep_))
        return Scalar(mpq_class(1) / *q);
    const auto& f = std::get<Fp>(rep_);
    return Scalar(Fp{mod_pow(f.v, f.p - 2, f.p), f.p});
}

Scalar Scalar::pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    Scalar acc = one(field());
    Scalar base = *this;
    auto n = static_cast<unsigned long>(e);
    while (n > 0) {
        if (n & 1) acc *= base;
        base *= base;
        n >>= 1;
    }
    return acc;
}

std::string Scalar::str() const {
    if (const auto* q = std::get_if<mpq_class>(&rep_)) return q->get_str();
    const auto& f = std::get<Fp>(rep_);
    return std::to_string(f.v) + " mod " + std::to_string(f.p);
}

const mpq_class& Scalar::rat() const {
    if (const auto* q = std::get_if<mpq_class>(&rep_)) return *q;
    throw DimensionMismatch("rat() on a prime-field scalar");
}

std::uint64_t Scalar::residue() const {
    if (const auto* f = std::get_if<Fp>(&rep_)) return f->v;
    throw DimensionMismatch("residue() on a rational scalar");
}

void Scalar::require_same_field(const Scalar& a, const Scalar& b) {
    if (a.field() != b.field())
        throw DimensionMismatch("scalars from different fields: " + a.field().str() +
                                " vs " + b.field().str());
}

Scalar Scalar::operator-() const {
    if (const auto* q = std::get_if<mpq_class>(&rep_)) return Scalar(mpq_class(-*q));
    const auto& f = std::get<Fp>(rep_);
    return Scalar(Fp{f.v == 0 ? 0 : f.p - f.v, f.p});
}

Scalar& Scalar::operator+=(const Scalar& o) {
    require_same_field(*this, o);
    if (auto* q = std::get_if<mpq_class>(&rep_)) {
        *q += std::get<mpq_class>(o.rep_);
    } else {
        auto& f = std::get<Fp>(rep_);
        f.v = (f.v + std::get<Fp>(o.rep_).v) % f.p;
    }
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
    *this += -o;
    return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
    require_same_field(*this, o);
    if (auto* q = std::get_if<mpq_class>(&rep_)) {
        *q *= std::get<mpq_class>(o.rep_);
    } else {
        auto& f = std::get<Fp>(rep_);
        f.v = f.v * std::get<Fp>(o.rep_).v % f.p;
    }
    return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
    *this *= o.inverse();
    return *this;
}

bool operator==(const Scalar& a, const Scalar& b) {
    if (a.field() != b.field()) return false;
    if (const auto* q = std::get_if<mpq_class>(&a.rep_))
        return *q == std::get<mpq_class>(b.rep_);
    return std::get<Scalar::Fp>(a.rep_).v == std::get<Scalar::Fp>(b.rep_).v;
}

} // namespace cellalg
