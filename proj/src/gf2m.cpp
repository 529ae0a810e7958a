#include "psl2codes/gf2m.hpp"

#include <algorithm>
#include <bit>

#include "psl2codes/numtheory.hpp"

namespace psl2codes {

// ---------------------------------------------------------------------------
// BinaryPolynomial
// ---------------------------------------------------------------------------

void BinaryPolynomial::trim() {
    while (!words_.empty() && words_.back() == 0) words_.pop_back();
}

BinaryPolynomial BinaryPolynomial::from_bits(std::uint64_t coeffs) {
    BinaryPolynomial f;
    if (coeffs) f.words_.push_back(coeffs);
    return f;
}

BinaryPolynomial BinaryPolynomial::from_bitstring(std::string_view s) {
    BinaryPolynomial f;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] == '1') {
            f.set_coeff(i, true);
        } else if (s[i] != '0') {
            fail(errc::invalid_argument, "polynomial bit string must contain only 0 and 1");
        }
    }
    return f;
}

BinaryPolynomial BinaryPolynomial::x_pow(std::size_t k) {
    BinaryPolynomial f;
    f.set_coeff(k, true);
    return f;
}

BinaryPolynomial BinaryPolynomial::x_n_minus_1(std::uint32_t n) {
    BinaryPolynomial f;
    f.set_coeff(0, true);
    f.set_coeff(n, true);
    return f;
}

int BinaryPolynomial::degree() const {
    if (words_.empty()) return -1;
    return static_cast<int>(64 * (words_.size() - 1) + 63 - std::countl_zero(words_.back()));
}

bool BinaryPolynomial::coeff(std::size_t i) const {
    std::size_t w = i / 64;
    if (w >= words_.size()) return false;
    return (words_[w] >> (i % 64)) & 1;
}

void BinaryPolynomial::set_coeff(std::size_t i, bool v) {
    std::size_t w = i / 64;
    if (w >= words_.size()) {
        if (!v) return;
        words_.resize(w + 1, 0);
    }
    if (v) {
        words_[w] |= std::uint64_t(1) << (i % 64);
    } else {
        words_[w] &= ~(std::uint64_t(1) << (i % 64));
        trim();
    }
}

BinaryPolynomial BinaryPolynomial::operator+(const BinaryPolynomial& g) const {
    BinaryPolynomial r = *this;
    if (g.words_.size() > r.words_.size()) r.words_.resize(g.words_.size(), 0);
    for (std::size_t i = 0; i < g.words_.size(); ++i) r.words_[i] ^= g.words_[i];
    r.trim();
    return r;
}

BinaryPolynomial BinaryPolynomial::shifted(std::size_t k) const {
    if (is_zero()) return {};
    BinaryPolynomial r;
    std::size_t wk = k / 64, bk = k % 64;
    r.words_.assign(words_.size() + wk + 1, 0);
    for (std::size_t i = 0; i < words_.size(); ++i) {
        r.words_[i + wk] ^= words_[i] << bk;
        if (bk) r.words_[i + wk + 1] ^= words_[i] >> (64 - bk);
    }
    r.trim();
    return r;
}

BinaryPolynomial BinaryPolynomial::operator*(const BinaryPolynomial& g) const {
    BinaryPolynomial r;
    if (is_zero() || g.is_zero()) return r;
    r.words_.assign(words_.size() + g.words_.size(), 0);
    for (std::size_t w = 0; w < words_.size(); ++w) {
        std::uint64_t bits = words_[w];
        while (bits) {
            std::size_t b = static_cast<std::size_t>(std::countr_zero(bits));
            bits &= bits - 1;
            std::size_t k = 64 * w + b, wk = k / 64, bk = k % 64;
            for (std::size_t i = 0; i < g.words_.size(); ++i) {
                r.words_[i + wk] ^= g.words_[i] << bk;
                if (bk) r.words_[i + wk + 1] ^= g.words_[i] >> (64 - bk);
            }
        }
    }
    r.trim();
    return r;
}

std::pair<BinaryPolynomial, BinaryPolynomial> BinaryPolynomial::divmod(const BinaryPolynomial& g) const {
    if (g.is_zero()) fail(errc::invalid_argument, "polynomial division by zero");
    BinaryPolynomial q, r = *this;
    int dg = g.degree();
    while (!r.is_zero() && r.degree() >= dg) {
        std::size_t sh = static_cast<std::size_t>(r.degree() - dg);
        q.set_coeff(sh, true);
        r = r + g.shifted(sh);
    }
    return {q, r};
}

BinaryPolynomial BinaryPolynomial::gcd(BinaryPolynomial a, BinaryPolynomial b) {
    while (!b.is_zero()) {
        BinaryPolynomial r = a % b;
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

bool BinaryPolynomial::divides(const BinaryPolynomial& f) const {
    if (is_zero()) return f.is_zero();
    return (f % *this).is_zero();
}

std::string BinaryPolynomial::to_bitstring() const {
    int d = degree();
    std::string s;
    s.reserve(static_cast<std::size_t>(d + 1));
    for (int i = 0; i <= d; ++i) s.push_back(coeff(static_cast<std::size_t>(i)) ? '1' : '0');
    return s;
}

// ---------------------------------------------------------------------------
// FieldContext
// ---------------------------------------------------------------------------

namespace {

// Carry-less 64x64 multiply, result split (hi, lo). Degrees stay below 120
// here (m <= 60), so schoolbook over the set bits of b is plenty.
inline unsigned __int128 clmul(std::uint64_t a, std::uint64_t b) {
    unsigned __int128 acc = 0;
    while (b) {
        int k = std::countr_zero(b);
        b &= b - 1;
        acc ^= static_cast<unsigned __int128>(a) << k;
    }
    return acc;
}

inline std::uint64_t reduce(unsigned __int128 v, std::uint64_t modulus, int m) {
    for (int bit = 2 * m - 2; bit >= m; --bit) {
        if ((v >> bit) & 1) v ^= static_cast<unsigned __int128>(modulus) << (bit - m);
    }
    return static_cast<std::uint64_t>(v);
}

std::uint64_t mulmod_poly(std::uint64_t a, std::uint64_t b, std::uint64_t modulus, int m) {
    return reduce(clmul(a, b), modulus, m);
}

std::uint64_t powmod_poly(std::uint64_t a, std::uint64_t e, std::uint64_t modulus, int m) {
    std::uint64_t r = 1;
    while (e) {
        if (e & 1) r = mulmod_poly(r, a, modulus, m);
        a = mulmod_poly(a, a, modulus, m);
        e >>= 1;
    }
    return r;
}

// x^(2^k) mod f by repeated squaring of the residue.
std::uint64_t frobenius_power_of_x(std::uint64_t f, int m, int k) {
    std::uint64_t t = 2;
    for (int i = 0; i < k; ++i) t = mulmod_poly(t, t, f, m);
    return t;
}

std::uint64_t gcd_bits(std::uint64_t a, std::uint64_t b) {
    auto deg = [](std::uint64_t v) { return 63 - std::countl_zero(v); };
    while (b) {
        while (a && deg(a) >= deg(b)) a ^= b << (deg(a) - deg(b));
        std::swap(a, b);
    }
    return a;
}

// Rabin irreducibility test for degree-m f over GF(2).
bool is_irreducible(std::uint64_t f, int m) {
    if (frobenius_power_of_x(f, m, m) != 2) return false;
    for (const auto& [q, e] : factorize(static_cast<std::uint64_t>(m))) {
        (void)e;
        std::uint64_t t = frobenius_power_of_x(f, m, m / static_cast<int>(q));
        if (gcd_bits(t ^ 2, f) != 1) return false;
    }
    return true;
}

} // namespace

FieldContext FieldContext::build(std::uint32_t n) {
    if (n < 3 || !is_prime(n)) fail(errc::invalid_argument, "build_field: n must be an odd prime > 2");
    if (n > 61) fail(errc::cap_exceeded, "build_field: n exceeds the supported cap of 61");

    FieldContext ctx;
    ctx.n_ = n;
    ctx.m_ = static_cast<std::uint32_t>(multiplicative_order(2, n));
    ctx.order_ = (std::uint64_t(1) << ctx.m_) - 1;

    auto group_factors = factorize(ctx.order_);
    std::uint64_t lo = (std::uint64_t(1) << ctx.m_) | 1;
    std::uint64_t hi = std::uint64_t(1) << (ctx.m_ + 1);
    for (std::uint64_t cand = lo; cand < hi; cand += 2) {
        if (!is_irreducible(cand, static_cast<int>(ctx.m_))) continue;
        bool primitive = true;
        for (const auto& [p, e] : group_factors) {
            (void)e;
            if (powmod_poly(2, ctx.order_ / p, cand, static_cast<int>(ctx.m_)) == 1) {
                primitive = false;
                break;
            }
        }
        if (primitive) {
            ctx.modulus_ = cand;
            break;
        }
    }
    if (ctx.modulus_ == 0) fail(errc::internal, "build_field: no primitive irreducible modulus found");

    if (ctx.m_ <= 24) {
        // Log/antilog tables; alpha = x generates the multiplicative group.
        ctx.alog_.assign(ctx.order_, 0);
        ctx.log_.assign(std::size_t(1) << ctx.m_, 0);
        std::uint64_t t = 1;
        for (std::uint64_t k = 0; k < ctx.order_; ++k) {
            ctx.alog_[k] = static_cast<std::uint32_t>(t);
            ctx.log_[t] = static_cast<std::uint32_t>(k);
            t = mulmod_poly(t, 2, ctx.modulus_, static_cast<int>(ctx.m_));
        }
        if (t != 1) fail(errc::internal, "build_field: alpha order mismatch");
    }

    ctx.beta_ = {powmod_poly(2, ctx.order_ / n, ctx.modulus_, static_cast<int>(ctx.m_))};
    ctx.beta_pows_.resize(n);
    std::uint64_t b = 1;
    for (std::uint32_t k = 0; k < n; ++k) {
        ctx.beta_pows_[k] = b;
        b = mulmod_poly(b, ctx.beta_.bits, ctx.modulus_, static_cast<int>(ctx.m_));
    }
    if (b != 1) fail(errc::internal, "build_field: beta is not an n-th root of unity");
    return ctx;
}

std::uint64_t FieldContext::raw_mul(std::uint64_t a, std::uint64_t b) const {
    if (a == 0 || b == 0) return 0;
    if (!log_.empty()) {
        std::uint64_t k = log_[a] + std::uint64_t(log_[b]);
        if (k >= order_) k -= order_;
        return alog_[k];
    }
    return mulmod_poly(a, b, modulus_, static_cast<int>(m_));
}

FieldElement FieldContext::mul(FieldElement a, FieldElement b) const { return {raw_mul(a.bits, b.bits)}; }

FieldElement FieldContext::inv(FieldElement a) const {
    if (a.is_zero()) fail(errc::invalid_argument, "field inversion of zero");
    if (!log_.empty()) {
        std::uint64_t k = (order_ - log_[a.bits]) % order_;
        return {alog_[k]};
    }
    return pow(a, order_ - 1);
}

FieldElement FieldContext::pow(FieldElement a, std::uint64_t e) const {
    if (a.is_zero()) return {e == 0 ? std::uint64_t(1) : 0};
    e %= order_;
    std::uint64_t r = 1, base = a.bits;
    while (e) {
        if (e & 1) r = raw_mul(r, base);
        base = raw_mul(base, base);
        e >>= 1;
    }
    return {r};
}

FieldElement FieldContext::beta_pow(std::int64_t e) const {
    std::int64_t k = e % static_cast<std::int64_t>(n_);
    if (k < 0) k += n_;
    return {beta_pows_[static_cast<std::size_t>(k)]};
}

FieldElement FieldContext::eval(const BinaryPolynomial& f, FieldElement at) const {
    FieldElement acc{0};
    for (int i = f.degree(); i >= 0; --i) {
        acc = mul(acc, at);
        if (f.coeff(static_cast<std::size_t>(i))) acc.bits ^= 1;
    }
    return acc;
}

} // namespace psl2codes
