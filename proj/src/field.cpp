#include "clc/field.hpp"

#include <algorithm>
#include <sstream>

namespace clc {
namespace {

bool is_prime(int n) {
    if (n < 2) return false;
    for (int d = 2; static_cast<long long>(d) * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

// Dense polynomial helpers over F_p with int coefficients, used only during
// construction (modulus search, generator search, table building).
using IPoly = std::vector<int>;

int ideg(const IPoly& f) {
    int d = static_cast<int>(f.size()) - 1;
    while (d >= 0 && f[d] == 0) --d;
    return d;
}

IPoly imul(const IPoly& a, const IPoly& b, int p) {
    int da = ideg(a), db = ideg(b);
    if (da < 0 || db < 0) return {};
    IPoly r(da + db + 1, 0);
    for (int i = 0; i <= da; ++i) {
        if (a[i] == 0) continue;
        for (int j = 0; j <= db; ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
    }
    return r;
}

void imod(IPoly& f, const IPoly& g, int p) {
    int dg = ideg(g);
    // g monic by construction here
    for (int d = ideg(f); d >= dg; d = ideg(f)) {
        int c = f[d];
        if (c != 0) {
            for (int i = 0; i <= dg; ++i) {
                int& t = f[d - dg + i];
                t = (t - c * g[i]) % p;
                if (t < 0) t += p;
            }
        }
        f.resize(d);
    }
}

IPoly ipowmod_x(uint64_t e, const IPoly& g, int p) {
    // x^e mod g, binary exponentiation
    IPoly result{1};
    IPoly base{0, 1};
    imod(base, g, p);
    while (e) {
        if (e & 1) {
            result = imul(result, base, p);
            imod(result, g, p);
        }
        e >>= 1;
        if (e) {
            base = imul(base, base, p);
            imod(base, g, p);
        }
    }
    return result;
}

IPoly igcd(IPoly a, IPoly b, int p) {
    auto inv_mod_p = [p](int c) {
        for (int x = 1; x < p; ++x)
            if ((c * x) % p == 1) return x;
        return 0;
    };
    while (ideg(b) >= 0) {
        // reduce a mod b (b need not be monic)
        int db = ideg(b);
        int li = inv_mod_p(b[db]);
        for (int d = ideg(a); d >= db; d = ideg(a)) {
            int c = (a[d] * li) % p;
            if (c != 0) {
                for (int i = 0; i <= db; ++i) {
                    int& t = a[d - db + i];
                    t = (t - c * b[i]) % p;
                    if (t < 0) t += p;
                }
            }
            a.resize(d);
        }
        std::swap(a, b);
    }
    return a;
}

// The root-count based irreducibility test: f monic of degree m is irreducible
// iff it shares no factor with x^{p^i} - x for any i <= m/2.
bool is_irreducible(const IPoly& f, int p) {
    int m = ideg(f);
    if (m <= 0) return false;
    if (m == 1) return true;
    for (int i = 1; i <= m / 2; ++i) {
        uint64_t e = 1;
        for (int k = 0; k < i; ++k) e *= static_cast<uint64_t>(p);
        IPoly xq = ipowmod_x(e, f, p);  // x^{p^i} mod f
        // xq - x
        if (xq.size() < 2) xq.resize(2, 0);
        xq[1] = (xq[1] - 1 + p) % p;
        IPoly g = igcd(f, xq, p);
        if (ideg(g) > 0) return false;
    }
    return true;
}

IPoly find_canonical_modulus(int p, int m) {
    // Scan constant-through-(m-1) coefficient vectors in base-p integer order;
    // the first irreducible monic candidate is the canonical modulus.
    uint64_t count = 1;
    for (int i = 0; i < m; ++i) count *= static_cast<uint64_t>(p);
    for (uint64_t c = 0; c < count; ++c) {
        IPoly f(m + 1, 0);
        uint64_t t = c;
        for (int i = 0; i < m; ++i) {
            f[i] = static_cast<int>(t % p);
            t /= p;
        }
        f[m] = 1;
        if (is_irreducible(f, p)) return f;
    }
    throw NonPrimeCharacteristic("no irreducible modulus found");  // unreachable for prime p
}

}  // namespace

uint64_t FieldCtx::subfield_size() const {
    if (!tower_) throw NoTowerDeclared("field has no subfield tower");
    uint64_t q = 1;
    for (int i = 0; i < tower_->s; ++i) q *= static_cast<uint64_t>(p_);
    return q;
}

int FieldCtx::tower_r() const {
    if (!tower_) throw NoTowerDeclared("field has no subfield tower");
    return tower_->r;
}

std::vector<int> FieldCtx::coeffs(uint32_t a) const {
    std::vector<int> c(m_);
    for (int i = 0; i < m_; ++i) {
        c[i] = static_cast<int>(a % p_);
        a /= static_cast<uint32_t>(p_);
    }
    return c;
}

uint32_t FieldCtx::from_coeffs(const std::vector<int>& c) const {
    uint64_t v = 0;
    for (int i = m_ - 1; i >= 0; --i) {
        int d = i < static_cast<int>(c.size()) ? c[i] : 0;
        d %= p_;
        if (d < 0) d += p_;
        v = v * p_ + static_cast<uint64_t>(d);
    }
    return static_cast<uint32_t>(v);
}

uint32_t FieldCtx::from_residue(int64_t c) const {
    int64_t r = c % p_;
    if (r < 0) r += p_;
    return static_cast<uint32_t>(r);
}

uint32_t FieldCtx::add(uint32_t a, uint32_t b) const {
    if (p_ == 2) return a ^ b;
    if (a == 0) return b;
    if (b == 0) return a;
    uint64_t za = log_[a], zb = log_[b];
    if (za > zb) std::swap(za, zb);
    uint32_t z = zech_[zb - za];
    if (z == kZechZero) return 0;
    return exp_[za + z];
}

uint32_t FieldCtx::neg(uint32_t a) const {
    if (p_ == 2 || a == 0) return a;
    return exp_[log_[a] + half_];
}

uint32_t FieldCtx::sub(uint32_t a, uint32_t b) const { return add(a, neg(b)); }

uint32_t FieldCtx::mul(uint32_t a, uint32_t b) const {
    if (a == 0 || b == 0) return 0;
    return exp_[static_cast<uint64_t>(log_[a]) + log_[b]];
}

uint32_t FieldCtx::inv(uint32_t a) const {
    if (a == 0) throw DivisionByZero("inverse of zero");
    return exp_[group_ - log_[a]];
}

uint32_t FieldCtx::pow(uint32_t a, uint64_t e) const {
    if (a == 0) return e == 0 ? 1u : 0u;
    uint64_t z = (static_cast<uint64_t>(log_[a]) * (e % group_)) % group_;
    return exp_[z];
}

uint32_t FieldCtx::rel_trace(uint32_t a) const {
    uint64_t q = subfield_size();
    uint32_t acc = 0, x = a;
    for (int i = 0; i < tower_->r; ++i) {
        acc = add(acc, x);
        x = pow(x, q);
    }
    return acc;
}

uint32_t FieldCtx::rel_norm(uint32_t a) const {
    uint64_t q = subfield_size();
    return pow(a, (q_ - 1) / (q - 1));
}

bool FieldCtx::in_subfield(uint32_t a) const { return pow(a, subfield_size()) == a; }

uint64_t FieldCtx::fiber_count(uint32_t trace_val, uint32_t norm_val) const {
    if (!in_subfield(trace_val)) throw ArgNotInSubfield("trace value not in subfield");
    if (!in_subfield(norm_val)) throw ArgNotInSubfield("norm value not in subfield");
    uint64_t n = 0;
    for (uint64_t g = 0; g < q_; ++g) {
        uint32_t x = static_cast<uint32_t>(g);
        if (rel_trace(x) == trace_val && rel_norm(x) == norm_val) ++n;
    }
    return n;
}

std::string FieldCtx::describe() const {
    std::ostringstream os;
    os << "F_" << q_ << " = F_" << p_ << "[x]/(";
    bool first = true;
    for (int i = m_; i >= 0; --i) {
        if (modulus_[i] == 0) continue;
        if (!first) os << " + ";
        first = false;
        if (i == 0 || modulus_[i] != 1) os << modulus_[i];
        if (i > 0) os << "x";
        if (i > 1) os << "^" << i;
    }
    os << ")";
    if (tower_) os << ", tower q=" << subfield_size() << " r=" << tower_->r;
    return os.str();
}

void FieldCtx::build_tables() {
    group_ = q_ - 1;

    // Multiplication on coefficient vectors, used to bootstrap the tables.
    auto raw_mul = [this](uint32_t a, uint32_t b) -> uint32_t {
        IPoly pa = [this, a]() {
            IPoly c(m_);
            uint32_t t = a;
            for (int i = 0; i < m_; ++i) {
                c[i] = static_cast<int>(t % p_);
                t /= static_cast<uint32_t>(p_);
            }
            return c;
        }();
        IPoly pb = [this, b]() {
            IPoly c(m_);
            uint32_t t = b;
            for (int i = 0; i < m_; ++i) {
                c[i] = static_cast<int>(t % p_);
                t /= static_cast<uint32_t>(p_);
            }
            return c;
        }();
        IPoly r = imul(pa, pb, p_);
        imod(r, modulus_, p_);
        uint64_t v = 0;
        for (int i = m_ - 1; i >= 0; --i)
            v = v * p_ + static_cast<uint64_t>(i < static_cast<int>(r.size()) ? r[i] : 0);
        return static_cast<uint32_t>(v);
    };
    auto raw_pow = [&raw_mul](uint32_t a, uint64_t e) {
        uint32_t r = 1, base = a;
        while (e) {
            if (e & 1) r = raw_mul(r, base);
            e >>= 1;
            if (e) base = raw_mul(base, base);
        }
        return r;
    };

    // Find a generator of the multiplicative group: smallest element in
    // canonical order whose order is q-1.
    std::vector<uint64_t> prime_factors;
    {
        uint64_t n = group_;
        for (uint64_t d = 2; d * d <= n; ++d) {
            if (n % d == 0) {
                prime_factors.push_back(d);
                while (n % d == 0) n /= d;
            }
        }
        if (n > 1) prime_factors.push_back(n);
    }
    uint32_t gen = 1;
    if (group_ > 1) {
        for (uint32_t cand = 2; cand < q_; ++cand) {
            bool ok = true;
            for (uint64_t f : prime_factors) {
                if (raw_pow(cand, group_ / f) == 1) {
                    ok = false;
                    break;
                }
            }
            if (ok) {
                gen = cand;
                break;
            }
        }
    }

    exp_.assign(2 * group_, 1);
    log_.assign(q_, 0);
    uint32_t x = 1;
    for (uint64_t i = 0; i < group_; ++i) {
        exp_[i] = x;
        exp_[i + group_] = x;
        log_[x] = static_cast<uint32_t>(i);
        x = raw_mul(x, gen);
    }

    if (p_ > 2) {
        half_ = group_ / 2;  // g^{(q-1)/2} = -1 for odd characteristic
        // Zech logarithms: zech_[k] = log(1 + g^k), addition done in coefficients.
        zech_.assign(group_, kZechZero);
        for (uint64_t k = 0; k < group_; ++k) {
            uint32_t gk = exp_[k];
            // 1 + gk on coefficient vectors: only the constant digit changes
            uint32_t s = gk;
            uint32_t c0 = gk % static_cast<uint32_t>(p_);
            s = s - c0 + (c0 + 1) % static_cast<uint32_t>(p_);
            if (s != 0) zech_[k] = log_[s];
        }
    }
}

Field FieldCtx::create(int p, int m, std::vector<int> modulus, std::optional<Tower> tower) {
    if (!is_prime(p)) throw NonPrimeCharacteristic("p = " + std::to_string(p) + " is not prime");
    if (m < 1) throw BadSpec("extension degree must be >= 1");
    if (tower && static_cast<long long>(tower->s) * tower->r != m)
        throw TowerMismatch("tower (" + std::to_string(tower->s) + "," + std::to_string(tower->r) +
                            ") does not match degree " + std::to_string(m));
    uint64_t q = 1;
    for (int i = 0; i < m; ++i) {
        q *= static_cast<uint64_t>(p);
        if (q > FieldCtx::kMaxSize)
            throw FieldTooLarge("p^m exceeds the supported field size 2^22");
    }

    if (modulus.empty()) {
        modulus = find_canonical_modulus(p, m);
    } else {
        for (int& c : modulus) {
            c %= p;
            if (c < 0) c += p;
        }
        if (ideg(modulus) != m || modulus[m] != 1)
            throw BadSpec("modulus must be monic of degree m");
        if (!is_irreducible(modulus, p)) throw BadSpec("modulus is not irreducible over F_p");
    }

    auto ctx = std::shared_ptr<FieldCtx>(new FieldCtx());
    ctx->p_ = p;
    ctx->m_ = m;
    ctx->q_ = q;
    ctx->modulus_ = std::move(modulus);
    ctx->tower_ = tower;
    ctx->build_tables();
    return ctx;
}

Field make_field(int p, int m, std::optional<Tower> tower) {
    return FieldCtx::create(p, m, {}, tower);
}

Field make_field_with_modulus(int p, int m, std::vector<int> modulus, std::optional<Tower> tower) {
    return FieldCtx::create(p, m, std::move(modulus), tower);
}

}  // namespace clc
