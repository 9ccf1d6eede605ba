#include <doctest.h>

#include <map>
#include <vector>

#include "clc/field.hpp"
#include "clc/rng.hpp"

using namespace clc;

namespace {

// independent digit-vector arithmetic used as the oracle for the table paths
std::vector<int> digits(const FieldCtx& F, uint32_t a) { return F.coeffs(a); }

uint32_t oracle_add(const FieldCtx& F, uint32_t a, uint32_t b) {
    int p = F.characteristic();
    auto da = digits(F, a), db = digits(F, b);
    std::vector<int> r(da.size());
    for (size_t i = 0; i < da.size(); ++i) r[i] = (da[i] + db[i]) % p;
    return F.from_coeffs(r);
}

uint32_t oracle_mul(const FieldCtx& F, uint32_t a, uint32_t b) {
    int p = F.characteristic();
    int m = F.degree();
    auto da = digits(F, a), db = digits(F, b);
    std::vector<int> prod(2 * m, 0);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % p;
    const auto& mod = F.modulus();
    for (int d = 2 * m - 1; d >= m; --d) {
        int c = prod[d];
        if (c == 0) continue;
        prod[d] = 0;
        for (int i = 0; i < m; ++i) {
            int& t = prod[d - m + i];
            t = (t - c * mod[i]) % p;
            if (t < 0) t += p;
        }
    }
    prod.resize(m);
    return F.from_coeffs(prod);
}

}  // namespace

TEST_SUITE("field") {
    TEST_CASE("construction picks the canonical modulus") {
        Field f2 = make_field(2, 1);
        CHECK(f2->size() == 2);
        CHECK(f2->modulus() == std::vector<int>{0, 1});  // modulus x

        Field f8 = make_field(2, 3, Tower{1, 3});
        CHECK(f8->size() == 8);
        CHECK(f8->modulus().size() == 4);
        CHECK(f8->modulus()[3] == 1);
        // x^3 + x + 1 is the smallest irreducible cubic over F_2
        CHECK(f8->modulus() == std::vector<int>{1, 1, 0, 1});

        Field f27 = make_field(3, 3, Tower{1, 3});
        CHECK(f27->size() == 27);
    }

    TEST_CASE("construction errors") {
        CHECK_THROWS_AS(make_field(4, 2), NonPrimeCharacteristic);
        CHECK_THROWS_AS(make_field(2, 6, Tower{2, 2}), TowerMismatch);
        CHECK_THROWS_AS(make_field(2, 30), FieldTooLarge);
        CHECK_THROWS_AS(make_field_with_modulus(2, 2, {1, 1}), BadSpec);      // wrong degree
        CHECK_THROWS_AS(make_field_with_modulus(2, 2, {0, 0, 1}), BadSpec);   // x^2 reducible
    }

    TEST_CASE("table arithmetic matches digit-vector arithmetic exhaustively") {
        for (Field f : {make_field(2, 3), make_field(3, 3), make_field(7, 2)}) {
            uint64_t q = f->size();
            for (uint32_t a = 0; a < q; ++a)
                for (uint32_t b = 0; b < q; ++b) {
                    CHECK(f->add(a, b) == oracle_add(*f, a, b));
                    CHECK(f->mul(a, b) == oracle_mul(*f, a, b));
                }
        }
    }

    TEST_CASE("field axioms on random triples") {
        Field f = make_field(5, 4);  // F_625
        uint64_t q = f->size();
        Rng rng(1);
        for (int t = 0; t < 1200; ++t) {
            uint32_t a = static_cast<uint32_t>(rng.below(q));
            uint32_t b = static_cast<uint32_t>(rng.below(q));
            uint32_t c = static_cast<uint32_t>(rng.below(q));
            CHECK(f->add(a, b) == f->add(b, a));
            CHECK(f->mul(a, b) == f->mul(b, a));
            CHECK(f->add(f->add(a, b), c) == f->add(a, f->add(b, c)));
            CHECK(f->mul(f->mul(a, b), c) == f->mul(a, f->mul(b, c)));
            CHECK(f->mul(a, f->add(b, c)) == f->add(f->mul(a, b), f->mul(a, c)));
            CHECK(f->add(a, f->neg(a)) == 0);
            if (a != 0) CHECK(f->mul(a, f->inv(a)) == 1);
            CHECK(f->add(a, 0) == a);
            CHECK(f->mul(a, 1) == a);
            CHECK(f->sub(a, b) == f->add(a, f->neg(b)));
        }
    }

    TEST_CASE("frobenius fixes the field and is additive") {
        Field f8 = make_field(2, 3);
        for (uint32_t a = 0; a < 8; ++a) CHECK(f8->pow(a, 8) == a);

        Field f = make_field(3, 4);
        Rng rng(2);
        for (int t = 0; t < 500; ++t) {
            uint32_t a = static_cast<uint32_t>(rng.below(f->size()));
            uint32_t b = static_cast<uint32_t>(rng.below(f->size()));
            CHECK(f->pow(f->add(a, b), 3) == f->add(f->pow(a, 3), f->pow(b, 3)));
        }
    }

    TEST_CASE("pow conventions and inverse errors") {
        Field f = make_field(3, 2);
        CHECK(f->pow(0, 0) == 1);
        CHECK(f->pow(0, 5) == 0);
        CHECK(f->pow(1, 123456789ULL) == 1);
        CHECK_THROWS_AS(f->inv(0), DivisionByZero);
        // exponents up to p^{2m}: 81 = 1 mod 8, so a^81 = a for a != 0
        for (uint32_t a = 1; a < 9; ++a) CHECK(f->pow(a, 81) == a);
    }

    TEST_CASE("relative trace and norm land in the subfield") {
        Field f8 = make_field(2, 3, Tower{1, 3});
        CHECK(f8->rel_trace(0) == 0);
        CHECK(f8->rel_norm(1) == 1);

        int trace_zero = 0;
        for (uint32_t b = 0; b < 8; ++b) {
            uint32_t t = f8->rel_trace(b);
            CHECK(f8->pow(t, 2) == t);  // t in F_2
            if (t == 0) ++trace_zero;
            if (b != 0) CHECK(f8->rel_norm(b) == 1);  // a^7 = 1 in F_8
        }
        CHECK(trace_zero == 4);  // q^{r-1}

        Field f27 = make_field(3, 3, Tower{1, 3});
        Rng rng(3);
        for (int t = 0; t < 300; ++t) {
            uint32_t a = static_cast<uint32_t>(rng.below(27));
            uint32_t b = static_cast<uint32_t>(rng.below(27));
            uint32_t ta = f27->rel_trace(a);
            uint32_t na = f27->rel_norm(a);
            CHECK(f27->pow(ta, 3) == ta);
            CHECK(f27->pow(na, 3) == na);
            CHECK(f27->rel_norm(f27->mul(a, b)) == f27->mul(na, f27->rel_norm(b)));
            CHECK(f27->rel_trace(f27->add(a, b)) == f27->add(ta, f27->rel_trace(b)));
        }

        Field plain = make_field(2, 3);
        CHECK_THROWS_AS(plain->rel_trace(1), NoTowerDeclared);
    }

    TEST_CASE("fiber counts partition the field") {
        Field f8 = make_field(2, 3, Tower{1, 3});

        // independent enumeration oracle
        std::map<std::pair<uint32_t, uint32_t>, uint64_t> oracle;
        for (uint32_t g = 0; g < 8; ++g) {
            uint32_t tr = f8->add(f8->add(g, f8->pow(g, 2)), f8->pow(g, 4));
            uint32_t nm = f8->pow(g, 7);
            ++oracle[{tr, nm}];
        }
        CHECK(f8->fiber_count(1, 1) == oracle[{1, 1}]);
        CHECK(f8->fiber_count(0, 1) == oracle[{0, 1}]);

        // only zero has norm zero
        CHECK(f8->fiber_count(0, 0) == 1);
        CHECK(f8->fiber_count(1, 0) == 0);

        uint64_t total = 0;
        for (uint32_t a = 0; a < 2; ++a)
            for (uint32_t b = 0; b < 2; ++b) total += f8->fiber_count(a, b);
        CHECK(total == 8);

        Field f27 = make_field(3, 3, Tower{1, 3});
        uint64_t total27 = 0;
        for (uint32_t a = 0; a < 3; ++a)
            for (uint32_t b = 0; b < 3; ++b) total27 += f27->fiber_count(a, b);
        CHECK(total27 == 27);

        CHECK_THROWS_AS(f27->fiber_count(4, 0), ArgNotInSubfield);
    }

    TEST_CASE("fiber counts obey the prescribed-trace-and-norm bound") {
        // q = 5, r = 3: |N(a,b) - (q^{r-1}-1)/(q-1)| <= (r-1) q^{(r-2)/2}
        Field f = make_field(5, 3, Tower{1, 3});
        int64_t center = (25 - 1) / 4;       // 6
        int64_t bound_sq = 4 * 5;            // ((r-1) q^{1/2})^2 = 20
        for (uint32_t a = 1; a < 5; ++a)
            for (uint32_t b = 1; b < 5; ++b) {
                int64_t n = static_cast<int64_t>(f->fiber_count(a, b));
                CHECK((n - center) * (n - center) <= bound_sq);
            }
    }

    TEST_CASE("FElem wrapper and context mismatch") {
        Field f1 = make_field(2, 3);
        Field f2 = make_field(2, 3);
        FElem a(f1, 3), b(f1, 5), c(f2, 1);
        CHECK((a + b).value() == f1->add(3, 5));
        CHECK((a * b).value() == f1->mul(3, 5));
        CHECK((a - a).is_zero());
        CHECK((a / a).value() == 1);
        CHECK(a.pow(8) == a);
        CHECK_THROWS_AS(a + c, ContextMismatch);
    }
}
