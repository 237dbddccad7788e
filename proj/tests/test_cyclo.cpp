#include <random>

#include "doctest.h"
#include "skeinforge/cyclo.hpp"

using namespace skeinforge;

TEST_CASE("zeta powers reduce by zeta^8 = -1") {
    CycNum z = CycNum::zeta_pow(1);
    CHECK(z.pow(16) == CycNum(Int(1)));
    CHECK(z.pow(8) == CycNum(Int(-1)));
    CHECK(CycNum::zeta_pow(8) == CycNum(Int(-1)));
    CHECK(CycNum::zeta_pow(-1) == -CycNum::zeta_pow(7));
}

TEST_CASE("ring operations") {
    CycNum i = CycNum::i();
    CHECK(i * i == CycNum(Int(-1)));
    CHECK(CycNum::zeta_pow(1) * CycNum::zeta_pow(7) == CycNum(Int(-1)));
    // zeta - zeta^-1 = zeta + zeta^7
    CHECK(CycNum::zeta_pow(1) - CycNum::zeta_pow(-1) ==
          CycNum::zeta_pow(1) + CycNum::zeta_pow(7));
    CHECK(CycNum(Int(3)) + CycNum(Int(-3)) == CycNum(Int(0)));
}

TEST_CASE("normal form: denominators positive, content coprime") {
    CycInt two(Int(2));
    CycNum x(two, Int(-4));
    CHECK(x.den() == 2);
    CHECK(x.num()[0] == -1);
    CHECK(CycNum::half() + CycNum::half() == CycNum(Int(1)));
}

TEST_CASE("inverses") {
    CHECK(CycNum(Int(1)).inverse() == CycNum(Int(1)));
    CHECK(CycNum::i().inverse() == -CycNum::i());
    CycNum v = CycNum::zeta_pow(1) + CycNum::zeta_pow(7);
    CHECK(v.inverse() * v == CycNum(Int(1)));
    CHECK_THROWS_AS(CycNum(Int(0)).inverse(), EngineError);
    CHECK_THROWS_AS(CycNum(Int(0)).pow(-1), EngineError);
}

TEST_CASE("powers") {
    CHECK(CycNum::zeta_pow(1).pow(16) == CycNum(Int(1)));
    CHECK(CycNum::i().pow(-1) == -CycNum::i());
    CycNum neg_zeta = -CycNum::zeta_pow(1);
    CHECK(neg_zeta.pow(5) == -CycNum::zeta_pow(5));
}

TEST_CASE("1000 seeded inverse round trips are exact") {
    std::mt19937_64 rng(20260810);
    int done = 0;
    while (done < 1000) {
        CycInt n;
        bool zero = true;
        for (int i = 0; i < 8; ++i) {
            long long c = static_cast<long long>(rng() % 19) - 9;
            n[i] = c;
            if (c != 0) zero = false;
        }
        if (zero) continue;
        Int den = Int(1 + rng() % 7);
        CycNum x(n, den);
        CHECK(x.inverse() * x == CycNum(Int(1)));
        ++done;
    }
}

TEST_CASE("reduction idempotence: normal form is stable") {
    std::mt19937_64 rng(99);
    for (int t = 0; t < 100; ++t) {
        CycInt n;
        for (int i = 0; i < 8; ++i) n[i] = static_cast<long long>(rng() % 41) - 20;
        Int den = Int(1 + rng() % 12);
        CycNum x(n, den);
        CycNum y(x.num(), x.den());  // renormalizing changes nothing
        CHECK(x == y);
    }
}

TEST_CASE("rendering") {
    CHECK(CycNum(Int(1)).to_string() == "1");
    CHECK(CycNum(Int(0)).to_string() == "0");
    CHECK((CycNum(Int(1)) + CycNum::i()).to_string() == "1 + z^4");
    CHECK((CycNum(Int(2)) - CycNum::zeta_pow(2)).to_string() == "2 - z^2");
    CHECK(CycNum::half().to_string() == "(1) / 2");
    CHECK(CycNum::i().to_json() == "{\"num\":[0,0,0,0,1,0,0,0],\"den\":1}");
}
