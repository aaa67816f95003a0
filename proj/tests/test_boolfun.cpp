#include <doctest.h>

#include <bit>
#include <random>

#include "test_util.hpp"

#include "orthoseq/boolfun.hpp"

using namespace orthoseq;

TEST_SUITE_BEGIN("boolfun");

namespace {

// literal double-loop oracle, independent of both walsh_at and the butterfly
int walsh_naive(const BooleanFunction& f, std::uint32_t omega) {
    int sum = 0;
    for (std::uint32_t x = 0; x < f.domain_size(); ++x) {
        int bit = (f.at(x) ? 1 : 0) ^ (std::popcount(omega & x) & 1);
        sum += bit ? -1 : 1;
    }
    return sum;
}

BooleanFunction random_function(int m, std::mt19937& rng) {
    BooleanFunction f(m);
    for (std::uint32_t j = 0; j < f.domain_size(); ++j)
        if (rng() & 1u) f.set(j, true);
    return f;
}

}  // namespace

TEST_CASE("sequence of the zero function and of x_m") {
    BooleanFunction zero5(5);
    CHECK(sequence_of(zero5).sign_string() == "++++++++++++++++++++++++++++++++");

    BooleanFunction xm = BooleanFunction::linear(2, 0b01);  // x_2 on m=2
    CHECK(sequence_of(xm).sign_string() == "+-+-");
}

TEST_CASE("sign string round trip") {
    Sequence s = Sequence::from_sign_string("++--++--+-+-+-+-++----+++--++--+");
    CHECK(s.variables() == 5);
    CHECK(s.sign_string() == "++--++--+-+-+-+-++----+++--++--+");
    CHECK(s.value_at(0) == 1);
    CHECK(s.value_at(2) == -1);
    CHECK_THROWS_AS(Sequence::from_sign_string("++*+"), ParseError);
    CHECK_THROWS_AS(Sequence::from_sign_string("+++"), ParseError);
}

TEST_CASE("walsh_at basics") {
    BooleanFunction zero(4);
    CHECK(walsh_at(zero, 0) == 16);
    for (std::uint32_t w = 1; w < 16; ++w) CHECK(walsh_at(zero, w) == 0);

    // linear omega0.x: spike of 2^m at omega0, zero elsewhere
    BooleanFunction lin = BooleanFunction::linear(5, 19);
    std::vector<std::int32_t> sp = walsh_spectrum(lin);
    for (std::uint32_t w = 0; w < 32; ++w) CHECK(sp[w] == (w == 19 ? 32 : 0));
}

TEST_CASE("fast spectrum equals the naive transforms") {
    std::mt19937 rng = seeded_rng(12345);
    for (int m = 2; m <= 6; ++m) {
        for (int rep = 0; rep < 4; ++rep) {
            BooleanFunction f = random_function(m, rng);
            std::vector<std::int32_t> sp = walsh_spectrum(f);
            for (std::uint32_t w = 0; w < f.domain_size(); ++w) {
                CHECK(sp[w] == walsh_at(f, w));
                CHECK(sp[w] == walsh_naive(f, w));
            }
        }
    }
}

TEST_CASE("Parseval holds exactly") {
    std::mt19937 rng = seeded_rng(99);
    for (int m : {3, 5, 8}) {
        for (int rep = 0; rep < 8; ++rep) {
            BooleanFunction f = random_function(m, rng);
            long long sum = 0;
            for (std::int32_t w : walsh_spectrum(f)) sum += static_cast<long long>(w) * w;
            CHECK(sum == (1ll << (2 * m)));
        }
    }
}

TEST_CASE("inner product: self, Hadamard rows, and the Lemma-1 identity") {
    for (int m : {3, 5}) {
        std::vector<Sequence> rows = hadamard_set(m);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            CHECK(inner_product(rows[i], rows[i]) == (1 << m));
            for (std::size_t j = i + 1; j < rows.size(); ++j)
                CHECK(inner_product(rows[i], rows[j]) == 0);
        }
    }
    std::mt19937 rng = seeded_rng(7);
    for (int rep = 0; rep < 32; ++rep) {
        BooleanFunction f = random_function(6, rng);
        BooleanFunction g = random_function(6, rng);
        CHECK(inner_product(sequence_of(f), sequence_of(g)) == walsh_at(f ^ g, 0));
    }
    Sequence a = sequence_of(BooleanFunction(3));
    Sequence b = sequence_of(BooleanFunction(4));
    CHECK_THROWS_AS(inner_product(a, b), LengthMismatch);
}

TEST_CASE("componentwise product is the sequence of the XOR") {
    std::mt19937 rng = seeded_rng(21);
    for (int m = 1; m <= 8; ++m) {
        BooleanFunction f = random_function(m, rng);
        BooleanFunction g = random_function(m, rng);
        CHECK(sequence_of(f).componentwise(sequence_of(g)) == sequence_of(f ^ g));
        // s * s = all ones
        Sequence self = sequence_of(f).componentwise(sequence_of(f));
        CHECK(self == sequence_of(BooleanFunction(m)));
    }
}

TEST_CASE("classification") {
    // smallest bent function x1x2
    BooleanFunction bent = BooleanFunction::from_anf(2, "x1*x2");
    SpectrumClass sc = classify(bent);
    CHECK(sc.kind == SpectrumKind::Bent);
    CHECK(sc.lambda == 1);
    CHECK_FALSE(sc.balanced);

    // linear on m=4: degenerate single spike, plateaued lambda = m
    SpectrumClass lin = classify(BooleanFunction::linear(4, 5));
    CHECK(lin.kind == SpectrumKind::Plateaued);
    CHECK(lin.lambda == 4);
    CHECK(lin.balanced);
    CHECK_FALSE(classify(BooleanFunction(4)).balanced);  // zero function

    BooleanFunction cubic = BooleanFunction::from_anf(3, "x1*x2*x3");
    CHECK(classify(cubic).kind == SpectrumKind::FiveValuedOrMore);
}

TEST_CASE("classification kind is invariant under adding a linear function") {
    std::mt19937 rng = seeded_rng(4242);
    for (int rep = 0; rep < 16; ++rep) {
        int m = 4 + static_cast<int>(rng() % 3);
        BooleanFunction f = random_function(m, rng);
        SpectrumKind base = classify(f).kind;
        BooleanFunction l = BooleanFunction::linear(m, rng() % (1u << m));
        CHECK(classify(f ^ l).kind == base);
    }
}

TEST_CASE("hadamard rows") {
    CHECK(hadamard_row(3, 0).sign_string() == "++++++++");
    // H_1 recursion base
    CHECK(hadamard_row(1, 0).sign_string() == "++");
    CHECK(hadamard_row(1, 1).sign_string() == "+-");
    // row j is the sequence of the linear function j
    for (std::uint32_t j = 0; j < 16; ++j)
        CHECK(hadamard_row(4, j) == sequence_of(BooleanFunction::linear(4, j)));
    CHECK_THROWS_AS(hadamard_row(3, 8), IndexOutOfRange);
    CHECK(hadamard_set(4).size() == 16);
}

TEST_CASE("hex truth table round trip") {
    std::mt19937 rng = seeded_rng(5150);
    for (int m : {2, 5, 7}) {
        BooleanFunction f = random_function(m, rng);
        CHECK(BooleanFunction::from_hex(m, f.to_hex()) == f);
    }
    CHECK(BooleanFunction::from_hex(2, "6") == BooleanFunction::linear(2, 3));  // x1+x2: 0110
    CHECK_THROWS_AS(BooleanFunction::from_hex(3, "zz"), ParseError);
    CHECK_THROWS_AS(BooleanFunction::from_hex(3, "123"), ParseError);
}

TEST_CASE("ANF parsing") {
    // x1*x2 + x3 on m=3: check every point directly
    BooleanFunction f = BooleanFunction::from_anf(3, "x1*x2 + x3");
    for (std::uint32_t j = 0; j < 8; ++j) {
        bool x1 = j & 4, x2 = j & 2, x3 = j & 1;
        CHECK(f.at(j) == ((x1 && x2) ^ x3));
    }
    CHECK(BooleanFunction::from_anf(2, "1 + x1 + x2 + x1x2") ==
          BooleanFunction::from_fn(2, [](std::uint32_t j) {
              int x1 = (j >> 1) & 1, x2 = j & 1;
              return (1 ^ x1 ^ x2 ^ (x1 & x2)) != 0;
          }));
    CHECK_THROWS_AS(BooleanFunction::from_anf(2, "x3"), ParseError);
    CHECK_THROWS_AS(BooleanFunction::from_anf(2, "y1"), ParseError);
}

TEST_SUITE_END();
