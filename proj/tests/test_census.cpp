#include <cstdio>
#include <filesystem>

#include "doctest.h"

#include "chio/census_oracle.hpp"
#include "chio/measures.hpp"

using namespace chio;

TEST_CASE("bit-level condensation agrees with the matrix version") {
    for (auto [s, t] : {std::pair{3, 3}, std::pair{3, 4}, std::pair{4, 3}}) {
        for (std::uint64_t code = 0; code < (std::uint64_t{1} << (s * t)); ++code) {
            std::uint32_t supp = 0, neg = 0;
            condense_code(s, t, code, supp, neg);
            CHECK(matrix_from_masks(s, t, supp, neg) == chio_condense(SignMatrix::from_code(s, t, code)));
            CHECK(rank_of_code(s, t, code) == rank_int(IntMatrix::from(SignMatrix::from_code(s, t, code))));
        }
    }
}

TEST_CASE("ternary codes round-trip") {
    for (std::uint64_t code = 0; code < pow3(4); ++code) {
        std::uint32_t supp = 0, neg = 0;
        ternary_decode(4, code, supp, neg);
        CHECK(ternary_code(4, supp, neg) == code);
        CHECK((neg & ~supp) == 0);
    }
    CHECK(pow3(5) == 243);
}

TEST_CASE("two-by-two census") {
    const RankCensus rc = rank_census(2, 2, 1);
    CHECK(rc.visited == 16);
    CHECK(rc.rank_sign[0] + rc.rank_sign[1] == 8);
    CHECK(rc.rank_condensate[0] == 8);
    CHECK(rc.lemma_holds());
    CHECK(rc.uniform_after_forgetting());
    CHECK(singular_count(2, 1).singular_sign == 8);
}

TEST_CASE("singular counts against direct determinants") {
    for (int n = 2; n <= 4; ++n) {
        std::uint64_t nonsingular = 0;
        for (std::uint64_t code = 0; code < (std::uint64_t{1} << (n * n)); ++code)
            nonsingular += det_int(IntMatrix::from(SignMatrix::from_code(n, n, code))) != 0;
        const SingularReport sr = singular_count(n, 2);
        CHECK(sr.singular_sign == (std::uint64_t{1} << (n * n)) - nonsingular);
        CHECK(sr.prop_identity);
    }
    CHECK(singular_count(3, 1).singular_sign == 320);
    CHECK_THROWS(singular_count(6, 1));
}

TEST_CASE("rank identities on rectangular frames") {
    for (auto [s, t] : {std::pair{3, 3}, std::pair{3, 4}, std::pair{4, 4}, std::pair{2, 5}}) {
        const RankCensus rc = rank_census(s, t, 2);
        CHECK(rc.rank_drop_violations == 0);
        CHECK(rc.lemma_holds());
        CHECK(rc.uniform_after_forgetting());
    }
}

TEST_CASE("(4,4) weighted singular condensates scale to the binary census") {
    const RankCensus rc = rank_census(4, 4, 1);
    std::uint64_t weighted = 0, binary = 0;
    for (int r = 0; r < 3; ++r) weighted += rc.rank_condensate[r], binary += rc.rank_binary[r];
    CHECK(weighted == (std::uint64_t{1} << 7) * binary);
}

TEST_CASE("checkpointed census resumes to the same histogram") {
    const auto path = (std::filesystem::temp_directory_path() / "chio_census_test.ckpt").string();
    std::filesystem::remove(path);
    const RankCensus full = rank_census(4, 4, 1);
    const RankCensus partial = rank_census(4, 4, 1, path, 4096, 3);
    CHECK(partial.visited == 3 * 4096);
    std::vector<std::uint64_t> words;
    REQUIRE(read_checkpoint(path, words));
    CHECK(words[3] == 3 * 4096);
    const RankCensus resumed = rank_census(4, 4, 2, path, 4096);
    CHECK(resumed == full);
    CHECK_THROWS(rank_census(3, 3, 1, path));
    std::filesystem::remove(path);
}

TEST_CASE("checkpoint blobs reject foreign files") {
    const auto path = (std::filesystem::temp_directory_path() / "chio_not_a_ckpt").string();
    {
        std::FILE* f = std::fopen(path.c_str(), "wb");
        std::fputs("hello world", f);
        std::fclose(f);
    }
    std::vector<std::uint64_t> words;
    CHECK_THROWS(read_checkpoint(path, words));
    CHECK_FALSE(read_checkpoint(path + ".missing", words));
    write_checkpoint(path, {1, 2, 0xffffffffffffffffULL});
    REQUIRE(read_checkpoint(path, words));
    CHECK(words == std::vector<std::uint64_t>{1, 2, 0xffffffffffffffffULL});
    std::filesystem::remove(path);
}

TEST_CASE("empirical preimage counts") {
    const EmpiricalChio e3 = empirical_p_chio(3, 1);
    std::uint64_t sum = 0;
    for (auto c : e3.counts) sum += c;
    CHECK(sum == 512);
    CHECK(empirical_p_chio(3, 3).counts == e3.counts);
    CHECK(check_fibres(e3).ok());
    CHECK(e3.count(PartialTernaryMatrix::full({{1, 1}, {1, -1}})) == 0);
    CHECK(e3.count(PartialTernaryMatrix::full({{1, 1}, {1, 1}})) == 4);  // 2^(9-4-4+1)
    const EmpiricalChio e4 = empirical_p_chio(4, 2);
    CHECK(e4.counts == empirical_p_chio(4, 1).counts);
    CHECK(check_fibres(e4).ok());
}

TEST_CASE("k-wise agreement") {
    const KwiseReport r = kwise_agreement_check(empirical_p_chio(4, 1), 6);
    CHECK(r.ok());
    CHECK(r.disagreements[4] == 144);
    for (int k = 0; k <= 3; ++k) CHECK(r.disagreements[k] == 0);
}

TEST_CASE("census budget") {
    CHECK_THROWS(check_census_budget({6, 6, 1, 25, true}));
    CHECK_NOTHROW(check_census_budget({5, 5, 1, 25, true}));
}
