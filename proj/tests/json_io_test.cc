#include "slocc/json_io.h"

#include <filesystem>
#include <fstream>

#include "gtest/gtest.h"

#include "slocc/error.h"

using namespace slocc;
using io::Json;

namespace {

ErrorKind parse_kind(const std::string &text) {
    try {
        io::state_from_json(io::parse_json(text));
    } catch (const Error &e) {
        return e.kind();
    }
    ADD_FAILURE() << "expected slocc::Error for " << text;
    return ErrorKind::BadArgs;
}

}  // namespace

TEST(json_io, state_text_round_trip_is_bit_exact) {
    for (std::uint64_t seed = 0; seed < 50; seed++) {
        StateVector s = random_state(1 + seed % 8, seed);
        std::string text = io::state_to_json(s).dump();
        EXPECT_EQ(io::state_from_json(Json::parse(text)), s);
    }
}

TEST(json_io, state_schema) {
    Json doc = io::state_to_json(ghz(2));
    EXPECT_EQ(doc["n"], 2);
    ASSERT_EQ(doc["amplitudes"].size(), 4u);
    EXPECT_EQ(doc["amplitudes"][0][0].get<double>(), M_SQRT1_2);
    EXPECT_EQ(doc["amplitudes"][1], Json::array({0.0, 0.0}));
}

TEST(json_io, state_rejects_bad_documents) {
    EXPECT_EQ(parse_kind(R"({"n": 1, "amplitudes": [[1,0]]})"), ErrorKind::LengthMismatch);
    EXPECT_EQ(parse_kind(R"({"n": 1, "amplitudes": [[0,0],[0,0]]})"), ErrorKind::AllZero);
    EXPECT_EQ(parse_kind(R"({"amplitudes": [[1,0],[0,0]]})"), ErrorKind::ParseError);
    EXPECT_EQ(parse_kind(R"({"n": 1, "amplitudes": [[1,0],[0]]})"), ErrorKind::ParseError);
    EXPECT_EQ(parse_kind(R"({"n": 1, "amplitudes": [[1,0],["x",0]]})"), ErrorKind::ParseError);
    EXPECT_EQ(parse_kind(R"({"n": 1.5, "amplitudes": [[1,0],[0,0]]})"), ErrorKind::ParseError);
    EXPECT_EQ(parse_kind(R"({"n": 1, "amplitudes": [[1e999,0],[0,0]]})"), ErrorKind::ParseError);
    EXPECT_EQ(parse_kind(R"({"n": 40, "amplitudes": []})"), ErrorKind::ParseError);
}

TEST(json_io, nan_literal_fails_to_parse) {
    auto path = std::filesystem::temp_directory_path() / "slocc_nan_state.json";
    std::ofstream(path) << R"({"n": 1, "amplitudes": [[NaN, 0], [0, 0]]})";
    try {
        io::read_json_file(path);
        FAIL();
    } catch (const Error &e) {
        EXPECT_EQ(e.kind(), ErrorKind::ParseError);
    }
    std::filesystem::remove(path);
}

TEST(json_io, chain_round_trip) {
    LocalOperatorChain chain = random_chain(4, 5, false);
    Json doc = io::chain_to_json(chain);
    ASSERT_EQ(doc["ops"].size(), 4u);
    ASSERT_EQ(doc["ops"][0].size(), 4u);
    EXPECT_EQ(io::chain_from_json(Json::parse(doc.dump())), chain);
    EXPECT_THROW(io::chain_from_json(Json::parse(R"({"ops": [[[1,0],[0,0],[0,0]]]})")), Error);
    EXPECT_THROW(io::chain_from_json(Json::parse(R"({"op": []})")), Error);
}

TEST(json_io, report_marks_absent_fields_null) {
    Json even = io::report_to_json(invariant_report(ghz(4)), 1e-10);
    EXPECT_EQ(even["parity"], "even");
    EXPECT_TRUE(even["iv_bar"].is_null());
    EXPECT_TRUE(even["odd_invariant"].is_null());
    EXPECT_FALSE(even["vanishing"]["tau"].get<bool>());

    Json odd = io::report_to_json(invariant_report(w_state(3)), 1e-10);
    EXPECT_EQ(odd["parity"], "odd");
    EXPECT_TRUE(odd["vanishing"]["odd_invariant"].get<bool>());
    EXPECT_TRUE(odd["vanishing"]["tau"].get<bool>());
    EXPECT_EQ(odd["iv_bar"], Json::array({0.0, 0.0}));
}

TEST(json_io, file_round_trip) {
    auto path = std::filesystem::temp_directory_path() / "slocc_json_io_state.json";
    StateVector s = random_state(6, 1);
    io::write_json_file(path, io::state_to_json(s));
    EXPECT_EQ(io::state_from_json(io::read_json_file(path)), s);
    std::filesystem::remove(path);
    try {
        io::read_json_file(path);
        FAIL();
    } catch (const Error &e) {
        EXPECT_EQ(e.kind(), ErrorKind::IOError);
    }
}
