#include <hz/errors.hpp>
#include <hz/fock.hpp>

#include <gtest/gtest.h>

using namespace hz;

namespace {

std::size_t error_position(const std::string &text) {
    try {
        parse_product(text);
    } catch (const ParseError &e) {
        return e.position();
    }
    ADD_FAILURE() << "no parse error for '" << text << "'";
    return std::string::npos;
}

} // namespace

TEST(Parser, Products) {
    const auto p = parse_product("E(2; z1) E(-2; z1+z2)");
    ASSERT_EQ(p.ops.size(), 2u);
    EXPECT_EQ(p.ops[0].energy, 2);
    EXPECT_EQ(p.ops[0].arg, LinearForm::of("z1"));
    EXPECT_EQ(p.ops[1].energy, -2);
    EXPECT_EQ(p.ops[1].arg, LinearForm::of("z1") + LinearForm::of("z2"));
    EXPECT_EQ(p.ops[1].to_string(), "E(-2; z1 + z2)");
}

TEST(Parser, Coefficients) {
    const auto p = parse_product("E(+3; 2z - w)E(0;0) E(1; 3*x - y)");
    ASSERT_EQ(p.ops.size(), 3u);
    EXPECT_EQ(p.ops[0].arg, LinearForm::of("z", 2) - LinearForm::of("w"));
    EXPECT_TRUE(p.ops[1].arg.is_zero());
    EXPECT_EQ(p.ops[2].arg, LinearForm::of("x", 3) - LinearForm::of("y"));
    EXPECT_EQ(p.ops[0].arg.to_string(), "-w + 2*z");
}

TEST(Parser, CancellingTermsLeaveZero) { EXPECT_TRUE(parse_product("E(1; z - z)").ops[0].arg.is_zero()); }

TEST(Parser, ErrorsCarryPosition) {
    EXPECT_EQ(error_position(""), 0u);
    EXPECT_EQ(error_position("F(1; z)"), 0u);
    EXPECT_EQ(error_position("E(x; z)"), 2u);
    EXPECT_EQ(error_position("E(1; z"), 6u);
    EXPECT_EQ(error_position("E(1; z+)"), 7u);
    EXPECT_EQ(error_position("E(1; z) E(2 z)"), 12u);
}

TEST(Parser, ErrorsNameExpectedToken) {
    try {
        parse_product("E(1; z) E(2 z)");
        FAIL();
    } catch (const ParseError &e) {
        EXPECT_EQ(e.expected(), "';'");
        EXPECT_NE(std::string(e.what()).find("position 12"), std::string::npos);
    }
}
