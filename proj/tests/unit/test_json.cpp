#include <doctest.h>

#include "vw/json_writer.hpp"

using vw::Json;

TEST_CASE("keys are emitted sorted and values formatted to 17 significant digits") {
    Json j = Json::object();
    j.set("zeta", 0.1);
    j.set("alpha", 1);
    j.set("mid", "x");
    CHECK(j.dump() == R"({"alpha":1,"mid":"x","zeta":0.10000000000000001})");
    CHECK(vw::format_number(0.5) == "0.5");
    CHECK(vw::format_number(1.0 / 3.0) == "0.33333333333333331");
}

TEST_CASE("empty containers and null") {
    CHECK(Json::array().dump() == "[]");
    CHECK(Json::object().dump() == "{}");
    CHECK(Json(nullptr).dump() == "null");
    Json arr = Json::array();
    arr.push(true);
    arr.push(Json::object());
    CHECK(arr.dump() == "[true,{}]");
}

TEST_CASE("string escaping") {
    Json j = Json::object();
    j.set("s", "a\"b\\c\nd");
    CHECK(j.dump() == R"({"s":"a\"b\\c\nd"})");
}

TEST_CASE("set replaces existing keys") {
    Json j = Json::object();
    j.set("k", 1.0);
    j.set("k", 2.0);
    CHECK(j.dump() == R"({"k":2})");
}

TEST_CASE("find and accessors") {
    Json j = Json::object();
    j.set("num", 2.5);
    j.set("flag", false);
    CHECK(j.find("num")->as_number() == 2.5);
    CHECK(j.find("flag")->as_bool() == false);
    CHECK(j.find("missing") == nullptr);
    CHECK_THROWS(j.find("num")->as_string());
}

TEST_CASE("pretty output is deterministic and reparses identically") {
    Json j = Json::object();
    Json inner = Json::array();
    inner.push(1.5);
    inner.push("two");
    j.set("list", std::move(inner));
    const std::string a = j.pretty();
    const std::string b = j.pretty();
    CHECK(a == b);
    CHECK(a.find("\"list\": [") != std::string::npos);
}
