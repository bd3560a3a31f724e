#include <doctest.h>

#include <stdexcept>

#include "fixtures.hpp"
#include "semdiff/cd_lang.hpp"
#include "support/generators.hpp"

using namespace semdiff;
using namespace semdiff::cd;

namespace {

std::string first_error(std::string_view text) {
    try {
        parse_cd(text);
    } catch (const ParseError& e) {
        return e.diagnostics().front().format();
    }
    return "";
}

}  // namespace

TEST_CASE("minimal class diagram") {
    const auto d = parse_cd("classdiagram C { class A; }");
    CHECK(d.name == "C");
    REQUIRE(d.classes.size() == 1);
    CHECK(d.classes[0].name == "A");
    CHECK(d.classes[0].modifier == ClassModifier::Concrete);
    CHECK_FALSE(d.classes[0].parent);
    CHECK(d.associations.empty());
}

TEST_CASE("cd1.v2 fixture has inheritance and a 0..2 multiplicity") {
    const auto d = testing::fixture_cd("cd1v2.cd");
    const auto* manager = d.find_class("Manager");
    REQUIRE(manager);
    CHECK(manager->parent == "Employee");
    const auto* works = d.find_association("worksOn");
    REQUIRE(works);
    CHECK(works->right_mult == Multiplicity{0, 2});
    CHECK(works->left_mult == Multiplicity::many());
}

TEST_CASE("multiplicity tokens") {
    const auto d = parse_cd(R"(classdiagram C {
        class A; class B;
        association p [*] A -- B [3];
        association q [1..*] A -- B [0..4];
    })");
    CHECK(d.associations[0].left_mult == Multiplicity::many());
    CHECK(d.associations[0].right_mult == Multiplicity{3, 3});
    CHECK(d.associations[1].left_mult == Multiplicity{1, Multiplicity::kUnbounded});
    CHECK(d.associations[1].right_mult == Multiplicity{0, 4});
    CHECK(Multiplicity{1, Multiplicity::kUnbounded}.to_string() == "1..*");
    CHECK(Multiplicity{3, 3}.to_string() == "3");
    CHECK(Multiplicity::many().to_string() == "*");
}

TEST_CASE("validation errors") {
    CHECK(first_error("classdiagram C { class A extends A; }").find("inheritance cycle") != std::string::npos);
    CHECK(first_error("classdiagram C { class A extends B; class B extends A; }").find("inheritance cycle") !=
          std::string::npos);
    CHECK(first_error("classdiagram C { class A; class A; }").find("duplicate class") != std::string::npos);
    CHECK(first_error("classdiagram C { class A; association r [*] A -- B [*]; }").find("unknown class") !=
          std::string::npos);
    CHECK(first_error("classdiagram C { class A; association r [3..1] A -- A [*]; }").find("malformed") !=
          std::string::npos);
    CHECK(first_error("classdiagram C { class A extends Z; }").find("unknown class") != std::string::npos);
    CHECK(first_error("classdiagram C { class A; association r [*] A -- A [*]; association r [*] A -- A [*]; }")
              .find("duplicate association") != std::string::npos);
}

TEST_CASE("syntax errors carry positions and expected tokens") {
    const auto msg = first_error("classdiagram C {\n  class A\n}");
    CHECK(msg.starts_with("3:1: error:"));
    CHECK(msg.find("';'") != std::string::npos);
    CHECK(first_error("classdiagram C { class A; association r [*] A - A [*]; }").starts_with("1:"));
}

TEST_CASE("every validation error lies inside the input") {
    const std::string text = "classdiagram C {\n  class A;\n  class A;\n  class B extends Q;\n}";
    try {
        parse_cd(text);
        FAIL("expected errors");
    } catch (const ParseError& e) {
        CHECK(e.diagnostics().size() == 2);
        for (const auto& d : e.diagnostics()) {
            CHECK(d.pos.line >= 1);
            CHECK(d.pos.line <= 5);
        }
    }
}

TEST_CASE("subtype_set") {
    const auto v1 = testing::fixture_cd("cd1v1.cd");
    const auto v2 = testing::fixture_cd("cd1v2.cd");
    CHECK(subtype_set(v2, "Employee") == std::set<std::string>{"Employee", "Manager"});
    CHECK(subtype_set(v1, "Employee") == std::set<std::string>{"Employee"});
    CHECK(subtype_set(v2, "Task") == std::set<std::string>{"Task"});
    CHECK_THROWS_AS(subtype_set(v1, "Nope"), std::invalid_argument);

    const auto chain = parse_cd("classdiagram C { class A; class B extends A; class C extends B; class D; }");
    CHECK(subtype_set(chain, "A") == std::set<std::string>{"A", "B", "C"});
}

TEST_CASE("round trip on fixtures") {
    for (const auto* name : {"cd1v1.cd", "cd1v2.cd", "cd5v1.cd", "cd5v2.cd"}) {
        const auto d = testing::fixture_cd(name);
        CHECK(parse_cd(print_cd(d)) == d);
        CHECK(print_cd(parse_cd(print_cd(d))) == print_cd(d));
    }
}

TEST_CASE("properties over random diagrams") {
    testing::Rng rng(7);
    for (int i = 0; i < 300; ++i) {
        const auto d = testing::random_cd(rng);
        CHECK(validate(d).empty());
        CHECK(parse_cd(print_cd(d)) == d);
        for (const auto& c : d.classes) {
            const auto subs = subtype_set(d, c.name);
            CHECK(subs.contains(c.name));
            for (const auto& s : subs) {
                for (const auto& t : subtype_set(d, s)) CHECK(subs.contains(t));
                if (s != c.name) CHECK_FALSE(subtype_set(d, s).contains(c.name));
            }
        }
    }
}
