#include <doctest.h>

#include <algorithm>

#include "fixtures.hpp"
#include "semdiff/cd_semantics.hpp"
#include "support/generators.hpp"

using namespace semdiff;
using namespace semdiff::cd;

namespace {

ObjectModel employee_with_tasks(std::size_t tasks) {
    ObjectModel om;
    om.objects["e1"] = "Employee";
    for (std::size_t i = 1; i <= tasks; ++i) {
        const std::string t = "t" + std::to_string(i);
        om.objects[t] = "Task";
        om.links.insert({"worksOn", "e1", t});
    }
    return om;
}

bool has_kind(const InstanceCheck& c, ViolationKind kind) {
    return std::any_of(c.violations.begin(), c.violations.end(), [&](const auto& v) { return v.kind == kind; });
}

std::vector<ObjectModel> enumerate_all(const Universe& u, std::size_t k) {
    std::vector<ObjectModel> out;
    enumerate_object_models(u, k, [&](const ObjectModel& om) {
        out.push_back(om);
        return true;
    });
    return out;
}

}  // namespace

TEST_CASE("parse_om examples") {
    CHECK(parse_om("objectmodel m { }").objects.empty());
    const auto om = parse_om("objectmodel m { e1: Employee; t1: Task; link worksOn e1 -- t1; }");
    CHECK(om.name == "m");
    CHECK(om.objects.size() == 2);
    CHECK(om.links.size() == 1);
    CHECK(om.links.contains(Link{"worksOn", "e1", "t1"}));
    CHECK_THROWS_WITH_AS(parse_om("objectmodel m { link worksOn e1 -- t1; }"),
                         doctest::Contains("unknown object 'e1'"), ParseError);
    CHECK_THROWS_AS(parse_om("objectmodel m { a: A; a: B; }"), ParseError);
    CHECK_THROWS_AS(parse_om("objectmodel m { a: A; link r a -- a; link r a -- a; }"), ParseError);
}

TEST_CASE("an object may be called link") {
    const auto om = parse_om("objectmodel m { link: A; link r link -- link; }");
    CHECK(om.objects.at("link") == "A");
    CHECK(om.links.contains(Link{"r", "link", "link"}));
}

TEST_CASE("parse_om round trip") {
    const auto om = employee_with_tasks(3);
    CHECK(parse_om(print_om(om)) == om);
}

TEST_CASE("is_instance examples") {
    const auto v1 = testing::fixture_cd("cd1v1.cd");
    const auto v2 = testing::fixture_cd("cd1v2.cd");

    const auto three = employee_with_tasks(3);
    CHECK(is_instance(three, v1).ok);
    const auto bad = is_instance(three, v2);
    CHECK_FALSE(bad.ok);
    CHECK(has_kind(bad, ViolationKind::Multiplicity));

    CHECK(is_instance(ObjectModel{}, v1).ok);
    CHECK(is_instance(ObjectModel{}, v2).ok);

    ObjectModel manager_task;
    manager_task.objects = {{"m1", "Manager"}, {"t1", "Task"}};
    manager_task.links = {{"worksOn", "m1", "t1"}};
    const auto endpoint = is_instance(manager_task, v1);
    CHECK_FALSE(endpoint.ok);
    CHECK(has_kind(endpoint, ViolationKind::BadEndpoint));
    CHECK(is_instance(manager_task, v2).ok);
}

TEST_CASE("remaining violation kinds") {
    const auto cd = parse_cd(R"(classdiagram C {
        abstract class P;
        class A extends P;
        singleton class S;
        association r [1] A -- A [*];
    })");
    ObjectModel om;
    om.objects = {{"p1", "P"}, {"x1", "X"}};
    om.links = {{"q", "p1", "p1"}};
    const auto c = is_instance(om, cd);
    CHECK_FALSE(c.ok);
    CHECK(has_kind(c, ViolationKind::AbstractInstantiated));
    CHECK(has_kind(c, ViolationKind::UnknownClass));
    CHECK(has_kind(c, ViolationKind::UnknownAssociation));
    CHECK(has_kind(c, ViolationKind::SingletonCount));
    CHECK(to_string(ViolationKind::SingletonCount) == "SINGLETON_COUNT");

    ObjectModel ok;
    ok.objects = {{"s1", "S"}, {"a1", "A"}};
    ok.links = {{"r", "a1", "a1"}};
    CHECK(is_instance(ok, cd).ok);
    ok.objects["s2"] = "S";
    CHECK(has_kind(is_instance(ok, cd), ViolationKind::SingletonCount));
}

TEST_CASE("singleton counts subclass instances") {
    const auto cd = parse_cd("classdiagram C { singleton class S; class T extends S; }");
    ObjectModel om;
    om.objects = {{"t1", "T"}};
    CHECK(is_instance(om, cd).ok);
    om.objects["s1"] = "S";
    CHECK_FALSE(is_instance(om, cd).ok);
}

TEST_CASE("multiplicity orientation follows the opposite end") {
    const auto cd = parse_cd("classdiagram C { class A; class B; association r [1] A -- B [0..2]; }");
    ObjectModel om;
    om.objects = {{"a1", "A"}, {"b1", "B"}};
    CHECK_FALSE(is_instance(om, cd).ok);  // b1 needs exactly one A
    om.links = {{"r", "a1", "b1"}};
    CHECK(is_instance(om, cd).ok);
    om.objects["b2"] = "B";
    om.objects["b3"] = "B";
    om.links.insert({"r", "a1", "b2"});
    om.links.insert({"r", "a1", "b3"});
    CHECK_FALSE(is_instance(om, cd).ok);  // a1 links to three Bs
}

TEST_CASE("violations are empty exactly when ok") {
    testing::Rng rng(11);
    for (int i = 0; i < 100; ++i) {
        const auto d = testing::random_cd(rng, 3, 2);
        const InstanceChecker checker(d);
        enumerate_object_models(universe_of(d), 1, [&](const ObjectModel& om) {
            const auto c = checker.check(om);
            CHECK(c.ok == c.violations.empty());
            CHECK(checker.accepts(om) == c.ok);
            return true;
        });
    }
}

TEST_CASE("enumerator examples") {
    const auto one = enumerate_all(universe_of(parse_cd("classdiagram U { class A; }")), 1);
    REQUIRE(one.size() == 2);
    CHECK(one[0].objects.empty());
    CHECK(one[1].objects.size() == 1);

    CHECK(enumerate_all(universe_of(parse_cd("classdiagram U { class A; class B; }")), 1).size() == 4);

    const auto loops = enumerate_all(universe_of(parse_cd("classdiagram U { class A; association r [*] A -- A [*]; }")), 1);
    REQUIRE(loops.size() == 3);
    CHECK(loops[0].objects.empty());
    // Canonical text puts the linked model first: "  link" sorts before "}".
    CHECK(loops[1].links.size() == 1);
    CHECK(loops[2].links.empty());
    CHECK(loops[2].objects.size() == 1);
}

TEST_CASE("enumerator respects the per-class bound and order") {
    const auto u = universe_of(parse_cd("classdiagram U { class A; class B; association r [*] A -- B [*]; }"));
    const auto models = enumerate_all(u, 2);
    // Count vectors (i, j) contribute 2^(i*j) link subsets each.
    std::size_t expected = 0;
    for (std::size_t i = 0; i <= 2; ++i)
        for (std::size_t j = 0; j <= 2; ++j) expected += std::size_t{1} << (i * j);
    CHECK(models.size() == expected);
    for (std::size_t i = 0; i < models.size(); ++i) {
        CHECK(models[i].max_instances_per_class() <= 2);
        if (i > 0) {
            const auto prev = models[i - 1].objects.size();
            const auto cur = models[i].objects.size();
            CHECK(prev <= cur);
            if (prev == cur) CHECK(print_om(models[i - 1]) < print_om(models[i]));
        }
    }
}

TEST_CASE("enumerator stops when the visitor declines") {
    const auto u = universe_of(parse_cd("classdiagram U { class A; class B; }"));
    std::size_t seen = 0;
    enumerate_object_models(u, 3, [&](const ObjectModel&) { return ++seen < 5; });
    CHECK(seen == 5);
}

TEST_CASE("joint universe merges association ends") {
    const auto a = parse_cd("classdiagram X { class A; class B; association r [*] A -- B [*]; }");
    const auto b = parse_cd("classdiagram Y { class A; class C; association r [*] C -- A [*]; }");
    const auto u = joint_universe(a, b);
    CHECK(u.classes == std::set<std::string>{"A", "B", "C"});
    REQUIRE(u.associations.size() == 1);
    CHECK(u.associations[0].sources == std::set<std::string>{"A", "C"});
    CHECK(u.associations[0].targets == std::set<std::string>{"A", "B"});
}

TEST_CASE("object naming") {
    const ObjectNaming plain({"Employee", "Task"}, 3);
    CHECK(plain.id("Employee", 1) == "employee1");
    CHECK(plain.id("Task", 3) == "task3");
    const ObjectNaming clash({"A", "a"}, 2);
    CHECK(clash.id("A", 1) == "A_1");
    CHECK(clash.id("a", 2) == "a_2");
}

TEST_CASE("adding an extends edge keeps models without the child") {
    testing::Rng rng(23);
    int checked = 0;
    for (int i = 0; i < 200; ++i) {
        auto base = testing::random_cd(rng, 3, 2);
        std::size_t child = 0;
        for (; child < base.classes.size(); ++child)
            if (child > 0 && !base.classes[child].parent) break;
        if (child >= base.classes.size()) continue;
        auto extended = base;
        extended.classes[child].parent = base.classes[0].name;
        // Instances of the child's own subclasses are instances of the child too.
        const auto child_types = subtype_set(base, base.classes[child].name);
        enumerate_object_models(universe_of(base), 1, [&](const ObjectModel& om) {
            const bool has_child = std::any_of(om.objects.begin(), om.objects.end(),
                                               [&](const auto& o) { return child_types.contains(o.second); });
            if (!has_child && is_instance(om, base).ok) {
                CHECK(is_instance(om, extended).ok);
                ++checked;
            }
            return true;
        });
    }
    CHECK(checked > 0);
}
