#pragma once

// Finite object models, the instance-of relation between object models and
// class diagrams, and an exhaustive bounded enumerator of object models.

#include <cstddef>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "semdiff/cd_lang.hpp"

namespace semdiff::cd {

struct Link {
    std::string association;
    std::string source;
    std::string target;

    friend auto operator<=>(const Link&, const Link&) = default;
};

/// Links form a set: one association never connects the same ordered pair twice.
struct ObjectModel {
    std::string name = "om";
    std::map<std::string, std::string> objects;  // object id -> class name
    std::set<Link> links;

    std::size_t instances_of(std::string_view class_name) const;

    /// Largest per-class instance count (the |om| of bounded diffing).
    std::size_t max_instances_per_class() const;

    friend bool operator==(const ObjectModel&, const ObjectModel&) = default;
};

/// `objectmodel m { e1: Employee; t1: Task; link worksOn e1 -- t1; }`
ObjectModel parse_om(std::string_view text);

/// Canonical text: objects then links, each sorted lexicographically.
std::string print_om(const ObjectModel& om);

enum class ViolationKind {
    UnknownClass,
    AbstractInstantiated,
    SingletonCount,
    UnknownAssociation,
    BadEndpoint,
    Multiplicity,
};

std::string_view to_string(ViolationKind kind);

struct Violation {
    ViolationKind kind;
    std::string subject;  // object id, class name or association name
    std::string detail;

    friend bool operator==(const Violation&, const Violation&) = default;
};

struct InstanceCheck {
    bool ok = true;
    std::vector<Violation> violations;
};

/// Precomputed subtype closures for repeated membership tests against one diagram.
class InstanceChecker {
public:
    explicit InstanceChecker(const ClassDiagram& cd);

    InstanceCheck check(const ObjectModel& om) const;

    /// Same verdict as check(om).ok without building the violation list.
    bool accepts(const ObjectModel& om) const;

private:
    template <typename Sink>
    void run(const ObjectModel& om, Sink&& sink) const;

    struct AssocInfo {
        const Association* decl;
        std::set<std::string> left_types;
        std::set<std::string> right_types;
    };

    const ClassDiagram* cd_;
    std::map<std::string, ClassModifier> modifiers_;
    std::map<std::string, std::set<std::string>> singleton_types_;
    std::map<std::string, AssocInfo> associations_;
};

/// om ∈ sem(cd), with the reasons when it is not.
InstanceCheck is_instance(const ObjectModel& om, const ClassDiagram& cd);

/// The class and association names over which object models are built.
/// Each association carries the classes allowed at its source and target
/// ends, merged across every contributing diagram.
struct Universe {
    struct AssociationEnds {
        std::string name;
        std::set<std::string> sources;
        std::set<std::string> targets;
    };

    std::set<std::string> classes;
    std::vector<AssociationEnds> associations;  // sorted by name
};

Universe universe_of(const ClassDiagram& cd);
Universe joint_universe(const ClassDiagram& a, const ClassDiagram& b);

/// Ids for the `index`-th (1-based) object of each class. Uses `employee1`
/// style names unless that would collide for the given classes and bound, in
/// which case falls back to `Employee_1` style.
class ObjectNaming {
public:
    ObjectNaming(const std::set<std::string>& classes, std::size_t bound);
    std::string id(const std::string& class_name, std::size_t index) const;

private:
    bool verbose_ = false;
};

/// Name given to every enumerated model and every diff witness.
inline constexpr std::string_view kWitnessName = "witness";

/// Every labeled object model over `universe` with at most `k` objects per
/// class: objects of class C are named C1..Cj (prefix-closed), links range
/// over all subsets of endpoint-compatible pairs. Emitted in order of total
/// object count, then canonical text. The visitor returns false to stop.
void enumerate_object_models(const Universe& universe, std::size_t k,
                             const std::function<bool(const ObjectModel&)>& visit);

}  // namespace semdiff::cd
