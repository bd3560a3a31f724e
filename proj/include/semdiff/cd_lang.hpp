#pragma once

// Textual class diagrams:
//
//   classdiagram Company {
//     abstract class Person;
//     class Employee extends Person;
//     class Task;
//     association worksOn [*] Employee -- Task [0..2];
//   }

#include <cstddef>
#include <limits>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "semdiff/diagnostics.hpp"

namespace semdiff::cd {

struct Multiplicity {
    static constexpr std::size_t kUnbounded = std::numeric_limits<std::size_t>::max();

    std::size_t min = 0;
    std::size_t max = kUnbounded;

    static constexpr Multiplicity many() { return {0, kUnbounded}; }

    bool unbounded() const { return max == kUnbounded; }
    bool admits(std::size_t count) const { return count >= min && count <= max; }

    /// `*`, `n`, `n..m` or `n..*`.
    std::string to_string() const;

    friend bool operator==(const Multiplicity&, const Multiplicity&) = default;
};

enum class ClassModifier { Concrete, Abstract, Singleton };

struct ClassDecl {
    std::string name;
    ClassModifier modifier = ClassModifier::Concrete;
    std::optional<std::string> parent;
    SourcePos pos;

    friend bool operator==(const ClassDecl&, const ClassDecl&) = default;
};

/// `association name [leftMult] Left -- Right [rightMult];`
/// The multiplicity at an end bounds how many objects of that end every object
/// of the opposite end links to.
struct Association {
    std::string name;
    std::string left_class;
    Multiplicity left_mult;
    std::string right_class;
    Multiplicity right_mult;
    SourcePos pos;

    friend bool operator==(const Association&, const Association&) = default;
};

struct ClassDiagram {
    std::string name;
    std::vector<ClassDecl> classes;
    std::vector<Association> associations;

    const ClassDecl* find_class(std::string_view name) const;
    const Association* find_association(std::string_view name) const;

    friend bool operator==(const ClassDiagram&, const ClassDiagram&) = default;
};

/// Parses and validates. Throws ParseError with a positioned syntax error, or
/// with every validation error found.
ClassDiagram parse_cd(std::string_view text);

/// Validation rules shared by the parser: unique names, declared endpoints,
/// acyclic inheritance, min <= max. Empty result means well-formed.
std::vector<Diagnostic> validate(const ClassDiagram& cd);

std::string print_cd(const ClassDiagram& cd);

/// `c` together with every class that transitively extends it.
/// Throws std::invalid_argument if `c` is not declared.
std::set<std::string> subtype_set(const ClassDiagram& cd, std::string_view c);

}  // namespace semdiff::cd
