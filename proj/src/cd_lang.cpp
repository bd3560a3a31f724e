#include "semdiff/cd_lang.hpp"

#include <map>
#include <stdexcept>

#include "lexer.hpp"

namespace semdiff::cd {

using detail::TokenCursor;

std::string Multiplicity::to_string() const {
    if (min == 0 && unbounded()) return "*";
    if (min == max) return std::to_string(min);
    return std::to_string(min) + ".." + (unbounded() ? std::string("*") : std::to_string(max));
}

const ClassDecl* ClassDiagram::find_class(std::string_view name) const {
    for (const auto& c : classes)
        if (c.name == name) return &c;
    return nullptr;
}

const Association* ClassDiagram::find_association(std::string_view name) const {
    for (const auto& a : associations)
        if (a.name == name) return &a;
    return nullptr;
}

namespace {

Multiplicity parse_multiplicity(TokenCursor& in) {
    if (in.accept("*")) return Multiplicity::many();
    const auto parse_nat = [&] {
        const auto& tok = in.expect_number();
        try {
            return static_cast<std::size_t>(std::stoull(tok.text));
        } catch (const std::out_of_range&) {
            throw ParseError({{tok.pos, "multiplicity bound out of range"}});
        }
    };
    Multiplicity m;
    m.min = parse_nat();
    if (!in.accept("..")) {
        m.max = m.min;
        return m;
    }
    if (in.accept("*")) {
        m.max = Multiplicity::kUnbounded;
    } else {
        m.max = parse_nat();
    }
    return m;
}

}  // namespace

ClassDiagram parse_cd(std::string_view text) {
    TokenCursor in(text);
    ClassDiagram cd;
    in.expect("classdiagram");
    cd.name = in.expect_identifier("diagram name").text;
    in.expect("{");
    while (!in.accept("}")) {
        const SourcePos pos = in.peek().pos;
        if (in.accept("association")) {
            Association a;
            a.pos = pos;
            a.name = in.expect_identifier("association name").text;
            in.expect("[");
            a.left_mult = parse_multiplicity(in);
            in.expect("]");
            a.left_class = in.expect_identifier("class name").text;
            in.expect("--");
            a.right_class = in.expect_identifier("class name").text;
            in.expect("[");
            a.right_mult = parse_multiplicity(in);
            in.expect("]");
            in.expect(";");
            cd.associations.push_back(std::move(a));
            continue;
        }
        ClassDecl c;
        c.pos = pos;
        if (in.accept("abstract")) {
            c.modifier = ClassModifier::Abstract;
        } else if (in.accept("singleton")) {
            c.modifier = ClassModifier::Singleton;
        } else if (!in.is("class")) {
            in.fail_expected({"class", "abstract", "singleton", "association", "}"});
        }
        in.expect("class");
        c.name = in.expect_identifier("class name").text;
        if (in.accept("extends")) c.parent = in.expect_identifier("class name").text;
        if (!in.accept(";")) in.fail_expected({";", "extends"});
        cd.classes.push_back(std::move(c));
    }
    if (!in.at_end()) in.fail("unexpected " + detail::describe(in.peek()) + " after diagram");

    auto errors = validate(cd);
    if (!errors.empty()) throw ParseError(std::move(errors));
    return cd;
}

std::vector<Diagnostic> validate(const ClassDiagram& cd) {
    std::vector<Diagnostic> errors;
    std::map<std::string, const ClassDecl*> classes;
    for (const auto& c : cd.classes) {
        if (!classes.emplace(c.name, &c).second)
            errors.push_back({c.pos, "duplicate class '" + c.name + "'"});
    }
    for (const auto& c : cd.classes) {
        if (c.parent && !classes.contains(*c.parent))
            errors.push_back({c.pos, "class '" + c.name + "' extends unknown class '" + *c.parent + "'"});
    }
    // Walk each parent chain; a chain longer than the class count is a cycle.
    for (const auto& c : cd.classes) {
        const ClassDecl* cur = &c;
        for (std::size_t steps = 0; cur && cur->parent; ++steps) {
            if (*cur->parent == c.name || steps > classes.size()) {
                errors.push_back({c.pos, "inheritance cycle through class '" + c.name + "'"});
                break;
            }
            auto it = classes.find(*cur->parent);
            cur = it == classes.end() ? nullptr : it->second;
        }
    }

    std::set<std::string> assoc_names;
    for (const auto& a : cd.associations) {
        if (!assoc_names.insert(a.name).second)
            errors.push_back({a.pos, "duplicate association '" + a.name + "'"});
        for (const auto* end : {&a.left_class, &a.right_class}) {
            if (!classes.contains(*end))
                errors.push_back({a.pos, "association '" + a.name + "' references unknown class '" + *end + "'"});
        }
        for (const auto* m : {&a.left_mult, &a.right_mult}) {
            if (!m->unbounded() && m->min > m->max)
                errors.push_back({a.pos, "malformed multiplicity " + std::to_string(m->min) + ".." +
                                             std::to_string(m->max) + " in association '" + a.name + "'"});
        }
    }
    return errors;
}

std::string print_cd(const ClassDiagram& cd) {
    std::string out = "classdiagram " + cd.name + " {\n";
    for (const auto& c : cd.classes) {
        out += "  ";
        if (c.modifier == ClassModifier::Abstract) out += "abstract ";
        if (c.modifier == ClassModifier::Singleton) out += "singleton ";
        out += "class " + c.name;
        if (c.parent) out += " extends " + *c.parent;
        out += ";\n";
    }
    for (const auto& a : cd.associations) {
        out += "  association " + a.name + " [" + a.left_mult.to_string() + "] " + a.left_class + " -- " +
               a.right_class + " [" + a.right_mult.to_string() + "];\n";
    }
    out += "}\n";
    return out;
}

std::set<std::string> subtype_set(const ClassDiagram& cd, std::string_view c) {
    if (!cd.find_class(c)) throw std::invalid_argument("unknown class '" + std::string(c) + "'");
    std::set<std::string> result{std::string(c)};
    // Fixpoint over the extends edges.
    bool grew = true;
    while (grew) {
        grew = false;
        for (const auto& decl : cd.classes) {
            if (decl.parent && result.contains(*decl.parent) && result.insert(decl.name).second) grew = true;
        }
    }
    return result;
}

}  // namespace semdiff::cd
