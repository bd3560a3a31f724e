#include "semdiff/cd_semantics.hpp"

#include <algorithm>
#include <cctype>
#include <utility>

#include "lexer.hpp"

namespace semdiff::cd {

using detail::TokenCursor;

std::size_t ObjectModel::instances_of(std::string_view class_name) const {
    return static_cast<std::size_t>(
        std::count_if(objects.begin(), objects.end(), [&](const auto& o) { return o.second == class_name; }));
}

std::size_t ObjectModel::max_instances_per_class() const {
    std::map<std::string_view, std::size_t> counts;
    std::size_t best = 0;
    for (const auto& [id, cls] : objects) best = std::max(best, ++counts[cls]);
    return best;
}

ObjectModel parse_om(std::string_view text) {
    TokenCursor in(text);
    ObjectModel om;
    std::vector<Diagnostic> errors;
    in.expect("objectmodel");
    om.name = in.expect_identifier("model name").text;
    in.expect("{");
    struct PendingLink {
        Link link;
        SourcePos pos;
    };
    std::vector<PendingLink> pending;
    while (!in.accept("}")) {
        if (in.is("link") && in.peek(1).text != ":") {
            const SourcePos pos = in.peek().pos;
            in.expect("link");
            Link l;
            l.association = in.expect_identifier("association name").text;
            l.source = in.expect_identifier("object id").text;
            in.expect("--");
            l.target = in.expect_identifier("object id").text;
            in.expect(";");
            pending.push_back({std::move(l), pos});
            continue;
        }
        const auto& id = in.expect_identifier("object id or 'link'");
        in.expect(":");
        const auto& cls = in.expect_identifier("class name");
        in.expect(";");
        if (!om.objects.emplace(id.text, cls.text).second)
            errors.push_back({id.pos, "duplicate object id '" + id.text + "'"});
    }
    if (!in.at_end()) in.fail("unexpected " + detail::describe(in.peek()) + " after object model");

    for (auto& p : pending) {
        bool valid = true;
        for (const auto* end : {&p.link.source, &p.link.target}) {
            if (!om.objects.contains(*end)) {
                errors.push_back({p.pos, "link references unknown object '" + *end + "'"});
                valid = false;
            }
        }
        if (valid && !om.links.insert(p.link).second)
            errors.push_back({p.pos, "duplicate link " + p.link.association + " " + p.link.source + " -- " +
                                         p.link.target});
    }
    if (!errors.empty()) throw ParseError(std::move(errors));
    return om;
}

std::string print_om(const ObjectModel& om) {
    std::string out = "objectmodel " + om.name + " {\n";
    for (const auto& [id, cls] : om.objects) out += "  " + id + ": " + cls + ";\n";
    for (const auto& l : om.links) out += "  link " + l.association + " " + l.source + " -- " + l.target + ";\n";
    out += "}\n";
    return out;
}

std::string_view to_string(ViolationKind kind) {
    switch (kind) {
        case ViolationKind::UnknownClass: return "UNKNOWN_CLASS";
        case ViolationKind::AbstractInstantiated: return "ABSTRACT_INSTANTIATED";
        case ViolationKind::SingletonCount: return "SINGLETON_COUNT";
        case ViolationKind::UnknownAssociation: return "UNKNOWN_ASSOCIATION";
        case ViolationKind::BadEndpoint: return "BAD_ENDPOINT";
        case ViolationKind::Multiplicity: return "MULTIPLICITY";
    }
    return "?";
}

InstanceChecker::InstanceChecker(const ClassDiagram& cd) : cd_(&cd) {
    for (const auto& c : cd.classes) {
        modifiers_[c.name] = c.modifier;
        if (c.modifier == ClassModifier::Singleton) singleton_types_[c.name] = subtype_set(cd, c.name);
    }
    for (const auto& a : cd.associations)
        associations_[a.name] = {&a, subtype_set(cd, a.left_class), subtype_set(cd, a.right_class)};
}

template <typename Sink>
void InstanceChecker::run(const ObjectModel& om, Sink&& sink) const {
    // Each call to sink reports one violation; returning false stops the scan.
    for (const auto& [id, cls] : om.objects) {
        auto it = modifiers_.find(cls);
        if (it == modifiers_.end()) {
            if (!sink(ViolationKind::UnknownClass, id, [&] { return "class '" + cls + "' is not declared"; }))
                return;
        } else if (it->second == ClassModifier::Abstract) {
            if (!sink(ViolationKind::AbstractInstantiated, id,
                      [&] { return "class '" + cls + "' is abstract"; }))
                return;
        }
    }

    for (const auto& [singleton, types] : singleton_types_) {
        std::size_t n = 0;
        for (const auto& [id, cls] : om.objects) n += types.contains(cls) ? 1 : 0;
        if (n != 1 && !sink(ViolationKind::SingletonCount, singleton, [&] {
                return "singleton class has " + std::to_string(n) + " instances, expected exactly 1";
            }))
            return;
    }

    std::map<std::string_view, std::map<std::string_view, std::size_t>> out_degree;
    std::map<std::string_view, std::map<std::string_view, std::size_t>> in_degree;
    for (const auto& l : om.links) {
        auto it = associations_.find(l.association);
        if (it == associations_.end()) {
            if (!sink(ViolationKind::UnknownAssociation, l.association,
                      [&] { return "association '" + l.association + "' is not declared"; }))
                return;
            continue;
        }
        const auto& info = it->second;
        const auto& src_cls = om.objects.at(l.source);
        const auto& dst_cls = om.objects.at(l.target);
        if (!info.left_types.contains(src_cls) || !info.right_types.contains(dst_cls)) {
            if (!sink(ViolationKind::BadEndpoint, l.association, [&] {
                    return "link " + l.source + ":" + src_cls + " -- " + l.target + ":" + dst_cls +
                           " does not connect " + info.decl->left_class + " to " + info.decl->right_class;
                }))
                return;
        }
        ++out_degree[l.association][l.source];
        ++in_degree[l.association][l.target];
    }

    for (const auto& [name, info] : associations_) {
        const auto& outs = out_degree[name];
        const auto& ins = in_degree[name];
        for (const auto& [id, cls] : om.objects) {
            if (info.left_types.contains(cls)) {
                auto it = outs.find(id);
                const std::size_t n = it == outs.end() ? 0 : it->second;
                if (!info.decl->right_mult.admits(n) && !sink(ViolationKind::Multiplicity, name, [&] {
                        return id + " has " + std::to_string(n) + " " + name + " links to " +
                               info.decl->right_class + ", allowed " + info.decl->right_mult.to_string();
                    }))
                    return;
            }
            if (info.right_types.contains(cls)) {
                auto it = ins.find(id);
                const std::size_t n = it == ins.end() ? 0 : it->second;
                if (!info.decl->left_mult.admits(n) && !sink(ViolationKind::Multiplicity, name, [&] {
                        return id + " has " + std::to_string(n) + " " + name + " links from " +
                               info.decl->left_class + ", allowed " + info.decl->left_mult.to_string();
                    }))
                    return;
            }
        }
    }
}

InstanceCheck InstanceChecker::check(const ObjectModel& om) const {
    InstanceCheck result;
    run(om, [&](ViolationKind kind, const std::string& subject, auto&& detail) {
        result.violations.push_back({kind, subject, detail()});
        return true;
    });
    result.ok = result.violations.empty();
    return result;
}

bool InstanceChecker::accepts(const ObjectModel& om) const {
    bool ok = true;
    run(om, [&](ViolationKind, const std::string&, auto&&) {
        ok = false;
        return false;
    });
    return ok;
}

InstanceCheck is_instance(const ObjectModel& om, const ClassDiagram& cd) {
    return InstanceChecker(cd).check(om);
}

namespace {

void merge_into(Universe& u, const ClassDiagram& cd) {
    for (const auto& c : cd.classes) u.classes.insert(c.name);
    for (const auto& a : cd.associations) {
        auto it = std::find_if(u.associations.begin(), u.associations.end(),
                               [&](const auto& e) { return e.name == a.name; });
        if (it == u.associations.end()) {
            u.associations.push_back({a.name, {}, {}});
            it = std::prev(u.associations.end());
        }
        it->sources.merge(subtype_set(cd, a.left_class));
        it->targets.merge(subtype_set(cd, a.right_class));
    }
    std::sort(u.associations.begin(), u.associations.end(),
              [](const auto& x, const auto& y) { return x.name < y.name; });
}

}  // namespace

Universe universe_of(const ClassDiagram& cd) {
    Universe u;
    merge_into(u, cd);
    return u;
}

Universe joint_universe(const ClassDiagram& a, const ClassDiagram& b) {
    Universe u;
    merge_into(u, a);
    merge_into(u, b);
    return u;
}

namespace {

std::string short_id(const std::string& class_name, std::size_t index) {
    std::string id = class_name;
    if (!id.empty()) id[0] = static_cast<char>(std::tolower(static_cast<unsigned char>(id[0])));
    return id + std::to_string(index);
}

}  // namespace

ObjectNaming::ObjectNaming(const std::set<std::string>& classes, std::size_t bound) {
    std::set<std::string> seen;
    for (const auto& c : classes) {
        for (std::size_t i = 1; i <= bound; ++i) {
            if (!seen.insert(short_id(c, i)).second) {
                verbose_ = true;
                return;
            }
        }
    }
}

std::string ObjectNaming::id(const std::string& class_name, std::size_t index) const {
    if (verbose_) return class_name + "_" + std::to_string(index);
    return short_id(class_name, index);
}

void enumerate_object_models(const Universe& universe, std::size_t k,
                             const std::function<bool(const ObjectModel&)>& visit) {
    const std::vector<std::string> classes(universe.classes.begin(), universe.classes.end());
    const ObjectNaming naming(universe.classes, k);
    const std::size_t max_total = k * classes.size();

    // All count vectors in [0, k]^|classes|, bucketed by total.
    std::vector<std::vector<std::vector<std::size_t>>> by_total(max_total + 1);
    std::vector<std::size_t> counts(classes.size(), 0);
    while (true) {
        std::size_t total = 0;
        for (auto c : counts) total += c;
        by_total[total].push_back(counts);
        std::size_t pos = 0;
        while (pos < counts.size() && counts[pos] == k) counts[pos++] = 0;
        if (pos == counts.size()) break;
        ++counts[pos];
    }

    for (const auto& group : by_total) {
        std::vector<std::pair<std::string, ObjectModel>> batch;
        for (const auto& vec : group) {
            ObjectModel base;
            base.name = std::string(kWitnessName);
            for (std::size_t c = 0; c < classes.size(); ++c)
                for (std::size_t i = 1; i <= vec[c]; ++i) base.objects[naming.id(classes[c], i)] = classes[c];

            std::vector<Link> slots;
            for (const auto& assoc : universe.associations) {
                for (const auto& [src, src_cls] : base.objects) {
                    if (!assoc.sources.contains(src_cls)) continue;
                    for (const auto& [dst, dst_cls] : base.objects)
                        if (assoc.targets.contains(dst_cls)) slots.push_back({assoc.name, src, dst});
                }
            }
            if (slots.size() >= 63) throw std::length_error("object model enumeration space too large");
            const std::uint64_t subsets = std::uint64_t{1} << slots.size();
            for (std::uint64_t mask = 0; mask < subsets; ++mask) {
                ObjectModel om = base;
                for (std::size_t s = 0; s < slots.size(); ++s)
                    if (mask & (std::uint64_t{1} << s)) om.links.insert(slots[s]);
                batch.emplace_back(print_om(om), std::move(om));
            }
        }
        std::sort(batch.begin(), batch.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
        for (const auto& entry : batch)
            if (!visit(entry.second)) return;
    }
}

}  // namespace semdiff::cd
