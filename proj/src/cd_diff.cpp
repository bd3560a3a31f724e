#include "semdiff/cd_diff.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <map>
#include <stdexcept>
#include <utility>

namespace semdiff::cd {

namespace {

struct Object {
    std::string id;
    std::string cls;
};

using IndexLink = std::pair<std::size_t, std::size_t>;  // source, target object index

struct AssocRule {
    std::string name;
    std::set<std::string> left_types;
    std::set<std::string> right_types;
    Multiplicity left_mult;
    std::size_t right_max = 0;
    Multiplicity right_mult;
};

/// The rules of one diagram split into a class-level part and one
/// independent part per association, each judged on that association's links.
class SplitRules {
public:
    explicit SplitRules(const ClassDiagram& cd) {
        for (const auto& c : cd.classes) {
            if (c.modifier != ClassModifier::Abstract) instantiable_.insert(c.name);
            if (c.modifier == ClassModifier::Singleton) singletons_.push_back(subtype_set(cd, c.name));
        }
        for (const auto& a : cd.associations)
            rules_.emplace(a.name, AssocRule{a.name, subtype_set(cd, a.left_class), subtype_set(cd, a.right_class),
                                             a.left_mult, 0, a.right_mult});
    }

    bool classes_ok(const std::vector<Object>& objects) const {
        for (const auto& o : objects)
            if (!instantiable_.contains(o.cls)) return false;
        for (const auto& types : singletons_) {
            const auto n = std::count_if(objects.begin(), objects.end(),
                                         [&](const Object& o) { return types.contains(o.cls); });
            if (n != 1) return false;
        }
        return true;
    }

    bool association_ok(const std::string& name, const std::vector<Object>& objects,
                        const std::vector<IndexLink>& links) const {
        const auto it = rules_.find(name);
        if (it == rules_.end()) return links.empty();
        const AssocRule& r = it->second;
        std::vector<std::size_t> out(objects.size(), 0);
        std::vector<std::size_t> in(objects.size(), 0);
        for (const auto& [s, t] : links) {
            if (!r.left_types.contains(objects[s].cls) || !r.right_types.contains(objects[t].cls)) return false;
            ++out[s];
            ++in[t];
        }
        for (std::size_t i = 0; i < objects.size(); ++i) {
            if (r.left_types.contains(objects[i].cls) && !r.right_mult.admits(out[i])) return false;
            if (r.right_types.contains(objects[i].cls) && !r.left_mult.admits(in[i])) return false;
        }
        return true;
    }

    const std::map<std::string, AssocRule>& associations() const { return rules_; }

private:
    std::set<std::string> instantiable_;
    std::vector<std::set<std::string>> singletons_;
    std::map<std::string, AssocRule> rules_;
};

/// All link sets of one association over `objects` that satisfy both end
/// multiplicities. Endpoints outside the subtype closures never link.
class LinkSetSearch {
public:
    LinkSetSearch(const AssocRule& rule, const std::vector<Object>& objects) : rule_(rule) {
        for (std::size_t i = 0; i < objects.size(); ++i) {
            if (rule.left_types.contains(objects[i].cls)) sources_.push_back(i);
            if (rule.right_types.contains(objects[i].cls)) targets_.push_back(i);
        }
        if (targets_.size() > 30) throw std::length_error("too many link targets for association search");
        in_degree_.assign(targets_.size(), 0);
    }

    std::vector<std::vector<IndexLink>> run() {
        recurse(0);
        return std::move(results_);
    }

private:
    void recurse(std::size_t src) {
        const Multiplicity& per_source = rule_.right_mult;
        const Multiplicity& per_target = rule_.left_mult;
        if (src == sources_.size()) {
            for (auto d : in_degree_)
                if (!per_target.admits(d)) return;
            results_.push_back(current_);
            return;
        }
        const std::size_t remaining_after = sources_.size() - src - 1;
        const std::uint64_t subsets = std::uint64_t{1} << targets_.size();
        for (std::uint64_t mask = 0; mask < subsets; ++mask) {
            if (!per_source.admits(static_cast<std::size_t>(std::popcount(mask)))) continue;
            bool feasible = true;
            for (std::size_t t = 0; t < targets_.size() && feasible; ++t) {
                const std::size_t d = in_degree_[t] + ((mask >> t) & 1U);
                if (d > per_target.max || d + remaining_after < per_target.min) feasible = false;
            }
            if (!feasible) continue;

            const std::size_t mark = current_.size();
            for (std::size_t t = 0; t < targets_.size(); ++t) {
                if ((mask >> t) & 1U) {
                    ++in_degree_[t];
                    current_.emplace_back(sources_[src], targets_[t]);
                }
            }
            recurse(src + 1);
            for (std::size_t t = 0; t < targets_.size(); ++t)
                if ((mask >> t) & 1U) --in_degree_[t];
            current_.resize(mark);
        }
    }

    const AssocRule& rule_;
    std::vector<std::size_t> sources_;
    std::vector<std::size_t> targets_;
    std::vector<std::size_t> in_degree_;
    std::vector<IndexLink> current_;
    std::vector<std::vector<IndexLink>> results_;
};

struct LinkOption {
    std::set<Link> links;
    bool accepted_by_cd2 = true;
    std::string key;
};

class DiffSearch {
public:
    DiffSearch(const ClassDiagram& cd1, const ClassDiagram& cd2, std::size_t k)
        : cd1_rules_(cd1), cd2_rules_(cd2), k_(k), naming_(joint_universe(cd1, cd2).classes, k) {
        for (const auto& c : cd1.classes)
            if (c.modifier != ClassModifier::Abstract) concrete_.push_back(c.name);
        std::sort(concrete_.begin(), concrete_.end());
        for (const auto& c : cd1.classes) {
            if (c.modifier != ClassModifier::Singleton) continue;
            const auto types = subtype_set(cd1, c.name);
            std::vector<std::size_t> members;
            for (std::size_t i = 0; i < concrete_.size(); ++i)
                if (types.contains(concrete_[i])) members.push_back(i);
            singletons_.push_back(std::move(members));
        }
        for (const auto& [name, rule] : cd2_rules_.associations())
            if (!cd1_rules_.associations().contains(name)) cd2_only_.push_back(name);
    }

    CdDiffResult run(std::size_t max_witnesses) {
        CdDiffResult result;
        result.bound = k_;
        result.requested = max_witnesses;
        result.exhausted = true;

        for (auto& group : count_vectors_by_total()) {
            for (auto& space : group) {
                if (result.witnesses.size() == max_witnesses) {
                    if (has_witness(space)) {
                        result.exhausted = false;
                        return result;
                    }
                    continue;
                }
                list_witnesses(space, [&](ObjectModel om) {
                    if (result.witnesses.size() == max_witnesses) {
                        result.exhausted = false;
                        return false;
                    }
                    result.witnesses.push_back(std::move(om));
                    return true;
                });
                if (!result.exhausted) return result;
            }
        }
        return result;
    }

private:
    /// One count vector: its objects and the per-association link options.
    struct Space {
        std::vector<Object> objects;
        std::string object_text;
        bool built = false;
        bool base_accepted_by_cd2 = true;
        std::vector<std::vector<LinkOption>> options;  // by association name
        std::vector<bool> bad_suffix;                  // some option at index >= i is rejected by cd2
    };

    std::vector<std::vector<Space>> count_vectors_by_total() const {
        std::vector<std::vector<Space>> groups(k_ * concrete_.size() + 1);
        std::vector<std::size_t> counts(concrete_.size(), 0);
        while (true) {
            bool ok = true;
            for (const auto& members : singletons_) {
                std::size_t n = 0;
                for (auto m : members) n += counts[m];
                ok = ok && n == 1;
            }
            if (ok) {
                Space s;
                std::map<std::string, std::string> sorted;
                for (std::size_t c = 0; c < concrete_.size(); ++c) {
                    for (std::size_t i = 1; i <= counts[c]; ++i) {
                        s.objects.push_back({naming_.id(concrete_[c], i), concrete_[c]});
                        sorted.emplace(s.objects.back().id, concrete_[c]);
                    }
                }
                for (const auto& [id, cls] : sorted) s.object_text += "  " + id + ": " + cls + ";\n";
                groups[s.objects.size()].push_back(std::move(s));
            }
            std::size_t pos = 0;
            while (pos < counts.size() && counts[pos] == k_) counts[pos++] = 0;
            if (pos == counts.size()) break;
            ++counts[pos];
        }
        // Same total: canonical texts first differ inside the object block.
        for (auto& g : groups)
            std::sort(g.begin(), g.end(), [](const Space& a, const Space& b) { return a.object_text < b.object_text; });
        return groups;
    }

    void build(Space& s) const {
        if (s.built) return;
        s.built = true;
        s.base_accepted_by_cd2 = cd2_rules_.classes_ok(s.objects);
        for (const auto& name : cd2_only_)
            s.base_accepted_by_cd2 = s.base_accepted_by_cd2 && cd2_rules_.association_ok(name, s.objects, {});
        for (const auto& [name, rule] : cd1_rules_.associations()) {
            std::vector<LinkOption> opts;
            for (auto& links : LinkSetSearch(rule, s.objects).run()) {
                LinkOption o;
                o.accepted_by_cd2 = cd2_rules_.association_ok(name, s.objects, links);
                for (const auto& [src, dst] : links) o.links.insert({name, s.objects[src].id, s.objects[dst].id});
                opts.push_back(std::move(o));
            }
            s.options.push_back(std::move(opts));
        }
        s.bad_suffix.assign(s.options.size() + 1, false);
        for (std::size_t i = s.options.size(); i-- > 0;) {
            const bool bad_here = std::any_of(s.options[i].begin(), s.options[i].end(),
                                              [](const LinkOption& o) { return !o.accepted_by_cd2; });
            s.bad_suffix[i] = bad_here || s.bad_suffix[i + 1];
        }
    }

    bool has_witness(Space& s) const {
        build(s);
        for (const auto& opts : s.options)
            if (opts.empty()) return false;
        return !s.base_accepted_by_cd2 || s.bad_suffix[0];
    }

    void list_witnesses(Space& s, const std::function<bool(ObjectModel)>& emit) const {
        if (!has_witness(s)) return;
        // Links print grouped by association, so the canonical text order is
        // lexicographic over per-association blocks. A block that is a proper
        // prefix of another sorts after it, hence the trailing '~'.
        for (auto& opts : s.options) {
            for (auto& o : opts) {
                o.key.clear();
                for (const auto& l : o.links) o.key += "  link " + l.association + " " + l.source + " -- " + l.target + ";\n";
                o.key += '~';
            }
            std::sort(opts.begin(), opts.end(), [](const LinkOption& a, const LinkOption& b) { return a.key < b.key; });
        }
        ObjectModel base;
        base.name = std::string(kWitnessName);
        for (const auto& o : s.objects) base.objects.emplace(o.id, o.cls);
        std::vector<const LinkOption*> chosen(s.options.size(), nullptr);

        std::function<bool(std::size_t, bool)> dfs = [&](std::size_t i, bool accepted_so_far) {
            if (accepted_so_far && !s.bad_suffix[i]) return true;
            if (i == s.options.size()) {
                ObjectModel om = base;
                for (const auto* c : chosen) om.links.insert(c->links.begin(), c->links.end());
                return emit(std::move(om));
            }
            for (const auto& o : s.options[i]) {
                chosen[i] = &o;
                if (!dfs(i + 1, accepted_so_far && o.accepted_by_cd2)) return false;
            }
            return true;
        };
        dfs(0, s.base_accepted_by_cd2);
    }

    SplitRules cd1_rules_;
    SplitRules cd2_rules_;
    std::size_t k_;
    ObjectNaming naming_;
    std::vector<std::string> concrete_;
    std::vector<std::vector<std::size_t>> singletons_;
    std::vector<std::string> cd2_only_;
};

}  // namespace

CdDiffResult cddiff(const ClassDiagram& cd1, const ClassDiagram& cd2, std::size_t k, std::size_t max_witnesses) {
    if (max_witnesses == 0) throw std::invalid_argument("max_witnesses must be at least 1");
    return DiffSearch(cd1, cd2, k).run(max_witnesses);
}

Verdict compare_cd(const ClassDiagram& cd1, const ClassDiagram& cd2, std::size_t k) {
    const bool forward_empty = cddiff(cd1, cd2, k, 1).witnesses.empty();
    const bool backward_empty = cddiff(cd2, cd1, k, 1).witnesses.empty();
    return verdict_from(forward_empty, backward_empty, k);
}

}  // namespace semdiff::cd
