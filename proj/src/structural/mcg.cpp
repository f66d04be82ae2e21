#include "am/structural/mcg.hpp"

#include <algorithm>
#include <set>

namespace am::structural {

ModuleCallGraph build_mcg(const frontend::DesignDB& db) {
    using frontend::ModuleItem;

    // modules reachable from the top, via the definition graph
    std::set<std::string> reachable;
    std::vector<std::string> work{db.top};
    while (!work.empty()) {
        std::string m = std::move(work.back());
        work.pop_back();
        if (!reachable.insert(m).second) continue;
        const auto* decl = db.find_module(m);
        if (!decl) continue; // blackbox leaf
        for (const auto& item : decl->items)
            if (item.kind == ModuleItem::Kind::Instance)
                work.push_back(item.instance.target_module);
    }

    ModuleCallGraph g;
    for (const auto& name : reachable) {
        McgNode n;
        n.name = name;
        n.external = db.find_module(name) == nullptr;
        g.nodes.push_back(std::move(n));
    }
    for (const auto& name : reachable) {
        const auto* decl = db.find_module(name);
        if (!decl) continue;
        for (const auto& item : decl->items)
            if (item.kind == ModuleItem::Kind::Instance)
                g.edges.push_back({name, item.instance.target_module,
                                   item.instance.instance_name});
    }
    std::sort(g.edges.begin(), g.edges.end(), [](const auto& a, const auto& b) {
        return std::tie(a.parent, a.child, a.instance) <
               std::tie(b.parent, b.child, b.instance);
    });
    return g;
}

} // namespace am::structural
