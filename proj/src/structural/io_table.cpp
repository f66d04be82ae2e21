#include "am/structural/io_table.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace am::structural {

using frontend::DesignDB;
using frontend::InstNode;

namespace {

void walk(const DesignDB& db, const InstNode& parent,
          std::map<std::string, IoTable>& tables, DiagnosticSink& diags) {
    for (const auto& child : parent.children) {
        if (!child->blackbox) {
            auto it = tables.find(child->module_name);
            if (it != tables.end()) {
                for (const auto& rc : child->conns) {
                    IoRow* row = nullptr;
                    for (auto& r : it->second.rows)
                        if (r.name == rc.formal) row = &r;
                    if (!row) continue;
                    if (!rc.connected) {
                        diags.warning(rc.loc, "unconnected port '" + rc.formal +
                                                  "' on instance " +
                                                  child->path);
                        continue;
                    }
                    for (const auto& sig : rc.actual_signals)
                        row->connections.push_back(parent.path + "." + sig);
                }
            }
        }
        walk(db, *child, tables, diags);
    }
}

} // namespace

std::map<std::string, IoTable> build_io_tables(const DesignDB& db,
                                               DiagnosticSink& diags) {
    std::map<std::string, IoTable> tables;

    // one table per defined module reachable from the top
    std::set<std::string> reachable;
    db.for_each_instance([&](const InstNode& n) {
        if (!n.blackbox) reachable.insert(n.module_name);
    });
    for (const auto& name : reachable) {
        IoTable t;
        t.module = name;
        for (const auto& p : db.ports.at(name)) {
            IoRow row;
            row.name = p.name;
            row.dir = p.dir;
            row.width = p.width;
            t.rows.push_back(std::move(row));
        }
        tables.emplace(name, std::move(t));
    }

    // top-level ports face the outside world
    if (db.root) {
        auto it = tables.find(db.root->module_name);
        if (it != tables.end())
            for (auto& row : it->second.rows)
                row.connections.push_back("primary");
    }

    if (db.root) walk(db, *db.root, tables, diags);

    for (auto& [name, t] : tables) {
        for (auto& row : t.rows) {
            std::sort(row.connections.begin(), row.connections.end());
            row.connections.erase(
                std::unique(row.connections.begin(), row.connections.end()),
                row.connections.end());
        }
    }
    return tables;
}

std::string render_io_table(const IoTable& table) {
    std::ostringstream os;
    os << "port | direction | width | connections\n";
    for (const auto& row : table.rows) {
        os << row.name << " | " << frontend::port_dir_name(row.dir) << " | "
           << row.width << " | ";
        if (row.connections.empty()) {
            os << "(unconnected)";
        } else {
            bool first = true;
            for (const auto& c : row.connections) {
                if (!first) os << ", ";
                first = false;
                os << c;
            }
        }
        os << '\n';
    }
    return os.str();
}

} // namespace am::structural
