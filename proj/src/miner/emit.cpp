#include "am/miner/emit.hpp"

#include <algorithm>
#include <fstream>
#include <set>

#include "am/miner/grammar.hpp"

namespace am::miner {

namespace {

std::string verdict_line(const DeepAssertion& a) {
    std::string line = assert_status_name(a.status);
    line += ": ";
    line += a.status == AssertStatus::Raw ? a.raw : print_assertion(a);
    if (!a.diagnostics.empty())
        line += " [" + a.diagnostics.front().message + "]";
    return line;
}

} // namespace

ValidationReport build_report(const std::vector<DeepAssertion>& assertions) {
    ValidationReport r;
    r.n = static_cast<int>(assertions.size());
    for (const auto& a : assertions) {
        if (a.status != AssertStatus::Raw) ++r.s;
        if (a.status == AssertStatus::Resolved) ++r.resolved;
        r.verdicts.push_back(verdict_line(a));
    }
    return r;
}

ValidationReport emit_sva(const std::vector<DeepAssertion>& assertions,
                          const std::string& path) {
    ValidationReport r = build_report(assertions);

    std::vector<const DeepAssertion*> accepted;
    for (const auto& a : assertions)
        if (a.status == AssertStatus::Resolved) accepted.push_back(&a);
    std::stable_sort(accepted.begin(), accepted.end(),
                     [](const DeepAssertion* x, const DeepAssertion* y) {
                         if (x->module != y->module) return x->module < y->module;
                         return x->feature_id < y->feature_id;
                     });

    std::ofstream out(path, std::ios::binary);
    if (!out) throw ToolError("cannot write '" + path + "'");
    out << "// machine-mined properties; bind into the design hierarchy\n"
        << "// before formal or simulation runs\n";
    std::set<std::string> seen;
    for (const auto* a : accepted) {
        std::string text = print_assertion(*a);
        if (!seen.insert(text).second) {
            ++r.deduped;
            continue;
        }
        out << "// source: "
            << (a->feature_id.empty() ? "untagged" : a->feature_id) << '\n'
            << text << '\n';
    }

    std::ofstream rej(path + ".rejected.txt", std::ios::binary);
    if (!rej) throw ToolError("cannot write '" + path + ".rejected.txt'");
    for (const auto& a : assertions) {
        if (a.status == AssertStatus::Resolved) continue;
        rej << a.raw << '\n';
        for (const auto& d : a.diagnostics)
            rej << "//   " << d.message << '\n';
    }
    return r;
}

} // namespace am::miner
