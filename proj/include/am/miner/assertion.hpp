#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "am/support/diagnostics.hpp"

namespace am::miner {

enum class AssertStatus { Raw, SyntaxOk, Resolved };

const char* assert_status_name(AssertStatus s);

// `scope.signal[sel]` — scope is a module name or instance name, resolved
// later against the design hierarchy.
struct SigRef {
    std::string scope;
    std::string signal;
    bool has_sel = false;
    bool part = false;
    long long msb = 0;
    long long lsb = 0;

    bool operator==(const SigRef&) const = default;
};

struct SvaLiteral {
    bool sized = false;
    int width = 0;
    char base = 'd';
    std::string digits; // lowercase, underscores stripped

    bool operator==(const SvaLiteral&) const = default;
};

struct Operand {
    bool is_literal = false;
    SvaLiteral literal;
    SigRef sig;

    bool operator==(const Operand&) const = default;
};

struct ApSeq;

// atomic proposition: bare/negated signal, comparison, or parenthesized
// sub-expression
struct Ap {
    enum class Kind { Sig, Cmp, Group };
    Kind kind = Kind::Sig;
    bool negated = false; // Sig only
    SigRef sig;           // Sig and Cmp lhs
    std::string relop;    // Cmp
    Operand rhs;          // Cmp
    std::unique_ptr<ApSeq> group;

    Ap() = default;
    Ap(Ap&&) = default;
    Ap& operator=(Ap&&) = default;
};

// flat left-associative sequence: ap (op ap)*, ops in {&&, ||}
struct ApSeq {
    std::vector<Ap> items;
    std::vector<std::string> ops; // size == items.size() - 1

    void collect_sigrefs(std::vector<const SigRef*>& out) const;
};

bool apseq_equal(const ApSeq& a, const ApSeq& b);

struct DeepAssertion {
    std::string raw;
    std::string feature_id; // empty when the completion did not tag it
    std::string module;     // mining target module
    AssertStatus status = AssertStatus::Raw;

    // populated once status >= SyntaxOk
    SigRef clock; // scope may be empty (bare top-level clock name)
    ApSeq antecedent;
    ApSeq consequent;

    std::vector<Diagnostic> diagnostics;
    std::vector<std::string> resolved_refs; // hierarchical, once Resolved

    DeepAssertion() = default;
    DeepAssertion(DeepAssertion&&) = default;
    DeepAssertion& operator=(DeepAssertion&&) = default;
};

struct ValidationReport {
    int n = 0;        // total mined
    int s = 0;        // syntax-correct
    int resolved = 0; // hierarchy-resolved
    int deduped = 0;  // duplicates removed at emission
    std::vector<std::string> verdicts; // one line per assertion, length n
};

} // namespace am::miner
